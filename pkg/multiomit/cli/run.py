"""
Command-line surface.

Exit status 0 on success, 2 for configuration errors, 3 for validation errors and 4 for numerical
or I/O failures. Failures print a JSON error record on stderr.
"""

import argparse
import json
import os
import sys
import numpy as np
from .config import RunConfig, load_config, OUTPUT_FILES
from .emit import emit_profile_csv, emit_json, error_record
from ..analysis import sweep, detect_features, denominator_roots, phase_study, peaks, dips
from ..model import steady_state, scenario, list_scenarios
from ..oracle import time_domain_delta_c, check_stability
from ..utils.errors import MultiOmitError, ConfigError, ParameterError, UnstableDriftError, ConvergenceError
from ..utils.grid import parse_grid
from ..utils.logger import get_logger, configure_cli_logging
from ..utils.constants import SCHEMA_VERSION

logger = get_logger(__name__)

METHOD_NAMES = {'closed': ('closed_form',), 'solve': ('linear_solve',), 'both': ('closed_form', 'linear_solve')}
DEFAULT_PHASES = (0.0, np.pi / 2, np.pi)
DEFAULT_TIME_DOMAIN_POINTS = 3


def _grid_report(grid):
    return {'min': grid[0], 'max': grid[1], 'count': grid[2]}


def _parse_phases(text):
    try:
        return tuple(float(ph) for ph in text.split(','))
    except ValueError:
        raise ConfigError('phases must be a comma separated list of numbers, got ' + str(text))


def _rel_dev(a, b):
    if a == b:
        return 0.0
    return abs(a - b) / abs(b)


def _max_rel_dev(candidate, reference):
    ref = {r.delta: r.delta_c_plus for r in reference.responses}
    devs = [_rel_dev(r.delta_c_plus, ref[r.delta]) for r in candidate.responses if r.delta in ref]
    return max(devs) if devs else None


def _median_ratio(candidate, reference):
    ref = {r.delta: r.delta_c_plus for r in reference.responses}
    ratios = np.array([r.delta_c_plus / ref[r.delta] for r in candidate.responses
                       if r.delta in ref and ref[r.delta] != 0])
    if len(ratios) == 0:
        return None
    return complex(np.median(ratios.real), np.median(ratios.imag))


def time_domain_check(p, ss, reference, points=DEFAULT_TIME_DOMAIN_POINTS):
    """
    Compares the time-domain oracle with the linear solve at a few grid points.

    Returns a dict with status 'ok', 'unstable' or 'disabled' and one entry per sampled point.
    """
    if points <= 0 or len(reference.responses) == 0:
        return {'status': 'disabled', 'points': []}
    try:
        check_stability(p, ss)
    except UnstableDriftError as err:
        return {'status': 'unstable', 'points': [],
                'max_growth_rate': float(np.max(err.eigenvalues.real))}
    idx = np.unique(np.linspace(0, len(reference.responses) - 1, points + 2).round().astype(int)[1:-1])
    entries = []
    for i in idx:
        r = reference.responses[i]
        try:
            dcp = time_domain_delta_c(p, ss, r.delta)
            entries.append({'delta': r.delta, 'converged': True, 'rel_dev': _rel_dev(dcp, r.delta_c_plus)})
        except ConvergenceError as err:
            logger.warning(str(err))
            entries.append({'delta': r.delta, 'converged': False, 'rel_dev': None})
    devs = [e['rel_dev'] for e in entries if e['converged']]
    return {'status': 'ok', 'points': entries, 'max_rel_dev': max(devs) if devs else None}


def oracle_report(cfg, p, njobs=1, time_domain_points=DEFAULT_TIME_DOMAIN_POINTS):
    """Closed form (both conventions) against the linear solve, plus a time-domain spot check."""
    ss = steady_state(p)
    reference = sweep(p, ss, cfg.sweep_grid, method='linear_solve', njobs=njobs)
    exact = sweep(p, ss, cfg.sweep_grid, method='closed_form', convention='exact', njobs=njobs)
    legacy = sweep(p, ss, cfg.sweep_grid, method='closed_form', convention='legacy', njobs=njobs)
    skipped = sorted(set(reference.skipped) | set(exact.skipped) | set(legacy.skipped))
    return {'schema_version': SCHEMA_VERSION,
            'scenario': cfg.scenario,
            'grid': _grid_report(cfg.sweep_grid),
            'convention': cfg.convention,
            'max_rel_dev_exact': _max_rel_dev(exact, reference),
            'max_rel_dev_legacy': _max_rel_dev(legacy, reference),
            'legacy_ratio': _median_ratio(legacy, reference),
            'skipped': skipped,
            'time_domain': time_domain_check(p, ss, reference, time_domain_points)}


def features_report(cfg, p, njobs=1):
    ss = steady_state(p)
    method = METHOD_NAMES[cfg.method][0]
    profile = sweep(p, ss, cfg.sweep_grid, method=method, convention=cfg.convention, njobs=njobs)
    features = detect_features(profile, min_prominence=cfg.prominence)
    return {'schema_version': SCHEMA_VERSION,
            'scenario': cfg.scenario,
            'grid': _grid_report(cfg.sweep_grid),
            'method': method,
            'convention': cfg.convention,
            'prominence': cfg.prominence,
            'features': [f.to_dict() for f in features],
            'n_peaks': len(peaks(features)),
            'n_dips': len(dips(features)),
            'skipped': list(profile.skipped)}


def roots_report(cfg, p):
    case = cfg.preset_case()
    if case is None:
        raise ParameterError('No reduced denominator applies to this scenario, pass --case')
    report = denominator_roots(case, p).to_dict()
    report['schema_version'] = SCHEMA_VERSION
    report['scenario'] = cfg.scenario
    return report


def _split_path(path, method):
    stem, ext = os.path.splitext(path)
    return stem + '_' + method + ext


def write_profiles(cfg, p, target, njobs=1):
    """Sweeps with every requested method and writes one CSV per method."""
    ss = steady_state(p)
    methods = METHOD_NAMES[cfg.method]
    written = []
    for method in methods:
        profile = sweep(p, ss, cfg.sweep_grid, method=method, convention=cfg.convention, njobs=njobs)
        if target is None:
            emit_profile_csv(profile, sys.stdout)
            continue
        path = target if len(methods) == 1 else _split_path(target, method)
        emit_profile_csv(profile, path)
        written.append(path)
    return written


def write_phase_study(cfg, p, out_dir=None, out=None, njobs=1):
    phases = cfg.phases if cfg.phases is not None else DEFAULT_PHASES
    method = METHOD_NAMES[cfg.method][0]
    study = phase_study(p, steady_state(p), phases, grid=cfg.grid, method=method, convention=cfg.convention,
                        min_prominence=cfg.prominence, njobs=njobs)
    deltas = study.profiles[study.phases[0]].deltas
    report = {'schema_version': SCHEMA_VERSION,
              'scenario': cfg.scenario,
              'grid': _grid_report((float(deltas[0]), float(deltas[-1]), len(deltas))),
              'convention': cfg.convention,
              'phases': list(study.phases),
              'tracks': study.table.to_dict(orient='records'),
              'quadratic_track': study.quadratic_track,
              'features': {str(i): [f.to_dict() for f in study.features[ph]] for i, ph in enumerate(study.phases)}}
    if out_dir is not None:
        for i, ph in enumerate(study.phases):
            emit_profile_csv(study.profiles[ph], os.path.join(out_dir, 'profile_phase_' + str(i) + '.csv'))
        if out is None:
            out = os.path.join(out_dir, 'phase_study.json')
    return emit_json(report, out)


def run(config, out_dir, njobs=1, time_domain_points=DEFAULT_TIME_DOMAIN_POINTS):
    """
    Emits every output requested by a RunConfig into out_dir.

    Parameters
    ----------
    config : RunConfig
    out_dir : str
        created if missing.

    Returns
    -------
    written : dict
        output kind -> list of paths.
    """
    os.makedirs(out_dir, exist_ok=True)
    p = config.system_params()
    written = {}
    for kind in config.outputs:
        path = os.path.join(out_dir, OUTPUT_FILES[kind])
        if kind == 'profile_csv':
            written[kind] = write_profiles(config, p, path, njobs=njobs)
            continue
        if kind == 'features_json':
            emit_json(features_report(config, p, njobs=njobs), path)
        elif kind == 'roots_json':
            emit_json(roots_report(config, p), path)
        elif kind == 'oracle_report_json':
            emit_json(oracle_report(config, p, njobs=njobs, time_domain_points=time_domain_points), path)
        written[kind] = [path]
    if config.phases is not None:
        path = os.path.join(out_dir, 'phase_study.json')
        write_phase_study(config, p, out_dir=out_dir, out=path, njobs=njobs)
        written['phase_study'] = [path]
    return written


def scenario_listing():
    out = []
    for name in list_scenarios():
        preset = scenario(name)
        out.append({'name': name,
                    'expected_features': [{'kind': k, 'delta': d} for k, d in preset.expected_features],
                    'reduced_case': preset.reduced_case,
                    'caption_notes': preset.caption_notes})
    return {'schema_version': SCHEMA_VERSION, 'scenarios': out}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--scenario', help='preset name, see list-scenarios')
    common.add_argument('--config', help='JSON run configuration')
    common.add_argument('--out', help='output file (default stdout)')
    common.add_argument('--out-dir', help='output directory')
    common.add_argument('--grid', help='detuning grid as min:max:count')
    common.add_argument('--method', choices=['closed', 'solve', 'both'])
    common.add_argument('--convention', choices=['exact', 'legacy'])
    common.add_argument('--prominence', type=float)
    common.add_argument('--phases', help='comma separated phonon pump phases')
    common.add_argument('--case', choices=['eq13', 'eq14', 'eq16'])
    common.add_argument('--njobs', type=int, default=1)
    common.add_argument('--time-domain-points', type=int, default=DEFAULT_TIME_DOMAIN_POINTS)
    common.add_argument('--verbose', action='store_true')
    parser = argparse.ArgumentParser(prog='multiomit',
                                     description='Probe response of a hybrid atom-optomechanical cavity')
    sub = parser.add_subparsers(dest='command')
    sub.required = True
    for name, text in [('sweep', 'probe response over a detuning grid (CSV)'),
                       ('check', 'closed form against the sideband oracles (JSON)'),
                       ('features', 'peaks and transparency dips (JSON)'),
                       ('roots', 'roots of a reduced denominator (JSON)'),
                       ('phase-study', 'quadratic-coupling feature against the phonon pump phase (JSON)'),
                       ('list-scenarios', 'registered presets (JSON)'),
                       ('run', 'every output listed in --config into --out-dir')]:
        sub.add_parser(name, parents=[common], help=text)
    return parser


def config_from_args(args):
    """Config file first, flags on top."""
    base = load_config(args.config) if args.config else RunConfig()
    flags = {'scenario': args.scenario,
             'grid': parse_grid(args.grid) if args.grid else None,
             'method': args.method,
             'convention': args.convention,
             'prominence': args.prominence,
             'phases': _parse_phases(args.phases) if args.phases else None,
             'case': args.case}
    return base.merge(**flags)


def _target(args, default_name):
    if args.out:
        return args.out
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        return os.path.join(args.out_dir, default_name)
    return None


def dispatch(args):
    if args.command == 'list-scenarios':
        emit_json(scenario_listing(), _target(args, 'scenarios.json'))
        return 0
    cfg = config_from_args(args)
    if args.command == 'run':
        if not args.out_dir:
            raise ConfigError('run needs --out-dir')
        run(cfg, args.out_dir, njobs=args.njobs, time_domain_points=args.time_domain_points)
        return 0
    p = cfg.system_params()
    if args.command == 'sweep':
        write_profiles(cfg, p, _target(args, 'profile.csv'), njobs=args.njobs)
    elif args.command == 'check':
        emit_json(oracle_report(cfg, p, njobs=args.njobs, time_domain_points=args.time_domain_points),
                  _target(args, 'oracle_report.json'))
    elif args.command == 'features':
        emit_json(features_report(cfg, p, njobs=args.njobs), _target(args, 'features.json'))
    elif args.command == 'roots':
        emit_json(roots_report(cfg, p), _target(args, 'roots.json'))
    elif args.command == 'phase-study':
        out_dir = args.out_dir
        if out_dir:
            os.makedirs(out_dir, exist_ok=True)
        write_phase_study(cfg, p, out_dir=out_dir, out=args.out, njobs=args.njobs)
    return 0


def _report_error(status, err, args):
    record = error_record(status, err)
    sys.stderr.write(json.dumps(record, sort_keys=True) + '\n')
    out_dir = getattr(args, 'out_dir', None)
    if out_dir and os.path.isdir(out_dir):
        try:
            emit_json(record, os.path.join(out_dir, 'error.json'))
        except OSError:
            pass
    return status


def main(argv=None):
    """
    Entry point of the multiomit console script.

    Returns
    -------
    status : int
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code
    configure_cli_logging(args.verbose)
    try:
        return dispatch(args)
    except ConfigError as err:
        return _report_error(2, err, args)
    except ParameterError as err:
        return _report_error(3, err, args)
    except (MultiOmitError, OSError) as err:
        return _report_error(4, err, args)
