"""
Run configuration: one JSON document, overridden by command-line flags.
"""

import dataclasses
import json
from ..model import SystemParams, scenario, validate_params
from ..response.closedform import CONVENTIONS
from ..utils.errors import ConfigError, ParameterError
from ..utils.grid import parse_grid
from ..utils.constants import DEFAULT_GRID

OUTPUT_KINDS = ('profile_csv', 'features_json', 'roots_json', 'oracle_report_json')
CLI_METHODS = ('closed', 'solve', 'both')
OUTPUT_FILES = {'profile_csv': 'profile.csv',
                'features_json': 'features.json',
                'roots_json': 'roots.json',
                'oracle_report_json': 'oracle_report.json'}


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """
    scenario : str, optional
        preset name. Exactly one of scenario and params is given.
    params : dict, optional
        inline SystemParams fields.
    overrides : dict
        SystemParams fields applied on top of the preset.
    grid : tuple, optional
        (min, max, count). None selects the command default, see sweep_grid.
    method : str
        'closed', 'solve' or 'both'.
    outputs : tuple
        subset of profile_csv, features_json, roots_json, oracle_report_json.
    phases : tuple, optional
    prominence : float, optional
    convention : str
    case : str, optional
        reduced denominator for roots_json. Defaults to the preset's.
    """
    scenario: str = None
    params: dict = None
    overrides: dict = dataclasses.field(default_factory=dict)
    grid: tuple = None
    method: str = 'closed'
    outputs: tuple = ('profile_csv',)
    phases: tuple = None
    prominence: float = None
    convention: str = 'exact'
    case: str = None

    def merge(self, **flags):
        """Copy with every flag that is not None taking precedence."""
        changes = {k: v for k, v in flags.items() if v is not None}
        if 'scenario' in changes:
            changes.setdefault('params', None)
        if 'params' in changes and changes['params'] is not None:
            changes.setdefault('scenario', None)
        return check_config(dataclasses.replace(self, **changes))

    @property
    def sweep_grid(self):
        """The grid for detuning sweeps, 801 points on [0, 4] unless given."""
        return self.grid if self.grid is not None else DEFAULT_GRID

    def system_params(self):
        """
        SystemParams from the preset (or inline values) with overrides applied.

        Raises
        ------
        UnknownScenarioError, ParameterError
        """
        if self.scenario is not None:
            values = scenario(self.scenario).params.to_dict()
        else:
            values = SystemParams().to_dict()
            values.update(self.params)
        values.update(self.overrides)
        return validate_params(SystemParams.from_dict(values))

    def preset_case(self):
        if self.case is not None:
            return self.case
        if self.scenario is not None:
            return scenario(self.scenario).reduced_case
        return None


def _as_grid(value):
    if isinstance(value, str):
        return parse_grid(value)
    if isinstance(value, dict):
        try:
            return (float(value['min']), float(value['max']), int(value['count']))
        except (KeyError, TypeError, ValueError):
            raise ConfigError('grid object needs numeric min, max and count')
    if isinstance(value, (list, tuple)) and len(value) == 3:
        return (float(value[0]), float(value[1]), int(value[2]))
    raise ConfigError('grid must be "min:max:count" or {"min", "max", "count"}')


def check_config(cfg):
    """
    Checks the structural invariants of a RunConfig.

    Raises
    ------
    ConfigError
        when not exactly one of scenario and params is given, or a field has an unknown value.
    """
    if (cfg.scenario is None) == (cfg.params is None):
        raise ConfigError('Give exactly one of a scenario name and inline params')
    if cfg.method not in CLI_METHODS:
        raise ConfigError('method must be one of ' + ', '.join(CLI_METHODS) + ', got ' + str(cfg.method))
    if cfg.convention not in CONVENTIONS:
        raise ConfigError('convention must be one of ' + ', '.join(CONVENTIONS) + ', got ' + str(cfg.convention))
    unknown = [o for o in cfg.outputs if o not in OUTPUT_KINDS]
    if unknown or not cfg.outputs:
        raise ConfigError('outputs must be a non-empty subset of ' + ', '.join(OUTPUT_KINDS))
    if cfg.prominence is not None and not cfg.prominence > 0:
        raise ParameterError('prominence must be positive')
    return cfg


def config_from_dict(values):
    """Builds a RunConfig from a parsed JSON object."""
    if not isinstance(values, dict):
        raise ConfigError('Run configuration must be a JSON object')
    names = {f.name for f in dataclasses.fields(RunConfig)}
    unknown = sorted(set(values) - names)
    if unknown:
        raise ConfigError('Unknown configuration key(s): ' + ', '.join(unknown))
    values = dict(values)
    if 'grid' in values:
        values['grid'] = _as_grid(values['grid'])
    if 'outputs' in values:
        values['outputs'] = tuple(values['outputs'])
    if values.get('phases') is not None:
        try:
            values['phases'] = tuple(float(ph) for ph in values['phases'])
        except (TypeError, ValueError):
            raise ConfigError('phases must be a list of numbers')
    for key in ('params', 'overrides'):
        if values.get(key) is not None and not isinstance(values[key], dict):
            raise ConfigError(key + ' must be a JSON object')
    if values.get('overrides') is None:
        values.pop('overrides', None)
    return check_config(RunConfig(**values))


def load_config(path):
    """
    Reads a RunConfig from a JSON file.

    Raises
    ------
    ConfigError
        when the file cannot be read or parsed.
    """
    try:
        with open(path) as fs:
            values = json.load(fs)
    except (OSError, json.JSONDecodeError) as err:
        raise ConfigError('Cannot read configuration ' + str(path) + ': ' + str(err))
    return config_from_dict(values)
