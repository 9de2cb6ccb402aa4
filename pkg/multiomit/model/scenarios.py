"""
Parameter presets transcribed from the figure captions.

Presets are read from multiomit/config/scenarios.json.
"""

import dataclasses
import json
import os
from .params import SystemParams, validate_params
from ..utils.errors import UnknownScenarioError
from .. import __path__ as multiomitpath

SCENARIO_FILE = os.path.join(multiomitpath[0], 'config', 'scenarios.json')


@dataclasses.dataclass(frozen=True)
class ScenarioPreset:
    """
    name : str
    params : SystemParams
    expected_features : tuple
        (kind, approximate delta) pairs read from the caption and discussion. delta may be None.
    reduced_case : str or None
        which reduced formula applies ('eq13', 'eq14', 'eq15', 'eq16').
    caption_notes : str
    """
    name: str
    params: SystemParams
    expected_features: tuple = ()
    reduced_case: str = None
    caption_notes: str = ''


def _load_raw():
    with open(SCENARIO_FILE) as fs:
        return json.load(fs)


def _build(name, raw):
    entry = raw[name]
    if 'base' in entry:
        base = _build(entry['base'], raw)
        values = base.params.to_dict()
        values.update(entry.get('overrides', {}))
        return ScenarioPreset(name=name, params=validate_params(SystemParams.from_dict(values)),
                              expected_features=base.expected_features, reduced_case=base.reduced_case,
                              caption_notes=base.caption_notes)
    features = tuple((kind, loc) for kind, loc in entry.get('expected_features', []))
    return ScenarioPreset(name=name, params=validate_params(SystemParams.from_dict(entry['params'])),
                          expected_features=features, reduced_case=entry.get('reduced_case'),
                          caption_notes=entry.get('caption_notes', ''))


def list_scenarios():
    """Names of all registered presets in registration order."""
    return list(_load_raw().keys())


def scenario(name):
    """
    Returns a caption preset.

    Parameters
    ----------
    name : str
        e.g. 'fig2' ... 'fig7', 'fig7_phi_pi'

    Returns
    -------
    ScenarioPreset

    Raises
    ------
    UnknownScenarioError
        listing the valid names.
    """
    raw = _load_raw()
    if name not in raw:
        raise UnknownScenarioError(name, raw.keys())
    return _build(name, raw)
