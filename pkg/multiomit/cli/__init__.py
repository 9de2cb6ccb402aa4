"""
Command-line interface: run configurations, sweeps, oracle checks and data files
"""

from .config import RunConfig, load_config, config_from_dict
from .emit import emit_profile_csv, read_profile_csv, emit_json, error_record
from .run import run, main, oracle_report, features_report, roots_report
