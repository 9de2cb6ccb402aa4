"""
Helper functions and shared definitions for multiomit
"""

from .errors import *
from .constants import *
from .grid import *
from .logger import get_logger
