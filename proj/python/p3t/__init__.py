"""Planar 3-trees on point sets: embedding deciders, the conflict family and its bounds."""

import os
from pathlib import Path

_bundled = Path(__file__).with_name("catalog.txt")
if "P3T_CATALOG" not in os.environ and _bundled.exists():
    os.environ["P3T_CATALOG"] = str(_bundled)

from ._core import *  # noqa: E402,F401,F403
from ._core import __version__  # noqa: E402,F401
