"""Pytest path setup: make the helper module importable from every test file."""

from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
