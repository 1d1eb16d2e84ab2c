# -*- coding: utf-8 -*-
"""Version of the package, written into every report."""

__version__ = "1.0.0"
