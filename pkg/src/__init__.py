#!/usr/bin/env python3
"""
Influence - Core Package

Graph model, exact solver, instance families, verification harness and
command line for the INFLUENCE scoring game.

Author: Influence Contributors
License: MIT
"""

# Package version
__version__ = "1.1.0"
__author__ = "Influence Contributors"
__license__ = "MIT"
