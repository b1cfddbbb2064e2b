#!/usr/bin/env python3
"""
Influence - Command Line Entry Point

Exact solver, instance generator and verification harness for the INFLUENCE
scoring game on two-coloured directed graphs.

Usage:
    python main.py solve instances/six_vertex_example.inf --json
    python main.py gen segment --n 5 --class minus --out segment5.inf
    python main.py table --max-n 38 --csv results/segments.csv
    python main.py verify --all
    python main.py play instances/six_vertex_example.inf --human R

Author: Influence Contributors
License: MIT
"""

import sys
import os

# Add src to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

# Main entry point
if __name__ == "__main__":
    try:
        from cli.commands import main
    except ImportError as e:
        print(f"❌ Import error: {e}")
        print("Please run setup.sh first to install dependencies")
        sys.exit(2)

    sys.exit(main(sys.argv[1:]))
