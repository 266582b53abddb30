#!/usr/bin/env python3
"""
Command-line entry point for the generalized Satake diagram toolkit

Examples:
    python gsat.py enumerate --type G2
    python gsat.py table1 --type Bn --max-rank 6 --format text
    python gsat.py verify --type C2
"""
import os
import sys

# Add current directory to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
