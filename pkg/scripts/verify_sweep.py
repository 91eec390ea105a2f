#!/usr/bin/env python3
"""Theory-vs-oracle verification sweep.

Compares the classifier's dimension against the finite-field interpolation
oracle on every system (d, m0, n, m) in the requested box and reports any
mismatch.  Exit code 1 on mismatch, 0 otherwise.

Usage:
    python scripts/verify_sweep.py --d-max 12 --n-max 12 --m-max 3 --workers 8
"""

import sys

from qhplane.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify"] + sys.argv[1:]))
