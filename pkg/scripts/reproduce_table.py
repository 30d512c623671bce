#!/usr/bin/env python3
"""Reproduce the published sharp-value table and exit nonzero on any mismatch.

Equivalent to `toepsharp table`, kept as a script entry point for quick
regression runs:

    python3 scripts/reproduce_table.py [--format markdown|csv|json]
"""

import sys

from toepsharp.cli import main

if __name__ == "__main__":
    sys.exit(main(["table", *sys.argv[1:]]))
