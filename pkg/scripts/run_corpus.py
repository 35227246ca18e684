#!/usr/bin/env python3
"""Run the built-in corpus against its recorded expectations.

Usage:
    python scripts/run_corpus.py [report.json]

Equivalent to `braidpbw corpus --report report.json`; exits nonzero on any
expectation mismatch.
"""
import sys

from braidpbw.cli import main

if __name__ == "__main__":
    argv = ["corpus"]
    if len(sys.argv) > 1:
        argv += ["--report", sys.argv[1]]
    sys.exit(main(argv))
