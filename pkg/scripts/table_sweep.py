#!/usr/bin/env python3
"""Sweep the chiral twist dimension table and print it as Markdown.

Cells where the published closed form disagrees with the exact kernel
computation are starred.
"""

import argparse

from sconf.cli import run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", default="1..8")
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    argv = ["verify", "tables", "--k", args.k, "--format", "markdown"]
    if args.out:
        argv += ["--out", args.out]
    raise SystemExit(run(argv))


if __name__ == "__main__":
    main()
