#!/usr/bin/env python3
"""Run the shipped theorem manifest in a scratch directory and print a
one-line summary per entry.

Usage: python scripts/run_theorems.py [--workdir DIR] [--jobs N]
"""

import argparse
import json
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--workdir", default=None, help="directory for build artifacts")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    manifest = REPO / "theorems.manifest"
    workdir = Path(args.workdir) if args.workdir else Path(tempfile.mkdtemp(prefix="qalg-"))
    workdir.mkdir(parents=True, exist_ok=True)
    proc = subprocess.run(
        [sys.executable, "-m", "qalg.cli", "batch", str(manifest), "--jobs", str(args.jobs)],
        cwd=workdir,
        capture_output=True,
        text=True,
    )
    if not proc.stdout.strip():
        print(proc.stderr, file=sys.stderr)
        return proc.returncode
    report = json.loads(proc.stdout)
    for entry in report["result"]["entries"]:
        mark = "ok " if entry["pass"] else "FAIL"
        print(f"[{mark}] exit={entry['exit']} expected={entry['expected_exit']}  {entry['line']}")
    res = report["result"]
    print(f"\n{res['passed']}/{res['total']} entries passed (artifacts in {workdir})")
    return 0 if res["all_pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
