#!/usr/bin/env python3
"""Survey the Clifford algebras Cliff(n, -1) with the natural grading:
odd-square condition verdicts, Montgomery subquotient dimensions, and the
derived-mod-center subquotients of their Lie queerifications.

The literal odd-square condition is violated by every generator (x_i^2 is
a nonzero scalar), and the subquotient dimensions do not match the naive
index readings; this script records the computed facts as data.  The
output is frozen under tests/golden/ as a regression target.

Usage: python scripts/clifford_survey.py [--max-n 4] [-o report.json]
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from qalg.algebra import fingerprint
from qalg.constructions import clifford
from qalg.functors import (
    bracket_center,
    derived,
    montgomery_SL,
    montgomery_condition_check,
    queerify_lie,
)
from qalg.qformat import canonical_json
from qalg.simplicity import is_simple


def survey_one(n: int) -> dict:
    A = clifford(n, -1, "natural")
    cond = montgomery_condition_check(A, strategy="sample", count=32, seed=0)
    sl = montgomery_SL(A)
    entry = {
        "n": n,
        "clifford_dim": A.dim,
        "condition": cond.to_dict(),
        "montgomery_sl": sl.to_dict(),
    }
    if not sl.degenerate:
        entry["montgomery_sl"]["simplicity"] = is_simple(sl.algebra).to_dict()
        entry["montgomery_sl"]["fingerprint"] = fingerprint(sl.algebra).to_dict()
    q = queerify_lie(A)
    dsub, dalg = derived(q)
    bc = bracket_center(q)
    inter = dsub.intersect(bc)
    sub = {
        "q_dim": q.dim,
        "derived_dim": dsub.dim,
        "bracket_center_dim": bc.dim,
        "intersection_dim": inter.dim,
    }
    if 0 < dsub.dim and inter.dim < dsub.dim:
        from qalg.functors import quotient_algebra

        pres = quotient_algebra(q, inter, within=dsub, name=f"q(Cliff({n}))-subquotient")
        sub["subquotient_dim"] = pres.algebra.dim
        sub["subquotient_valid"] = pres.algebra.validate().ok
        sub["subquotient_simplicity"] = is_simple(pres.algebra).to_dict()
        sub["subquotient_fingerprint"] = fingerprint(pres.algebra).to_dict()
    entry["queerification_subquotient"] = sub
    return entry


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("-o", "--output", default=None)
    args = ap.parse_args()
    report = {
        "schema": "qreport/1",
        "command": "clifford-survey",
        "entries": [survey_one(n) for n in range(1, args.max_n + 1)],
    }
    text = canonical_json(report)
    if args.output:
        Path(args.output).write_text(text + "\n")
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
