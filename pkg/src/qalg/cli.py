"""Command-line front end.

Reports go to standard output as canonical JSON ("qreport/1"); diagnostics
go to standard error.  Exit codes: 0 = computed and any asserted property
holds, 1 = computed but an asserted property fails, 2 = usage/input error,
3 = inconclusive verdict or exceeded budget.  All randomized strategies
take an explicit --seed (default 0, always recorded in the report).
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import re
import shlex
import sys
import time
from contextlib import redirect_stdout
from fractions import Fraction
from pathlib import Path

from .algebra import center as center_of
from .algebra import fingerprint, supercenter as supercenter_of
from .constructions import (
    clifford,
    cyclic_group,
    group_algebra,
    group_from_permutations,
    group_from_table,
    mat,
    mat_super,
    q_assoc,
    smash_product,
)
from .dunkl import (
    XPolynomial,
    apply_word,
    check_dunkl_commutativity,
    compare_hamiltonians,
    hamiltonian_identity_check,
    losev_simple,
    LosevInput,
    observables_span_survey,
)
from .errors import BudgetExceeded, QalgError, QalgFormatError
from .fields import RATIONALS, prime_field
from .functors import (
    derived,
    herstein_L,
    lie_of,
    montgomery_SL,
    montgomery_condition_check,
    pq,
    psq,
    q_lie,
    queerify_assoc,
    queerify_lie,
    sq,
)
from .glambda import casimir_check, ideal_codim_probe, ideal_window_probe, pbw_confluence_check
from .qformat import (
    algebra_to_obj,
    canonical_json,
    load_algebra,
    save_algebra,
    xpoly_from_obj,
    xpoly_to_obj,
)
from .simplicity import is_central_simple, is_simple


class ExpectationFailed(Exception):
    """Computed fine, but an --expect assertion does not hold; carries the
    computed payload so the report still shows the full result."""

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


class Inconclusive(Exception):
    """Computed fine, but the verdict is not decisive."""

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


def _sha256_file(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _params_digest(args_dict: dict) -> str:
    return hashlib.sha256(canonical_json(args_dict).encode()).hexdigest()


def _field_from_flag(text: str):
    if text in (None, "q", "Q"):
        return RATIONALS
    m = re.fullmatch(r"fp:(\d+)", text)
    if not m:
        raise QalgFormatError(f"--field must be 'q' or 'fp:P', got {text!r}")
    try:
        return prime_field(int(m.group(1)))
    except ValueError as e:
        raise QalgFormatError(str(e)) from e


def _load_validated(path_str: str, inputs: list):
    """Load a qalg file and re-validate it; invalid files never reach the
    computation."""
    path = Path(path_str)
    if not path.exists():
        raise QalgFormatError(f"{path}: no such file")
    A = load_algebra(path)
    inputs.append({"file": str(path), "sha256": _sha256_file(path)})
    report = A.validate()
    if not report.ok:
        raise QalgFormatError(
            f"{path}: algebra fails validation "
            f"({report.failures[0]['check']} at {report.failures[0]['triple']})"
        )
    return A


def _store(A, out, result: dict):
    if out:
        save_algebra(A, out)
        result["output_file"] = str(out)
        result["output_sha256"] = _sha256_file(Path(out))
    else:
        result["algebra"] = algebra_to_obj(A)


def _expect_verdict(expected: str | None, verdict: str, payload=None):
    if verdict == "Inconclusive":
        raise Inconclusive("simplicity verdict is Inconclusive", payload)
    if expected is None:
        return
    want = {"simple": "Simple", "not-simple": "NotSimple"}[expected]
    if verdict != want:
        raise ExpectationFailed(f"expected {want}, got {verdict}", payload)


# -- command handlers -------------------------------------------------------


def cmd_construct(args, inputs):
    field = _field_from_flag(args.field)
    what = args.what
    n = args.params
    need = {"mat": 1, "mat-super": 2, "q-assoc": 1, "q-lie": 1, "sq": 1, "pq": 1,
            "psq": 1, "clifford": 1, "group-cyclic": 1, "group-perm": 0}
    if what not in need:
        raise QalgFormatError(f"unknown construction {what!r}")
    if len(n) != need[what]:
        raise QalgFormatError(f"{what} takes {need[what]} integer parameter(s)")
    if what == "group-perm":
        if not args.gens:
            raise QalgFormatError("group-perm needs --gens 'i,j,...;k,l,...'")
        perms = [
            tuple(int(x) for x in part.split(","))
            for part in args.gens.split(";")
            if part
        ]
        A = group_algebra(group_from_permutations(perms), field)
        result = {
            "construction": what,
            "group_order": A.dim,
            "dim": A.dim,
            "even_dim": A.dim,
            "odd_dim": 0,
            "kind": A.kind,
        }
        _store(A, args.output, result)
        return 0, result
    if what == "mat":
        A = mat(n[0], field)
    elif what == "mat-super":
        A = mat_super(n[0], n[1], field)
    elif what == "q-assoc":
        A = q_assoc(n[0], field)
    elif what == "q-lie":
        A = q_lie(n[0], field)
    elif what == "sq":
        A = sq(n[0], field)[2]
    elif what == "pq":
        A = pq(n[0], field).algebra
    elif what == "psq":
        A = psq(n[0], field).algebra
    elif what == "clifford":
        A = clifford(n[0], Fraction(args.a), args.grading, field)
    else:  # group-cyclic
        A = group_algebra(cyclic_group(n[0]), field)
    result = {
        "construction": what,
        "parameters": n,
        "dim": A.dim,
        "even_dim": len(A.even_indices()),
        "odd_dim": len(A.odd_indices()),
        "kind": A.kind,
    }
    _store(A, args.output, result)
    return 0, result


def cmd_validate(args, inputs):
    path = Path(args.file)
    if not path.exists():
        raise QalgFormatError(f"{path}: no such file")
    A = load_algebra(path)
    inputs.append({"file": str(path), "sha256": _sha256_file(path)})
    report = A.validate(seed=args.seed)
    result = {"dim": A.dim, "kind": A.kind, "validation": report.to_dict()}
    return (0 if report.ok else 1), result


def cmd_queerify(args, inputs):
    A = _load_validated(args.file, inputs)
    out_alg = queerify_assoc(A) if args.flavor == "assoc" else queerify_lie(A)
    report = out_alg.validate()
    result = {
        "flavor": args.flavor,
        "input_dim": A.dim,
        "dim": out_alg.dim,
        "valid": report.ok,
        "kind": out_alg.kind,
    }
    _store(out_alg, args.output, result)
    return (0 if report.ok else 1), result


def cmd_lie_of(args, inputs):
    A = _load_validated(args.file, inputs)
    L = lie_of(A, args.mode)
    report = L.validate()
    result = {"mode": args.mode, "dim": L.dim, "valid": report.ok}
    _store(L, args.output, result)
    return (0 if report.ok else 1), result


def cmd_derived(args, inputs):
    L = _load_validated(args.file, inputs)
    sub, alg = derived(L)
    result = {"ambient_dim": L.dim, "derived_dim": sub.dim}
    if alg.dim:
        _store(alg, args.output, result)
    return 0, result


def cmd_center(args, inputs, super_mode: bool):
    A = _load_validated(args.file, inputs)
    from .fields import scalar_to_string

    if A.kind == "liesuper":
        from .functors import bracket_center

        sub = bracket_center(A)
    else:
        sub = supercenter_of(A) if super_mode else center_of(A)
    result = {
        "dim": sub.dim,
        "basis": [[scalar_to_string(c) for c in row] for row in sub.basis],
    }
    if args.expect_dim is not None and sub.dim != args.expect_dim:
        raise ExpectationFailed(f"expected dim {args.expect_dim}, got {sub.dim}", result)
    return 0, result


def cmd_qtr_tower(args, inputs):
    n = args.n
    field = _field_from_flag(args.field)
    q = q_lie(n, field)
    amb, kern, sq_alg = sq(n, field)
    pq_pres = pq(n, field)
    psq_pres = psq(n, field)
    dims = {
        "q": q.dim,
        "sq": sq_alg.dim,
        "pq": pq_pres.algebra.dim,
        "psq": psq_pres.algebra.dim,
    }
    result = {"n": n, "dims": dims}
    if args.output:
        prefix = Path(args.output)
        for tag, alg in (
            ("q", q), ("sq", sq_alg), ("pq", pq_pres.algebra), ("psq", psq_pres.algebra)
        ):
            path = prefix.parent / f"{prefix.name}.{tag}.qalg"
            save_algebra(alg, path)
            result[f"{tag}_file"] = str(path)
    expected = {"q": 2 * n * n, "sq": 2 * n * n - 1, "pq": 2 * n * n - 1, "psq": 2 * n * n - 2}
    result["expected_dims"] = expected
    result["dims_match"] = dims == expected
    return (0 if dims == expected else 1), result


def _subquotient_command(args, inputs, fn):
    A = _load_validated(args.file, inputs)
    res = fn(A)
    result = res.to_dict()
    if not res.degenerate:
        verdict = is_simple(res.algebra, seed=args.seed)
        result["simplicity"] = verdict.to_dict()
    else:
        verdict = None
        result["simplicity"] = {"verdict": "NotSimple", "degenerate": True}
    if args.output and res.algebra.dim:
        _store(res.algebra, args.output, result)
    if args.expect_dim is not None and res.algebra.dim != args.expect_dim:
        raise ExpectationFailed(
            f"expected dim {args.expect_dim}, got {res.algebra.dim}", result
        )
    _expect_verdict(args.expect, result["simplicity"]["verdict"], result)
    return 0, result


def cmd_herstein(args, inputs):
    return _subquotient_command(args, inputs, herstein_L)


def cmd_montgomery(args, inputs):
    return _subquotient_command(args, inputs, montgomery_SL)


def cmd_condition_check(args, inputs):
    A = _load_validated(args.file, inputs)
    rep = montgomery_condition_check(
        A, strategy=args.strategy, count=args.count, seed=args.seed, budget=args.budget
    )
    result = rep.to_dict()
    if args.expect == "violated" and not rep.violated:
        raise ExpectationFailed("expected a violation witness, none found", result)
    if args.expect == "no-violation" and rep.violated:
        raise ExpectationFailed("expected no violation, found a witness", result)
    return 0, result


def cmd_simplicity(args, inputs):
    A = _load_validated(args.file, inputs)
    verdict = is_simple(A, seed=args.seed)
    result = {"simplicity": verdict.to_dict()}
    if args.central:
        rep = is_central_simple(A, seed=args.seed)
        result["central_simple"] = rep.to_dict()
    _expect_verdict(args.expect, verdict.verdict, result)
    return 0, result


def cmd_fingerprint(args, inputs):
    A = _load_validated(args.file, inputs)
    fp = fingerprint(A).to_dict()
    result = {"fingerprint": fp}
    if args.match:
        B = _load_validated(args.match, inputs)
        fpb = fingerprint(B).to_dict()
        result["other"] = fpb
        result["equal"] = fp == fpb
        if not fp == fpb:
            raise ExpectationFailed("fingerprints differ", result)
    return 0, result


def cmd_smash(args, inputs):
    A = _load_validated(args.file, inputs)
    spec_path = Path(args.actions)
    if not spec_path.exists():
        raise QalgFormatError(f"{spec_path}: no such file")
    inputs.append({"file": str(spec_path), "sha256": _sha256_file(spec_path)})
    try:
        spec = json.loads(spec_path.read_text())
    except json.JSONDecodeError as e:
        raise QalgFormatError(f"{spec_path}: line {e.lineno} column {e.colno}: {e.msg}")
    gspec = spec.get("group")
    if gspec == "trivial":
        G = group_from_table([[0]])
    elif isinstance(gspec, dict) and "cyclic" in gspec:
        G = cyclic_group(int(gspec["cyclic"]))
    elif isinstance(gspec, dict) and "table" in gspec:
        G = group_from_table(gspec["table"])
    elif isinstance(gspec, dict) and "permutations" in gspec:
        G = group_from_permutations([tuple(p) for p in gspec["permutations"]])
    else:
        raise QalgFormatError(f"{spec_path}: group must be trivial/cyclic/table/permutations")
    mats = [
        [[Fraction(x) for x in row] for row in m] for m in spec.get("action", [])
    ]
    S = smash_product(A, G, mats)
    report = S.validate()
    result = {
        "input_dim": A.dim,
        "group_order": G.order,
        "dim": S.dim,
        "valid": report.ok,
    }
    _store(S, args.output, result)
    return (0 if report.ok else 1), result


def cmd_dunkl_check(args, inputs):
    rep = check_dunkl_commutativity(args.particles, args.degree, args.negative_control)
    want_zero = args.expect != "nonzero"
    ok = rep["all_zero"] == want_zero if args.expect else True
    if args.expect and not ok:
        raise ExpectationFailed(
            f"expected {'zero' if want_zero else 'nonzero'} commutators", rep
        )
    extra = hamiltonian_identity_check(min(args.particles, 3), min(args.degree, 5))
    rep["hamiltonian_identity"] = extra
    return 0, rep


_ATOM_RE = re.compile(r"(x|p|D)(\d+)$|K(\d+),(\d+)$|a(\d+)\.([01])$")


def _parse_word(text: str):
    from .dunkl import CreaAnn, Dunkl, Exchange, Mult, Partial

    atoms = []
    for token in text.split():
        m = _ATOM_RE.match(token)
        if not m:
            raise QalgFormatError(
                f"bad atom {token!r}; use x<i>, p<i>, D<i>, K<i>,<j>, a<i>.<alpha>"
            )
        if m.group(1):
            i = int(m.group(2))
            atoms.append({"x": Mult, "p": Partial, "D": Dunkl}[m.group(1)](i))
        elif m.group(3):
            atoms.append(Exchange(int(m.group(3)), int(m.group(4))))
        else:
            atoms.append(CreaAnn(int(m.group(5)), int(m.group(6))))
    return atoms


def cmd_dunkl_apply(args, inputs):
    N = args.particles
    if args.monomial:
        expo = tuple(int(x) for x in args.monomial.split(","))
        if len(expo) != N:
            raise QalgFormatError(f"monomial needs {N} exponents")
        f = XPolynomial.monomial(N, expo)
    elif args.poly:
        path = Path(args.poly)
        inputs.append({"file": str(path), "sha256": _sha256_file(path)})
        f = xpoly_from_obj(json.loads(path.read_text()))
        if f.N != N:
            raise QalgFormatError("polynomial particle count differs from --particles")
    else:
        raise QalgFormatError("need --monomial or --poly")
    word = _parse_word(args.word)
    out = apply_word(word, f)
    return 0, {"word": args.word, "input": xpoly_to_obj(f), "result": xpoly_to_obj(out)}


def cmd_dunkl_survey(args, inputs):
    rep = observables_span_survey(
        args.particles, args.word_len, args.degree, Fraction(args.nu)
    )
    return 0, rep


def cmd_losev(args, inputs):
    rep = losev_simple(LosevInput(Fraction(args.c), args.n))
    if args.expect == "simple" and not rep["simple"]:
        raise ExpectationFailed("expected simple, predicate says not simple", rep)
    if args.expect == "not-simple" and rep["simple"]:
        raise ExpectationFailed("expected not simple, predicate says simple", rep)
    return 0, rep


def cmd_glambda_casimir(args, inputs):
    weights = [Fraction(w) for w in args.weights.split(",")]
    rep = casimir_check(args.cutoff, weights)
    rep["pbw_confluence"] = pbw_confluence_check()
    ok = rep["all_central"] and rep["all_weights_match"] and rep["pbw_confluence"]["all_equal"]
    if not ok:
        raise ExpectationFailed("casimir or confluence check failed", rep)
    return 0, rep


def cmd_glambda_probe(args, inputs):
    if args.window:
        if args.lam is None:
            raise QalgFormatError("--window needs --lambda")
        rep = ideal_window_probe(Fraction(args.lam), args.degree)
        return 0, rep
    if args.n is None:
        raise QalgFormatError("need --n (or --window --lambda)")
    rep = ideal_codim_probe(args.n, args.degree)
    if args.expect_rank is not None and rep["rank"] != args.expect_rank:
        raise ExpectationFailed(
            f"expected rank {args.expect_rank}, got {rep['rank']}", rep
        )
    return 0, rep


def cmd_compare_hamiltonians(args, inputs):
    return 0, compare_hamiltonians(args.particles, args.degree)


# -- batch ---------------------------------------------------------------------


def parse_manifest(text: str):
    """One command per line; an ``expect: N`` suffix states the expected
    exit code (default 0).  ``#`` starts a comment."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        expected = 0
        m = re.search(r"\s+expect:\s*(\d+)\s*$", line)
        if m:
            expected = int(m.group(1))
            line = line[: m.start()].rstrip()
        try:
            argv = shlex.split(line)
        except ValueError as e:
            raise QalgFormatError(f"manifest line {lineno}: {e}") from e
        if not argv:
            raise QalgFormatError(f"manifest line {lineno}: empty command")
        entries.append({"lineno": lineno, "line": line, "argv": argv, "expected_exit": expected})
    return entries


def _run_entry(entry: dict) -> dict:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(entry["argv"])
    try:
        report = json.loads(buf.getvalue())
    except json.JSONDecodeError:
        report = {"raw_output": buf.getvalue()}
    return {
        "line": entry["line"],
        "expected_exit": entry["expected_exit"],
        "exit": code,
        "pass": code == entry["expected_exit"],
        "report": report,
    }


def cmd_batch(args, inputs):
    path = Path(args.manifest)
    if not path.exists():
        raise QalgFormatError(f"{path}: no such file")
    inputs.append({"file": str(path), "sha256": _sha256_file(path)})
    entries = parse_manifest(path.read_text())
    if args.jobs > 1:
        # only safe when entries are independent (no file handoffs)
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_entry, entries))
    else:
        results = [_run_entry(e) for e in entries]
    all_pass = all(r["pass"] for r in results)
    result = {
        "manifest": str(path),
        "entries": results,
        "total": len(results),
        "passed": sum(1 for r in results if r["pass"]),
        "all_pass": all_pass,
    }
    return (0 if all_pass else 1), result


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qalg",
        description="Exact construction and verification of associative and Lie superalgebras",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(handler=fn)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--budget", type=int, default=10**7)
        return sp

    sp = add("construct", cmd_construct, help="build a named algebra")
    sp.add_argument("what")
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--field", default="q")
    sp.add_argument("--a", default="-1", help="Clifford square parameter")
    sp.add_argument("--grading", default="natural", choices=["natural", "trivial"])
    sp.add_argument("--gens", default=None,
                    help="permutation generators for group-perm: 'i,j,..;k,l,..'")
    sp.add_argument("-o", "--output")

    sp = add("validate", cmd_validate, help="re-check the axioms of an algebra file")
    sp.add_argument("file")

    sp = add("queerify", cmd_queerify, help="associative or Lie queerification")
    sp.add_argument("flavor", choices=["assoc", "lie"])
    sp.add_argument("file")
    sp.add_argument("-o", "--output")

    sp = add("lie-of", cmd_lie_of, help="commutator or supercommutator algebra")
    sp.add_argument("file")
    sp.add_argument("--mode", choices=["plain", "super"], default="super")
    sp.add_argument("-o", "--output")

    sp = add("derived", cmd_derived, help="first derived algebra")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")

    for name, super_mode in (("center", False), ("supercenter", True)):
        sp = add(
            name,
            (lambda sm: lambda a, i: cmd_center(a, i, sm))(super_mode),
            help=f"compute the {name}",
        )
        sp.add_argument("file")
        sp.add_argument("--expect-dim", type=int, default=None)

    sp = add("qtr-tower", cmd_qtr_tower, help="emit q/sq/pq/psq and their dimensions")
    sp.add_argument("n", type=int)
    sp.add_argument("--field", default="q")
    sp.add_argument("-o", "--output", help="file prefix for the four algebras")

    for name, fn in (("herstein", cmd_herstein), ("montgomery-sl", cmd_montgomery)):
        sp = add(name, fn, help=f"{name} subquotient construction")
        sp.add_argument("file")
        sp.add_argument("--expect", choices=["simple", "not-simple"], default=None)
        sp.add_argument("--expect-dim", type=int, default=None)
        sp.add_argument("-o", "--output")

    sp = add("condition-check", cmd_condition_check, help="odd-square condition search")
    sp.add_argument("file")
    sp.add_argument("--strategy", choices=["sample", "exhaustive"], default="sample")
    sp.add_argument("--count", type=int, default=64)
    sp.add_argument("--expect", choices=["violated", "no-violation"], default=None)

    sp = add("simplicity", cmd_simplicity, help="simplicity verdict")
    sp.add_argument("file")
    sp.add_argument("--expect", choices=["simple", "not-simple"], default=None)
    sp.add_argument("--central", action="store_true")

    sp = add("fingerprint", cmd_fingerprint, help="structural fingerprint")
    sp.add_argument("file")
    sp.add_argument("--match", default=None, help="second file; exit 1 if fingerprints differ")

    sp = add("smash", cmd_smash, help="smash product with a finite group action")
    sp.add_argument("file")
    sp.add_argument("actions", help="JSON file with group data and action matrices")
    sp.add_argument("-o", "--output")

    sp = add("dunkl-check", cmd_dunkl_check, help="Dunkl commutativity sweep")
    sp.add_argument("--particles", type=int, required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--negative-control", action="store_true")
    sp.add_argument("--expect", choices=["zero", "nonzero"], default=None)

    sp = add("dunkl-apply", cmd_dunkl_apply, help="apply an operator word to a polynomial")
    sp.add_argument("--particles", type=int, required=True)
    sp.add_argument("--word", required=True)
    sp.add_argument("--monomial", default=None)
    sp.add_argument("--poly", default=None)

    sp = add("dunkl-survey", cmd_dunkl_survey, help="observable-algebra rank survey")
    sp.add_argument("--particles", type=int, required=True)
    sp.add_argument("--word-len", type=int, required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--nu", default="1/5")

    sp = add("losev", cmd_losev, help="central-simplicity predicate for S_n couplings")
    sp.add_argument("--c", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--expect", choices=["simple", "not-simple"], default=None)

    sp = add("glambda-casimir", cmd_glambda_casimir, help="Casimir centrality and values")
    sp.add_argument("--cutoff", type=int, default=4)
    sp.add_argument("--weights", default="0,1,2")

    sp = add("glambda-probe", cmd_glambda_probe, help="matrix-image rank / window probes")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--expect-rank", type=int, default=None)
    sp.add_argument("--window", action="store_true")
    sp.add_argument("--lambda", dest="lam", default=None)

    sp = add("compare-hamiltonians", cmd_compare_hamiltonians,
             help="anticommutator form vs displayed differential form")
    sp.add_argument("--particles", type=int, required=True)
    sp.add_argument("--degree", type=int, required=True)

    sp = add("batch", cmd_batch, help="run a manifest of commands with expected exits")
    sp.add_argument("manifest")
    sp.add_argument("--jobs", type=int, default=1)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    started = time.monotonic()
    inputs: list = []
    command = args.command
    params = {
        k: v for k, v in sorted(vars(args).items())
        if k not in ("handler", "command") and not callable(v)
    }
    exit_code = 0
    try:
        exit_code, result = args.handler(args, inputs)
    except ExpectationFailed as e:
        result = dict(e.payload or {})
        result.update({"error": str(e), "kind": "expectation-failed"})
        exit_code = 1
    except Inconclusive as e:
        result = dict(e.payload or {})
        result.update({"error": str(e), "kind": "inconclusive"})
        exit_code = 3
    except BudgetExceeded as e:
        print(f"qalg: budget exceeded: {e}", file=sys.stderr)
        result = {"error": str(e), "kind": "budget-exceeded"}
        exit_code = 3
    except QalgError as e:
        print(f"qalg: {e}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as e:
        print(f"qalg: {e}", file=sys.stderr)
        return 2
    report = {
        "schema": "qreport/1",
        "command": command,
        "inputs": inputs + [{"params": _params_digest(params)}],
        "result": result,
        "seed": getattr(args, "seed", None),
        "coverage": result.get("coverage") if isinstance(result, dict) else None,
        "timing_ms": int((time.monotonic() - started) * 1000),
    }
    print(canonical_json(report))
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
