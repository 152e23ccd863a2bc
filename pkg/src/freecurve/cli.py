"""Command-line surface: single commands, NDJSON batch mode and verification.

All numeric output is exact: integers stay integers and rationals are
rendered as {"num": p, "den": q}.  Output is deterministic (sorted JSON
keys, sorted sets) so runs are byte-stable.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys
from fractions import Fraction

from . import moduli, sequences, verify
from .errors import FreecurveError, NotFreeError
from .basis import build_basis
from .semigroup import free_structure, monomial_curve_equations
from .tjurina import graded_profile

__all__ = ["main"]


def _jsonable(obj):
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return int(obj)
        return {"num": obj.numerator, "den": obj.denominator}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {k: _jsonable(v) for k, v in dataclasses.asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _dump(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, separators=(",", ":"))


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _gens(ns) -> tuple[int, ...]:
    return tuple(ns.generators)


def cmd_analyze(ns):
    fs = free_structure(_gens(ns))
    return {
        "generators": fs.a,
        "scale": fs.base.scale,
        "e": fs.e,
        "n": fs.n,
        "ell": fs.ell,
        "conductor": fs.conductor,
        "equations": monomial_curve_equations(fs),
    }


def cmd_basis(ns):
    return build_basis(free_structure(_gens(ns)))


def cmd_tau(ns):
    return moduli.tau_report(free_structure(_gens(ns)))


def cmd_bounds(ns):
    return moduli.dimension_bounds(free_structure(_gens(ns)))


def cmd_plane_branch(ns):
    return moduli.plane_branch_check(free_structure(_gens(ns)))


def cmd_at_infinity(ns):
    fs = free_structure(_gens(ns))
    out = {"record": moduli.at_infinity_tau2(fs), "triangle": []}
    for k in range(0, fs.n[1] - 1):
        out["triangle"].append(moduli.dplus_l2_bounds(fs, k))
    return out


def cmd_oracle(ns):
    return graded_profile(free_structure(_gens(ns)), work_limit=ns.work_limit)


def cmd_delta_to_beta(ns):
    beta, branch = sequences.delta_to_beta(_gens(ns))
    return {"betas": beta.betas, "branch": branch}


def cmd_delta_enumerate(ns):
    return sequences.enumerate_deltas(_gens(ns), cap=ns.cap)


def cmd_delta_puiseux(ns):
    b0, b1 = ns.generators
    return sequences.one_puiseux_family(b0, b1)


def _build_parser():
    p = _Parser(prog="freecurve", description="free numerical semigroups, "
                "monomial-curve deformation bases and moduli quantities")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, nargs="+", help=None):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("generators", type=int, nargs=nargs)
        sp.set_defaults(fn=fn)
        return sp

    add("analyze", cmd_analyze, help="gcd tower, ell-table, conductor, equations")
    add("basis", cmd_basis, help="graded monomial basis of the tangent module")
    add("tau", cmd_tau, help="positive/negative degree counts")
    add("bounds", cmd_bounds, help="bound chains for tau+")
    add("plane-branch", cmd_plane_branch, help="plane-branch test and recursion")
    add("at-infinity", cmd_at_infinity, help="three-generator closed formula report")
    sp = add("oracle", cmd_oracle, help="graded dimensions by exact linear algebra")
    sp.add_argument("--work-limit", type=int, default=200)

    dp = sub.add_parser("delta", help="delta-sequence conversions")
    dsub = dp.add_subparsers(dest="delta_command", required=True)
    sp = dsub.add_parser("to-beta")
    sp.add_argument("generators", type=int, nargs="+")
    sp.set_defaults(fn=cmd_delta_to_beta)
    sp = dsub.add_parser("enumerate")
    sp.add_argument("generators", type=int, nargs="+")
    sp.add_argument("--cap", type=int, default=10**6)
    sp.set_defaults(fn=cmd_delta_enumerate)
    sp = dsub.add_parser("puiseux")
    sp.add_argument("generators", type=int, nargs=2)
    sp.set_defaults(fn=cmd_delta_puiseux)

    vp = sub.add_parser("verify", help="run a verification suite")
    vp.add_argument("--suite", required=True, choices=sorted(verify.SUITES))
    vp.add_argument("--seed", type=int, default=None)
    vp.add_argument("--count", type=int, default=None)
    vp.set_defaults(fn=None)

    bp = sub.add_parser("batch", help="newline-delimited JSON jobs")
    bp.add_argument("--input", default="-")
    bp.set_defaults(fn=None)
    return p


def _error_payload(exc) -> dict:
    if isinstance(exc, NotFreeError):
        return {"error": "NotFree", "index": exc.index}
    if isinstance(exc, FreecurveError):
        return {"error": type(exc).__name__.removesuffix("Error"), "detail": str(exc)}
    return {"error": "Usage", "detail": str(exc)}


def _run_verify(ns, out) -> int:
    records = verify.run_suite(ns.suite, seed=ns.seed, count=ns.count)
    if ns.format == "csv":
        w = csv.writer(out)
        w.writerow(["semigroup", "check", "status", "payload"])
        for r in records:
            w.writerow([" ".join(map(str, r.semigroup)), r.check, r.status,
                        _dump(r.payload)])
    else:
        for r in records:
            print(_dump(r), file=out)
    return 2 if any(r.status == "fail" for r in records) else 0


_BATCH_COMMANDS = {
    "analyze": cmd_analyze,
    "basis": cmd_basis,
    "tau": cmd_tau,
    "bounds": cmd_bounds,
    "plane-branch": cmd_plane_branch,
    "at-infinity": cmd_at_infinity,
    "oracle": cmd_oracle,
    "delta-to-beta": cmd_delta_to_beta,
    "delta-enumerate": cmd_delta_enumerate,
    "delta-puiseux": cmd_delta_puiseux,
}


def _run_batch(ns, out) -> int:
    if ns.input == "-":
        text = sys.stdin.read()
    else:
        with open(ns.input) as fh:
            text = fh.read()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            job = json.loads(line)
            fn = _BATCH_COMMANDS[job["command"]]
            job_ns = argparse.Namespace(
                generators=[int(x) for x in job["generators"]],
                cap=int(job.get("cap", 10**6)),
                work_limit=int(job.get("work_limit", 200)),
            )
            rows.append(fn(job_ns))
        except FreecurveError as exc:
            rows.append(_error_payload(exc))
        except Exception as exc:
            rows.append({"error": "BadJob", "detail": str(exc)})
    if ns.format == "csv":
        w = csv.writer(out)
        w.writerow(["result"])
        for row in rows:
            w.writerow([_dump(row)])
    else:
        for row in rows:
            print(_dump(row), file=out)
    return 0


def main(argv=None) -> int:
    ns = _build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if ns.command == "verify":
            return _run_verify(ns, out)
        if ns.command == "batch":
            return _run_batch(ns, out)
        result = ns.fn(ns)
    except FreecurveError as exc:
        print(_dump(_error_payload(exc)), file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(_dump(result), file=out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
