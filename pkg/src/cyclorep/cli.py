"""``cyclo`` command-line front end.

Exit status: 0 on success, 1 on a domain error (the error class name is
reported), 2 on a usage error.  Diagnostics and timing go to stderr so that
stdout is byte-identical across identical invocations.
"""
import argparse
import contextlib
import json
import sys
import time
from dataclasses import dataclass, field

from . import ansearch as an
from . import matrixrep as mr
from . import numtheory as nt
from . import polyring as pr
from . import verify as vf
from .errors import BudgetExhausted, CycloError


@dataclass
class Report:
    command: str
    inputs: dict
    result: object = None
    checks: list = field(default_factory=list)
    error: dict = None

    def to_json(self):
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "checks": [c.to_json() for c in self.checks],
        }
        if self.error is not None:
            out["error"] = self.error
        return out


def _poly_payload(p):
    return {"coefficients": pr.to_json(p), "pretty": pr.pretty(p)}


def _cmd_profile(args):
    prof = pr.profile(args.n)
    result = prof.to_json()
    result["pretty"] = pr.pretty(prof.phi_n)
    return result, []


def _cmd_cyclotomic(args):
    result = {"n": str(args.n)}
    result.update(_poly_payload(pr.cyclotomic(args.n)))
    return result, []


def _cmd_search(args):
    found = an.search_min(args.n, args.strategy, args.budget)
    exact = None
    if found is not None:
        exact = found[1].to_json()
    return {"n": str(args.n), "strategy": args.strategy, "empty": found is None, "exact": exact}, []


def _cmd_bounds(args):
    return an.bounds_report(args.n, args.strategy, args.budget).to_json(), []


def _cayley_result(p, r):
    circ = mr.subfield_representation(p, r)
    digraph = mr.cayley_partition(p, (p - 1) // r)[0]
    m = mr.dense(circ)
    pm = mr.minimal_polynomial(m)
    q = mr.element_minimal_polynomial(p, circ.representer)
    g = mr.hoffman_polynomial(m)
    ideal = mr.ideal_canonical(g, pm)
    result = {
        "p": str(p),
        "r": str(r),
        "connection": [str(s) for s in digraph.connection],
        "minpoly": _poly_payload(pm),
        "q": _poly_payload(q),
        "hoffman": _poly_payload(g),
        "ideal_generator": _poly_payload(ideal.generator),
    }
    checks = [vf.Check("<J> = <q(A)>", ideal.generator == q.monic())]
    return result, checks, digraph


def _cmd_cayley(args):
    result, checks, _ = _cayley_result(args.p, args.r)
    return result, checks


def _cmd_hoffman(args):
    with open(args.matrix) as fh:
        m = mr.DenseRatMatrix.from_json(json.load(fh))
    g = mr.hoffman_polynomial(m)
    return {"rows": str(m.rows), "hoffman": _poly_payload(g)}, []


def _cmd_sym(args):
    c = mr.symmetric_representation(args.n)
    pm = mr.circulant_minimal_polynomial(c, verify=True)
    delta = mr.delta_minimal_polynomial(args.n)
    result = {
        "n": str(args.n),
        "representer": _poly_payload(c.representer),
        "minpoly": _poly_payload(pm),
        "delta_minpoly": _poly_payload(delta),
        "delta_degree": str(delta.degree),
    }
    checks = [
        vf.Check("deg = φ(n)/2", delta.degree == nt.totient(args.n) // 2),
        vf.Check("δ_n minpoly divides minpoly", pr.divisible(pm, delta)),
    ]
    return result, checks


def _cmd_smallest(args):
    return {"n": str(args.n), "order": str(mr.smallest_circulant_order(args.n))}, []


def _cmd_verify(args):
    checks = vf.run_suites(args.suite, args.max_n)
    passed = sum(c.passed for c in checks)
    return {"suite": args.suite, "passed": str(passed), "total": str(len(checks))}, checks


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the Report as JSON")

    parser = argparse.ArgumentParser(
        prog="cyclo",
        description="Matrix representations of cyclotomic fields and 0,1-companion searches.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", parents=[common], help="Φ_n with height, flatness and order")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("cyclotomic", parents=[common], help="coefficients of Φ_n")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_cyclotomic)

    for name, func, helptext in (
        ("search-an", _cmd_search, "minimum degree member of A_n"),
        ("bounds", _cmd_bounds, "lower/upper/exact bounds for A_n"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("n", type=int)
        p.add_argument("--strategy", choices=an.STRATEGIES, default=an.EXHAUSTIVE)
        p.add_argument("--budget", type=int, default=None, help="search node limit")
        p.set_defaults(func=func)

    p = sub.add_parser("cayley", help="Cayley digraph representing the degree-(p-1)/r subfield")
    p.add_argument("p", type=int)
    p.add_argument("r", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit the Report as JSON")
    fmt.add_argument("--dot", action="store_true", help="emit the digraph in DOT")
    p.set_defaults(func=_cmd_cayley)

    p = sub.add_parser("hoffman", parents=[common], help="polynomial g with J = g(A)")
    p.add_argument("--matrix", required=True, help="matrix JSON file")
    p.set_defaults(func=_cmd_hoffman)

    p = sub.add_parser("sym", parents=[common], help="symmetric circulant W_n + W_n^(n-1)")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_sym)

    p = sub.add_parser("smallest-order", parents=[common], help="smallest circulant order for Q(ζ_n)")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_smallest)

    p = sub.add_parser("verify", parents=[common], help="replay the acceptance suites")
    p.add_argument("suite", choices=sorted(vf.SUITES) + ["all"])
    p.add_argument("--max-n", type=int, default=36)
    p.set_defaults(func=_cmd_verify)
    return parser


def _inputs(args):
    skip = {"func", "command", "json", "dot"}
    return {k: (None if v is None else str(v)) for k, v in sorted(vars(args).items()) if k not in skip}


def _scalar(v):
    if v is None:
        return "null"
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def _flatten(value, prefix=""):
    if isinstance(value, dict):
        for k, v in value.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else k)
    elif isinstance(value, list) and all(not isinstance(v, (dict, list)) for v in value):
        yield prefix, "[" + ", ".join(_scalar(v) for v in value) + "]"
    elif isinstance(value, list):
        for i, v in enumerate(value):
            yield from _flatten(v, f"{prefix}.{i}")
    else:
        yield prefix, _scalar(value)


def render_text(report):
    rows = list(_flatten(report.result or {}))
    width = max((len(k) for k, _ in rows), default=0)
    lines = [f"{k.ljust(width)}  {v}" for k, v in rows]
    for c in report.checks:
        lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}" + (f" ({c.detail})" if c.detail else ""))
    if report.error:
        lines.append(f"error: {report.error['name']}: {report.error['message']}")
    return "\n".join(lines) + "\n"


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    report = Report(command=args.command, inputs=_inputs(args))
    start = time.perf_counter()
    code = 0
    try:
        if args.command == "cayley" and args.dot:
            _, _, digraph = _cayley_result(args.p, args.r)
            stdout.write(digraph.to_dot(f"Cay_{args.p}_{args.r}"))
            return 0
        report.result, report.checks = args.func(args)
        if any(not c.passed for c in report.checks):
            code = 1
    except BudgetExhausted as exc:
        code = 1
        report.error = {"name": type(exc).__name__, "message": str(exc)}
        report.result = {
            "n": str(exc.n),
            "next_degree": str(exc.next_degree),
            "best": None if exc.best is None else {"value": str(exc.best[0]), "witness": exc.best[1].to_json()},
        }
    except (CycloError, ValueError, OSError) as exc:
        code = 1
        report.error = {"name": type(exc).__name__, "message": str(exc)}
    finally:
        print(f"elapsed {time.perf_counter() - start:.3f}s", file=stderr)

    if getattr(args, "json", False):
        stdout.write(json.dumps(report.to_json(), indent=2, ensure_ascii=False) + "\n")
    else:
        stdout.write(render_text(report))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
