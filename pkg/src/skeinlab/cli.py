"""Command-line front end.

Every command prints one JSON document::

    {"command": ..., "status": "pass" | "fail" | "value", "payload": ..., "elapsed_ms": ...}

Exit status is 0 for pass/value, 1 for fail and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import random
import sys
import time
from typing import Callable

from . import arc_products as ap
from . import audit as au
from . import chebyshev as ch
from . import twist_models as tm
from .laurent import LaurentPoly
from .polyx import PolyX

MAX_DEGREE_ENV = "SKEINLAB_MAX_DEGREE"


class UsageError(Exception):
    pass


@dataclasses.dataclass
class CommandResult:
    command: str
    status: str
    payload: object
    elapsed_ms: int = 0

    def exit_code(self) -> int:
        return 1 if self.status == "fail" else 0


# -- encoding -------------------------------------------------------------

def encode(obj, pretty: bool = False):
    if isinstance(obj, (LaurentPoly, PolyX, tm.SkeinElement)):
        return str(obj) if pretty else obj.to_json()
    if isinstance(obj, (au.AuditReport, ap.ArcPolyExpansion)):
        doc = obj.to_json()
        if pretty and isinstance(obj, au.AuditReport):
            doc = {
                "a": str(obj.a),
                "c": [str(c) for c in obj.c],
                "terms": {str(s): str(v) for s, v in sorted(obj.term_coefficients.items(), key=lambda t: t[0].sort_key())},
                "d": str(obj.d),
            }
        return doc
    if isinstance(obj, dict):
        return {str(k): encode(v, pretty) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v, pretty) for v in obj]
    return obj


def render(result: CommandResult, pretty: bool) -> str:
    doc = {
        "command": result.command,
        "status": result.status,
        "payload": encode(result.payload, pretty),
        "elapsed_ms": result.elapsed_ms,
    }
    if pretty:
        return json.dumps(doc, indent=2, ensure_ascii=False)
    return json.dumps(doc, separators=(",", ":"))


# -- argument helpers -----------------------------------------------------

def _cap() -> int | None:
    raw = os.environ.get(MAX_DEGREE_ENV)
    if raw is None or raw == "":
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"{MAX_DEGREE_ENV} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise UsageError(f"{MAX_DEGREE_ENV} must be >= 0, got {cap}")
    return cap


def _max_arg(value: int, flag: str = "--max") -> int:
    if value < 0:
        raise UsageError(f"{flag} must be >= 0, got {value}")
    cap = _cap()
    return value if cap is None else min(value, cap)


def _index_arg(value: int, flag: str, low: int = 0) -> int:
    if value < low:
        raise UsageError(f"{flag} must be >= {low}, got {value}")
    cap = _cap()
    if cap is not None and value > cap:
        raise UsageError(f"{flag} {value} exceeds {MAX_DEGREE_ENV}={cap}")
    return value


def _json_arg(raw: str, flag: str):
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{flag}: invalid JSON ({exc.msg})") from None


# -- checks shared by commands and verify-all -----------------------------

def check_identities(max_n: int):
    checked = 0
    for tag in ch.IDENTITY_TAGS:
        ms = [0] if tag in ch.N_ONLY_TAGS else range(max_n + 1)
        for n in range(max_n + 1):
            for m in ms:
                lhs, rhs = ch.identity_sides(tag, n, m)
                checked += 1
                if lhs != rhs:
                    return False, {"tag": tag, "n": n, "m": m, "lhs": lhs, "rhs": rhs}
    return True, {"max": max_n, "tags": list(ch.IDENTITY_TAGS), "checked": checked}


def check_s_diff_examples():
    got = [ch.s_diff(2), ch.s_diff(3)]
    want = [PolyX([-1, -1, 1]), PolyX([1, -2, -1, 1])]
    ok = got == want
    detail = {"S2-S1": got[0], "S3-S2": got[1]}
    if not ok:
        detail["expected"] = want
    return ok, detail


def dominance_counterexample(a: str, b: str, n: int):
    hit = ch.first_negative_entry(ch.family(a), ch.family(b), n)
    if hit is None:
        return None
    row, col, entry = hit
    seq_a = ch.family(a)
    return {
        "a": a, "b": b, "row": row, "col": col, "entry": entry,
        "a_row": seq_a(row),
        "expansion": ch.expand_in_basis(seq_a(row), ch.family(b)),
    }


def check_dominance_chain(n: int):
    chain = [("Tbar", "SD"), ("S", "Tbar"), ("X", "S")]
    for a, b in chain:
        bad = dominance_counterexample(a, b, n)
        if bad is not None:
            return False, bad
    control = ch.dominates(ch.family("Tbar"), ch.family("X"), 2)
    if control:
        return False, {"negative_control": "Tbar >= X held at N = 2"}
    return True, {"max": n, "chain": "SD <= Tbar <= S <= X", "negative_control_Tbar_ge_X_at_2": False}


def check_products(max_n: int, odd_max: int):
    for m in range(max_n + 1):
        for n in range(max_n + 1):
            oracle = ap.product_in_Tbar_basis(m, n, "oracle")
            closed = ap.product_in_Tbar_basis(m, n, "closed")
            if oracle != closed:
                return False, {"m": m, "n": n, "oracle": oracle, "closed": closed}
            bad = [c for c in oracle.values() if c not in (1, 2)]
            if bad:
                return False, {"m": m, "n": n, "constants": oracle}
    for n in range(odd_max + 1):
        for m in range(odd_max + 1):
            if not ap.verify_odd_odd_display(n, m):
                return False, {
                    "odd_odd": [n, m],
                    "lhs": ch.cheb_Tbar(2 * n + 1) * ch.cheb_Tbar(2 * m + 1),
                    "rhs": ch.cheb_T(2 * (n + m + 1)) + ch.cheb_T(2 * abs(n - m)),
                }
    return True, {"max": max_n, "odd_odd_max": odd_max, "constants": [1, 2]}


_ANNULUS = {
    "Tn": (tm.beta_mul_Tn_p, tm.beta_mul_Tn_p_recurrence),
    "SnSm": (tm.beta_mul_SnSm_alpha, tm.beta_mul_SnSm_alpha_recurrence),
    "Tbar": (tm.beta_mul_Tbar, tm.beta_mul_Tbar_recurrence),
}


def check_annulus(max_n: int):
    for op, (closed, rec) in _ANNULUS.items():
        for n in range(1, max_n + 1):
            a, b = closed(n), rec(n)
            if a != b:
                return False, {"op": op, "n": n, "closed": a, "recurrence": b}
    return True, {"max": max_n, "ops": list(_ANNULUS)}


def check_disk(max_n: int):
    for n in range(6):
        if tm.z_mul_Tbar_rewrite(n) != tm.explicit_z_product(n):
            return False, {"explicit": n, "rewrite": tm.z_mul_Tbar_rewrite(n), "expected": tm.explicit_z_product(n)}
    for n in range(max_n + 1):
        closed, rewrite = tm.z_mul_Tbar_closed(n), tm.z_mul_Tbar_rewrite(n)
        if closed != rewrite:
            return False, {"n": n, "closed": closed, "rewrite": rewrite}
        sym = tm.symmetric_part(n) if n >= 1 else closed
        if not tm.is_symmetric(sym):
            return False, {"n": n, "not_symmetric": sym}
        if n % 2 and n >= 3:
            coeffs = tm.symmetric_part_in_Tbar_basis(sym)
            if not all(c.is_nonneg() for c in coeffs.values()):
                return False, {"n": n, "symmetric_part_Tbar_coefficients": coeffs}
    return True, {"max": max_n}


def check_rule_forcing():
    try:
        rule = tm.solve_c_rule()
    except ArithmeticError as exc:
        return False, {"error": str(exc)}
    ok = rule == tm.STANDARD_C_RULE
    return ok, {"A": rule[0], "B": rule[1], "E": rule[2]}


def check_transparency(max_order: int):
    for n in range(1, max_order + 1):
        if not tm.transparency_check(n):
            return False, {"order": n, "defects": tm.transparency_defects(n)}
    if tm.transparency_check(3, modulus=13):
        return False, {"negative_control": "order 3 passed at modulus 13"}
    return True, {"orders": [1, max_order], "negative_control_3_mod_13": False}


def check_audit(max_n: int, samples: int = 100, seed: int = 0):
    for name in ("S", "X", "U", "Tbar"):
        if not au.lower_bound_check(ch.family(name), max_n):
            return False, {"lower_bound_failed": name, "max": max_n}
    rng = random.Random(seed)
    for i in range(samples):
        a, c = _random_audit_input(rng)
        report = au.audit_R1_Rn(a, c)
        closed = au.d_closed_form(a, c)
        if report.d != closed or (report.d.is_zero() != a.is_zero()):
            return False, {"sample": i, "a": a, "c": c, "d": report.d, "d_closed_form": closed}
        if a.is_zero() and not report.terms_nonneg():
            return False, {"sample": i, "report": report}
    return True, {"max": max_n, "samples": samples}


def _random_laurent_nonneg(rng: random.Random, allow_zero: bool = True) -> LaurentPoly:
    n_terms = rng.randint(0 if allow_zero else 1, 3)
    return LaurentPoly((rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(n_terms))


def _random_audit_input(rng: random.Random):
    a = _random_laurent_nonneg(rng) if rng.random() < 0.7 else LaurentPoly()
    length = rng.randint(1, 12)
    c = [_random_laurent_nonneg(rng) for _ in range(length)]
    if all(ck.is_zero() for ck in c):
        c[-1] = _random_laurent_nonneg(rng, allow_zero=False)
    return a, c


# -- command handlers -----------------------------------------------------

def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def cmd_cheb(args):
    low = -1 if args.kind == "S" else 0
    n = _index_arg(args.n, "--n", low)
    gen = {"T": ch.cheb_T, "S": ch.cheb_S, "Tbar": ch.cheb_Tbar, "U": ch.seq_U}[args.kind]
    return "value", {"kind": args.kind, "n": n, "poly": gen(n)}


def cmd_identities(args):
    ok, detail = check_identities(_max_arg(args.max))
    return _status(ok), detail


def cmd_basis(args):
    n = _max_arg(args.max)
    src, dst = _family_arg(args.source, "--from"), _family_arg(args.target, "--to")
    return "value", {"from": args.source, "to": args.target, "max": n, "matrix": ch.change_of_basis(src, dst, n)}


def cmd_dominates(args):
    n = _max_arg(args.max)
    _family_arg(args.a, "--a")
    _family_arg(args.b, "--b")
    bad = dominance_counterexample(args.a, args.b, n)
    if bad is None:
        return "pass", {"a": args.a, "b": args.b, "max": n, "dominates": True}
    return "fail", dict(bad, dominates=False, max=n)


def cmd_products(args):
    n = _max_arg(args.max)
    ok, detail = check_products(n, max(n - 1, 0) // 2)
    if args.csv:
        rows = ap.structure_constant_rows(n)
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(ap.rows_to_csv(rows))
        detail = dict(detail, csv=args.csv, rows=len(rows))
    return _status(ok), detail


def cmd_annulus(args):
    n = _index_arg(args.n, "--n", 1)
    closed_fn, rec_fn = _ANNULUS[args.op]
    closed, rec = closed_fn(n), rec_fn(n)
    if closed != rec:
        return "fail", {"op": args.op, "n": n, "closed": closed, "recurrence": rec}
    return "value", {"op": args.op, "n": n, "element": closed, "recurrence_agrees": True}


def cmd_disk(args):
    n = _index_arg(args.n, "--n", 0)
    fn = {"closed": tm.z_mul_Tbar_closed, "rewrite": tm.z_mul_Tbar_rewrite, "right": tm.Tbar_mul_z}[args.op]
    elem = fn(n)
    return "value", {"op": args.op, "n": n, "element": elem, "symmetric": tm.is_symmetric(elem)}


def cmd_audit(args):
    try:
        a = LaurentPoly.from_json(_json_arg(args.a, "--a"))
        raw_c = _json_arg(args.c, "--c")
        if not isinstance(raw_c, list):
            raise UsageError("--c must be a JSON list")
        c = [LaurentPoly.from_json(x) for x in raw_c]
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"--a/--c: {exc}") from None
    report = au.audit_R1_Rn(a, c)
    closed = au.d_closed_form(a, c)
    if report.d != closed:
        return "fail", {"report": report, "d_closed_form": closed}
    return "value", {"report": report, "d_closed_form_agrees": True}


def cmd_transparency(args):
    n = _index_arg(args.order, "--order", 1)
    if args.modulus is not None and args.modulus < 1:
        raise UsageError(f"--modulus must be >= 1, got {args.modulus}")
    modulus = 4 * n if args.modulus is None else args.modulus
    defects = tm.transparency_defects(n, modulus)
    ok = not any(defects.values())
    return _status(ok), {"order": n, "modulus": modulus, "defects": defects}


def verify_all(n: int) -> list[tuple[str, bool, object]]:
    checks: list[tuple[str, Callable[[], tuple[bool, object]]]] = [
        ("identities", lambda: check_identities(n)),
        ("s_diff_examples", check_s_diff_examples),
        ("dominance_chain", lambda: check_dominance_chain(n)),
        ("products", lambda: check_products(n, max(n - 1, 0))),
        ("annulus", lambda: check_annulus(n)),
        ("disk", lambda: check_disk(n)),
        ("rule_forcing", check_rule_forcing),
        ("transparency", lambda: check_transparency(min(n, 12))),
        ("audit", lambda: check_audit(n)),
    ]
    results = []
    for name, fn in checks:
        ok, detail = fn()
        results.append((name, ok, detail))
    return results


def cmd_verify_all(args):
    n = _max_arg(args.max)
    results = verify_all(n)
    ok = all(r[1] for r in results)
    payload = {
        "max": n,
        "checks": [{"name": name, "status": _status(good), "detail": detail} for name, good, detail in results],
    }
    return _status(ok), payload


def _family_arg(name: str, flag: str):
    try:
        return ch.family(name)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


# -- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indented output with readable polynomials")
    common.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for reproducible output")

    parser = argparse.ArgumentParser(prog="skeinlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    families = sorted(ch.FAMILIES)

    p = sub.add_parser("cheb", parents=[common], help="print T_n, S_n, Tbar_n or U_n")
    p.add_argument("--kind", choices=["T", "S", "Tbar", "U"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_cheb)

    p = sub.add_parser("identities", parents=[common], help="verify the Chebyshev identities")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(handler=cmd_identities)

    p = sub.add_parser("basis", parents=[common], help="change-of-basis matrix between families")
    p.add_argument("--from", dest="source", choices=families, required=True)
    p.add_argument("--to", dest="target", choices=families, required=True)
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(handler=cmd_basis)

    p = sub.add_parser("dominates", parents=[common], help="test (A_n) >= (B_n) up to degree N")
    p.add_argument("--a", choices=families, required=True)
    p.add_argument("--b", choices=families, required=True)
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(handler=cmd_dominates)

    p = sub.add_parser("products", parents=[common], help="T-bar structure constants")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--csv", help="write m,n,k,coefficient_json rows to this path")
    p.set_defaults(handler=cmd_products)

    p = sub.add_parser("annulus", parents=[common], help="products with beta in the annulus model")
    p.add_argument("--op", choices=list(_ANNULUS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_annulus)

    p = sub.add_parser("disk", parents=[common], help="products with z in the disk model")
    p.add_argument("--op", choices=["closed", "rewrite", "right"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_disk)

    p = sub.add_parser("audit", parents=[common], help="expand R_1(beta) R_n(alpha)")
    p.add_argument("--a", required=True, help='LaurentPoly JSON or integer, e.g. 1 or {"v_exponents": [[2, "1"]]}')
    p.add_argument("--c", required=True, help="JSON list of LaurentPoly documents or integers")
    p.set_defaults(handler=cmd_audit)

    p = sub.add_parser("transparency", parents=[common], help="commutators of Tbar_N(alpha) at a root of unity")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--modulus", type=int, help="override the quotient v^M = 1 (default 4N)")
    p.set_defaults(handler=cmd_transparency)

    p = sub.add_parser("verify-all", parents=[common], help="run every check")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(handler=cmd_verify_all)
    return parser


def run(argv: list[str] | None = None) -> tuple[CommandResult, int]:
    """Parse ``argv``, run the command and return the result and exit code.

    ``argparse`` usage errors raise ``SystemExit(2)`` as usual.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        status, payload = args.handler(args)
    except UsageError as exc:
        parser.exit(2, f"{parser.prog} {args.command}: error: {exc}\n")
    elapsed = 0 if args.no_timing else int((time.perf_counter() - start) * 1000)
    result = CommandResult(args.command, status, payload, elapsed)
    return result, result.exit_code()


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    result, code = run(argv)
    pretty = build_parser().parse_args(argv).pretty
    print(render(result, pretty))
    return code


if __name__ == "__main__":
    sys.exit(main())
