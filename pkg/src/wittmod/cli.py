"""Command-line front end: parse module expressions, run checks, report.

Subcommands
-----------
verify-shen    bracket-compatibility of the embedding into the toroidal algebra
verify-axioms  Lie-action axiom on F(P, M), plus chain-map intertwining
complex        homology table of the de Rham-style complex over P
irreducible    windowed irreducibility/reducibility report for F(P, M)
support        weight support of F(P, M) over the window
fingerprint    canonical window invariant of F(P, M)
torsion        randomized check of the interpolated torsion operator

Module expressions: --P takes `Apoly`, `Alaurent`, `TL(l1,...,ln)`, `Quot`,
`Whittaker(l1,...,ln)`, or `Tensor(f1,...,fn)` with rank-1 factors; --M takes
`Nat`, `Ext(k)`, `Sym(k)`, `Triv(b)`, and tensors `M1*M2`.  Arguments with a
leading letter become field parameters; anything else must be an integer (or
`p/q` rational) literal.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .exactnum import ONE, Scalar, vec_clean
from .glmod import (
    GlModule, exterior_power, natural_module, scalar_module, sym_power,
    tensor_module,
)
from .liealg import WittElement, shen_tau, toroidal_bracket, witt_bracket
from .polyalg import LAURENT, PLUS, exponents_within
from .weylmod import (
    LaurentFactor, PolyFactor, QuotFactor, TwistedFactor, WeylModule,
    WhittakerFactor, alaurent, apoly, laurent_quot, tensor_factors,
    twisted_laurent, whittaker,
)
from .wittrep import (
    FPModule, check_action_axiom, check_chain_map, complex_homology,
    fingerprint, irreducibility_report, torsion_matches, weight_support,
)

COMMANDS = ("verify-shen", "verify-axioms", "complex", "irreducible",
            "support", "fingerprint", "torsion")
DEFAULT_WINDOW = 4
WINDOW_ENV = "WITTMOD_WINDOW"


class UsageError(ValueError):
    """Bad flags or module expressions; maps to exit code 2."""


# ---------------------------------------------------------------------------
# job specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JobSpec:
    command: str
    n: int
    mode: str
    p_expr: str
    m_expr: str
    window: int
    gen_bound: int
    as_json: bool = False

    def render(self) -> List[str]:
        """Argv that parses back to an identical JobSpec."""
        argv = [self.command, "--n", str(self.n), "--mode", self.mode,
                "--P", self.p_expr, "--M", self.m_expr,
                "--window", str(self.window),
                "--gen-bound", str(self.gen_bound)]
        if self.as_json:
            argv.append("--json")
        return argv


@dataclass
class Report:
    spec: JobSpec
    verdict: str
    certified: bool
    details: List[str] = field(default_factory=list)
    elapsed_ms: int = 0

    def as_dict(self) -> dict:
        s = self.spec
        return {
            "command": s.command, "n": s.n, "mode": s.mode,
            "P": s.p_expr, "M": s.m_expr,
            "window": s.window, "genBound": s.gen_bound,
            "verdict": self.verdict, "certified": self.certified,
            "details": list(self.details), "elapsedMs": self.elapsed_ms,
        }

    def render_text(self) -> str:
        s = self.spec
        lines = [
            "command:   %s" % s.command,
            "instance:  n=%d, mode=%s, P=%s, M=%s" % (s.n, s.mode,
                                                      s.p_expr, s.m_expr),
            "window:    D=%d, A=%d" % (s.window, s.gen_bound),
            "verdict:   %s%s" % (self.verdict,
                                 " [certified]" if self.certified else ""),
        ]
        lines.extend("  - %s" % d for d in self.details)
        lines.append("elapsed:   %d ms" % self.elapsed_ms)
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# expression parsing
# ---------------------------------------------------------------------------

def _split_call(expr: str) -> Tuple[str, Optional[List[str]]]:
    """`Head` or `Head(a,b,...)` with top-level comma splitting."""
    expr = expr.strip()
    if "(" not in expr:
        if ")" in expr or "," in expr:
            raise UsageError("malformed expression %r" % expr)
        return expr, None
    head, rest = expr.split("(", 1)
    if not rest.endswith(")"):
        raise UsageError("unbalanced parentheses in %r" % expr)
    body = rest[:-1]
    args, cur, depth = [], [], 0
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise UsageError("unbalanced parentheses in %r" % expr)
        if ch == "," and depth == 0:
            args.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise UsageError("unbalanced parentheses in %r" % expr)
    args.append("".join(cur).strip())
    if any(not a for a in args):
        raise UsageError("empty argument in %r" % expr)
    return head.strip(), args


def _scalar_literal(tok: str, expr: str) -> Scalar:
    """Leading letter -> field parameter; otherwise integer or p/q."""
    if tok[0].isalpha():
        if not tok.isalnum():
            raise UsageError("bad parameter name %r in %r" % (tok, expr))
        return Scalar.param(tok)
    try:
        if "/" in tok:
            num, den = tok.split("/", 1)
            return Scalar.rational(int(num), int(den))
        return Scalar.integer(int(tok))
    except (ValueError, ZeroDivisionError):
        raise UsageError("bad numeric literal %r in %r" % (tok, expr))


def _int_literal(tok: str, expr: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise UsageError("expected an integer, got %r in %r" % (tok, expr))


def _rank_one_factor(tok: str):
    head, args = _split_call(tok)
    if head == "Apoly" and args is None:
        return PolyFactor()
    if head == "Alaurent" and args is None:
        return LaurentFactor()
    if head == "Quot" and args is None:
        return QuotFactor()
    if head == "TL" and args is not None and len(args) == 1:
        return TwistedFactor(_scalar_literal(args[0], tok))
    if head == "Whittaker" and args is not None and len(args) == 1:
        return WhittakerFactor(_scalar_literal(args[0], tok))
    raise UsageError("unknown rank-1 factor %r" % tok)


def parse_p(expr: str, n: int) -> WeylModule:
    head, args = _split_call(expr)
    try:
        if head == "Apoly" and args is None:
            return apoly(n)
        if head == "Alaurent" and args is None:
            return alaurent(n)
        if head == "Quot" and args is None:
            return laurent_quot(n)
        if head in ("TL", "Whittaker"):
            if args is None or len(args) != n:
                raise UsageError("%s needs exactly %d parameters for n=%d"
                                 % (expr, n, n))
            params = [_scalar_literal(a, expr) for a in args]
            return (twisted_laurent if head == "TL" else whittaker)(params)
        if head == "Tensor":
            if args is None or len(args) != n:
                raise UsageError("Tensor needs exactly %d rank-1 factors "
                                 "for n=%d, got %r" % (n, n, expr))
            return tensor_factors([_rank_one_factor(a) for a in args])
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError("%s in %r" % (exc, expr))
    raise UsageError("unknown P kind %r" % expr)


def _split_tensor(expr: str) -> List[str]:
    parts, cur, depth = [], [], 0
    for ch in expr:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    if any(not p for p in parts):
        raise UsageError("malformed tensor expression %r" % expr)
    return parts


def parse_m(expr: str, n: int) -> GlModule:
    factors = _split_tensor(expr)
    out = None
    for tok in factors:
        head, args = _split_call(tok)
        if head == "Nat" and args is None:
            mod = natural_module(n)
        elif head == "Ext" and args is not None and len(args) == 1:
            k = _int_literal(args[0], tok)
            if not 0 <= k <= n:
                raise UsageError("Ext(%d) invalid for n=%d" % (k, n))
            mod = exterior_power(n, k)
        elif head == "Sym" and args is not None and len(args) == 1:
            k = _int_literal(args[0], tok)
            if k < 0:
                raise UsageError("Sym(%d) invalid" % k)
            mod = sym_power(n, k)
        elif head == "Triv" and args is not None and len(args) == 1:
            mod = scalar_module(n, _scalar_literal(args[0], tok))
        else:
            raise UsageError("unknown M kind %r" % tok)
        out = mod if out is None else tensor_module(out, mod)
    return out


# ---------------------------------------------------------------------------
# flag parsing
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="wittmod", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--n", type=int, default=2,
                       help="number of variables (default 2)")
        p.add_argument("--mode", choices=(PLUS, LAURENT), default=PLUS,
                       help="operator algebra: one- or two-sided exponents")
        p.add_argument("--P", default="Apoly",
                       help="module expression over the operator variables")
        p.add_argument("--M", default="Triv(0)",
                       help="matrix-part module expression")
        p.add_argument("--window", type=int, default=None,
                       help="window depth D (default %d, or $%s)"
                            % (DEFAULT_WINDOW, WINDOW_ENV))
        p.add_argument("--gen-bound", type=int, default=None,
                       help="operator degree bound A (default D+1)")
        p.add_argument("--json", action="store_true",
                       help="emit a machine-readable report")
    return top


def parse_spec(argv: Sequence[str]) -> JobSpec:
    ns = _build_parser().parse_args(list(argv))
    if ns.n < 2:
        raise UsageError("--n must be at least 2, got %d" % ns.n)
    window = ns.window
    if window is None:
        env = os.environ.get(WINDOW_ENV)
        if env is not None:
            try:
                window = int(env)
            except ValueError:
                raise UsageError("bad %s value %r" % (WINDOW_ENV, env))
        else:
            window = DEFAULT_WINDOW
    if window < 1:
        raise UsageError("--window must be at least 1, got %d" % window)
    gen_bound = ns.gen_bound if ns.gen_bound is not None else window + 1
    if gen_bound < 1:
        raise UsageError("--gen-bound must be at least 1, got %d" % gen_bound)
    spec = JobSpec(command=ns.command, n=ns.n, mode=ns.mode,
                   p_expr=ns.P.strip(), m_expr=ns.M.strip(),
                   window=window, gen_bound=gen_bound, as_json=ns.json)
    _validate(spec)
    return spec


def _validate(spec: JobSpec) -> Tuple[WeylModule, GlModule]:
    P = parse_p(spec.p_expr, spec.n)
    M = parse_m(spec.m_expr, spec.n)
    # verify-shen works in the operator algebra alone, so any mode stands
    if (spec.command != "verify-shen" and spec.mode == LAURENT
            and P.mode != LAURENT):
        raise UsageError("mode laurent invalid for P=%s (one-sided basis)"
                         % spec.p_expr)
    return P, M


# ---------------------------------------------------------------------------
# command bodies: each returns (verdict, certified, details, ok)
# ---------------------------------------------------------------------------

def _run_verify_shen(spec, P, M):
    n, bound = spec.n, spec.gen_bound
    if spec.mode == PLUS:
        elems = [WittElement.monomial(n, PLUS, a, j, ONE)
                 for a in exponents_within(n, bound, PLUS)
                 for j in range(1, n + 1)]
        pairs = list(itertools.combinations(elems, 2))
        how = "exhaustive |alpha| <= %d" % bound
    else:
        rng = random.Random(1923)
        pairs = []
        for _ in range(200):
            a = tuple(rng.randint(-bound, bound) for _ in range(n))
            b = tuple(rng.randint(-bound, bound) for _ in range(n))
            pairs.append((WittElement.monomial(n, LAURENT, a,
                                               rng.randint(1, n), ONE),
                          WittElement.monomial(n, LAURENT, b,
                                               rng.randint(1, n), ONE)))
        how = "randomized two-sided exponents in [-%d, %d]" % (bound, bound)
    for x, y in pairs:
        if shen_tau(witt_bracket(x, y)) != \
                toroidal_bracket(shen_tau(x), shen_tau(y)):
            return ("embedding does not respect brackets", False,
                    ["mismatch at x=%s, y=%s" % (x, y)], False)
    details = ["%d monomial pairs checked (%s)" % (len(pairs), how),
               "tau[x,y] = [tau x, tau y] exactly in every case"]
    return "embedding respects brackets", True, details, True


def _run_verify_axioms(spec, P, M):
    F = FPModule(P, M)
    bound = spec.gen_bound
    ok1, pairs, note1 = check_action_axiom(F, bound, spec.window)
    details = ["action axiom on %s: %d operator pairs checked"
               % (F.name, pairs)]
    if not ok1:
        return "action axiom fails", False, details + [note1], False
    ok2, checked, note2 = check_chain_map(P, bound, spec.window)
    details.append("chain maps over %s: %d intertwining and composite "
                   "checks" % (P.kind, checked))
    if not ok2:
        return "chain-map identity fails", False, details + [note2], False
    return "module axioms hold on the window", True, details, True


def _run_complex(spec, P, M):
    h = complex_homology(P, spec.window)
    details = []
    order = lambda k: (k[0], k[1] is None, k[1] if k[1] is not None else 0)
    for key in sorted(h.table, key=order):
        r, level = key
        where = "level %s" % level if level is not None else "window total"
        details.append("r=%d, %s: dim %d" % (r, where, h.table[key]))
    if h.excluded:
        details.append("%d graded pieces excluded at the window edge"
                       % h.excluded)
    nz = h.nonzero()
    verdict = ("homology vanishes on the window" if not nz
               else "nonzero homology at %d position%s"
               % (len(nz), "" if len(nz) == 1 else "s"))
    return verdict, True, details, True


def _run_irreducible(spec, P, M):
    rep = irreducibility_report(P, M, spec.window, spec.gen_bound)
    ok = rep.certified or rep.verdict == "skipped"
    details = ["branch: %s" % rep.branch] + list(rep.details)
    return rep.verdict, rep.certified, details, ok


def _run_support(spec, P, M):
    try:
        sup = weight_support(P, M, spec.window)
    except ValueError as exc:
        raise UsageError("%s: P=%s, M=%s" % (exc, spec.p_expr, spec.m_expr))
    shown = sorted("(%s)" % ", ".join(str(x) for x in w) for w in sup)
    return ("%d distinct weights on the window" % len(sup), True,
            shown, True)


def _run_fingerprint(spec, P, M):
    fp = fingerprint(P, M, spec.window)
    details = ["kind: %s" % fp.kind]
    details.extend("%s: %d" % (label, mult) for label, mult in fp.entries)
    return "fingerprint with %d entries" % len(fp.entries), True, details, True


def _run_torsion(spec, P, M):
    F = FPModule(P, M)
    rng = random.Random(8128)
    win = F.window_basis(spec.window)
    exps = exponents_within(spec.n, min(spec.gen_bound, 3), F.mode)
    samples = 100
    for _ in range(samples):
        vec = vec_clean({rng.choice(win): Scalar.integer(rng.randint(-3, 3))
                         for _ in range(2)})
        l, i, j = (rng.randint(1, spec.n) for _ in range(3))
        alpha = rng.choice(exps)
        if not torsion_matches(F, l, i, j, alpha, vec):
            return ("torsion operator deviates from its closed form", False,
                    ["mismatch at l=%d, i=%d, j=%d, alpha=%s" %
                     (l, i, j, alpha)], False)
    details = ["%d randomized inputs on %s, exponents bounded by %d"
               % (samples, F.name, min(spec.gen_bound, 3)),
               "interpolated operator matches its closed form in every case"]
    return "torsion identity holds on all samples", True, details, True


_BODIES = {
    "verify-shen": _run_verify_shen,
    "verify-axioms": _run_verify_axioms,
    "complex": _run_complex,
    "irreducible": _run_irreducible,
    "support": _run_support,
    "fingerprint": _run_fingerprint,
    "torsion": _run_torsion,
}


def run(spec: JobSpec) -> Tuple[Report, int]:
    """Execute a job; returns the report and the process exit code."""
    P, M = _validate(spec)
    start = time.monotonic()
    try:
        verdict, certified, details, ok = _BODIES[spec.command](spec, P, M)
    except UsageError:
        raise
    except ValueError as exc:  # library precondition -> usage error
        raise UsageError(str(exc))
    elapsed = int((time.monotonic() - start) * 1000)
    return Report(spec, verdict, certified, details, elapsed), 0 if ok else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        spec = parse_spec(argv)
        report, code = run(spec)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    if spec.as_json:
        print(json.dumps(report.as_dict(), indent=2))
    else:
        print(report.render_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
