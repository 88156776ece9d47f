"""Exact scalars and exact linear algebra over the field Q(l1, ..., lm).

A scalar is a reduced fraction num/den of multivariate polynomials with
integer coefficients in named parameters.  Polynomials are sparse dicts
mapping a monomial to a nonzero int coefficient; a monomial is a tuple of
(name, exponent) pairs sorted by name with every exponent > 0, so the
constant monomial is the empty tuple and the zero polynomial is {}.

Canonical form, enforced on every Scalar: the denominator is nonzero, the
poly gcd of num and den (including integer content) is 1, and the leading
coefficient of den under graded-lex order is positive.  Equality and
hashing are therefore structural.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd as _igcd
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

Mono = Tuple[Tuple[str, int], ...]
Poly = Dict[Mono, int]

_PONE: Poly = {(): 1}


# ---------------------------------------------------------------------------
# raw polynomial helpers
# ---------------------------------------------------------------------------

def _pconst(c: int) -> Poly:
    return {(): c} if c else {}


def _pvar(name: str) -> Poly:
    return {((name, 1),): 1}


def _is_const(f: Poly) -> bool:
    return not f or (len(f) == 1 and () in f)


def _padd(f: Poly, g: Poly) -> Poly:
    out = dict(f)
    for m, c in g.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def _pneg(f: Poly) -> Poly:
    return {m: -c for m, c in f.items()}


def _psub(f: Poly, g: Poly) -> Poly:
    out = dict(f)
    for m, c in g.items():
        s = out.get(m, 0) - c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for n, e in b:
        d[n] = d.get(n, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(a: Mono, b: Mono) -> Optional[Mono]:
    """a / b, or None when b does not divide a."""
    d = dict(a)
    for n, e in b:
        r = d.get(n, 0) - e
        if r < 0:
            return None
        if r:
            d[n] = r
        else:
            d.pop(n, None)
    return tuple(sorted(d.items()))


def _pmul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return {}
    if _is_const(f):
        c = f[()]
        return {m: c * cc for m, cc in g.items()}
    if _is_const(g):
        c = g[()]
        return {m: c * cc for m, cc in f.items()}
    out: Poly = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = _mono_mul(m1, m2)
            s = out.get(m, 0) + c1 * c2
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def _mono_deg(m: Mono) -> int:
    return sum(e for _, e in m)


def _mono_gt(a: Mono, b: Mono) -> bool:
    """Graded-lex order, alphabetically earlier names take priority."""
    da, db = _mono_deg(a), _mono_deg(b)
    if da != db:
        return da > db
    ia, ib = dict(a), dict(b)
    for n in sorted(set(ia) | set(ib)):
        ea, eb = ia.get(n, 0), ib.get(n, 0)
        if ea != eb:
            return ea > eb
    return False


def _plead(f: Poly) -> Mono:
    best = None
    for m in f:
        if best is None or _mono_gt(m, best):
            best = m
    assert best is not None
    return best


def _pdeg(f: Poly) -> int:
    return max((_mono_deg(m) for m in f), default=0)


def _icontent(f: Poly) -> int:
    c = 0
    for v in f.values():
        c = _igcd(c, abs(v))
        if c == 1:
            return 1
    return c


def _pdiv_exact(f: Poly, g: Poly) -> Poly:
    """Exact division f / g; raises ArithmeticError if g does not divide f."""
    if not f:
        return {}
    if not g:
        raise ArithmeticError("division by zero polynomial")
    if _is_const(g):
        c = g[()]
        if c == 1:
            return dict(f)
        out = {}
        for m, cc in f.items():
            q, r = divmod(cc, c)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out[m] = q
        return out
    out: Poly = {}
    r = dict(f)
    lg = _plead(g)
    lcg = g[lg]
    while r:
        lr = _plead(r)
        qm = _mono_div(lr, lg)
        if qm is None:
            raise ArithmeticError("inexact polynomial division")
        qc, rem = divmod(r[lr], lcg)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        out[qm] = out.get(qm, 0) + qc
        for m, c in g.items():
            mm = _mono_mul(qm, m)
            s = r.get(mm, 0) - qc * c
            if s:
                r[mm] = s
            else:
                r.pop(mm, None)
    return {m: c for m, c in out.items() if c}


def _pvars(f: Poly) -> set:
    vs = set()
    for m in f:
        for n, _ in m:
            vs.add(n)
    return vs


def _ppos(f: Poly) -> Poly:
    """Normalize sign so the graded-lex leading coefficient is positive."""
    if not f:
        return f
    return _pneg(f) if f[_plead(f)] < 0 else f


def _as_univ(f: Poly, x: str) -> Dict[int, Poly]:
    out: Dict[int, Poly] = {}
    for m, c in f.items():
        e = 0
        rest = []
        for n, ee in m:
            if n == x:
                e = ee
            else:
                rest.append((n, ee))
        out.setdefault(e, {})[tuple(rest)] = c
    return out


def _from_univ(u: Dict[int, Poly], x: str) -> Poly:
    out: Poly = {}
    for e, p in u.items():
        for m, c in p.items():
            mm = _mono_mul(m, ((x, e),)) if e else m
            out[mm] = c
    return out


def _gcd_many(polys: Iterable[Poly]) -> Poly:
    g: Poly = {}
    for p in polys:
        g = _pgcd(g, p)
        if g == _PONE:
            return g
    return g


def _univ_prim(u: Dict[int, Poly]) -> Dict[int, Poly]:
    if not u:
        return u
    cont = _gcd_many(u.values())
    if cont == _PONE:
        return u
    return {e: _pdiv_exact(p, cont) for e, p in u.items()}


def _prem_univ(a: Dict[int, Poly], b: Dict[int, Poly]) -> Dict[int, Poly]:
    """Pseudo-remainder of a by b, both nonzero univariate views, deg a >= deg b."""
    db = max(b)
    lb = b[db]
    r = a
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        new: Dict[int, Poly] = {e: _pmul(lb, p) for e, p in r.items()}
        shift = dr - db
        for e, p in b.items():
            ee = e + shift
            new[ee] = _psub(new.get(ee, {}), _pmul(lr, p))
        new.pop(dr, None)
        r = {e: p for e, p in new.items() if p}
    return r


def _pgcd(f: Poly, g: Poly) -> Poly:
    """GCD in Z[params] including integer content, positive leading coeff."""
    if not f:
        return _ppos(g)
    if not g:
        return _ppos(f)
    if _is_const(f) or _is_const(g):
        return _pconst(_igcd(_icontent(f), _icontent(g)))
    common = sorted(_pvars(f) & _pvars(g))
    if not common:
        return _pconst(_igcd(_icontent(f), _icontent(g)))
    x = common[0]
    uf, ug = _as_univ(f, x), _as_univ(g, x)
    cf, cg = _gcd_many(uf.values()), _gcd_many(ug.values())
    c = _pgcd(cf, cg)
    a = {e: _pdiv_exact(p, cf) for e, p in uf.items()} if cf != _PONE else uf
    b = {e: _pdiv_exact(p, cg) for e, p in ug.items()} if cg != _PONE else ug
    if max(a) < max(b):
        a, b = b, a
    while b:
        r = _prem_univ(a, b)
        a, b = b, _univ_prim(r)
    return _ppos(_pmul(c, _from_univ(a, x)))


def _poly_str(f: Poly) -> str:
    if not f:
        return "0"
    monos = sorted(f, key=lambda m: (_mono_deg(m), m))
    monos.reverse()
    # graded order with deterministic tie-break; fine for display
    parts = []
    for m in monos:
        c = f[m]
        body = "*".join(n if e == 1 else "%s^%d" % (n, e) for n, e in m)
        if not body:
            term = str(abs(c))
        elif abs(c) == 1:
            term = body
        else:
            term = "%d*%s" % (abs(c), body)
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------

class Scalar:
    """An element of Q(l1, ..., lm) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly, _reduced: bool = False):
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash: Optional[int] = None

    # -- constructors

    @staticmethod
    def integer(k: int) -> "Scalar":
        return Scalar(_pconst(k), dict(_PONE), _reduced=True)

    @staticmethod
    def rational(p: int, q: int = 1) -> "Scalar":
        return Scalar(_pconst(p), _pconst(q))

    @staticmethod
    def from_fraction(x: Fraction) -> "Scalar":
        return Scalar(_pconst(x.numerator), _pconst(x.denominator), _reduced=True)

    @staticmethod
    def param(name: str) -> "Scalar":
        if not name or not name[0].isalpha():
            raise ValueError("parameter name must start with a letter: %r" % name)
        return Scalar(_pvar(name), dict(_PONE), _reduced=True)

    # -- predicates and views

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _PONE and self.den == _PONE

    def is_rational(self) -> bool:
        return _is_const(self.num) and _is_const(self.den)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("scalar is not rational: %s" % self)
        return Fraction(self.num.get((), 0), self.den[()])

    def constant_part(self) -> Optional[Fraction]:
        """Value at all parameters = 0, or None when the denominator vanishes."""
        d = self.den.get((), 0)
        if d == 0:
            return None
        return Fraction(self.num.get((), 0), d)

    def total_degree(self) -> int:
        return _pdeg(self.num) + _pdeg(self.den)

    # -- arithmetic

    def __add__(self, other: "Scalar") -> "Scalar":
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not n1:
            return other
        if not n2:
            return self
        if d1 == _PONE and d2 == _PONE:
            return Scalar(_padd(n1, n2), dict(_PONE), _reduced=True)
        if d1 == d2:
            return Scalar(_padd(n1, n2), d1)
        return Scalar(_padd(_pmul(n1, d2), _pmul(n2, d1)), _pmul(d1, d2))

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __neg__(self) -> "Scalar":
        return Scalar(_pneg(self.num), self.den, _reduced=True)

    def __mul__(self, other: "Scalar") -> "Scalar":
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not n1 or not n2:
            return _S_ZERO
        if d1 == _PONE and d2 == _PONE:
            return Scalar(_pmul(n1, n2), dict(_PONE), _reduced=True)
        # cross-cancel before multiplying to limit growth
        g1 = _pgcd(n1, d2)
        if g1 != _PONE:
            n1, d2 = _pdiv_exact(n1, g1), _pdiv_exact(d2, g1)
        g2 = _pgcd(n2, d1)
        if g2 != _PONE:
            n2, d1 = _pdiv_exact(n2, g2), _pdiv_exact(d1, g2)
        num, den = _pmul(n1, n2), _pmul(d1, d2)
        if den[_plead(den)] < 0:
            num, den = _pneg(num), _pneg(den)
        return Scalar(num, den, _reduced=True)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if not other.num:
            raise ZeroDivisionError("zero divisor")
        return self * Scalar(other.den, other.num)

    def inv(self) -> "Scalar":
        if not self.num:
            raise ZeroDivisionError("zero divisor")
        return Scalar(self.den, self.num)

    # -- comparison / hashing / display

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Scalar.integer(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self.num.items()),
                               frozenset(self.den.items())))
        return self._hash

    def __str__(self) -> str:
        if self.den == _PONE:
            return _poly_str(self.num)
        ns = _poly_str(self.num)
        if len(self.num) > 1:
            ns = "(%s)" % ns
        ds = _poly_str(self.den)
        if len(self.den) > 1 or _pdeg(self.den) > 0:
            ds = "(%s)" % ds
        return "%s/%s" % (ns, ds)

    def __repr__(self) -> str:
        return "Scalar(%s)" % self

    def __bool__(self) -> bool:
        return bool(self.num)


def _reduce(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    if not den:
        raise ZeroDivisionError("zero divisor")
    if not num:
        return {}, dict(_PONE)
    if _is_const(num) and _is_const(den):
        p, q = num[()], den[()]
        g = _igcd(p, q)
        if q < 0:
            g = -g
        p //= g
        q //= g
        return _pconst(p), _pconst(q)
    g = _pgcd(num, den)
    if g != _PONE:
        num, den = _pdiv_exact(num, g), _pdiv_exact(den, g)
    if den[_plead(den)] < 0:
        num, den = _pneg(num), _pneg(den)
    return num, den


_S_ZERO = Scalar.integer(0)
_S_ONE = Scalar.integer(1)

ZERO = _S_ZERO
ONE = _S_ONE


# ---------------------------------------------------------------------------
# sparse vectors and incremental echelon accumulation
# ---------------------------------------------------------------------------

Vec = Dict  # coordinate (any sortable hashable) -> Scalar


def vec_add(u: Vec, v: Vec) -> Vec:
    out = dict(u)
    for c, x in v.items():
        s = out.get(c)
        s = x if s is None else s + x
        if s.is_zero():
            out.pop(c, None)
        else:
            out[c] = s
    return out


def vec_scale(u: Vec, a: Scalar) -> Vec:
    if a.is_zero():
        return {}
    return {c: a * x for c, x in u.items()}


def vec_sub(u: Vec, v: Vec) -> Vec:
    out = dict(u)
    for c, x in v.items():
        s = out.get(c)
        s = -x if s is None else s - x
        if s.is_zero():
            out.pop(c, None)
        else:
            out[c] = s
    return out


def vec_clean(u: Vec) -> Vec:
    return {c: x for c, x in u.items() if not x.is_zero()}


class Echelon:
    """Incremental reduced row-echelon accumulator over sparse Scalar vectors.

    Coordinates may be any mutually sortable hashable values.  Rows are kept
    monic, keyed by their leading (smallest) coordinate, and mutually reduced,
    so two accumulators span the same subspace iff their row dicts are equal.
    """

    def __init__(self):
        self.rows: Dict[object, Vec] = {}

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Vec) -> Vec:
        """Fully reduce vec against the accumulated rows; returns the residual."""
        v = {c: x for c, x in vec.items() if not x.is_zero()}
        heap = list(v)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            x = v.get(c)
            if x is None or x.is_zero():
                v.pop(c, None)
                continue
            row = self.rows.get(c)
            if row is None:
                continue
            del v[c]
            for cc, y in row.items():
                if cc == c:
                    continue
                s = v.get(cc)
                prod = x * y
                s = -prod if s is None else s - prod
                if s.is_zero():
                    v.pop(cc, None)
                else:
                    if cc not in v:
                        heapq.heappush(heap, cc)
                    v[cc] = s
        return vec_clean(v)

    def contains(self, vec: Vec) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Vec) -> bool:
        """Insert vec's residual; True if the span grew."""
        r = self.reduce(vec)
        if not r:
            return False
        lead = min(r)
        inv = r[lead].inv()
        row = {c: inv * x for c, x in r.items()}
        # keep earlier rows reduced against the new one
        for lc, old in list(self.rows.items()):
            x = old.get(lead)
            if x is None:
                continue
            new = dict(old)
            del new[lead]
            for cc, y in row.items():
                if cc == lead:
                    continue
                s = new.get(cc)
                prod = x * y
                s = -prod if s is None else s - prod
                if s.is_zero():
                    new.pop(cc, None)
                else:
                    new[cc] = s
            self.rows[lc] = new
        self.rows[lead] = row
        return True

    def basis(self) -> List[Vec]:
        return [self.rows[c] for c in sorted(self.rows)]

    def same_span(self, other: "Echelon") -> bool:
        return self.rows == other.rows


def span_dim(vectors: Iterable[Vec]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.dim


def in_span(vectors: Iterable[Vec], target: Vec) -> bool:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.contains(target)


def coordinate_block_intersection(vectors: Iterable[Vec],
                                  in_block) -> List[Vec]:
    """Basis of span(vectors) ∩ span{coordinates c with in_block(c)}.

    Coordinates outside the block are ordered first, so echelon rows led by
    a block coordinate are supported entirely inside the block; those rows
    are exactly a basis of the intersection.
    """
    ech = Echelon()
    for v in vectors:
        ech.add({(1 if in_block(c) else 0, c): x for c, x in v.items()})
    out = []
    for lead in sorted(ech.rows):
        if lead[0] == 1:
            out.append({c: x for (_, c), x in ech.rows[lead].items()})
    return out


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class ExactMatrix:
    """Sparse matrix over Scalar; rows are dicts col -> nonzero Scalar."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int,
                 rows: Optional[List[Vec]] = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [dict() for _ in range(nrows)] if rows is None else rows

    @staticmethod
    def from_entries(nrows: int, ncols: int, entries) -> "ExactMatrix":
        """entries: mapping (i, j) -> Scalar (zeros allowed, dropped)."""
        m = ExactMatrix(nrows, ncols)
        for (i, j), x in entries.items():
            if not x.is_zero():
                m.rows[i][j] = x
        return m

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        m = ExactMatrix(n, n)
        for i in range(n):
            m.rows[i][i] = _S_ONE
        return m

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i].get(j, _S_ZERO)

    def set_entry(self, i: int, j: int, x: Scalar) -> None:
        if x.is_zero():
            self.rows[i].pop(j, None)
        else:
            self.rows[i][j] = x

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.nrows, self.ncols,
                     tuple(frozenset(r.items()) for r in self.rows)))

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def add(self, other: "ExactMatrix") -> "ExactMatrix":
        assert self.nrows == other.nrows and self.ncols == other.ncols
        return ExactMatrix(self.nrows, self.ncols,
                           [vec_add(a, b) for a, b in zip(self.rows, other.rows)])

    def sub(self, other: "ExactMatrix") -> "ExactMatrix":
        assert self.nrows == other.nrows and self.ncols == other.ncols
        return ExactMatrix(self.nrows, self.ncols,
                           [vec_sub(a, b) for a, b in zip(self.rows, other.rows)])

    def scale(self, a: Scalar) -> "ExactMatrix":
        return ExactMatrix(self.nrows, self.ncols,
                           [vec_scale(r, a) for r in self.rows])

    def mul(self, other: "ExactMatrix") -> "ExactMatrix":
        assert self.ncols == other.nrows
        out = ExactMatrix(self.nrows, other.ncols)
        for i, row in enumerate(self.rows):
            acc: Vec = {}
            for k, x in row.items():
                for j, y in other.rows[k].items():
                    s = acc.get(j)
                    prod = x * y
                    s = prod if s is None else s + prod
                    if s.is_zero():
                        acc.pop(j, None)
                    else:
                        acc[j] = s
            out.rows[i] = acc
        return out

    def apply(self, v: Sequence[Scalar]) -> List[Scalar]:
        out = []
        for row in self.rows:
            acc = _S_ZERO
            for j, x in row.items():
                if not v[j].is_zero():
                    acc = acc + x * v[j]
            out.append(acc)
        return out

    def apply_sparse(self, v: Vec) -> Vec:
        """Apply to a sparse column vector {index: Scalar}."""
        acc: Vec = {}
        for j, xv in v.items():
            for i, row in enumerate(self.rows):
                x = row.get(j)
                if x is None:
                    continue
                s = acc.get(i)
                prod = x * xv
                s = prod if s is None else s + prod
                if s.is_zero():
                    acc.pop(i, None)
                else:
                    acc[i] = s
        return acc

    def column(self, j: int) -> Vec:
        out = {}
        for i, row in enumerate(self.rows):
            x = row.get(j)
            if x is not None:
                out[i] = x
        return out

    def __str__(self) -> str:
        lines = []
        for row in self.rows:
            lines.append("[" + ", ".join(str(row.get(j, _S_ZERO))
                                         for j in range(self.ncols)) + "]")
        return "\n".join(lines)


def _rref(mat: ExactMatrix) -> Tuple[List[Vec], List[Tuple[int, int]]]:
    """Reduced row echelon form; pivots chosen by smallest total degree.

    Returns (rows, pivots) where pivots is a list of (col, row_index).
    """
    rows = [dict(r) for r in mat.rows]
    pivoted: set = set()
    pivots: List[Tuple[int, int]] = []
    for col in range(mat.ncols):
        best = None
        for ri, row in enumerate(rows):
            if ri in pivoted:
                continue
            x = row.get(col)
            if x is None:
                continue
            d = x.total_degree()
            if best is None or d < best[0]:
                best = (d, ri)
        if best is None:
            continue
        ri = best[1]
        row = rows[ri]
        inv = row[col].inv()
        row = {c: inv * x for c, x in row.items()}
        rows[ri] = row
        for rj, other in enumerate(rows):
            if rj == ri:
                continue
            x = other.get(col)
            if x is None:
                continue
            new = dict(other)
            del new[col]
            for cc, y in row.items():
                if cc == col:
                    continue
                s = new.get(cc)
                prod = x * y
                s = -prod if s is None else s - prod
                if s.is_zero():
                    new.pop(cc, None)
                else:
                    new[cc] = s
            rows[rj] = new
        pivoted.add(ri)
        pivots.append((col, ri))
    return rows, pivots


def rank(mat: ExactMatrix) -> int:
    return len(_rref(mat)[1])


def kernel_basis(mat: ExactMatrix) -> List[List[Scalar]]:
    """Basis of the right null space, one vector per free column."""
    rows, pivots = _rref(mat)
    pivot_cols = {col: ri for col, ri in pivots}
    basis = []
    for free in range(mat.ncols):
        if free in pivot_cols:
            continue
        v = [_S_ZERO] * mat.ncols
        v[free] = _S_ONE
        for col, ri in pivots:
            x = rows[ri].get(free)
            if x is not None:
                v[col] = -x
        basis.append(v)
    return basis
