"""Witt-algebra modules F(P, M) = P (x) M and their windowed submodules.

The monomial vector field t^a d_j acts on a pure tensor p (x) w by

    (t^a d_j p) (x) w  +  sum_i a_i (t^(a - e_i) p) (x) E(i,j) w,

the pullback of the toroidal action along the Jacobian embedding.  Actions
are always computed exactly on sparse vectors; windows (P-level <= D) enter
only when enumerating bases for rank and membership questions.

Provided machinery: the de Rham-style chain maps pi_k between the
F(P, Ext(k)), the image and transporter subspaces they cut out of a window,
the quadratic-interpolation torsion operator, fixed-point submodule
closures, windowed homology tables, irreducibility reports, weight
supports, and coarse isomorphism fingerprints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from wittmod.exactnum import (
    Echelon, ExactMatrix, ONE, Scalar, coordinate_block_intersection,
    kernel_basis, vec_add, vec_clean, vec_scale, vec_sub,
)
from wittmod.glmod import (
    GlModule, exterior_power, is_fundamental_exterior, is_irreducible,
)
from wittmod.liealg import WittElement, witt_bracket
from wittmod.polyalg import LAURENT, PLUS, MultiIndex, exponents_within, unit_index
from wittmod.weylmod import WeylModule

Cell = Tuple  # (P basis index, M basis index)
FPMVector = Dict  # Cell -> Scalar


def _acc(out: FPMVector, key: Cell, val: Scalar) -> None:
    s = out.get(key)
    s = val if s is None else s + val
    if s.is_zero():
        out.pop(key, None)
    else:
        out[key] = s


def _subsets(n: int, k: int) -> List[Tuple[int, ...]]:
    return list(itertools.combinations(range(1, n + 1), k))


def _indicator(n: int, s: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(1 if i in s else 0 for i in range(1, n + 1))


class FPModule:
    """P (x) M with the pulled-back Witt action.

    Vectors are sparse dicts {(P-index, M-index): Scalar}.  Monomial
    actions on basis cells are memoized, so repeated operator sweeps over
    a window pay for each (operator, cell) pair once.
    """

    def __init__(self, P: WeylModule, M: GlModule):
        if P.n != M.n:
            raise ValueError(
                "rank mismatch: P has n=%d, M has n=%d" % (P.n, M.n))
        self.P = P
        self.M = M
        self.n = P.n
        self.mode = P.mode
        self.name = "F(%s, %s)" % (P.kind, M.name)
        self._cell_cache: Dict[Tuple, FPMVector] = {}

    def window_basis(self, D: int) -> List[Cell]:
        return [(pidx, m)
                for pidx in self.P.window_basis(D)
                for m in range(self.M.dim)]

    def level(self, cell: Cell) -> int:
        return self.P.level(cell[0])

    def truncate(self, vec: FPMVector, D: int) -> FPMVector:
        return {c: x for c, x in vec.items() if self.P.level(c[0]) <= D}

    def label(self, cell: Cell) -> str:
        return "%s(x)%s" % (self.P.label(cell[0]), self.M.labels[cell[1]])

    def act_cell(self, alpha: MultiIndex, j: int, cell: Cell) -> FPMVector:
        """t^alpha d_j applied to a single basis cell (memoized)."""
        key = (alpha, j, cell)
        hit = self._cell_cache.get(key)
        if hit is not None:
            return hit
        pidx, midx = cell
        out: FPMVector = {}
        for p2, c in self.P.act_witt_monomial(alpha, j, {pidx: ONE}).items():
            _acc(out, (p2, midx), c)
        for i in range(1, self.n + 1):
            a_i = alpha[i - 1]
            if a_i == 0:
                continue
            shifted = alpha[:i - 1] + (a_i - 1,) + alpha[i:]
            tpart = self.P.act_t_monomial(shifted, {pidx: ONE})
            if not tpart:
                continue
            col = self.M.act_column(i, j, midx)
            if not col:
                continue
            ai = Scalar.integer(a_i)
            for p2, cp in tpart.items():
                w = ai * cp
                for m2, cm in col.items():
                    _acc(out, (p2, m2), w * cm)
        self._cell_cache[key] = out
        return out

    def act(self, alpha: MultiIndex, j: int, vec: FPMVector) -> FPMVector:
        out: FPMVector = {}
        for cell, c in vec.items():
            img = self.act_cell(tuple(alpha), j, cell)
            if c.is_one():
                for k2, x in img.items():
                    _acc(out, k2, x)
            else:
                for k2, x in img.items():
                    _acc(out, k2, c * x)
        return out

    def act_witt(self, x: WittElement, vec: FPMVector) -> FPMVector:
        if x.n != self.n:
            raise ValueError("operator arity mismatch")
        out: FPMVector = {}
        for alpha, j, c in x.monomials():
            img = self.act(alpha, j, vec)
            for k2, v in img.items():
                _acc(out, k2, c * v)
        return out

    def weight_of(self, cell: Cell) -> Tuple[Scalar, ...]:
        """Joint eigenvalue of the t_j d_j on a basis cell."""
        pw = self.P.weight(cell[0])
        if pw is None:
            raise ValueError("not a weight module")
        mw = self.M.diagonal_weight(cell[1])
        return tuple(a + b for a, b in zip(pw, mw))

    def __repr__(self) -> str:
        return "FPModule(%s)" % self.name


# ---------------------------------------------------------------------------
# chain maps
# ---------------------------------------------------------------------------

def pi_map(P: WeylModule, k: int, vec: FPMVector) -> FPMVector:
    """The map F(P, Ext(k)) -> F(P, Ext(k+1)):
    p (x) e_S -> sum over l not in S of sign * (d_l p) (x) e_(S+l),
    where sign counts the transpositions inserting l into S."""
    n = P.n
    if not 0 <= k <= n - 1:
        raise ValueError("top degree")
    src = _subsets(n, k)
    dst_index = {s: a for a, s in enumerate(_subsets(n, k + 1))}
    out: FPMVector = {}
    for (pidx, midx), c in vec.items():
        s = src[midx]
        for l in range(1, n + 1):
            if l in s:
                continue
            sgn = -1 if sum(1 for x in s if x < l) % 2 else 1
            coeff = c if sgn == 1 else -c
            target = dst_index[tuple(sorted(s + (l,)))]
            for p2, cp in P.act_generator(("d", l), {pidx: ONE}).items():
                _acc(out, (p2, target), coeff * cp)
    return out


def torsion_operator(F: FPModule, l: int, i: int, j: int,
                     alpha: MultiIndex, v: FPMVector) -> FPMVector:
    """The m^2-coefficient of m -> (t^(m e_l) d_i)((t^(alpha+(2-m)e_l) d_j) v),
    extracted by exact interpolation at m = 0, 1, 2."""
    n = F.n
    el = unit_index(n, l)

    def f(m: int) -> FPMVector:
        first = tuple(a + (2 - m) * e for a, e in zip(alpha, el))
        outer = tuple(m * e for e in el)
        return F.act(outer, i, F.act(first, j, v))

    num = vec_add(f(0), vec_sub(f(2), vec_scale(f(1), Scalar.integer(2))))
    return vec_scale(num, Scalar.rational(1, 2))


def torsion_expected(F: FPModule, l: int, i: int, j: int,
                     alpha: MultiIndex, v: FPMVector) -> FPMVector:
    """Closed form of the same coefficient:
    sum_k t^alpha p_k (x) (delta_li E(l,j) - E(l,i) E(l,j)) w_k."""
    out: FPMVector = {}
    for (pidx, midx), c in v.items():
        tpart = F.P.act_t_monomial(alpha, {pidx: ONE})
        if not tpart:
            continue
        w1 = F.M.act_column(l, j, midx)
        mvec = dict(w1) if l == i else {}
        mvec = vec_sub(mvec, F.M.act(l, i, w1))
        for p2, cp in tpart.items():
            w = c * cp
            for m2, cm in mvec.items():
                _acc(out, (p2, m2), w * cm)
    return vec_clean(out)


def torsion_matches(F: FPModule, l: int, i: int, j: int,
                    alpha: MultiIndex, v: FPMVector) -> bool:
    return torsion_operator(F, l, i, j, alpha, v) == \
        torsion_expected(F, l, i, j, alpha, v)


# ---------------------------------------------------------------------------
# windowed subspaces
# ---------------------------------------------------------------------------

class WindowedSubspace:
    """An exact-rank subspace of the level <= D window of an FPModule."""

    def __init__(self, F: FPModule, D: int, ech: Echelon):
        self.F = F
        self.D = D
        self._ech = ech

    @property
    def dim(self) -> int:
        return self._ech.dim

    def contains(self, vec: FPMVector) -> bool:
        return self._ech.contains(vec)

    def residual(self, vec: FPMVector) -> FPMVector:
        return self._ech.reduce(vec)

    def basis(self) -> List[FPMVector]:
        return self._ech.basis()

    def is_full(self) -> bool:
        return self.dim == len(self.F.window_basis(self.D))

    def same_span(self, other: "WindowedSubspace") -> bool:
        return self._ech.same_span(other._ech)

    def __repr__(self) -> str:
        return "WindowedSubspace(dim=%d, D=%d, %s)" % (
            self.dim, self.D, self.F.name)


def submodule_closure(F: FPModule, seeds: Sequence[FPMVector],
                      D: int, A: int) -> WindowedSubspace:
    """Smallest window-D subspace containing the seeds and closed under
    v -> truncate_D(t^alpha d_j v) for all |alpha| <= A.

    Fixed-point worklist over exact ranks; operators are swept in
    increasing |alpha| order and the loop exits as soon as the window
    saturates, so the result is deterministic.
    """
    full = len(F.window_basis(D))
    ops = [(alpha, j)
           for alpha in exponents_within(F.n, A, F.mode)
           for j in range(1, F.n + 1)]
    ech = Echelon()
    work: List[FPMVector] = []
    for s in seeds:
        if any(F.level(c) > D for c in s):
            raise ValueError("seed outside window")
        if ech.add(s):
            work.append(dict(s))
    qi = 0
    while qi < len(work) and ech.dim < full:
        v = work[qi]
        qi += 1
        for alpha, j in ops:
            img = F.truncate(F.act(alpha, j, v), D)
            if img and ech.add(img):
                work.append(img)
                if ech.dim >= full:
                    break
    return WindowedSubspace(F, D, ech)


def l_window(P: WeylModule, r: int, D: int, margin: int = 1) -> WindowedSubspace:
    """Window-D part of the image of pi_(r-1), spanned by chain-map images
    of the level <= D+margin window; r = 0 gives the zero subspace."""
    n = P.n
    if not 0 <= r <= n:
        raise ValueError("wedge degree out of range")
    F_r = FPModule(P, exterior_power(n, r))
    ech = Echelon()
    if r == 0:
        return WindowedSubspace(F_r, D, ech)
    F_prev = FPModule(P, exterior_power(n, r - 1))
    vecs = [pi_map(P, r - 1, {cell: ONE})
            for cell in F_prev.window_basis(D + margin)]
    window: Set[Cell] = set(F_r.window_basis(D))
    for row in coordinate_block_intersection(vecs, lambda c: c in window):
        ech.add(row)
    return WindowedSubspace(F_r, D, ech)


def kernel_window(P: WeylModule, r: int, D: int) -> WindowedSubspace:
    """ker pi_r intersected with the window (images computed exactly,
    never truncated)."""
    n = P.n
    if not 0 <= r <= n - 1:
        raise ValueError("top degree")
    F_r = FPModule(P, exterior_power(n, r))
    cols = F_r.window_basis(D)
    rows: Dict[Cell, Dict[int, Scalar]] = {}
    for ci, cell in enumerate(cols):
        for oc, x in pi_map(P, r, {cell: ONE}).items():
            rows.setdefault(oc, {})[ci] = x
    mat = ExactMatrix(len(rows), len(cols),
                      [rows[k] for k in sorted(rows)])
    ech = Echelon()
    for kv in kernel_basis(mat):
        ech.add({cols[ci]: x for ci, x in enumerate(kv) if not x.is_zero()})
    return WindowedSubspace(F_r, D, ech)


def ltilde_window(P: WeylModule, r: int, D: int, A: int) -> WindowedSubspace:
    """The transporter into the image subspace, from its defining property:
    window vectors v with t^alpha d_j v inside the (suitably deepened)
    image window for every |alpha| <= A.  Computed purely from that
    invariance condition; no kernel shortcut."""
    n = P.n
    if not 0 <= r <= n:
        raise ValueError("wedge degree out of range")
    F_r = FPModule(P, exterior_power(n, r))
    cols = F_r.window_basis(D)
    ops = [(alpha, j)
           for alpha in exponents_within(n, A, P.mode)
           for j in range(1, n + 1)]
    deep: Dict[int, WindowedSubspace] = {}
    rows: Dict[Tuple[int, Cell], Dict[int, Scalar]] = {}
    for oi, (alpha, j) in enumerate(ops):
        dprime = D + max(0, P.op_raise_bound(alpha, j))
        if dprime not in deep:
            deep[dprime] = l_window(P, r, dprime)
        lw = deep[dprime]
        for ci, cell in enumerate(cols):
            img = F_r.act_cell(tuple(alpha), j, cell)
            for oc, x in lw.residual(img).items():
                rows.setdefault((oi, oc), {})[ci] = x
    mat = ExactMatrix(len(rows), len(cols),
                      [rows[k] for k in sorted(rows)])
    ech = Echelon()
    for kv in kernel_basis(mat):
        ech.add({cols[ci]: x for ci, x in enumerate(kv) if not x.is_zero()})
    return WindowedSubspace(F_r, D, ech)


def interior_invariant(sub: WindowedSubspace, bound: int = 3) -> bool:
    """Check op(v) stays inside the subspace for every |alpha| <= bound
    operator, restricted to basis vectors whose level survives the
    operator's raise bound (so the image provably fits in the window)."""
    F, D = sub.F, sub.D
    rows = sub.basis()
    levels = [max(F.level(c) for c in row) for row in rows]
    for alpha in exponents_within(F.n, bound, F.mode):
        for j in range(1, F.n + 1):
            rb = max(0, F.P.op_raise_bound(alpha, j))
            for row, lvl in zip(rows, levels):
                if lvl + rb > D:
                    continue
                if not sub.contains(F.act(alpha, j, row)):
                    return False
    return True


# ---------------------------------------------------------------------------
# homology
# ---------------------------------------------------------------------------

@dataclass
class HomologyTable:
    """Homology dimensions keyed by (wedge degree r, graded level q), where
    q is the chain-map-invariant level (P-degree plus r).  Pieces touching
    the window boundary are excluded and counted; non-graded modules fall
    back to window-relative dimensions keyed (r, None)."""

    table: Dict[Tuple[int, Optional[int]], int]
    excluded: int
    graded: bool

    def nonzero(self) -> Dict[Tuple[int, Optional[int]], int]:
        return {k: v for k, v in self.table.items() if v}


def complex_homology(P: WeylModule, D: int) -> HomologyTable:
    """Exact homology of the chain 0 -> F(P,Ext(0)) -> ... -> F(P,Ext(n)) -> 0
    over the window, via the multidegree decomposition when P is graded."""
    if D < 2:
        raise ValueError("window must be at least 2")
    if P.graded:
        return _homology_graded(P, D)
    return _homology_window(P, D)


def _homology_graded(P: WeylModule, D: int) -> HomologyTable:
    n = P.n
    deltas: Set[Tuple[int, ...]] = set()
    window = P.window_basis(D)
    for k in range(n + 1):
        for s in _subsets(n, k):
            ind = _indicator(n, s)
            for pidx in window:
                deltas.add(tuple(p + e for p, e in zip(pidx, ind)))
    table: Dict[Tuple[int, Optional[int]], int] = {}
    excluded = 0
    for delta in sorted(deltas):
        cells: Dict[int, List[Tuple[Tuple[int, ...], Tuple[int, ...]]]] = {}
        ok = True
        empty = True
        for k in range(n + 1):
            lst = []
            for s in _subsets(n, k):
                pidx = tuple(d - e for d, e in zip(delta, _indicator(n, s)))
                if not P.valid_index(pidx):
                    continue
                if P.level(pidx) > D:
                    ok = False
                    break
                lst.append((s, pidx))
            if not ok:
                break
            cells[k] = lst
            empty = empty and not lst
        if not ok:
            excluded += 1
            continue
        if empty:
            continue
        q = sum(delta)
        ranks: Dict[int, int] = {}
        for k in range(n):
            ech = Echelon()
            for s, pidx in cells[k]:
                img: Dict[Tuple, Scalar] = {}
                for l in range(1, n + 1):
                    if l in s:
                        continue
                    sgn = -1 if sum(1 for x in s if x < l) % 2 else 1
                    for p2, cp in P.act_generator(("d", l), {pidx: ONE}).items():
                        _acc(img, (tuple(sorted(s + (l,))), p2),
                             cp if sgn == 1 else -cp)
                if img:
                    ech.add(img)
            ranks[k] = ech.dim
        for k in range(n + 1):
            ck = len(cells[k])
            if ck == 0:
                continue
            hk = ck - ranks.get(k, 0) - ranks.get(k - 1, 0)
            key = (k, q)
            table[key] = table.get(key, 0) + hk
    return HomologyTable(table, excluded, True)


def _homology_window(P: WeylModule, D: int) -> HomologyTable:
    n = P.n
    table: Dict[Tuple[int, Optional[int]], int] = {}
    for r in range(n + 1):
        F_r = FPModule(P, exterior_power(n, r))
        cols = F_r.window_basis(D)
        if r <= n - 1:
            ech = Echelon()
            for cell in cols:
                img = pi_map(P, r, {cell: ONE})
                if img:
                    ech.add(img)
            ker = len(cols) - ech.dim
        else:
            ker = len(cols)
        im = l_window(P, r, D).dim if r >= 1 else 0
        table[(r, None)] = ker - im
    return HomologyTable(table, 0, False)


# ---------------------------------------------------------------------------
# support and fingerprints
# ---------------------------------------------------------------------------

def weight_support(P: WeylModule, M: GlModule, D: int) -> Set[Tuple[Scalar, ...]]:
    """All weights of window cells; rejects non-weight P."""
    F = FPModule(P, M)
    return {F.weight_of(cell) for cell in F.window_basis(D)}


def _floor_const(x: Scalar) -> int:
    fr = x.constant_part()
    return fr.numerator // fr.denominator


@dataclass(frozen=True)
class Fingerprint:
    """Canonical non-isomorphism detector: weight-orbit multiset for weight
    instances, graded window dimensions otherwise.  Equality of
    fingerprints never certifies isomorphism."""

    kind: str
    entries: Tuple[Tuple[str, int], ...]

    def as_dict(self) -> Dict[str, int]:
        return dict(self.entries)


def fingerprint(P: WeylModule, M: GlModule, D: int) -> Fingerprint:
    F = FPModule(P, M)
    if P.is_weight:
        counts: Dict[str, int] = {}
        for cell in F.window_basis(D):
            w = F.weight_of(cell)
            rep = tuple(x - Scalar.integer(_floor_const(x)) for x in w)
            key = "(" + ", ".join(str(x) for x in rep) + ")"
            counts[key] = counts.get(key, 0) + 1
        return Fingerprint("weight", tuple(sorted(counts.items())))
    dims = []
    prev = 0
    for d in range(D + 1):
        cur = len(P.window_basis(d))
        dims.append(("level %d" % d, (cur - prev) * M.dim))
        prev = cur
    return Fingerprint("graded", tuple(dims))


# ---------------------------------------------------------------------------
# irreducibility reports
# ---------------------------------------------------------------------------

@dataclass
class IrreducibilityReport:
    verdict: str
    certified: bool
    branch: str
    details: List[str]


def saturation_seeds(F: FPModule) -> List[FPMVector]:
    """All pure tensors with P-level <= 1: the cheapest adversarial seeds."""
    return [{cell: ONE} for cell in F.window_basis(1)]


def _saturation_report(F: FPModule, D: int, A: int,
                       details: List[str]) -> IrreducibilityReport:
    full = len(F.window_basis(D))
    seeds = saturation_seeds(F)
    for seed in seeds:
        sub = submodule_closure(F, [seed], D, A)
        if sub.dim < full:
            cell = next(iter(seed))
            details.append(
                "seed %s generated only %d of %d window dimensions"
                % (F.label(cell), sub.dim, full))
            return IrreducibilityReport("not certified", False,
                                        "saturation", details)
    details.append("all %d level-<=1 seeds generate the full %d-dimensional"
                   " window" % (len(seeds), full))
    return IrreducibilityReport(
        "consistent with irreducible: certified saturation at (D=%d, A=%d)"
        % (D, A), True, "saturation", details)


def _quotient_trivial(P: WeylModule, D: int, A: int,
                      details: List[str]) -> bool:
    """Check every |alpha| <= A operator maps the top-wedge window into the
    image subspace (computed at a window deep enough to hold the images)."""
    n = P.n
    F = FPModule(P, exterior_power(n, n))
    ops = [(alpha, j)
           for alpha in exponents_within(n, A, P.mode)
           for j in range(1, n + 1)]
    maxraise = max(max(0, P.op_raise_bound(a, j)) for a, j in ops)
    lw = l_window(P, n, D + maxraise)
    for cell in F.window_basis(D):
        for alpha, j in ops:
            img = F.act_cell(tuple(alpha), j, cell)
            if img and not lw.contains(img):
                details.append("operator t^%s d_%d moves %s outside the"
                               " image subspace" % (alpha, j, F.label(cell)))
                return False
    details.append("all %d operators map the window into the image"
                   " subspace" % len(ops))
    return True


def irreducibility_report(P: WeylModule, M: GlModule, D: int,
                          A: int) -> IrreducibilityReport:
    """Windowed verdict on F(P, M), branching on the shape of M.

    Reducible M: skipped.  M not a fundamental exterior power: saturation
    certificate from all low-level seeds.  M = Ext(r) with 0 < r < n:
    reducible, witnessed by the image subspace.  r = 0: reducible exactly
    when P is literally the (Laurent) polynomial module.  r = n: decided by
    the codimension of the summed derivative image.
    """
    n = P.n
    details: List[str] = []
    if not is_irreducible(M):
        return IrreducibilityReport(
            "skipped", False, "m-reducible",
            ["M = %s is a reducible gl-module; no verdict attempted"
             % M.name])
    r = is_fundamental_exterior(M)
    F = FPModule(P, M)
    if r is None:
        return _saturation_report(F, D, A, details)
    if r == 0:
        if P.is_natural():
            sub = submodule_closure(F, [{((0,) * n, 0): ONE}], D, A)
            details.append("closure of the constant line has dimension %d"
                           % sub.dim)
            return IrreducibilityReport("reducible",
                                        sub.dim < len(F.window_basis(D)),
                                        "degree-zero", details)
        details.append("P is not the natural module; running saturation")
        return _saturation_report(F, D, A, details)
    if r == n:
        codim = P.sum_partial_image_codim(D)
        details.append("summed derivative image has codimension %d in the"
                       " window" % codim)
        if codim == 0:
            return _saturation_report(F, D, A, details)
        trivial = _quotient_trivial(P, D, A, details)
        lw = l_window(P, n, D)
        details.append("image subspace dimension %d of %d"
                       % (lw.dim, len(F.window_basis(D))))
        return IrreducibilityReport("reducible", trivial,
                                    "top-degree", details)
    lw = l_window(P, r, D)
    full = len(F.window_basis(D))
    ok = 0 < lw.dim < full and interior_invariant(lw)
    details.append("image subspace: dimension %d of %d, nonzero=%s,"
                   " proper=%s, interior-invariant=%s"
                   % (lw.dim, full, lw.dim > 0, lw.dim < full,
                      interior_invariant(lw)))
    return IrreducibilityReport("reducible", ok, "exterior-witness", details)


# ---------------------------------------------------------------------------
# identity suites (shared by tests and the command line)
# ---------------------------------------------------------------------------

def check_action_axiom(F: FPModule, bound: int, D: int) -> Tuple[bool, int, str]:
    """[x, y] v = x(yv) - y(xv) for all monomial pairs with |alpha| <= bound
    over the window basis.  Returns (ok, pairs checked, failure note)."""
    ops = [(alpha, j)
           for alpha in exponents_within(F.n, bound, F.mode)
           for j in range(1, F.n + 1)]
    cells = F.window_basis(D)
    checked = 0
    for ai in range(len(ops)):
        xa, xj = ops[ai]
        x = WittElement.monomial(F.n, F.mode, xa, xj)
        for bi in range(ai + 1, len(ops)):
            ya, yj = ops[bi]
            y = WittElement.monomial(F.n, F.mode, ya, yj)
            br = witt_bracket(x, y)
            for cell in cells:
                v = {cell: ONE}
                lhs = F.act_witt(br, v)
                rhs = vec_sub(F.act(xa, xj, F.act(ya, yj, v)),
                              F.act(ya, yj, F.act(xa, xj, v)))
                checked += 1
                if lhs != vec_clean(rhs):
                    return (False, checked,
                            "pair t^%s d_%d, t^%s d_%d on %s"
                            % (xa, xj, ya, yj, F.label(cell)))
    return (True, checked, "")


def check_chain_map(P: WeylModule, bound: int, D: int) -> Tuple[bool, int, str]:
    """pi_k intertwines every monomial operator on window bases, and
    consecutive chain maps compose to zero."""
    n = P.n
    checked = 0
    for k in range(n):
        F_k = FPModule(P, exterior_power(n, k))
        F_k1 = FPModule(P, exterior_power(n, k + 1))
        cells = F_k.window_basis(D)
        for alpha in exponents_within(n, bound, P.mode):
            for j in range(1, n + 1):
                for cell in cells:
                    v = {cell: ONE}
                    lhs = pi_map(P, k, F_k.act(alpha, j, v))
                    rhs = F_k1.act(alpha, j, pi_map(P, k, v))
                    checked += 1
                    if lhs != rhs:
                        return (False, checked,
                                "pi_%d vs t^%s d_%d on %s"
                                % (k, alpha, j, F_k.label(cell)))
        if k + 1 <= n - 1:
            for cell in cells:
                checked += 1
                if pi_map(P, k + 1, pi_map(P, k, {cell: ONE})):
                    return (False, checked,
                            "pi_%d pi_%d nonzero on %s"
                            % (k + 1, k, F_k.label(cell)))
    return (True, checked, "")
