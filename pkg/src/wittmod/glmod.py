"""Finite-dimensional gl_n-modules given by explicit action matrices.

A GlModule stores one dim x dim matrix per elementary E(i,j); the
commutation relations [E(i,j), E(k,l)] = delta_jk E(i,l) - delta_li E(k,j)
are verified at construction.  Provided constructors: the natural module,
exterior powers, symmetric powers, one-dimensional scalar modules where
E(i,j) acts as delta_ij * b/n, and tensor products.
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Optional, Sequence, Tuple

from wittmod.exactnum import ExactMatrix, Echelon, ONE, Scalar, ZERO, kernel_basis

Weight = Tuple[Scalar, ...]


class GlModule:
    """A gl_n-module: basis labels plus an action matrix for each E(i,j)."""

    __slots__ = ("n", "dim", "labels", "action", "name")

    def __init__(self, n: int, labels: Sequence[str],
                 action: Dict[Tuple[int, int], ExactMatrix],
                 name: str = "", check: bool = True):
        self.n = n
        self.dim = len(labels)
        self.labels = list(labels)
        self.action = dict(action)
        self.name = name or "gl%d-module" % n
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                m = self.action.get((i, j))
                if m is None:
                    raise ValueError("missing action matrix for E(%d,%d)" % (i, j))
                if m.nrows != self.dim or m.ncols != self.dim:
                    raise ValueError("action matrix shape mismatch")
        if check:
            self._check_commutation()

    def _check_commutation(self) -> None:
        n = self.n
        for i, j, k, l in itertools.product(range(1, n + 1), repeat=4):
            a, b = self.action[(i, j)], self.action[(k, l)]
            comm = a.mul(b).sub(b.mul(a))
            want = ExactMatrix(self.dim, self.dim)
            if j == k:
                want = want.add(self.action[(i, l)])
            if l == i:
                want = want.sub(self.action[(k, j)])
            if comm != want:
                raise ValueError(
                    "commutation relation fails for [E(%d,%d), E(%d,%d)]"
                    % (i, j, k, l))

    def act(self, i: int, j: int, vec: Dict[int, Scalar]) -> Dict[int, Scalar]:
        """Apply E(i,j) to a sparse vector {basis index: coeff}."""
        return self.action[(i, j)].apply_sparse(vec)

    def act_column(self, i: int, j: int, idx: int) -> Dict[int, Scalar]:
        return self.action[(i, j)].column(idx)

    def diagonal_weight(self, idx: int) -> Weight:
        """Weight of a basis vector, assuming diagonal E(i,i) matrices."""
        return tuple(self.action[(i, i)].entry(idx, idx)
                     for i in range(1, self.n + 1))

    def __repr__(self) -> str:
        return "GlModule(%s, n=%d, dim=%d)" % (self.name, self.n, self.dim)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def natural_module(n: int) -> GlModule:
    """C^n with E(i,j) e_l = delta_jl e_i."""
    action = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            m = ExactMatrix(n, n)
            m.set_entry(i - 1, j - 1, ONE)
            action[(i, j)] = m
    return GlModule(n, ["e%d" % (i + 1) for i in range(n)], action, name="Nat")


def _insertion_sign(seq: List[int]) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """Sort seq, returning (sign, sorted tuple); None if there is a repeat."""
    s = list(seq)
    sign = 1
    for a in range(len(s)):
        for b in range(len(s) - 1 - a):
            if s[b] > s[b + 1]:
                s[b], s[b + 1] = s[b + 1], s[b]
                sign = -sign
            elif s[b] == s[b + 1]:
                return None
    return sign, tuple(s)


def exterior_power(n: int, k: int) -> GlModule:
    """Lambda^k C^n with the derivation action on wedges."""
    if not 0 <= k <= n:
        raise ValueError("exterior power out of range: k=%d, n=%d" % (k, n))
    basis = list(itertools.combinations(range(1, n + 1), k))
    index = {s: a for a, s in enumerate(basis)}
    labels = ["^".join("e%d" % x for x in s) if s else "1" for s in basis]
    action = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            m = ExactMatrix(len(basis), len(basis))
            for col, s in enumerate(basis):
                if j not in s:
                    continue
                replaced = [i if x == j else x for x in s]
                res = _insertion_sign(replaced)
                if res is None:
                    continue
                sign, sorted_s = res
                m.set_entry(index[sorted_s], col, Scalar.integer(sign))
            action[(i, j)] = m
    return GlModule(n, labels, action, name="Ext(%d)" % k)


def sym_power(n: int, k: int) -> GlModule:
    """S^k C^n realized on degree-k monomials with E(i,j) = e_i d/d e_j."""
    if k < 0:
        raise ValueError("negative symmetric power")
    basis = [e for e in itertools.product(range(k + 1), repeat=n) if sum(e) == k]
    basis.sort()
    index = {e: a for a, e in enumerate(basis)}

    def label(e):
        parts = []
        for i, x in enumerate(e):
            if x == 1:
                parts.append("e%d" % (i + 1))
            elif x > 1:
                parts.append("e%d^%d" % (i + 1, x))
        return "*".join(parts) if parts else "1"

    action = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            m = ExactMatrix(len(basis), len(basis))
            for col, e in enumerate(basis):
                if e[j - 1] == 0:
                    continue
                ee = list(e)
                ee[j - 1] -= 1
                ee[i - 1] += 1
                m.set_entry(index[tuple(ee)], col, Scalar.integer(e[j - 1]))
            action[(i, j)] = m
    return GlModule(n, [label(e) for e in basis], action, name="Sym(%d)" % k)


def scalar_module(n: int, b: Scalar) -> GlModule:
    """One-dimensional module where E(i,j) acts as delta_ij * b/n."""
    val = b / Scalar.integer(n)
    action = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            m = ExactMatrix(1, 1)
            if i == j:
                m.set_entry(0, 0, val)
            action[(i, j)] = m
    return GlModule(n, ["1"], action, name="Triv(%s)" % b)


def tensor_module(m1: GlModule, m2: GlModule) -> GlModule:
    """m1 (x) m2 with X(v (x) w) = Xv (x) w + v (x) Xw."""
    if m1.n != m2.n:
        raise ValueError("tensor factors over different gl_n")
    n = m1.n
    d1, d2 = m1.dim, m2.dim
    labels = ["%s*%s" % (a, b) for a in m1.labels for b in m2.labels]
    action = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            m = ExactMatrix(d1 * d2, d1 * d2)
            a1, a2 = m1.action[(i, j)], m2.action[(i, j)]
            for r1, row in enumerate(a1.rows):
                for c1, x in row.items():
                    for s in range(d2):
                        m.set_entry(r1 * d2 + s, c1 * d2 + s, x)
            for r2, row in enumerate(a2.rows):
                for c2, x in row.items():
                    for s in range(d1):
                        prev = m.entry(s * d2 + r2, s * d2 + c2)
                        m.set_entry(s * d2 + r2, s * d2 + c2, prev + x)
            action[(i, j)] = m
    return GlModule(n, labels, action, name="%s*%s" % (m1.name, m2.name))


# ---------------------------------------------------------------------------
# structure analysis
# ---------------------------------------------------------------------------

def weight_decomposition(m: GlModule) -> Dict[Weight, List[int]]:
    """Partition basis indices by joint E(i,i) eigenvalue.

    Requires every E(i,i) action matrix to be diagonal in the given basis
    (true for all provided constructors); otherwise raises ValueError.
    """
    for i in range(1, m.n + 1):
        mat = m.action[(i, i)]
        for r, row in enumerate(mat.rows):
            if any(c != r for c in row):
                raise ValueError("not a weight module")
    out: Dict[Weight, List[int]] = {}
    for idx in range(m.dim):
        out.setdefault(m.diagonal_weight(idx), []).append(idx)
    return out


def singular_vectors(m: GlModule) -> List[Tuple[Weight, List[Scalar]]]:
    """Joint kernel of the raising operators E(i,i+1), split by weight.

    Returns [(weight, dense vector)] sorted by weight string for determinism.
    For n = 1 there are no raising operators and every weight line is singular.
    """
    blocks = weight_decomposition(m)
    raising = [m.action[(i, i + 1)] for i in range(1, m.n)]
    out: List[Tuple[Weight, List[Scalar]]] = []
    for weight in sorted(blocks, key=lambda w: tuple(str(x) for x in w)):
        coords = blocks[weight]
        if not raising:
            for c in coords:
                v = [ZERO] * m.dim
                v[c] = ONE
                out.append((weight, v))
            continue
        # stack the raising matrices restricted to this weight block
        rows: List[Dict[int, Scalar]] = []
        for mat in raising:
            for r in range(m.dim):
                row = {}
                for ci, c in enumerate(coords):
                    x = mat.entry(r, c)
                    if not x.is_zero():
                        row[ci] = x
                rows.append(row)
        stacked = ExactMatrix(len(rows), len(coords), rows)
        for kv in kernel_basis(stacked):
            v = [ZERO] * m.dim
            for ci, c in enumerate(coords):
                v[c] = kv[ci]
            out.append((weight, v))
    return out


def cyclic_span(m: GlModule, seeds: List[Dict[int, Scalar]]) -> int:
    """Dimension of the smallest subspace containing seeds closed under all E(i,j)."""
    ech = Echelon()
    work = []
    for s in seeds:
        if ech.add(s):
            work.append(s)
    while work:
        v = work.pop()
        for i in range(1, m.n + 1):
            for j in range(1, m.n + 1):
                w = m.act(i, j, v)
                if w and ech.add(w):
                    work.append(w)
    return ech.dim


def is_irreducible(m: GlModule) -> bool:
    """True iff the singular space is one line and that line is cyclic."""
    sing = singular_vectors(m)
    if len(sing) != 1:
        return False
    _, vec = sing[0]
    seed = {i: x for i, x in enumerate(vec) if not x.is_zero()}
    return cyclic_span(m, [seed]) == m.dim


def is_fundamental_exterior(m: GlModule) -> Optional[int]:
    """Return k when m is (isomorphic to) Lambda^k C^n, else None.

    Detection: m is irreducible with highest weight (1,..,1,0,..,0) (k ones)
    and dimension binom(n, k).  The k = n case includes the scalar module
    with b = n, whose action matrices coincide with the top exterior power.
    """
    sing = singular_vectors(m)
    if len(sing) != 1:
        return None
    weight, vec = sing[0]
    seed = {i: x for i, x in enumerate(vec) if not x.is_zero()}
    if cyclic_span(m, [seed]) != m.dim:
        return None
    one, zero = ONE, ZERO
    for k in range(m.n + 1):
        target = tuple([one] * k + [zero] * (m.n - k))
        binom = 1
        for j in range(k):
            binom = binom * (m.n - j) // (j + 1)
        if weight == target and m.dim == binom:
            return k
    return None
