"""Weyl-algebra modules on explicit bases, with level filtrations.

Every provided module is a tensor product of rank-1 factors, one per
variable.  A factor exposes the action of its t and d generators on basis
indices, a nonnegative integer level, and (when it is a weight module) the
eigenvalue of t d.  Module vectors are sparse dicts {index tuple: Scalar};
all actions are exact, windows only bound basis enumeration.

Factor kinds:
  PolyFactor        C[t], basis t^k, k >= 0
  LaurentFactor     C[t, t^-1], basis t^k, k in Z
  TwistedFactor     t^lam C[t, t^-1], basis t^(lam+k); lam not an integer
  QuotFactor        C[t, t^-1] / C[t], basis t^k, k <= -1
  WhittakerFactor   C[x] with d f = lam^-1 (x+1) f(x+1), t f = lam f(x-1)
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from wittmod.exactnum import (
    Echelon, ONE, Scalar, ZERO, coordinate_block_intersection,
)
from wittmod.liealg import WeylElement, WittElement
from wittmod.polyalg import LAURENT, PLUS, MultiIndex

PIndex = Tuple  # tuple of per-factor indices
PVector = Dict  # PIndex -> Scalar

Term = Tuple[Scalar, int]


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for j in range(k):
        out = out * (n - j) // (j + 1)
    return out


class PolyFactor:
    """C[t]: indices k >= 0 for t^k."""

    kind = "Apoly"
    laurent_capable = False
    graded = True
    is_weight = True

    def valid_index(self, k: int) -> bool:
        return k >= 0

    def act_t(self, k: int) -> List[Term]:
        return [(ONE, k + 1)]

    def act_t_inv(self, k: int) -> List[Term]:
        raise ValueError("t^-1 does not act on C[t]")

    def act_d(self, k: int) -> List[Term]:
        return [(Scalar.integer(k), k - 1)] if k >= 1 else []

    def weight(self, k: int) -> Scalar:
        return Scalar.integer(k)

    def level(self, k: int) -> int:
        return k

    def indices_at_level(self, l: int) -> List[int]:
        return [l]

    def t_raise_bound(self, a: int) -> int:
        return a

    def d_raise_bound(self) -> int:
        return -1

    def label(self, k: int) -> str:
        return "t^%d" % k

    def params(self) -> List[Scalar]:
        return []


class LaurentFactor(PolyFactor):
    """C[t, t^-1]: indices k in Z."""

    kind = "Alaurent"
    laurent_capable = True

    def valid_index(self, k: int) -> bool:
        return True

    def act_t_inv(self, k: int) -> List[Term]:
        return [(ONE, k - 1)]

    def act_d(self, k: int) -> List[Term]:
        return [(Scalar.integer(k), k - 1)] if k != 0 else []

    def level(self, k: int) -> int:
        return abs(k)

    def indices_at_level(self, l: int) -> List[int]:
        return [0] if l == 0 else [-l, l]

    def t_raise_bound(self, a: int) -> int:
        return abs(a)

    def d_raise_bound(self) -> int:
        return 1


class TwistedFactor(LaurentFactor):
    """t^lam C[t, t^-1]: index k stands for t^(lam+k); lam not an integer."""

    laurent_capable = True

    def __init__(self, lam: Scalar):
        if lam.is_rational() and lam.as_fraction().denominator == 1:
            raise ValueError("twist parameter must not be an integer")
        self.lam = lam
        self.kind = "TL(%s)" % lam

    def act_d(self, k: int) -> List[Term]:
        return [(self.lam + Scalar.integer(k), k - 1)]

    def weight(self, k: int) -> Scalar:
        return self.lam + Scalar.integer(k)

    def params(self) -> List[Scalar]:
        return [] if self.lam.is_rational() else [self.lam]


class QuotFactor(PolyFactor):
    """C[t, t^-1]/C[t]: indices k <= -1; t kills t^-1."""

    kind = "Quot"
    laurent_capable = False

    def valid_index(self, k: int) -> bool:
        return k <= -1

    def act_t(self, k: int) -> List[Term]:
        return [(ONE, k + 1)] if k + 1 <= -1 else []

    def act_d(self, k: int) -> List[Term]:
        return [(Scalar.integer(k), k - 1)]

    def weight(self, k: int) -> Scalar:
        return Scalar.integer(k)

    def level(self, k: int) -> int:
        return -k

    def indices_at_level(self, l: int) -> List[int]:
        return [-l] if l >= 1 else []

    def t_raise_bound(self, a: int) -> int:
        return -a if a < 0 else 0

    def d_raise_bound(self) -> int:
        return 1


class WhittakerFactor(PolyFactor):
    """C[x] with d f = lam^-1 (x+1) f(x+1) and t f = lam f(x-1).

    Not a weight module: t d is a free (injective, eigenvector-less) action.
    Index k stands for the monomial x^k.
    """

    laurent_capable = False
    graded = False
    is_weight = False

    def __init__(self, lam: Scalar):
        if lam.is_zero():
            raise ValueError("Whittaker parameter must be nonzero")
        self.lam = lam
        self.kind = "Whittaker(%s)" % lam

    def act_t(self, k: int) -> List[Term]:
        # lam (x-1)^k
        out = []
        for j in range(k + 1):
            c = _binom(k, j) * (-1 if (k - j) % 2 else 1)
            out.append((self.lam * Scalar.integer(c), j))
        return out

    def act_d(self, k: int) -> List[Term]:
        # lam^-1 (x+1)^(k+1)
        inv = self.lam.inv()
        return [(inv * Scalar.integer(_binom(k + 1, j)), j)
                for j in range(k + 2)]

    def weight(self, k: int):
        return None

    def t_raise_bound(self, a: int) -> int:
        return 0

    def d_raise_bound(self) -> int:
        return 1

    def label(self, k: int) -> str:
        return "x^%d" % k

    def params(self) -> List[Scalar]:
        return [] if self.lam.is_rational() else [self.lam]


# ---------------------------------------------------------------------------
# tensor modules
# ---------------------------------------------------------------------------

class WeylModule:
    """Tensor product of rank-1 factors, a module over the rank-n Weyl algebra.

    mode is 'laurent' when every factor admits t^-1 (so the full Laurent
    Weyl algebra acts), else 'plus'.
    """

    def __init__(self, factors: Sequence, kind: Optional[str] = None):
        if not factors:
            raise ValueError("need at least one factor")
        self.factors = list(factors)
        self.n = len(factors)
        self.mode = LAURENT if all(f.laurent_capable for f in factors) else PLUS
        self.graded = all(f.graded for f in factors)
        self.is_weight = all(f.is_weight for f in factors)
        self.kind = kind or "Tensor(%s)" % ",".join(f.kind for f in factors)

    # -- basic structure

    def params(self) -> List[Scalar]:
        out = []
        for f in self.factors:
            out.extend(f.params())
        return out

    def is_natural(self) -> bool:
        """True when this is literally C[t_1..t_n] or its Laurent version."""
        return all(type(f) is PolyFactor for f in self.factors) or \
            all(type(f) is LaurentFactor for f in self.factors)

    def valid_index(self, idx: PIndex) -> bool:
        return all(f.valid_index(k) for f, k in zip(self.factors, idx))

    def level(self, idx: PIndex) -> int:
        return sum(f.level(k) for f, k in zip(self.factors, idx))

    def weight(self, idx: PIndex) -> Optional[Tuple[Scalar, ...]]:
        if not self.is_weight:
            return None
        return tuple(f.weight(k) for f, k in zip(self.factors, idx))

    def label(self, idx: PIndex) -> str:
        return "*".join(f.label(k) for f, k in zip(self.factors, idx))

    def window_basis(self, D: int) -> List[PIndex]:
        """All basis indices with level <= D, sorted by (level, index)."""
        if D < 0:
            return []
        out: List[PIndex] = []

        def rec(prefix: Tuple, budget: int, pos: int) -> None:
            if pos == self.n:
                out.append(prefix)
                return
            f = self.factors[pos]
            for l in range(budget + 1):
                for k in f.indices_at_level(l):
                    rec(prefix + (k,), budget - l, pos + 1)

        rec((), D, 0)
        out.sort(key=lambda idx: (self.level(idx), idx))
        return out

    # -- generator actions on sparse vectors

    def _act_factor(self, which: str, i: int, vec: PVector) -> PVector:
        f = self.factors[i - 1]
        fn = {"t": f.act_t, "d": f.act_d, "tinv": f.act_t_inv}[which]
        out: PVector = {}
        for idx, c in vec.items():
            for coef, k2 in fn(idx[i - 1]):
                idx2 = idx[:i - 1] + (k2,) + idx[i:]
                s = out.get(idx2)
                add = c * coef
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(idx2, None)
                else:
                    out[idx2] = s
        return out

    def act_generator(self, gen: Tuple[str, int], vec: PVector) -> PVector:
        """gen is ('t', i), ('d', i) or ('tinv', i), i 1-based."""
        which, i = gen
        if which == "tinv" and self.mode != LAURENT:
            raise ValueError("t^-1 does not act in plus mode")
        return self._act_factor(which, i, vec)

    def act_t_monomial(self, beta: MultiIndex, vec: PVector) -> PVector:
        """Multiply by t^beta; negative entries need laurent mode."""
        if self.mode == PLUS and any(b < 0 for b in beta):
            raise ValueError("negative exponent %r in plus mode" % (beta,))
        out = vec
        for i, b in enumerate(beta, start=1):
            for _ in range(abs(b)):
                if not out:
                    return {}
                out = self._act_factor("t" if b > 0 else "tinv", i, out)
        return out

    def act_witt_monomial(self, alpha: MultiIndex, j: int,
                          vec: PVector) -> PVector:
        """Apply t^alpha d_j."""
        return self.act_t_monomial(alpha, self._act_factor("d", j, vec))

    def act_weyl(self, w: WeylElement, vec: PVector) -> PVector:
        if w.n != self.n:
            raise ValueError("operator arity mismatch")
        out: PVector = {}
        for (a, b), c in sorted(w.terms.items()):
            cur = vec
            for i, bi in enumerate(b, start=1):
                for _ in range(bi):
                    cur = self._act_factor("d", i, cur)
            cur = self.act_t_monomial(a, cur)
            for idx, x in cur.items():
                s = out.get(idx)
                add = c * x
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(idx, None)
                else:
                    out[idx] = s
        return out

    def act_witt(self, x: WittElement, vec: PVector) -> PVector:
        out: PVector = {}
        for alpha, j, c in x.monomials():
            cur = self.act_witt_monomial(alpha, j, vec)
            for idx, v in cur.items():
                s = out.get(idx)
                add = c * v
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(idx, None)
                else:
                    out[idx] = s
        return out

    # -- truncation bookkeeping

    def op_raise_bound(self, alpha: MultiIndex, j: int) -> int:
        """Max level increase of t^alpha d_j (and of the matrix-part terms
        t^(alpha - e_i) paired with it)."""
        t_part = sum(f.t_raise_bound(a) for f, a in zip(self.factors, alpha))
        return t_part + self.factors[j - 1].d_raise_bound()

    def d_raise_max(self) -> int:
        return max(f.d_raise_bound() for f in self.factors)

    def sum_partial_image_codim(self, D: int) -> int:
        """Codimension, inside the level <= D-1 window, of
        span{d_k v : v in window <= D} intersected with that window."""
        if D < 1:
            raise ValueError("window must be at least 1")
        imgs = []
        for idx in self.window_basis(D):
            for k in range(1, self.n + 1):
                w = self._act_factor("d", k, {idx: ONE})
                if w:
                    imgs.append(w)
        inner = self.window_basis(D - 1)
        inner_set = set(inner)
        inter = coordinate_block_intersection(imgs, lambda c: c in inner_set)
        return len(inner) - len(inter)

    def __repr__(self) -> str:
        return "WeylModule(%s, n=%d, mode=%s)" % (self.kind, self.n, self.mode)


# ---------------------------------------------------------------------------
# named instances
# ---------------------------------------------------------------------------

def apoly(n: int) -> WeylModule:
    return WeylModule([PolyFactor() for _ in range(n)], kind="Apoly")


def alaurent(n: int) -> WeylModule:
    return WeylModule([LaurentFactor() for _ in range(n)], kind="Alaurent")


def twisted_laurent(lams: Sequence[Scalar]) -> WeylModule:
    return WeylModule([TwistedFactor(l) for l in lams],
                      kind="TL(%s)" % ",".join(str(l) for l in lams))


def laurent_quot(n: int) -> WeylModule:
    return WeylModule([QuotFactor() for _ in range(n)], kind="Quot")


def whittaker(lams: Sequence[Scalar]) -> WeylModule:
    return WeylModule([WhittakerFactor(l) for l in lams],
                      kind="Whittaker(%s)" % ",".join(str(l) for l in lams))


def tensor_factors(factors: Sequence) -> WeylModule:
    return WeylModule(list(factors))
