"""Flag vectors of graded posets and exact transforms between the
f, h, ell and L bases.

A vector indexed by subsets of [1,n] is stored sparsely (zero entries
dropped) with exact rational values.  The transform kernels run on dense
arrays with subset/superset zeta-Mobius butterflies, O(n 2^n) each.
"""

from fractions import Fraction

from .subsets import MAX_N, complement, is_even_set, mask_key, maximal_runs, parse_mask_key, ranks_of

BASES = ("F", "H", "ELL", "L")

HALF = Fraction(1, 2)


class FlagVector:
    """Exact-rational vector indexed by subsets of [1,n] in one of the
    four flag bases."""

    __slots__ = ("n", "basis", "entries")

    def __init__(self, n: int, basis: str, entries=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if not 0 <= n <= MAX_N:
            raise ValueError(f"ambient size n={n} outside [0, {MAX_N}]")
        self.n = n
        self.basis = basis
        clean = {}
        for mask, value in (entries or {}).items():
            value = Fraction(value)
            if value:
                if mask >> n:
                    raise ValueError(f"subset {ranks_of(mask)} not within [1,{n}]")
                clean[mask] = value
        self.entries = clean

    def get(self, mask: int) -> Fraction:
        return self.entries.get(mask, Fraction(0))

    def __eq__(self, other):
        return (isinstance(other, FlagVector) and self.n == other.n
                and self.basis == other.basis and self.entries == other.entries)

    def __hash__(self):
        return hash((self.n, self.basis, frozenset(self.entries.items())))

    def __add__(self, other):
        if not isinstance(other, FlagVector) or (self.n, self.basis) != (other.n, other.basis):
            raise ValueError("can only add flag vectors of equal n and basis")
        merged = dict(self.entries)
        for mask, value in other.entries.items():
            merged[mask] = merged.get(mask, Fraction(0)) + value
        return FlagVector(self.n, self.basis, merged)

    def scaled(self, factor) -> "FlagVector":
        factor = Fraction(factor)
        return FlagVector(self.n, self.basis, {m: v * factor for m, v in self.entries.items()})

    def reversed_coordinates(self) -> "FlagVector":
        """Coordinate reflection S -> {n+1-s : s in S} (poset duality)."""
        from .subsets import reverse_mask
        return FlagVector(self.n, self.basis,
                          {reverse_mask(m, self.n): v for m, v in self.entries.items()})

    def to_basis(self, basis: str) -> "FlagVector":
        if basis == self.basis:
            return self
        dense = _to_dense(self)
        if self.basis != "F":
            dense = _TO_F[self.basis](dense, self.n)
        if basis != "F":
            dense = _FROM_F[basis](dense, self.n)
        return _from_dense(self.n, basis, dense)

    def __repr__(self):
        body = ", ".join(f"{mask_key(m) or 'empty'}: {v}" for m, v in sorted(self.entries.items()))
        return f"FlagVector(n={self.n}, {self.basis}, {{{body}}})"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "basis": self.basis,
            "entries": {mask_key(m): str(v) for m, v in sorted(self.entries.items())},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FlagVector":
        entries = {parse_mask_key(k): Fraction(v) for k, v in data["entries"].items()}
        return cls(int(data["n"]), data["basis"], entries)


def _to_dense(v: FlagVector) -> list:
    dense = [Fraction(0)] * (1 << v.n)
    for mask, value in v.entries.items():
        dense[mask] = value
    return dense


def _from_dense(n: int, basis: str, dense: list) -> FlagVector:
    return FlagVector(n, basis, {m: val for m, val in enumerate(dense) if val})


def _subset_zeta(a: list, n: int) -> list:
    a = list(a)
    for i in range(n):
        bit = 1 << i
        for m in range(1 << n):
            if m & bit:
                a[m] += a[m ^ bit]
    return a


def _subset_mobius(a: list, n: int) -> list:
    a = list(a)
    for i in range(n):
        bit = 1 << i
        for m in range(1 << n):
            if m & bit:
                a[m] -= a[m ^ bit]
    return a


def _superset_zeta(a: list, n: int) -> list:
    a = list(a)
    for i in range(n):
        bit = 1 << i
        for m in range(1 << n):
            if not m & bit:
                a[m] += a[m | bit]
    return a


def _sign(k: int) -> int:
    return -1 if k & 1 else 1


def _f_to_h(f: list, n: int) -> list:
    return _subset_mobius(f, n)


def _h_to_f(h: list, n: int) -> list:
    return _subset_zeta(h, n)


def _f_to_ell(f: list, n: int) -> list:
    # ell_S = (-1)^(n-|S|) sum_{T >= comp(S)} (-1)^|T| f_T
    g = _superset_zeta([_sign(m.bit_count()) * f[m] for m in range(1 << n)], n)
    full = (1 << n) - 1
    return [_sign(n - m.bit_count()) * g[full ^ m] for m in range(1 << n)]


def _ell_to_f(ell: list, n: int) -> list:
    # f_S = sum_{T <= comp(S)} ell_T
    z = _subset_zeta(ell, n)
    full = (1 << n) - 1
    return [z[full ^ m] for m in range(1 << n)]


def _f_to_L(f: list, n: int) -> list:
    # L_S = (-1)^(n-|S|) sum_{T >= comp(S)} (-1/2)^|T| f_T
    g = _superset_zeta([(-HALF) ** m.bit_count() * f[m] for m in range(1 << n)], n)
    full = (1 << n) - 1
    return [_sign(n - m.bit_count()) * g[full ^ m] for m in range(1 << n)]


def _L_to_f(L: list, n: int) -> list:
    # f_S = 2^|S| sum_{T <= comp(S)} L_T
    z = _subset_zeta(L, n)
    full = (1 << n) - 1
    return [(1 << m.bit_count()) * z[full ^ m] for m in range(1 << n)]


_TO_F = {"H": _h_to_f, "ELL": _ell_to_f, "L": _L_to_f}
_FROM_F = {"H": _f_to_h, "ELL": _f_to_ell, "L": _f_to_L}


def _expect_basis(v: FlagVector, basis: str):
    if v.basis != basis:
        raise ValueError(f"expected basis {basis}, got {v.basis}")


def f_to_h(v: FlagVector) -> FlagVector:
    _expect_basis(v, "F")
    return v.to_basis("H")


def h_to_f(v: FlagVector) -> FlagVector:
    _expect_basis(v, "H")
    return v.to_basis("F")


def f_to_ell(v: FlagVector) -> FlagVector:
    _expect_basis(v, "F")
    return v.to_basis("ELL")


def ell_to_f(v: FlagVector) -> FlagVector:
    _expect_basis(v, "ELL")
    return v.to_basis("F")


def f_to_L(v: FlagVector) -> FlagVector:
    _expect_basis(v, "F")
    return v.to_basis("L")


def L_to_f(v: FlagVector) -> FlagVector:
    _expect_basis(v, "L")
    return v.to_basis("F")


def check_dehn_sommerville(v: FlagVector):
    """(ok, witness): ok iff L_S = 0 for every non-even S.

    Accepts an L-basis vector; the witness is the first failing S in
    (cardinality, rank-tuple) order, as a bitmask.
    """
    _expect_basis(v, "L")
    bad = [m for m in v.entries if not is_even_set(m)]
    if not bad:
        return True, None
    bad.sort(key=lambda m: (m.bit_count(), ranks_of(m)))
    return False, bad[0]


def dehn_sommerville_residuals(v: FlagVector) -> dict:
    """Residuals of the generalized Dehn-Sommerville equations on an
    F-basis vector.

    One equation per (S, [i,k]) with [i,k] a maximal interval of the
    complement of S:
        ((-1)^(i-1) + (-1)^(k+1)) f_S + sum_{j=i..k} (-1)^j f_{S u {j}}.
    Returns {(S_mask, (i,k)): residual}, identically zero iff the
    relations hold.
    """
    _expect_basis(v, "F")
    n = v.n
    out = {}
    for s_mask in range(1 << n):
        for (i, k) in maximal_runs(complement(s_mask, n)):
            res = (_sign(i - 1) + _sign(k + 1)) * v.get(s_mask)
            for j in range(i, k + 1):
                res += _sign(j) * v.get(s_mask | (1 << (j - 1)))
            out[(s_mask, (i, k))] = res
    return out
