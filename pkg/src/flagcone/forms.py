"""Linear functionals on flag vectors: the inequality families valid on
Eulerian posets, their graded analogues, the facet-theorem candidates,
and the convolution product of chain operators.

A form in basis B with coefficients c_S evaluates a flag vector v as
sum_S c_S (v in basis B)_S.  Basis changes of forms are the adjoints of
the vector transforms, so evaluation is basis-independent and exact.
"""

from fractions import Fraction

from .subsets import complement, interval_mask, mask_key, maximal_runs, ranks_of, submasks
from .vectors import FlagVector, _sign, _subset_zeta, _superset_zeta

FORM_BASES = ("F", "ELL", "L")


def _set_str(mask: int) -> str:
    return "{" + ",".join(map(str, ranks_of(mask))) + "}"


class LinearForm:
    """Exact-rational functional on flag vectors of ambient size n."""

    __slots__ = ("n", "basis", "coeffs", "provenance")

    def __init__(self, n: int, basis: str, coeffs=None, provenance: str = "CUSTOM"):
        if basis not in FORM_BASES:
            raise ValueError(f"unknown form basis {basis!r}")
        self.n = n
        self.basis = basis
        clean = {}
        for mask, value in (coeffs or {}).items():
            value = Fraction(value)
            if value:
                if mask >> n:
                    raise ValueError(f"subset {ranks_of(mask)} not within [1,{n}]")
                clean[mask] = value
        self.coeffs = clean
        self.provenance = provenance

    def get(self, mask: int) -> Fraction:
        return self.coeffs.get(mask, Fraction(0))

    def evaluate(self, v: FlagVector) -> Fraction:
        if v.n != self.n:
            raise ValueError(f"dimension mismatch: form n={self.n}, vector n={v.n}")
        v = v.to_basis(self.basis)
        return sum((c * v.get(m) for m, c in self.coeffs.items()), Fraction(0))

    def to_basis(self, basis: str) -> "LinearForm":
        if basis == self.basis:
            return self
        dense = [Fraction(0)] * (1 << self.n)
        for m, c in self.coeffs.items():
            dense[m] = c
        if self.basis != "F":
            dense = _FORM_TO_F[self.basis](dense, self.n)
        if basis != "F":
            dense = _FORM_FROM_F[basis](dense, self.n)
        return LinearForm(self.n, basis,
                          {m: c for m, c in enumerate(dense) if c}, self.provenance)

    def __add__(self, other):
        if not isinstance(other, LinearForm) or (self.n, self.basis) != (other.n, other.basis):
            raise ValueError("can only add forms of equal n and basis")
        merged = dict(self.coeffs)
        for m, c in other.coeffs.items():
            merged[m] = merged.get(m, Fraction(0)) + c
        return LinearForm(self.n, self.basis, merged,
                          f"({self.provenance})+({other.provenance})")

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, factor) -> "LinearForm":
        factor = Fraction(factor)
        return LinearForm(self.n, self.basis,
                          {m: c * factor for m, c in self.coeffs.items()}, self.provenance)

    def __eq__(self, other):
        return (isinstance(other, LinearForm)
                and (self.n, self.basis, self.coeffs) == (other.n, other.basis, other.coeffs))

    def __hash__(self):
        return hash((self.n, self.basis, frozenset(self.coeffs.items())))

    def __repr__(self):
        body = " + ".join(f"{c}*{self.basis}_{mask_key(m) or '0'}"
                          for m, c in sorted(self.coeffs.items()))
        return f"<{body or '0'} | {self.provenance}>"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "basis": self.basis,
            "coeffs": {mask_key(m): str(c) for m, c in sorted(self.coeffs.items())},
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LinearForm":
        from .subsets import parse_mask_key
        coeffs = {parse_mask_key(k): Fraction(c) for k, c in data["coeffs"].items()}
        return cls(int(data["n"]), data["basis"], coeffs, data.get("provenance", "CUSTOM"))


# Adjoint transforms.  With f_S = sum_{T <= comp(S)} ell_T the F-form c
# becomes ell-form c'_T = sum_{S cap T = 0} c_S, and so on; each is a
# subset or superset zeta with diagonal weights.

def _form_f_to_ell(c: list, n: int) -> list:
    z = _subset_zeta(c, n)
    full = (1 << n) - 1
    return [z[full ^ m] for m in range(1 << n)]


def _form_ell_to_f(c: list, n: int) -> list:
    g = _superset_zeta([_sign(n - m.bit_count()) * c[m] for m in range(1 << n)], n)
    full = (1 << n) - 1
    return [_sign(m.bit_count()) * g[full ^ m] for m in range(1 << n)]


def _form_f_to_L(c: list, n: int) -> list:
    z = _subset_zeta([(1 << m.bit_count()) * c[m] for m in range(1 << n)], n)
    full = (1 << n) - 1
    return [z[full ^ m] for m in range(1 << n)]


def _form_L_to_f(c: list, n: int) -> list:
    g = _superset_zeta([_sign(n - m.bit_count()) * c[m] for m in range(1 << n)], n)
    full = (1 << n) - 1
    return [Fraction(-1, 2) ** m.bit_count() * g[full ^ m] for m in range(1 << n)]


_FORM_TO_F = {"ELL": _form_ell_to_f, "L": _form_L_to_f}
_FORM_FROM_F = {"ELL": _form_f_to_ell, "L": _form_f_to_L}


def rank_select_form(n: int, mask: int, coeff=1, provenance=None) -> LinearForm:
    """The single chain operator f_S as a form."""
    return LinearForm(n, "F", {mask: Fraction(coeff)},
                      provenance or f"CUSTOM(f_{_set_str(mask)})")


def _check_lemma_hypothesis(n: int, v_mask: int, t_mask: int):
    if t_mask & ~v_mask:
        raise ValueError("T must be a subset of V")
    if (v_mask | t_mask) >> n:
        raise ValueError(f"V outside [1,{n}]")
    for a, b in maximal_runs(v_mask):
        if (interval_mask(a, b) & t_mask).bit_count() > 1:
            raise ValueError(
                f"hypothesis violated: interval [{a},{b}] of V meets T more than once")


def inequality_lemma_form(n: int, v_mask: int, t_mask: int, basis: str = "F") -> LinearForm:
    """sum_{R <= T} (-2)^|T\\R| f_{S u R} with S the complement of V;
    nonnegative on every Eulerian poset.  T must meet each maximal
    interval of V at most once.

    The L-basis twin is the exact conversion, a positive multiple
    2^(|S|+|T|) of the paper-styled (-1)^|T| sum_{T<=Q<=V} L_Q.
    """
    _check_lemma_hypothesis(n, v_mask, t_mask)
    s_mask = complement(v_mask, n)
    t_size = t_mask.bit_count()
    coeffs = {}
    for r in submasks(t_mask):
        coeffs[s_mask | r] = Fraction(-2) ** (t_size - r.bit_count())
    form = LinearForm(n, "F", coeffs,
                      f"INEQ_LEMMA(T={_set_str(t_mask)},V={_set_str(v_mask)})")
    return form.to_basis(basis)


def graded_lemma_form(n: int, v_mask: int, t_mask: int) -> LinearForm:
    """The coefficient -1 analogue, valid for all graded posets."""
    _check_lemma_hypothesis(n, v_mask, t_mask)
    s_mask = complement(v_mask, n)
    t_size = t_mask.bit_count()
    coeffs = {}
    for r in submasks(t_mask):
        coeffs[s_mask | r] = Fraction(-1) ** (t_size - r.bit_count())
    return LinearForm(n, "F", coeffs,
                      f"GRADED_LEMMA(T={_set_str(t_mask)},V={_set_str(v_mask)})")


def _check_ijk(n, i, j, k):
    if not 1 <= i < j < k <= n:
        raise ValueError(f"need 1 <= i < j < k <= n, got ({i},{j},{k}) with n={n}")


def ijk_form(n: int, i: int, j: int, k: int) -> LinearForm:
    """f_ik - 2 f_i - 2 f_k + 2 f_j, nonnegative on Eulerian posets."""
    _check_ijk(n, i, j, k)
    bi, bj, bk = 1 << (i - 1), 1 << (j - 1), 1 << (k - 1)
    return LinearForm(n, "F", {bi | bk: 1, bi: -2, bk: -2, bj: 2},
                      f"IJK({i},{j},{k})")


def graded_ijk_form(n: int, i: int, j: int, k: int) -> LinearForm:
    """f_ik - f_i - f_k + f_j, nonnegative on all graded posets."""
    _check_ijk(n, i, j, k)
    bi, bj, bk = 1 << (i - 1), 1 << (j - 1), 1 << (k - 1)
    return LinearForm(n, "F", {bi | bk: 1, bi: -1, bk: -1, bj: 1},
                      f"GRADED_IJK({i},{j},{k})")


def enumerate_lemma_pairs(n: int):
    """All (V_mask, T_mask) pairs meeting the Inequality Lemma
    hypothesis: T picks at most one element from each maximal interval
    of V."""
    for v_mask in range(1 << n):
        runs = maximal_runs(v_mask)
        choices = [[0] + [1 << (r - 1) for r in range(a, b + 1)] for a, b in runs]
        picks = [0]
        for opts in choices:
            picks = [base | o for base in picks for o in opts]
        for t_mask in picks:
            yield v_mask, t_mask


def facet_theorem_candidates(n: int, strict: bool = True) -> list:
    """All (M,V) facet-theorem forms (-1)^(|M|/2) sum_{M<=Q<=V} L_Q.

    V: every maximal interval of V has size >= 2 and every maximal
    interval of [0,n+1] minus V has size <= 3.  M: per V-interval [a,b]
    empty or the start/end pair, with the boundary conditions (if a is
    not in M then a-2 is -1 or in M; if b is not in M then b+2 is n+2 or
    in M).  strict additionally keeps M off length-3 V-intervals, making
    the forms pairwise distinct.
    """
    out = []
    for v_mask in range(1 << n):
        runs = maximal_runs(v_mask)
        if any(b - a + 1 < 2 for a, b in runs):
            continue
        # complement taken in [0,n+1]; encode position p at bit p so the
        # run helper applies
        outside_mask = sum(1 << p for p in range(0, n + 2)
                           if p in (0, n + 1) or not v_mask >> (p - 1) & 1)
        if any(b - a + 1 > 3 for a, b in maximal_runs(outside_mask)):
            continue
        options = []
        for a, b in runs:
            opts = [0]
            if not (strict and b - a + 1 == 3):
                opts.append(interval_mask(a, a + 1))
                if b - 1 != a:
                    opts.append(interval_mask(b - 1, b))
            options.append((a, b, opts))
        masks = [0]
        for _, _, opts in options:
            masks = [base | o for base in masks for o in opts]
        for m_mask in masks:
            ok = True
            for a, b, _ in options:
                if not m_mask >> (a - 1) & 1:
                    if a - 2 != -1 and not (a - 2 >= 1 and m_mask >> (a - 3) & 1):
                        ok = False
                        break
                if not m_mask >> (b - 1) & 1:
                    if b + 2 != n + 2 and not (b + 2 <= n and m_mask >> (b + 1) & 1):
                        ok = False
                        break
            if not ok:
                continue
            sign = _sign(m_mask.bit_count() // 2)
            coeffs = {}
            free = v_mask & ~m_mask
            for extra in submasks(free):
                coeffs[m_mask | extra] = Fraction(sign)
            provenance = ("INEQ0" if m_mask == 0 else
                          f"FACET_THM(M={_set_str(m_mask)},V={_set_str(v_mask)})")
            out.append(LinearForm(n, "L", coeffs, provenance))
    return out


def convolve_f(a: LinearForm, b: LinearForm) -> LinearForm:
    """Chain operator product f^m_S f^n_T = f^(m+n)_{S u {m} u (T+m)},
    extended bilinearly; a has rank m = a.n + 1."""
    if a.basis != "F" or b.basis != "F":
        raise ValueError("convolve_f needs two F-basis forms")
    m = a.n + 1
    out = {}
    for s, cs in a.coeffs.items():
        for t, ct in b.coeffs.items():
            key = s | (1 << a.n) | (t << m)
            out[key] = out.get(key, Fraction(0)) + cs * ct
    return LinearForm(a.n + b.n + 1, "F", out,
                      f"CONVOLUTION({a.provenance},{b.provenance})")


def convolve_ell(a: LinearForm, b: LinearForm) -> LinearForm:
    """ell^m_S ell^n_T = ell^(m+n)_{S u (T+m)}."""
    if a.basis != "ELL" or b.basis != "ELL":
        raise ValueError("convolve_ell needs two ELL-basis forms")
    m = a.n + 1
    out = {}
    for s, cs in a.coeffs.items():
        for t, ct in b.coeffs.items():
            key = s | (t << m)
            out[key] = out.get(key, Fraction(0)) + cs * ct
    return LinearForm(a.n + b.n + 1, "ELL", out,
                      f"CONVOLUTION({a.provenance},{b.provenance})")


def convolve_L(a: LinearForm, b: LinearForm) -> LinearForm:
    """L^m_S L^n_T = 2 L^(m+n)_{S u (T+m)}."""
    if a.basis != "L" or b.basis != "L":
        raise ValueError("convolve_L needs two L-basis forms")
    m = a.n + 1
    out = {}
    for s, cs in a.coeffs.items():
        for t, ct in b.coeffs.items():
            key = s | (t << m)
            out[key] = out.get(key, Fraction(0)) + 2 * cs * ct
    return LinearForm(a.n + b.n + 1, "L", out,
                      f"CONVOLUTION({a.provenance},{b.provenance})")
