"""Index polynomials: formal sums of noncommuting words with rational
coefficients.

Alphabets: AB (letters a,b), CE (c,e) and CD (c,d).  Every word has the
same weight n; a and b and c and e occupy one string position, d two.
The cd conversion inverts the substitution d = (cc - ee)/2 by triangular
elimination over even support sets.
"""

from fractions import Fraction

from .subsets import is_even_set, maximal_runs, mask_of, ranks_of

ALPHABETS = ("AB", "CE", "CD")
HALF = Fraction(1, 2)


class NotCDExpressibleError(ValueError):
    """Raised when a ce-polynomial has no cd-expression, i.e. the
    generalized Dehn-Sommerville relations fail."""


def word_weight(alphabet: str, word: str) -> int:
    if alphabet == "CD":
        return len(word) + word.count("d")
    return len(word)


def _validate_word(alphabet: str, word: str, n: int):
    letters = {"AB": "ab", "CE": "ce", "CD": "cd"}[alphabet]
    if any(ch not in letters for ch in word):
        raise ValueError(f"word {word!r} not over alphabet {alphabet}")
    if word_weight(alphabet, word) != n:
        raise ValueError(f"word {word!r} has weight {word_weight(alphabet, word)}, expected {n}")


class IndexPolynomial:
    """Formal rational combination of equal-weight words."""

    __slots__ = ("alphabet", "n", "terms")

    def __init__(self, alphabet: str, n: int, terms=None):
        if alphabet not in ALPHABETS:
            raise ValueError(f"unknown alphabet {alphabet!r}")
        self.alphabet = alphabet
        self.n = n
        clean = {}
        for word, coeff in (terms or {}).items():
            _validate_word(alphabet, word, n)
            coeff = Fraction(coeff)
            if coeff:
                clean[word] = coeff
        self.terms = clean

    def coefficient(self, word: str) -> Fraction:
        return self.terms.get(word, Fraction(0))

    def scaled(self, factor) -> "IndexPolynomial":
        factor = Fraction(factor)
        return IndexPolynomial(self.alphabet, self.n,
                               {w: c * factor for w, c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, IndexPolynomial) and self.alphabet == other.alphabet
                and self.n == other.n and self.terms == other.terms)

    def __hash__(self):
        return hash((self.alphabet, self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{w}" for w, c in sorted(self.terms.items()))

    def to_dict(self) -> dict:
        return {
            "alphabet": self.alphabet,
            "n": self.n,
            "terms": {w: str(c) for w, c in sorted(self.terms.items())},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "IndexPolynomial":
        return cls(data["alphabet"], int(data["n"]),
                   {w: Fraction(c) for w, c in data["terms"].items()})


def subset_word(mask: int, n: int, on: str, off: str) -> str:
    return "".join(on if mask >> i & 1 else off for i in range(n))


def word_subset(word: str, on: str) -> int:
    return mask_of(i + 1 for i, ch in enumerate(word) if ch == on)


def ab_index(v) -> IndexPolynomial:
    """ab-index from an H-basis flag vector: word u_S (b on S) has
    coefficient h_S."""
    if v.basis != "H":
        raise ValueError(f"ab_index needs basis H, got {v.basis}")
    return IndexPolynomial("AB", v.n,
                           {subset_word(m, v.n, "b", "a"): c for m, c in v.entries.items()})


def ce_index(v) -> IndexPolynomial:
    """ce-index from an L-basis flag vector: word u_S (e on S) has
    coefficient L_S."""
    if v.basis != "L":
        raise ValueError(f"ce_index needs basis L, got {v.basis}")
    return IndexPolynomial("CE", v.n,
                           {subset_word(m, v.n, "e", "c"): c for m, c in v.entries.items()})


def ab_to_ce(poly: IndexPolynomial) -> IndexPolynomial:
    """Rewrite an ab-polynomial in c = a+b, e = a-b, i.e. substitute
    a = (c+e)/2 and b = (c-e)/2 and expand."""
    if poly.alphabet != "AB":
        raise ValueError("ab_to_ce needs an AB polynomial")
    n = poly.n
    acc = {}
    for word, coeff in poly.terms.items():
        # position i contributes +-1/2 per ce-letter choice; only a 'b'
        # meeting an 'e' flips the sign
        for ce_mask in range(1 << n):
            sign = 1
            for i, ch in enumerate(word):
                if ch == "b" and ce_mask >> i & 1:
                    sign = -sign
            key = subset_word(ce_mask, n, "e", "c")
            acc[key] = acc.get(key, Fraction(0)) + coeff * sign * HALF ** n
    return IndexPolynomial("CE", n, acc)


def cd_word_for_even_set(mask: int, n: int) -> str:
    """The unique cd-word of weight n whose d's occupy the positions of
    the even set: each maximal run tiles into adjacent pairs."""
    if not is_even_set(mask):
        raise ValueError(f"{ranks_of(mask)} is not an even set")
    starts = set()
    for a, b in maximal_runs(mask):
        starts.update(range(a, b + 1, 2))
    word = []
    pos = 1
    while pos <= n:
        if pos in starts:
            word.append("d")
            pos += 2
        else:
            word.append("c")
            pos += 1
    return "".join(word)


def d_position_pairs(word: str) -> list:
    """Adjacent position pairs [i,i+1] occupied by each d of a cd-word."""
    pairs = []
    pos = 1
    for ch in word:
        if ch == "d":
            pairs.append((pos, pos + 1))
            pos += 2
        else:
            pos += 1
    return pairs


def cd_to_ce(poly: IndexPolynomial) -> IndexPolynomial:
    """Expand every d into (cc - ee)/2."""
    if poly.alphabet != "CD":
        raise ValueError("cd_to_ce needs a CD polynomial")
    acc = {}
    for word, coeff in poly.terms.items():
        pairs = d_position_pairs(word)
        k = len(pairs)
        for j_mask in range(1 << k):
            e_mask = 0
            for j in range(k):
                if j_mask >> j & 1:
                    a, b = pairs[j]
                    e_mask |= mask_of((a, b))
            sign = -1 if j_mask.bit_count() & 1 else 1
            key = subset_word(e_mask, poly.n, "e", "c")
            acc[key] = acc.get(key, Fraction(0)) + coeff * sign * HALF ** k
    return IndexPolynomial("CE", poly.n, acc)


def ce_to_cd(poly: IndexPolynomial) -> IndexPolynomial:
    """Invert d = (cc - ee)/2.

    Succeeds iff the support is contained in the even sets; otherwise
    raises NotCDExpressibleError.  Elimination runs over support sets in
    decreasing cardinality: the unique cd-word whose expansion peaks at
    the set is peeled off, which only disturbs smaller even sets.
    """
    if poly.alphabet != "CE":
        raise ValueError("ce_to_cd needs a CE polynomial")
    n = poly.n
    residual = {word_subset(w, "e"): c for w, c in poly.terms.items()}
    bad = sorted((m for m in residual if not is_even_set(m)),
                 key=lambda m: (m.bit_count(), ranks_of(m)))
    if bad:
        raise NotCDExpressibleError(
            f"not cd-expressible: e-support {ranks_of(bad[0])} is not an even set")
    out = {}
    for mask in sorted(residual, key=lambda m: -m.bit_count()):
        coeff = residual.get(mask, Fraction(0))
        if not coeff:
            continue
        word = cd_word_for_even_set(mask, n)
        k = word.count("d")
        gamma = coeff * Fraction(-2) ** k
        out[word] = gamma
        for expanded, c in cd_to_ce(IndexPolynomial("CD", n, {word: gamma})).terms.items():
            sub = word_subset(expanded, "e")
            residual[sub] = residual.get(sub, Fraction(0)) - c
    leftovers = {m: c for m, c in residual.items() if c}
    if leftovers:
        raise NotCDExpressibleError("not cd-expressible: elimination left a nonzero residual")
    return IndexPolynomial("CD", n, out)
