"""Interval systems on [1,n]: antichains of subintervals, the even
systems and their +-1 sequence bijection, and the limit flag vectors of
the doubling construction.

The limit ell-vector of a system {I_1..I_k} has
    ell_S = sum_j (-1)^j #{j-subsets of intervals with union S},
the N -> infinity normalization of ell_S(P(n,I,N)) / N^k.
"""

from fractions import Fraction

from .subsets import interval_mask, mask_of, maximal_runs, ranks_of
from .vectors import FlagVector
from .words import IndexPolynomial, ce_index, ce_to_cd, d_position_pairs, word_weight


class IntervalSystem:
    """An antichain of intervals [a,b] within [1,n], sorted by left
    endpoint (for an antichain both endpoints are then strictly
    increasing)."""

    __slots__ = ("n", "intervals")

    def __init__(self, n: int, intervals):
        if n < 0:
            raise ValueError("ambient size must be nonnegative")
        self.n = n
        ivs = sorted((int(a), int(b)) for a, b in intervals)
        for a, b in ivs:
            if not 1 <= a <= b <= n:
                raise ValueError(f"interval [{a},{b}] outside [1,{n}]")
        for (a1, b1), (a2, b2) in zip(ivs, ivs[1:]):
            if a1 == a2 or b2 <= b1:
                raise ValueError(
                    f"not an antichain: [{a1},{b1}] and [{a2},{b2}] are nested")
        self.intervals = tuple(ivs)

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __eq__(self, other):
        return (isinstance(other, IntervalSystem)
                and (self.n, self.intervals) == (other.n, other.intervals))

    def __hash__(self):
        return hash((self.n, self.intervals))

    def __repr__(self):
        body = ",".join(f"[{a},{b}]" for a, b in self.intervals)
        return f"{{{body}}}@{self.n}"

    def masks(self) -> list:
        return [interval_mask(a, b) for a, b in self.intervals]

    def is_even(self) -> bool:
        return is_even_system(self)

    def shifted(self, offset: int, n: int) -> "IntervalSystem":
        """Translate every interval by -offset, keeping those inside [1,n]."""
        kept = [(a - offset, b - offset) for a, b in self.intervals
                if a - offset >= 1 and b - offset <= n]
        return IntervalSystem(n, kept)

    def reversed(self) -> "IntervalSystem":
        """Reflect through i -> n+1-i."""
        return IntervalSystem(self.n, [(self.n + 1 - b, self.n + 1 - a)
                                       for a, b in self.intervals])

    def to_dict(self) -> dict:
        return {"n": self.n, "intervals": [list(iv) for iv in self.intervals]}

    @classmethod
    def from_dict(cls, data: dict) -> "IntervalSystem":
        return cls(int(data["n"]), data["intervals"])


def is_even_system(system: IntervalSystem) -> bool:
    """True iff every interval has even size and every pairwise
    intersection has even size (0 counts as even)."""
    ivs = system.intervals
    if any((b - a + 1) % 2 for a, b in ivs):
        return False
    for i, (a1, b1) in enumerate(ivs):
        for a2, _ in ivs[i + 1:]:
            if a2 <= b1 and (b1 - a2 + 1) % 2:
                return False
    return True


def enumerate_antichain_systems(n: int):
    """All antichain interval systems on [1,n] (including the empty
    one), in lexicographic order of their interval lists."""
    out = []

    def grow(chosen, last_a, last_b):
        out.append(IntervalSystem(n, chosen))
        for a in range(last_a + 1, n + 1):
            for b in range(max(a, last_b + 1), n + 1):
                chosen.append((a, b))
                grow(chosen, a, b)
                chosen.pop()

    grow([], 0, 0)
    return out


def enumerate_even_systems(n: int) -> list:
    """All even interval systems on [1,n]; there are C(n, floor(n/2)) of
    them.  Ordered lexicographically by lambda-encoding."""
    if n > 12:
        raise ValueError("even-system enumeration is guarded at n <= 12")
    out = []

    def grow(chosen, last_a, last_b):
        out.append(IntervalSystem(n, list(chosen)))
        for a in range(last_a + 1, n + 1):
            for b in range(max(a + 1, last_b + 1), n + 1):
                if (b - a) % 2 == 0:
                    continue  # interval size must be even
                if any(a <= bj and (bj - a + 1) % 2 for _, bj in chosen):
                    continue  # odd overlap with an earlier interval
                chosen.append((a, b))
                grow(chosen, a, b)
                chosen.pop()

    grow([], 0, 0)
    out.sort(key=lambda s: lambda_encode(s))
    return out


def lambda_encode(system: IntervalSystem) -> tuple:
    """Even system -> sequence in {-1,+1}^n: lambda_i = (-1)^i at
    interval endpoints, (-1)^(i-1) elsewhere."""
    if not is_even_system(system):
        raise ValueError("lambda encoding is defined for even systems only")
    endpoints = {a for a, _ in system.intervals} | {b for _, b in system.intervals}
    return tuple((-1) ** i if i in endpoints else (-1) ** (i - 1)
                 for i in range(1, system.n + 1))


def lambda_decode(seq) -> IntervalSystem:
    """Inverse of lambda_encode.  The sum must be 0 for even n, 1 for
    odd n."""
    seq = tuple(int(x) for x in seq)
    n = len(seq)
    if any(x not in (-1, 1) for x in seq):
        raise ValueError("lambda entries must be +-1")
    if sum(seq) != (n % 2):
        raise ValueError(f"lambda sum must be {n % 2} for n={n}, got {sum(seq)}")
    flips = [i for i in range(1, n + 1) if seq[i - 1] == (-1) ** i]

    def pair(indices):
        if not indices:
            return []
        a = indices[0]
        for j in range(1, len(indices)):
            if (indices[j] - a) % 2 == 1:
                b = indices[j]
                return [(a, b)] + pair(indices[1:j] + indices[j + 1:])
        raise ValueError("unbalanced endpoint parities")  # unreachable given the sum check

    return IntervalSystem(n, pair(flips))


def limit_ell_vector(n: int, system) -> FlagVector:
    """ell-vector of the limit of P(n,I,N)/N^k: for each subset J of
    intervals, (-1)^|J| lands on the union of J."""
    if not isinstance(system, IntervalSystem):
        system = IntervalSystem(n, system)
    masks = system.masks()
    k = len(masks)
    entries = {}
    for j_mask in range(1 << k):
        union = 0
        for j in range(k):
            if j_mask >> j & 1:
                union |= masks[j]
        sign = -1 if j_mask.bit_count() & 1 else 1
        entries[union] = entries.get(union, 0) + sign
    return FlagVector(n, "ELL", {m: Fraction(v) for m, v in entries.items() if v})


def limit_f_vector(n: int, system) -> FlagVector:
    """f-vector of the limit poset: f_S = 1 iff S meets every interval."""
    if not isinstance(system, IntervalSystem):
        system = IntervalSystem(n, system)
    masks = system.masks()
    entries = {}
    for s in range(1 << n):
        if all(s & m for m in masks):
            entries[s] = Fraction(1)
    return FlagVector(n, "F", entries)


def doubled_limit_L_vector(n: int, system) -> FlagVector:
    """L-vector of the doubled limit poset D P(n,I): identical values to
    the limit ell-vector."""
    return FlagVector(n, "L", limit_ell_vector(n, system).entries)


def doubled_limit_f_vector(n: int, system) -> FlagVector:
    """f-vector of D P(n,I): 2^|S| times the limit f-vector."""
    base = limit_f_vector(n, system)
    return FlagVector(n, "F", {m: v * (1 << m.bit_count())
                               for m, v in base.entries.items()})


def maximal_interval_system(mask: int, n: int) -> IntervalSystem:
    """I[S]: the maximal intervals contained in the set."""
    return IntervalSystem(n, maximal_runs(mask))


def system_for_cd_word(word: str) -> IntervalSystem:
    """The even system of adjacent pairs at the d-positions of a cd-word."""
    n = word_weight("CD", word)
    return IntervalSystem(n, d_position_pairs(word))


def cd_index_of_doubled_limit(word: str) -> IndexPolynomial:
    """cd-index of D P(n, I_w) computed through the ce pipeline; equals
    2^k w with k the number of d's."""
    n = word_weight("CD", word)
    return ce_to_cd(ce_index(doubled_limit_L_vector(n, system_for_cd_word(word))))


def extreme_sum_vector(n: int, systems) -> FlagVector:
    """Entrywise sum of limit ell-vectors over several antichain systems."""
    total = FlagVector(n, "ELL", {})
    for system in systems:
        total = total + limit_ell_vector(n, system)
    return total


def doubled_sum_L_vector(n: int, systems) -> FlagVector:
    """The extreme-sum vector read as an L-vector of doubled limits."""
    return FlagVector(n, "L", extreme_sum_vector(n, systems).entries)


# The four rank-7 extreme rays that are not doubled limits of single even
# systems; each is a sum of limit posets of non-even antichain systems.
# The fourth is the coordinate reversal (poset dual) of the third.
RANK7_EXTREME_SYSTEMS = (
    (((1, 2), (2, 6)), ((2, 5), (5, 6))),
    (((1, 3), (3, 4), (4, 6)), ((1, 2), (2, 3)), ((4, 5), (5, 6))),
    (((1, 2), (3, 4), (4, 5)), ((3, 5), (5, 6)), ((1, 2), (2, 5))),
    (((1, 2), (2, 4)), ((2, 5), (5, 6)), ((2, 3), (3, 4), (5, 6))),
)


def rank7_extreme_vectors() -> list:
    """The four extra rank-7 extreme vectors (ELL basis, n = 6)."""
    return [extreme_sum_vector(6, systems) for systems in RANK7_EXTREME_SYSTEMS]
