"""Bitmask encoding of rank subsets of [1,n].

Rank i (1-based) lives at bit i-1.  All flag-vector indexing, even-set
tests and frame orderings in this package go through these helpers.
"""

MAX_N = 20  # hard guard: chain counting is O(2^n * |P|^2), 20 bounds memory


def mask_of(ranks) -> int:
    """Bitmask for an iterable of ranks in [1,n]."""
    m = 0
    for r in ranks:
        if r < 1:
            raise ValueError(f"rank {r} out of range, ranks start at 1")
        m |= 1 << (r - 1)
    return m


def ranks_of(mask: int) -> tuple:
    """Ascending tuple of ranks in the mask."""
    out = []
    r = 1
    while mask:
        if mask & 1:
            out.append(r)
        mask >>= 1
        r += 1
    return tuple(out)


def mask_key(mask: int) -> str:
    """Serialization key: comma-joined ascending ranks, '' for the empty set."""
    return ",".join(str(r) for r in ranks_of(mask))


def parse_mask_key(key: str) -> int:
    if not key:
        return 0
    return mask_of(int(part) for part in key.split(","))


def complement(mask: int, n: int) -> int:
    return ((1 << n) - 1) ^ mask


def reverse_mask(mask: int, n: int) -> int:
    """Reflect a subset of [1,n] through i -> n+1-i."""
    return mask_of(n + 1 - r for r in ranks_of(mask))


def submasks(mask: int):
    """All submasks of mask, descending, ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def interval_mask(a: int, b: int) -> int:
    """Mask of the interval [a,b], 1 <= a <= b."""
    if not 1 <= a <= b:
        raise ValueError(f"bad interval [{a},{b}]")
    return ((1 << b) - 1) ^ ((1 << (a - 1)) - 1)


def maximal_runs(mask: int) -> list:
    """Maximal intervals [a,b] contained in the set, ascending."""
    runs = []
    ranks = ranks_of(mask)
    i = 0
    while i < len(ranks):
        j = i
        while j + 1 < len(ranks) and ranks[j + 1] == ranks[j] + 1:
            j += 1
        runs.append((ranks[i], ranks[j]))
        i = j + 1
    return runs


def is_even_set(mask: int) -> bool:
    """True iff every maximal interval of the set has even length."""
    return all((b - a + 1) % 2 == 0 for a, b in maximal_runs(mask))


def even_sets(n: int) -> list:
    """Even subsets of [1,n] ordered by (cardinality, rank tuple)."""
    sets = [m for m in range(1 << n) if is_even_set(m)]
    sets.sort(key=lambda m: (m.bit_count(), ranks_of(m)))
    return sets


def fibonacci_dim(n: int) -> int:
    """e_n with e_0 = e_1 = 1, e_n = e_{n-1} + e_{n-2}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return b if n >= 1 else a
