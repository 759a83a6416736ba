"""Graded posets: Hasse diagrams with a rank function, chain counting,
Mobius values, intervals and the Eulerian / half-Eulerian tests.

Elements are dense integer ids.  Posets are immutable after
construction; comparability is computed once per poset as reachability
bitmasks shared by every query.
"""

from fractions import Fraction

from .subsets import MAX_N, mask_of, ranks_of
from .vectors import FlagVector


class GradedPoset:
    """Finite ranked Hasse diagram with (intended) unique bottom and top.

    Construction only checks structural sanity (ids in range, integer
    ranks); semantic invariants are reported by validate().
    """

    __slots__ = ("rank", "ranks", "covers", "labels",
                 "_up", "_down", "_above", "_below", "_flag", "_mobius")

    def __init__(self, rank: int, ranks, covers, labels=None):
        if rank < 1:
            raise ValueError("rank must be at least 1")
        self.rank = rank
        self.ranks = tuple(int(r) for r in ranks)
        size = len(self.ranks)
        cleaned = []
        for lo, hi in covers:
            if not (0 <= lo < size and 0 <= hi < size):
                raise ValueError(f"cover ({lo},{hi}) references unknown element")
            cleaned.append((int(lo), int(hi)))
        self.covers = tuple(sorted(set(cleaned)))
        if labels is None:
            labels = [str(i) for i in range(size)]
        if len(labels) != size:
            raise ValueError("labels length does not match element count")
        self.labels = tuple(str(x) for x in labels)
        up = [[] for _ in range(size)]
        down = [[] for _ in range(size)]
        for lo, hi in self.covers:
            up[lo].append(hi)
            down[hi].append(lo)
        self._up = tuple(tuple(sorted(s)) for s in up)
        self._down = tuple(tuple(sorted(s)) for s in down)
        self._above = None
        self._below = None
        self._flag = None
        self._mobius = {}

    @property
    def n(self) -> int:
        """Ambient size: flag subsets live in [1,n] with n = rank - 1."""
        return self.rank - 1

    @property
    def size(self) -> int:
        return len(self.ranks)

    def elements_at(self, r: int) -> tuple:
        return tuple(i for i in range(self.size) if self.ranks[i] == r)

    @property
    def bottom(self) -> int:
        layer = self.elements_at(0)
        if len(layer) != 1:
            raise ValueError("poset has no unique minimum")
        return layer[0]

    @property
    def top(self) -> int:
        layer = self.elements_at(self.rank)
        if len(layer) != 1:
            raise ValueError("poset has no unique maximum")
        return layer[0]

    def _reach(self):
        if self._above is None:
            size = self.size
            above = [0] * size
            for x in sorted(range(size), key=lambda i: -self.ranks[i]):
                m = 0
                for y in self._up[x]:
                    m |= (1 << y) | above[y]
                above[x] = m
            below = [0] * size
            for y in sorted(range(size), key=lambda i: self.ranks[i]):
                m = 0
                for x in self._down[y]:
                    m |= (1 << x) | below[x]
                below[y] = m
            self._above = above
            self._below = below
        return self._above, self._below

    def less(self, x: int, y: int) -> bool:
        above, _ = self._reach()
        return bool(above[x] >> y & 1)

    def leq(self, x: int, y: int) -> bool:
        return x == y or self.less(x, y)

    def up_set(self, x: int) -> int:
        """Bitmask over element ids of {y : y > x}."""
        return self._reach()[0][x]

    def down_set(self, y: int) -> int:
        return self._reach()[1][y]

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "elements": [{"id": i, "rank": self.ranks[i], "label": self.labels[i]}
                         for i in range(self.size)],
            "covers": [list(c) for c in self.covers],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GradedPoset":
        elements = sorted(data["elements"], key=lambda e: e["id"])
        if [e["id"] for e in elements] != list(range(len(elements))):
            raise ValueError("element ids must be dense integers 0..m-1")
        ranks = [e["rank"] for e in elements]
        labels = [e.get("label", str(e["id"])) for e in elements]
        return cls(int(data["rank"]), ranks, data["covers"], labels)

    def __repr__(self):
        return f"GradedPoset(rank={self.rank}, size={self.size})"


def validate(p: GradedPoset) -> list:
    """All violated GradedPoset invariants as messages; empty iff valid."""
    problems = []
    bottoms = p.elements_at(0)
    if len(bottoms) != 1:
        problems.append(f"no unique minimum ({len(bottoms)} elements of rank 0)")
    tops = p.elements_at(p.rank)
    if len(tops) != 1:
        problems.append(f"no unique maximum ({len(tops)} elements of rank {p.rank})")
    for i, r in enumerate(p.ranks):
        if not 0 <= r <= p.rank:
            problems.append(f"element {i} has rank {r} outside [0,{p.rank}]")
    for lo, hi in p.covers:
        gap = p.ranks[hi] - p.ranks[lo]
        if gap != 1:
            problems.append(f"cover ({lo},{hi}) spans rank gap {gap}")
    for i in range(p.size):
        if p.ranks[i] < p.rank and not p._up[i]:
            problems.append(f"element {i} (rank {p.ranks[i]}) has no upper cover")
        if p.ranks[i] > 0 and not p._down[i]:
            problems.append(f"element {i} (rank {p.ranks[i]}) has no lower cover")
    return problems


def flag_f_vector(p: GradedPoset) -> FlagVector:
    """Chain counts: entry at S is the number of chains whose rank set
    is exactly S.  Computed per subset by a path-count sweep over the
    selected rank layers."""
    if p.n > MAX_N:
        raise ValueError(f"rank overflow: n={p.n} exceeds {MAX_N}")
    if p._flag is None:
        above, _ = p._reach()
        layers = {r: p.elements_at(r) for r in range(1, p.rank)}
        entries = {0: Fraction(1)}
        for mask in range(1, 1 << p.n):
            rs = ranks_of(mask)
            counts = {x: 1 for x in layers[rs[0]]}
            for r in rs[1:]:
                nxt = dict.fromkeys(layers[r], 0)
                for x, c in counts.items():
                    ax = above[x]
                    for y in layers[r]:
                        if ax >> y & 1:
                            nxt[y] += c
                counts = nxt
            total = sum(counts.values())
            if total:
                entries[mask] = Fraction(total)
        p._flag = FlagVector(p.n, "F", entries)
    return p._flag


def mobius(p: GradedPoset, x: int, y: int) -> int:
    """Mobius value of the interval [x,y] by the defining recursion."""
    if not p.leq(x, y):
        raise ValueError(f"not comparable: {x} <= {y} fails")
    cache = p._mobius.get(x)
    if cache is None:
        above, _ = p._reach()
        cache = {x: 1}
        members = sorted((z for z in range(p.size) if above[x] >> z & 1),
                         key=lambda z: (p.ranks[z], z))
        for z in members:
            total = 0
            for w, mu_w in cache.items():
                if w == z:
                    continue
                if w == x or above[w] >> z & 1:
                    total += mu_w
            cache[z] = -total
        p._mobius[x] = cache
    return cache[y]


def interval(p: GradedPoset, x: int, y: int) -> GradedPoset:
    """The closed interval [x,y] as a graded poset of rank
    rho(y)-rho(x), ranks re-based to start at 0."""
    if x == y:
        raise ValueError("degenerate interval: x == y")
    if not p.leq(x, y):
        raise ValueError(f"not comparable: {x} <= {y} fails")
    above, below = p._reach()
    members = [x] + [z for z in range(p.size)
                     if (above[x] >> z & 1) and (z == y or below[y] >> z & 1)]
    members.sort(key=lambda z: (p.ranks[z], z))
    index = {z: i for i, z in enumerate(members)}
    base = p.ranks[x]
    return GradedPoset(
        p.ranks[y] - base,
        [p.ranks[z] - base for z in members],
        [(index[lo], index[hi]) for lo, hi in p.covers if lo in index and hi in index],
        [p.labels[z] for z in members],
    )


def rank_selected(p: GradedPoset, s_mask: int) -> GradedPoset:
    """The S-rank-selected subposet: elements with rank in S plus bottom
    and top, ranks re-indexed to 1..|S|."""
    selected = [r for r in ranks_of(s_mask) if r <= p.n]
    above, _ = p._reach()
    members = [p.bottom]
    new_ranks = [0]
    for i, r in enumerate(selected, start=1):
        for z in p.elements_at(r):
            members.append(z)
            new_ranks.append(i)
    members.append(p.top)
    new_ranks.append(len(selected) + 1)
    index_layers = [[0]]
    pos = 1
    for i, r in enumerate(selected, start=1):
        layer = list(range(pos, pos + len(p.elements_at(r))))
        index_layers.append(layer)
        pos += len(layer)
    index_layers.append([pos])
    covers = []
    for lower, upper in zip(index_layers, index_layers[1:]):
        for iu in upper:
            for il in lower:
                a, b = members[il], members[iu]
                if a == b or above[a] >> b & 1:
                    covers.append((il, iu))
    return GradedPoset(len(selected) + 1, new_ranks, covers,
                       [p.labels[z] for z in members])


def dual(p: GradedPoset) -> GradedPoset:
    """Order-reversal: covers flipped, rank rho'(x) = rank - rho(x)."""
    order = sorted(range(p.size), key=lambda i: (p.rank - p.ranks[i], i))
    index = {z: i for i, z in enumerate(order)}
    return GradedPoset(
        p.rank,
        [p.rank - p.ranks[z] for z in order],
        [(index[hi], index[lo]) for lo, hi in p.covers],
        [p.labels[z] for z in order],
    )


def _interval_pairs(p: GradedPoset):
    """Comparable pairs (x,y), x < y, ordered by (rank span, x, y)."""
    above, _ = p._reach()
    pairs = []
    for x in range(p.size):
        ax = above[x]
        for y in range(p.size):
            if ax >> y & 1:
                pairs.append((p.ranks[y] - p.ranks[x], x, y))
    pairs.sort()
    return [(x, y) for _, x, y in pairs]


def is_eulerian(p: GradedPoset):
    """(ok, witness): ok iff mu([x,y]) = (-1)^rho(x,y) for every
    interval; witness is the first failing (x,y)."""
    for x, y in _interval_pairs(p):
        span = p.ranks[y] - p.ranks[x]
        if mobius(p, x, y) != (-1) ** span:
            return False, (x, y)
    return True, None


def is_half_eulerian(p: GradedPoset):
    """(ok, witness): ok iff every interval [x,y] satisfies
    sum_i (-1)^(i-1) f_i([x,y]) = (1 + (-1)^rho(x,y)) / 2."""
    above, below = p._reach()
    for x, y in _interval_pairs(p):
        span = p.ranks[y] - p.ranks[x]
        if span < 2:
            continue
        counts = [0] * span
        for z in range(p.size):
            if (above[x] >> z & 1) and (below[y] >> z & 1):
                counts[p.ranks[z] - p.ranks[x]] += 1
        alt = sum(c if i % 2 == 1 else -c for i, c in enumerate(counts))
        if 2 * alt != 1 + (-1) ** span:
            return False, (x, y)
    return True, None


def random_graded_poset(rank: int, rng, max_width: int = 8) -> GradedPoset:
    """Seeded random valid graded poset: layered random bipartite covers
    with minimum degree 1 both ways."""
    widths = [1] + [rng.randint(1, max_width) for _ in range(rank - 1)] + [1]
    ids = []
    ranks = []
    for r, w in enumerate(widths):
        layer = list(range(len(ranks), len(ranks) + w))
        ids.append(layer)
        ranks.extend([r] * w)
    covers = set()
    for lower, upper in zip(ids, ids[1:]):
        for x in lower:
            covers.add((x, rng.choice(upper)))
        for y in upper:
            if not any((x, y) in covers for x in lower):
                covers.add((rng.choice(lower), y))
        for x in lower:
            for y in upper:
                if rng.random() < 0.3:
                    covers.add((x, y))
    return GradedPoset(rank, ranks, sorted(covers))


def flag_mask(*ranks) -> int:
    """Convenience: bitmask for explicit ranks, e.g. flag_mask(1,3)."""
    return mask_of(ranks)
