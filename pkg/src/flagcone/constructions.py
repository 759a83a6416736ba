"""Poset constructions: chains, Boolean lattices, the interval doubling
operator, horizontal doubles, the limit-family posets P(n,I,N), rank
gluing, and a tiny expression language for the CLI.

Copy labels append '#<copy index>' so every element carries its
construction trace; per-rank element order after doubling is copy-major
(copy index, then original order), which keeps glue bijections
reproducible.
"""

import re

from .posets import GradedPoset
from .subsets import ranks_of

__all__ = [
    "chain", "boolean_lattice", "double_interval", "generalized_double",
    "horizontal_double", "limit_family_poset", "glue", "appendix_a1",
    "parse_construction",
]


def chain(r: int) -> GradedPoset:
    """Totally ordered poset of rank r: r+1 elements, f_S = 1 for all S."""
    if r < 1:
        raise ValueError("chain rank must be at least 1")
    return GradedPoset(r, range(r + 1), [(i, i + 1) for i in range(r)],
                       [str(i) for i in range(r + 1)])


def boolean_lattice(r: int) -> GradedPoset:
    """Subsets of [1,r] ordered by inclusion."""
    if r < 1:
        raise ValueError("boolean lattice rank must be at least 1")
    masks = sorted(range(1 << r), key=lambda m: (m.bit_count(), m))
    index = {m: i for i, m in enumerate(masks)}
    covers = []
    for m in masks:
        for i in range(r):
            if not m >> i & 1:
                covers.append((index[m], index[m | (1 << i)]))
    labels = [",".join(map(str, ranks_of(m))) or "empty" for m in masks]
    return GradedPoset(r, [m.bit_count() for m in masks], covers, labels)


def double_interval(p: GradedPoset, a: int, b: int, k: int) -> GradedPoset:
    """The doubling operator: every element with rank in [a,b] is
    replaced by k copies; relations to outside ranks are kept for every
    copy, relations inside [a,b] only between equal copy indices."""
    if not 1 <= a <= b <= p.rank - 1:
        raise ValueError(f"interval [{a},{b}] outside [1,{p.rank - 1}]")
    if k < 1:
        raise ValueError("multiplicity must be positive")
    inside = [a <= p.ranks[i] <= b for i in range(p.size)]
    new_elems = []
    for old in range(p.size):
        if inside[old]:
            new_elems.extend((p.ranks[old], c, old) for c in range(1, k + 1))
        else:
            new_elems.append((p.ranks[old], 0, old))
    new_elems.sort()
    index = {(old, c): i for i, (_, c, old) in enumerate(new_elems)}
    covers = []
    for lo, hi in p.covers:
        if inside[lo] and inside[hi]:
            covers.extend((index[(lo, c)], index[(hi, c)]) for c in range(1, k + 1))
        elif inside[lo]:
            covers.extend((index[(lo, c)], index[(hi, 0)]) for c in range(1, k + 1))
        elif inside[hi]:
            covers.extend((index[(lo, 0)], index[(hi, c)]) for c in range(1, k + 1))
        else:
            covers.append((index[(lo, 0)], index[(hi, 0)]))
    return GradedPoset(p.rank, [r for r, _, _ in new_elems], covers,
                       [p.labels[old] + (f"#{c}" if c else "")
                        for _, c, old in new_elems])


def generalized_double(p: GradedPoset, specs) -> GradedPoset:
    """Apply double_interval left to right for (a, b, k) triples."""
    for a, b, k in specs:
        p = double_interval(p, a, b, k)
    return p


def horizontal_double(p: GradedPoset) -> GradedPoset:
    """Split every mid-rank element into two incomparable copies: every
    Hasse edge between mid ranks becomes a bowtie.  Same poset as
    applying the doubling operator with k=2 at every single rank."""
    mid = [0 < p.ranks[i] < p.rank for i in range(p.size)]
    new_elems = []
    for old in range(p.size):
        if mid[old]:
            new_elems.extend((p.ranks[old], c, old) for c in (1, 2))
        else:
            new_elems.append((p.ranks[old], 0, old))
    new_elems.sort()
    index = {(old, c): i for i, (_, c, old) in enumerate(new_elems)}
    covers = []
    for lo, hi in p.covers:
        los = (1, 2) if mid[lo] else (0,)
        his = (1, 2) if mid[hi] else (0,)
        covers.extend((index[(lo, cl)], index[(hi, ch)]) for cl in los for ch in his)
    return GradedPoset(p.rank, [r for r, _, _ in new_elems], covers,
                       [p.labels[old] + (f"#{c}" if c else "")
                        for _, c, old in new_elems])


def limit_family_poset(n: int, system, N: int) -> GradedPoset:
    """P(n, I, N): a chain of rank n+1 with the k-fold doubling operator
    applied for every interval of the antichain system (multiplicity N,
    intervals applied sorted by left endpoint)."""
    from .systems import IntervalSystem
    if not isinstance(system, IntervalSystem):
        system = IntervalSystem(n, system)
    if system.n != n:
        raise ValueError("system ambient size does not match n")
    if N < 1:
        raise ValueError("N must be positive")
    p = chain(n + 1)
    for a, b in system.intervals:
        p = double_interval(p, a, b, N)
    return p


def glue(p: GradedPoset, q: GradedPoset, ranks, bijections=None) -> GradedPoset:
    """Identify two posets of equal rank at the given mid ranks (bottom
    and top are always identified).

    At each glued rank the layers must have equal size; the default
    identification matches elements by construction order, or pass
    bijections = {rank: [p-position for each q-position]}.
    """
    if p.rank != q.rank:
        raise ValueError("glued posets must have equal rank")
    glued = sorted(set(ranks) | {0, p.rank})
    if any(r < 0 or r > p.rank for r in glued):
        raise ValueError("glued ranks outside [0, rank]")
    bijections = bijections or {}
    q_to_new = {}
    mapping_layers = {}
    for r in glued:
        pl, ql = p.elements_at(r), q.elements_at(r)
        if len(pl) != len(ql):
            raise ValueError(
                f"rank cardinality mismatch at rank {r}: {len(pl)} vs {len(ql)}")
        positions = bijections.get(r, list(range(len(ql))))
        if sorted(positions) != list(range(len(pl))):
            raise ValueError(f"bijection at rank {r} is not a permutation")
        mapping_layers[r] = [pl[pos] for pos in positions]
    new_elems = [(p.ranks[i], 0, i) for i in range(p.size)]
    new_elems.extend((q.ranks[j], 1, j) for j in range(q.size)
                     if q.ranks[j] not in mapping_layers)
    new_elems.sort()
    index = {(src, old): i for i, (_, src, old) in enumerate(new_elems)}
    for r, p_targets in mapping_layers.items():
        for pos, j in enumerate(q.elements_at(r)):
            q_to_new[j] = index[(0, p_targets[pos])]
    for _, src, old in new_elems:
        if src == 1:
            q_to_new[old] = index[(1, old)]
    covers = {(index[(0, lo)], index[(0, hi)]) for lo, hi in p.covers}
    covers.update((q_to_new[lo], q_to_new[hi]) for lo, hi in q.covers)
    labels = [p.labels[old] if src == 0 else q.labels[old] + "'"
              for _, src, old in new_elems]
    return GradedPoset(p.rank, [r for r, _, _ in new_elems], sorted(covers), labels)


def appendix_a1(N: int) -> GradedPoset:
    """The glued rank-7 half-Eulerian fixture: the [1,2]+[2,6] and
    [1,5]+[5,6] doubles of a rank-7 chain identified at ranks 1 and 6."""
    left = generalized_double(chain(7), [(1, 2, N), (2, 6, N)])
    right = generalized_double(chain(7), [(1, 5, N), (5, 6, N)])
    return glue(left, right, {1, 6})


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+|[(){}\[\],])")


def _tokenize(text: str) -> list:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad construction syntax at {text[pos:pos + 12]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected!r}, got {tok!r}")
        self.pos += 1
        return tok

    def int_(self):
        tok = self.take()
        if not tok.isdigit():
            raise ValueError(f"expected integer, got {tok!r}")
        return int(tok)

    def interval(self):
        self.take("[")
        a = self.int_()
        self.take(",")
        b = self.int_()
        self.take("]")
        return (a, b)

    def braced(self):
        """{...}: either a set of intervals or a set of integers."""
        self.take("{")
        intervals, ints = [], []
        while self.peek() != "}":
            if self.peek() == "[":
                intervals.append(self.interval())
            else:
                ints.append(self.int_())
            if self.peek() == ",":
                self.take(",")
        self.take("}")
        if intervals and ints:
            raise ValueError("cannot mix intervals and ranks in one set")
        return intervals if intervals else ints

    def expr(self) -> GradedPoset:
        name = self.take()
        self.take("(")
        if name == "chain":
            out = chain(self.int_())
        elif name == "boolean":
            out = boolean_lattice(self.int_())
        elif name == "double":
            inner = self.expr()
            self.take(",")
            a, b = self.interval()
            self.take(",")
            out = double_interval(inner, a, b, self.int_())
        elif name == "hdouble":
            out = horizontal_double(self.expr())
        elif name == "dual":
            from .posets import dual as dual_op
            out = dual_op(self.expr())
        elif name == "limitposet":
            n = self.int_()
            self.take(",")
            intervals = self.braced()
            self.take(",")
            out = limit_family_poset(n, intervals, self.int_())
        elif name == "glue":
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take(",")
            out = glue(left, right, self.braced())
        elif name == "appendixA1":
            out = appendix_a1(self.int_())
        else:
            raise ValueError(f"unknown construction {name!r}")
        self.take(")")
        return out


def parse_construction(text: str) -> GradedPoset:
    """Evaluate a construction expression such as
    'glue(double(chain(7),[1,2],2), chain(7), {1})' or 'appendixA1(2)'."""
    parser = _Parser(_tokenize(text))
    result = parser.expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input after construction: {parser.peek()!r}")
    return result
