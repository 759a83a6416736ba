"""Exact rational polyhedral cone computations in the even-set
coordinate subspace: double description between extreme rays and facet
normals, extremality and membership tests, and the rank <= 7 theorem
verification reports.

All arithmetic is exact (integers and Fractions); vectors are
normalized to primitive integer tuples with the inequality direction
preserved.  The double description insertion order is lexicographic, so
every run is deterministic.
"""

from fractions import Fraction
from math import gcd

from .forms import (LinearForm, convolve_f, enumerate_lemma_pairs,
                    facet_theorem_candidates, ijk_form, inequality_lemma_form,
                    rank_select_form)
from .subsets import even_sets, fibonacci_dim, is_even_set, mask_key, ranks_of
from .systems import (doubled_limit_L_vector, doubled_sum_L_vector,
                      enumerate_even_systems, RANK7_EXTREME_SYSTEMS)
from .vectors import FlagVector


class ConeError(ValueError):
    pass


def primitive(vec) -> tuple:
    """Scale an exact-rational vector to coprime integers, sign kept."""
    fracs = [Fraction(x) for x in vec]
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def rational_rank(rows) -> int:
    """Rank of a list of equal-length exact-rational vectors."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    cols = len(mat[0])
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                factor = mat[i][col]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _invert(mat) -> list:
    """Exact inverse of a square rational matrix (columns returned as rows)."""
    d = len(mat)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(d)]
            for i, row in enumerate(mat)]
    for col in range(d):
        pivot = next((i for i in range(col, d) if work[i][col]), None)
        if pivot is None:
            raise ConeError("singular matrix")
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for i in range(d):
            if i != col and work[i][col]:
                factor = work[i][col]
                work[i] = [x - factor * y for x, y in zip(work[i], work[col])]
    return [[work[i][d + j] for i in range(d)] for j in range(d)]


def dual_extreme_rays(constraints) -> list:
    """Extreme rays of {y : a . y >= 0 for every constraint a}.

    Double description: start from a simplicial subcone cut out by d
    independent constraints, insert the rest in lexicographic order,
    keeping only combinations of adjacent rays (tight-set rank d-2).
    Requires the constraints to span the space, i.e. a pointed cone.
    """
    rows = sorted({primitive(a) for a in constraints if any(a)})
    if not rows:
        raise ConeError("no nonzero constraints given")
    dim = len(rows[0])
    if any(len(r) != dim for r in rows):
        raise ConeError("inconsistent constraint dimensions")
    basis_idx = []
    for i, row in enumerate(rows):
        if rational_rank([rows[j] for j in basis_idx] + [row]) > len(basis_idx):
            basis_idx.append(i)
            if len(basis_idx) == dim:
                break
    if len(basis_idx) < dim:
        raise ConeError("constraints do not span the space (cone not pointed)")
    rays = [primitive(col) for col in _invert([rows[i] for i in basis_idx])]
    processed = [rows[i] for i in basis_idx]

    def adjacent(p, m):
        tight = [c for c in processed if _dot(c, p) == 0 and _dot(c, m) == 0]
        return rational_rank(tight) == dim - 2

    for i, row in enumerate(rows):
        if i in basis_idx:
            continue
        vals = [_dot(row, r) for r in rays]
        neg = [r for r, v in zip(rays, vals) if v < 0]
        if neg:
            keep = [r for r, v in zip(rays, vals) if v >= 0]
            pos = [r for r, v in zip(rays, vals) if v > 0]
            fresh = set()
            for p in pos:
                vp = _dot(row, p)
                for m in neg:
                    if adjacent(p, m):
                        vm = _dot(row, m)
                        fresh.add(primitive([vp * mx - vm * px for px, mx in zip(p, m)]))
            rays = keep + sorted(fresh - set(keep))
        processed.append(row)
    return sorted(set(rays))


def facets_from_rays(rays) -> list:
    """Facet normals (inward, primitive) of the cone generated by rays;
    the rays must span the ambient space."""
    return dual_extreme_rays(rays)


def rays_from_facets(facets) -> list:
    """Extreme rays of {x : f . x >= 0}; the facet normals must span the
    space (pointed cone)."""
    return dual_extreme_rays(facets)


def is_extreme(vec, facets) -> bool:
    """True iff the facets tight at vec have rank dim-1.  vec must
    satisfy every facet."""
    vals = [_dot(f, vec) for f in facets]
    if any(v < 0 for v in vals):
        raise ConeError("vector violates a facet; extremality undefined")
    tight = [f for f, v in zip(facets, vals) if v == 0]
    return rational_rank(tight) == len(vec) - 1


def membership(vec, facets):
    """Classify vec against the facet description.

    Returns ('outside', violated facet), ('interior', ()) or
    ('boundary', tuple of tight facet indices).
    """
    tight = []
    for i, f in enumerate(facets):
        v = _dot(f, vec)
        if v < 0:
            return "outside", f
        if v == 0:
            tight.append(i)
    if not tight:
        return "interior", ()
    return "boundary", tuple(tight)


class EvenFrame:
    """Coordinate frame of the even subsets of [1,n], ordered by
    (cardinality, rank tuple); its size is the Fibonacci number e_n."""

    __slots__ = ("n", "sets", "index")

    def __init__(self, n: int):
        if n > 10:
            raise ConeError("even frame guarded at n <= 10")
        self.n = n
        self.sets = tuple(even_sets(n))
        self.index = {m: i for i, m in enumerate(self.sets)}
        assert len(self.sets) == fibonacci_dim(n)

    @property
    def dim(self) -> int:
        return len(self.sets)

    def project_vector(self, v: FlagVector) -> tuple:
        """L-coordinates on the even sets; errors if the vector has
        nonzero L-value on a non-even set."""
        if v.n != self.n:
            raise ConeError(f"dimension mismatch: frame n={self.n}, vector n={v.n}")
        vL = v.to_basis("L")
        for m, val in vL.entries.items():
            if val and not is_even_set(m):
                raise ConeError(
                    f"outside subspace: L_{{{mask_key(m)}}} = {val} is nonzero")
        return tuple(vL.get(m) for m in self.sets)

    def restrict_form(self, form: LinearForm):
        """Primitive integer coefficients of the form on the even
        coordinates (None if it vanishes there)."""
        fL = form.to_basis("L")
        vec = [fL.get(m) for m in self.sets]
        if not any(vec):
            return None
        return primitive(vec)


def _basic_factor_products(n_plus_1: int):
    """All convolution products of the generators f^m_empty and
    f^m_i - 2 f^m_empty with total rank n_plus_1 (possibly a single
    factor, possibly none for rank 0)."""
    cache = {0: [None]}

    def build(total):
        if total in cache:
            return cache[total]
        out = []
        for m in range(1, total + 1):
            heads = [rank_select_form(m - 1, 0, provenance=f"f^{m}_empty")]
            for i in range(1, m):
                heads.append(inequality_lemma_form(m - 1, (1 << (m - 1)) - 1, 1 << (i - 1)))
            for head in heads:
                for tail in build(total - m):
                    out.append(head if tail is None else convolve_f(head, tail))
        cache[total] = out
        return out

    return build(n_plus_1)


def _ijk_convolution_forms(n: int):
    """Products with exactly one ijk factor and basic factors around it,
    total rank n+1; at least two factors."""
    out = []
    total = n + 1
    for m in range(4, total + 1):
        mid_n = m - 1
        triples = [(i, j, k) for i in range(1, mid_n + 1)
                   for j in range(i + 1, mid_n + 1) for k in range(j + 1, mid_n + 1)]
        for left_rank in range(0, total - m + 1):
            right_rank = total - m - left_rank
            if left_rank == 0 and right_rank == 0:
                continue
            for left in _basic_factor_products(left_rank):
                for right in _basic_factor_products(right_rank):
                    for (i, j, k) in triples:
                        form = ijk_form(mid_n, i, j, k)
                        if left is not None:
                            form = convolve_f(left, form)
                        if right is not None:
                            form = convolve_f(form, right)
                        out.append(form)
    return out


def classification_candidates(n: int, frame: EvenFrame) -> dict:
    """Restricted-form key -> (provenance, tally bucket), in the
    spec's attribution order: facet-theorem candidates, then single
    Inequality-Lemma forms (which cover all products of the basic
    generators), then direct ijk forms, then ijk convolutions."""
    table = {}

    def offer(form: LinearForm, bucket: str):
        key = frame.restrict_form(form)
        if key is not None and key not in table:
            table[key] = (form.provenance, bucket)

    for form in facet_theorem_candidates(n, strict=True):
        offer(form, "FACET_THM")
    for v_mask, t_mask in enumerate_lemma_pairs(n):
        offer(inequality_lemma_form(n, v_mask, t_mask), "INEQ_LEMMA")
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                offer(ijk_form(n, i, j, k), "IJK")
    for form in _ijk_convolution_forms(n):
        offer(form, "IJK")
    return table


def verify_rank(r: int) -> dict:
    """Compute the Eulerian cone of rank r from its known extreme rays,
    derive the facets, and classify every facet against the inequality
    families.  For r = 7 the four extreme-sum rays join the even-system
    rays."""
    if not 2 <= r <= 7:
        raise ConeError("verify_rank supports ranks 2..7")
    n = r - 1
    frame = EvenFrame(n)
    ray_records = []
    for system in enumerate_even_systems(n):
        coords = primitive(frame.project_vector(doubled_limit_L_vector(n, system)))
        ray_records.append((f"DP({n},{system!r})", coords))
    if r == 7:
        for idx, systems in enumerate(RANK7_EXTREME_SYSTEMS, start=1):
            coords = primitive(frame.project_vector(doubled_sum_L_vector(n, systems)))
            ray_records.append((f"EXTREME{idx}", coords))
    rays = [coords for _, coords in ray_records]
    facets = facets_from_rays(rays)
    table = classification_candidates(n, frame)
    tally = {"FACET_THM": 0, "INEQ_LEMMA": 0, "IJK": 0, "UNCLASSIFIED": 0}
    facet_records = []
    for normal in facets:
        provenance, bucket = table.get(normal, ("UNCLASSIFIED", "UNCLASSIFIED"))
        tally[bucket] += 1
        facet_records.append((provenance, normal))
    return {
        "rank": r,
        "dim": frame.dim,
        "frame": [mask_key(m) for m in frame.sets],
        "n_rays": len(rays),
        "n_facets": len(facets),
        "facet_classes": tally,
        "rays": [{"provenance": prov, "coords": list(coords),
                  "extreme": is_extreme(coords, facets)}
                 for prov, coords in ray_records],
        "facets": [{"provenance": prov, "normal": list(normal)}
                   for prov, normal in facet_records],
    }


def porta_poi(rays, dim: int) -> str:
    """PORTA .poi file: cone generators as integer rows."""
    lines = [f"DIM = {dim}", "", "CONE_SECTION"]
    lines.extend(" " + " ".join(str(x) for x in ray) for ray in rays)
    lines.extend(["", "END", ""])
    return "\n".join(lines)


def porta_ieq(facets, dim: int) -> str:
    """PORTA .ieq file: inequalities normal . x >= 0 as integer rows."""
    lines = [f"DIM = {dim}", "", "INEQUALITIES_SECTION"]
    for idx, normal in enumerate(facets, start=1):
        terms = []
        for j, c in enumerate(normal, start=1):
            if c:
                terms.append(f"{'+' if c > 0 else '-'}{abs(c)}x{j}")
        lines.append(f"( {idx}) " + " ".join(terms or ["0x1"]) + " >= 0")
    lines.extend(["", "END", ""])
    return "\n".join(lines)
