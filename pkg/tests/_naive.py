"""Small, slow, set-based reimplementations used as test oracles.

Everything here works on (ground, bases) pairs where ground is a
frozenset of labels and bases is a frozenset of frozensets.  No bitmasks,
no caching, no shared code with the package: ranks come straight from
the definition, connectivity from scanning every bipartition, components
from circuit reachability, and polytope dimensions from Fraction-based
Gaussian elimination (the package uses integer fraction-free
elimination, so the arithmetic cores differ too).
"""

from fractions import Fraction
from itertools import combinations


def as_pair(matroid):
    """Convert a package Matroid to the (ground, bases) shape used here."""
    ground = frozenset(matroid.ground.labels)
    bases = frozenset(frozenset(b.labels()) for b in matroid.bases)
    return ground, bases


def rank(bases, x):
    return max(len(b & x) for b in bases)


def independent(bases, x):
    return any(x <= b for b in bases)


def closure(ground, bases, x):
    r = rank(bases, x)
    return frozenset(e for e in ground if rank(bases, x | {e}) == r)


def dual_bases(ground, bases):
    return frozenset(ground - b for b in bases)


def restriction(bases, sub):
    """Bases of the restriction to sub: maximal independent subsets."""
    r = rank(bases, sub)
    return frozenset(
        frozenset(c) for c in combinations(sorted(sub), r) if independent(bases, frozenset(c))
    )


def connected(ground, bases):
    if len(ground) <= 1:
        return True
    full = rank(bases, ground)
    elems = sorted(ground)
    for size in range(1, len(elems)):
        for c in combinations(elems, size):
            a = frozenset(c)
            if rank(bases, a) + rank(bases, ground - a) == full:
                return False
    return True


def circuits(ground, bases):
    """Minimal dependent sets, by growing size."""
    found = []
    for size in range(1, len(ground) + 1):
        for c in combinations(sorted(ground), size):
            s = frozenset(c)
            if not independent(bases, s) and not any(x < s for x in found):
                found.append(s)
    return found


def components(ground, bases):
    """Partition by circuit reachability: e ~ f iff some circuit holds both."""
    parent = {e: e for e in ground}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for circ in circuits(ground, bases):
        members = sorted(circ)
        for other in members[1:]:
            parent[find(other)] = find(members[0])
    groups = {}
    for e in ground:
        groups.setdefault(find(e), set()).add(e)
    return sorted((frozenset(g) for g in groups.values()), key=lambda g: sorted(g))


def locked(ground, bases, sub):
    """The four defining conditions, each from first principles."""
    comp = ground - sub
    if not sub or not comp:
        return False
    if not connected(sub, restriction(bases, sub)):
        return False
    duals = dual_bases(ground, bases)
    if not connected(comp, restriction(duals, comp)):
        return False
    if rank(bases, sub) < 2:
        return False
    if rank(duals, comp) < 2:
        return False
    return True


def all_locked(ground, bases):
    """Union over components of each component's locked subsets."""
    out = []
    for comp in components(ground, bases):
        sub_bases = restriction(bases, comp)
        for size in range(1, len(comp)):
            for c in combinations(sorted(comp), size):
                if locked(comp, sub_bases, frozenset(c)):
                    out.append(frozenset(c))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def gauss_rank(rows):
    rows = [list(map(Fraction, r)) for r in rows]
    rank_ = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((i for i in range(rank_, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank_], rows[pivot] = rows[pivot], rows[rank_]
        inv = 1 / rows[rank_][col]
        rows[rank_] = [v * inv for v in rows[rank_]]
        for i in range(len(rows)):
            if i != rank_ and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank_])]
        rank_ += 1
    return rank_


def affine_dim(points):
    if not points:
        return -1
    base = points[0]
    vecs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    if not vecs:
        return 0
    return gauss_rank(vecs)


def char_vector(order, subset):
    return tuple(Fraction(1) if e in subset else Fraction(0) for e in order)


def facet_tight_sets(ground, vertices):
    """Facets of conv(vertices) among the candidate inequalities
    x(e) >= 0 and x(A) <= max over vertices, one frozenset of vertex
    indices per facet found."""
    order = sorted(ground)
    points = [char_vector(order, v) for v in vertices]
    dim = affine_dim(points)
    facets = set()

    def tight_of(coeff_set, sense_max):
        vals = [sum(p[i] for i, e in enumerate(order) if e in coeff_set) for p in points]
        bound = max(vals) if sense_max else Fraction(0)
        return frozenset(i for i, v in enumerate(vals) if v == bound)

    for e in order:
        tight = tight_of({e}, sense_max=False)
        if tight and affine_dim([points[i] for i in tight]) == dim - 1:
            facets.add(tight)
    for size in range(1, len(order) + 1):
        for c in combinations(order, size):
            tight = tight_of(set(c), sense_max=True)
            if tight and affine_dim([points[i] for i in tight]) == dim - 1:
                facets.add(tight)
    return dim, frozenset(facets)
