"""Named matroids and constructions used throughout the package.

The fixed entries are a rank-3 graphic matroid on six elements (MK4, the
cycle matroid of the complete graph on four vertices), the chain obtained
from it by relaxing one circuit-hyperplane at a time (W3, Q6, P6, ending
at the uniform matroid of rank 3 on 6 elements), and a rank-4 matroid on
eight elements (V8) defined by five non-basis quadruples.  Uniform
matroids are available through the U_r_n name pattern.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .core import ElementSubset, GroundSet, MatroidError, Matroid, subsets_by_size


class BadParameters(MatroidError):
    """Construction parameters out of range."""


class UnknownName(MatroidError):
    """Not a catalog name."""


class DisconnectedGraph(MatroidError):
    """graphic() needs a connected multigraph."""


class NotCircuitHyperplane(MatroidError):
    """relax() needs a dependent, closed set of full-rank cardinality whose
    rank falls exactly one short."""


class BasepointDegenerate(MatroidError):
    """A 2-sum basepoint must be neither a loop nor a coloop."""


class LabelCollision(MatroidError):
    """Combined ground sets must not share labels."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    matroid: Matroid
    expected_locked_number: int


def uniform(r: int, n: int) -> Matroid:
    """The uniform matroid of rank r on n elements, labeled "1".."n"."""
    if n < 1 or r < 0 or r > n:
        raise BadParameters(f"uniform needs 0 <= r <= n and n >= 1, got r={r} n={n}")
    ground = GroundSet(str(i) for i in range(1, n + 1))
    masks = []
    for combo in combinations(range(n), r):
        m = 0
        for i in combo:
            m |= 1 << i
        masks.append(m)
    return Matroid._from_masks(ground, masks)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def graphic(num_vertices: int, edges: list[tuple[int, int]], labels: list[str] | None = None) -> Matroid:
    """The cycle matroid of a connected multigraph: one element per edge,
    bases are the spanning trees.  Vertices are 0..num_vertices-1."""
    if num_vertices < 1:
        raise BadParameters("graphic needs at least one vertex")
    if not edges:
        raise BadParameters("graphic needs at least one edge")
    for u, v in edges:
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise BadParameters(f"edge ({u}, {v}) mentions an unknown vertex")
        if u == v:
            raise BadParameters("self-loops are not supported here")
    uf = _UnionFind(num_vertices)
    for u, v in edges:
        uf.union(u, v)
    if len({uf.find(i) for i in range(num_vertices)}) != 1:
        raise DisconnectedGraph("the multigraph must be connected")
    if labels is None:
        labels = [f"e{i}" for i in range(len(edges))]
    ground = GroundSet(labels)
    if len(ground) != len(edges):
        raise BadParameters("one label per edge required")
    rank = num_vertices - 1
    masks = []
    for combo in combinations(range(len(edges)), rank):
        uf = _UnionFind(num_vertices)
        if all(uf.union(*edges[i]) for i in combo):
            m = 0
            for i in combo:
                m |= 1 << i
            masks.append(m)
    return Matroid._from_masks(ground, masks)


def circuit_hyperplanes(matroid: Matroid) -> tuple[ElementSubset, ...]:
    """Dependent closed sets of cardinality r(E) with rank r(E) - 1, in
    lexicographic element order.  These are exactly the sets whose
    promotion to a basis (relaxation) again yields a matroid."""
    r = matroid.rank_value
    ground = matroid.ground
    out = []
    for mask in subsets_by_size(ground, r, r):
        if mask in matroid._basis_index:
            continue
        if matroid._rank_mask(mask) != r - 1:
            continue
        subset = ElementSubset(ground, mask)
        if matroid.is_closed(subset):
            out.append(subset)
    return tuple(out)


def relax(matroid: Matroid, target: ElementSubset) -> Matroid:
    """Promote a circuit-hyperplane to a basis.  The result is validated
    against the exchange axiom."""
    mask = matroid._coerce(target)
    r = matroid.rank_value
    if (
        mask.bit_count() != r
        or mask in matroid._basis_index
        or matroid._rank_mask(mask) != r - 1
        or not matroid.is_closed(target)
    ):
        raise NotCircuitHyperplane(
            f"{{{' '.join(target)}}} is not a dependent closed set of size r with rank r - 1"
        )
    relaxed = Matroid._from_masks(matroid.ground, (*matroid._basis_masks, mask))
    relaxed.validate()
    return relaxed


def _prefixed_union(ground1: GroundSet, drop1: int, ground2: GroundSet, drop2: int) -> GroundSet:
    labels = [f"L.{lab}" for i, lab in enumerate(ground1.labels) if i != drop1]
    labels += [f"R.{lab}" for i, lab in enumerate(ground2.labels) if i != drop2]
    if len(set(labels)) != len(labels):
        raise LabelCollision("prefixed labels collide")
    return GroundSet(labels)


def two_sum(matroid1: Matroid, basepoint1: str, matroid2: Matroid, basepoint2: str) -> Matroid:
    """Glue two matroids along one basepoint each.

    The ground set is the disjoint union minus the basepoints (labels
    prefixed "L." and "R."), and a set is a basis iff it is the union of
    B1 - p1 and B2 - p2 where exactly one of the Bi contains its
    basepoint.  Rank comes out to r1 + r2 - 1.
    """
    if len(matroid1.ground) < 3 or len(matroid2.ground) < 3:
        raise BadParameters("two_sum needs at least 3 elements on each side")
    p1 = matroid1.ground.singleton(basepoint1)
    p2 = matroid2.ground.singleton(basepoint2)
    for m, p, side in ((matroid1, p1, basepoint1), (matroid2, p2, basepoint2)):
        if p <= m.loops() or p <= m.coloops():
            raise BasepointDegenerate(f"basepoint {side} is a loop or coloop")
    i1, i2 = p1.indices()[0], p2.indices()[0]
    ground = _prefixed_union(matroid1.ground, i1, matroid2.ground, i2)
    n1 = len(matroid1.ground)

    def squeeze(mask: int, drop: int) -> int:
        low = mask & ((1 << drop) - 1)
        return low | ((mask >> (drop + 1)) << drop)

    masks = []
    with1 = [squeeze(b, i1) for b in matroid1._basis_masks if b >> i1 & 1]
    without1 = [squeeze(b, i1) for b in matroid1._basis_masks if not b >> i1 & 1]
    with2 = [squeeze(b, i2) for b in matroid2._basis_masks if b >> i2 & 1]
    without2 = [squeeze(b, i2) for b in matroid2._basis_masks if not b >> i2 & 1]
    shift = n1 - 1
    for b1 in with1:
        for b2 in without2:
            masks.append(b1 | (b2 << shift))
    for b1 in without1:
        for b2 in with2:
            masks.append(b1 | (b2 << shift))
    result = Matroid._from_masks(ground, masks)
    result.validate()
    expected = matroid1.rank_value + matroid2.rank_value - 1
    if result.rank_value != expected:
        raise MatroidError(f"two_sum rank {result.rank_value} != {expected}")
    return result


def direct_sum(matroid1: Matroid, matroid2: Matroid) -> Matroid:
    """Disjoint union (labels prefixed "L." and "R."); bases are unions of
    one basis from each side."""
    labels = [f"L.{lab}" for lab in matroid1.ground.labels]
    labels += [f"R.{lab}" for lab in matroid2.ground.labels]
    if len(set(labels)) != len(labels):
        raise LabelCollision("prefixed labels collide")
    ground = GroundSet(labels)
    shift = len(matroid1.ground)
    masks = [
        b1 | (b2 << shift)
        for b1 in matroid1._basis_masks
        for b2 in matroid2._basis_masks
    ]
    return Matroid._from_masks(ground, masks)


@lru_cache(maxsize=None)
def _mk4() -> Matroid:
    # Edges of the complete graph on vertices a, b, c, d; the non-bases
    # among the 3-subsets are the four triangles.
    ground = GroundSet(("ab", "ac", "ad", "bc", "bd", "cd"))
    triangles = (
        frozenset(("ab", "ac", "bc")),
        frozenset(("ab", "ad", "bd")),
        frozenset(("ac", "ad", "cd")),
        frozenset(("bc", "bd", "cd")),
    )
    bases = [
        ground.subset(combo)
        for combo in combinations(ground.labels, 3)
        if frozenset(combo) not in triangles
    ]
    return Matroid(ground, bases)


@lru_cache(maxsize=None)
def _chain(steps: int) -> Matroid:
    # Relax the lexicographically first remaining circuit-hyperplane,
    # `steps` times, starting from MK4.
    m = _mk4()
    for _ in range(steps):
        m = relax(m, circuit_hyperplanes(m)[0])
    return m


@lru_cache(maxsize=None)
def vamos() -> Matroid:
    """Rank 4 on eight elements in four tagged pairs; exactly five pair
    unions fail to be bases and there is no representation over any field."""
    ground = GroundSet(("a", "a'", "b", "b'", "c", "c'", "d", "d'"))
    nonbases = (
        frozenset(("a", "a'", "b", "b'")),
        frozenset(("a", "a'", "c", "c'")),
        frozenset(("a", "a'", "d", "d'")),
        frozenset(("b", "b'", "c", "c'")),
        frozenset(("b", "b'", "d", "d'")),
    )
    bases = [
        ground.subset(combo)
        for combo in combinations(ground.labels, 4)
        if frozenset(combo) not in nonbases
    ]
    return Matroid(ground, bases)


_UNIFORM_NAME = re.compile(r"^U_(\d+)_(\d+)$")

_FIXED = ("MK4", "W3", "Q6", "P6", "V8")

# Locked numbers of the fixed entries, kept as construction-time ground
# truth for tests and reports.
_EXPECTED_LOCKED = {"MK4": 4, "W3": 3, "Q6": 2, "P6": 1, "V8": 5}


def catalog_names() -> tuple[str, ...]:
    """Fixed catalog names; uniform matroids follow the U_r_n pattern."""
    return _FIXED


def catalog_get(name: str) -> CatalogEntry:
    """Look up a catalog entry by name (MK4, W3, Q6, P6, V8, or U_r_n)."""
    if name == "MK4":
        return CatalogEntry(name, _mk4(), _EXPECTED_LOCKED[name])
    if name == "W3":
        return CatalogEntry(name, _chain(1), _EXPECTED_LOCKED[name])
    if name == "Q6":
        return CatalogEntry(name, _chain(2), _EXPECTED_LOCKED[name])
    if name == "P6":
        return CatalogEntry(name, _chain(3), _EXPECTED_LOCKED[name])
    if name == "V8":
        return CatalogEntry(name, vamos(), _EXPECTED_LOCKED[name])
    match = _UNIFORM_NAME.match(name)
    if match:
        r, n = int(match.group(1)), int(match.group(2))
        try:
            m = uniform(r, n)
        except BadParameters as err:
            raise UnknownName(str(err)) from None
        # No uniform matroid has a locked subset: one side of any split
        # always has rank or corank below 2.
        return CatalogEntry(name, m, 0)
    raise UnknownName(f"unknown catalog name: {name}")
