"""Locked subsets and the locked structure of a matroid.

A proper nonempty subset L is locked when the restriction to L and the
dual's restriction to the complement are both connected and both sides
carry rank at least 2 (r(L) >= 2 and the corank of E - L >= 2).  Locked
subsets, together with the parallel and coparallel partitions, pin down
the nontrivial facets of the bases polytope; their count is the "locked
number" of the matroid.

For a disconnected matroid the locked subsets are those of its
components: a proper subset of one component never satisfies the raw
four-condition test globally (the complement side splits), so the
enumeration works component by component.  ``is_locked`` itself applies
the four conditions verbatim to the matroid it is given.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import ElementSubset, Matroid, NotProperSubset


@dataclass
class LockedStructure:
    """Parallel partition, coparallel partition, locked subsets, and the
    rank of each of those sets (plus the empty set and the ground set)."""

    parallel: tuple[ElementSubset, ...]
    coparallel: tuple[ElementSubset, ...]
    locked: tuple[ElementSubset, ...]
    rho: dict[ElementSubset, int]


@dataclass(frozen=True)
class LockedNumbers:
    """Summary counts used by the uniformity test."""

    ell: int
    rank: int
    parallel_count: int
    coparallel_count: int


@dataclass(frozen=True)
class KLockedVerdict:
    """Outcome of the bounded locked-subset oracle: either the full locked
    structure, or a refusal because more than ``threshold`` locked subsets
    exist (structure is None in that case)."""

    k: int
    threshold: int
    structure: LockedStructure | None

    @property
    def is_no(self) -> bool:
        return self.structure is None


def is_locked(matroid: Matroid, subset: ElementSubset) -> bool:
    """Apply the four locked conditions to a proper nonempty subset."""
    mask = matroid._coerce(subset)
    full = matroid.ground.full_mask
    if mask == 0 or mask == full:
        raise NotProperSubset("locked subsets are proper and nonempty")
    matroid._check_scan_size()
    co = full ^ mask
    if matroid._rank_mask(mask) < 2:
        return False
    if matroid._dual_rank_mask(co) < 2:
        return False
    if not matroid._sub_connected(mask, matroid._rank_mask):
        return False
    return matroid._sub_connected(co, matroid._dual_rank_mask)


def _component_dual_rank(matroid: Matroid, comp: int):
    """Rank function of the dual of the restriction to one component.
    Within a component that restriction's dual needs no new basis family:
    rank*(X) = |X| - r(comp) + r(comp - X), with all ranks taken in the
    original matroid."""
    r_comp = matroid._rank_mask(comp)

    def rank_of(m: int) -> int:
        return m.bit_count() - r_comp + matroid._rank_mask(comp & ~m)

    return rank_of


def enumerate_locked(matroid: Matroid, cap: int | None = None) -> tuple[ElementSubset, ...]:
    """All locked subsets, scanned by increasing cardinality and then
    lexicographic element order, so truncated runs are reproducible.

    With ``cap`` given, the scan stops as soon as cap + 1 locked subsets
    have been found (the bounded oracle only needs to know the count
    exceeded its threshold).
    """
    matroid._check_scan_size()
    n = len(matroid.ground)
    ground = matroid.ground
    components = [c.mask for c in matroid.components()]
    comp_rank = {c: matroid._rank_mask(c) for c in components}
    comp_dual_rank = {c: _component_dual_rank(matroid, c) for c in components}
    found: list[ElementSubset] = []
    for k in range(2, n - 1):
        for combo in combinations(range(n), k):
            mask = 0
            for i in combo:
                mask |= 1 << i
            comp = next((c for c in components if mask & ~c == 0), None)
            if comp is None or mask == comp:
                continue
            co = comp & ~mask
            if matroid._rank_mask(mask) < 2:
                continue
            dual_rank = comp_dual_rank[comp]
            if dual_rank(co) < 2:
                continue
            if not matroid._sub_connected(mask, matroid._rank_mask):
                continue
            if not matroid._sub_connected(co, dual_rank):
                continue
            found.append(ElementSubset(ground, mask))
            if cap is not None and len(found) > cap:
                return tuple(found)
    return tuple(found)


def locked_structure(matroid: Matroid) -> LockedStructure:
    """The full locked structure.  Needs a loopless, coloopless matroid
    (the partitions are undefined otherwise)."""
    parallel = matroid.parallel_closures()
    coparallel = matroid.coparallel_closures()
    locked = enumerate_locked(matroid)
    rho: dict[ElementSubset, int] = {}
    for s in (*parallel, *coparallel, *locked):
        rho[s] = matroid._rank_mask(s.mask)
    rho[matroid.ground.empty] = 0
    rho[matroid.ground.full] = matroid.rank_value
    return LockedStructure(parallel, coparallel, locked, rho)


def k_locked_oracle(matroid: Matroid, k: int) -> KLockedVerdict:
    """Bounded oracle: answer No when the locked number exceeds |E|**k,
    otherwise hand back the full locked structure."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    threshold = len(matroid.ground) ** k
    found = enumerate_locked(matroid, cap=threshold)
    if len(found) > threshold:
        return KLockedVerdict(k, threshold, None)
    return KLockedVerdict(k, threshold, locked_structure(matroid))


def locked_number_oracle(matroid: Matroid) -> LockedNumbers:
    """Locked number, rank, and the sizes of the two partitions."""
    structure = locked_structure(matroid)
    return LockedNumbers(
        ell=len(structure.locked),
        rank=matroid.rank_value,
        parallel_count=len(structure.parallel),
        coparallel_count=len(structure.coparallel),
    )
