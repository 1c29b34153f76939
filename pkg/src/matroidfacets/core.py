"""Exact matroid primitives over explicit basis families.

A matroid is stored as the full list of its bases.  Subsets of the ground
set are bitmasks (one bit per element, in ground-set order), so every
query here (rank, closure, duality, connectivity) is plain integer
arithmetic: no floats, no tolerances, bit-for-bit reproducible.

Exhaustive searches (connectivity, components) walk all subsets of the
ground set, which is fine for the ground-set sizes this package targets
and is capped at MAX_SCAN_SIZE elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_SCAN_SIZE = 24


class MatroidError(Exception):
    """Base class for every error raised by this package."""


class EmptyBasisFamily(MatroidError):
    """A matroid needs at least one basis."""


class UnequalBasisSizes(MatroidError):
    """All bases of a matroid have the same cardinality."""


class ForeignElement(MatroidError):
    """A label or subset does not belong to the ground set in use."""


class EmptyGroundSet(MatroidError):
    """The requested operation would produce or consume an empty ground set."""


class NotProperSubset(MatroidError):
    """The operation needs a subset X with empty < X < E."""


class LoopPresent(MatroidError):
    """Raised by operations that require a loopless matroid."""

    def __init__(self, element: str):
        self.element = element
        super().__init__(f"matroid has a loop: {element}")


class ColoopPresent(MatroidError):
    """Raised by operations that require a coloopless matroid."""

    def __init__(self, element: str):
        self.element = element
        super().__init__(f"matroid has a coloop: {element}")


class ExchangeAxiomViolated(MatroidError):
    """The family fails the basis-exchange axiom; carries one witness."""

    def __init__(self, basis1: tuple[str, ...], basis2: tuple[str, ...], element: str):
        self.basis1 = basis1
        self.basis2 = basis2
        self.element = element
        super().__init__(
            "exchange fails for bases {%s} and {%s} at element %s"
            % (" ".join(basis1), " ".join(basis2), element)
        )


class GroundSet:
    """An ordered set of distinct element labels.

    The order is the bit order of every mask built over this ground set
    and the display order of every subset, so it is part of the identity:
    two ground sets are equal iff their label tuples are equal.
    """

    __slots__ = ("labels", "index", "full_mask", "_hash")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if not labels:
            raise EmptyGroundSet("a ground set needs at least one element")
        for lab in labels:
            if not isinstance(lab, str) or not lab or lab.split() != [lab]:
                raise ValueError(f"labels must be nonempty strings without whitespace: {lab!r}")
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate labels in ground set")
        self.labels = labels
        self.index = {lab: i for i, lab in enumerate(labels)}
        self.full_mask = (1 << len(labels)) - 1
        self._hash = hash(labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"GroundSet({' '.join(self.labels)})"

    def subset(self, labels: Iterable[str]) -> "ElementSubset":
        mask = 0
        for lab in labels:
            i = self.index.get(lab)
            if i is None:
                raise ForeignElement(f"label {lab!r} is not in the ground set")
            mask |= 1 << i
        return ElementSubset(self, mask)

    def singleton(self, label: str) -> "ElementSubset":
        return self.subset((label,))

    def from_mask(self, mask: int) -> "ElementSubset":
        if mask & ~self.full_mask:
            raise ForeignElement("mask has bits outside the ground set")
        return ElementSubset(self, mask)

    @property
    def empty(self) -> "ElementSubset":
        return ElementSubset(self, 0)

    @property
    def full(self) -> "ElementSubset":
        return ElementSubset(self, self.full_mask)


@dataclass(frozen=True)
class ElementSubset:
    """A subset of a ground set, stored as a bitmask."""

    ground: GroundSet
    mask: int

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, label: str) -> bool:
        i = self.ground.index.get(label)
        return i is not None and self.mask >> i & 1 == 1

    def __iter__(self) -> Iterator[str]:
        for i, lab in enumerate(self.ground.labels):
            if self.mask >> i & 1:
                yield lab

    def __le__(self, other: "ElementSubset") -> bool:
        self._same_ground(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "ElementSubset") -> bool:
        return self <= other and self.mask != other.mask

    def __or__(self, other: "ElementSubset") -> "ElementSubset":
        self._same_ground(other)
        return ElementSubset(self.ground, self.mask | other.mask)

    def __and__(self, other: "ElementSubset") -> "ElementSubset":
        self._same_ground(other)
        return ElementSubset(self.ground, self.mask & other.mask)

    def __sub__(self, other: "ElementSubset") -> "ElementSubset":
        self._same_ground(other)
        return ElementSubset(self.ground, self.mask & ~other.mask)

    def __xor__(self, other: "ElementSubset") -> "ElementSubset":
        self._same_ground(other)
        return ElementSubset(self.ground, self.mask ^ other.mask)

    def complement(self) -> "ElementSubset":
        return ElementSubset(self.ground, self.ground.full_mask & ~self.mask)

    def labels(self) -> tuple[str, ...]:
        return tuple(self)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.ground)) if self.mask >> i & 1)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Order subsets by cardinality, then lexicographically by index."""
        return (self.mask.bit_count(), self.indices())

    def _same_ground(self, other: "ElementSubset") -> None:
        if self.ground != other.ground:
            raise ForeignElement("subsets built over different ground sets")

    def __repr__(self) -> str:
        return "{%s}" % " ".join(self)


@dataclass(frozen=True)
class RankQueryResult:
    """Rank value plus a witness: an independent subset of the queried set
    of maximum size, cut out of a basis attaining the maximum."""

    value: int
    witness: ElementSubset


def _submasks_below(mask: int) -> Iterator[int]:
    """All proper submasks of mask, including 0, in decreasing order."""
    s = mask
    while s:
        s = (s - 1) & mask
        yield s


def _bit_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class Matroid:
    """A matroid given by its full basis family.

    Immutable after construction.  Cheap structural checks (nonempty
    family, equal basis sizes, membership in the ground set) always run;
    the quadratic basis-exchange validation runs when ``validate=True``.
    """

    __slots__ = (
        "ground",
        "rank_value",
        "_basis_masks",
        "_basis_index",
        "_rank_cache",
        "_dual",
        "_components",
        "_bases",
        "_hash",
    )

    def __init__(self, ground: GroundSet, bases: Iterable[ElementSubset], *, validate: bool = False):
        masks = []
        for b in bases:
            if b.ground != ground:
                raise ForeignElement("basis built over a different ground set")
            masks.append(b.mask)
        if not masks:
            raise EmptyBasisFamily("a matroid needs at least one basis")
        masks = sorted(set(masks))
        sizes = {m.bit_count() for m in masks}
        if len(sizes) != 1:
            raise UnequalBasisSizes(f"basis sizes differ: {sorted(sizes)}")
        self.ground = ground
        self.rank_value = sizes.pop()
        self._basis_masks = tuple(masks)
        self._basis_index = {m: i for i, m in enumerate(masks)}
        self._rank_cache: dict[int, int] = {ground.full_mask: self.rank_value, 0: 0}
        self._dual: Matroid | None = None
        self._components: tuple[ElementSubset, ...] | None = None
        self._bases: tuple[ElementSubset, ...] | None = None
        self._hash = hash((ground, self._basis_masks))
        if validate:
            self._check_exchange()

    @classmethod
    def _from_masks(cls, ground: GroundSet, masks: Iterable[int]) -> "Matroid":
        return cls(ground, (ElementSubset(ground, m) for m in masks))

    # -- identity ---------------------------------------------------------

    @property
    def bases(self) -> tuple[ElementSubset, ...]:
        if self._bases is None:
            self._bases = tuple(ElementSubset(self.ground, m) for m in self._basis_masks)
        return self._bases

    def basis_count(self) -> int:
        return len(self._basis_masks)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matroid)
            and self.ground == other.ground
            and self._basis_masks == other._basis_masks
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return (
            f"Matroid(rank {self.rank_value}, {len(self._basis_masks)} bases "
            f"on {len(self.ground)} elements)"
        )

    # -- validation -------------------------------------------------------

    def _check_exchange(self) -> None:
        """Basis exchange: for B1, B2 and e in B1-B2 there is f in B2-B1
        with B1-e+f again a basis."""
        masks = self._basis_masks
        family = self._basis_index
        ground = self.ground
        for b1 in masks:
            for b2 in masks:
                if b1 == b2:
                    continue
                swap_in = b2 & ~b1
                for i in _bit_indices(b1 & ~b2):
                    removed = b1 ^ (1 << i)
                    if not any(removed | (1 << j) in family for j in _bit_indices(swap_in)):
                        raise ExchangeAxiomViolated(
                            ElementSubset(ground, b1).labels(),
                            ElementSubset(ground, b2).labels(),
                            ground.labels[i],
                        )

    def validate(self) -> None:
        """Run the basis-exchange validation on demand."""
        self._check_exchange()

    # -- rank and friends -------------------------------------------------

    def _coerce(self, x: ElementSubset) -> int:
        if x.ground != self.ground:
            raise ForeignElement("subset built over a different ground set")
        return x.mask

    def _rank_mask(self, m: int) -> int:
        v = self._rank_cache.get(m)
        if v is None:
            v = max((b & m).bit_count() for b in self._basis_masks)
            self._rank_cache[m] = v
        return v

    def _dual_rank_mask(self, m: int) -> int:
        return m.bit_count() - self.rank_value + self._rank_mask(self.ground.full_mask ^ m)

    def rank(self, x: ElementSubset) -> RankQueryResult:
        """Rank of x: the largest intersection of x with a basis."""
        m = self._coerce(x)
        value = self._rank_mask(m)
        witness = next(b & m for b in self._basis_masks if (b & m).bit_count() == value)
        return RankQueryResult(value, ElementSubset(self.ground, witness))

    def corank(self, x: ElementSubset) -> int:
        """Rank of x in the dual, via |x| - r(E) + r(E - x)."""
        return self._dual_rank_mask(self._coerce(x))

    def independent(self, x: ElementSubset) -> bool:
        m = self._coerce(x)
        return self._rank_mask(m) == m.bit_count()

    def closure(self, x: ElementSubset) -> ElementSubset:
        """All elements whose addition leaves the rank of x unchanged."""
        m = self._coerce(x)
        r = self._rank_mask(m)
        out = m
        for i in range(len(self.ground)):
            bit = 1 << i
            if not m & bit and self._rank_mask(m | bit) == r:
                out |= bit
        return ElementSubset(self.ground, out)

    def is_closed(self, x: ElementSubset) -> bool:
        return self.closure(x).mask == x.mask

    def loops(self) -> ElementSubset:
        """Elements contained in no basis."""
        used = 0
        for b in self._basis_masks:
            used |= b
        return ElementSubset(self.ground, self.ground.full_mask & ~used)

    def coloops(self) -> ElementSubset:
        """Elements contained in every basis."""
        common = self.ground.full_mask
        for b in self._basis_masks:
            common &= b
        return ElementSubset(self.ground, common)

    # -- duality and minors -----------------------------------------------

    def dual(self) -> "Matroid":
        """The matroid whose bases are the complements of this one's."""
        if self._dual is None:
            full = self.ground.full_mask
            d = Matroid._from_masks(self.ground, (full ^ b for b in self._basis_masks))
            d._dual = self
            self._dual = d
        return self._dual

    def restrict(self, x: ElementSubset) -> "Matroid":
        """The matroid on x whose bases are the maximal basis traces on x."""
        m = self._coerce(x)
        if m == 0:
            raise EmptyGroundSet("cannot restrict to the empty set")
        keep = _bit_indices(m)
        sub_ground = GroundSet(self.ground.labels[i] for i in keep)
        rx = self._rank_mask(m)
        traces = {b & m for b in self._basis_masks if (b & m).bit_count() == rx}
        remap = {old: new for new, old in enumerate(keep)}
        new_masks = set()
        for t in traces:
            nm = 0
            for i in _bit_indices(t):
                nm |= 1 << remap[i]
            new_masks.add(nm)
        return Matroid._from_masks(sub_ground, sorted(new_masks))

    def contract(self, x: ElementSubset) -> "Matroid":
        """Contract the elements of x away (ground set shrinks to E - x)."""
        m = self._coerce(x)
        if m == 0:
            return self
        if m == self.ground.full_mask:
            raise EmptyGroundSet("cannot contract the whole ground set")
        return self.dual().restrict(x.complement()).dual()

    # -- connectivity -----------------------------------------------------

    def _check_scan_size(self) -> None:
        if len(self.ground) > MAX_SCAN_SIZE:
            raise MatroidError(
                f"exhaustive subset scans are capped at {MAX_SCAN_SIZE} elements"
            )

    def _sub_connected(self, sub: int, rank_of) -> bool:
        """Connectivity of the restriction to sub, under the given rank
        function: no proper nonempty part X of sub may satisfy
        rank(X) + rank(sub - X) == rank(sub)."""
        if sub.bit_count() <= 1:
            return True
        total = rank_of(sub)
        anchor = sub & -sub
        rest = sub ^ anchor
        # Anchoring on the lowest bit visits each complementary pair once;
        # t runs over proper submasks of rest including 0, so x = anchor
        # (a singleton) is covered and x = sub is not.
        for t in _submasks_below(rest):
            x = anchor | t
            if rank_of(x) + rank_of(sub ^ x) == total:
                return False
        return True

    def is_connected(self) -> bool:
        """True iff no proper nonempty subset X has r(X) + r(E-X) = r(E)."""
        self._check_scan_size()
        return self._sub_connected(self.ground.full_mask, self._rank_mask)

    def components(self) -> tuple[ElementSubset, ...]:
        """The finest partition of E into separators, ordered by first element."""
        if self._components is not None:
            return self._components
        self._check_scan_size()
        n = len(self.ground)
        full = self.ground.full_mask
        r = self.rank_value
        comp = [full] * n
        anchor = 1
        rest = full ^ anchor
        # Separators are closed under intersection and complement, so the
        # component of e is the intersection of all separators containing e.
        # Each anchored proper subset covers one complementary pair.
        for t in _submasks_below(rest):
            x = anchor | t
            y = full ^ x
            if self._rank_mask(x) + self._rank_mask(y) == r:
                for i in range(n):
                    comp[i] &= x if x >> i & 1 else y
        cells = sorted({m for m in comp}, key=lambda m: (m & -m).bit_length())
        self._components = tuple(ElementSubset(self.ground, m) for m in cells)
        return self._components

    def is_3_connected(self) -> bool:
        """Connected with no 2-separation.  Ground sets smaller than 4
        elements have no room for a 2-separation; for those this is just
        connectivity."""
        if not self.is_connected():
            return False
        n = len(self.ground)
        if n < 4:
            return True
        full = self.ground.full_mask
        r = self.rank_value
        anchor = 1
        rest = full ^ anchor
        for t in _submasks_below(rest):
            x = anchor | t
            k = x.bit_count()
            if k < 2 or n - k < 2:
                continue
            if self._rank_mask(x) + self._rank_mask(full ^ x) <= r + 1:
                return False
        return True

    # -- parallel structure -------------------------------------------------

    def parallel_closures(self) -> tuple[ElementSubset, ...]:
        """The partition of E into maximal rank-1 classes.  Needs a
        loopless matroid."""
        loops = self.loops()
        if loops:
            raise LoopPresent(next(iter(loops)))
        n = len(self.ground)
        classes = []
        seen = 0
        for i in range(n):
            bit = 1 << i
            if seen & bit:
                continue
            cls = bit
            for j in range(n):
                if j != i and self._rank_mask(bit | (1 << j)) == 1:
                    cls |= 1 << j
            classes.append(cls)
            seen |= cls
        return tuple(ElementSubset(self.ground, c) for c in classes)

    def coparallel_closures(self) -> tuple[ElementSubset, ...]:
        """Parallel closures of the dual.  Needs a coloopless matroid."""
        try:
            return tuple(
                ElementSubset(self.ground, c.mask) for c in self.dual().parallel_closures()
            )
        except LoopPresent as err:
            raise ColoopPresent(err.element) from None

    def is_simple(self) -> bool:
        """No loops and no two distinct parallel elements."""
        if self.loops():
            return False
        n = len(self.ground)
        return all(
            self._rank_mask((1 << i) | (1 << j)) == 2
            for i, j in combinations(range(n), 2)
        )

    def is_cosimple(self) -> bool:
        return self.dual().is_simple()


def subsets_by_size(ground: GroundSet, smallest: int = 0, largest: int | None = None) -> Iterator[int]:
    """Masks of all subsets of the ground set, by increasing cardinality
    and lexicographic index order within each cardinality."""
    n = len(ground)
    if largest is None:
        largest = n
    for k in range(smallest, largest + 1):
        for combo in combinations(range(n), k):
            m = 0
            for i in combo:
                m |= 1 << i
            yield m
