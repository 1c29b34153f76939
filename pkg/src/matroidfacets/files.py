"""Flat-file matroid format.

A matroid file is line-oriented text.  Blank lines and lines starting
with ``#`` are ignored.  Header lines come first, then exactly one set
section running to the end of the file::

    name MK4
    elements ab ac ad bc bd cd
    rank 3
    nonbases:
    ab ac bc
    ab ad bd
    ac ad cd
    bc bd cd

The section is ``bases:`` (one basis per line) or ``nonbases:`` (the
r-subsets that are NOT bases; an empty section encodes a uniform
matroid).  Labels are whitespace-separated.  Loading rebuilds the basis
family and, by default, validates it against the exchange axiom, so a
corrupted file fails on load rather than poisoning later computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .core import GroundSet, Matroid, MatroidError


class ParseError(MatroidError):
    """Malformed matroid file."""


@dataclass(frozen=True)
class MatroidFile:
    """Parsed file contents: one of ``bases``/``nonbases`` is None."""

    name: str
    labels: tuple[str, ...]
    rank: int
    bases: tuple[tuple[str, ...], ...] | None
    nonbases: tuple[tuple[str, ...], ...] | None

    def to_matroid(self, *, validate: bool = True) -> Matroid:
        ground = GroundSet(self.labels)
        if self.bases is not None:
            family = [ground.subset(b) for b in self.bases]
        else:
            excluded = {frozenset(nb) for nb in self.nonbases}
            for nb in excluded:
                if len(nb) != self.rank:
                    raise ParseError(
                        f"nonbasis {{{' '.join(sorted(nb))}}} does not have rank cardinality"
                    )
            family = [
                ground.subset(combo)
                for combo in combinations(self.labels, self.rank)
                if frozenset(combo) not in excluded
            ]
        matroid = Matroid(ground, family, validate=validate)
        if matroid.rank_value != self.rank:
            raise ParseError(f"declared rank {self.rank} != basis size {matroid.rank_value}")
        return matroid

    @classmethod
    def from_matroid(cls, matroid: Matroid, name: str, encoding: str = "auto") -> "MatroidFile":
        """Encode a matroid.  ``auto`` picks the shorter of the two set
        listings."""
        if encoding not in ("auto", "bases", "nonbases"):
            raise ValueError("encoding must be auto, bases, or nonbases")
        basis_labels = tuple(b.labels() for b in matroid.bases)
        in_family = {frozenset(b) for b in basis_labels}
        nonbasis_labels = tuple(
            combo
            for combo in combinations(matroid.ground.labels, matroid.rank_value)
            if frozenset(combo) not in in_family
        )
        if encoding == "auto":
            encoding = "nonbases" if len(nonbasis_labels) < len(basis_labels) else "bases"
        return cls(
            name=name,
            labels=matroid.ground.labels,
            rank=matroid.rank_value,
            bases=basis_labels if encoding == "bases" else None,
            nonbases=nonbasis_labels if encoding == "nonbases" else None,
        )


def dumps(mf: MatroidFile) -> str:
    lines = [
        f"name {mf.name}",
        f"elements {' '.join(mf.labels)}",
        f"rank {mf.rank}",
    ]
    if (mf.bases is None) == (mf.nonbases is None):
        raise ValueError("exactly one of bases/nonbases must be present")
    section = "bases" if mf.bases is not None else "nonbases"
    lines.append(f"{section}:")
    for row in mf.bases if mf.bases is not None else mf.nonbases:
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


def loads(text: str) -> MatroidFile:
    name = None
    labels = None
    rank = None
    section = None
    rows: list[tuple[str, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if section is not None:
            rows.append(tuple(line.split()))
            continue
        if line in ("bases:", "nonbases:"):
            section = line[:-1]
            continue
        parts = line.split(None, 1)
        key = parts[0]
        value = parts[1] if len(parts) == 2 else ""
        if key == "name":
            if not value:
                raise ParseError(f"line {lineno}: empty name")
            name = value
        elif key == "elements":
            labels = tuple(value.split())
            if not labels:
                raise ParseError(f"line {lineno}: empty element list")
            if len(set(labels)) != len(labels):
                raise ParseError(f"line {lineno}: duplicate element labels")
        elif key == "rank":
            try:
                rank = int(value)
            except ValueError:
                raise ParseError(f"line {lineno}: rank must be an integer") from None
            if rank < 0:
                raise ParseError(f"line {lineno}: rank must be nonnegative")
        else:
            raise ParseError(f"line {lineno}: unknown header {key!r}")
    if name is None:
        raise ParseError("missing header: name")
    if labels is None:
        raise ParseError("missing header: elements")
    if rank is None:
        raise ParseError("missing header: rank")
    if section is None:
        raise ParseError("missing section: bases: or nonbases:")
    known = set(labels)
    for row in rows:
        for lab in row:
            if lab not in known:
                raise ParseError(f"unknown element {lab!r} in {section} section")
        if len(set(row)) != len(row):
            raise ParseError(f"repeated element in set: {' '.join(row)}")
    if section == "bases" and not rows:
        raise ParseError("a bases section needs at least one basis")
    return MatroidFile(
        name=name,
        labels=labels,
        rank=rank,
        bases=tuple(rows) if section == "bases" else None,
        nonbases=tuple(rows) if section == "nonbases" else None,
    )


def save(path: str | Path, matroid: Matroid, name: str, encoding: str = "auto") -> None:
    Path(path).write_text(dumps(MatroidFile.from_matroid(matroid, name, encoding)))


def load(path: str | Path, *, validate: bool = True) -> tuple[Matroid, MatroidFile]:
    mf = loads(Path(path).read_text())
    return mf.to_matroid(validate=validate), mf
