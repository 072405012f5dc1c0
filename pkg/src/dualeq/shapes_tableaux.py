"""Partitions, skew shapes with absolute coordinates, tuples of shapes,
standard tableau enumeration, reading words and descent signatures.

Coordinates are French: a cell is ``(col, row)`` with row 1 at the bottom,
so the content of a cell is ``col - row``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

from .errors import DomainError, ResourceError

Signature = tuple[int, ...]
Word = tuple[int, ...]

DEFAULT_MAX_SIZE = 10


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"partition parts must weakly decrease: {parts}")

    @classmethod
    def of(cls, parts: Sequence[int]) -> "Partition":
        """Build from a sequence, dropping trailing zeros."""
        return cls(tuple(p for p in parts if p != 0))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def cells(self) -> list["Cell"]:
        return [Cell(c, r + 1) for r, p in enumerate(self.parts) for c in range(1, p + 1)]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Composition:
    """A finite sequence of nonnegative integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 for p in parts):
            raise DomainError(f"composition parts must be nonnegative: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def is_partition(self) -> bool:
        p = self.parts
        return all(x > 0 for x in p) and all(p[i] >= p[i + 1] for i in range(len(p) - 1))

    def to_partition(self) -> Partition:
        return Partition(self.parts)


class Cell(NamedTuple):
    col: int
    row: int


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order."""

    def rec(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for p in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - p, p):
                yield (p,) + rest

    for parts in rec(n, n):
        yield Partition(parts)


@dataclass(frozen=True)
class SkewShape:
    """The skew diagram outer/inner translated by ``offset = (dc, dr)``.

    Cells are stored in local coordinates; the offset only enters contents.
    Shapes differing only by offset compare unequal.
    """

    outer: Partition = field(default_factory=Partition)
    inner: Partition = field(default_factory=Partition)
    offset: tuple[int, int] = (0, 0)

    def __post_init__(self) -> None:
        outer, inner = self.outer, self.inner
        if not isinstance(outer, Partition):
            outer = Partition.of(outer)
            object.__setattr__(self, "outer", outer)
        if not isinstance(inner, Partition):
            inner = Partition.of(inner)
            object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "offset", (int(self.offset[0]), int(self.offset[1])))
        if len(inner) > len(outer) or any(inner[i] > outer[i] for i in range(len(inner))):
            raise DomainError(f"inner shape {inner} not contained in outer shape {outer}")

    @classmethod
    def straight(cls, parts: Sequence[int]) -> "SkewShape":
        return cls(Partition.of(parts))

    @classmethod
    def from_cells(cls, cells: Sequence[tuple[int, int]]) -> "SkewShape":
        """Canonical zero-offset shape for a set of absolute cells.

        The cells are slid along their diagonals (which keeps every content)
        until they touch the first row or first column.
        """
        cells = [Cell(int(c), int(r)) for c, r in cells]
        if not cells:
            return cls()
        shift = min(min(c for c, _ in cells), min(r for _, r in cells)) - 1
        cells = [Cell(c - shift, r - shift) for c, r in cells]
        rows = max(r for _, r in cells)
        outer, inner = [], []
        for r in range(1, rows + 1):
            cols = sorted(c for c, rr in cells if rr == r)
            if cols and cols != list(range(cols[0], cols[-1] + 1)):
                raise DomainError("cells do not form a skew diagram")
            outer.append(cols[-1] if cols else None)
            inner.append(cols[0] - 1 if cols else None)
        # an empty row is fully covered by the inner shape
        for r in range(rows - 1, -1, -1):
            if outer[r] is None:
                outer[r] = inner[r] = outer[r + 1]
        shape = cls(Partition.of(outer), Partition.of(inner))
        if shape.cells != frozenset(cells):
            raise DomainError("cells do not form a skew diagram")
        return shape

    @cached_property
    def cells(self) -> frozenset[Cell]:
        inner = self.inner.parts
        return frozenset(
            Cell(c, r + 1)
            for r, p in enumerate(self.outer.parts)
            for c in range((inner[r] if r < len(inner) else 0) + 1, p + 1)
        )

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def content(self, cell: tuple[int, int]) -> int:
        return content(Cell(*cell), self)

    def absolute(self, cell: Cell) -> Cell:
        return Cell(cell.col + self.offset[0], cell.row + self.offset[1])

    def __str__(self) -> str:
        text = ",".join(map(str, self.outer.parts)) or "0"
        if self.inner.parts:
            text += "/" + ",".join(map(str, self.inner.parts))
        if self.offset != (0, 0):
            text += "@%d,%d" % self.offset
        return text


@dataclass(frozen=True)
class TupleShape:
    """An ordered k-tuple of skew shapes."""

    components: tuple[SkewShape, ...]

    def __post_init__(self) -> None:
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise DomainError("a tuple shape needs at least one component")

    @classmethod
    def of(cls, *shapes: SkewShape | Sequence[int]) -> "TupleShape":
        return cls(tuple(s if isinstance(s, SkewShape) else SkewShape.straight(s) for s in shapes))

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(s.size for s in self.components)

    def __str__(self) -> str:
        return ";".join(str(s) for s in self.components)


def content(cell: Cell, shape: SkewShape) -> int:
    """Content ``col - row`` of a cell, after applying the shape's offset."""
    if cell not in shape.cells:
        raise DomainError(f"cell {tuple(cell)} is not in shape {shape}")
    dc, dr = shape.offset
    return (cell.col + dc) - (cell.row + dr)


def shifted_content(cell: Cell, component_index: int, k: int, shape: SkewShape | None = None) -> int:
    """``k * content + component_index``; content uses ``shape``'s offset if given."""
    if not 0 <= component_index < k:
        raise DomainError(f"component index {component_index} out of range for k={k}")
    c = content(cell, shape) if shape is not None else cell.col - cell.row
    return k * c + component_index


@dataclass(frozen=True)
class StandardTupleTableau:
    """A bijective filling of a tuple shape by 1..n, increasing along rows
    and up columns of every component."""

    shape: TupleShape
    entries: tuple[tuple[tuple[Cell, int], ...], ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(sorted((Cell(*c), int(v)) for c, v in comp)) for comp in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.shape.k:
            raise DomainError("one filling per component is required")
        values = []
        for comp, shape in zip(entries, self.shape.components):
            filled = dict(comp)
            if set(filled) != shape.cells:
                raise DomainError("filling does not cover the shape exactly")
            for (c, r), v in filled.items():
                if filled.get(Cell(c - 1, r), 0) > v or filled.get(Cell(c, r - 1), 0) > v:
                    raise DomainError("filling is not standard")
            values.extend(filled.values())
        if sorted(values) != list(range(1, len(values) + 1)):
            raise DomainError("entries must be exactly 1..n")

    @property
    def size(self) -> int:
        return self.shape.size

    def entry(self, component: int, cell: tuple[int, int]) -> int:
        return dict(self.entries[component])[Cell(*cell)]

    def placed_cells(self) -> list[tuple[int, int, int, int]]:
        """(shifted content, absolute row, component, value) for every cell."""
        k = self.shape.k
        out = []
        for i, (comp, shape) in enumerate(zip(self.entries, self.shape.components)):
            for cell, v in comp:
                out.append((shifted_content(cell, i, k, shape), shape.absolute(cell).row, i, v))
        out.sort()
        return out


def content_reading_word(t: StandardTupleTableau) -> Word:
    """Entries by increasing shifted content, each diagonal read southwest
    to northeast."""
    return tuple(v for _, _, _, v in t.placed_cells())


def shifted_contents(shape: TupleShape) -> tuple[int, ...]:
    """Shifted contents in reading order; identical for every filling."""
    k = shape.k
    keys = []
    for i, s in enumerate(shape.components):
        for cell in s.cells:
            keys.append((shifted_content(cell, i, k, s), s.absolute(cell).row))
    return tuple(c for c, _ in sorted(keys))


def row_reading_word(t: StandardTupleTableau) -> Word:
    """Single tableau: rows from top to bottom, each left to right."""
    cells = t.entries[0]
    return tuple(v for (c, r), v in sorted(cells, key=lambda cv: (-cv[0].row, cv[0].col)))


def column_reading_word(t: StandardTupleTableau) -> Word:
    """Single tableau: columns from left to right, each top to bottom."""
    cells = t.entries[0]
    return tuple(v for (c, r), v in sorted(cells, key=lambda cv: (cv[0].col, -cv[0].row)))


def descent_signature(w: Sequence[int]) -> Signature:
    """+1 at position i iff i appears to the left of i+1 in w."""
    pos = {v: p for p, v in enumerate(w)}
    return tuple(1 if pos[i] < pos[i + 1] else -1 for i in range(1, len(w)))


def signature_str(sig: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" for s in sig)


def parse_signature(text: str) -> Signature:
    table = {"+": 1, "-": -1, "−": -1}
    try:
        return tuple(table[ch] for ch in text.strip())
    except KeyError as exc:
        raise DomainError(f"bad signature character in {text!r}") from exc


def enumerate_standard(shape: TupleShape, max_size: int = DEFAULT_MAX_SIZE) -> list[StandardTupleTableau]:
    """Every standard filling of ``shape``, sorted by content reading word."""
    n = shape.size
    if n > max_size:
        raise ResourceError(f"shape of size {n} exceeds the bound {max_size}")
    comps = [sorted(s.cells) for s in shape.components]
    cellsets = [s.cells for s in shape.components]
    filled: list[dict[Cell, int]] = [{} for _ in comps]
    results: list[StandardTupleTableau] = []

    def ready(i: int, cell: Cell) -> bool:
        if cell in filled[i]:
            return False
        west, south = Cell(cell.col - 1, cell.row), Cell(cell.col, cell.row - 1)
        return all(nb not in cellsets[i] or nb in filled[i] for nb in (west, south))

    def rec(v: int) -> None:
        if v > n:
            entries = tuple(tuple(f.items()) for f in filled)
            results.append(StandardTupleTableau(shape, entries))
            return
        for i, cells in enumerate(comps):
            for cell in cells:
                if ready(i, cell):
                    filled[i][cell] = v
                    rec(v + 1)
                    del filled[i][cell]

    rec(1)
    results.sort(key=content_reading_word)
    return results


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff mu is dominated by lam."""
    if mu.size != lam.size:
        raise DomainError("dominance compares partitions of equal size")
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a > b:
            return False
    return True


def runs_composition(sig: Sequence[int]) -> Composition:
    """Lengths of the runs of +1 entries, each closed by a -1; the end of the
    signature counts as a final -1."""
    parts = []
    run = 1
    for s in sig:
        if s > 0:
            run += 1
        else:
            parts.append(run)
            run = 1
    parts.append(run)
    return Composition(tuple(parts))


def partition_signature(lam: Partition) -> Signature:
    """The signature whose runs composition is ``lam``."""
    sig: list[int] = []
    for p in lam.parts:
        sig.extend([1] * (p - 1))
        sig.append(-1)
    return tuple(sig[:-1])


def parse_skew_shape(text: str) -> SkewShape:
    """Parse ``outer/inner@dc,dr``; inner and offset are optional."""
    text = text.strip()
    offset = (0, 0)
    try:
        if "@" in text:
            text, off = text.split("@", 1)
            dc, dr = off.split(",")
            offset = (int(dc), int(dr))
        outer_text, _, inner_text = text.partition("/")

        def parts(s: str) -> list[int]:
            s = s.strip()
            return [int(x) for x in s.split(",")] if s else []

        return SkewShape(Partition.of(parts(outer_text)), Partition.of(parts(inner_text)), offset)
    except ValueError as exc:
        raise DomainError(f"bad shape literal {text!r}") from exc


def parse_tuple_shape(text: str) -> TupleShape:
    """Parse a ``;``-separated list of skew shape literals."""
    return TupleShape(tuple(parse_skew_shape(item) for item in text.split(";")))
