"""Fillings of partition diagrams, the inv and maj statistics, the
transformed Macdonald polynomials and their decomposition into LLT
polynomials of ribbon tuples."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError, ResourceError
from .llt import llt_polynomial
from .poly import Poly
from .shapes_tableaux import (
    Cell,
    Partition,
    SkewShape,
    StandardTupleTableau,
    TupleShape,
    Word,
    descent_signature,
)
from .symfunc import QSymAggregate, SchurPoly, extract_schur

DEFAULT_MAX_SIZE = 7

DescentSet = frozenset[Cell]


@dataclass(frozen=True)
class Filling:
    """A bijection from the cells of a partition diagram to 1..n."""

    shape: Partition
    entries: tuple[tuple[Cell, int], ...]

    def __post_init__(self) -> None:
        entries = tuple(sorted((Cell(*c), int(v)) for c, v in self.entries))
        object.__setattr__(self, "entries", entries)
        if {c for c, _ in entries} != set(self.shape.cells()):
            raise DomainError("filling does not cover the shape exactly")
        if sorted(v for _, v in entries) != list(range(1, self.shape.size + 1)):
            raise DomainError("filling entries must be exactly 1..n")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Filling":
        """Build from rows listed bottom row first."""
        rows = [list(r) for r in rows]
        shape = Partition.of([len(r) for r in rows])
        return cls(shape, tuple((Cell(c + 1, r + 1), v) for r, row in enumerate(rows) for c, v in enumerate(row)))

    def table(self) -> dict[Cell, int]:
        return dict(self.entries)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        return self.table()[Cell(*cell)]


def _in_shape(cell: Cell, mu: Partition) -> bool:
    return 1 <= cell.row <= len(mu) and 1 <= cell.col <= mu[cell.row - 1]


def arm(cell: tuple[int, int], mu: Partition) -> int:
    """Number of cells strictly east of ``cell`` in its row."""
    cell = Cell(*cell)
    if not _in_shape(cell, mu):
        raise DomainError(f"cell {tuple(cell)} is not in {mu}")
    return mu[cell.row - 1] - cell.col


def leg(cell: tuple[int, int], mu: Partition) -> int:
    """Number of cells strictly north of ``cell`` in its column."""
    cell = Cell(*cell)
    if not _in_shape(cell, mu):
        raise DomainError(f"cell {tuple(cell)} is not in {mu}")
    return sum(1 for r in range(cell.row, len(mu)) if mu[r] >= cell.col)


def descents(S: Filling) -> DescentSet:
    """Cells above the first row holding a larger entry than the cell below."""
    tab = S.table()
    return frozenset(c for c, v in tab.items() if c.row > 1 and v > tab[Cell(c.col, c.row - 1)])


def maj_of_descent_set(D: Iterable[Cell], mu: Partition) -> int:
    D = list(D)
    return len(D) + sum(leg(c, mu) for c in D)


def arm_of_descent_set(D: Iterable[Cell], mu: Partition) -> int:
    return sum(arm(c, mu) for c in D)


def maj(S: Filling) -> int:
    return maj_of_descent_set(descents(S), S.shape)


def attacking_pairs(mu: Partition) -> list[tuple[Cell, Cell]]:
    """(c, d) in the same row with c west of d, or c one row above d and
    strictly east of it."""
    cells = mu.cells()
    out = []
    for c in cells:
        for d in cells:
            if (c.row == d.row and c.col < d.col) or (c.row == d.row + 1 and d.col < c.col):
                out.append((c, d))
    return out


def inversion_pairs(S: Filling) -> frozenset[tuple[Cell, Cell]]:
    tab = S.table()
    return frozenset((c, d) for c, d in attacking_pairs(S.shape) if tab[c] > tab[d])


def inv(S: Filling) -> int:
    return len(inversion_pairs(S)) - arm_of_descent_set(descents(S), S.shape)


def row_reading_word(S: Filling) -> Word:
    """Rows from top to bottom, each read left to right."""
    return tuple(v for c, v in sorted(S.entries, key=lambda cv: (-cv[0].row, cv[0].col)))


def fillings(mu: Partition, max_size: int = DEFAULT_MAX_SIZE) -> Iterator[Filling]:
    """All n! standard fillings of ``mu``."""
    n = mu.size
    if n > max_size:
        raise ResourceError(f"shape of size {n} exceeds the bound {max_size}")
    cells = mu.cells()
    for perm in itertools.permutations(range(1, n + 1)):
        yield Filling(mu, tuple(zip(cells, perm)))


def macdonald_qsym(mu: Partition, max_size: int = DEFAULT_MAX_SIZE) -> QSymAggregate:
    """Sum of q^inv t^maj Q_sigma over standard fillings, with sigma taken
    from the row reading word."""
    mu = mu if isinstance(mu, Partition) else Partition.of(mu)
    terms: dict[tuple[int, ...], Poly] = {}
    for S in fillings(mu, max_size):
        sig = descent_signature(row_reading_word(S))
        terms[sig] = terms.get(sig, Poly()) + Poly.monomial(inv(S), maj(S))
    return QSymAggregate(max(mu.size, 1), terms)


def possible_descent_sets(mu: Partition) -> list[DescentSet]:
    upper = [c for c in mu.cells() if c.row > 1]
    return [frozenset(sub) for r in range(len(upper) + 1) for sub in itertools.combinations(upper, r)]


def _column_ribbon(mu: Partition, col: int, D: DescentSet) -> list[tuple[Cell, Cell]]:
    """(original cell, ribbon cell) pairs for one column, the bottom cell
    of the column landing on content 0."""
    height = sum(1 for p in mu.parts if p >= col)
    placed = []
    x, y = 0, 0
    for row in range(height, 0, -1):
        if row < height:
            if Cell(col, row + 1) in D:
                y -= 1
            else:
                x += 1
        placed.append((Cell(col, row), (x, y)))
    # last placed cell is the southeastern end; move it to content 0
    lx, ly = placed[-1][1]
    shift = lx - ly
    return [(orig, Cell(px - shift, py)) for orig, (px, py) in placed]


def ribbons_of_descent_set(mu: Partition, D: Iterable[tuple[int, int]]) -> tuple[TupleShape, int, int]:
    """The tuple of column ribbons for descent set D, with a(D) and maj(D).

    Each column is stacked from the top: the next cell goes south when the
    cell above it is a descent, east otherwise.  Every ribbon is translated
    so its southeastern cell has content 0, then shown in canonical
    position.
    """
    mu = mu if isinstance(mu, Partition) else Partition.of(mu)
    D = frozenset(Cell(*c) for c in D)
    for c in D:
        if not _in_shape(c, mu) or c.row < 2:
            raise DomainError(f"cell {tuple(c)} cannot be a descent of {mu}")
    shapes = []
    for col in range(1, mu[0] + 1):
        shapes.append(SkewShape.from_cells([rc for _, rc in _column_ribbon(mu, col, D)]))
    return TupleShape(tuple(shapes)), arm_of_descent_set(D, mu), maj_of_descent_set(D, mu)


def filling_to_tuple(S: Filling) -> StandardTupleTableau:
    """The tuple of ribbon tableaux carrying the entries of S."""
    mu = S.shape
    D = descents(S)
    tab = S.table()
    shapes, comps = [], []
    for col in range(1, mu[0] + 1):
        pairs = _column_ribbon(mu, col, D)
        shape = SkewShape.from_cells([rc for _, rc in pairs])
        # from_cells slides cells along diagonals; replay that shift
        slide = min(min(rc.col for _, rc in pairs), min(rc.row for _, rc in pairs)) - 1
        shapes.append(shape)
        comps.append(tuple((Cell(rc.col - slide, rc.row - slide), tab[orig]) for orig, rc in pairs))
    return StandardTupleTableau(TupleShape(tuple(shapes)), tuple(comps))


def macdonald_via_llt(mu: Partition, max_size: int = DEFAULT_MAX_SIZE) -> QSymAggregate:
    """Sum over descent sets D of q^-a(D) t^maj(D) times the LLT polynomial
    of the ribbon tuple for D."""
    mu = mu if isinstance(mu, Partition) else Partition.of(mu)
    if mu.size > max_size:
        raise ResourceError(f"shape of size {mu.size} exceeds the bound {max_size}")
    total = QSymAggregate(max(mu.size, 1))
    for D in possible_descent_sets(mu):
        shape, a, m = ribbons_of_descent_set(mu, D)
        piece = llt_polynomial(shape, mu[0], max_size=max_size)
        total = total + piece.map_coefficients(lambda c, a=a, m=m: c.shift(-a, m))
    for sig, c in total.items():
        if c.has_negative_exponent():
            raise DomainError(f"negative power of q survived on Q[{sig}]: {c}")
    return total


def kostka_macdonald(mu: Partition, max_size: int = DEFAULT_MAX_SIZE) -> SchurPoly:
    """Schur coefficients of the transformed Macdonald polynomial."""
    return extract_schur(macdonald_qsym(mu, max_size))
