"""Quasisymmetric aggregates, Schur functions at the signature level,
ribbon Schur functions and greedy Schur extraction.

A quasisymmetric aggregate of degree N maps signatures of length N-1 to
polynomial coefficients in q and t.  Extraction only ever looks at
signatures, never at graph structure, so it serves as an independent
check on every graph-derived expansion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import DomainError, NotSchurPositive
from .poly import ONE, Poly
from .shapes_tableaux import (
    Partition,
    Signature,
    TupleShape,
    content_reading_word,
    descent_signature,
    enumerate_standard,
    partition_signature,
    runs_composition,
    signature_str,
)


class QSymAggregate:
    """A finite sum of fundamental quasisymmetric functions with
    polynomial coefficients."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Signature, Poly] | Iterable[tuple[Signature, Poly]] = ()) -> None:
        self.degree = int(degree)
        acc: dict[Signature, Poly] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for sig, coeff in items:
            sig = tuple(sig)
            if len(sig) != self.degree - 1:
                raise DomainError(f"signature {signature_str(sig)} has the wrong length for degree {degree}")
            coeff = coeff if isinstance(coeff, Poly) else Poly.const(coeff)
            acc[sig] = acc[sig] + coeff if sig in acc else coeff
        self._terms = {s: c for s, c in sorted(acc.items()) if c}

    @property
    def terms(self) -> dict[Signature, Poly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, sig: Signature) -> Poly:
        return self._terms.get(tuple(sig), Poly())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSymAggregate):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __add__(self, other: "QSymAggregate") -> "QSymAggregate":
        self._check(other)
        return QSymAggregate(self.degree, list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: "QSymAggregate") -> "QSymAggregate":
        return self + other.scale(Poly.const(-1))

    def scale(self, c: Poly | int) -> "QSymAggregate":
        c = c if isinstance(c, Poly) else Poly.const(c)
        return QSymAggregate(self.degree, {s: v * c for s, v in self._terms.items()})

    def map_coefficients(self, fn) -> "QSymAggregate":
        return QSymAggregate(self.degree, {s: fn(v) for s, v in self._terms.items()})

    def at_q_one(self) -> "QSymAggregate":
        return self.map_coefficients(Poly.at_q_one)

    def _check(self, other: "QSymAggregate") -> None:
        if self.degree != other.degree:
            raise DomainError("aggregates of different degrees cannot be combined")

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*Q[{signature_str(s)}]" for s, c in self._terms.items())
        return f"QSymAggregate({self.degree}: {body or '0'})"


@dataclass
class SchurPoly:
    """A Schur expansion: partitions of ``degree`` mapped to coefficients."""

    degree: int
    terms: dict[Partition, Poly] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list, compare=False)

    def __post_init__(self) -> None:
        clean = {}
        for lam, c in self.terms.items():
            lam = lam if isinstance(lam, Partition) else Partition.of(lam)
            if lam.size != self.degree:
                raise DomainError(f"partition {lam} does not have size {self.degree}")
            c = c if isinstance(c, Poly) else Poly.const(c)
            if c:
                clean[lam] = clean[lam] + c if lam in clean else c
        self.terms = dict(sorted(clean.items(), key=lambda kv: kv[0].parts, reverse=True))

    def __add__(self, other: "SchurPoly") -> "SchurPoly":
        if self.degree != other.degree:
            raise DomainError("Schur expansions of different degrees cannot be added")
        acc = dict(self.terms)
        for lam, c in other.terms.items():
            acc[lam] = acc[lam] + c if lam in acc else c
        return SchurPoly(self.degree, acc, self.warnings + other.warnings)

    def coefficient(self, lam: Partition | tuple[int, ...]) -> Poly:
        lam = lam if isinstance(lam, Partition) else Partition.of(lam)
        return self.terms.get(lam, Poly())

    def is_nonnegative(self) -> bool:
        """All coefficients lie in N[q, t]."""
        return all(c.is_nonnegative() and not c.has_negative_exponent() for c in self.terms.values())

    def at_one(self) -> dict[Partition, int]:
        return {lam: c.at_one() for lam, c in self.terms.items()}

    def to_qsym(self) -> QSymAggregate:
        out = QSymAggregate(self.degree)
        for lam, c in self.terms.items():
            out = out + schur_qsym(lam).scale(c)
        return out

    def render(self) -> str:
        """Text form such as ``q*s[3,1] + q^2*s[2,1,1]``."""
        if not self.terms:
            return "0"
        pieces = []
        for lam, c in self.terms.items():
            basis = "s[" + ",".join(map(str, lam.parts)) + "]"
            if c == ONE:
                pieces.append(basis)
            elif len(c.terms) == 1 and c.at_one() > 0:
                pieces.append(f"{c}*{basis}")
            else:
                pieces.append(f"({c})*{basis}")
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"partition": list(lam.parts), "coefficient": c.to_json()} for lam, c in self.terms.items()],
        }


@dataclass(frozen=True)
class Ribbon:
    """A connected ribbon of ``size`` cells, labelled 1..size by increasing
    content; ``descents`` holds the i whose successor lies south of it."""

    size: int
    descents: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        d = frozenset(int(i) for i in self.descents)
        object.__setattr__(self, "descents", d)
        if any(not 1 <= i < self.size for i in d):
            raise DomainError(f"descent set {sorted(d)} is not inside 1..{self.size - 1}")


def ribbon_maj(nu: Ribbon) -> int:
    return sum(nu.descents)


def all_ribbons(n: int) -> list[Ribbon]:
    return [Ribbon(n, frozenset(c)) for r in range(n) for c in itertools.combinations(range(1, n), r)]


@lru_cache(maxsize=None)
def _schur_qsym_cached(parts: tuple[int, ...]) -> QSymAggregate:
    lam = Partition(parts)
    n = lam.size
    terms: dict[Signature, Poly] = {}
    for t in enumerate_standard(TupleShape.of(parts), max_size=max(n, 1)):
        sig = descent_signature(content_reading_word(t))
        terms[sig] = terms.get(sig, Poly()) + ONE
    return QSymAggregate(n, terms)


def schur_qsym(lam: Partition) -> QSymAggregate:
    """Sum of ``Q_sigma(T)`` over standard tableaux T of shape ``lam``."""
    lam = lam if isinstance(lam, Partition) else Partition.of(lam)
    return _schur_qsym_cached(lam.parts)


@lru_cache(maxsize=None)
def _ribbon_qsym_cached(n: int, descents: frozenset[int]) -> QSymAggregate:
    terms: dict[Signature, Poly] = {}
    for w in itertools.permutations(range(1, n + 1)):
        if frozenset(i for i in range(1, n) if w[i - 1] > w[i]) == descents:
            sig = descent_signature(w)
            terms[sig] = terms.get(sig, Poly()) + ONE
    return QSymAggregate(n, terms)


def ribbon_schur_qsym(nu: Ribbon) -> QSymAggregate:
    """Sum of ``Q_sigma(w)`` over permutations w with descent set Des(nu)."""
    return _ribbon_qsym_cached(nu.size, nu.descents)


def extract_schur(f: QSymAggregate) -> SchurPoly:
    """Greedy Schur expansion of a Schur-positive aggregate.

    Repeatedly take the lexicographically largest partition whose shape
    signature is present (lexicographic order refines dominance, so this
    shape is dominance-maximal), and subtract its coefficient times the
    Schur function.  Raises NotSchurPositive on a negative coefficient or
    on leftover terms with no partition-shaped signature.
    """
    remaining = dict(f.items())
    n = f.degree
    result: dict[Partition, Poly] = {}
    while remaining:
        shaped = []
        for sig in remaining:
            comp = runs_composition(sig)
            if comp.is_partition():
                shaped.append(comp.to_partition())
        if not shaped:
            sig = min(remaining)
            raise NotSchurPositive(f"leftover term Q[{signature_str(sig)}] has no partition shape", sig)
        lam = max(shaped, key=lambda p: p.parts)
        lead = partition_signature(lam)
        c = remaining[lead]
        if not c.is_nonnegative():
            raise NotSchurPositive(f"negative coefficient {c} on Q[{signature_str(lead)}]", lead)
        result[lam] = c
        for sig, mult in schur_qsym(lam).items():
            new = remaining.get(sig, Poly()) - c * mult
            if not new.is_nonnegative():
                raise NotSchurPositive(f"subtracting s{lam} leaves {new} on Q[{signature_str(sig)}]", sig)
            if new:
                remaining[sig] = new
            else:
                remaining.pop(sig, None)
    return SchurPoly(n, result)
