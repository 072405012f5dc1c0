"""Sparse exact Laurent polynomials in two variables q and t."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

Monomial = tuple[int, int]


class Poly:
    """An immutable map from exponent pairs ``(a, b)`` of ``q^a t^b`` to
    nonzero integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()) -> None:
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, b), c in items:
            key = (int(a), int(b))
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {m: c for m, c in sorted(acc.items()) if c != 0}
        self._hash: int | None = None

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, q: int = 0, t: int = 0, coeff: int = 1) -> "Poly":
        return cls({(q, t): coeff})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other: "Poly | int") -> "Poly":
        other = _lift(other)
        return Poly(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Poly | int") -> "Poly":
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> "Poly":
        return _lift(other) - self

    def __mul__(self, other: "Poly | int") -> "Poly":
        other = _lift(other)
        out: dict[Monomial, int] = {}
        for (a, b), c in self._terms.items():
            for (x, y), d in other._terms.items():
                key = (a + x, b + y)
                out[key] = out.get(key, 0) + c * d
        return Poly(out)

    __rmul__ = __mul__

    def shift(self, q: int = 0, t: int = 0) -> "Poly":
        """Multiply by ``q^q t^t``."""
        return Poly({(a + q, b + t): c for (a, b), c in self._terms.items()})

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def has_negative_exponent(self) -> bool:
        return any(a < 0 or b < 0 for a, b in self._terms)

    def at_one(self) -> int:
        """Value at q = t = 1."""
        return sum(self._terms.values())

    def at_q_one(self) -> "Poly":
        return Poly({(0, b): c for (_, b), c in self._terms.items()})

    def sort_key(self) -> tuple:
        return tuple(self._terms.items())

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        # low total degree first, q before t within a degree
        for (a, b), c in sorted(self._terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], -kv[0][0])):
            mono = "*".join(p for p in (_power("q", a), _power("t", b)) if p)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> list[list[int]]:
        return [[a, b, c] for (a, b), c in self._terms.items()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "Poly":
        return cls({(a, b): c for a, b, c in data})


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def _lift(x: "Poly | int") -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


ZERO = Poly()
ONE = Poly.const(1)
Q = Poly.monomial(1, 0)
T = Poly.monomial(0, 1)
