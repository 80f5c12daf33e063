"""Exact Laurent polynomial arithmetic in t with half-integer exponents.

A polynomial is stored as a mapping from *doubled* exponents to integer
coefficients: the key ``d`` stands for the monomial ``t^(d/2)``.  Doubling
keeps every exponent an ``int``, so arithmetic stays exact and terms are
totally ordered without ever touching floats.  The zero polynomial is the
empty mapping; zero coefficients are never stored.

The canonical text form sorts terms by strictly decreasing exponent,
prints integer powers as ``t^3``/``t^-1`` (``t`` for exponent 1, bare
coefficient for exponent 0) and half-integer powers in braces, e.g.
``t^{1/2}`` and ``t^{-3/2}``.  A coefficient of magnitude 1 is dropped in
front of a power.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

TermSource = Union[Mapping[int, int], Iterable[tuple[int, int]], None]


class HalfLaurent:
    """An immutable Laurent polynomial in t^(1/2) with int coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: TermSource = None):
        data: dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for d, c in items:
                if not isinstance(d, int) or isinstance(d, bool):
                    raise TypeError(f"doubled exponent must be int, got {d!r}")
                if not isinstance(c, int) or isinstance(c, bool):
                    raise TypeError(f"coefficient must be int, got {c!r}")
                total = data.get(d, 0) + c
                if total == 0:
                    data.pop(d, None)
                else:
                    data[d] = total
        self._terms = data

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, doubled_exp: int) -> int:
        """Coefficient of t^(doubled_exp / 2)."""
        return self._terms.get(doubled_exp, 0)

    def to_pairs(self) -> tuple[tuple[int, int], ...]:
        """Machine form: (doubled_exp, coeff) pairs, ascending exponent."""
        return tuple(sorted(self._terms.items()))

    def min_doubled_exp(self) -> int | None:
        return min(self._terms) if self._terms else None

    def max_doubled_exp(self) -> int | None:
        return max(self._terms) if self._terms else None

    def eval_one(self) -> int:
        """Value at t = 1, i.e. the coefficient sum.  Exact."""
        return sum(self._terms.values())

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "HalfLaurent") -> "HalfLaurent":
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        keys = set(self._terms) | set(other._terms)
        return HalfLaurent(
            {d: self._terms.get(d, 0) + other._terms.get(d, 0) for d in keys}
        )

    def __neg__(self) -> "HalfLaurent":
        return HalfLaurent({d: -c for d, c in self._terms.items()})

    def __sub__(self, other: "HalfLaurent") -> "HalfLaurent":
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "HalfLaurent") -> "HalfLaurent":
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        acc: dict[int, int] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                d = d1 + d2
                acc[d] = acc.get(d, 0) + c1 * c2
        return HalfLaurent(acc)

    def shifted(self, doubled_shift: int) -> "HalfLaurent":
        """Multiply by t^(doubled_shift / 2)."""
        if not isinstance(doubled_shift, int) or isinstance(doubled_shift, bool):
            raise TypeError("shift must be an integer (doubled exponent)")
        return HalfLaurent({d + doubled_shift: c for d, c in self._terms.items()})

    # -- identity --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- rendering -------------------------------------------------------

    @staticmethod
    def _power(d: int) -> str:
        if d == 2:
            return "t"
        if d % 2 == 0:
            return f"t^{d // 2}"
        return f"t^{{{d}/2}}"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for d in sorted(self._terms, reverse=True):
            c = self._terms[d]
            mag = abs(c)
            if d == 0:
                body = str(mag)
            elif mag == 1:
                body = self._power(d)
            else:
                body = f"{mag}*{self._power(d)}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"HalfLaurent({dict(sorted(self._terms.items()))!r})"


ZERO = HalfLaurent()
ONE = HalfLaurent({0: 1})


def monomial(coeff: int, doubled_exp: int) -> HalfLaurent:
    """coeff * t^(doubled_exp / 2)."""
    return HalfLaurent({doubled_exp: coeff})


def quantum_integer(i: int) -> HalfLaurent:
    """[i] = t^((i-1)/2) + t^((i-3)/2) + ... + t^((1-i)/2), for i >= 1.

    [i] has i terms, is palindromic, and evaluates to i at t = 1.
    """
    if not isinstance(i, int) or isinstance(i, bool) or i < 1:
        raise ValueError(f"quantum integer defined for integers i >= 1, got {i!r}")
    return HalfLaurent({d: 1 for d in range(1 - i, i, 2)})


def eval_one(p: HalfLaurent) -> int:
    """Value of p at t = 1."""
    return p.eval_one()


def equal_up_to_shift(p: HalfLaurent, q: HalfLaurent) -> bool:
    """True when q = p * t^(d/2) for some integer d.

    This is equality up to a half-integer power of t; it is stricter than
    equality up to an integer power, and both readings coincide whenever
    the exponent supports of p and q have the same parity.  Two zero
    polynomials compare equal; zero never matches a nonzero polynomial.
    """
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    d = q.min_doubled_exp() - p.min_doubled_exp()
    return q == p.shifted(d)


def canonical_shift(p: HalfLaurent) -> HalfLaurent:
    """Shift representative with lowest exponent 0; complete invariant for
    equality up to monomial shifts."""
    if p.is_zero():
        return p
    return p.shifted(-p.min_doubled_exp())
