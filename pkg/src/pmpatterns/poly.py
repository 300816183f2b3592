"""Dense one-variable polynomials with exact integer coefficients."""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence

__all__ = ["DistPoly", "X", "ZERO", "ONE"]


class DistPoly:
    """
    Immutable polynomial ``sum(coeffs[i] * x**i)``; trailing zeros are trimmed.

    >>> str(DistPoly([5, 1]) * DistPoly([1, 1]))
    '5 + 6x + x^2'
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("DistPoly is immutable")

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> DistPoly:
        return cls(counts)

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def __getitem__(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def total(self) -> int:
        return sum(self.coeffs)

    def _coerce(self, other) -> DistPoly:
        if isinstance(other, DistPoly):
            return other
        if isinstance(other, int):
            return DistPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return DistPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return DistPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return DistPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"DistPoly({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> list[str]:
        """Coefficients low degree first, as decimal strings."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: str | Sequence[str | int]) -> DistPoly:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(v) for v in data)

    @classmethod
    def parse(cls, text: str) -> DistPoly:
        """Inverse of ``str``: accepts ``"1430 + 5536x + 10232x^2"``."""
        coeffs: dict[int, int] = {}
        for term in text.replace(" ", "").split("+"):
            if not term:
                continue
            if "x" in term:
                c, _, p = term.partition("x")
                power = int(p[1:]) if p.startswith("^") else 1
                coeff = int(c) if c else 1
            else:
                power, coeff = 0, int(term)
            coeffs[power] = coeffs.get(power, 0) + coeff
        size = max(coeffs) + 1 if coeffs else 0
        return cls(coeffs.get(i, 0) for i in range(size))


X = DistPoly([0, 1])
ZERO = DistPoly()
ONE = DistPoly([1])
