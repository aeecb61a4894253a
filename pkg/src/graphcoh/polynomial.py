"""Exact one-variable integer polynomials.

Used for graded dimensions (variable q), chromatic polynomials (variable
lambda, spelled L in machine output) and graded Euler characteristics.
All arithmetic is over Python's arbitrary-precision integers.
"""

from __future__ import annotations

from typing import Iterable, Union


class IntPolynomial:
    """Immutable polynomial with integer coefficients, index = exponent.

    The coefficient sequence is kept canonical: no trailing zeros, so the
    zero polynomial has an empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls((0,) * exponent + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, with the usual convention degree(0) == -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == IntPolynomial((other,)).coeffs
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        return self + (-other)

    def __mul__(self, other: Union[int, "IntPolynomial"]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = IntPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, value: Union[int, "IntPolynomial"]):
        """Evaluate at an integer, or compose with another polynomial."""
        if isinstance(value, int):
            acc = 0
            for c in reversed(self.coeffs):
                acc = acc * value + c
            return acc
        acc = IntPolynomial.zero()
        for c in reversed(self.coeffs):
            acc = acc * value + IntPolynomial((c,))
        return acc

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def to_string(self, var: str = "q") -> str:
        """Render with descending exponents, e.g. 'L^3 - 3L^2 + 2L'."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = var if mag == 1 else f"{mag}{var}"
            else:
                body = f"{var}^{k}" if mag == 1 else f"{mag}{var}^{k}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"IntPolynomial({self.coeffs!r})"

    def __str__(self):
        return self.to_string()
