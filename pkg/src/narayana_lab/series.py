"""Truncated power series in an auxiliary variable u over PolyQQ coefficients.

A series carries a fixed truncation order N and exactly N+1 coefficients;
binary operations on mismatched orders truncate to the smaller one.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .poly import Coeff, PolyQQ


class NotInvertibleError(ArithmeticError):
    """Constant term is not a unit of the Laurent ring."""


def _as_poly(x: PolyQQ | Coeff) -> PolyQQ:
    if isinstance(x, PolyQQ):
        return x
    if isinstance(x, (int, Fraction)):
        return PolyQQ.const(x)
    raise TypeError(f"cannot use {x!r} as a series coefficient")


class TruncSeries:
    """Power series 1*u^0 + ... truncated after the coefficient of u^order."""

    __slots__ = ("order", "_c")

    def __init__(self, coeffs: Iterable[PolyQQ | Coeff], order: int | None = None):
        c = [_as_poly(x) for x in coeffs]
        if order is None:
            if not c:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(c) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        zero = PolyQQ.zero()
        c = c[: order + 1]
        c.extend([zero] * (order + 1 - len(c)))
        self.order = order
        self._c = c

    @classmethod
    def zero(cls, order: int) -> TruncSeries:
        return cls([], order=order)

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls([PolyQQ.one()], order=order)

    def coefficient(self, k: int) -> PolyQQ:
        """Coefficient of u^k (never consults anything beyond the order)."""
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient u^{k} outside truncation order {self.order}")
        return self._c[k]

    def coefficients(self) -> Sequence[PolyQQ]:
        return tuple(self._c)

    def truncated(self, order: int) -> TruncSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self._c[: order + 1], order=order)

    def is_zero(self) -> bool:
        return all(c.is_zero for c in self._c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.order, tuple(self._c)))

    def __add__(self, other: TruncSeries) -> TruncSeries:
        n = min(self.order, other.order)
        return TruncSeries(
            [self._c[k] + other._c[k] for k in range(n + 1)], order=n
        )

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        n = min(self.order, other.order)
        return TruncSeries(
            [self._c[k] - other._c[k] for k in range(n + 1)], order=n
        )

    def __neg__(self) -> TruncSeries:
        return TruncSeries([-c for c in self._c], order=self.order)

    def scaled(self, factor: PolyQQ | Coeff) -> TruncSeries:
        factor = _as_poly(factor)
        return TruncSeries([c * factor for c in self._c], order=self.order)

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        n = min(self.order, other.order)
        zero = PolyQQ.zero()
        out = [zero] * (n + 1)
        for i in range(n + 1):
            ci = self._c[i]
            if ci.is_zero:
                continue
            for j in range(n + 1 - i):
                cj = other._c[j]
                if not cj.is_zero:
                    out[i + j] = out[i + j] + ci * cj
        return TruncSeries(out, order=n)

    def inverse(self) -> TruncSeries:
        """Multiplicative inverse; the constant term must be a Laurent unit."""
        c0 = self._c[0]
        if c0.is_zero or not c0.is_monomial():
            raise NotInvertibleError(f"constant term {c0} is not invertible")
        inv0 = c0 ** -1
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = PolyQQ.zero()
            for k in range(1, n + 1):
                if not self._c[k].is_zero:
                    acc = acc + self._c[k] * out[n - k]
            out.append(-(inv0 * acc))
        return TruncSeries(out, order=self.order)

    def __truediv__(self, other: TruncSeries) -> TruncSeries:
        return self * other.inverse()

    def int_pow(self, e: int) -> TruncSeries:
        if e < 0:
            return self.inverse().int_pow(-e)
        acc = TruncSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            e >>= 1
            if e:
                base = base * base
        return acc

    def compose(self, inner: TruncSeries) -> TruncSeries:
        """self(inner(u)); inner must have zero constant term."""
        if not inner._c[0].is_zero:
            raise ValueError("composition needs a zero constant term inside")
        n = min(self.order, inner.order)
        acc = TruncSeries([self._c[n]], order=n)
        for k in range(n - 1, -1, -1):
            acc = acc * inner.truncated(n)
            acc = TruncSeries(
                [acc._c[0] + self._c[k]] + list(acc._c[1:]), order=n
            )
        return acc

    def reverse(self) -> TruncSeries:
        """Compositional inverse of a series with f(0)=0 and unit linear coefficient."""
        if not self._c[0].is_zero:
            raise ValueError("reversion needs a zero constant term")
        if self.order >= 1 and self._c[1] != PolyQQ.one():
            raise ValueError("reversion needs coefficient 1 at u^1")
        n = self.order
        zero = PolyQQ.zero()
        g = [zero] * (n + 1)
        if n >= 1:
            g[1] = PolyQQ.one()
        fpows = [None, self]  # fpows[k] = self**k
        for m in range(2, n + 1):
            fpows.append(fpows[-1] * self)
            acc = zero
            for k in range(1, m):
                gk = g[k]
                if not gk.is_zero:
                    acc = acc + gk * fpows[k].coefficient(m)
            g[m] = -acc
        return TruncSeries(g, order=n)

    def __str__(self) -> str:
        parts = [f"({c})*u^{k}" for k, c in enumerate(self._c) if not c.is_zero]
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"TruncSeries(order={self.order}, {self})"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a * b


def series_div(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a / b


def series_int_pow(a: TruncSeries, e: int) -> TruncSeries:
    return a.int_pow(e)


def series_reverse(f: TruncSeries) -> TruncSeries:
    return f.reverse()
