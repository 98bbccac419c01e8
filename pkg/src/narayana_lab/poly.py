"""Sparse exact Laurent polynomials in the two variables q and q2.

Coefficients are arbitrary-precision rationals (stored as int whenever the
denominator is 1).  Exponents may be negative; ``is_integral`` decides whether
a value is an honest polynomial with integer coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

Coeff = int | Fraction
ExpPair = tuple[int, int]


class ExactDivisionError(ArithmeticError):
    """Polynomial division left a remainder."""


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class PolyQQ:
    """Immutable Laurent polynomial in q and q2 with exact coefficients.

    Terms are held as a map from (deg_q, deg_q2) to a nonzero coefficient;
    the representation is canonical, so equality and hashing are structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[ExpPair, Coeff] | None = None):
        clean: dict[ExpPair, Coeff] = {}
        if terms:
            for exps, c in terms.items():
                c = _norm(c)
                if c:
                    clean[exps] = c
        self._terms = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> PolyQQ:
        return _ZERO

    @classmethod
    def one(cls) -> PolyQQ:
        return _ONE

    @classmethod
    def const(cls, c: Coeff) -> PolyQQ:
        return cls({(0, 0): c})

    @classmethod
    def var_q(cls) -> PolyQQ:
        return _Q

    @classmethod
    def var_q2(cls) -> PolyQQ:
        return _Q2

    @classmethod
    def monomial(cls, c: Coeff, deg_q: int, deg_q2: int = 0) -> PolyQQ:
        return cls({(deg_q, deg_q2): c})

    @classmethod
    def from_q_coefficients(cls, coeffs) -> PolyQQ:
        """Build from a list of coefficients of q^0, q^1, ..."""
        return cls({(i, 0): c for i, c in enumerate(coeffs)})

    # -- inspection --------------------------------------------------------

    def items(self) -> Iterator[tuple[ExpPair, Coeff]]:
        return iter(self._terms.items())

    def coeff(self, deg_q: int, deg_q2: int = 0) -> Coeff:
        return self._terms.get((deg_q, deg_q2), 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_integral(self) -> bool:
        """True iff all coefficients are integers and no exponent is negative."""
        return all(
            isinstance(c, int) and a >= 0 and b >= 0
            for (a, b), c in self._terms.items()
        )

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def max_deg_q(self) -> int:
        return max((a for a, _ in self._terms), default=0)

    def min_deg_q(self) -> int:
        return min((a for a, _ in self._terms), default=0)

    def max_deg_q2(self) -> int:
        return max((b for _, b in self._terms), default=0)

    def min_deg_q2(self) -> int:
        return min((b for _, b in self._terms), default=0)

    def q_coefficients(self) -> list[Coeff]:
        """Coefficients of q^0, q^1, ... for a q2-free value with nonnegative exponents."""
        if any(b != 0 or a < 0 for a, b in self._terms):
            raise ValueError("not a plain polynomial in q")
        out: list[Coeff] = [0] * (self.max_deg_q() + 1)
        for (a, _), c in self._terms.items():
            out[a] = c
        return out

    # -- arithmetic --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyQQ):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == PolyQQ.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: PolyQQ | Coeff) -> PolyQQ:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exps, c in other._terms.items():
            s = _norm(out.get(exps, 0) + c)
            if s:
                out[exps] = s
            elif exps in out:
                del out[exps]
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self) -> PolyQQ:
        return _wrap({exps: -c for exps, c in self._terms.items()})

    def __sub__(self, other: PolyQQ | Coeff) -> PolyQQ:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coeff) -> PolyQQ:
        return _coerce(other) + (-self)

    def __mul__(self, other: PolyQQ | Coeff) -> PolyQQ:
        if isinstance(other, (int, Fraction)):
            other = _norm(other)
            if not other:
                return _ZERO
            if other == 1:
                return self
            return _wrap(
                {exps: _norm(c * other) for exps, c in self._terms.items()}
            )
        if not isinstance(other, PolyQQ):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[ExpPair, Coeff] = {}
        for (x1, y1), c1 in a.items():
            for (x2, y2), c2 in b.items():
                exps = (x1 + x2, y1 + y2)
                s = _norm(out.get(exps, 0) + c1 * c2)
                if s:
                    out[exps] = s
                elif exps in out:
                    del out[exps]
        return _wrap(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> PolyQQ:
        if e == 0:
            return _ONE
        if e < 0:
            if not self.is_monomial():
                raise ExactDivisionError(
                    "negative power of a non-monomial Laurent polynomial"
                )
            ((a, b), c), = self._terms.items()
            return PolyQQ.monomial(_norm(Fraction(1) / c) if c != 1 else 1, -a, -b) ** (-e)
        base, acc = self, None
        while True:
            if e & 1:
                acc = base if acc is None else acc * base
            e >>= 1
            if not e:
                return acc
            base = base * base

    def divexact(self, divisor: PolyQQ) -> PolyQQ:
        """Exact division in the Laurent ring; raises ExactDivisionError otherwise."""
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        if not self:
            return _ZERO
        if divisor.is_monomial():
            ((a, b), c), = divisor._terms.items()
            inv = _norm(Fraction(1, 1) / c)
            return _wrap(
                {(x - a, y - b): _norm(cc * inv) for (x, y), cc in self._terms.items()}
            )
        # Leading-term elimination under lex order on (deg_q, deg_q2).  When the
        # division is exact every step emits one quotient term; a support bound
        # derived from the operands catches inexact input.
        rem = dict(self._terms)
        lead_d = max(divisor._terms)
        cd = divisor._terms[lead_d]
        span_q = self.max_deg_q() - divisor.min_deg_q() - (self.min_deg_q() - divisor.max_deg_q()) + 1
        span_q2 = self.max_deg_q2() - divisor.min_deg_q2() - (self.min_deg_q2() - divisor.max_deg_q2()) + 1
        budget = span_q * span_q2
        quot: dict[ExpPair, Coeff] = {}
        while rem:
            budget -= 1
            if budget < 0:
                raise ExactDivisionError("inexact polynomial division")
            lead_r = max(rem)
            exps = (lead_r[0] - lead_d[0], lead_r[1] - lead_d[1])
            c = _norm(Fraction(rem[lead_r]) / cd)
            quot[exps] = c
            for (x, y), cc in divisor._terms.items():
                key = (x + exps[0], y + exps[1])
                s = _norm(rem.get(key, 0) - c * cc)
                if s:
                    rem[key] = s
                elif key in rem:
                    del rem[key]
        return _wrap(quot)

    # -- evaluation and substitution ----------------------------------------

    def eval(self, at_q: Coeff = 0, at_q2: Coeff = 0) -> Coeff:
        """Exact value at a rational point."""
        total = Fraction(0)
        for (a, b), c in self._terms.items():
            if (a < 0 and at_q == 0) or (b < 0 and at_q2 == 0):
                raise ZeroDivisionError("zero raised to a negative exponent")
            total += Fraction(c) * Fraction(at_q) ** a * Fraction(at_q2) ** b
        return _norm(total)

    def subst_q(self, replacement: PolyQQ) -> PolyQQ:
        """Substitute q -> replacement (the current q-exponents must be >= 0)."""
        groups: dict[int, dict[ExpPair, Coeff]] = {}
        for (a, b), c in self._terms.items():
            if a < 0:
                raise ValueError("substitution into a negative q-exponent")
            groups.setdefault(a, {})[(0, b)] = c
        out = _ZERO
        power = _ONE
        prev = 0
        for a in sorted(groups):
            power = power * replacement ** (a - prev)
            prev = a
            out = out + _wrap(groups[a]) * power
        return out

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for (a, b), c in sorted(self._terms.items(), reverse=True):
            factors = []
            if a:
                factors.append("q" if a == 1 else f"q^{a}")
            if b:
                factors.append("q2" if b == 1 else f"q2^{b}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"PolyQQ({self})"


def _wrap(terms: dict[ExpPair, Coeff]) -> PolyQQ:
    p = PolyQQ.__new__(PolyQQ)
    p._terms = terms
    p._hash = None
    return p


def _coerce(x: PolyQQ | Coeff) -> PolyQQ:
    if isinstance(x, PolyQQ):
        return x
    if isinstance(x, (int, Fraction)):
        return PolyQQ.const(x)
    return NotImplemented


_ZERO = PolyQQ()
_ONE = PolyQQ({(0, 0): 1})
_Q = PolyQQ({(1, 0): 1})
_Q2 = PolyQQ({(0, 1): 1})


def poly_eval(p: PolyQQ, at_q: Coeff = 0, at_q2: Coeff = 0) -> Coeff:
    """Exact value of p at a rational point (q, q2)."""
    return p.eval(at_q, at_q2)
