"""Evaluation of symmetric functions at formal specialization points.

A specialization point (:class:`Alphabet`) is an integer constant plus
integer-weighted rank-1 atoms whose values are exact polynomials.  Complete
functions come from the product form of their generating series; elementary
functions from its inverse at -u; power sums directly from the atom values;
Schur functions from a fraction-free Jacobi-Trudi determinant.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Sequence

from .partitions import Partition, composition_multiplicity
from .poly import Coeff, PolyQQ
from .rationals import gen_binomial
from .series import TruncSeries

VALUE_Q = PolyQQ.var_q()
VALUE_Q2 = PolyQQ.var_q2()
VALUE_ONE_MINUS_Q = PolyQQ.one() - VALUE_Q
VALUE_ONE_MINUS_Q2 = PolyQQ.one() - VALUE_Q2

STRINC_CAP = 12


def _poly_sort_key(p: PolyQQ):
    return tuple(sorted((exps, Fraction(c)) for exps, c in p.items()))


class Alphabet:
    """Formal specialization point: integer constant + weighted rank-1 atoms.

    Negative weights encode alphabet subtraction.  Atoms with equal values are
    merged, so equality and hashing are canonical.
    """

    __slots__ = ("constant", "atoms")

    def __init__(
        self,
        constant: int = 0,
        atoms: Sequence[tuple[int, PolyQQ]] = (),
    ):
        merged: dict[PolyQQ, int] = {}
        for coeff, value in atoms:
            if coeff:
                merged[value] = merged.get(value, 0) + coeff
        self.constant = constant
        self.atoms = tuple(
            sorted(
                ((c, v) for v, c in merged.items() if c),
                key=lambda cv: _poly_sort_key(cv[1]),
            )
        )

    @classmethod
    def of_constant(cls, c: int) -> Alphabet:
        return cls(constant=c)

    @classmethod
    def rank_one(cls, value: PolyQQ, coeff: int = 1) -> Alphabet:
        return cls(atoms=((coeff, value),))

    @property
    def is_constant(self) -> bool:
        return not self.atoms

    def __add__(self, other: Alphabet) -> Alphabet:
        return Alphabet(self.constant + other.constant, self.atoms + other.atoms)

    def scaled(self, m: int) -> Alphabet:
        return Alphabet(m * self.constant, tuple((m * c, v) for c, v in self.atoms))

    def __neg__(self) -> Alphabet:
        return self.scaled(-1)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Alphabet)
            and self.constant == other.constant
            and self.atoms == other.atoms
        )

    def __hash__(self) -> int:
        return hash((self.constant, self.atoms))

    def __repr__(self) -> str:
        parts = [str(self.constant)] if self.constant else []
        parts += [f"{c}*({v})" for c, v in self.atoms]
        return "Alphabet[" + (" + ".join(parts) if parts else "0") + "]"


@lru_cache(maxsize=None)
def h_series(a: Alphabet, order: int) -> TruncSeries:
    """Generating series of the complete functions of a, truncated at the order."""
    # (1-u)^{-c} expands with binomial coefficients of arbitrary integer top.
    out = TruncSeries(
        [PolyQQ.const(gen_binomial(a.constant + k - 1, k)) for k in range(order + 1)],
        order=order,
    )
    for coeff, value in a.atoms:
        factor = TruncSeries([PolyQQ.one(), -value], order=order)
        out = out * factor.int_pow(-coeff)
    return out


def h_of(n: int, a: Alphabet) -> PolyQQ:
    """Complete function h_n at the point a."""
    if n < 0:
        raise ValueError("h_of needs n >= 0")
    return h_series(a, n).coefficient(n)


def e_of(n: int, a: Alphabet) -> PolyQQ:
    """Elementary function e_n at the point a, via inverting the h-series at -u."""
    if n < 0:
        raise ValueError("e_of needs n >= 0")
    hs = h_series(a, n)
    flipped = TruncSeries(
        [c if k % 2 == 0 else -c for k, c in enumerate(hs.coefficients())],
        order=n,
    )
    return flipped.inverse().coefficient(n)


def p_of(n: int, a: Alphabet) -> PolyQQ:
    """Power sum p_n at the point a: the constant plus weighted n-th powers."""
    if n < 1:
        raise ValueError("p_of needs n >= 1")
    out = PolyQQ.const(a.constant)
    for coeff, value in a.atoms:
        out = out + value**n * coeff
    return out


def m_of_constant(mu: Partition, c: int) -> int:
    """Monomial function m_mu at an integer constant."""
    return gen_binomial(c, mu.length) * composition_multiplicity(mu)


def jacobi_trudi(h_at: Callable[[int], PolyQQ], mu: Partition) -> PolyQQ:
    """Schur value as the fraction-free determinant of the h-matrix of mu."""
    l = mu.length
    if l == 0:
        return PolyQQ.one()
    zero = PolyQQ.zero()
    matrix = [
        [h_at(mu[i] - i + j) if mu[i] - i + j >= 0 else zero for j in range(l)]
        for i in range(l)
    ]
    return det_fraction_free(matrix)


def det_fraction_free(matrix: list[list[PolyQQ]]) -> PolyQQ:
    """Bareiss elimination; every division is exact in the polynomial ring."""
    n = len(matrix)
    if n == 0:
        return PolyQQ.one()
    m = [row[:] for row in matrix]
    sign = 1
    prev = PolyQQ.one()
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return PolyQQ.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]).divexact(prev)
            m[i][k] = PolyQQ.zero()
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def s_of(mu: Partition, a: Alphabet, length_cap: int = 12) -> PolyQQ:
    """Schur function s_mu at the point a (Jacobi-Trudi over h_of)."""
    if mu.length > length_cap:
        raise ValueError(f"partition length {mu.length} exceeds cap {length_cap}")
    return jacobi_trudi(lambda k: h_of(k, a), mu)


def hook_schur_constant(arm: int, leg: int, c: int) -> int:
    """Closed form for the Schur value of the hook (arm, 1^leg) at a constant."""
    if arm < 1 or leg < 0:
        raise ValueError("hook needs arm >= 1 and leg >= 0")
    return gen_binomial(arm + leg - 1, leg) * gen_binomial(arm + c - 1, arm + leg)


def hall_littlewood_principal(r: int, n: int) -> PolyQQ:
    """Principal specialization of the one-row Hall-Littlewood function at n ones.

    Computed two independent ways that must agree: exact division of
    h_r[(1-q)n] by (1-q), and the alternating double-binomial closed form.
    """
    if r < 1 or n < 1:
        raise ValueError("hall_littlewood_principal needs r >= 1 and n >= 1")
    point = Alphabet(constant=n, atoms=((-n, VALUE_Q),))
    via_engine = h_of(r, point).divexact(VALUE_ONE_MINUS_Q)
    via_closed = PolyQQ.zero()
    minus_q = -VALUE_Q
    for m in range(r):
        scalar = gen_binomial(r - 1, m) * gen_binomial(n + r - m - 1, r)
        if scalar:
            via_closed = via_closed + minus_q**m * scalar
    if via_engine != via_closed:
        raise ArithmeticError(
            f"hall_littlewood_principal routes disagree at r={r}, n={n}"
        )
    return via_closed


def strinc_oracle(n: int) -> PolyQQ:
    """Exhaustive sum of (1-q)^(number of ascents) over weakly increasing words.

    Words have length n and entries in 1..n+1; the result must match
    hall_littlewood_principal(n, n+1).
    """
    if n < 1:
        raise ValueError("strinc_oracle needs n >= 1")
    if n > STRINC_CAP:
        raise ValueError(f"strinc_oracle capped at n <= {STRINC_CAP}")
    counts: dict[int, int] = {}
    for word in combinations_with_replacement(range(1, n + 2), n):
        rises = sum(1 for i in range(n - 1) if word[i] < word[i + 1])
        counts[rises] = counts.get(rises, 0) + 1
    out = PolyQQ.zero()
    for rises, count in counts.items():
        out = out + VALUE_ONE_MINUS_Q**rises * count
    return out


class HSequence:
    """Formal alphabet given by the values of its complete functions.

    Power sums follow from the Newton recurrence n*h_n = sum h_r p_{n-r};
    Schur values from Jacobi-Trudi.
    """

    def __init__(self, h_fn: Callable[[int], PolyQQ | Coeff], name: str = ""):
        self._h_fn = h_fn
        self.name = name
        self._h_cache: dict[int, PolyQQ] = {}
        self._p_cache: dict[int, PolyQQ] = {}

    def h(self, n: int) -> PolyQQ:
        if n < 0:
            raise ValueError("h index must be nonnegative")
        if n not in self._h_cache:
            value = self._h_fn(n)
            if not isinstance(value, PolyQQ):
                value = PolyQQ.const(value)
            if n == 0 and value != PolyQQ.one():
                raise ValueError("an h-sequence must start with h_0 = 1")
            self._h_cache[n] = value
        return self._h_cache[n]

    def p(self, n: int) -> PolyQQ:
        if n < 1:
            raise ValueError("p index must be positive")
        if n not in self._p_cache:
            acc = self.h(n) * n
            for r in range(1, n):
                acc = acc - self.h(r) * self.p(n - r)
            self._p_cache[n] = acc
        return self._p_cache[n]

    def schur(self, mu: Partition) -> PolyQQ:
        return jacobi_trudi(self.h, mu)

    def series(self, order: int) -> TruncSeries:
        return TruncSeries([self.h(k) for k in range(order + 1)], order=order)


def sfraction(hseq: HSequence, depth: int) -> list[PolyQQ]:
    """Coefficients c_1..c_depth of the continued fraction 1/(1 - c_1 u/(1 - ...)).

    Obtained by iterated peeling c_i = [u^1](1 - 1/f) and
    f_next = (1 - 1/f)/(c_i u); each extracted coefficient must be a monomial
    (a unit of the Laurent ring up to a rational factor).
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    f = hseq.series(depth + 1)
    coeffs: list[PolyQQ] = []
    for _ in range(depth):
        g = TruncSeries.one(f.order) - f.inverse()
        c = g.coefficient(1)
        if c.is_zero:
            raise ArithmeticError(
                f"zero coefficient after {len(coeffs)} continued-fraction levels"
            )
        if not c.is_monomial():
            raise ArithmeticError(f"non-monomial continued-fraction coefficient {c}")
        coeffs.append(c)
        inv = c ** -1
        f = TruncSeries(
            [g.coefficient(k + 1) * inv for k in range(f.order)],
            order=f.order - 1,
        )
    return coeffs
