"""Narayana polynomials and their relatives, by several independent routes.

The reference route is the defining recurrence
C_0 = 1,  C_n = (1-q) C_{n-1} + q * sum C_i C_{n-1-i};
the closed forms and the generating-function machinery are checked against it
by the identity suite.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .lambdaring import HSequence
from .partitions import Partition
from .poly import PolyQQ
from .rationals import exact_div, gen_binomial

CLOSED_FORM_VARIANTS = ("binomial-N", "eqde", "eqtr", "eqqu", "eqci", "eqsi")

NARAYANA_SCHUR_LENGTH_CAP = 14
NARAYANA_SCHUR_INDEX_CAP = 20

_Q = PolyQQ.var_q()
_ONE = PolyQQ.one()

_coeff_rows: list[list[int]] = [[1]]
_coeff_lock = threading.Lock()


def _convolve(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _narayana_coeffs(n: int) -> list[int]:
    """Coefficient row of C_n(q), ascending in q, from the defining recurrence."""
    if n >= len(_coeff_rows):
        with _coeff_lock:
            while len(_coeff_rows) <= n:
                m = len(_coeff_rows)
                prev = _coeff_rows[m - 1]
                # (1-q)*C_{m-1}
                row = prev + [0]
                for i, x in enumerate(prev):
                    row[i + 1] -= x
                # + q * sum_i C_i C_{m-1-i}
                for i in range(m):
                    for j, y in enumerate(_convolve(_coeff_rows[i], _coeff_rows[m - 1 - i])):
                        row[j + 1] += y
                while len(row) > 1 and row[-1] == 0:
                    row.pop()
                _coeff_rows.append(row)
    return _coeff_rows[n]


def narayana(n: int) -> PolyQQ:
    """The n-th Narayana polynomial C_n(q)."""
    if n < 0:
        raise ValueError("narayana index must be nonnegative")
    return PolyQQ.from_q_coefficients(_narayana_coeffs(n))


def large_narayana(n: int) -> PolyQQ:
    """q * C_n(q) for n >= 1, and 1 at n = 0."""
    if n == 0:
        return _ONE
    return _Q * narayana(n)


def catalan(n: int) -> int:
    """Catalan number, as the q = 1 value of the Narayana polynomial."""
    return narayana(n).eval(at_q=1)


def schroeder(kind: str, n: int) -> int:
    """Schroeder numbers as q = 2 values: 'small' of C_n, 'large' of q*C_n."""
    if kind == "small":
        return narayana(n).eval(at_q=2)
    if kind == "large":
        return large_narayana(n).eval(at_q=2)
    raise ValueError(f"unknown Schroeder kind {kind!r}")


def _integral(p: PolyQQ) -> PolyQQ:
    if not p.is_integral:
        raise ArithmeticError(f"expected an integral polynomial, got {p}")
    return p


def narayana_closed(n: int, variant: str) -> PolyQQ:
    """One of the closed-form routes to C_n(q).

    The 'eqde' variant evaluates to q*C_n(q); every other variant to C_n(q).
    Rational scalars appear along the way; integrality of the final value is
    asserted.
    """
    if n < 1:
        raise ValueError("closed forms need n >= 1")
    if variant == "binomial-N":
        coeffs = [
            exact_div(gen_binomial(n, k - 1) * gen_binomial(n, k), n)
            for k in range(1, n + 1)
        ]
        return PolyQQ.from_q_coefficients(coeffs)
    if variant == "eqde":
        acc = PolyQQ.zero()
        qm1_pow = _ONE
        for m in range(n + 1):
            acc = acc + qm1_pow * (gen_binomial(n + 1, m) * gen_binomial(2 * n - m, n))
            qm1_pow = qm1_pow * (_Q - 1)
        return _integral(acc * Fraction(1, n + 1))
    if variant == "eqtr":
        acc = PolyQQ.zero()
        geom = PolyQQ.zero()  # 1 + (1-q) + ... + (1-q)^{m-1}
        omq_pow = _ONE
        for m in range(n + 1):
            sign = -1 if m % 2 == 0 else 1
            acc = acc + geom * (sign * gen_binomial(n + 1, m) * gen_binomial(2 * n - m, n))
            geom = geom + omq_pow
            omq_pow = omq_pow * (_ONE - _Q)
        return _integral(acc * Fraction(1, n + 1))
    if variant == "eqqu":
        acc = PolyQQ.zero()
        qm1_pow = _ONE
        for m in range(n):
            acc = acc + qm1_pow * (gen_binomial(n - 1, m) * gen_binomial(2 * n - m, n))
            qm1_pow = qm1_pow * (_Q - 1)
        return _integral(acc * Fraction(1, n + 1))
    if variant == "eqci":
        acc = PolyQQ.zero()
        for m in range(n + 1):
            b = gen_binomial(n + m, 2 * m)
            if b:
                acc = acc + _Q**m * (_ONE - _Q) ** (n - m) * (b * catalan(m))
        return acc
    if variant == "eqsi":
        acc = PolyQQ.zero()
        for m in range(n // 2 + 1):
            b = gen_binomial(n - 1, 2 * m)
            if b:
                acc = acc + _Q**m * (_Q + 1) ** (n - 2 * m - 1) * (b * catalan(m))
        return acc
    raise ValueError(f"unknown closed-form variant {variant!r}")


def master_formula(eta: int, zeta: int, r: int) -> PolyQQ:
    """Triple-binomial expansion of C_r(q) for a sign pair (eta, zeta).

    The sum lives in the Laurent ring with rational scalars; transient q^-1
    terms and halves cancel, and integrality of the result is asserted.
    """
    if eta not in (1, -1) or zeta not in (1, -1):
        raise ValueError("eta and zeta must be +1 or -1")
    if r < 1:
        raise ValueError("master_formula needs r >= 1")
    base_mixed = PolyQQ.const(1 + eta) + _Q * (1 + zeta)
    base_sign = PolyQQ.const(-eta) - _Q * zeta
    unit = 1 + eta * zeta
    acc = PolyQQ.zero()
    for i in range(r + 1):
        for j in range(r + 1 - i):
            b1 = gen_binomial(i + 1, r - i - j)
            if not b1:
                continue
            scalar = (
                Fraction(b1 * gen_binomial(2 * i + j, j) * gen_binomial(2 * i, i), 1)
                * Fraction(1, 2 ** (i + 1))
                * Fraction(1, i + 1)
                * unit ** (r - i - j)
            )
            if not scalar:
                continue
            term = PolyQQ.monomial(scalar, r - i - j - 1)
            term = term * base_mixed ** (2 * i + j - r + 1)
            if j:
                term = term * base_sign**j
            acc = acc + term
    if not acc.is_integral:
        raise ArithmeticError(
            f"master formula produced a non-integral value for eta={eta}, zeta={zeta}, r={r}"
        )
    return acc


_hseq_lock = threading.Lock()
_narayana_hseq: HSequence | None = None
_catalan_hseq: HSequence | None = None


def narayana_hsequence() -> HSequence:
    """The formal alphabet whose complete functions are the Narayana polynomials."""
    global _narayana_hseq
    if _narayana_hseq is None:
        with _hseq_lock:
            if _narayana_hseq is None:
                _narayana_hseq = HSequence(narayana, name="narayana")
    return _narayana_hseq


def catalan_hsequence() -> HSequence:
    """The formal alphabet whose complete functions are the Catalan numbers."""
    global _catalan_hseq
    if _catalan_hseq is None:
        with _hseq_lock:
            if _catalan_hseq is None:
                _catalan_hseq = HSequence(
                    lambda n: PolyQQ.const(catalan(n)), name="catalan"
                )
    return _catalan_hseq


def narayana_power_sum(r: int) -> PolyQQ:
    """Power sum of the Narayana alphabet: sum of C(r-1,k) C(r,k) q^k."""
    if r < 1:
        raise ValueError("power sums need r >= 1")
    return PolyQQ.from_q_coefficients(
        [gen_binomial(r - 1, k) * gen_binomial(r, k) for k in range(r)]
    )


def narayana_schur(mu: Partition) -> PolyQQ:
    """Schur function of the Narayana alphabet (Jacobi-Trudi determinant).

    Capped by determinant size and largest h-index so the exact elimination
    stays at desk scale.
    """
    if mu.length > NARAYANA_SCHUR_LENGTH_CAP:
        raise ValueError(
            f"narayana_schur capped at determinant size {NARAYANA_SCHUR_LENGTH_CAP}"
        )
    if mu.length and mu[0] + mu.length - 1 > NARAYANA_SCHUR_INDEX_CAP:
        raise ValueError(
            f"narayana_schur capped at h-index {NARAYANA_SCHUR_INDEX_CAP}"
        )
    return narayana_hsequence().schur(mu)


def jacobi11(n: int) -> PolyQQ:
    """Degree-n Jacobi polynomial with both parameters 1, in q as the argument."""
    if n < 0:
        raise ValueError("jacobi11 index must be nonnegative")
    half = Fraction(1, 2)
    lo = (_Q - 1) * half
    hi = (_Q + 1) * half
    acc = PolyQQ.zero()
    for m in range(n + 1):
        scalar = gen_binomial(n + 1, m) * gen_binomial(n + 1, n - m)
        if scalar:
            acc = acc + lo ** (n - m) * hi**m * scalar
    return acc


def type_b_w(r: int) -> PolyQQ:
    """Type-B analogue: sum of C(r,k)^2 q^k, whose value at 1 is C(2r,r)."""
    if r < 0:
        raise ValueError("type_b_w index must be nonnegative")
    return PolyQQ.from_q_coefficients(
        [gen_binomial(r, k) ** 2 for k in range(r + 1)]
    )
