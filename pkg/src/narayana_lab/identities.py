"""Registry of exactly verifiable identities with parameter schedules.

Every entry evaluates both sides of one identity at given parameters, all in
exact arithmetic; a case passes iff lhs - rhs is identically zero.  Schedules
are deterministic functions of (max_n, seed), so suite reports are
byte-reproducible.  Verification over finite schedules is evidence for the
statements with free real parameters, not a proof.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .lambdaring import (
    Alphabet,
    VALUE_ONE_MINUS_Q,
    VALUE_Q,
    VALUE_Q2,
    e_of,
    h_of,
    hall_littlewood_principal,
    hook_schur_constant,
    sfraction,
    strinc_oracle,
)
from .partitions import (
    Partition,
    composition_multiplicity,
    decompositions,
    enumerate_partitions,
    iter_subsets,
    z_of,
)
from .poly import Coeff, PolyQQ
from .rationals import frac_binomial, gen_binomial
from .sequences import (
    catalan,
    catalan_hsequence,
    jacobi11,
    large_narayana,
    narayana,
    narayana_hsequence,
    narayana_power_sum,
    narayana_schur,
    schroeder,
    type_b_w,
)
from .series import TruncSeries

SUITE_VERSION = "1"
DEFAULT_SEED = 1

DEEP_SCHEDULE_BOUND = 20  # recurrence/convolution identities always reach this

_Q = VALUE_Q
_Q2 = VALUE_Q2
_OMQ = VALUE_ONE_MINUS_Q
_ONE = PolyQQ.one()

Params = dict[str, "int | Fraction"]


class UnknownIdentityError(ValueError):
    """Requested identity id is not registered."""


class ScheduleError(ValueError):
    """Parameters fall outside the identity's schedule."""


@dataclass(frozen=True)
class IdentityCase:
    """Outcome of checking one identity at one parameter choice."""

    id: str
    params: Params
    lhs: PolyQQ
    rhs: PolyQQ

    @property
    def status(self) -> str:
        return "pass" if self.lhs == self.rhs else "fail"

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    schedule: Callable[[int, random.Random], list[Params]]
    evaluate: Callable[[Params], tuple[PolyQQ | Coeff, PolyQQ | Coeff]]
    domain: dict[str, tuple[int | None, int | None]] = field(default_factory=dict)


REGISTRY: dict[str, Identity] = {}


def _register(
    id: str,
    description: str,
    schedule: Callable[[int, random.Random], list[Params]],
    domain: dict[str, tuple[int | None, int | None]] | None = None,
):
    def deco(fn):
        REGISTRY[id] = Identity(id, description, schedule, fn, domain or {})
        return fn

    return deco


def _as_poly(x: PolyQQ | Coeff) -> PolyQQ:
    return x if isinstance(x, PolyQQ) else PolyQQ.const(x)


def check_identity(id: str, params: Params) -> IdentityCase:
    """Evaluate both sides of a registered identity at the given parameters."""
    try:
        ident = REGISTRY[id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity id {id!r}") from None
    for name, (lo, hi) in ident.domain.items():
        if name not in params:
            raise ScheduleError(f"{id}: missing parameter {name!r}")
        value = params[name]
        if lo is not None and value < lo:
            raise ScheduleError(f"{id}: parameter {name}={value} below {lo}")
        if hi is not None and value > hi:
            raise ScheduleError(f"{id}: parameter {name}={value} above {hi}")
    lhs, rhs = ident.evaluate(params)
    return IdentityCase(id, dict(params), _as_poly(lhs), _as_poly(rhs))


def registered_ids() -> list[str]:
    return sorted(REGISTRY)


# --------------------------------------------------------------------------
# schedules
# --------------------------------------------------------------------------


def _range_sched(name: str, lo: int, cap: int | None = None, deep: bool = False):
    def schedule(max_n: int, rng: random.Random) -> list[Params]:
        hi = max(max_n, DEEP_SCHEDULE_BOUND) if deep else max_n
        if cap is not None:
            hi = min(hi, cap)
        return [{name: v} for v in range(lo, hi + 1)]

    return schedule


def _grid_sched(deep: bool = True, lo_n: int = 1, lo_r: int = 1):
    def schedule(max_n: int, rng: random.Random) -> list[Params]:
        hi = max(max_n, DEEP_SCHEDULE_BOUND) if deep else max_n
        return [
            {"n": n, "r": r}
            for r in range(lo_r, hi + 1)
            for n in range(lo_n, hi + 1)
        ]

    return schedule


# Specialization points for the alphabet-valued identities: constants up to
# +-3, a rank-1 q, a rank-1 (1-q), and two-atom mixes of those.
ALPHABET_POOL: tuple[Alphabet, ...] = (
    Alphabet.of_constant(1),
    Alphabet.of_constant(-1),
    Alphabet.of_constant(2),
    Alphabet.of_constant(-2),
    Alphabet.of_constant(3),
    Alphabet.of_constant(-3),
    Alphabet.rank_one(_Q),
    Alphabet.rank_one(_OMQ),
    Alphabet(atoms=((1, _Q), (1, _OMQ))),
    Alphabet(atoms=((1, _Q), (-1, _OMQ))),
    Alphabet(atoms=((2, _Q), (1, _OMQ))),
    Alphabet(atoms=((-1, _Q), (2, _OMQ))),
)


# --------------------------------------------------------------------------
# generating function and closed-form corollaries
# --------------------------------------------------------------------------


@lru_cache(maxsize=8)
def _gf_quadratic_residual(order: int) -> TruncSeries:
    c = TruncSeries([narayana(k) for k in range(order + 1)], order=order)
    c2 = c * c
    zero = PolyQQ.zero()
    # q*u*C^2 + (u*(1-q) - 1)*C + 1
    shifted_sq = TruncSeries([zero] + [x * _Q for x in c2.coefficients()], order=order)
    shifted_c = TruncSeries([zero] + [x * _OMQ for x in c.coefficients()], order=order)
    out = shifted_sq + shifted_c - c
    return TruncSeries([out.coefficient(0) + _ONE] + list(out.coefficients()[1:]), order=order)


def _sched_gf(max_n: int, rng: random.Random) -> list[Params]:
    return [{"order": max_n, "k": k} for k in range(max_n + 1)]


@_register(
    "gf-quadratic",
    "u^k coefficients of q*u*C(u)^2 + (u*(1-q) - 1)*C(u) + 1 all vanish",
    _sched_gf,
    domain={"order": (1, None), "k": (0, None)},
)
def _gf_quadratic(p: Params):
    order, k = p["order"], p["k"]
    if k > order:
        raise ScheduleError("coefficient index beyond truncation order")
    return _gf_quadratic_residual(order).coefficient(k), PolyQQ.zero()


@_register(
    "vanishing-sum",
    "alternating sum of C(r+1,m)*C(2r-m,r) over m = 0..r vanishes",
    _range_sched("r", 1),
    domain={"r": (1, None)},
)
def _vanishing_sum(p: Params):
    r = p["r"]
    total = sum(
        (-1) ** m * gen_binomial(r + 1, m) * gen_binomial(2 * r - m, r)
        for m in range(r + 1)
    )
    return total, 0


def _sched_partial_sum(max_n: int, rng: random.Random) -> list[Params]:
    return [{"r": r, "k": k} for r in range(1, max_n + 1) for k in range(r + 1)]


@_register(
    "partial-sum",
    "tail of the alternating binomial sum telescopes to one signed term",
    _sched_partial_sum,
    domain={"r": (1, None), "k": (0, None)},
)
def _partial_sum(p: Params):
    r, k = p["r"], p["k"]
    lhs = sum(
        (-1) ** (m - 1) * gen_binomial(r + 1, m) * gen_binomial(2 * r - m, r)
        for m in range(k + 1, r + 1)
    )
    rhs = (-1) ** k * gen_binomial(r - 1, k) * gen_binomial(2 * r - k, r)
    return lhs, rhs


def _sched_pairs_m_le_n(max_n: int, rng: random.Random) -> list[Params]:
    return [{"m": m, "n": n} for n in range(max_n + 1) for m in range(n + 1)]


@_register(
    "interesting",
    "signed Catalan-binomial convolution collapses to C(m+n,2m)*Catalan(m)",
    _sched_pairs_m_le_n,
    domain={"m": (0, None), "n": (0, None)},
)
def _interesting(p: Params):
    m, n = p["m"], p["n"]
    lhs = sum(
        (-1) ** (n - i)
        * gen_binomial(n + i, 2 * i)
        * gen_binomial(i + 1, m + 1)
        * catalan(i)
        for i in range(m, n + 1)
    )
    rhs = gen_binomial(m + n, 2 * m) * catalan(m)
    return lhs, rhs


@_register(
    "chu-vandermonde-variant",
    "signed double-binomial sum over i = m..n equals C(n,m)",
    _sched_pairs_m_le_n,
    domain={"m": (0, None), "n": (0, None)},
)
def _chu_vandermonde(p: Params):
    m, n = p["m"], p["n"]
    lhs = sum(
        (-1) ** (n - i) * gen_binomial(n + i, i - m) * gen_binomial(n, i)
        for i in range(m, n + 1)
    )
    return lhs, gen_binomial(n, m)


@_register(
    "catalan-ratio",
    "(r+2)*Catalan(r+1) = 2*(2r+1)*Catalan(r)",
    _range_sched("r", 0),
    domain={"r": (0, None)},
)
def _catalan_ratio(p: Params):
    r = p["r"]
    return (r + 2) * catalan(r + 1), 2 * (2 * r + 1) * catalan(r)


@_register(
    "touchard",
    "Catalan(r) as a power-of-two weighted sum of earlier Catalan numbers",
    _range_sched("r", 1),
    domain={"r": (1, None)},
)
def _touchard(p: Params):
    r = p["r"]
    total = 0
    for m in range(r // 2 + 1):
        b = gen_binomial(r - 1, 2 * m)
        if b:
            total += 2 ** (r - 2 * m - 1) * b * catalan(m)
    return total, catalan(r)


# --------------------------------------------------------------------------
# specialization engine results
# --------------------------------------------------------------------------


@_register(
    "thm1",
    "series route and double-binomial closed form of the principal one-row "
    "Hall-Littlewood value agree",
    _grid_sched(deep=False),
    domain={"r": (1, None), "n": (1, None)},
)
def _thm1(p: Params):
    r, n = p["r"], p["n"]
    point = Alphabet(constant=n, atoms=((-n, _Q),))
    lhs = h_of(r, point).divexact(_OMQ)
    rhs = PolyQQ.zero()
    for m in range(r):
        scalar = gen_binomial(r - 1, m) * gen_binomial(n + r - m - 1, r)
        if scalar:
            rhs = rhs + (-_Q) ** m * scalar
    return lhs, rhs


@_register(
    "thm2",
    "(r+1) * C_r(1-q) equals the principal Hall-Littlewood value at r+1 ones",
    _range_sched("r", 1),
    domain={"r": (1, None)},
)
def _thm2(p: Params):
    r = p["r"]
    lhs = narayana(r).subst_q(_OMQ) * (r + 1)
    return lhs, hall_littlewood_principal(r, r + 1)


def _sched_pieri(max_n: int, rng: random.Random) -> list[Params]:
    top = min(max_n, 5)
    return [
        {"a": a, "b": b, "c": c}
        for a in range(1, top + 1)
        for b in range(1, top + 1)
        for c in (-3, -1, 0, 1, 2, 6)
    ]


@_register(
    "pieri-hook",
    "h_a * e_b at a constant splits into the two adjacent hook Schur values",
    _sched_pieri,
    domain={"a": (1, None), "b": (1, None), "c": (None, None)},
)
def _pieri_hook(p: Params):
    a, b, c = p["a"], p["b"], p["c"]
    point = Alphabet.of_constant(c)
    lhs = h_of(a, point) * e_of(b, point)
    rhs = hook_schur_constant(a, b, c) + hook_schur_constant(a + 1, b - 1, c)
    return lhs, rhs


@_register(
    "new-formula",
    "q*C_r(q) as a centralizer-weighted sum over partitions of r",
    _range_sched("r", 1),
    domain={"r": (1, None)},
)
def _new_formula(p: Params):
    r = p["r"]
    rhs = PolyQQ.zero()
    for mu in enumerate_partitions(r):
        weight = Fraction((r + 1) ** (mu.length - 1), z_of(mu))
        prod = _ONE
        for i, m in mu.multiplicities().items():
            prod = prod * (_ONE - _OMQ**i) ** m
        rhs = rhs + prod * weight
    return large_narayana(r), rhs


@_register(
    "odd-parts-schroeder",
    "small Schroeder number as a sum over partitions with all parts odd",
    _range_sched("r", 1),
    domain={"r": (1, None)},
)
def _odd_parts_schroeder(p: Params):
    r = p["r"]
    total = Fraction(0)
    for mu in enumerate_partitions(r, lambda m: all(x % 2 == 1 for x in m)):
        total += Fraction((2 * r + 2) ** (mu.length - 1), z_of(mu))
    return total, schroeder("small", r)


def _hstar(r: int, a: Alphabet) -> PolyQQ:
    """Coefficient h*_r of the compositional inverse of t * H_t[a]."""
    order = r + 1
    f = TruncSeries(
        [PolyQQ.zero()] + [h_of(k, a) for k in range(order)], order=order
    )
    return f.reverse().coefficient(r + 1)


def _sched_lagrange(max_n: int, rng: random.Random) -> list[Params]:
    cases: list[Params] = []
    for r in range(1, min(max_n, 10) + 1):
        cases.append({"r": r, "form": 0, "a": rng.randrange(len(ALPHABET_POOL))})
        cases.append({"r": r, "form": 1})
    return cases


@_register(
    "lagrange-thm2",
    "series reversion: (r+1)*h*_r[A] = h_r[-(r+1)A], and h*_r at q-1 "
    "reproduces q*C_r at 1-q",
    _sched_lagrange,
    domain={"r": (1, None), "form": (0, 1)},
)
def _lagrange_thm2(p: Params):
    r, form = p["r"], p["form"]
    if form == 0:
        idx = p.get("a")
        if idx is None or not 0 <= idx < len(ALPHABET_POOL):
            raise ScheduleError(f"alphabet index {idx!r} out of schedule")
        a = ALPHABET_POOL[idx]
        return _hstar(r, a) * (r + 1), h_of(r, a.scaled(-(r + 1)))
    point = Alphabet(constant=-1, atoms=((1, _Q),))  # q - 1 with q of rank 1
    return _hstar(r, point), large_narayana(r).subst_q(_OMQ)


def _sched_lemma2(max_n: int, rng: random.Random) -> list[Params]:
    cases: list[Params] = []
    for n in range(1, min(max_n, 10) + 1):
        for z in (1, 2, 3):
            for _ in range(2):
                cases.append({"n": n, "z": z, "a": rng.randrange(len(ALPHABET_POOL))})
    return cases


@_register(
    "lemma2",
    "sum of h_k[-(z+k)A] h_{n-k}[(z+k)A] / (z+k) over k = 0..n vanishes",
    _sched_lemma2,
    domain={"n": (1, None), "z": (1, 3), "a": (0, len(ALPHABET_POOL) - 1)},
)
def _lemma2(p: Params):
    n, z, a = p["n"], p["z"], ALPHABET_POOL[p["a"]]
    total = PolyQQ.zero()
    for k in range(n + 1):
        term = h_of(k, a.scaled(-(z + k))) * h_of(n - k, a.scaled(z + k))
        total = total + term * Fraction(1, z + k)
    return total, PolyQQ.zero()


_ROT_Z_CHOICES = (1, 2, 3, Fraction(1, 2), Fraction(-3, 2), Fraction(5, 2))


def _sched_rot(max_n: int, rng: random.Random) -> list[Params]:
    cases: list[Params] = []
    for w in range(1, min(max_n, 6) + 1):
        for i in range(len(list(enumerate_partitions(w)))):
            cases.append({"w": w, "i": i, "z": rng.choice(_ROT_Z_CHOICES)})
    return cases


@_register(
    "rot",
    "signed split sum over ordered decompositions of a partition vanishes",
    _sched_rot,
    domain={"w": (1, None), "i": (0, None), "z": (None, None)},
)
def _rot(p: Params):
    w, i, z = p["w"], p["i"], Fraction(p["z"])
    rhos = list(enumerate_partitions(w))
    if i >= len(rhos):
        raise ScheduleError(f"partition index {i} out of range for weight {w}")
    rho = rhos[i]
    total = Fraction(0)
    for mu, nu in decompositions(rho):
        total += (
            composition_multiplicity(mu)
            * composition_multiplicity(nu)
            * Fraction(1, z + mu.weight)
            * frac_binomial(-z - mu.weight, mu.length)
            * frac_binomial(z + mu.weight, nu.length)
        )
    return total, 0


def _sched_lemma3(max_n: int, rng: random.Random) -> list[Params]:
    cases: list[Params] = []
    for n in range(2, min(max_n, 8) + 1):
        for _ in range(2):
            params: Params = {"n": n}
            for idx in range(1, n + 1):
                params[f"x{idx}"] = rng.randint(-4, 6)
                params[f"y{idx}"] = rng.randint(-5, 5)
            cases.append(params)
    return cases


def _lemma3_sides(p: Params, full: bool) -> tuple[int, int]:
    n = p["n"]
    xs = [p[f"x{i}"] for i in range(1, n + 1)]
    ys = [p[f"y{i}"] for i in range(1, n + 1)]
    top = n if full else n - 1
    total = 0
    for subset in iter_subsets(xs):
        s = sum(subset)
        prod = 1
        for i in range(top):
            prod *= s + ys[i]
        total += (-1) ** (n - len(subset)) * prod
    if full:
        rhs = 1
        for x in xs:
            rhs *= x
        return total, math.factorial(n) * rhs
    return total, 0


@_register(
    "lemma3-a",
    "alternating subset sum of full products (|A|+y_i) equals n! * prod(x)",
    _sched_lemma3,
    domain={"n": (1, 12)},
)
def _lemma3_a(p: Params):
    return _lemma3_sides(p, full=True)


@_register(
    "lemma3-b",
    "alternating subset sum of the first n-1 products (|A|+y_i) vanishes",
    _sched_lemma3,
    domain={"n": (1, 12)},
)
def _lemma3_b(p: Params):
    return _lemma3_sides(p, full=False)


def _sched_rothe(max_n: int, rng: random.Random) -> list[Params]:
    cases: list[Params] = []
    for n in range(max_n + 1):
        for x in (-3, -2, -1, n + 1, n + 2):
            cases.append({"n": n, "x": x})
    return cases


@_register(
    "rothe",
    "self-dual convolution with weights x/(x-k) at y = -x",
    _sched_rothe,
    domain={"n": (0, None)},
)
def _rothe(p: Params):
    n, x = p["n"], p["x"]
    if any(x == k for k in range(n + 1)):
        raise ScheduleError("x must avoid 0..n so the weights are defined")
    total = Fraction(0)
    for k in range(n + 1):
        total += (
            Fraction(x, x - k)
            * gen_binomial(x - k, k)
            * gen_binomial(-x + k, n - k)
        )
    return total, 1 if n == 0 else 0


# --------------------------------------------------------------------------
# recurrence generalizations
# --------------------------------------------------------------------------


@_register(
    "koshy",
    "Catalan numbers satisfy the alternating binomial recurrence",
    _range_sched("n", 1, deep=True),
    domain={"n": (1, None)},
)
def _koshy(p: Params):
    n = p["n"]
    rhs = sum(
        (-1) ** (k - 1) * gen_binomial(n - k + 1, k) * catalan(n - k)
        for k in range(1, n + 1)
    )
    return catalan(n), rhs


@_register(
    "thm3",
    "Narayana polynomials satisfy the alternating (1-q)-weighted recurrence",
    _range_sched("n", 1, deep=True),
    domain={"n": (1, None)},
)
def _thm3(p: Params):
    n = p["n"]
    omq_powers = [_ONE]
    for _ in range(n - 1):
        omq_powers.append(omq_powers[-1] * _OMQ)
    rhs = omq_powers[n - 1]
    for k in range(1, n):
        inner = PolyQQ.zero()
        for m in range(k):
            scalar = (-1) ** m * gen_binomial(k - 1, m) * gen_binomial(n - m, k)
            if scalar:
                inner = inner + omq_powers[k - m - 1] * scalar
        rhs = rhs + narayana(n - k) * inner * _Q
    return narayana(n), rhs


@_register(
    "thm3-schroeder",
    "small Schroeder numbers satisfy the signed binomial recurrence",
    _range_sched("n", 1, deep=True),
    domain={"n": (1, None)},
)
def _thm3_schroeder(p: Params):
    n = p["n"]
    rhs = (-1) ** (n - 1)
    for k in range(1, n):
        inner = sum(
            gen_binomial(k - 1, m) * gen_binomial(n - m, k) for m in range(k)
        )
        rhs += 2 * (-1) ** (k - 1) * schroeder("small", n - k) * inner
    return schroeder("small", n), rhs


def _sched_lemma4(max_n: int, rng: random.Random) -> list[Params]:
    cases: list[Params] = []
    for n in range(1, min(max_n, 10) + 1):
        for z in (1, 2, 3):
            for _ in range(2):
                cases.append(
                    {
                        "n": n,
                        "z": z,
                        "a": rng.randrange(len(ALPHABET_POOL)),
                        "b": rng.randrange(len(ALPHABET_POOL)),
                    }
                )
    return cases


@_register(
    "lemma4",
    "weighted convolution of h_k[-(z+k)A] with h_{n-k}[(z+k)A+B] telescopes "
    "to h_n[B]",
    _sched_lemma4,
    domain={
        "n": (1, None),
        "z": (1, 3),
        "a": (0, len(ALPHABET_POOL) - 1),
        "b": (0, len(ALPHABET_POOL) - 1),
    },
)
def _lemma4(p: Params):
    n, z = p["n"], p["z"]
    a, b = ALPHABET_POOL[p["a"]], ALPHABET_POOL[p["b"]]
    total = PolyQQ.zero()
    for k in range(n + 1):
        term = h_of(k, a.scaled(-(z + k))) * h_of(n - k, a.scaled(z + k) + b)
        total = total + term * Fraction(z, z + k)
    return total, h_of(n, b)


@_register(
    "jonah",
    "binomial convolution of Catalan numbers equals C(n+1,r)",
    _grid_sched(lo_n=0, lo_r=0),
    domain={"n": (0, None), "r": (0, None)},
)
def _jonah(p: Params):
    n, r = p["n"], p["r"]
    lhs = sum(
        gen_binomial(n - 2 * k, r - k) * catalan(k) for k in range(r + 1)
    )
    return lhs, gen_binomial(n + 1, r)


@_register(
    "jonah-alt",
    "binomial convolution of Catalan numbers from k = 1 equals C(n,r-1)",
    _grid_sched(lo_n=0),
    domain={"n": (0, None), "r": (1, None)},
)
def _jonah_alt(p: Params):
    n, r = p["n"], p["r"]
    lhs = sum(
        gen_binomial(n - 2 * k, r - k) * catalan(k) for k in range(1, r + 1)
    )
    return lhs, gen_binomial(n, r - 1)


def _geometric_qm1_sum(k: int, n_shift: Callable[[int], int]) -> PolyQQ:
    """sum over m of (q-1)^m * C(k-1,m) * C(n_shift(m), k) as a polynomial."""
    acc = PolyQQ.zero()
    power = _ONE
    for m in range(k):
        scalar = gen_binomial(k - 1, m) * gen_binomial(n_shift(m), k)
        if scalar:
            acc = acc + power * scalar
        power = power * (_Q - 1)
    return acc


@_register(
    "thm4",
    "Narayana analogue of the Catalan convolution: weighted double-binomial "
    "sums agree for all n, r",
    _grid_sched(),
    domain={"n": (1, None), "r": (1, None)},
)
def _thm4(p: Params):
    n, r = p["n"], p["r"]
    lhs = narayana(r)
    for k in range(1, r):
        inner = _geometric_qm1_sum(k, lambda m, k=k: n - 2 * r + 2 * k - m)
        lhs = lhs + narayana(r - k) * inner * _Q
    rhs = PolyQQ.zero()
    power = _ONE
    for m in range(r):
        scalar = gen_binomial(r - 1, m) * gen_binomial(n - m, r - 1)
        if scalar:
            rhs = rhs + power * scalar
        power = power * (_Q - 1)
    return lhs, rhs


@_register(
    "thm4-schroeder",
    "small-Schroeder corollary (q = 2) of the weighted convolution",
    _grid_sched(),
    domain={"n": (1, None), "r": (1, None)},
)
def _thm4_schroeder(p: Params):
    n, r = p["n"], p["r"]
    lhs = schroeder("small", r)
    for k in range(1, r):
        inner = sum(
            gen_binomial(k - 1, m) * gen_binomial(n - 2 * r + 2 * k - m, k)
            for m in range(k)
        )
        lhs += 2 * schroeder("small", r - k) * inner
    rhs = sum(
        gen_binomial(r - 1, m) * gen_binomial(n - m, r - 1) for m in range(r)
    )
    return lhs, rhs


@_register(
    "thm5",
    "large-Narayana convolution with (1-q)-weighted binomials equals C(n+1,r)",
    _grid_sched(),
    domain={"n": (1, None), "r": (1, None)},
)
def _thm5(p: Params):
    n, r = p["n"], p["r"]
    lhs = PolyQQ.zero()
    for k in range(r + 1):
        inner = PolyQQ.zero()
        power = _ONE
        for m in range(r - k + 1):
            scalar = gen_binomial(n - 2 * k - m, r - k - m) * gen_binomial(k + m, m)
            if scalar:
                inner = inner + power * scalar
            power = power * _OMQ
        lhs = lhs + large_narayana(k) * inner
    return lhs, PolyQQ.const(gen_binomial(n + 1, r))


@_register(
    "thm5-schroeder",
    "large-Schroeder corollary (q = 2) of the large-Narayana convolution",
    _grid_sched(),
    domain={"n": (1, None), "r": (1, None)},
)
def _thm5_schroeder(p: Params):
    n, r = p["n"], p["r"]
    lhs = 0
    for k in range(r + 1):
        inner = sum(
            (-1) ** m
            * gen_binomial(n - 2 * k - m, r - k - m)
            * gen_binomial(k + m, m)
            for m in range(r - k + 1)
        )
        lhs += schroeder("large", k) * inner
    return lhs, gen_binomial(n + 1, r)


# --------------------------------------------------------------------------
# transition between two deformation variables
# --------------------------------------------------------------------------


def _transition_inner(n: int, k: int, base_i: PolyQQ | int, base_j: PolyQQ | int) -> PolyQQ:
    """sum over i+j <= k of base_i^i base_j^j C(n-k+i,i) C(n+1,j) C(2k-i-j-1,k-i-j)."""
    acc = PolyQQ.zero()
    pow_i = _ONE
    for i in range(k + 1):
        pow_ij = pow_i
        for j in range(k + 1 - i):
            scalar = (
                gen_binomial(n - k + i, i)
                * gen_binomial(n + 1, j)
                * gen_binomial(2 * k - i - j - 1, k - i - j)
            )
            if scalar:
                acc = acc + pow_ij * scalar
            pow_ij = pow_ij * base_j
        pow_i = pow_i * base_i
    return acc


@_register(
    "thm6",
    "bivariate transition: (n+1) q'*C_n(q') expands over q*C_k(q) with "
    "(1-q), (q'-1) weights",
    _range_sched("n", 1),
    domain={"n": (1, None)},
)
def _thm6(p: Params):
    n = p["n"]
    lhs = large_narayana(n).subst_q(_Q2) * (n + 1)
    rhs = PolyQQ.zero()
    for k in range(n + 1):
        rhs = rhs + large_narayana(n - k) * _transition_inner(n, k, _OMQ, _Q2 - 1)
    return lhs, rhs


def _sched_two_displays(max_n: int, rng: random.Random) -> list[Params]:
    return [
        {"n": n, "display": d} for n in range(1, max_n + 1) for d in (1, 2)
    ]


@_register(
    "thm6-spec-q1",
    "transition specialized at 1: Catalan against large-Narayana expansions",
    _sched_two_displays,
    domain={"n": (1, None), "display": (1, 2)},
)
def _thm6_spec_q1(p: Params):
    n, display = p["n"], p["display"]
    if display == 1:
        lhs = large_narayana(n) * (n + 1)
        rhs = PolyQQ.zero()
        for k in range(n + 1):
            inner = PolyQQ.zero()
            power = _ONE
            for j in range(k + 1):
                scalar = gen_binomial(n + 1, j) * gen_binomial(2 * k - j - 1, k - j)
                if scalar:
                    inner = inner + power * scalar
                power = power * (_Q - 1)
            rhs = rhs + inner * catalan(n - k)
        return lhs, rhs
    lhs = PolyQQ.const((n + 1) * catalan(n))
    rhs = PolyQQ.zero()
    for k in range(n + 1):
        inner = PolyQQ.zero()
        power = _ONE
        for i in range(k + 1):
            scalar = gen_binomial(n - k + i, i) * gen_binomial(2 * k - i - 1, k - i)
            if scalar:
                inner = inner + power * scalar
            power = power * _OMQ
        rhs = rhs + large_narayana(n - k) * inner
    return lhs, rhs


@_register(
    "thm6-spec-q2",
    "transition specialized at 2: large Schroeder against large-Narayana",
    _sched_two_displays,
    domain={"n": (1, None), "display": (1, 2)},
)
def _thm6_spec_q2(p: Params):
    n, display = p["n"], p["display"]
    if display == 1:
        lhs = large_narayana(n) * (n + 1)
        rhs = PolyQQ.zero()
        for k in range(n + 1):
            rhs = rhs + _transition_inner(n, k, -1, _Q - 1) * schroeder("large", n - k)
        return lhs, rhs
    lhs = PolyQQ.const((n + 1) * schroeder("large", n))
    rhs = PolyQQ.zero()
    for k in range(n + 1):
        rhs = rhs + large_narayana(n - k) * _transition_inner(n, k, _OMQ, 1)
    return lhs, rhs


# --------------------------------------------------------------------------
# Narayana alphabet
# --------------------------------------------------------------------------


def _sched_thm7(max_n: int, rng: random.Random) -> list[Params]:
    return [
        {"k": k, "shape": s} for k in range(1, min(max_n, 6) + 1) for s in (0, 1)
    ]


@_register(
    "thm7",
    "square and near-square rectangle Schur values are (-q)^(k choose 2)",
    _sched_thm7,
    domain={"k": (1, 6), "shape": (0, 1)},
)
def _thm7(p: Params):
    k, shape = p["k"], p["shape"]
    part = (k,) * k if shape == 0 else (k - 1,) * k
    mu = Partition(tuple(x for x in part if x > 0))
    return narayana_schur(mu), (-_Q) ** (k * (k - 1) // 2)


@lru_cache(maxsize=8)
def _cf_coeffs(depth: int) -> tuple[PolyQQ, ...]:
    return tuple(sfraction(narayana_hsequence(), depth))


def _sched_cf(max_n: int, rng: random.Random) -> list[Params]:
    depth = min(max(max_n, 12), 20)
    return [{"depth": depth, "i": i} for i in range(1, depth + 1)]


@_register(
    "cf-alternating",
    "continued-fraction coefficients of the Narayana series alternate 1, q",
    _sched_cf,
    domain={"depth": (1, 20), "i": (1, 20)},
)
def _cf_alternating(p: Params):
    depth, i = p["depth"], p["i"]
    if i > depth:
        raise ScheduleError("coefficient index beyond requested depth")
    return _cf_coeffs(depth)[i - 1], _ONE if i % 2 == 1 else _Q


@_register(
    "thm8",
    "closed form of the Narayana power sums matches the Newton extraction",
    _range_sched("r", 1),
    domain={"r": (1, None)},
)
def _thm8(p: Params):
    r = p["r"]
    return narayana_power_sum(r), narayana_hsequence().p(r)


@_register(
    "pa1-central",
    "power sums of the Catalan alphabet are central binomials C(2r-1,r-1)",
    _range_sched("r", 1),
    domain={"r": (1, None)},
)
def _pa1_central(p: Params):
    r = p["r"]
    return catalan_hsequence().p(r), gen_binomial(2 * r - 1, r - 1)


@_register(
    "newton-catalan",
    "Newton recurrence at the Catalan alphabet collapses to C(2n,n-1)",
    _sched_two_displays,
    domain={"n": (1, None), "display": (1, 2)},
)
def _newton_catalan(p: Params):
    n, display = p["n"], p["display"]
    if display == 1:
        lhs = sum(
            catalan(r) * gen_binomial(2 * (n - r) - 1, n - r - 1)
            for r in range(n)
        )
        return lhs, n * catalan(n)
    return Fraction(n, n + 1) * gen_binomial(2 * n, n), gen_binomial(2 * n, n - 1)


# --------------------------------------------------------------------------
# classical orthogonal-polynomial bridges and type B
# --------------------------------------------------------------------------


def _sched_bridge(max_n: int, rng: random.Random) -> list[Params]:
    return [
        {"n": n, "x": x} for n in range(1, max_n + 1) for x in range(2, n + 3)
    ]


@_register(
    "jacobi-bridge",
    "C_n at a point x is ((x-1)^(n-1)/n) times the Jacobi (1,1) value at "
    "(x+1)/(x-1); n+1 points pin the degree-(n-1) polynomials",
    _sched_bridge,
    domain={"n": (1, None), "x": (2, None)},
)
def _jacobi_bridge(p: Params):
    n, x = p["n"], p["x"]
    lhs = narayana(n).eval(at_q=x)
    rhs = Fraction((x - 1) ** (n - 1), n) * jacobi11(n - 1).eval(
        at_q=Fraction(x + 1, x - 1)
    )
    return lhs, rhs


@_register(
    "hl-jacobi",
    "n * P_n(1^{n+1};q) equals (n+1)(-q)^(n-1) times the Jacobi (1,1) value "
    "at 1 - 2/q, as Laurent polynomials",
    _range_sched("n", 1),
    domain={"n": (1, None)},
)
def _hl_jacobi(p: Params):
    n = p["n"]
    lhs = hall_littlewood_principal(n, n + 1) * n
    arg = _ONE - PolyQQ.monomial(2, -1)  # 1 - 2/q
    rhs = jacobi11(n - 1).subst_q(arg) * (-_Q) ** (n - 1) * (n + 1)
    return lhs, rhs


@_register(
    "jacobi-binomial",
    "the two binomial expansions behind the Jacobi bridge agree termwise",
    _range_sched("n", 1),
    domain={"n": (1, None)},
)
def _jacobi_binomial(p: Params):
    n = p["n"]
    lhs = PolyQQ.zero()
    for m in range(n):
        scalar = gen_binomial(n - 1, m) * gen_binomial(2 * n - m, n)
        if scalar:
            lhs = lhs + (-_Q) ** m * scalar
    rhs = PolyQQ.zero()
    power = _ONE
    for m in range(n):
        scalar = gen_binomial(n + 1, m + 1) * gen_binomial(n - 1, m)
        if scalar:
            rhs = rhs + power * scalar
        power = power * _OMQ
    return lhs, rhs


@_register(
    "typeB-central",
    "type-B polynomial as a central-binomial expansion in z and z+1",
    _range_sched("r", 0),
    domain={"r": (0, None)},
)
def _type_b_central(p: Params):
    r = p["r"]
    rhs = PolyQQ.zero()
    for m in range(r // 2 + 1):
        b = gen_binomial(r, 2 * m)
        if b:
            rhs = rhs + _Q**m * (_Q + 1) ** (r - 2 * m) * (b * gen_binomial(2 * m, m))
    if r == 0:
        rhs = _ONE
    return type_b_w(r), rhs


@_register(
    "strinc",
    "ascent-graded word count equals the principal Hall-Littlewood value",
    _range_sched("n", 1, cap=8),
    domain={"n": (1, 8)},
)
def _strinc(p: Params):
    n = p["n"]
    return strinc_oracle(n), hall_littlewood_principal(n, n + 1)


_SCHUR_TABLE_6: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = (
    ((6,), (1, 15, 50, 50, 15, 1)),
    ((5, 1), (0, -5, -30, -40, -14, -1)),
    ((4, 2), (0, -3, -8, -3)),
    ((4, 1, 1), (0, 4, 24, 34, 13, 1)),
    ((3, 3), (0, -1, -1, -1)),
    ((3, 2, 1), (0, 2, 7, 4)),
    ((3, 1, 1, 1), (0, -3, -20, -30, -12, -1)),
    ((2, 2, 2), (0, 0, 0, -1)),
    ((2, 2, 1, 1), (0, -1, -5, -3)),
    ((2, 1, 1, 1, 1), (0, 2, 16, 26, 11, 1)),
    ((1, 1, 1, 1, 1, 1), (0, -1, -10, -20, -10, -1)),
)


def _sched_schur_table(max_n: int, rng: random.Random) -> list[Params]:
    return [{"i": i} for i in range(len(_SCHUR_TABLE_6))]


@_register(
    "schur-table-6",
    "all eleven weight-6 Schur values of the Narayana alphabet match the "
    "frozen signed table",
    _sched_schur_table,
    domain={"i": (0, len(_SCHUR_TABLE_6) - 1)},
)
def _schur_table_6(p: Params):
    parts, coeffs = _SCHUR_TABLE_6[p["i"]]
    return narayana_schur(Partition(parts)), PolyQQ.from_q_coefficients(coeffs)


# --------------------------------------------------------------------------
# suite runner
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteReport:
    suite_version: str
    seed: int
    max_n: int
    results: tuple[IdentityCase, ...]

    @property
    def counts(self) -> dict[str, int]:
        passed = sum(1 for c in self.results if c.passed)
        return {"pass": passed, "fail": len(self.results) - passed}

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.results)

    def to_document(self) -> dict:
        results = []
        for case in self.results:
            entry: dict = {
                "id": case.id,
                "params": {k: _param_json(v) for k, v in sorted(case.params.items())},
                "status": case.status,
            }
            if not case.passed:
                entry["lhs"] = str(case.lhs)
                entry["rhs"] = str(case.rhs)
            results.append(entry)
        return {
            "suite_version": self.suite_version,
            "seed": self.seed,
            "max_n": self.max_n,
            "results": results,
            "counts": self.counts,
        }


def _param_json(v: int | Fraction):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return v


def _param_sort_key(params: Params):
    return tuple((k, Fraction(v)) for k, v in sorted(params.items()))


def run_suite(
    ids: Sequence[str] | None = None,
    max_n: int = 12,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
) -> SuiteReport:
    """Check every scheduled case of the requested identities (all by default)."""
    if max_n < 3:
        raise ValueError("run_suite needs max_n >= 3")
    if ids is None:
        selected = registered_ids()
    else:
        selected = list(ids)
        for id in selected:
            if id not in REGISTRY:
                raise UnknownIdentityError(f"unknown identity id {id!r}")
    work: list[tuple[str, Params]] = []
    for id in sorted(set(selected)):
        rng = random.Random(f"{seed}:{id}")
        for params in REGISTRY[id].schedule(max_n, rng):
            work.append((id, params))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda w: check_identity(*w), work))
    else:
        results = [check_identity(id, params) for id, params in work]
    results.sort(key=lambda c: (c.id, _param_sort_key(c.params)))
    return SuiteReport(SUITE_VERSION, seed, max_n, tuple(results))
