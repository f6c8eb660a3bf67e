"""Zeta values, tiling moments, Dirichlet series, asymptotic diagnostics.

Moments are exact rationals whenever the order is a positive integer
and the computation fits the exact-mode budget; order 1 is always exact
because the level sums telescope.  Everything floating is produced by
``math.fsum`` over canonically sorted terms (or a fixed subtree
decomposition), so results are independent of worker count and
bit-identical across runs.

Every truncated series comes back as a SeriesValue carrying a rigorous
tail bound: the true value lies in [value, value + tail_bound].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import fsum
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .core import CapacityError, DomainError, InvalidInputError
from .census import stable_degree_table
from .subdivision import ALGO_A, ALGO_B, ALGO_CLASSICAL
from .tiling import LevelCounts, face_count, level_q_counts, split_q_states
from ._jobs import run_tasks

Beta = Union[int, float, Fraction]

EXACT_FACE_CAP = 100_000
MOMENT_DEPTH_CAP = {ALGO_A: 10, ALGO_B: 26, ALGO_CLASSICAL: 30}

MAX_DEGREE = 8
# Primitive points with a fixed denominator q number at most (4/3) q^2.
PRIMITIVE_DENSITY = Fraction(4, 3)


@dataclass(frozen=True)
class SeriesValue:
    """A truncated series value with a rigorous truncation bracket."""

    value: float
    tail_bound: float
    terms_used: int

    @property
    def upper(self) -> float:
        return self.value + self.tail_bound


@dataclass(frozen=True)
class MomentValue:
    """Moment of a tiling: sum of cell measures raised to `order`."""

    algo: str
    depth: int
    order: Fraction
    value: Union[Fraction, float]
    exact: bool

    def as_float(self) -> float:
        return float(self.value)


def _as_beta(beta: Beta) -> Fraction:
    try:
        b = Fraction(beta)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"bad order {beta!r}") from exc
    return b


# --- Riemann zeta -----------------------------------------------------------

_zeta_cache: Dict[Tuple[float, float], SeriesValue] = {}


ZETA_TERM_CAP = 50_000_000


def zeta(s: float, tol: float = 1e-12) -> SeriesValue:
    """Partial sum of the zeta series with an integral tail bracket.

    Truncates at K terms where the bracket width
    (K^(1-s) - (K+1)^(1-s)) / (s-1) <= K^(-s) is below `tol`; the true
    value lies in [value, value + tail_bound].  K grows like
    tol^(-1/s), so near s = 1 a loose tolerance must be supplied.
    """
    s = float(s)
    if s <= 1:
        raise DomainError(f"zeta series diverges for s = {s}")
    if tol <= 0:
        raise InvalidInputError("tolerance must be positive")
    key = (s, tol)
    cached = _zeta_cache.get(key)
    if cached is not None:
        return cached
    terms = max(2, math.ceil(tol ** (-1.0 / s)))
    while True:
        if terms > ZETA_TERM_CAP:
            raise CapacityError(
                f"zeta({s}) to tolerance {tol} needs ~{terms} terms; loosen the tolerance"
            )
        lo_tail = (terms + 1) ** (1.0 - s) / (s - 1.0)
        hi_tail = terms ** (1.0 - s) / (s - 1.0)
        if hi_tail - lo_tail <= tol:
            break
        terms *= 2
    partial = fsum(k ** -s for k in range(1, terms + 1))
    result = SeriesValue(partial + lo_tail, hi_tail - lo_tail, terms)
    _zeta_cache[key] = result
    return result


# --- tiling moments ---------------------------------------------------------


def _level_moment_exact(level: LevelCounts, beta: int) -> Fraction:
    total = Fraction(0)
    for (p, q, r), c in sorted(level.items()):
        total += Fraction(c, (2 * p * q * r) ** beta)
    return total


def _level_moment_float(level: LevelCounts, beta: float) -> float:
    if beta == 2.0:
        return fsum(c / float(x * x) for x, c in _area_denoms(level))
    if beta == 1.0:
        return fsum(c / float(x) for x, c in _area_denoms(level))
    return fsum(c * float(x) ** -beta for x, c in _area_denoms(level))


def _area_denoms(level: LevelCounts) -> Iterable[Tuple[int, int]]:
    for (p, q, r), c in sorted(level.items()):
        yield 2 * p * q * r, c


def _moment_task(args: Tuple[str, Tuple[int, int, int], int, int, float]) -> List[float]:
    algo, triple, count, levels, beta = args
    return [
        _level_moment_float(level, beta)
        for level in level_q_counts(algo, levels, start={triple: count})
    ]


def _split_depth(algo: str, n: int) -> int:
    return min(n, 3 if algo == ALGO_A else 6)


def moment_sweep(algo: str, n: int, beta: Beta, jobs: int = 1) -> List[float]:
    """Floating moments for every depth 0..n in one pass.

    The work is split over a canonical task list at a fixed depth, so
    per-depth sums are byte-identical regardless of `jobs`.
    """
    _check_moment_args(algo, n, beta)
    bf = float(_as_beta(beta))
    split = _split_depth(algo, n)
    prefix = []
    for d, level in enumerate(level_q_counts(algo, split)):
        if d < split:
            prefix.append(_level_moment_float(level, bf))
    tasks = [(algo, t, c, n - split, bf) for t, c in split_q_states(algo, split)]
    partials = run_tasks(_moment_task, tasks, jobs)
    merged = [fsum(p[d] for p in partials) for d in range(n - split + 1)]
    return prefix + merged


def moment(algo: str, n: int, beta: Beta, exact: Optional[bool] = None, jobs: int = 1) -> MomentValue:
    """Moment of order beta over the depth-n tiling.

    Exact-rational mode runs when beta is a positive integer and either
    the tiling fits the exact budget or beta is 1 (the order-1 sums
    telescope, so they stay cheap at any supported depth).  Otherwise
    the value is a compensated floating sum in canonical order.
    """
    if algo == ALGO_CLASSICAL:
        return classical_moment(n, beta, exact=exact)
    _check_moment_args(algo, n, beta)
    b = _as_beta(beta)
    use_exact = _resolve_exact(algo, n, b, exact)
    if use_exact:
        levels = level_q_counts(algo, n)
        for level in levels:
            pass
        value = _level_moment_exact(level, int(b))
        return MomentValue(algo, n, b, value, True)
    value = moment_sweep(algo, n, b, jobs=jobs)[n]
    return MomentValue(algo, n, b, value, False)


def _check_moment_args(algo: str, n: int, beta: Beta) -> None:
    cap = MOMENT_DEPTH_CAP.get(algo)
    if cap is None:
        raise InvalidInputError(f"unknown algorithm {algo!r}")
    if n < 0:
        raise InvalidInputError("depth must be nonnegative")
    if n > cap:
        raise CapacityError(f"moment depth {n} exceeds capacity {cap} for {algo!r}")
    if _as_beta(beta) < 1:
        raise DomainError("moment order must be >= 1")


def _resolve_exact(algo: str, n: int, b: Fraction, exact: Optional[bool]) -> bool:
    integral = b.denominator == 1
    faces = face_count(algo, n) if algo != ALGO_CLASSICAL else 2**n
    affordable = integral and (faces <= EXACT_FACE_CAP or b == 1)
    if exact is None:
        return affordable
    if exact and not integral:
        raise DomainError("exact mode needs an integer order")
    if exact and not affordable:
        raise CapacityError(
            f"exact mode for order {b} is capped at {EXACT_FACE_CAP} cells; "
            f"depth {n} has {faces}"
        )
    return exact


# --- classical (1-d) moments ------------------------------------------------


def _classical_exact_unit(n: int) -> Fraction:
    # Subtree sums collapse at every node, keeping intermediates tiny.
    def rec(q: int, r: int, depth: int) -> Tuple[int, int]:
        if depth == 0:
            return 1, q * r
        s = q + r
        n1, d1 = rec(q, s, depth - 1)
        n2, d2 = rec(s, r, depth - 1)
        num = n1 * d2 + n2 * d1
        den = d1 * d2
        g = math.gcd(num, den)
        return num // g, den // g

    num, den = rec(1, 1, n)
    return Fraction(num, den)


def _classical_exact_moment(n: int, beta: int) -> Fraction:
    total = Fraction(0)
    stack = [(1, 1, 0)]
    while stack:
        q, r, d = stack.pop()
        if d == n:
            total += Fraction(1, (q * r) ** beta)
            continue
        s = q + r
        stack.append((q, s, d + 1))
        stack.append((s, r, d + 1))
    return total


def classical_moment_sweep(n: int, beta: Beta) -> List[float]:
    """Floating classical moments for depths 0..n in one descent."""
    _check_moment_args(ALGO_CLASSICAL, n, beta)
    bf = float(_as_beta(beta))
    sums = [0.0] * (n + 1)
    comps = [0.0] * (n + 1)
    stack = [(1, 1, 0)]
    while stack:
        q, r, d = stack.pop()
        x = q * r
        term = float(x) ** -bf if bf != 2.0 else 1.0 / float(x * x)
        # Kahan step; the fixed traversal order makes the sum reproducible.
        y = term - comps[d]
        t = sums[d] + y
        comps[d] = (t - sums[d]) - y
        sums[d] = t
        if d < n:
            s = q + r
            stack.append((q, s, d + 1))
            stack.append((s, r, d + 1))
    return sums


def classical_moment(n: int, beta: Beta, exact: Optional[bool] = None) -> MomentValue:
    """Moment of order beta of the classical depth-n interval partition."""
    _check_moment_args(ALGO_CLASSICAL, n, beta)
    b = _as_beta(beta)
    use_exact = _resolve_exact(ALGO_CLASSICAL, n, b, exact)
    if use_exact:
        value = _classical_exact_unit(n) if b == 1 else _classical_exact_moment(n, int(b))
        return MomentValue(ALGO_CLASSICAL, n, b, value, True)
    return MomentValue(ALGO_CLASSICAL, n, b, classical_moment_sweep(n, b)[n], False)


def exact_unit_sum(algo: str, n: int) -> Fraction:
    """Exact rational sum of all cell measures at depth n (should be 1)."""
    if algo == ALGO_CLASSICAL:
        return _classical_exact_unit(n)
    _check_moment_args(algo, n, 1)
    for level in level_q_counts(algo, n):
        pass
    return _level_moment_exact(level, 1)


def extreme_areas(algo: str, n: int) -> Tuple[Fraction, Fraction]:
    """(smallest, largest) cell area of the depth-n tiling."""
    _check_moment_args(algo, n, 1)
    for level in level_q_counts(algo, n):
        pass
    prods = [p * q * r for (p, q, r) in level]
    return Fraction(1, 2 * max(prods)), Fraction(1, 2 * min(prods))


# --- Dirichlet series -------------------------------------------------------


def dirichlet_L(algo: str, beta: Beta, qmax: int) -> SeriesValue:
    """Head of the degree-weighted Dirichlet series up to denominator qmax.

    The head is computed exactly for integer beta and converted once.
    The tail over q > qmax is bounded by (degree cap) x (primitive point
    density) x the integral of x^(2-beta), which needs beta > 3.
    """
    b = _as_beta(beta)
    if b <= 3:
        raise DomainError("the 2-d Dirichlet series needs beta > 3")
    if qmax < 1:
        raise InvalidInputError("qmax must be >= 1")
    table = stable_degree_table(algo, qmax)
    if b.denominator == 1:
        head = float(sum(Fraction(d, v.x ** int(b)) for v, d in sorted(table.items())))
    else:
        bf = float(b)
        head = fsum(d * float(v.x) ** -bf for v, d in sorted(table.items()))
    tail = float(MAX_DEGREE * PRIMITIVE_DENSITY) * qmax ** (3.0 - float(b)) / (float(b) - 3.0)
    return SeriesValue(head, tail, len(table))


def dirichlet_L_auto(
    algo: str, beta: Beta, rel_tail: float = 0.01, qmax_cap: int = 4096
) -> Tuple[SeriesValue, int]:
    """Grow qmax until the tail bound drops below `rel_tail` of the head."""
    qmax = 8
    while True:
        sv = dirichlet_L(algo, beta, qmax)
        if sv.tail_bound < rel_tail * sv.value:
            return sv, qmax
        if qmax >= qmax_cap:
            raise CapacityError(
                f"tail below {rel_tail} of the head needs qmax beyond {qmax_cap}"
            )
        qmax *= 2


def classical_L(beta: Beta, tol: float = 1e-12) -> SeriesValue:
    """Closed form 2 zeta(beta-1) / zeta(beta) of the classical series."""
    bf = float(_as_beta(beta))
    if bf <= 2:
        raise DomainError("the classical Dirichlet series needs beta > 2")
    num = zeta(bf - 1.0, tol)
    den = zeta(bf, tol)
    lo = 2.0 * num.value / den.upper
    hi = 2.0 * num.upper / den.value
    return SeriesValue(lo, hi - lo, num.terms_used + den.terms_used)


def classical_L_direct(beta: Beta, qmax: int) -> SeriesValue:
    """Totient-sum head 2 sum phi(q)/q^beta; the independent oracle for
    the closed form."""
    bf = float(_as_beta(beta))
    if bf <= 2:
        raise DomainError("the classical Dirichlet series needs beta > 2")
    if qmax < 1:
        raise InvalidInputError("qmax must be >= 1")
    phi = list(range(qmax + 1))
    for p in range(2, qmax + 1):
        if phi[p] == p:  # p prime
            for k in range(p, qmax + 1, p):
                phi[k] -= phi[k] // p
    head = 2.0 * fsum(phi[q] * float(q) ** -bf for q in range(1, qmax + 1))
    tail = 2.0 * qmax ** (2.0 - bf) / (bf - 2.0)
    return SeriesValue(head, tail, qmax)


# --- asymptotic diagnostics -------------------------------------------------


@dataclass(frozen=True)
class AsymptoticRow:
    algo: str
    n: int
    beta: float
    sigma: float
    main_term: float
    ratio: float
    L_value: float
    L_tail_bound: float


def _series_for_main_term(algo: str, beta: Fraction, rel_tail: float = 0.01) -> SeriesValue:
    if algo == ALGO_CLASSICAL:
        return classical_L(2 * beta)
    sv, _ = dirichlet_L_auto(algo, 3 * beta, rel_tail)
    return sv


def main_term(algo: str, n: int, beta: Beta, series_value: float) -> float:
    """Predicted moment: the series coefficient over the depth power."""
    bf = float(_as_beta(beta))
    if algo == ALGO_A:
        return series_value / float(2 * n * n) ** bf
    if algo == ALGO_B:
        return 2.0**bf * series_value / float(n) ** (2.0 * bf)
    if algo == ALGO_CLASSICAL:
        return series_value / float(n) ** bf
    raise InvalidInputError(f"unknown algorithm {algo!r}")


def asymptotic_ratio(algo: str, n: int, beta: Beta, jobs: int = 1) -> AsymptoticRow:
    """Measured moment over its predicted main term."""
    rows = asymptotic_sweep(algo, beta, n, n, jobs=jobs)
    return rows[0]


def asymptotic_sweep(algo: str, beta: Beta, n_lo: int, n_hi: int, jobs: int = 1) -> List[AsymptoticRow]:
    """AsymptoticRow for every n in [n_lo, n_hi]; one moment sweep, one
    series evaluation."""
    b = _as_beta(beta)
    if b <= 1:
        raise DomainError("asymptotic diagnostics need beta > 1")
    if n_lo < 2 or n_hi < n_lo:
        raise InvalidInputError("need 2 <= n_lo <= n_hi")
    series = _series_for_main_term(algo, b)
    if algo == ALGO_CLASSICAL:
        sigmas = classical_moment_sweep(n_hi, b)
    else:
        sigmas = moment_sweep(algo, n_hi, b, jobs=jobs)
    rows = []
    for n in range(n_lo, n_hi + 1):
        mt = main_term(algo, n, b, series.value)
        rows.append(
            AsymptoticRow(
                algo, n, float(b), sigmas[n], mt, sigmas[n] / mt, series.value, series.tail_bound
            )
        )
    return rows


def summability_bound(algo: str, beta: Beta) -> float:
    """Upper bound for the sum of all moments of order beta > 1."""
    bf = float(_as_beta(beta))
    if bf <= 1:
        raise DomainError("summability bounds need beta > 1")
    za = zeta(2.0 * bf)
    zb = zeta(3.0 * bf - 2.0)
    if algo == ALGO_A:
        return (16.0 / 3.0) * za.value * zb.value
    if algo == ALGO_B:
        return (32.0 / 3.0) * 2.0**bf * za.value * zb.value
    raise InvalidInputError(f"no summability bound for algorithm {algo!r}")


def cumulative_moment_check(algo: str, beta: Beta, n_max: int, jobs: int = 1) -> Tuple[float, float]:
    """(partial sum of moments for n <= n_max, bound it must stay under)."""
    sigmas = moment_sweep(algo, n_max, beta, jobs=jobs)
    return fsum(sigmas), summability_bound(algo, beta)
