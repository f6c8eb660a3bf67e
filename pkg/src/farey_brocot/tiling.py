"""Streaming enumeration of tilings, point location, vertex harvesting.

Two complementary engines live here.  The geometric engine walks actual
lattice bases depth-first and is used wherever vertices matter (graph
censuses, containment, rendering).  The multiplicity engine evolves
counts of denominator triples level by level; triples collapse heavily
(millions of triangles share a few hundred thousand triples), which is
what makes desk-scale moment sweeps affordable in exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .core import (
    Basis,
    InvalidInputError,
    InvariantViolationError,
    LatticeVector,
    Point,
    Triangle,
    Vec,
    det3,
)
from .subdivision import (
    ALGO_A,
    ALGO_B,
    INITIAL_VECTORS_A,
    INITIAL_VECTORS_B,
    child_vectors_a,
    child_vectors_b,
    extend_code_a,
)

RawBasis = Tuple[Vec, Vec, Vec]


def _roots(algo: str) -> Tuple[RawBasis, ...]:
    if algo == ALGO_A:
        return INITIAL_VECTORS_A
    if algo == ALGO_B:
        return INITIAL_VECTORS_B
    raise InvalidInputError(f"unknown 2-d algorithm {algo!r}")


def _children(algo: str) -> Callable[[Vec, Vec, Vec], Tuple[RawBasis, ...]]:
    return child_vectors_a if algo == ALGO_A else child_vectors_b


def branching(algo: str) -> int:
    return 6 if algo == ALGO_A else 2


def face_count(algo: str, n: int) -> int:
    """Number of triangles in the depth-n tiling."""
    return 2 * branching(algo) ** n


def iter_bases_at(algo: str, n: int) -> Iterator[RawBasis]:
    """Depth-first stream of the raw bases at exactly depth n."""
    if n < 0:
        raise InvalidInputError("depth must be nonnegative")
    kids = _children(algo)
    stack: List[Tuple[RawBasis, int]] = [(r, 0) for r in reversed(_roots(algo))]
    while stack:
        basis, d = stack.pop()
        if d == n:
            yield basis
            continue
        for ch in reversed(kids(*basis)):
            stack.append((ch, d + 1))


def iter_triangles(algo: str, n: int) -> Iterator[Triangle]:
    """Depth-first stream of the depth-n tiling as Triangle values.

    Algorithm A triangles carry their run-length code, algorithm B
    triangles their operation bit string.
    """
    if n < 0:
        raise InvalidInputError("depth must be nonnegative")
    kids = _children(algo)
    is_a = algo == ALGO_A
    # stack entries: (basis, depth, code, last_corner flag)
    stack: List[Tuple[RawBasis, int, Tuple, bool]] = [
        (r, 0, (), False) for r in reversed(_roots(algo))
    ]
    while stack:
        basis, d, code, lc = stack.pop()
        if d == n:
            yield Triangle(tuple(LatticeVector(*v) for v in basis), d, algo, code)
            continue
        children = kids(*basis)
        for rule in range(len(children) - 1, -1, -1):
            if is_a:
                ncode, nlc = extend_code_a(code, rule, lc)
            else:
                # child index 0 is operation "1", index 1 is operation "0"
                ncode, nlc = code + (1 - rule,), False
            stack.append((children[rule], d + 1, ncode, nlc))


def iter_intervals(n: int) -> Iterator[Tuple[Fraction, Fraction]]:
    """The 2**n intervals of the classical depth-n partition, left to
    right, as (endpoint, endpoint) pairs."""
    if n < 0:
        raise InvalidInputError("depth must be nonnegative")
    stack: List[Tuple[int, int, int, int, int]] = [(0, 1, 1, 1, 0)]
    while stack:
        p, q, r, s, d = stack.pop()
        if d == n:
            yield Fraction(p, q), Fraction(r, s)
            continue
        mp, mq = p + r, q + s
        stack.append((mp, mq, r, s, d + 1))
        stack.append((p, q, mp, mq, d + 1))


@dataclass(frozen=True)
class TilingSummary:
    algo: str
    depth: int
    count: int
    area_total: Fraction


def enumerate_tiling(algo: str, n: int, visitor: Optional[Callable[[Triangle], None]] = None) -> TilingSummary:
    """Visit every triangle of the depth-n tiling exactly once.

    Returns the visit count and the exact rational sum of visited areas
    (1 for every depth, which the verify suite asserts).
    """
    count = 0
    area = Fraction(0)
    for tri in iter_triangles(algo, n):
        count += 1
        area += tri.area()
        if visitor is not None:
            visitor(tri)
    return TilingSummary(algo, n, count, area)


# --- point location --------------------------------------------------------


@dataclass(frozen=True)
class DescentStep:
    basis: Basis
    child_index: int
    coefficients: Tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class DescentChain:
    """Nested triangles of one continued-fraction descent toward theta."""

    algo: str
    theta: Point
    steps: Tuple[DescentStep, ...]

    def bases(self) -> List[Basis]:
        return [s.basis for s in self.steps]

    def triangles(self) -> List[Triangle]:
        return [s.basis.triangle() for s in self.steps]

    def vertex_depth(self) -> Optional[int]:
        """First depth at which theta itself is a vertex, if any."""
        for s in self.steps:
            for v in s.basis.vectors:
                if v.point() == self.theta:
                    return s.basis.depth
        return None


def _coefficients(basis: RawBasis, target: Vec) -> Tuple[int, int, int]:
    # Integer coordinates of `target` in the basis; valid because det = +-1.
    g1, g2, g3 = basis
    d = det3(g1, g2, g3)
    c1 = det3(target, g2, g3) * d
    c2 = det3(g1, target, g3) * d
    c3 = det3(g1, g2, target) * d
    return c1, c2, c3


def locate(algo: str, theta: Point, n: int) -> DescentChain:
    """Descend n steps through the nested triangles containing theta.

    Containment is the exact nonnegative-coefficients test; on shared
    boundaries the lowest-index child wins, so chains are deterministic.
    """
    if n < 0:
        raise InvalidInputError("depth must be nonnegative")
    t1, t2 = Fraction(theta[0]), Fraction(theta[1])
    if not (0 <= t1 <= 1 and 0 <= t2 <= 1):
        raise InvalidInputError(f"point ({t1}, {t2}) outside the unit square")
    den = math.lcm(t1.denominator, t2.denominator)
    target: Vec = (den, int(t1 * den), int(t2 * den))

    kids = _children(algo)
    steps: List[DescentStep] = []
    current: Optional[RawBasis] = None
    for idx, root in enumerate(_roots(algo)):
        coeffs = _coefficients(root, target)
        if min(coeffs) >= 0:
            current = root
            steps.append(_make_step(algo, root, 0, idx, coeffs, den))
            break
    if current is None:  # unreachable for points in the unit square
        raise InvalidInputError(f"({t1}, {t2}) not covered by the initial bases")

    for depth in range(1, n + 1):
        for idx, child in enumerate(kids(*current)):
            coeffs = _coefficients(child, target)
            if min(coeffs) >= 0:
                current = child
                steps.append(_make_step(algo, child, depth, idx, coeffs, den))
                break
        else:  # regular partitions always cover theta
            raise InvariantViolationError(f"no child of {current} contains ({t1}, {t2})")
    return DescentChain(algo, (t1, t2), tuple(steps))


def _make_step(algo: str, basis: RawBasis, depth: int, idx: int, coeffs: Tuple[int, int, int], den: int) -> DescentStep:
    b = Basis(tuple(LatticeVector(*v) for v in basis), depth, algo)
    return DescentStep(b, idx, tuple(Fraction(c, den) for c in coeffs))


# --- vertex harvesting -----------------------------------------------------


def vertices_up_to(algo: str, qmax: int) -> Dict[LatticeVector, int]:
    """Every primitive vector with denominator <= qmax, mapped to the
    smallest depth at which it occurs as a basis vector.

    A subtree is abandoned once the smallest denominator any descendant
    could add exceeds qmax (the sum of the two smallest current
    denominators for algorithm A, q(g2) + q(g3) for algorithm B); that
    bound never decreases down the tree, so the prune is exhaustive.
    """
    if qmax < 1:
        raise InvalidInputError("qmax must be >= 1")
    is_a = algo == ALGO_A
    kids = _children(algo)
    first: Dict[Vec, int] = {}
    stack: List[Tuple[RawBasis, int]] = [(r, 0) for r in _roots(algo)]
    while stack:
        basis, d = stack.pop()
        for v in basis:
            if v[0] <= qmax:
                known = first.get(v)
                if known is None or d < known:
                    first[v] = d
        if is_a:
            qs = sorted(v[0] for v in basis)
            bound = qs[0] + qs[1]
        else:
            bound = basis[1][0] + basis[2][0]
        if bound > qmax:
            continue
        nd = d + 1
        for ch in kids(*basis):
            stack.append((ch, nd))
    return {LatticeVector(*v): d for v, d in sorted(first.items())}


# --- multiplicity engine over denominator triples --------------------------

QTriple = Tuple[int, int, int]
LevelCounts = Dict[QTriple, int]


def _step_counts_a(level: LevelCounts) -> LevelCounts:
    # For p <= q <= r each child triple below is already sorted ascending,
    # so sortedness is preserved by induction from the root (1, 1, 1).
    nxt: LevelCounts = {}
    get = nxt.get
    for (p, q, r), c in level.items():
        pq = p + q
        pr = p + r
        qr = q + r
        s = pq + r
        for t in (
            (p, pq, pr),
            (q, pq, qr),
            (r, pr, qr),
            (pq, pr, s),
            (pq, qr, s),
            (pr, qr, s),
        ):
            nxt[t] = get(t, 0) + c
    return nxt


def _step_counts_b(level: LevelCounts) -> LevelCounts:
    nxt: LevelCounts = {}
    get = nxt.get
    for (qa, qb, qc), c in level.items():
        s = qb + qc
        k1 = (s, qa, qb)
        k0 = (s, qa, qc)
        nxt[k1] = get(k1, 0) + c
        nxt[k0] = get(k0, 0) + c
    return nxt


def level_q_counts(algo: str, n: int, start: Optional[LevelCounts] = None) -> Iterator[LevelCounts]:
    """Yield, for depth 0..n, the multiset of denominator triples.

    Algorithm A triples are kept sorted ascending (the rule ignores
    vertex order); algorithm B triples keep their positional order.
    """
    step = _step_counts_a if algo == ALGO_A else _step_counts_b
    level: LevelCounts = {(1, 1, 1): 2} if start is None else dict(start)
    yield level
    for _ in range(n):
        level = step(level)
        yield level


CodedState = Tuple[int, int, int, int, bool]


def level_q_counts_coded_a(n: int) -> Iterator[Dict[CodedState, int]]:
    """Algorithm A triples extended with (code length, streak-open flag).

    The triple keeps rule order (kept vertex first), which is what the
    code transition needs; sorting would lose it.
    """
    level: Dict[CodedState, int] = {(1, 1, 1, 0, False): 2}
    yield level
    for _ in range(n):
        nxt: Dict[CodedState, int] = {}
        get = nxt.get
        for (p, q, r, rlen, lc), c in level.items():
            pq = p + q
            pr = p + r
            qr = q + r
            s = pq + r
            r_ext = rlen if lc else rlen + 1
            r_new = rlen + 1
            for key in (
                (p, pq, pr, r_ext, True),
                (q, pq, qr, r_new, True),
                (r, pr, qr, r_new, True),
                (pq, pr, s, r_new, False),
                (pq, qr, s, r_new, False),
                (pr, qr, s, r_new, False),
            ):
                nxt[key] = get(key, 0) + c
        level = nxt
        yield level


def split_q_states(algo: str, split_depth: int) -> List[Tuple[QTriple, int]]:
    """Canonical (triple, multiplicity) task list at a fixed split depth.

    The decomposition depends only on (algo, split_depth), never on the
    worker count, so parallel reductions merge bit-identically.
    """
    level: LevelCounts = {}
    for level in level_q_counts(algo, split_depth):
        pass
    return sorted(level.items())
