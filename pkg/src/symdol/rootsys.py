"""Exact models of the classical root systems A_k, B_k, C_k, D_k and G_2.

Weights are plain integer tuples in the fundamental-weight basis
(omega_1, ..., omega_k); that basis is the lingua franca of the whole
package.  Internally each family carries its standard orthogonal-coordinate
realization with exact rational entries, and the bilinear form exposed to
callers is the *dual Killing form*

    K = (form normalized so long roots have squared length 2) / (2 h^v),

with h^v the dual Coxeter number.  K is positive definite; the metric that
motivates it is negative the Killing form, so squared lengths in that
convention are -K(x, x).  The normalization is pinned by K(alpha, alpha)
= 1/2 for A_1, which makes the rank-one Casimir come out as
-((k+1)^2 - 1)/8 on the (k+1)-dimensional irreducible.

Everything here is immutable and pure; no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Weight = tuple[int, ...]
Vector = tuple[Fraction, ...]

_FAMILIES = "ABCDG"

_RANK_RULES = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "G": (2, 2),
}


@dataclass(frozen=True)
class RootSystem:
    """Cartan data for one classical family at a fixed rank.

    ``simple_roots`` and ``positive_roots`` are stored in the orthogonal
    coordinate model; ``positive_roots_fw`` gives the same roots in
    fundamental-weight coordinates (integer tuples), ordered by height and
    starting with the simple roots in index order.
    """

    family: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    simple_roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    dual_coxeter: int
    killing_scale: Fraction           # 1 / (2 * dual_coxeter)
    euclid_scale: Fraction            # rescales the dot product so long roots have norm^2 = 2
    fundamental_weights: tuple[Vector, ...]   # orthogonal coordinates
    positive_roots_fw: tuple[Weight, ...]
    inverse_cartan: tuple[tuple[Fraction, ...], ...]
    weight_gram: tuple[tuple[Fraction, ...], ...]  # K(omega_i, omega_j)

    def name(self) -> str:
        return f"{self.family}{self.rank}"


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _unit(ambient: int, i: int) -> Vector:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(ambient))


def _vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _vec_scale(c, u):
    return tuple(Fraction(c) * a for a in u)


def _orthogonal_data(family: str, rank: int):
    """Simple roots, positive roots (orthogonal model), dual Coxeter number,
    and the dot-product rescale putting long roots at squared length 2."""
    e = _unit
    if family == "A":
        amb = rank + 1
        simples = [_vec_sub(e(amb, i), e(amb, i + 1)) for i in range(rank)]
        positives = [_vec_sub(e(amb, i), e(amb, j))
                     for i in range(amb) for j in range(i + 1, amb)]
        return simples, positives, rank + 1, Fraction(1)
    if family == "B":
        amb = rank
        simples = [_vec_sub(e(amb, i), e(amb, i + 1)) for i in range(rank - 1)]
        simples.append(e(amb, rank - 1))
        positives = []
        for i in range(rank):
            for j in range(i + 1, rank):
                positives.append(_vec_sub(e(amb, i), e(amb, j)))
                positives.append(_vec_add(e(amb, i), e(amb, j)))
        positives.extend(e(amb, i) for i in range(rank))
        return simples, positives, 2 * rank - 1, Fraction(1)
    if family == "C":
        amb = rank
        simples = [_vec_sub(e(amb, i), e(amb, i + 1)) for i in range(rank - 1)]
        simples.append(_vec_scale(2, e(amb, rank - 1)))
        positives = []
        for i in range(rank):
            for j in range(i + 1, rank):
                positives.append(_vec_sub(e(amb, i), e(amb, j)))
                positives.append(_vec_add(e(amb, i), e(amb, j)))
        positives.extend(_vec_scale(2, e(amb, i)) for i in range(rank))
        # long roots 2e_i have plain squared length 4
        return simples, positives, rank + 1, Fraction(1, 2)
    if family == "D":
        amb = rank
        simples = [_vec_sub(e(amb, i), e(amb, i + 1)) for i in range(rank - 1)]
        simples.append(_vec_add(e(amb, rank - 2), e(amb, rank - 1)))
        positives = []
        for i in range(rank):
            for j in range(i + 1, rank):
                positives.append(_vec_sub(e(amb, i), e(amb, j)))
                positives.append(_vec_add(e(amb, i), e(amb, j)))
        return simples, positives, 2 * rank - 2, Fraction(1)
    if family == "G":
        amb = 3
        a1 = _vec_sub(e(amb, 0), e(amb, 1))                       # short
        a2 = _vec_add(_vec_scale(-2, e(amb, 0)), _vec_add(e(amb, 1), e(amb, 2)))  # long
        simples = [a1, a2]
        positives = [
            a1,
            a2,
            _vec_add(a1, a2),
            _vec_add(_vec_scale(2, a1), a2),
            _vec_add(_vec_scale(3, a1), a2),
            _vec_add(_vec_scale(3, a1), _vec_scale(2, a2)),
        ]
        # long roots have plain squared length 6
        return simples, positives, 4, Fraction(1, 3)
    raise AssertionError(family)


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col]
        aug[col] = [x / inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the root system for a valid (family, rank) pair.

    Admissible pairs: A_k (k >= 1), B_k (k >= 2), C_k (k >= 2),
    D_k (k >= 3), G_2.
    """
    if family not in _RANK_RULES:
        raise ValueError(
            f"unknown family {family!r}; supported families are "
            "A (rank >= 1), B (rank >= 2), C (rank >= 2), D (rank >= 3), G (rank = 2)"
        )
    lo, hi = _RANK_RULES[family]
    if not isinstance(rank, int) or rank < lo or (hi is not None and rank > hi):
        bound = f"rank = {lo}" if hi == lo else f"rank >= {lo}"
        raise ValueError(f"family {family} requires {bound}; got rank {rank}")

    simples, positives, dual_cox, euclid_scale = _orthogonal_data(family, rank)

    def form(u, v):
        return euclid_scale * _dot(u, v)

    cartan = tuple(
        tuple(int(2 * form(si, sj) / form(sj, sj)) for sj in simples) for si in simples
    )
    inv_cartan = _invert([[Fraction(c) for c in row] for row in cartan])

    # fundamental weights: omega_i = sum_j (A^{-1})_ij alpha_j
    fundamental = tuple(
        tuple(sum((inv_cartan[i][j] * simples[j][m] for j in range(rank)), Fraction(0))
              for m in range(len(simples[0])))
        for i in range(rank)
    )

    def to_fw(vec) -> Weight:
        coords = []
        for j, sj in enumerate(simples):
            c = 2 * form(vec, sj) / form(sj, sj)
            if c.denominator != 1:
                raise ValueError("vector is not in the weight lattice")
            coords.append(int(c))
        return tuple(coords)

    # order positive roots by height (sum of simple-root coefficients),
    # with the simple roots first in index order
    def sort_key(vec):
        fw = to_fw(vec)
        coeffs = tuple(sum((Fraction(fw[i]) * inv_cartan[i][j] for i in range(rank)), Fraction(0))
                       for j in range(rank))
        height = sum(coeffs)
        return (height, tuple(-c for c in coeffs))

    positives = sorted(positives, key=sort_key)
    positives_fw = tuple(to_fw(v) for v in positives)

    killing_scale = Fraction(1, 2 * dual_cox)
    gram = tuple(
        tuple(killing_scale * form(fundamental[i], fundamental[j]) for j in range(rank))
        for i in range(rank)
    )

    return RootSystem(
        family=family,
        rank=rank,
        cartan_matrix=cartan,
        simple_roots=tuple(tuple(v) for v in simples),
        positive_roots=tuple(tuple(v) for v in positives),
        dual_coxeter=dual_cox,
        killing_scale=killing_scale,
        euclid_scale=euclid_scale,
        fundamental_weights=fundamental,
        positive_roots_fw=positives_fw,
        inverse_cartan=tuple(tuple(row) for row in inv_cartan),
        weight_gram=gram,
    )


# ---------------------------------------------------------------------------
# weight operations
# ---------------------------------------------------------------------------

def as_weight(rs: RootSystem, coords: Sequence[int]) -> Weight:
    w = tuple(int(c) for c in coords)
    if len(w) != rs.rank:
        raise ValueError(f"weight has {len(w)} coordinates; {rs.name()} has rank {rs.rank}")
    return w


def rho(rs: RootSystem) -> Weight:
    """The Weyl vector: all fundamental-weight coordinates equal to 1."""
    return (1,) * rs.rank


def killing_dual_form(rs: RootSystem, x: Sequence, y: Sequence) -> Fraction:
    """K(x, y) on weights, for x, y in fundamental-weight coordinates.

    Coordinates may be integers or exact rationals (rational coordinates
    occur for midpoints and root-string bookkeeping).
    """
    if len(x) != rs.rank or len(y) != rs.rank:
        raise ValueError(f"expected weight vectors of length {rs.rank}")
    total = Fraction(0)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row = rs.weight_gram[i]
        total += Fraction(xi) * sum((Fraction(yj) * row[j] for j, yj in enumerate(y)), Fraction(0))
    return total


def simple_reflection(rs: RootSystem, i: int, x: Sequence[int]) -> Weight:
    """Reflection in the i-th simple root (1-indexed), in fundamental coords."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple-root index {i} out of range 1..{rs.rank}")
    w = as_weight(rs, x)
    row = rs.cartan_matrix[i - 1]
    return tuple(w[j] - w[i - 1] * row[j] for j in range(rs.rank))


def is_dominant(rs: RootSystem, x: Sequence[int]) -> bool:
    return all(c >= 0 for c in as_weight(rs, x))


def dominant_conjugate(rs: RootSystem, x: Sequence[int]) -> Weight:
    """The unique dominant weight in the Weyl orbit of x."""
    w = as_weight(rs, x)
    while True:
        i = next((j for j, c in enumerate(w) if c < 0), None)
        if i is None:
            return w
        w = simple_reflection(rs, i + 1, w)


def weyl_orbit(rs: RootSystem, x: Sequence[int]) -> set[Weight]:
    """Full Weyl orbit, generated lazily by simple reflections."""
    start = as_weight(rs, x)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, rs.rank + 1):
                r = simple_reflection(rs, i, w)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen


def to_orthogonal(rs: RootSystem, x: Sequence[int]) -> Vector:
    """Fundamental-weight coordinates -> orthogonal coordinate model."""
    w = as_weight(rs, x)
    amb = len(rs.fundamental_weights[0])
    return tuple(
        sum((Fraction(w[i]) * rs.fundamental_weights[i][m] for i in range(rs.rank)), Fraction(0))
        for m in range(amb)
    )


def from_orthogonal(rs: RootSystem, vec: Sequence[Fraction]) -> Weight:
    """Orthogonal coordinates -> fundamental-weight coordinates (must be integral)."""
    coords = []
    for sj in rs.simple_roots:
        c = 2 * _dot(vec, sj) / _dot(sj, sj)
        if Fraction(c).denominator != 1:
            raise ValueError("vector is not an integral weight")
        coords.append(int(c))
    return tuple(coords)


def root_lattice_coefficients(rs: RootSystem, x: Sequence) -> tuple[Fraction, ...]:
    """Coefficients c with x = sum_j c_j alpha_j (x in fundamental coords)."""
    if len(x) != rs.rank:
        raise ValueError(f"expected weight vectors of length {rs.rank}")
    return tuple(
        sum((Fraction(x[i]) * rs.inverse_cartan[i][j] for i in range(rs.rank)), Fraction(0))
        for j in range(rs.rank)
    )


def is_nonneg_root_combination(rs: RootSystem, x: Sequence[int]) -> bool:
    """True iff x is a nonnegative *integer* combination of simple roots."""
    return all(c.denominator == 1 and c >= 0 for c in root_lattice_coefficients(rs, x))
