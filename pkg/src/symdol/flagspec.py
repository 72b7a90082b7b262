"""Spinor weights, ground-state kernels, and P-spectra on flag manifolds G/T.

The ground-state ("vacuum") bundle twisted to L_mu has holomorphic-section
space V_mu by Borel-Weil, and the associated second-order elliptic operator
acts on it with spectrum

    lambda_gamma = K(gamma+rho, gamma+rho) - K(mu+rho, mu+rho),

ranging over dominant gamma whose irreducible V_gamma contains mu as a
weight; the lambda eigenspace is the direct sum of (dim V_gamma(mu)) copies
of V_gamma over the coinciding gamma.  Under the positive-definite dual
Killing form every eigenvalue is >= 0 with equality exactly at gamma = mu.

Spectra are complete below an inclusive cutoff: candidate gamma are
enumerated by norm-bounded breadth-first search, so no row below the cutoff
can be missed.  Candidate evaluation is order-independent and the final
table is re-sorted, so results are deterministic.

Comparing the mu = 0 spectra of B_n and C_n distinguishes the corresponding
flag manifolds for n >= 3: the first positive eigenvalue of B_n carries a
(2n+1)-dimensional eigenspace that C_n cannot reproduce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import NamedTuple, Optional, Sequence

from .errors import ContractViolation
from .reps import (
    dominant_weights_with_norm_bound,
    weight_multiplicity,
    weight_system,
    weyl_dimension,
)
from .rootsys import (
    RootSystem,
    Weight,
    as_weight,
    build_root_system,
    is_dominant,
    killing_dual_form,
    rho,
)


# ---------------------------------------------------------------------------
# spinor weights
# ---------------------------------------------------------------------------

def spinor_weight(rs: RootSystem, beta: Sequence[int]) -> Weight:
    """Torus weight of the Hermite basis element h_beta of the spinor fiber.

    beta has one entry per positive root; the weight is
    rho + sum_j beta_j alpha_j in fundamental-weight coordinates.
    """
    roots = rs.positive_roots_fw
    if len(beta) != len(roots):
        raise ValueError(
            f"multi-index has {len(beta)} entries; {rs.name()} has {len(roots)} positive roots"
        )
    coords = list(rho(rs))
    for b, alpha in zip(beta, roots):
        if b < 0:
            raise ValueError("multi-index entries must be nonnegative")
        for i in range(rs.rank):
            coords[i] += int(b) * alpha[i]
    return tuple(coords)


def spinor_weight_multiset(rs: RootSystem, l: int) -> list[Weight]:
    """Sorted multiset {spinor_weight(beta) : |beta| = l}.

    Its size is binomial(n+l-1, l) with n the number of positive roots,
    matching the fiber dimension of the level-l spinor bundle.
    """
    if l < 0:
        raise ValueError("level must be nonnegative")
    n = len(rs.positive_roots_fw)
    out: list[Weight] = []

    def walk(prefix: list[int], remaining: int, slot: int):
        if slot == n - 1:
            out.append(spinor_weight(rs, prefix + [remaining]))
            return
        for b in range(remaining + 1):
            walk(prefix + [b], remaining - b, slot + 1)

    walk([], l, 0)
    return sorted(out)


# ---------------------------------------------------------------------------
# ground-state kernel (Borel-Weil)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroundKernel:
    """Kernel of the level-raising Dolbeault operator on the vacuum bundle."""

    highest: Optional[Weight]   # None when the kernel vanishes
    dim: int
    note: str


def ground_kernel(rs: RootSystem, mu: Sequence[int]) -> GroundKernel:
    """V_mu for dominant mu; reported as zero (Borel-Weil vanishing) otherwise."""
    m = as_weight(rs, mu)
    if not is_dominant(rs, m):
        return GroundKernel(None, 0, "kernel 0 by Borel-Weil vanishing (mu not dominant)")
    return GroundKernel(m, weyl_dimension(rs, m), "holomorphic sections of L_mu = V_mu")


# ---------------------------------------------------------------------------
# spectrum tables
# ---------------------------------------------------------------------------

class Constituent(NamedTuple):
    gamma: Weight
    weight_mult: int
    dim: int


@dataclass(frozen=True)
class SpectrumRow:
    eigenvalue: Fraction
    constituents: tuple[Constituent, ...]
    total_multiplicity: int


@dataclass(frozen=True)
class SpectrumTable:
    family: str
    rank: int
    mu: Weight
    cutoff: Fraction
    rows: tuple[SpectrumRow, ...]

    @property
    def algebra(self) -> str:
        return f"{self.family}{self.rank}"


def p_spectrum(
    rs: RootSystem,
    mu: Sequence[int],
    cutoff,
    cache_dir: Optional[str | Path] = None,
) -> SpectrumTable:
    """Complete spectrum of the vacuum operator twisted to L_mu, up to cutoff.

    Inclusive cutoff on the eigenvalue itself.  Eigenvalue coincidences
    across distinct gamma are merged into a single row listing every
    constituent.
    """
    m = as_weight(rs, mu)
    if not is_dominant(rs, m):
        raise ValueError(f"mu = {m} is not dominant for {rs.name()}")
    cutoff = Fraction(cutoff)
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")

    r = rho(rs)
    mu_rho = tuple(a + b for a, b in zip(m, r))
    base = killing_dual_form(rs, mu_rho, mu_rho)
    bound = cutoff + base

    rows: dict[Fraction, list[Constituent]] = {}
    for gamma in dominant_weights_with_norm_bound(rs, bound):
        mult = weight_multiplicity(rs, gamma, m)
        if mult == 0:
            continue
        g_rho = tuple(a + b for a, b in zip(gamma, r))
        lam = killing_dual_form(rs, g_rho, g_rho) - base
        if lam < 0 or (lam == 0 and gamma != m):
            raise ContractViolation(
                f"eigenvalue {lam} at gamma={gamma} violates positivity for mu={m}"
            )
        if lam > cutoff:
            continue
        dim = weight_system(rs, gamma, cache_dir=cache_dir).dim
        rows.setdefault(lam, []).append(Constituent(gamma, mult, dim))

    table_rows = []
    for lam in sorted(rows):
        constituents = tuple(rows[lam])  # enumeration order is (norm, lex)-sorted
        total = sum(c.weight_mult * c.dim for c in constituents)
        table_rows.append(SpectrumRow(lam, constituents, total))

    table = SpectrumTable(rs.family, rs.rank, m, cutoff, tuple(table_rows))
    _check_table(rs, table)
    return table


def _check_table(rs: RootSystem, table: SpectrumTable):
    if not table.rows:
        raise ContractViolation("spectrum table has no rows (gamma = mu is always present)")
    first = table.rows[0]
    expected_dim = weyl_dimension(rs, table.mu)
    if (
        first.eigenvalue != 0
        or first.constituents != (Constituent(table.mu, 1, expected_dim),)
    ):
        raise ContractViolation(f"ground row malformed: {first}")
    last = Fraction(-1)
    for row in table.rows:
        if row.eigenvalue <= last:
            raise ContractViolation("eigenvalues not strictly increasing")
        if row.eigenvalue > table.cutoff:
            raise ContractViolation("row above cutoff")
        if row.total_multiplicity != sum(c.weight_mult * c.dim for c in row.constituents):
            raise ContractViolation("total multiplicity ledger mismatch")
        last = row.eigenvalue


# -- serialization ----------------------------------------------------------

def spectrum_to_jsonable(table: SpectrumTable) -> dict:
    return {
        "algebra": table.algebra,
        "mu": list(table.mu),
        "cutoff": str(table.cutoff),
        "rows": [
            {
                "lambda": str(row.eigenvalue),
                "total": row.total_multiplicity,
                "constituents": [
                    {"gamma": list(c.gamma), "weight_mult": c.weight_mult, "dim": c.dim}
                    for c in row.constituents
                ],
            }
            for row in table.rows
        ],
    }


SPECTRUM_CSV_HEADER = "lambda,total,gamma,weight_mult,dim"


def spectrum_to_csv_lines(table: SpectrumTable) -> list[str]:
    """Flat CSV: one line per (lambda, gamma) pair."""
    lines = [SPECTRUM_CSV_HEADER]
    for row in table.rows:
        for c in row.constituents:
            gamma = " ".join(str(x) for x in c.gamma)
            lines.append(
                f"{row.eigenvalue},{row.total_multiplicity},{gamma},{c.weight_mult},{c.dim}"
            )
    return lines


# ---------------------------------------------------------------------------
# the B_n / C_n distinguisher
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RowComparison:
    index: int
    b_eigenvalue: Optional[Fraction]
    b_total: Optional[int]
    c_eigenvalue: Optional[Fraction]
    c_total: Optional[int]


@dataclass(frozen=True)
class DistinguishReport:
    n: int
    cutoff: Fraction
    b_table: SpectrumTable
    c_table: SpectrumTable
    first_difference: Optional[RowComparison]

    @property
    def verdict(self) -> str:
        if self.first_difference is None:
            return f"spectra agree up to cutoff {self.cutoff}"
        return "spectra differ"


def first_positive_eigenvalue(
    rs: RootSystem, mu: Optional[Sequence[int]] = None, cache_dir=None
) -> Fraction:
    """Smallest nonzero eigenvalue of the vacuum operator twisted to L_mu."""
    m = (0,) * rs.rank if mu is None else as_weight(rs, mu)
    r = rho(rs)
    mu_rho = tuple(a + b for a, b in zip(m, r))
    base = killing_dual_form(rs, mu_rho, mu_rho)
    bound = 2 * base + 1
    while True:
        best: Optional[Fraction] = None
        for gamma in dominant_weights_with_norm_bound(rs, bound):
            if gamma == m or weight_multiplicity(rs, gamma, m) == 0:
                continue
            g_rho = tuple(a + b for a, b in zip(gamma, r))
            lam = killing_dual_form(rs, g_rho, g_rho) - base
            if best is None or lam < best:
                best = lam
        if best is not None:
            return best
        bound *= 2


def _compare_tables(b: SpectrumTable, c: SpectrumTable) -> Optional[RowComparison]:
    for i in range(max(len(b.rows), len(c.rows))):
        rb = b.rows[i] if i < len(b.rows) else None
        rc = c.rows[i] if i < len(c.rows) else None
        eb, tb = (rb.eigenvalue, rb.total_multiplicity) if rb else (None, None)
        ec, tc = (rc.eigenvalue, rc.total_multiplicity) if rc else (None, None)
        if (eb, tb) != (ec, tc):
            return RowComparison(i, eb, tb, ec, tc)
    return None


def distinguish(n: int, cutoff=None, cache_dir=None) -> DistinguishReport:
    """Compare the untwisted vacuum spectra of B_n and C_n.

    The automatic cutoff is twice the larger of the two first positive
    eigenvalues, which guarantees both first positive rows are present.
    """
    if n < 2:
        raise ValueError(
            "distinguish requires n >= 2 (B_1 and C_1 are not in the classical "
            "table; see rank_one_sanity for the rank-1 statement)"
        )
    b = build_root_system("B", n)
    c = build_root_system("C", n)
    if cutoff is None:
        cutoff = 2 * max(first_positive_eigenvalue(b), first_positive_eigenvalue(c))
    cutoff = Fraction(cutoff)
    zero_b, zero_c = (0,) * n, (0,) * n
    tb = p_spectrum(b, zero_b, cutoff, cache_dir=cache_dir)
    tc = p_spectrum(c, zero_c, cutoff, cache_dir=cache_dir)
    return DistinguishReport(n, cutoff, tb, tc, _compare_tables(tb, tc))


def rank_one_sanity(cutoff=None, cache_dir=None) -> DistinguishReport:
    """The rank-1 control: sp(1) = su(2), so the 'B_1 vs C_1' spectra coincide."""
    a1 = build_root_system("A", 1)
    if cutoff is None:
        cutoff = 2 * first_positive_eigenvalue(a1)
    cutoff = Fraction(cutoff)
    t = p_spectrum(a1, (0,), cutoff, cache_dir=cache_dir)
    return DistinguishReport(1, cutoff, t, t, _compare_tables(t, t))


# ---------------------------------------------------------------------------
# bounded inventory of small irreducibles
# ---------------------------------------------------------------------------

def small_irrep_inventory(rs: RootSystem, dim_bound: int) -> list[tuple[Weight, int]]:
    """All dominant gamma with dim V_gamma <= dim_bound.

    Breadth-first search along gamma -> gamma + omega_i; complete because
    the Weyl dimension strictly increases along every such step.
    """
    if dim_bound < 1:
        raise ValueError("dimension bound must be >= 1")
    zero = (0,) * rs.rank
    found = {zero: 1}
    frontier = [zero]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(rs.rank):
                cand = tuple(c + 1 if j == i else c for j, c in enumerate(w))
                if cand in found:
                    continue
                d = weyl_dimension(rs, cand)
                if d <= dim_bound:
                    found[cand] = d
                    nxt.append(cand)
        frontier = nxt
    return sorted(found.items(), key=lambda item: (item[1], item[0]))
