"""Geometric entanglement of sign states.

The bipartite figure of merit across a cut is the largest squared Schmidt
coefficient alpha_AB; the multipartite alpha maximizes it over all cuts and
E = 1 - alpha. Closed forms cover the three built-in families. The
certification procedure compares the (n-1|1) split against an exact
infinity-norm bound on every deeper reduced density matrix, falling back to
a dense eigensolve where that bound is inconclusive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .hypergraph import Bipartition, Family, Hypergraph, enumerate_bipartitions, max_cardinality, is_connected
from .states import SignState, build_state, is_permutation_invariant

SPECTRAL_TOL = 1e-9
DEFAULT_SWEEP_LIMIT = 12


@dataclass(frozen=True)
class SchmidtSpectrum:
    bipartition: Bipartition
    coefficients: tuple[float, ...]
    rank: int

    @property
    def alpha(self) -> float:
        return self.coefficients[0] ** 2


@dataclass(frozen=True, eq=False)
class ReducedDensityMatrix:
    kept_qubits: tuple[int, ...]
    entries: np.ndarray


@dataclass(frozen=True)
class EntanglementReport:
    """Result of the exhaustive bipartition sweep. E == 1 - alpha as stored."""

    alpha_per_bipartition: tuple[tuple[Bipartition, float], ...]
    alpha: float
    E: float
    argmax_bipartition: Bipartition


@dataclass(frozen=True)
class ProcedureRow:
    k: int
    infinity_norm: Fraction
    within_bound: bool
    lambda_max: float | None
    lambda_within: bool | None


@dataclass(frozen=True)
class ProcedureReport:
    """Certificate of the infinity-norm procedure.

    `success` records whether the norm test alone settled every cut size.
    `alpha` is correct either way: rows whose norm test failed are settled
    by the exact eigenvalue fallback, which can exceed the single-qubit
    split (the n=4 behaviour of the second family).
    """

    n: int
    smax_squared: float
    smax_squared_exact: Fraction | None
    rows: tuple[ProcedureRow, ...]
    success: bool
    alpha: float
    alpha_exact: Fraction | None


@dataclass(frozen=True)
class LowerBoundReport:
    k_max: int
    bound: Fraction
    entanglement: float
    holds: bool


@dataclass(frozen=True)
class StructureReport:
    """Comparison of an exact reduced Gram matrix with its predicted form.

    `gram` entries are 2**n times the reduced density matrix, so every
    field is an exact integer or rational. `deviation` is the largest
    entrywise difference from the prediction; 0 means exact agreement.
    """

    family: Family
    n: int
    k: int
    deviation: int
    values: tuple[int, ...]
    infinity_norm: Fraction


def _cut_matrix(state: SignState, part_a: Sequence[int]) -> np.ndarray:
    """Sign table reshaped so rows index part A labels and columns the rest."""
    n = state.n
    inside = set(part_a)
    order = list(part_a) + [v for v in range(1, n + 1) if v not in inside]
    m = state.signs().astype(np.float64).reshape((2,) * n)
    return m.transpose([v - 1 for v in order]).reshape(1 << len(part_a), -1)


def schmidt(state: SignState, bp: Bipartition) -> SchmidtSpectrum:
    """Schmidt coefficients across the cut, descending, via SVD."""
    if bp.n != state.n:
        raise ValueError("bipartition and state disagree on qubit count")
    m = _cut_matrix(state, bp.part_a) / math.sqrt(state.dim)
    sv = np.linalg.svd(m, compute_uv=False)
    rank = int(np.count_nonzero(sv > SPECTRAL_TOL))
    return SchmidtSpectrum(bp, tuple(float(s) for s in sv), rank)


def reduced_density_matrix(state: SignState, kept_qubits: Sequence[int]) -> ReducedDensityMatrix:
    kept = tuple(sorted(set(kept_qubits)))
    if not kept or len(kept) == state.n:
        raise ValueError("kept set must be a proper nonempty subset")
    m = _cut_matrix(state, kept)
    return ReducedDensityMatrix(kept, (m @ m.T) / state.dim)


def alpha_bipartite(state: SignState, bp: Bipartition) -> float:
    """Largest squared Schmidt coefficient, via the smaller side's Gram."""
    if bp.n != state.n:
        raise ValueError("bipartition and state disagree on qubit count")
    part = bp.part_a if len(bp.part_a) <= state.n // 2 else bp.part_b
    m = _cut_matrix(state, part)
    g = m @ m.T
    return float(np.linalg.eigvalsh(g)[-1]) / state.dim


def alpha_multipartite(state: SignState, *, sweep_limit: int = DEFAULT_SWEEP_LIMIT) -> EntanglementReport:
    """Exhaustive sweep over all canonical bipartitions; E = 1 - alpha."""
    if state.n < 2:
        raise ValueError("need at least 2 qubits to bipartition")
    if state.n > sweep_limit:
        raise ValueError(f"qubit count {state.n} exceeds the sweep cap {sweep_limit}")
    rows = tuple((bp, alpha_bipartite(state, bp)) for bp in enumerate_bipartitions(state.n))
    best_bp, best = None, -1.0
    for bp, a in sorted(rows, key=lambda r: r[0].part_a):
        if a > best:
            best_bp, best = bp, a
    assert best_bp is not None
    return EntanglementReport(rows, best, 1.0 - best, best_bp)


def infinity_norm(m: np.ndarray) -> float:
    """Maximum absolute row sum; bounds the top eigenvalue of a PSD matrix."""
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("infinity norm defined here for square matrices only")
    return float(np.abs(a).sum(axis=1).max())


def _prefix_gram(state: SignState, kept: int) -> np.ndarray:
    """Exact integer Gram of the first `kept` qubits: 2**n times the rdm."""
    s = state.signs().astype(np.int64).reshape(1 << kept, -1)
    return s @ s.T


def _exact_infinity_norm(gram: np.ndarray, dim: int) -> Fraction:
    return Fraction(int(np.abs(gram).sum(axis=1).max()), dim)


def _last_qubit_split(state: SignState) -> tuple[float, Fraction | None]:
    """alpha of the (1..n-1 | n) cut from the exact 2x2 Gram of side B.

    The eigenvalue is rational exactly when the discriminant is a perfect
    square; otherwise only the float is returned.
    """
    s = state.signs().astype(np.int64).reshape(-1, 2)
    g = s.T @ s
    a, b, d = int(g[0, 0]), int(g[0, 1]), int(g[1, 1])
    disc = (a - d) ** 2 + 4 * b * b
    root = math.isqrt(disc)
    value = ((a + d) + math.sqrt(disc)) / (2 * state.dim)
    if root * root == disc:
        return value, Fraction(a + d + root, 2 * state.dim)
    return value, None


def procedure_alpha(h: Hypergraph, *, sweep_limit: int = DEFAULT_SWEEP_LIMIT) -> ProcedureReport:
    """Certify alpha for a permutation-invariant state.

    alpha of the single-qubit split is computed exactly; for each deeper
    cut size k the reduced Gram's infinity norm (exact rational) must not
    exceed it. A failed norm test triggers an exact eigensolve on that
    Gram, whose top eigenvalue then competes for alpha directly.
    """
    if h.n < 2:
        raise ValueError("need at least 2 qubits")
    if h.n > sweep_limit:
        raise ValueError(f"qubit count {h.n} exceeds the sweep cap {sweep_limit}")
    state = build_state(h)
    if not is_permutation_invariant(state):
        raise ValueError("state is not permutation-invariant; the single-split comparison would be unjustified")
    smax_sq, smax_exact = _last_qubit_split(state)
    rows: list[ProcedureRow] = []
    success = True
    alpha, alpha_exact = smax_sq, smax_exact
    for k in range(2, h.n // 2 + 1):
        gram = _prefix_gram(state, h.n - k)
        inf = _exact_infinity_norm(gram, state.dim)
        if smax_exact is not None:
            ok = inf <= smax_exact
        else:
            ok = float(inf) <= smax_sq + SPECTRAL_TOL
        lam: float | None = None
        lam_ok: bool | None = None
        if not ok:
            success = False
            lam = float(np.linalg.eigvalsh(gram.astype(np.float64))[-1]) / state.dim
            lam_ok = lam <= smax_sq + SPECTRAL_TOL
            if lam > alpha:
                alpha, alpha_exact = lam, None
        rows.append(ProcedureRow(k, inf, ok, lam, lam_ok))
    return ProcedureReport(h.n, smax_sq, smax_exact, tuple(rows), success, alpha, alpha_exact)


def closed_form_alpha(family: Family, n: int) -> Fraction | float:
    """Piecewise-exact alpha for the built-in families.

    Rational throughout except the second family at n=4, whose value
    (3 + sqrt 5)/8 is irrational and returned as a float.
    """
    if family is Family.SINGLE_MAX_EDGE:
        if n < 2:
            raise ValueError("single-max family needs n >= 2")
        half = 1 << (n - 1)
        return Fraction(half - 1, half)
    if n < 3:
        raise ValueError(f"{family.cli_name} family needs n >= 3")
    half = 1 << (n - 1)
    if family is Family.ALL_N_MINUS_1:
        if n == 4:
            return (3.0 + math.sqrt(5.0)) / 8.0
        return Fraction(half - n, half) if n % 2 == 0 else Fraction(half - n + 1, half)
    if family is Family.ALL_GE_N_MINUS_1:
        if n == 3:
            return Fraction(3, 4)
        return Fraction(half - n + 1, half) if n % 2 == 0 else Fraction(half - n, half)
    raise ValueError(f"unknown family {family!r}")


def closed_form_E(family: Family, n: int) -> Fraction | float:
    a = closed_form_alpha(family, n)
    return 1 - a if isinstance(a, Fraction) else 1.0 - a


def lower_bound_check(h: Hypergraph, *, sweep_limit: int = DEFAULT_SWEEP_LIMIT) -> LowerBoundReport:
    """Check E >= 1/2**(k_max - 1) for a connected hypergraph."""
    if h.n < 2:
        raise ValueError("need at least 2 qubits")
    if not is_connected(h):
        raise ValueError("lower bound requires a connected hypergraph")
    k_max = max_cardinality(h)
    bound = Fraction(1, 1 << (k_max - 1))
    report = alpha_multipartite(build_state(h), sweep_limit=sweep_limit)
    return LowerBoundReport(k_max, bound, report.E, report.E >= float(bound) - SPECTRAL_TOL)


def _residual_state_signs(family: Family, m: int, k: int) -> np.ndarray:
    # Residual edge family on the kept m vertices: every (m-1)-subset, plus
    # the full m-edge depending on the parity of the traced-out count.
    edges = [tuple(v for v in range(1, m + 1) if v != drop) for drop in range(1, m + 1)]
    parity = k if family is Family.ALL_N_MINUS_1 else k + 1
    if parity % 2 == 1:
        edges.append(tuple(range(1, m + 1)))
    h = Hypergraph(m, tuple(sorted(edges)))
    return build_state(h).signs().astype(np.int64)


def predicted_gram(family: Family, n: int, k: int) -> np.ndarray:
    """Predicted 2**n rho over the first n-k qubits, exact integers.

    All three families reduce to a rank-three pattern: a constant block,
    a multiple of the single-max-edge outer square, and one residual outer
    square whose edge family depends on the traced-out parity.
    """
    m = n - k
    dim = 1 << m
    j = np.ones((dim, dim), dtype=np.int64)
    g = build_state(Hypergraph(m, (tuple(range(1, m + 1)),))).signs().astype(np.int64)
    if family is Family.SINGLE_MAX_EDGE:
        return ((1 << k) - 1) * j + np.outer(g, g)
    r = _residual_state_signs(family, m, k)
    return ((1 << k) - k - 1) * j + k * np.outer(g, g) + np.outer(r, r)


def reduced_structure_check(family: Family, n: int, k: int) -> StructureReport:
    """Build the exact reduced Gram and compare it with predicted_gram."""
    if k < 1 or n - k < 2:
        raise ValueError("need k >= 1 and at least 2 kept qubits")
    min_n = 2 if family is Family.SINGLE_MAX_EDGE else 3
    if n < min_n:
        raise ValueError(f"{family.cli_name} family needs n >= {min_n}")
    from .hypergraph import build_family

    state = build_state(build_family(family, n))
    gram = _prefix_gram(state, n - k)
    predicted = predicted_gram(family, n, k)
    deviation = int(np.abs(gram - predicted).max())
    values = tuple(sorted(int(v) for v in np.unique(gram)))
    return StructureReport(family, n, k, deviation, values, _exact_infinity_norm(gram, state.dim))
