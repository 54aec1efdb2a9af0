from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import hypergraphs, nonempty_hypergraphs
from hyperwit import (
    Family,
    Hypergraph,
    SignState,
    apply_controlled_z,
    apply_stabilizer,
    apply_x,
    apply_z,
    basis_state,
    build_family,
    build_state,
    canonicalize,
    extract_hypergraph,
    is_permutation_invariant,
    overlap,
    plus_state,
    projector_identity_check,
)
from hyperwit.states import (
    dense_stabilizer,
    label_bit,
    label_of_vertices,
    stabilizer_diagonal,
    stabilizer_product_diagonal,
    superset_mask,
    vertices_of_label,
)


def test_label_conventions():
    # vertex 1 owns the most significant bit
    assert label_bit(3, 1) == 2
    assert label_bit(3, 3) == 0
    assert label_of_vertices(3, [1, 3]) == 0b101
    assert vertices_of_label(3, 0b101) == (1, 3)


def test_superset_mask_small():
    # n=2, edge {1}: labels 10 and 11
    assert superset_mask(2, (1,)) == 0b1100
    assert superset_mask(2, (1, 2)) == 0b1000
    assert superset_mask(2, ()) == 0b1111


def test_plus_state_has_no_signs():
    st5 = plus_state(5)
    assert st5.neg == 0
    assert st5.sign(17) == 1


@given(hypergraphs(max_n=6))
def test_build_state_matches_dense_oracle(h):
    amps = build_state(h).amplitudes()
    ref = oracles.dense_state(h.n, h.edges)
    assert np.array_equal(amps, ref)


def test_build_state_single_max_edge_flips_one_label():
    for n in range(2, 8):
        s = build_state(build_family(Family.SINGLE_MAX_EDGE, n))
        # exactly the all-ones label is negative
        assert s.neg == 1 << ((1 << n) - 1)
        assert s.sign((1 << n) - 1) == -1


@given(nonempty_hypergraphs(max_n=6))
def test_controlled_z_involution(h):
    s = build_state(h)
    e = h.edges[0]
    assert apply_controlled_z(apply_controlled_z(s, e), e) == s


@given(hypergraphs(max_n=6))
def test_controlled_z_matches_dense(h):
    s = plus_state(h.n)
    for e in h.edges:
        s = apply_controlled_z(s, e)
    assert np.array_equal(s.amplitudes(), oracles.dense_state(h.n, h.edges))


@given(hypergraphs(max_n=5), st.integers(1, 5))
def test_apply_x_matches_dense(h, vertex):
    if vertex > h.n:
        return
    s = build_state(h)
    moved = apply_x(s, vertex).amplitudes()
    ref = oracles.x_matrix(h.n, vertex) @ s.amplitudes()
    assert np.array_equal(moved, ref)


@given(hypergraphs(max_n=5), st.integers(1, 5))
def test_apply_z_matches_dense(h, vertex):
    if vertex > h.n:
        return
    s = build_state(h)
    moved = apply_z(s, vertex).amplitudes()
    ref = oracles.z_matrix(h.n, vertex) @ s.amplitudes()
    assert np.array_equal(moved, ref)


@given(hypergraphs(max_n=6))
def test_stabilizers_fix_state(h):
    s = build_state(h)
    for i in range(1, h.n + 1):
        assert apply_stabilizer(s, h, i) == s


@given(hypergraphs(max_n=5), st.integers(1, 5))
def test_apply_stabilizer_matches_dense(h, vertex):
    if vertex > h.n:
        return
    s = plus_state(h.n)
    for e in h.edges:
        s = apply_controlled_z(s, e)
    s = apply_z(s, 1)  # any diagonal state, not just eigenvectors
    moved = apply_stabilizer(s, h, vertex).amplitudes()
    ref = oracles.stabilizer_matrix(h.n, h.edges, vertex) @ s.amplitudes()
    assert np.array_equal(moved, ref)


def test_dense_stabilizer_matches_oracle():
    h = canonicalize([[1], [1, 2], [2, 3, 4]], 4)
    for i in range(1, 5):
        assert np.array_equal(
            dense_stabilizer(h, i), oracles.stabilizer_matrix(h.n, h.edges, i)
        )


def test_stabilizer_diagonal_products_commute():
    h = canonicalize([[1, 2], [2, 3], [1, 2, 3]], 3)
    d12 = stabilizer_product_diagonal(h, (1, 2))
    # K_1 K_2 applied in either order gives the same operator
    m1 = dense_stabilizer(h, 1) @ dense_stabilizer(h, 2)
    m2 = dense_stabilizer(h, 2) @ dense_stabilizer(h, 1)
    assert np.array_equal(m1, m2)
    # and matches the X-shift of the packed diagonal
    n = h.n
    xs = np.arange(1 << n)
    tmask = (1 << label_bit(n, 1)) | (1 << label_bit(n, 2))
    recon = np.zeros((1 << n, 1 << n), dtype=np.int64)
    recon[xs ^ tmask, xs] = d12
    assert np.array_equal(recon, m1)


def test_stabilizer_diagonal_single_vertex_edge():
    h = canonicalize([[2]], 2)
    # residual of edge {2} under K_2 is a global sign flip
    assert np.array_equal(stabilizer_diagonal(h, 2), -np.ones(4, dtype=np.int64))


@given(hypergraphs(max_n=6))
def test_projector_identity_exact(h):
    assert projector_identity_check(h) == 0.0


def test_basis_orthonormal_small():
    for h in (
        build_family(Family.SINGLE_MAX_EDGE, 3),
        build_family(Family.ALL_GE_N_MINUS_1, 4),
        canonicalize([[1, 2], [2, 3], [1, 3, 4]], 4),
    ):
        s = build_state(h)
        for u in range(1 << h.n):
            want = Fraction(1) if u == 0 else Fraction(0)
            assert overlap(s, basis_state(h, u)) == want


def test_basis_state_accepts_string_and_sequence():
    h = build_family(Family.SINGLE_MAX_EDGE, 3)
    assert basis_state(h, "101") == basis_state(h, 0b101) == basis_state(h, [1, 0, 1])
    with pytest.raises(ValueError):
        basis_state(h, "1012")
    with pytest.raises(ValueError):
        basis_state(h, 8)


def test_overlap_exact_values():
    a = build_state(build_family(Family.SINGLE_MAX_EDGE, 2))
    b = plus_state(2)
    assert overlap(a, b) == Fraction(1, 2)
    assert overlap(a, a) == 1
    with pytest.raises(ValueError):
        overlap(a, plus_state(3))


@given(hypergraphs(max_n=6))
def test_extract_round_trip(h):
    g, phase = extract_hypergraph(build_state(h))
    assert g == h
    assert phase == 1


@given(hypergraphs(max_n=5))
def test_extract_recovers_global_sign(h):
    s = build_state(h)
    flipped = SignState(s.n, s.neg ^ ((1 << s.dim) - 1))
    g, phase = extract_hypergraph(flipped)
    assert g == h
    assert phase == -1


def test_permutation_invariance():
    assert is_permutation_invariant(build_state(build_family(Family.ALL_N_MINUS_1, 4)))
    assert is_permutation_invariant(build_state(build_family(Family.SINGLE_MAX_EDGE, 5)))
    line = build_state(canonicalize([[1, 2], [2, 3]], 3))
    assert not is_permutation_invariant(line)


def test_hex_round_trip():
    s = build_state(canonicalize([[1, 2], [1, 3]], 3))
    assert SignState.from_hex(3, s.to_hex()) == s


def test_sign_state_validation():
    with pytest.raises(ValueError):
        SignState(2, 1 << 4)  # sign bit outside the 2^n window
    with pytest.raises(ValueError):
        SignState(0, 0)
    with pytest.raises(ValueError):
        SignState(30, 0)  # beyond the supported width
