"""Dense reference implementations used to cross-check the fast paths.

Everything here favors clarity over speed: states are explicit vectors, gates
are explicit matrices, reductions go through reshape/transpose. Vertex v owns
bit n-v of the basis label, so vertex 1 is the most significant bit.
"""

from itertools import combinations

import numpy as np

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def edge_hits(n: int, edge, x: int) -> bool:
    return all((x >> (n - v)) & 1 for v in edge)


def dense_state(n: int, edges) -> np.ndarray:
    dim = 1 << n
    amps = np.ones(dim)
    for x in range(dim):
        for e in edges:
            if edge_hits(n, e, x):
                amps[x] = -amps[x]
    return amps / np.sqrt(dim)


def cz_matrix(n: int, edge) -> np.ndarray:
    d = np.ones(1 << n)
    for x in range(1 << n):
        if edge_hits(n, edge, x):
            d[x] = -1.0
    return np.diag(d)


def x_matrix(n: int, vertex: int) -> np.ndarray:
    dim = 1 << n
    m = np.zeros((dim, dim))
    bit = 1 << (n - vertex)
    for x in range(dim):
        m[x ^ bit, x] = 1.0
    return m


def z_matrix(n: int, vertex: int) -> np.ndarray:
    return cz_matrix(n, (vertex,))


def stabilizer_matrix(n: int, edges, vertex: int) -> np.ndarray:
    m = x_matrix(n, vertex)
    for e in edges:
        if vertex not in e:
            continue
        rest = tuple(v for v in e if v != vertex)
        if rest:
            m = cz_matrix(n, rest) @ m
        else:
            m = -m
    return m


def pauli_matrix(letters: str) -> np.ndarray:
    m = np.array([[1.0 + 0j]])
    for ch in letters:
        m = np.kron(m, PAULI[ch])
    return m


def cut_matrix(amps: np.ndarray, n: int, part_a) -> np.ndarray:
    tensor = amps.reshape((2,) * n)
    part_a = sorted(part_a)
    rest = [v for v in range(1, n + 1) if v not in part_a]
    order = [v - 1 for v in part_a + rest]
    return np.transpose(tensor, order).reshape(1 << len(part_a), -1)


def dense_alpha_cut(amps: np.ndarray, n: int, part_a) -> float:
    sv = np.linalg.svd(cut_matrix(amps, n, part_a), compute_uv=False)
    return float(sv[0] ** 2)


def dense_alpha(amps: np.ndarray, n: int) -> float:
    best = 0.0
    for size in range(0, n - 1):
        for extra in combinations(range(2, n + 1), size):
            best = max(best, dense_alpha_cut(amps, n, (1,) + extra))
    return best


def reduced_density(amps: np.ndarray, n: int, kept) -> np.ndarray:
    m = cut_matrix(amps, n, kept)
    return m @ m.conj().T


def dense_projected(amps: np.ndarray, n: int, vertex: int, outcome: int) -> np.ndarray:
    tensor = amps.reshape((2,) * n)
    return np.take(tensor, outcome, axis=vertex - 1).reshape(-1)


def proportional(u: np.ndarray, v: np.ndarray, tol: float = 1e-12) -> bool:
    """True when u = c*v for some nonzero scalar c."""
    i = int(np.argmax(np.abs(v)))
    if abs(v[i]) < tol:
        return bool(np.max(np.abs(u)) < tol)
    c = u[i] / v[i]
    return bool(abs(c) > tol and np.allclose(u, c * v, atol=tol))
