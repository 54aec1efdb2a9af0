"""Exact Pauli decomposition of stabilizer products and setting counts.

A product of stabilizers over a vertex subset T equals (X on every T
vertex) times a +-1 diagonal, so its Pauli strings carry X-part exactly T.
The string weights come from one Walsh-Hadamard transform of that diagonal,
in integers: the string with Y on U = m&T and Z on V = m&T^c has
coefficient (-1)^(|U|/2) * W[m] / 2**n. Odd-|U| masks always transform to
zero, which is hermiticity appearing on its own; it is asserted, not
assumed.

A measurement setting assigns one of X, Y, Z per qubit; a string is
measurable in a setting that matches all its non-identity letters. The
canonical grouping completes identities to Z, which reproduces the counting
arguments for the built-in families; a greedy cover can only do better.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from .hypergraph import Hypergraph
from .states import label_of_vertices, stabilizer_product_diagonal
from .witness import WitnessKind, WitnessSpec

DENSE_VALIDATE_LIMIT = 6
SYMBOLIC_LIMIT = 10


class SettingMode(Enum):
    CANONICAL = "canonical"
    GREEDY = "greedy"


@dataclass(frozen=True)
class PauliString:
    """Tensor product of single-qubit Paulis with an exact scalar weight.

    Letters read q1..qn left to right; the coefficient is dyadic because
    every controlled-Z expands over ((I-Z)/2) factors.
    """

    letters: str
    coefficient: Fraction

    def __post_init__(self) -> None:
        if set(self.letters) - set("IXYZ"):
            raise ValueError(f"bad letters {self.letters!r}")

    @property
    def y_count(self) -> int:
        return self.letters.count("Y")

    def setting(self) -> str:
        """Canonical completion: measure Z wherever the string is identity."""
        return self.letters.replace("I", "Z")


def _walsh_hadamard(values: np.ndarray) -> np.ndarray:
    out = values.astype(np.int64).copy()
    h = 1
    while h < out.size:
        out = out.reshape(-1, 2, h)
        top = out[:, 0, :] + out[:, 1, :]
        bot = out[:, 0, :] - out[:, 1, :]
        out = np.stack((top, bot), axis=1).reshape(-1)
        h *= 2
    return out


_DENSE_PAULI = {
    "I": np.eye(2, dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


def dense_pauli(letters: str) -> np.ndarray:
    m = np.eye(1, dtype=np.complex128)
    for c in letters:
        m = np.kron(m, _DENSE_PAULI[c])
    return m


def _dense_product(h: Hypergraph, subset: tuple[int, ...]) -> np.ndarray:
    dim = 1 << h.n
    xs = np.arange(dim)
    tmask = label_of_vertices(h.n, subset)
    m = np.zeros((dim, dim), dtype=np.complex128)
    m[xs ^ tmask, xs] = stabilizer_product_diagonal(h, subset)
    return m


def decompose_stabilizer_product(
    h: Hypergraph, subset: Iterable[int], *, validate: bool | None = None
) -> tuple[PauliString, ...]:
    """Exact Pauli expansion of the ordered stabilizer product over a subset."""
    vs = tuple(sorted(set(subset)))
    if not vs:
        raise ValueError("subset must be nonempty")
    if vs[0] < 1 or vs[-1] > h.n:
        raise ValueError(f"subset {vs} outside 1..{h.n}")
    n, dim = h.n, 1 << h.n
    tmask = label_of_vertices(n, vs)
    weights = _walsh_hadamard(stabilizer_product_diagonal(h, vs))
    strings: list[PauliString] = []
    for m in range(dim):
        w = int(weights[m])
        u_count = (m & tmask).bit_count()
        if u_count % 2 == 1:
            if w != 0:
                raise ValueError("odd Y count with nonzero weight; hermiticity violated")
            continue
        if w == 0:
            continue
        letters = []
        for v in range(1, n + 1):
            bit = (m >> (n - v)) & 1
            if (tmask >> (n - v)) & 1:
                letters.append("Y" if bit else "X")
            else:
                letters.append("Z" if bit else "I")
        sign = -1 if (u_count // 2) % 2 else 1
        strings.append(PauliString("".join(letters), Fraction(sign * w, dim)))
    result = tuple(strings)
    if validate or (validate is None and n <= DENSE_VALIDATE_LIMIT):
        rebuilt = sum(float(s.coefficient) * dense_pauli(s.letters) for s in result)
        if float(np.abs(rebuilt - _dense_product(h, vs)).max()) > 1e-12:
            raise ValueError("Pauli expansion disagrees with the dense product")
    return result


def stabilizer_strings(h: Hypergraph) -> tuple[PauliString, ...]:
    """Strings of all n single stabilizers, concatenated in vertex order."""
    out: list[PauliString] = []
    for i in range(1, h.n + 1):
        out.extend(decompose_stabilizer_product(h, (i,)))
    return tuple(out)


def projector_strings(h: Hypergraph) -> Iterator[tuple[PauliString, ...]]:
    """Stream the expansion of every nonempty stabilizer-subset product.

    Together with the identity these average to 2**n times the projector
    onto the state; the identity term carries no measurement cost and is
    not emitted.
    """
    for size in range(1, h.n + 1):
        for subset in combinations(range(1, h.n + 1), size):
            yield decompose_stabilizer_product(h, subset)


def canonical_settings(strings: Iterable[PauliString]) -> tuple[str, ...]:
    """Distinct identity-to-Z completions, sorted."""
    out = set()
    for s in strings:
        if set(s.letters) == {"I"}:
            raise ValueError("identity string carries no measurement setting")
        out.add(s.setting())
    return tuple(sorted(out))


def greedy_min_settings(strings: Iterable[PauliString]) -> tuple[str, ...]:
    """First-fit merge of compatible strings into settings.

    Two strings are compatible when they agree wherever both are non-I.
    Falls back to the canonical grouping in the rare case first-fit
    fragments worse than it.
    """
    patterns = sorted({s.letters for s in strings})
    if not patterns:
        return ()
    groups: list[list[str | None]] = []
    for p in patterns:
        if set(p) == {"I"}:
            raise ValueError("identity string carries no measurement setting")
        for g in groups:
            if all(c == "I" or g[i] is None or g[i] == c for i, c in enumerate(p)):
                for i, c in enumerate(p):
                    if c != "I":
                        g[i] = c
                break
        else:
            groups.append([c if c != "I" else None for c in p])
    merged = tuple(sorted({"".join(c or "Z" for c in g) for g in groups}))
    canonical = canonical_settings(
        PauliString(p, Fraction(1)) for p in patterns
    )
    return merged if len(merged) <= len(canonical) else canonical


def exact_min_settings(strings: Iterable[PauliString], *, vertex_limit: int = 4) -> tuple[str, ...]:
    """Exhaustive minimum setting cover; exponential, capped by qubit count."""
    patterns = sorted({s.letters for s in strings})
    if not patterns:
        return ()
    n = len(patterns[0])
    if n > vertex_limit:
        raise ValueError(f"exact cover capped at {vertex_limit} qubits, got {n}")

    def candidates(p: str) -> list[str]:
        opts = [(c,) if c != "I" else ("X", "Y", "Z") for c in p]
        out = [""]
        for o in opts:
            out = [prefix + c for prefix in out for c in o]
        return out

    def covers(setting: str, p: str) -> bool:
        return all(c == "I" or c == setting[i] for i, c in enumerate(p))

    best: list[tuple[str, ...]] = [tuple(canonical_settings(PauliString(p, Fraction(1)) for p in patterns))]

    def search(uncovered: list[str], chosen: list[str]) -> None:
        if len(chosen) >= len(best[0]):
            return
        if not uncovered:
            best[0] = tuple(sorted(chosen))
            return
        pivot = min(uncovered, key=lambda p: len(candidates(p)))
        for setting in candidates(pivot):
            rest = [p for p in uncovered if not covers(setting, p)]
            search(rest, chosen + [setting])

    search(patterns, [])
    return best[0]


def witness_settings(
    spec: WitnessSpec, mode: SettingMode = SettingMode.CANONICAL, *, symbolic_limit: int = SYMBOLIC_LIMIT
) -> tuple[str, ...]:
    """Settings needed to measure the witness, per its own decomposition."""
    h = spec.hypergraph
    if spec.kind is WitnessKind.PROJECTOR:
        if h.n > symbolic_limit:
            raise ValueError(f"projector decomposition capped at n <= {symbolic_limit}, got n={h.n}")
        if mode is SettingMode.CANONICAL:
            out: set[str] = set()
            for batch in projector_strings(h):
                out.update(s.setting() for s in batch)
            return tuple(sorted(out))
        collected = [s for batch in projector_strings(h) for s in batch]
        return greedy_min_settings(collected)
    if mode is SettingMode.CANONICAL:
        return canonical_settings(stabilizer_strings(h))
    return greedy_min_settings(stabilizer_strings(h))


def witness_setting_count(
    spec: WitnessSpec, mode: SettingMode = SettingMode.CANONICAL, *, symbolic_limit: int = SYMBOLIC_LIMIT
) -> int:
    return len(witness_settings(spec, mode, symbolic_limit=symbolic_limit))


def family_projector_count(n: int) -> int:
    """Closed-form canonical count for the single-max-edge family, n >= 3."""
    return (3**n - 1) // 2


def product_setting_count(h: Hypergraph, subset: Iterable[int]) -> int:
    return len(canonical_settings(decompose_stabilizer_product(h, subset)))
