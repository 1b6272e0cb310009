"""Channels, compositions, confusability graphs and block codes."""

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .linalg import (
    PSD_TOL,
    RANK_TOL,
    InvalidInputError,
    check_density,
    range_projector,
)

PROB_TOL = 1e-12
UNIT_TOL = 1e-10
CONFUSABILITY_TOL = 1e-9
STATIONARY_TOL = 1e-9


def check_probability(p, tol: float = PROB_TOL, name: str = "composition") -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise InvalidInputError(f"{name}: expected a non-empty vector, got shape {p.shape}")
    if not np.all(np.isfinite(p)) or np.any(p < -tol):
        raise InvalidInputError(f"{name}: entries must be finite and non-negative")
    if abs(p.sum() - 1.0) > tol:
        raise InvalidInputError(f"{name}: entries sum to {p.sum():.15f}, expected 1")
    return np.clip(p, 0.0, None)


def check_stochastic(w, tol: float = PROB_TOL, name: str = "stochastic matrix") -> np.ndarray:
    w = np.asarray(w, dtype=float)
    if w.ndim != 2 or w.size == 0:
        raise InvalidInputError(f"{name}: expected a non-empty matrix, got shape {w.shape}")
    for i, row in enumerate(w):
        check_probability(row, tol, name=f"{name} row {i}")
    return np.clip(w, 0.0, None)


@dataclass(frozen=True)
class CQChannel:
    """Classical-quantum channel: input ``x`` is mapped to the density operator ``states[x]``."""

    states: np.ndarray  # shape (|X|, d, d)

    def __post_init__(self):
        states = np.asarray(self.states, dtype=complex)
        if states.ndim != 3 or states.shape[0] < 1 or states.shape[1] != states.shape[2]:
            raise InvalidInputError(
                f"channel: states must have shape (|X|, d, d), got {states.shape}"
            )
        checked = np.array([check_density(s) for s in states])
        checked.setflags(write=False)
        object.__setattr__(self, "states", checked)

    @property
    def alphabet_size(self) -> int:
        return self.states.shape[0]

    @property
    def dim(self) -> int:
        return self.states.shape[1]

    def range_projectors(self, rank_tol: float = RANK_TOL) -> np.ndarray:
        return np.array([range_projector(s, rank_tol) for s in self.states])

    def is_pure(self, tol: float = 1e-9) -> bool:
        purity = np.einsum("xij,xji->x", self.states, self.states).real
        return bool(np.all(np.abs(purity - 1.0) < tol))

    def digest(self) -> str:
        import hashlib

        return hashlib.sha256(np.ascontiguousarray(self.states).tobytes()).hexdigest()[:16]


@dataclass(frozen=True)
class PureStateChannel:
    """Channel with pure output states ``|psi_x><psi_x|``; ``vectors`` has one row per input."""

    vectors: np.ndarray  # shape (|X|, d)
    gram: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2 or v.shape[0] < 1 or v.shape[1] < 1:
            raise InvalidInputError(f"pure channel: vectors must have shape (|X|, d), got {v.shape}")
        norms = np.linalg.norm(v, axis=1)
        if np.any(np.abs(norms - 1.0) > UNIT_TOL):
            raise InvalidInputError(f"unit norm: vector norms {norms} deviate from 1")
        v = v.copy()
        v.setflags(write=False)
        gram = v.conj() @ v.T
        gram.setflags(write=False)
        object.__setattr__(self, "vectors", v)
        object.__setattr__(self, "gram", gram)

    @classmethod
    def from_gram(cls, gram) -> "PureStateChannel":
        """Factor a PSD unit-diagonal Gram matrix ``G[x, x'] = <psi_x|psi_x'>`` into vectors."""
        g = np.asarray(gram, dtype=complex)
        g = (g + g.conj().T) / 2
        lam, vecs = np.linalg.eigh(g)
        if lam[0] < -PSD_TOL * max(1.0, lam[-1]):
            raise InvalidInputError(f"gram: smallest eigenvalue {lam[0]:.3e} is negative")
        if np.max(np.abs(np.diag(g).real - 1.0)) > 1e-9:
            raise InvalidInputError("gram: diagonal must be 1")
        # G = B^H B with B = sqrt(L) V^H; column x of B is psi_x
        b = np.sqrt(np.clip(lam, 0.0, None))[:, None] * vecs.conj().T
        vectors = b.T
        vectors = vectors / np.linalg.norm(vectors, axis=1, keepdims=True)
        return cls(vectors)

    @property
    def alphabet_size(self) -> int:
        return self.vectors.shape[0]

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def to_cq(self) -> CQChannel:
        return CQChannel(np.einsum("xi,xj->xij", self.vectors, self.vectors.conj()))


@dataclass(frozen=True)
class ConfusabilityGraph:
    """Graph on the input alphabet; ``adjacency[x, x']`` is True when the inputs are confusable."""

    adjacency: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.adjacency, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise InvalidInputError(f"graph: adjacency must be square, got shape {a.shape}")
        if not np.array_equal(a, a.T):
            raise InvalidInputError("graph: adjacency must be symmetric")
        if not np.all(np.diag(a)):
            raise InvalidInputError("graph: every vertex must be confusable with itself")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[Sequence[int]]) -> "ConfusabilityGraph":
        a = np.eye(n, dtype=bool)
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidInputError(f"graph: edge ({i}, {j}) out of range for n={n}")
            a[i, j] = a[j, i] = True
        return cls(a)

    @classmethod
    def cycle(cls, n: int) -> "ConfusabilityGraph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "ConfusabilityGraph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete(cls, n: int) -> "ConfusabilityGraph":
        return cls(np.ones((n, n), dtype=bool))

    @classmethod
    def empty(cls, n: int) -> "ConfusabilityGraph":
        return cls(np.eye(n, dtype=bool))

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def edges(self) -> list[tuple[int, int]]:
        i, j = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(a), int(b)) for a, b in zip(i, j)]

    def non_adjacent_mask(self) -> np.ndarray:
        """Boolean mask of distinct pairs that must be orthogonal in a representation."""
        return ~self.adjacency

    def with_edges(self, edges) -> "ConfusabilityGraph":
        a = self.adjacency.copy()
        for i, j in edges:
            a[i, j] = a[j, i] = True
        return ConfusabilityGraph(a)


@dataclass(frozen=True)
class CodeBlock:
    """Block code over the alphabet ``{0, ..., alphabet_size - 1}``; one codeword per row."""

    codewords: np.ndarray
    alphabet_size: int

    def __post_init__(self):
        c = np.asarray(self.codewords)
        if c.ndim != 2 or c.shape[0] < 1 or c.shape[1] < 1:
            raise InvalidInputError(f"code: codewords must form an (M, n) array, got shape {c.shape}")
        if not np.issubdtype(c.dtype, np.integer):
            if not np.all(c == np.round(c)):
                raise InvalidInputError("code: codeword symbols must be integers")
            c = c.astype(int)
        if c.min() < 0 or c.max() >= self.alphabet_size:
            raise InvalidInputError("code: codeword symbol outside the alphabet")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "codewords", c)

    @property
    def size(self) -> int:
        return self.codewords.shape[0]

    @property
    def length(self) -> int:
        return self.codewords.shape[1]

    @property
    def rate(self) -> float:
        """Rate in nats per channel use, ``log(M) / n``."""
        return float(np.log(self.size) / self.length)


def classical_embed(w) -> CQChannel:
    """Embed a row-stochastic matrix ``W[x, y]`` as a channel of commuting diagonal states."""
    w = check_stochastic(w, name="channel matrix")
    states = np.array([np.diag(row).astype(complex) for row in w])
    return CQChannel(states)


def confusability_graph(ch, tol: float = CONFUSABILITY_TOL) -> ConfusabilityGraph:
    """Inputs are confusable when ``Tr(S_x^0 S_x'^0) > tol`` (non-orthogonal ranges)."""
    if isinstance(ch, PureStateChannel):
        ch = ch.to_cq()
    proj = ch.range_projectors()
    overlaps = np.einsum("xij,yji->xy", proj, proj).real
    adj = overlaps > tol
    np.fill_diagonal(adj, True)
    return ConfusabilityGraph(adj)


def composition_of(word, alphabet_size: int | None = None) -> np.ndarray:
    word = np.asarray(word, dtype=int)
    if word.ndim != 1 or word.size == 0:
        raise InvalidInputError("composition: word must be a non-empty sequence")
    k = int(word.max()) + 1 if alphabet_size is None else alphabet_size
    return np.bincount(word, minlength=k).astype(float) / word.size


@dataclass(frozen=True)
class ConditionalComposition:
    """Row-stochastic ``V[a, x]``; rows with ``defined[a] == False`` carry no information."""

    matrix: np.ndarray
    defined: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        d = np.asarray(self.defined, dtype=bool)
        if m.ndim != 2 or d.shape != (m.shape[0],):
            raise InvalidInputError("conditional composition: shape mismatch")
        for a in np.nonzero(d)[0]:
            check_probability(m[a], name=f"conditional composition row {a}")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "defined", d)

    @classmethod
    def from_matrix(cls, v) -> "ConditionalComposition":
        v = check_stochastic(v, name="conditional composition")
        return cls(v, np.ones(v.shape[0], dtype=bool))


def conditional_composition_of(
    word, anchor, alphabet_size: int | None = None, anchor_size: int | None = None
) -> ConditionalComposition:
    """Empirical ``V(x|a)``: the fraction of the positions with ``anchor[i] == a`` where ``word[i] == x``."""
    word = np.asarray(word, dtype=int)
    anchor = np.asarray(anchor, dtype=int)
    if word.shape != anchor.shape or word.ndim != 1:
        raise InvalidInputError(
            f"conditional composition: length mismatch ({word.size} vs {anchor.size})"
        )
    nx = int(word.max()) + 1 if alphabet_size is None else alphabet_size
    na = int(anchor.max()) + 1 if anchor_size is None else anchor_size
    counts = np.zeros((na, nx))
    np.add.at(counts, (anchor, word), 1.0)
    totals = counts.sum(axis=1)
    defined = totals > 0
    v = np.full((na, nx), np.nan)
    v[defined] = counts[defined] / totals[defined, None]
    return ConditionalComposition(v, defined)


def check_stationary(p, v, tol: float = STATIONARY_TOL) -> tuple[bool, float]:
    """Whether ``sum_x P(x) V(x'|x) = P(x')``; returns the flag and the max deviation."""
    p = check_probability(p)
    v = np.asarray(v.matrix if isinstance(v, ConditionalComposition) else v, dtype=float)
    if v.shape != (p.size, p.size):
        raise InvalidInputError(f"stationarity: V shape {v.shape} incompatible with |P| = {p.size}")
    residual = float(np.max(np.abs(p @ np.nan_to_num(v) - p)))
    return residual <= tol, residual
