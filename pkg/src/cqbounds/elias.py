"""Elias-type upper bounds for pure-state channels.

The bound combines an admissible auxiliary channel (overlaps dominated by the
original overlaps raised to ``1/rho``) with the conditional sphere-packing
exponent, evaluated over an explicit finite search space of ``rho``, stationary
conditional compositions ``V`` (``PV = P``) and auxiliary channels. Every value
returned is a valid bound for the configuration that achieves it; the search
itself makes no claim of reaching the global infimum.
"""

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import NamedTuple

import numpy as np

from .channel import (
    CodeBlock,
    ConditionalComposition,
    PureStateChannel,
    check_probability,
    check_stationary,
    conditional_composition_of,
)
from .linalg import InvalidInputError
from .renyi import SolverConfig
from .spherepacking import (
    RHO_MAX,
    BoundCurve,
    CondChannelFamily,
    CondE0Table,
    espcc_cond,
)

ADMISSIBLE_TOL = 1e-10
BISECTION_STEPS = 60
PSD_MARGIN = 1e-13
NOISE_FLOOR = 1e-14
DEFAULT_EPS = 1e-4
DEFAULT_RHO_POINTS = 17
DEFAULT_RHO_TOP = 16.0
DEFAULT_RANDOM_V = 8
SINKHORN_ROUNDS = 100
SINKHORN_TOL = 1e-10
ANCHOR_BUDGET = 20_000_000


def mutual_information(P, V) -> float:
    """``I(P, V) = sum P(x) V(x'|x) log V(x'|x) / (PV)(x')`` in nats, with ``0 log 0 = 0``."""
    P = check_probability(P)
    m = np.asarray(V.matrix if isinstance(V, ConditionalComposition) else V, dtype=float)
    if m.ndim != 2 or m.shape[0] != P.size:
        raise InvalidInputError(f"mutual information: V shape {m.shape} incompatible with |P| = {P.size}")
    m = np.nan_to_num(m)
    joint = P[:, None] * m
    out = joint.sum(axis=0)
    mask = joint > 0
    ratio = m[mask] / np.broadcast_to(out, m.shape)[mask]
    return float(max(np.sum(joint[mask] * np.log(ratio)), 0.0))


# ---------------------------------------------------------------------------
# admissible auxiliary channels


@dataclass(frozen=True)
class GammaCertificate:
    rho: float
    gram: np.ndarray
    aux_gram: np.ndarray
    max_violation: float

    @property
    def admissible(self) -> bool:
        return self.max_violation <= ADMISSIBLE_TOL


def _unit_gram(g, name: str) -> np.ndarray:
    g = np.asarray(g, dtype=complex)
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        raise InvalidInputError(f"{name}: expected a square matrix, got shape {g.shape}")
    if np.max(np.abs(g - g.conj().T)) > 1e-10:
        raise InvalidInputError(f"{name}: not Hermitian")
    if np.max(np.abs(np.diag(g).real - 1.0)) > 1e-9:
        raise InvalidInputError(f"{name}: diagonal must be 1")
    lam_min = np.linalg.eigvalsh((g + g.conj().T) / 2)[0]
    if lam_min < -1e-9:
        raise InvalidInputError(f"{name}: smallest eigenvalue {lam_min:.3e} is negative")
    return (g + g.conj().T) / 2


def _violation(g: np.ndarray, g_aux: np.ndarray, rho: float) -> float:
    bound = np.abs(g) ** (1.0 / rho)
    excess = np.abs(g_aux) - bound
    np.fill_diagonal(excess, -np.inf)
    return float(max(np.max(excess), 0.0)) if g.shape[0] > 1 else 0.0


def gamma_check(G, G_tilde, rho: float) -> GammaCertificate:
    """Certify ``|G~[x, x']| <= |G[x, x']|**(1/rho)`` for every pair ``x != x'``."""
    if not rho >= 1.0:
        raise InvalidInputError(f"admissibility is defined for rho >= 1, got {rho}")
    g = _unit_gram(G, "gram")
    gt = _unit_gram(G_tilde, "auxiliary gram")
    if g.shape != gt.shape:
        raise InvalidInputError(f"gram shapes differ: {g.shape} vs {gt.shape}")
    return GammaCertificate(float(rho), g, gt, _violation(g, gt, rho))


class AuxiliaryChannel(NamedTuple):
    channel: PureStateChannel
    certificate: GammaCertificate
    gamma: float  # off-diagonal shrink factor applied after the entrywise power
    degraded: bool  # fell back to orthogonal states


def _min_eig(a: np.ndarray) -> float:
    return float(np.linalg.eigvalsh((a + a.conj().T) / 2)[0])


def _channel_from_gram(g: np.ndarray) -> PureStateChannel:
    return PureStateChannel.from_gram(g)


def construct_aux_channel(G, rho: float, steps: int = BISECTION_STEPS) -> AuxiliaryChannel:
    """Admissible pure-state auxiliary channel obtained from the entrywise power of ``G``.

    The target ``|G|**(1/rho) * phase(G)`` is used directly when it is PSD.
    Otherwise its negative eigenvalues are clipped, the diagonal is
    renormalized, and the off-diagonal part is scaled by the largest factor in
    ``(0, 1]`` (found by ``steps`` bisection steps) that keeps the matrix PSD
    and admissible. The same shrink is also applied to the unclipped target,
    and whichever result lies closer to the target in Frobenius norm is kept.
    """
    if not rho >= 1.0:
        raise InvalidInputError(f"admissibility is defined for rho >= 1, got {rho}")
    g = _unit_gram(G, "gram")
    n = g.shape[0]
    mag = np.abs(g)
    phase = np.where(mag > 0, g / np.where(mag > 0, mag, 1.0), 1.0)
    # round-off sized overlaps would be amplified by the root; zero is always admissible
    target = np.where(mag > NOISE_FLOOR, mag, 0.0) ** (1.0 / rho) * phase
    np.fill_diagonal(target, 1.0)

    def acceptable(m):
        return _min_eig(m) >= -PSD_MARGIN and _violation(g, m, rho) <= PSD_MARGIN

    def largest_shrink(off):
        lo, hi = 0.0, 1.0
        for _ in range(steps):
            mid = 0.5 * (lo + hi)
            if acceptable(np.eye(n) + mid * off):
                lo = mid
            else:
                hi = mid
        return lo

    gamma, degraded = 1.0, False
    if acceptable(target):
        final = target
    else:
        lam, vecs = np.linalg.eigh(target)
        clipped = (vecs * np.clip(lam, 0.0, None)) @ vecs.conj().T
        d = np.sqrt(np.clip(np.diag(clipped).real, 1e-300, None))
        base = clipped / np.outer(d, d)
        # clipping fills in pairs that must stay orthogonal, which can force the
        # shrink to zero; the unclipped target keeps that pattern
        candidates = []
        for off in (base - np.diag(np.diag(base)), target - np.eye(n)):
            gam = largest_shrink(off)
            candidates.append((np.linalg.norm(gam * off - (target - np.eye(n))), gam, off))
        _, gamma, off = min(candidates, key=lambda c: c[0])
        if gamma <= 0.0:
            degraded = True
        final = np.eye(n) + gamma * off
    ch = _channel_from_gram(final)
    cert = gamma_check(g, ch.gram, rho)
    if not cert.admissible:
        ch = _channel_from_gram(np.eye(n, dtype=complex))
        cert = gamma_check(g, ch.gram, rho)
        gamma, degraded = 0.0, True
    return AuxiliaryChannel(ch, cert, float(gamma), degraded)


# ---------------------------------------------------------------------------
# code-level quantities


def code_overlap_exponent(code: CodeBlock, ch: PureStateChannel, block: int = 256) -> float:
    """``-(1/n) log max_{m != m'} |<psi_{x_m}|psi_{x_m'}>|**2`` summed in the log domain."""
    if code.size < 2:
        raise InvalidInputError(f"overlap exponent needs at least 2 codewords, got {code.size}")
    if code.alphabet_size > ch.alphabet_size:
        raise InvalidInputError("code alphabet exceeds the channel input alphabet")
    with np.errstate(divide="ignore"):
        log_ov = np.log(np.abs(ch.gram) ** 2)
    c = code.codewords
    M, n = c.shape
    best = -np.inf
    for start in range(0, M, block):
        rows = c[start : start + block]
        acc = np.zeros((rows.shape[0], M))
        for i in range(n):
            acc += log_ov[rows[:, i]][:, c[:, i]]
        idx = np.arange(rows.shape[0])
        acc[idx, start + idx] = -np.inf
        best = max(best, float(np.max(acc)))
    if best == -np.inf:
        return np.inf
    return float(-best / n)


@dataclass(frozen=True)
class SubcodeWitness:
    anchor: np.ndarray
    V: ConditionalComposition
    T: np.ndarray
    rate: float
    mutual_information: float
    exhaustive: bool

    @property
    def size(self) -> int:
        return int(self.T.size)

    @property
    def size_bound(self) -> float:
        """``exp(n (R - I(P, V)))``, the reference count for comparison."""
        return float(np.exp(self.anchor.size * (self.rate - self.mutual_information)))

    def to_dict(self) -> dict:
        return {
            "anchor": [int(a) for a in self.anchor],
            "V": [[float(v) for v in row] for row in np.nan_to_num(self.V.matrix)],
            "T": [int(t) for t in self.T],
        }


def _nearest_counts(P: np.ndarray, n: int) -> np.ndarray:
    raw = P * n
    counts = np.floor(raw).astype(int)
    order = np.argsort(-(raw - counts), kind="stable")
    counts[order[: n - counts.sum()]] += 1
    return counts


def _sequences_with_counts(counts, n: int):
    """Every sequence of length ``n`` with symbol ``k`` appearing ``counts[k]`` times, lexicographically."""
    counts = list(counts)

    def rec(prefix, remaining):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for k, r in enumerate(remaining):
            if r:
                remaining[k] -= 1
                prefix.append(k)
                yield from rec(prefix, remaining)
                prefix.pop()
                remaining[k] += 1

    yield from rec([], counts)


def _multinomial(counts) -> int:
    total, out = 0, 1
    for c in counts:
        total += int(c)
        out *= comb(total, int(c))
    return out


def _matches(codewords: np.ndarray, anchor: np.ndarray, target: np.ndarray, k: int) -> np.ndarray:
    """Indices of codewords whose joint counts with ``anchor`` equal ``target``."""
    joint = anchor[None, :] * k + codewords
    counts = np.zeros((codewords.shape[0], k * k), dtype=int)
    rows = np.repeat(np.arange(codewords.shape[0]), codewords.shape[1])
    np.add.at(counts, (rows, joint.ravel()), 1)
    return np.nonzero(np.all(counts == target.ravel()[None, :], axis=1))[0]


def extract_subcode(
    code: CodeBlock,
    P,
    V,
    min_size: int = 1,
    seed: int = 0,
    budget: int = ANCHOR_BUDGET,
) -> SubcodeWitness | None:
    """Largest set of codewords sharing conditional composition ``V`` from a common anchor.

    Anchors are the codewords themselves followed by every sequence whose
    composition is the integer composition nearest to ``P``. When the latter
    are too many for ``budget`` (counted as anchors times codeword symbols),
    a seeded random sample of them is used and the witness is marked
    non-exhaustive. Returns ``None`` when the best subset has fewer than
    ``min_size`` codewords.
    """
    P = check_probability(P)
    k = code.alphabet_size
    if P.size != k:
        raise InvalidInputError(f"composition length {P.size} differs from alphabet size {k}")
    Vm = np.asarray(V.matrix if isinstance(V, ConditionalComposition) else V, dtype=float)
    if Vm.shape != (k, k):
        raise InvalidInputError(f"V must be {k}x{k}, got {Vm.shape}")
    c = np.asarray(code.codewords, dtype=int)
    M, n = c.shape
    R = code.rate
    info = mutual_information(P, Vm)

    def target_for(anchor):
        na = np.bincount(anchor, minlength=k)
        t = np.nan_to_num(Vm) * na[:, None]
        if np.max(np.abs(t - np.round(t))) > 1e-9:
            return None
        return np.round(t).astype(int)

    best_T, best_anchor = np.array([], dtype=int), None

    def consider(anchor):
        nonlocal best_T, best_anchor
        t = target_for(anchor)
        if t is None:
            return
        T = _matches(c, anchor, t, k)
        if T.size > best_T.size:
            best_T, best_anchor = T, anchor.copy()

    for word in c:
        consider(word)
    counts = _nearest_counts(P, n)
    total = _multinomial(counts)
    exhaustive = total * M * n <= budget
    if exhaustive:
        for seq in _sequences_with_counts(counts, n):
            consider(np.array(seq, dtype=int))
    else:
        rng = np.random.default_rng(seed)
        base = np.repeat(np.arange(k), counts)
        for _ in range(max(1, budget // (M * n))):
            consider(rng.permutation(base))
    if best_anchor is None or best_T.size < max(min_size, 1):
        return None
    for t in best_T:
        got = conditional_composition_of(c[t], best_anchor, k, k)
        rows = got.defined
        if not np.allclose(got.matrix[rows], Vm[rows], atol=1e-12, rtol=0):
            raise AssertionError("subcode witness failed conditional-composition verification")
    na = np.bincount(best_anchor, minlength=k)
    witness_V = ConditionalComposition(np.where(na[:, None] > 0, Vm, np.nan), na > 0)
    return SubcodeWitness(best_anchor, witness_V, best_T, R, info, bool(exhaustive))


# ---------------------------------------------------------------------------
# search space


def product_v(P) -> np.ndarray:
    P = check_probability(P)
    return np.tile(P, (P.size, 1))


def stationary_v(P, rng: np.random.Generator, rounds: int = SINKHORN_ROUNDS) -> np.ndarray | None:
    """Random ``V`` with ``PV = P`` by alternate row/column rescaling of the joint ``P(x) V(x'|x)``.

    Rows outside the support of ``P`` are set to ``P``. Returns ``None`` when
    the rescaling fails to reach :data:`SINKHORN_TOL` within ``rounds``.
    """
    P = check_probability(P)
    supp = P > 0
    p = P[supp]
    joint = rng.random((p.size, p.size)) + 1e-3
    for _ in range(rounds):
        joint *= (p / joint.sum(axis=1))[:, None]
        joint *= (p / joint.sum(axis=0))[None, :]
        if np.max(np.abs(joint.sum(axis=1) - p)) <= SINKHORN_TOL:
            break
    else:
        return None
    V = product_v(P)
    sub = joint / joint.sum(axis=1, keepdims=True)
    idx = np.nonzero(supp)[0]
    V[np.ix_(idx, idx)] = sub
    V[np.ix_(idx, np.nonzero(~supp)[0])] = 0.0
    ok, _ = check_stationary(P, V, SINKHORN_TOL * 10)
    return V if ok else None


def _decoupled(g: np.ndarray, a: int) -> np.ndarray:
    out = g.copy()
    out[a, :] = 0.0
    out[:, a] = 0.0
    out[a, a] = 1.0
    return out


@dataclass
class SpuSearchSpace:
    """Finite search space for the Elias-type bound.

    ``auxiliaries[i]`` lists candidate families for ``rhos[i]``; a family is a
    tuple with one auxiliary channel per state symbol ``a``.
    """

    rhos: np.ndarray
    Vs: list
    auxiliaries: list
    eps: float = DEFAULT_EPS
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.rhos = np.asarray(self.rhos, dtype=float)
        if self.rhos.ndim != 1 or self.rhos.size == 0 or np.any(self.rhos < 1.0):
            raise InvalidInputError("search space: rho grid must be non-empty with every rho >= 1")
        if len(self.auxiliaries) != self.rhos.size:
            raise InvalidInputError("search space: one auxiliary list per rho is required")
        if not self.Vs:
            raise InvalidInputError("search space: no V candidates")
        if not self.eps > 0:
            raise InvalidInputError(f"search space: eps must be positive, got {self.eps}")

    @property
    def size(self) -> int:
        return sum(len(a) for a in self.auxiliaries) * len(self.Vs)

    @classmethod
    def build(
        cls,
        ch: PureStateChannel,
        P,
        rhos=None,
        n_random_v: int = DEFAULT_RANDOM_V,
        per_a: bool = False,
        eps: float = DEFAULT_EPS,
        seed: int = 0,
        include_identity: bool = True,
    ) -> "SpuSearchSpace":
        """Default space: log-spaced ``rho`` in ``[1, 16]``, product/identity/random stationary ``V``.

        With ``per_a`` each ``rho`` also offers, besides the shared
        construction, the family whose member ``a`` has input ``a`` decoupled
        (orthogonal to every other input) and the fully orthogonal family.
        """
        P = check_probability(P)
        if P.size != ch.alphabet_size:
            raise InvalidInputError("composition length differs from the channel alphabet")
        if rhos is None:
            rhos = np.geomspace(1.0, DEFAULT_RHO_TOP, DEFAULT_RHO_POINTS)
        rng = np.random.default_rng(seed)
        Vs = [product_v(P)]
        if include_identity:
            Vs.append(np.eye(P.size))
        rejected = 0
        for _ in range(n_random_v):
            V = stationary_v(P, rng)
            if V is None:
                rejected += 1
            else:
                Vs.append(V)
        k = ch.alphabet_size
        auxiliaries, degraded = [], []
        for rho in np.asarray(rhos, dtype=float):
            aux = construct_aux_channel(ch.gram, rho)
            degraded.append(aux.degraded)
            fams = [tuple(aux.channel for _ in range(k))]
            if per_a:
                fams.append(tuple(_channel_from_gram(_decoupled(aux.channel.gram, a)) for a in range(k)))
                fams.append(tuple(_channel_from_gram(np.eye(k, dtype=complex)) for _ in range(k)))
            auxiliaries.append(fams)
        meta = {
            "seed": int(seed),
            "per_a": bool(per_a),
            "rejected_v": rejected,
            "degraded_rhos": [float(r) for r, d in zip(rhos, degraded) if d],
            "construction": "entrywise power with PSD repair; optimality within the admissible set not established",
        }
        return cls(np.asarray(rhos, dtype=float), Vs, auxiliaries, eps, meta)


class SpuValue(NamedTuple):
    value: float
    rho: float
    v_index: int
    aux_index: int
    V: np.ndarray | None
    eps: float
    evaluated: int
    skipped_infinite: int
    skipped_pruned: int
    converged: bool

    def describe(self) -> dict:
        return {
            "value_nats": self.value,
            "rho": self.rho,
            "v_index": self.v_index,
            "aux_index": self.aux_index,
            "V": None if self.V is None else [[float(x) for x in row] for row in self.V],
            "eps": self.eps,
            "evaluated": self.evaluated,
            "skipped_infinite": self.skipped_infinite,
            "skipped_pruned": self.skipped_pruned,
            "converged": self.converged,
        }


def _certified(ch: PureStateChannel, family, rho: float):
    for member in family:
        cert = gamma_check(ch.gram, member.gram, rho)
        if not cert.admissible:
            raise InvalidInputError(
                f"auxiliary channel at rho={rho} violates admissibility by {cert.max_violation:.3e}"
            )


def espu_cc(
    ch: PureStateChannel,
    R: float,
    P,
    space: SpuSearchSpace,
    cfg: SolverConfig | None = None,
    rho_max: float = RHO_MAX,
    cache: dict | None = None,
) -> SpuValue:
    """Minimum over the space of ``rho [Esp_cond(aux, R - I(P,V) - eps, P, V) + R - I(P,V)]``.

    Configurations are visited in ``(rho, V index, auxiliary index)`` order
    and only a strictly smaller value replaces the incumbent. Configurations
    whose inner rate is not positive or whose inner exponent is infinite are
    skipped; so are those with ``rho (R - I) >= `` incumbent, which cannot
    improve on it.
    """
    if not isinstance(ch, PureStateChannel):
        raise InvalidInputError("the Elias-type bound requires a pure-state channel")
    P = check_probability(P)
    if P.size != ch.alphabet_size:
        raise InvalidInputError("composition length differs from the channel alphabet")
    cfg = cfg or SolverConfig()
    cache = {} if cache is None else cache
    for V in space.Vs:
        ok, res = check_stationary(P, V)
        if not ok:
            raise InvalidInputError(f"V candidate violates PV = P (residual {res:.3e})")
    infos = [mutual_information(P, V) for V in space.Vs]
    best = SpuValue(np.inf, np.nan, -1, -1, None, space.eps, 0, 0, 0, True)
    evaluated = infinite = pruned = 0
    converged = True
    for rho, families in zip(space.rhos, space.auxiliaries):
        for fam in families:
            _certified(ch, fam, rho)
        for vi, (V, info) in enumerate(zip(space.Vs, infos)):
            inner_rate = R - info - space.eps
            for ai, fam in enumerate(families):
                if inner_rate <= 0:
                    infinite += 1
                    continue
                if rho * (R - info) >= best.value:
                    pruned += 1
                    continue
                family = CondChannelFamily(fam, P, ConditionalComposition.from_matrix(V))
                table = CondE0Table(family, cfg, cache)
                sp = espcc_cond(family, inner_rate, cfg, rho_max, table)
                evaluated += 1
                converged &= bool(sp.converged)
                if not sp.finite:
                    infinite += 1
                    continue
                value = float(rho * (sp.value + R - info))
                if value < best.value:
                    best = SpuValue(value, float(rho), vi, ai, V, space.eps, 0, 0, 0, True)
    if best.v_index < 0:
        raise InvalidInputError(
            f"empty effective search space at R={R}: {infinite} configurations infinite or at non-positive inner rate"
        )
    return best._replace(
        evaluated=evaluated, skipped_infinite=infinite, skipped_pruned=pruned, converged=converged
    )


def weakened_bound(
    ch: PureStateChannel,
    R: float,
    P,
    rhos,
    cfg: SolverConfig | None = None,
    eps: float = DEFAULT_EPS,
    rho_max: float = RHO_MAX,
    cache: dict | None = None,
) -> SpuValue:
    """``inf_rho rho [Esp(aux_rho, R - eps, P) + R]`` with one shared auxiliary per ``rho``."""
    space = SpuSearchSpace.build(ch, P, rhos=rhos, n_random_v=0, eps=eps, include_identity=False)
    return espu_cc(ch, R, P, space, cfg, rho_max, cache)


def overlap_rate_bound(
    ch: PureStateChannel,
    P,
    space: SpuSearchSpace,
    cfg: SolverConfig | None = None,
) -> BoundCurve:
    """Upper bound on the normalized overlap exponent of codes, as a function of rate.

    Each configuration yields the threshold ``R_inf(aux, P, V) + I(P, V)`` and
    the value ``rho R_inf(aux, P, V)``; above the threshold the value bounds
    ``-(1/n) log max |<psi_m|psi_m'>|``. At each threshold the curve keeps the
    smallest value over all configurations with threshold not exceeding it,
    which makes it non-increasing in the rate.
    """
    if not isinstance(ch, PureStateChannel):
        raise InvalidInputError("the overlap bound requires a pure-state channel")
    P = check_probability(P)
    cfg = cfg or SolverConfig()
    cache: dict = {}
    points = []
    for rho, families in zip(space.rhos, space.auxiliaries):
        for fam in families:
            _certified(ch, fam, rho)
        for V in space.Vs:
            ok, res = check_stationary(P, V)
            if not ok:
                raise InvalidInputError(f"V candidate violates PV = P (residual {res:.3e})")
            info = mutual_information(P, V)
            for fam in families:
                family = CondChannelFamily(fam, P, ConditionalComposition.from_matrix(V))
                rinf = CondE0Table(family, cfg, cache).r_infinity()
                points.append((round(rinf + info, 12), float(rho * rinf)))
    if not points:
        raise InvalidInputError("empty search space")
    points.sort()
    curve = BoundCurve(metadata={"kind": "overlap", **space.metadata})
    running = np.inf
    for threshold, group in itertools.groupby(points, key=lambda t: t[0]):
        running = min(running, min(v for _, v in group))
        curve.append(threshold, running)
    return curve
