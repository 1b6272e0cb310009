"""Sphere-packing exponents for constant-composition codes over cq channels.

All values are in nats. ``E0cc(rho, P)`` is evaluated by convex minimization
over density operators; the exponent ``Esp(R, P) = sup_rho [E0cc(rho, P) - rho R]``
is found by a log-spaced scan over ``rho`` followed by golden-section polishing
of the best bracket.
"""

from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .channel import (
    ConditionalComposition,
    CQChannel,
    PureStateChannel,
    check_probability,
)
from .linalg import InvalidInputError
from .renyi import (
    LogTraceObjective,
    SolverConfig,
    e0_objective_fn,
    minimize_over_density,
)

RHO_MAX = 64.0
RHO_MIN = 1e-3
SCAN_POINTS = 40
GOLDEN_ITERS = 24
INFINITE_SLACK = 1e-6
TEMPERATURES = (10.0, 1e2, 1e3, 1e4)
GAP_WARNING = 1e-3

_INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0


class E0Value(NamedTuple):
    value: float
    argmin: np.ndarray
    converged: bool


class SupValue(NamedTuple):
    """Result of ``sup_rho [E0(rho) - rho R]``."""

    value: float
    rho: float
    finite: bool
    converged: bool


def _as_cq(ch) -> CQChannel:
    return ch.to_cq() if isinstance(ch, PureStateChannel) else ch


def _composition(ch: CQChannel, P) -> np.ndarray:
    P = check_probability(P)
    if P.size != ch.alphabet_size:
        raise InvalidInputError(
            f"composition length {P.size} does not match alphabet size {ch.alphabet_size}"
        )
    return P


def e0cc(ch, rho: float, P, cfg: SolverConfig | None = None, init=None) -> E0Value:
    """``E0cc(rho, P) = min_F -(1+rho) sum_x P(x) log Tr(S_x^{1/(1+rho)} F^{rho/(1+rho)})``."""
    ch = _as_cq(ch)
    cfg = cfg or SolverConfig()
    P = _composition(ch, P)
    if rho < 0:
        raise InvalidInputError(f"rho must be non-negative, got {rho}")
    if rho == 0:
        return E0Value(0.0, np.eye(ch.dim, dtype=complex) / ch.dim, True)
    report = minimize_over_density(e0_objective_fn(ch, P, rho), ch.dim, cfg, init=init)
    return E0Value(max(report.value, 0.0), report.argmin, report.converged or report.stalled)


class E0Table:
    """Memoized ``rho -> E0cc(rho, P)`` for one channel and composition."""

    def __init__(self, ch, P, cfg: SolverConfig | None = None):
        self.channel = _as_cq(ch)
        self.P = _composition(self.channel, P)
        self.cfg = cfg or SolverConfig()
        self._values: dict[float, E0Value] = {}
        self._rinf = None

    def solve(self, rho: float) -> E0Value:
        rho = float(rho)
        if rho not in self._values:
            self._values[rho] = e0cc(self.channel, rho, self.P, self.cfg)
        return self._values[rho]

    def __call__(self, rho: float) -> float:
        return self.solve(rho).value

    @property
    def converged(self) -> bool:
        return all(v.converged for v in self._values.values())

    def r_infinity(self) -> float:
        if self._rinf is None:
            self._rinf = r_infinity(self.channel, self.P, self.cfg)
        return self._rinf


def rho_scan_grid(rho_max: float = RHO_MAX, points: int = SCAN_POINTS) -> np.ndarray:
    return np.concatenate([[0.0], np.geomspace(RHO_MIN, rho_max, points)])


def sup_over_rho(
    e0: Callable[[float], float],
    R: float,
    rinf: Callable[[], float],
    rho_max: float = RHO_MAX,
    points: int = SCAN_POINTS,
) -> SupValue:
    """``sup_{0 <= rho <= rho_max} [e0(rho) - rho R]`` by bracket scan and golden section.

    Infinite when the scan maximum sits at ``rho_max`` and ``R`` is below the
    finiteness threshold ``rinf()`` by more than :data:`INFINITE_SLACK`.
    """
    if not R > 0:
        raise InvalidInputError(f"rate must be positive, got {R}")
    grid = rho_scan_grid(rho_max, points)
    vals = np.array([e0(r) - r * R for r in grid])
    k = int(np.argmax(vals))
    if k == grid.size - 1:
        if R < rinf() - INFINITE_SLACK:
            return SupValue(np.inf, float(grid[k]), False, True)
        return SupValue(max(float(vals[k]), 0.0), float(grid[k]), True, True)
    if k == 0:
        return SupValue(0.0, 0.0, True, True)
    lo, hi = grid[k - 1], grid[k + 1]
    best_rho, best = float(grid[k]), float(vals[k])

    def g(r):
        return e0(r) - r * R

    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    gc, gd = g(c), g(d)
    for _ in range(GOLDEN_ITERS):
        if gc >= gd:
            b, d, gd = d, c, gc
            c = b - _INV_PHI * (b - a)
            gc = g(c)
        else:
            a, c, gc = c, d, gd
            d = a + _INV_PHI * (b - a)
            gd = g(d)
    for r, v in ((c, gc), (d, gd)):
        if v > best:
            best_rho, best = float(r), float(v)
    return SupValue(max(best, 0.0), best_rho, True, True)


def espcc(
    ch,
    R: float,
    P,
    cfg: SolverConfig | None = None,
    rho_max: float = RHO_MAX,
    table: E0Table | None = None,
) -> SupValue:
    """Constant-composition sphere-packing exponent ``sup_rho [E0cc(rho, P) - rho R]``."""
    table = table or E0Table(ch, P, cfg)
    res = sup_over_rho(table, R, table.r_infinity, rho_max)
    return res._replace(converged=table.converged)


@dataclass
class BoundCurve:
    """Points ``(R, E)`` of an exponent curve; ``E = inf`` marks the infinite region."""

    rates: list = field(default_factory=list)
    exponents: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def append(self, rate: float, exponent: float):
        if self.rates and not rate > self.rates[-1]:
            raise InvalidInputError("curve rates must be strictly increasing")
        self.rates.append(float(rate))
        self.exponents.append(float(exponent))

    @property
    def finite(self) -> list[bool]:
        return [bool(np.isfinite(e)) for e in self.exponents]

    def to_csv(self, scale: float = 1.0, header=("R_nats", "E_nats", "finite")) -> str:
        # repr round-trips floats, so scaled columns are exact and reproducible
        lines = [",".join(header)]
        for r, e in zip(self.rates, self.exponents):
            if np.isfinite(e):
                lines.append(f"{float(r * scale)!r},{float(e * scale)!r},1")
            else:
                lines.append(f"{float(r * scale)!r},inf,0")
        return "\n".join(lines) + "\n"


def espcc_curve(
    ch, rates: Sequence[float], P, cfg: SolverConfig | None = None, rho_max: float = RHO_MAX
) -> BoundCurve:
    """Sphere-packing exponents on a rate grid, sharing one memoized ``E0cc`` table."""
    table = E0Table(ch, P, cfg)
    curve = BoundCurve(metadata={"channel": table.channel.digest(), "P": table.P.tolist()})
    converged = True
    for R in rates:
        res = espcc(ch, R, P, cfg, rho_max, table=table)
        converged &= res.converged
        curve.append(R, res.value)
    curve.metadata["converged"] = converged
    return curve


def r_infinity_objective(ch: CQChannel, weights, temperature=None) -> LogTraceObjective:
    return LogTraceObjective(ch.range_projectors(), weights, 1.0, 1.0, temperature=temperature)


def r_infinity(ch, P, cfg: SolverConfig | None = None) -> float:
    """``R_inf(P) = min_F -sum_x P(x) log Tr(S_x^0 F)``, the finiteness threshold of ``Esp``."""
    ch = _as_cq(ch)
    P = _composition(ch, P)
    report = minimize_over_density(r_infinity_objective(ch, P), ch.dim, cfg or SolverConfig())
    return max(report.value, 0.0)


class MinMaxValue(NamedTuple):
    value: float
    argmin: np.ndarray
    smoothed_value: float
    residual: float


def _smoothed_min_max(objective: LogTraceObjective, dim: int, cfg: SolverConfig) -> MinMaxValue:
    """``min_F max_x`` of the objective terms through log-sum-exp with rising temperature."""
    init = None
    report = None
    for beta in TEMPERATURES:
        report = minimize_over_density(
            objective.with_temperature(beta), dim, cfg.with_(restarts=1), init=init
        )
        init = report.argmin
    lam, vecs = np.linalg.eigh(report.argmin)
    t = objective.traces(np.clip(lam, 0.0, None), vecs)[objective.active]
    true_max = objective.scale * float(np.max(-np.log(t)))
    return MinMaxValue(true_max, report.argmin, report.value, report.first_order_residual)


def r_infinity_global(ch, cfg: SolverConfig | None = None) -> MinMaxValue:
    """``R_inf = min_F max_x log 1/Tr(S_x^0 F)``."""
    ch = _as_cq(ch)
    obj = r_infinity_objective(ch, np.ones(ch.alphabet_size))
    res = _smoothed_min_max(obj, ch.dim, cfg or SolverConfig())
    return res._replace(value=max(res.value, 0.0))


class OptimalCompositionValue(NamedTuple):
    value: float
    max_min_value: float
    composition: np.ndarray
    gap: float
    warning: bool


def e0_optimal_composition(
    ch, rho: float, cfg: SolverConfig | None = None, ascent_iters: int = 200
) -> OptimalCompositionValue:
    """``max_P E0cc(rho, P)`` by two routes.

    Route (a) alternates inner minimization over ``F`` with mirror-ascent steps
    on ``P``; route (b) evaluates ``min_F max_x`` through a smoothed maximum.
    The route (b) value is returned together with ``|a - b|``.
    """
    ch = _as_cq(ch)
    cfg = cfg or SolverConfig()
    n = ch.alphabet_size
    if rho == 0:
        return OptimalCompositionValue(0.0, 0.0, np.ones(n) / n, 0.0, False)

    route_b = _smoothed_min_max(e0_objective_fn(ch, np.ones(n) / n, rho), ch.dim, cfg).value

    P = np.ones(n) / n
    best_val, best_P = -np.inf, P
    init = None
    eta0 = 1.0 / (1.0 + rho)
    for k in range(1, ascent_iters + 1):
        obj = e0_objective_fn(ch, P, rho)
        rep = minimize_over_density(obj, ch.dim, cfg.with_(restarts=1), init=init)
        init = rep.argmin
        if rep.value > best_val:
            best_val, best_P = rep.value, P
        lam, vecs = np.linalg.eigh(rep.argmin)
        z = -(1.0 + rho) * np.log(
            np.maximum(obj.traces(np.clip(lam, 0.0, None), vecs), 1e-300)
        )
        spread = np.ptp(z)
        if spread < 1e-12:
            break
        logits = np.log(np.maximum(P, 1e-300)) + eta0 / np.sqrt(k) * z / spread
        P = np.exp(logits - logits.max())
        P /= P.sum()
    route_a = max(best_val, 0.0)
    gap = abs(route_a - route_b)
    return OptimalCompositionValue(max(route_b, 0.0), route_a, best_P, gap, gap > GAP_WARNING)


class Theorem4Check(NamedTuple):
    lhs: float
    rhs: float
    holds: bool


RATE_NUDGE = 1e-9
THEOREM4_TOL = 1e-6


def check_theorem4(ch, P, cfg: SolverConfig | None = None) -> Theorem4Check:
    """Evaluate ``Esp(R_inf(P), P) <= R_inf(P)`` for a pure-state channel."""
    cq = _as_cq(ch)
    if not cq.is_pure():
        raise InvalidInputError("check_theorem4 requires a pure-state channel")
    table = E0Table(cq, P, cfg)
    rhs = table.r_infinity()
    lhs = espcc(cq, rhs + RATE_NUDGE, P, cfg, table=table).value
    return Theorem4Check(lhs, rhs, bool(lhs <= rhs + THEOREM4_TOL))


@dataclass(frozen=True)
class CondChannelFamily:
    """Channels ``C_a`` indexed by a state alphabet, with ``P_A`` and conditional ``V(x|a)``."""

    channels: tuple
    P_A: np.ndarray
    V: ConditionalComposition

    def __post_init__(self):
        chans = tuple(_as_cq(c) for c in self.channels)
        if not chans:
            raise InvalidInputError("family: at least one channel is required")
        sizes = {c.alphabet_size for c in chans}
        if len(sizes) != 1:
            raise InvalidInputError("family: member channels must share the input alphabet")
        P_A = check_probability(self.P_A, name="state composition")
        V = self.V
        if not isinstance(V, ConditionalComposition):
            V = ConditionalComposition.from_matrix(V)
        if P_A.size != len(chans) or V.matrix.shape != (len(chans), sizes.pop()):
            raise InvalidInputError("family: P_A, V and the channel list have inconsistent shapes")
        for a in np.nonzero(P_A > 0)[0]:
            if not V.defined[a]:
                raise InvalidInputError(f"family: V row {a} undefined although P_A({a}) > 0")
        object.__setattr__(self, "channels", chans)
        object.__setattr__(self, "P_A", P_A)
        object.__setattr__(self, "V", V)

    def active(self):
        return [a for a in range(len(self.channels)) if self.P_A[a] > 0]


class CondE0Table:
    """``rho -> sum_a P_A(a) E0cc(C_a, rho, V(.|a))`` with per-member memoization."""

    def __init__(self, fam: CondChannelFamily, cfg: SolverConfig | None = None, cache=None):
        self.family = fam
        self.cfg = cfg or SolverConfig()
        cache = {} if cache is None else cache
        self.tables = []
        for a in fam.active():
            key = (fam.channels[a].digest(), fam.V.matrix[a].tobytes(), self.cfg)
            if key not in cache:
                cache[key] = E0Table(fam.channels[a], fam.V.matrix[a], self.cfg)
            self.tables.append((fam.P_A[a], cache[key]))

    def __call__(self, rho: float) -> float:
        return float(sum(w * t(rho) for w, t in self.tables))

    def r_infinity(self) -> float:
        return float(sum(w * t.r_infinity() for w, t in self.tables))

    @property
    def converged(self) -> bool:
        return all(t.converged for _, t in self.tables)


def e0cc_cond(fam: CondChannelFamily, rho: float, cfg: SolverConfig | None = None) -> float:
    return CondE0Table(fam, cfg)(rho)


def r_infinity_cond(fam: CondChannelFamily, cfg: SolverConfig | None = None) -> float:
    return CondE0Table(fam, cfg).r_infinity()


def espcc_cond(
    fam: CondChannelFamily,
    R: float,
    cfg: SolverConfig | None = None,
    rho_max: float = RHO_MAX,
    table: CondE0Table | None = None,
) -> SupValue:
    table = table or CondE0Table(fam, cfg)
    res = sup_over_rho(table, R, table.r_infinity, rho_max)
    return res._replace(converged=table.converged)


def check_cond_theorem4(fam: CondChannelFamily, cfg: SolverConfig | None = None) -> Theorem4Check:
    if not all(c.is_pure() for c in fam.channels):
        raise InvalidInputError("check_cond_theorem4 requires pure-state channels")
    table = CondE0Table(fam, cfg)
    rhs = table.r_infinity()
    lhs = espcc_cond(fam, rhs + RATE_NUDGE, cfg, table=table).value
    return Theorem4Check(lhs, rhs, bool(lhs <= rhs + THEOREM4_TOL))
