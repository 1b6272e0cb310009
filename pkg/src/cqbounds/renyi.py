"""Log-trace objectives over density operators and an entropic mirror-descent minimizer.

The central objective is

    phi(F) = -(1 + rho) * sum_x P(x) * log Tr(S_x^{1/(1+rho)} F^{rho/(1+rho)})

whose minimum over density operators ``F`` is the constant-composition
coefficient ``E0cc(rho, P)``. Every objective here has the shape
``-c * aggregate_x log Tr(A_x F^s)`` with PSD ``A_x`` and ``s`` in [0, 1], which
is convex in ``F``; the aggregate is either a fixed weighted sum or a
log-sum-exp smoothed maximum.
"""

from dataclasses import dataclass, field, replace

import numpy as np

from .channel import CQChannel, check_probability
from .linalg import RANK_TOL, InvalidInputError, check_density, frac_power

TRACE_UNDERFLOW = 1e-300
DEGENERATE_GAP = 1e-12
EIG_FLOOR = 1e-14
RECENTER_WEIGHT = 1e-12
ROUNDOFF = 1e-14


@dataclass(frozen=True)
class SolverConfig:
    max_iters: int = 5000
    grad_tol: float = 1e-8
    step_init: float = 1.0
    seed: int = 0
    restarts: int = 3
    rank_tol: float = RANK_TOL

    def __post_init__(self):
        for name in ("max_iters", "grad_tol", "step_init", "restarts", "rank_tol"):
            if not getattr(self, name) > 0:
                raise InvalidInputError(f"solver config: {name} must be positive")
        if self.seed < 0:
            raise InvalidInputError("solver config: seed must be non-negative")

    def with_(self, **kwargs) -> "SolverConfig":
        return replace(self, **kwargs)


@dataclass
class SolveReport:
    value: float
    argmin: np.ndarray
    iterations: int
    converged: bool
    first_order_residual: float
    infinite: bool = False
    stalled: bool = False
    history: list = field(default_factory=list, repr=False)


def renyi_s(rho: float) -> float:
    """Map ``rho >= 0`` to ``s = rho / (1 + rho)`` in [0, 1)."""
    if rho < 0:
        raise InvalidInputError(f"rho must be non-negative, got {rho}")
    return rho / (1.0 + rho)


def renyi_rho(s: float) -> float:
    if not 0.0 <= s < 1.0:
        raise InvalidInputError(f"s must lie in [0, 1), got {s}")
    return s / (1.0 - s)


def mu(S, F, s: float) -> float:
    """``log Tr(S^{1-s} F^s)`` in nats, ``-inf`` when the trace vanishes."""
    S = np.asarray(S, dtype=complex)
    F = np.asarray(F, dtype=complex)
    if S.shape != F.shape:
        raise InvalidInputError(f"mu: dimension mismatch {S.shape} vs {F.shape}")
    if not 0.0 <= s < 1.0:
        raise InvalidInputError(f"mu: s must lie in [0, 1), got {s}")
    t = np.trace(frac_power(S, 1.0 - s) @ frac_power(F, s)).real
    if t <= TRACE_UNDERFLOW:
        return -np.inf
    return float(np.log(t))


def _divided_differences(lam: np.ndarray, s: float) -> np.ndarray:
    """First divided differences of ``t -> t**s`` on the spectrum (Daleckii-Krein kernel)."""
    ls = lam**s
    diff = lam[:, None] - lam[None, :]
    close = np.abs(diff) < DEGENERATE_GAP
    safe = np.where(close, 1.0, diff)
    gamma = (ls[:, None] - ls[None, :]) / safe
    mid = 0.5 * (lam[:, None] + lam[None, :])
    gamma[close] = (s * mid ** (s - 1.0))[close] if s != 1.0 else 1.0
    return gamma


class LogTraceObjective:
    """``phi(F) = scale * aggregate_x [-log Tr(A_x F^power)]``.

    Parameters
    ----------
    operators : array, shape (k, d, d)
        PSD operators ``A_x``.
    weights : array, shape (k,)
        Non-negative weights of the fixed aggregate (ignored terms have weight 0).
    power : float
        Exponent ``s`` applied to ``F``; 1 makes the trace linear in ``F``.
    scale : float
        Positive multiplier ``c``.
    temperature : float, optional
        When given, the aggregate is the smoothed maximum
        ``(1/beta) log sum_x w_x exp(beta * z_x)`` over the active terms instead
        of the weighted sum.
    """

    def __init__(self, operators, weights, power: float, scale: float = 1.0, temperature=None):
        self.operators = np.asarray(operators, dtype=complex)
        self.weights = np.asarray(weights, dtype=float)
        self.power = float(power)
        self.scale = float(scale)
        self.temperature = temperature
        self.active = self.weights > 0
        self.dim = self.operators.shape[1]
        if not 0.0 <= self.power <= 1.0:
            raise InvalidInputError(f"objective power must lie in [0, 1], got {power}")

    def with_temperature(self, temperature) -> "LogTraceObjective":
        return LogTraceObjective(self.operators, self.weights, self.power, self.scale, temperature)

    def traces(self, lam: np.ndarray, vecs: np.ndarray) -> np.ndarray:
        diag = np.einsum("ji,xjk,ki->xi", vecs.conj(), self.operators, vecs).real
        return diag @ (lam**self.power if self.power > 0 else (lam > 0).astype(float))

    def _aggregate(self, z: np.ndarray):
        """Value and per-term weights ``d value / d z`` of the aggregate."""
        w = self.weights[self.active]
        if self.temperature is None:
            return float(w @ z), w
        beta = float(self.temperature)
        top = z.max()
        e = w * np.exp(beta * (z - top))
        total = e.sum()
        return top + np.log(total) / beta, e / total

    def evaluate(self, lam: np.ndarray, vecs: np.ndarray, grad: bool = True):
        """Objective (and gradient) at ``F = vecs @ diag(lam) @ vecs^H``."""
        t = self.traces(lam, vecs)[self.active]
        if np.any(t <= TRACE_UNDERFLOW):
            return np.inf, None
        z = -np.log(t)
        value, omega = self._aggregate(z)
        value *= self.scale
        if not grad:
            return value, None
        coef = -self.scale * omega / t
        h = np.einsum("x,xij->ij", coef, self.operators[self.active])
        if self.power == 0.0:
            return value, np.zeros_like(h)
        h_eig = vecs.conj().T @ h @ vecs
        gamma = _divided_differences(lam, self.power)
        g = vecs @ (gamma * h_eig) @ vecs.conj().T
        return value, (g + g.conj().T) / 2

    def __call__(self, F, grad: bool = True):
        F = np.asarray(F, dtype=complex)
        lam, vecs = np.linalg.eigh((F + F.conj().T) / 2)
        lam = np.clip(lam, 0.0, None)
        return self.evaluate(lam, vecs, grad)

    def value(self, F) -> float:
        return self(F, grad=False)[0]


def e0_operators(ch: CQChannel, rho: float) -> np.ndarray:
    alpha = 1.0 / (1.0 + rho)
    return np.array([frac_power(s, alpha) for s in ch.states])


def e0_objective_fn(ch: CQChannel, P, rho: float, temperature=None) -> LogTraceObjective:
    if rho < 0:
        raise InvalidInputError(f"rho must be non-negative, got {rho}")
    P = check_probability(P)
    if P.size != ch.alphabet_size:
        raise InvalidInputError(
            f"composition length {P.size} does not match alphabet size {ch.alphabet_size}"
        )
    return LogTraceObjective(
        e0_operators(ch, rho), P, renyi_s(rho), 1.0 + rho, temperature=temperature
    )


def e0_objective(F, ch: CQChannel, P, rho: float) -> float:
    """Value of the E0cc objective at the density operator ``F`` (``+inf`` if an active trace vanishes)."""
    F = check_density(F)
    if F.shape[0] != ch.dim:
        raise InvalidInputError("e0_objective: F dimension differs from the channel dimension")
    return e0_objective_fn(ch, P, rho).value(F)


def e0_gradient(F, ch: CQChannel, P, rho: float) -> np.ndarray:
    """Hermitian gradient of the E0cc objective at a positive definite ``F``.

    ``phi(F + t D) = phi(F) + t Tr(G D) + o(t)`` for Hermitian ``D``.
    """
    F = check_density(F)
    lam, vecs = np.linalg.eigh(F)
    if lam[0] <= 0.0:
        raise InvalidInputError("e0_gradient: F must be positive definite")
    value, g = e0_objective_fn(ch, P, rho).evaluate(lam, vecs)
    if not np.isfinite(value):
        raise InvalidInputError("e0_gradient: objective is infinite at F")
    return g


def frank_wolfe_gap(F_lam, F_vecs, G) -> float:
    """``Tr(F G) - lambda_min(G)``; upper-bounds ``phi(F) - min phi`` for convex ``phi``."""
    trfg = float(np.einsum("i,ji,jk,ki->", F_lam, F_vecs.conj(), G, F_vecs).real)
    return max(trfg - np.linalg.eigvalsh(G)[0], 0.0)


def _run(objective, lam, vecs, cfg: SolverConfig, track: bool):
    d = lam.size
    value, g = objective.evaluate(lam, vecs)
    if not np.isfinite(value):
        return SolveReport(
            value, (vecs * lam) @ vecs.conj().T, 0, False, np.inf, infinite=True, stalled=True
        )
    history = [value] if track else []
    spread = np.ptp(np.linalg.eigvalsh(g))
    eta = cfg.step_init / max(spread, 1e-12)
    gap = frank_wolfe_gap(lam, vecs, g)
    tol = cfg.grad_tol * max(1.0, getattr(objective, "scale", 1.0))
    stalled = False
    it = 0
    while it < cfg.max_iters and gap > tol:
        it += 1
        log_f = (vecs * np.log(lam)) @ vecs.conj().T
        accepted = False
        for _ in range(60):
            m = log_f - eta * g
            mu_, new_vecs = np.linalg.eigh((m + m.conj().T) / 2)
            new_lam = np.exp(mu_ - mu_.max())
            new_lam /= new_lam.sum()
            if new_lam.min() < EIG_FLOOR:
                new_lam = (1.0 - RECENTER_WEIGHT) * new_lam + RECENTER_WEIGHT / d
            new_value, new_g = objective.evaluate(new_lam, new_vecs)
            if new_value < value:
                accepted = True
            elif new_value <= value + ROUNDOFF * max(1.0, abs(value)):
                # at round-off level only a smaller certified gap justifies the move
                accepted = frank_wolfe_gap(new_lam, new_vecs, new_g) < 0.5 * gap
            if accepted:
                break
            eta *= 0.5
        if not accepted:
            stalled = True
            break
        lam, vecs, value, g = new_lam, new_vecs, min(new_value, value), new_g
        if track:
            history.append(value)
        gap = frank_wolfe_gap(lam, vecs, g)
        eta = min(eta * 2.0, 1e8)
    argmin = (vecs * lam) @ vecs.conj().T
    return SolveReport(
        float(value),
        (argmin + argmin.conj().T) / 2,
        it,
        gap <= tol,
        gap,
        stalled=stalled,
        history=history,
    )


def _interior(F, d: int):
    F = np.asarray(F, dtype=complex)
    lam, vecs = np.linalg.eigh((F + F.conj().T) / 2)
    lam = np.clip(lam, 0.0, None)
    lam = lam / lam.sum()
    lam = (1.0 - RECENTER_WEIGHT) * lam + RECENTER_WEIGHT / d
    return lam, vecs


def minimize_over_density(
    objective, dim: int, cfg: SolverConfig | None = None, init=None, track: bool = False
) -> SolveReport:
    """Minimize a convex objective over ``dim x dim`` density operators.

    Entropic mirror descent ``F <- exp(log F - eta G) / Tr(...)`` with step
    halving until the objective decreases; the step doubles after each accepted
    move. Stops once the Frank-Wolfe gap ``Tr(F G) - lambda_min(G)`` (a bound on
    the suboptimality) drops below ``cfg.grad_tol`` times the objective's
    ``scale`` (when it has one), or when no step size decreases the objective
    any more (round-off floor). Iterates stay strictly positive.

    The first run starts from ``init`` (default ``I / dim``). Further seeded
    random starts, up to ``cfg.restarts`` runs in total, are tried only when a
    run hits ``cfg.max_iters`` without certifying convergence; the best value wins.

    ``objective`` either exposes ``evaluate(lam, vecs, grad=True)`` (as
    :class:`LogTraceObjective` does) or is a callable ``F -> (value, gradient)``.
    """
    cfg = cfg or SolverConfig()
    if not hasattr(objective, "evaluate"):
        objective = _CallableObjective(objective)
    rng = np.random.default_rng(cfg.seed)
    starts = [init if init is not None else np.eye(dim) / dim]
    best = None
    for k in range(cfg.restarts):
        if k >= len(starts):
            g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
            rnd = g @ g.conj().T
            starts.append(0.5 * rnd / np.trace(rnd).real + 0.5 * np.eye(dim) / dim)
        lam, vecs = _interior(starts[k], dim)
        report = _run(objective, lam, vecs, cfg, track)
        if best is None or report.value < best.value:
            if best is not None:
                report.iterations += best.iterations
            best = report
        else:
            best.iterations += report.iterations
        if best.converged or best.stalled:
            break
    return best


class _CallableObjective:
    def __init__(self, fn):
        self.fn = fn

    def evaluate(self, lam, vecs, grad=True):
        F = (vecs * lam) @ vecs.conj().T
        value, g = self.fn(F)
        if g is not None:
            g = np.asarray(g, dtype=complex)
            g = (g + g.conj().T) / 2
        return value, g
