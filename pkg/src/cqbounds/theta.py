"""Marton's theta function, its projector variant and the logarithmic Lovasz theta.

Representations follow the channel picture: vectors attached to
non-confusable (non-adjacent) inputs must be orthogonal. Values are in nats.

The searches are nonconvex. Vectors are optimized with L-BFGS under an
augmented-Lagrangian penalty on the orthogonality constraints, then repaired
to exact feasibility by sequential orthogonalization, and the value is
recomputed on the repaired witness. Every reported value therefore belongs to
a verified feasible representation; it is the best value found, not a
certified global minimum.
"""

from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize

from .channel import ConfusabilityGraph, check_probability
from .linalg import InvalidInputError, check_density, purify
from .renyi import LogTraceObjective, SolverConfig, minimize_over_density

ORTHO_TOL = 1e-8
UNIT_TOL = 1e-10
TEMPERATURES = (10.0, 1e2, 1e3, 1e4)
POLISH_CANDIDATES = 4


@dataclass(frozen=True)
class ThetaConfig:
    restarts: int = 32
    seed: int = 0
    rank_cap: int = 2
    penalties: tuple = (10.0, 1e2, 1e3, 1e4, 1e5, 1e6)
    lbfgs_iters: int = 500
    real: bool = False
    solver: SolverConfig = SolverConfig(max_iters=500, restarts=1)

    def with_(self, **kwargs) -> "ThetaConfig":
        return replace(self, **kwargs)


@dataclass(frozen=True)
class OrthonormalRepresentation:
    """Unit vectors ``vectors[x]`` and handle ``handle``; non-adjacent pairs are orthogonal."""

    vectors: np.ndarray
    handle: np.ndarray
    graph: ConfusabilityGraph

    def __post_init__(self):
        u = np.asarray(self.vectors, dtype=complex)
        f = np.asarray(self.handle, dtype=complex)
        if u.ndim != 2 or u.shape[0] != self.graph.n or f.shape != (u.shape[1],):
            raise InvalidInputError("representation: vectors must be (n, d) and the handle (d,)")
        if np.max(np.abs(np.linalg.norm(u, axis=1) - 1.0)) > UNIT_TOL:
            raise InvalidInputError("representation: vectors must have unit norm")
        if abs(np.linalg.norm(f) - 1.0) > UNIT_TOL:
            raise InvalidInputError("representation: handle must have unit norm")
        viol = orthogonality_violation(u.conj() @ u.T, self.graph)
        if viol > ORTHO_TOL:
            raise InvalidInputError(
                f"representation: non-adjacent overlap {viol:.3e} exceeds {ORTHO_TOL:.0e}"
            )
        object.__setattr__(self, "vectors", u)
        object.__setattr__(self, "handle", f)

    def point(self) -> np.ndarray:
        """``f(x) = |<u_x|f>|^2``, a point of the theta body."""
        return np.abs(self.vectors.conj() @ self.handle) ** 2

    def to_dict(self, value: float | None = None) -> dict:
        out = {
            "u": [{"re": v.real.tolist(), "im": v.imag.tolist()} for v in self.vectors],
            "f": {"re": self.handle.real.tolist(), "im": self.handle.imag.tolist()},
        }
        if value is not None:
            out["value_nats"] = value
        return out


@dataclass(frozen=True)
class ProjectorRepresentation:
    """Projectors ``projectors[x]`` whose ranges are orthogonal for non-adjacent pairs, and a state."""

    projectors: np.ndarray
    state: np.ndarray
    graph: ConfusabilityGraph

    def __post_init__(self):
        U = np.asarray(self.projectors, dtype=complex)
        F = check_density(self.state)
        if U.ndim != 3 or U.shape[0] != self.graph.n or U.shape[1:] != F.shape:
            raise InvalidInputError("projector representation: shape mismatch")
        for x, u in enumerate(U):
            if np.max(np.abs(u @ u - u)) > 1e-9 or np.max(np.abs(u - u.conj().T)) > 1e-12:
                raise InvalidInputError(f"projector representation: U_{x} is not a projector")
        overlaps = np.einsum("xij,yji->xy", U, U).real
        viol = orthogonality_violation(overlaps, self.graph)
        if viol > ORTHO_TOL:
            raise InvalidInputError(
                f"projector representation: Tr(U_x U_y) = {viol:.3e} on a non-adjacent pair"
            )
        object.__setattr__(self, "projectors", U)
        object.__setattr__(self, "state", F)

    def point(self) -> np.ndarray:
        return np.einsum("xij,ji->x", self.projectors, self.state).real


class ThetaValue(NamedTuple):
    value: float
    witness: object


def orthogonality_violation(overlaps: np.ndarray, graph: ConfusabilityGraph) -> float:
    mask = graph.non_adjacent_mask()
    if not mask.any():
        return 0.0
    return float(np.max(np.abs(overlaps[mask])))


def j_functional(f, P) -> float:
    """``J(f, P) = sum_x P(x) log 1/f(x)``; ``+inf`` if ``f`` vanishes where ``P`` is positive."""
    f = np.asarray(f, dtype=float)
    P = check_probability(P)
    if f.shape != P.shape:
        raise InvalidInputError("j_functional: f and P differ in length")
    active = P > 0
    if np.any(f[active] <= 0):
        return np.inf
    return float(-(P[active] @ np.log(f[active])))


def _check_inputs(G: ConfusabilityGraph, P):
    P = check_probability(P)
    if P.size != G.n:
        raise InvalidInputError(f"composition length {P.size} does not match graph order {G.n}")
    return P


# -- rank-one search -------------------------------------------------------


def _unpack(z: np.ndarray, d: int, n: int, real: bool) -> np.ndarray:
    if real:
        return z.reshape(d, n).astype(complex)
    return (z[: d * n] + 1j * z[d * n :]).reshape(d, n)


def _pack(g: np.ndarray, real: bool) -> np.ndarray:
    if real:
        return g.real.ravel()
    return np.concatenate([g.real.ravel(), g.imag.ravel()])


class _RankOneProblem:
    """Columns ``v_x`` (normalized internally), handle fixed to ``e_0``.

    ``weights`` gives the fixed aggregate ``sum_x w_x z_x`` with
    ``z_x = -log |u_x[0]|^2``; with ``temperature`` set, the aggregate becomes
    the smoothed maximum of ``z``.
    """

    def __init__(self, graph: ConfusabilityGraph, weights, real: bool):
        self.mask = graph.non_adjacent_mask().astype(float)
        self.n = graph.n
        self.d = graph.n
        self.weights = np.asarray(weights, dtype=float)
        self.real = real
        self.temperature = None
        self.mu = 0.0
        self.lam = np.zeros((self.n, self.n), dtype=complex)

    def aggregate(self, z):
        if self.temperature is None:
            return float(self.weights @ z), self.weights
        beta = self.temperature
        top = z.max()
        e = np.exp(beta * (z - top))
        return top + np.log(e.sum()) / beta, e / e.sum()

    def fun(self, params):
        V = _unpack(params, self.d, self.n, self.real)
        r = np.linalg.norm(V, axis=0)
        U = V / r
        a = U[0]
        a2 = np.abs(a) ** 2
        if np.any(a2 <= 1e-300):
            return np.inf, np.zeros_like(params)
        z = -np.log(a2)
        val, omega = self.aggregate(z)
        gu = np.zeros_like(U)
        gu[0] = -2.0 * omega * a / a2
        C = U.conj().T @ U
        mC = self.mask * C
        val += 0.5 * float(np.sum(np.real(self.lam.conj() * mC)) + 0.5 * self.mu * np.sum(np.abs(mC) ** 2))
        gu += U @ (self.mask * (self.lam + self.mu * C))
        proj = np.real(np.sum(U.conj() * gu, axis=0))
        gv = (gu - U * proj) / r
        return val, _pack(gv, self.real)

    def constraint(self, params):
        V = _unpack(params, self.d, self.n, self.real)
        U = V / np.linalg.norm(V, axis=0)
        return self.mask * (U.conj().T @ U)


def _repair_vectors(U: np.ndarray, graph: ConfusabilityGraph) -> np.ndarray | None:
    """Sequentially project each column off the earlier non-adjacent columns."""
    U = U / np.linalg.norm(U, axis=0)
    out = np.zeros_like(U)
    mask = graph.non_adjacent_mask()
    for x in range(graph.n):
        v = U[:, x].copy()
        earlier = [y for y in range(x) if mask[x, y]]
        if earlier:
            Q, _ = np.linalg.qr(out[:, earlier])
            v = v - Q @ (Q.conj().T @ v)
        nv = np.linalg.norm(v)
        if nv < 1e-8:
            return None
        out[:, x] = v / nv
    return out


def _optimize_rank_one(problem: _RankOneProblem, V0: np.ndarray, cfg: ThetaConfig, temps=None):
    params = _pack(V0, problem.real)
    problem.lam = np.zeros((problem.n, problem.n), dtype=complex)
    temps = temps or [None] * len(cfg.penalties)
    for k, mu in enumerate(cfg.penalties):
        problem.mu = mu
        problem.temperature = temps[min(k, len(temps) - 1)]
        res = minimize(
            problem.fun,
            params,
            jac=True,
            method="L-BFGS-B",
            options={"maxiter": cfg.lbfgs_iters, "gtol": 1e-10, "ftol": 1e-15},
        )
        params = res.x
        problem.lam = problem.lam + mu * problem.constraint(params)
    V = _unpack(params, problem.d, problem.n, problem.real)
    return V / np.linalg.norm(V, axis=0)


def _rank_one_witness(U: np.ndarray, graph: ConfusabilityGraph):
    fixed = _repair_vectors(U, graph)
    if fixed is None:
        return None
    handle = np.zeros(fixed.shape[0], dtype=complex)
    handle[0] = 1.0
    return OrthonormalRepresentation(fixed.T.copy(), handle, graph)


def _random_start(rng, d, n, real):
    V = rng.normal(size=(d, n))
    if not real:
        V = V + 1j * rng.normal(size=(d, n))
    V[0] += 1.0  # keep every overlap with the handle away from zero
    return V


def _polish_min_max(problem: _RankOneProblem, U: np.ndarray) -> np.ndarray:
    """Epigraph form ``min t`` s.t. ``z_x <= t`` and exact orthogonality, solved by SLSQP."""
    n, real = problem.n, problem.real
    mask = np.triu(problem.mask, 1).astype(bool)
    z0 = -np.log(np.maximum(np.abs(U[0]) ** 2, 1e-300))
    x0 = np.concatenate([_pack(U, real), [z0.max()]])

    def split(x):
        V = _unpack(x[:-1], problem.d, n, real)
        r = np.linalg.norm(V, axis=0)
        return V / r, r

    def ineq(x):
        Uc, _ = split(x)
        return x[-1] + np.log(np.maximum(np.abs(Uc[0]) ** 2, 1e-300))

    def ineq_jac(x):
        Uc, r = split(x)
        jac = np.zeros((n, x.size))
        for k in range(n):
            gu = np.zeros_like(Uc)
            a = Uc[0, k]
            gu[0, k] = -2.0 * a / max(abs(a) ** 2, 1e-300)
            proj = np.real(np.sum(Uc.conj() * gu, axis=0))
            gv = (gu - Uc * proj) / r
            jac[k, :-1] = -_pack(gv, real)
            jac[k, -1] = 1.0
        return jac

    def eq(x):
        Uc, _ = split(x)
        c = (Uc.conj().T @ Uc)[mask]
        return c.real if real else np.concatenate([c.real, c.imag])

    cons = [{"type": "ineq", "fun": ineq, "jac": ineq_jac}]
    if mask.any():
        cons.append({"type": "eq", "fun": eq})
    grad_t = np.zeros(x0.size)
    grad_t[-1] = 1.0
    res = minimize(
        lambda x: x[-1],
        x0,
        jac=lambda x: grad_t,
        method="SLSQP",
        constraints=cons,
        options={"maxiter": 300, "ftol": 1e-14},
    )
    return split(res.x)[0]


def _rank_one_search(G, weights, cfg: ThetaConfig, score, temps=None, starts=None, polish=False):
    rng = np.random.default_rng(cfg.seed)
    problem = _RankOneProblem(G, weights, cfg.real)
    found = []
    initial = list(starts or [])
    for k in range(max(cfg.restarts, len(initial))):
        V0 = initial[k] if k < len(initial) else _random_start(rng, problem.d, problem.n, cfg.real)
        U = _optimize_rank_one(problem, V0, cfg, temps)
        rep = _rank_one_witness(U, G)
        if rep is not None:
            found.append((score(rep.point()), k, U, rep))
    if not found:
        raise InvalidInputError("theta search: no feasible representation found")
    found.sort(key=lambda item: (item[0], item[1]))
    best_val, _, _, best_rep = found[0]
    if polish:
        for _, _, U, _ in found[:POLISH_CANDIDATES]:
            rep = _rank_one_witness(_polish_min_max(problem, U), G)
            if rep is not None and score(rep.point()) < best_val:
                best_val, best_rep = score(rep.point()), rep
    return ThetaValue(best_val, best_rep)


def _as_start(rep: OrthonormalRepresentation) -> np.ndarray:
    """Rotate a witness so that its handle becomes ``e_0`` (columns are the vectors)."""
    u, f = rep.vectors, rep.handle
    d = u.shape[1]
    basis = np.eye(d, dtype=complex)
    basis[:, 0] = f
    Q, _ = np.linalg.qr(basis)
    Q[:, 0] *= (Q[:, 0].conj() @ f) / abs(Q[:, 0].conj() @ f)
    V = Q.conj().T @ u.T
    n = V.shape[1]
    if d >= n:
        return V[:n]
    return np.vstack([V, np.zeros((n - d, n))])


def theta_marton(G: ConfusabilityGraph, P, cfg: ThetaConfig | None = None, starts=None) -> ThetaValue:
    """``min over representations and handles of sum_x P(x) log 1/|<u_x|f>|^2``."""
    cfg = cfg or ThetaConfig()
    P = _check_inputs(G, P)
    init = [_as_start(s) for s in starts] if starts else None
    return _rank_one_search(G, P, cfg, lambda f: j_functional(f, P), starts=init)


def theta_lovasz(G: ConfusabilityGraph, cfg: ThetaConfig | None = None) -> ThetaValue:
    """Logarithmic Lovasz theta ``min over representations of max_x log 1/|<u_x|f>|^2``.

    The maximum is smoothed by log-sum-exp with rising temperature during the
    penalty rounds; the best candidates are then polished in epigraph form.
    """
    cfg = cfg or ThetaConfig()
    temps = list(TEMPERATURES) + [TEMPERATURES[-1]] * (len(cfg.penalties) - len(TEMPERATURES))

    def score(f):
        return float(np.max(-np.log(np.maximum(f, 1e-300))))

    return _rank_one_search(G, np.ones(G.n) / G.n, cfg, score, temps=temps, polish=True)


class MaxPValue(NamedTuple):
    value: float
    composition: np.ndarray
    witness: OrthonormalRepresentation
    lovasz: float
    gap: float


def max_p_theta(
    G: ConfusabilityGraph, cfg: ThetaConfig | None = None, iters: int = 60, step: float = 1.0
) -> MaxPValue:
    """``max_P theta(G, P)`` by mirror ascent on the composition.

    The ascent direction is ``log 1/f*(x)`` for the inner optimal theta-body
    point ``f*`` (the derivative of the concave map ``P -> theta(G, P)``).
    Inner solves are warm-started from the previous witness; the best
    composition is re-evaluated with the full multi-start search.
    """
    cfg = cfg or ThetaConfig()
    warm = cfg.with_(restarts=2)
    P = np.ones(G.n) / G.n
    cur = theta_marton(G, P, cfg)
    best_val, best_P = cur.value, P
    for k in range(1, iters + 1):
        z = -np.log(np.maximum(cur.witness.point(), 1e-300))
        spread = np.ptp(z)
        if spread < 1e-9:
            break
        logits = np.log(np.maximum(P, 1e-300)) + step / np.sqrt(k) * z / spread
        P = np.exp(logits - logits.max())
        P /= P.sum()
        cur = theta_marton(G, P, warm, starts=[cur.witness])
        if cur.value > best_val:
            best_val, best_P = cur.value, P
    final = theta_marton(G, best_P, cfg, starts=[cur.witness])
    lov = theta_lovasz(G, cfg).value
    return MaxPValue(final.value, best_P, final.witness, lov, abs(final.value - lov))


# -- projector search ------------------------------------------------------


def _projector(B: np.ndarray) -> np.ndarray:
    Q, _ = np.linalg.qr(B)
    return Q @ Q.conj().T


class _ProjectorProblem:
    def __init__(self, graph, P, ranks, d, real):
        self.graph = graph
        self.P = P
        self.ranks = list(ranks)
        self.d = d
        self.real = real
        self.pairs = [(x, y) for x in range(graph.n) for y in range(x + 1, graph.n)
                      if graph.non_adjacent_mask()[x, y]]
        self.offsets = np.cumsum([0] + [d * r for r in self.ranks])
        self.size = self.offsets[-1] + d * d
        self.mu = 0.0
        self.lam = np.zeros(len(self.pairs))

    def split(self, params):
        if self.real:
            flat = params.astype(complex)
        else:
            half = params.size // 2
            flat = params[:half] + 1j * params[half:]
        Bs = [flat[self.offsets[x]: self.offsets[x + 1]].reshape(self.d, r)
              for x, r in enumerate(self.ranks)]
        W = flat[self.offsets[-1]:].reshape(self.d, self.d)
        return Bs, W

    def join(self, Bs, W):
        flat = np.concatenate([b.ravel() for b in Bs] + [W.ravel()])
        return _pack(flat, self.real)

    def fun(self, params):
        Bs, W = self.split(params)
        eye = np.eye(self.d)
        grams = [np.linalg.inv(b.conj().T @ b) for b in Bs]
        U = [b @ g @ b.conj().T for b, g in zip(Bs, grams)]
        N = float(np.sum(np.abs(W) ** 2))
        F = W @ W.conj().T / N
        t = np.array([np.trace(u @ F).real for u in U])
        active = self.P > 0
        if np.any(t[active] <= 1e-300):
            return np.inf, np.zeros_like(params)
        val = -float(self.P[active] @ np.log(t[active]))
        gB = [np.zeros_like(b) for b in Bs]
        K = np.zeros((self.d, self.d), dtype=complex)
        for x in np.nonzero(active)[0]:
            c = self.P[x] / t[x]
            K += c * U[x]
            gB[x] += -c * 2.0 * (eye - U[x]) @ F @ Bs[x] @ grams[x]
        gW = (2.0 / N) * (W - K @ W)
        for k, (x, y) in enumerate(self.pairs):
            txy = np.trace(U[x] @ U[y]).real
            val += self.lam[k] * txy + 0.5 * self.mu * txy**2
            c = self.lam[k] + self.mu * txy
            gB[x] += c * 2.0 * (eye - U[x]) @ U[y] @ Bs[x] @ grams[x]
            gB[y] += c * 2.0 * (eye - U[y]) @ U[x] @ Bs[y] @ grams[y]
        return val, self.join(gB, gW)

    def constraints(self, params):
        Bs, _ = self.split(params)
        U = [_projector(b) for b in Bs]
        return np.array([np.trace(U[x] @ U[y]).real for x, y in self.pairs])


def _repair_projectors(Bs, graph: ConfusabilityGraph):
    mask = graph.non_adjacent_mask()
    Qs = []
    for x, B in enumerate(Bs):
        earlier = [Qs[y] for y in range(x) if mask[x, y]]
        if earlier:
            E = np.hstack(earlier)
            Qe, _ = np.linalg.qr(E)
            B = B - Qe @ (Qe.conj().T @ B)
        u, s, _ = np.linalg.svd(B, full_matrices=False)
        keep = s > 1e-8 * max(s.max(), 1e-300)
        if not keep.any():
            return None
        Qs.append(u[:, keep])
    return [q @ q.conj().T for q in Qs]


def _inner_state(projectors, P, cfg: ThetaConfig, init=None):
    obj = LogTraceObjective(projectors, P, 1.0, 1.0)
    return minimize_over_density(obj, projectors.shape[1], cfg.solver, init=init)


def theta_sp(G: ConfusabilityGraph, P, cfg: ThetaConfig | None = None) -> ThetaValue:
    """``inf over projector representations and states of sum_x P(x) log 1/Tr(U_x F)``.

    Candidates are the rank-one optimum of :func:`theta_marton` (lifted to
    projectors and a pure state) and searches with projector ranks drawn from
    ``1..rank_cap``. For every candidate the state is re-optimized by the
    convex density-operator solver.
    """
    cfg = cfg or ThetaConfig()
    P = _check_inputs(G, P)
    n = G.n
    d = cfg.rank_cap * n
    rng = np.random.default_rng(cfg.seed + 1)
    candidates = []

    marton = theta_marton(G, P, cfg).witness
    lift = np.zeros((n, d), dtype=complex)
    lift[:, :n] = marton.vectors
    h = np.zeros(d, dtype=complex)
    h[:n] = marton.handle
    candidates.append((np.einsum("xi,xj->xij", lift, lift.conj()), np.outer(h, h.conj())))

    for _ in range(max(1, cfg.restarts // 4)):
        ranks = rng.integers(1, cfg.rank_cap + 1, size=n)
        prob = _ProjectorProblem(G, P, ranks, d, cfg.real)
        Bs = []
        for r in ranks:
            B = rng.normal(size=(d, r)) + (0 if cfg.real else 1j * rng.normal(size=(d, r)))
            Bs.append(B)
        W = rng.normal(size=(d, d)) + (0 if cfg.real else 1j * rng.normal(size=(d, d)))
        params = prob.join(Bs, W)
        for mu in cfg.penalties:
            prob.mu = mu
            res = minimize(prob.fun, params, jac=True, method="L-BFGS-B",
                           options={"maxiter": cfg.lbfgs_iters, "gtol": 1e-10, "ftol": 1e-15})
            params = res.x
            prob.lam = prob.lam + mu * prob.constraints(params)
        Bs, W = prob.split(params)
        U = _repair_projectors(Bs, G)
        if U is None:
            continue
        F = W @ W.conj().T
        candidates.append((np.array(U), F / np.trace(F).real))

    best_val, best_rep = np.inf, None
    for U, F in candidates:
        rep = _inner_state(U, P, cfg, init=F)
        if rep.value < best_val:
            state = (rep.argmin + rep.argmin.conj().T) / 2
            best_val = rep.value
            best_rep = ProjectorRepresentation(U, state / np.trace(state).real, G)
    if best_rep is None:
        raise InvalidInputError("theta_sp: no feasible projector representation found")
    return ThetaValue(j_functional(best_rep.point(), P), best_rep)


def purify_to_rank_one(pr: ProjectorRepresentation) -> OrthonormalRepresentation:
    """Rank-one representation with ``|<w_x|psi>|^2 = Tr(U_x F)`` via a purification of ``F``.

    ``w_x = (U_x (x) 1) psi / ||(U_x (x) 1) psi||`` with ``psi`` the canonical
    purification of the state.
    """
    psi = purify(pr.state)
    d = pr.state.shape[0]
    eye = np.eye(d)
    ws = []
    for x, U in enumerate(pr.projectors):
        w = np.kron(U, eye) @ psi
        norm = np.linalg.norm(w)
        if norm**2 <= 1e-300:
            raise InvalidInputError(f"purify_to_rank_one: Tr(U_{x} F) = 0, w_{x} undefined")
        ws.append(w / norm)
    return OrthonormalRepresentation(np.array(ws), psi, pr.graph)


def _as_projector_rep(r) -> ProjectorRepresentation:
    if isinstance(r, ProjectorRepresentation):
        return r
    U = np.einsum("xi,xj->xij", r.vectors, r.vectors.conj())
    return ProjectorRepresentation(U, np.outer(r.handle, r.handle.conj()), r.graph)


def direct_sum_mix(r1, r2, p: float) -> ProjectorRepresentation:
    """``U_x = U1_x (+) U2_x`` and ``F = p F1 (+) (1-p) F2``, realizing ``p f1 + (1-p) f2``."""
    if not 0.0 <= p <= 1.0:
        raise InvalidInputError(f"mixing weight must lie in [0, 1], got {p}")
    if not np.array_equal(r1.graph.adjacency, r2.graph.adjacency):
        raise InvalidInputError("direct_sum_mix: representations belong to different graphs")
    a, b = _as_projector_rep(r1), _as_projector_rep(r2)
    d1, d2 = a.state.shape[0], b.state.shape[0]
    n = a.graph.n
    U = np.zeros((n, d1 + d2, d1 + d2), dtype=complex)
    U[:, :d1, :d1] = a.projectors
    U[:, d1:, d1:] = b.projectors
    F = np.zeros((d1 + d2, d1 + d2), dtype=complex)
    F[:d1, :d1] = p * a.state
    F[d1:, d1:] = (1.0 - p) * b.state
    return ProjectorRepresentation(U, F, a.graph)
