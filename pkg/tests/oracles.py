"""Independent reference computations used by the tests.

Nothing here calls into the package's solvers: every value is obtained by
grid search, enumeration, closed forms or a generic convex solver.
"""

import numpy as np

LOG2 = np.log(2.0)


def entropy(p) -> float:
    p = np.asarray(p, dtype=float)
    p = p[p > 0]
    return float(-np.sum(p * np.log(p)))


def binary_kl_oracle(P, W, rates, step=1e-3):
    """``min_{V: I(P,V) <= R} D(V || W | P)`` over a grid of binary-input binary-output ``V``."""
    P = np.asarray(P, dtype=float)
    W = np.asarray(W, dtype=float)
    g = np.round(np.arange(0.0, 1.0 + step / 2, step), 12)
    a, b = np.meshgrid(g, g, indexing="ij")  # V(1|0) = a, V(1|1) = b
    v = np.stack([np.stack([1 - a, a], -1), np.stack([1 - b, b], -1)], axis=-2)  # (.., x, y)
    with np.errstate(divide="ignore", invalid="ignore"):
        d = np.where(v > 0, v * np.log(v / W), 0.0)
        D = np.einsum("x,...xy->...", P, d)
        q = np.einsum("x,...xy->...y", P, v)
        mi = np.where(v > 0, v * np.log(v / q[..., None, :]), 0.0)
        I = np.einsum("x,...xy->...", P, mi)
    D, I = D.ravel(), I.ravel()
    order = np.argsort(I)
    run_min = np.minimum.accumulate(D[order])
    idx = np.searchsorted(I[order], np.asarray(rates) + 1e-15, side="right") - 1
    return run_min[idx]


def convex_kl_oracle(P, W, R):
    """Same quantity for arbitrary shapes, as an exponential-cone program."""
    import cvxpy as cp

    P = np.asarray(P, dtype=float)
    W = np.asarray(W, dtype=float)
    nx, ny = W.shape
    V = cp.Variable((nx, ny), nonneg=True)
    q = P @ V
    D = sum(P[x] * cp.sum(cp.rel_entr(V[x], W[x])) for x in range(nx))
    I = sum(P[x] * cp.sum(cp.rel_entr(V[x], q)) for x in range(nx))
    prob = cp.Problem(cp.Minimize(D), [cp.sum(V, axis=1) == 1, I <= R])
    prob.solve(solver=cp.CLARABEL)
    return float(prob.value)


def coarse_kl_grid(P, W, R, step=0.02):
    """Brute-force grid for a 2 x 3 channel, used to sanity-check the convex oracle."""
    P = np.asarray(P, dtype=float)
    W = np.asarray(W, dtype=float)
    g = np.arange(0.0, 1.0 + step / 2, step)
    simplex = np.array([(a, b, 1 - a - b) for a in g for b in g if a + b <= 1 + 1e-12])
    simplex = np.clip(simplex, 0.0, None)
    v0 = simplex[:, None, :]
    v1 = simplex[None, :, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        d0 = np.where(v0 > 0, v0 * np.log(v0 / W[0]), 0.0).sum(-1)
        d1 = np.where(v1 > 0, v1 * np.log(v1 / W[1]), 0.0).sum(-1)
        D = P[0] * d0 + P[1] * d1
        q = P[0] * v0 + P[1] * v1
        i0 = np.where(v0 > 0, v0 * np.log(v0 / q), 0.0).sum(-1)
        i1 = np.where(v1 > 0, v1 * np.log(v1 / q), 0.0).sum(-1)
        I = P[0] * i0 + P[1] * i1
    return float(np.min(np.where(I <= R, D, np.inf)))


def bloch_e0_oracle(vectors, P, rho, n_r=100, n_theta=100, n_phi=100):
    """``E0cc`` of a qubit pure-state channel by grid search over the Bloch ball.

    ``F = (I + r n.sigma)/2`` has ``F^s = a I + b n.sigma`` with
    ``a, b = (l+^s +- l-^s)/2``, so ``<psi|F^s|psi> = a + b n.m_psi``.
    """
    vectors = np.asarray(vectors, dtype=complex)
    s = rho / (1.0 + rho)
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]])
    sz = np.diag([1.0, -1.0]).astype(complex)
    m = np.array([[np.real(v.conj() @ sig @ v) for sig in (sx, sy, sz)] for v in vectors])
    r = np.linspace(0.0, 1.0, n_r)
    th = np.linspace(0.0, np.pi, n_theta)
    ph = np.linspace(0.0, 2 * np.pi, n_phi, endpoint=False)
    R, TH, PH = np.meshgrid(r, th, ph, indexing="ij")
    n = np.stack([np.sin(TH) * np.cos(PH), np.sin(TH) * np.sin(PH), np.cos(TH)], -1)
    lp, lm = (1 + R) / 2, (1 - R) / 2
    a = (lp**s + lm**s) / 2
    b = (lp**s - lm**s) / 2
    val = np.zeros_like(R)
    for x, mx in enumerate(m):
        tr = a + b * (n @ mx)
        with np.errstate(divide="ignore"):
            val += -(1 + rho) * P[x] * np.log(np.maximum(tr, 0.0))
    return float(np.min(val))


def theta_sdp(adjacency, P=None):
    """Marton theta (``P`` given) or log Lovasz theta (``P=None``) via the theta-body SDP.

    ``OR(G) = {x : Y >= 0, Y_00 = 1, Y_ii = Y_0i = x_i, Y_ij = 0 for non-adjacent i != j}``.
    """
    import cvxpy as cp

    A = np.asarray(adjacency, dtype=bool)
    n = A.shape[0]
    Y = cp.Variable((n + 1, n + 1), symmetric=True)
    cons = [Y >> 0, Y[0, 0] == 1]
    cons += [Y[i + 1, i + 1] == Y[0, i + 1] for i in range(n)]
    cons += [Y[i + 1, j + 1] == 0 for i in range(n) for j in range(i + 1, n) if not A[i, j]]
    x = cp.hstack([Y[0, i + 1] for i in range(n)])
    if P is None:
        t = cp.Variable()
        cons += [t >= -cp.log(x[i]) for i in range(n)]
        prob = cp.Problem(cp.Minimize(t), cons)
    else:
        prob = cp.Problem(cp.Minimize(-sum(P[i] * cp.log(x[i]) for i in range(n) if P[i] > 0)), cons)
    prob.solve(solver=cp.CLARABEL)
    return float(prob.value)


def umbrella_vectors() -> np.ndarray:
    """Lovasz umbrella for the pentagon: unit vectors in R^3, non-adjacent pairs orthogonal."""
    c2 = 1.0 / np.sqrt(5.0)
    ct, st = np.sqrt(c2), np.sqrt(1.0 - c2)
    k = np.arange(5)
    return np.stack([np.full(5, ct), st * np.cos(2 * np.pi * k / 5), st * np.sin(2 * np.pi * k / 5)], 1)


def overlap_channel_vectors(c: float) -> np.ndarray:
    return np.array([[1.0, 0.0], [c, np.sqrt(1.0 - c * c)]])


def random_pure_vectors(rng, n_inputs: int, dim: int) -> np.ndarray:
    v = rng.normal(size=(n_inputs, dim)) + 1j * rng.normal(size=(n_inputs, dim))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def finite_difference_gradient(f, F, h=1e-5) -> np.ndarray:
    """Central differences of a real function of a Hermitian matrix, returned as a Hermitian gradient.

    The gradient ``G`` satisfies ``df = Re Tr(G dF)`` for Hermitian ``dF``.
    """
    d = F.shape[0]
    G = np.zeros((d, d), dtype=complex)
    for i in range(d):
        E = np.zeros((d, d), dtype=complex)
        E[i, i] = 1.0
        G[i, i] = (f(F + h * E) - f(F - h * E)) / (2 * h)
        for j in range(i + 1, d):
            Er = np.zeros((d, d), dtype=complex)
            Er[i, j] = Er[j, i] = 1.0
            Ei = np.zeros((d, d), dtype=complex)
            Ei[i, j], Ei[j, i] = 1j, -1j
            dr = (f(F + h * Er) - f(F - h * Er)) / (2 * h)
            di = (f(F + h * Ei) - f(F - h * Ei)) / (2 * h)
            # Re Tr(G Er) = 2 Re G_ji, Re Tr(G Ei) = -2 Im G_ji (G Hermitian)
            G[j, i] = (dr - 1j * di) / 2
            G[i, j] = np.conj(G[j, i])
    return G
