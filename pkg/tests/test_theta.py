import numpy as np
import pytest

from cqbounds import (
    ConfusabilityGraph,
    PureStateChannel,
    confusability_graph,
    r_infinity,
)
from cqbounds.linalg import InvalidInputError
from cqbounds.theta import (
    OrthonormalRepresentation,
    ProjectorRepresentation,
    ThetaConfig,
    direct_sum_mix,
    j_functional,
    max_p_theta,
    purify_to_rank_one,
    theta_lovasz,
    theta_marton,
    theta_sp,
)

from conftest import GRAPHS
from oracles import entropy, theta_sdp, umbrella_vectors

FAST = ThetaConfig(restarts=8)
C5 = GRAPHS["C5"]


def test_j_functional_examples():
    P = np.array([0.2, 0.3, 0.5])
    assert j_functional(np.ones(3), P) == 0.0
    assert j_functional(P, P) == pytest.approx(entropy(P))
    assert j_functional([0.25, 0.1, 0.9], [1.0, 0, 0]) == pytest.approx(np.log(4))
    assert j_functional([0.0, 0.5, 0.5], P) == np.inf
    assert j_functional([0.0, 0.5, 0.5], [0, 0.5, 0.5]) == pytest.approx(np.log(2))


@pytest.mark.parametrize("name", ["C5", "P4", "E5", "K4"])
def test_marton_matches_sdp(name):
    G = GRAPHS[name]
    P = np.random.default_rng(len(name) + G.n).dirichlet(np.ones(G.n))
    res = theta_marton(G, P, FAST)
    assert res.value == pytest.approx(theta_sdp(G.adjacency, P), abs=1e-4)
    assert j_functional(res.witness.point(), P) == pytest.approx(res.value, abs=1e-12)


@pytest.mark.parametrize("name", ["C5", "P4", "E5", "K4"])
def test_lovasz_matches_sdp(name):
    G = GRAPHS[name]
    assert theta_lovasz(G, FAST).value == pytest.approx(theta_sdp(G.adjacency), abs=1e-4)


def test_marton_c5_uniform_umbrella():
    u = umbrella_vectors()
    rep = OrthonormalRepresentation(u, np.array([1.0, 0, 0]), C5)
    umbrella = j_functional(rep.point(), np.ones(5) / 5)
    assert umbrella == pytest.approx(0.5 * np.log(5), abs=1e-12)
    assert theta_marton(C5, np.ones(5) / 5, FAST).value == pytest.approx(umbrella, abs=1e-4)


def test_marton_real_search_agrees_with_complex():
    P = np.ones(5) / 5
    real = theta_marton(C5, P, FAST.with_(real=True)).value
    cplx = theta_marton(C5, P, FAST).value
    assert real == pytest.approx(cplx, abs=1e-4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_analytic_extremes(n):
    P = np.random.default_rng(n).dirichlet(np.ones(n))
    assert theta_marton(ConfusabilityGraph.complete(n), P, FAST).value <= 1e-6
    assert theta_marton(ConfusabilityGraph.empty(n), P, FAST).value == pytest.approx(entropy(P), abs=1e-4)
    assert theta_lovasz(ConfusabilityGraph.empty(n), FAST).value == pytest.approx(np.log(n), abs=1e-4)


def test_adding_edges_never_increases():
    P = np.ones(5) / 5
    base = theta_marton(C5, P, FAST).value
    more = theta_marton(C5.with_edges([(0, 2)]), P, FAST).value
    assert more <= base + 1e-4


def test_zero_error_consistency():
    ch = PureStateChannel(umbrella_vectors())
    G = confusability_graph(ch)
    for P in np.random.default_rng(9).dirichlet(np.ones(5), size=2):
        assert theta_marton(G, P, FAST).value <= r_infinity(ch, P) + 1e-4


def test_theta_sp_sandwich_and_purification():
    P = np.array([0.1, 0.2, 0.3, 0.4])
    G = GRAPHS["P4"]
    sp = theta_sp(G, P, FAST)
    assert sp.value <= theta_marton(G, P, FAST).value + 1e-6
    rep = purify_to_rank_one(sp.witness)
    np.testing.assert_allclose(rep.point(), sp.witness.point(), atol=1e-9)
    assert j_functional(rep.point(), P) == pytest.approx(sp.value, abs=1e-9)


def test_representation_validation():
    with pytest.raises(InvalidInputError, match="unit"):
        OrthonormalRepresentation(np.array([[2.0, 0], [0, 1]]), np.array([1.0, 0]), ConfusabilityGraph.empty(2))
    with pytest.raises(InvalidInputError, match="overlap"):
        OrthonormalRepresentation(np.array([[1.0, 0], [1.0, 0]]), np.array([1.0, 0]), ConfusabilityGraph.empty(2))
    with pytest.raises(InvalidInputError, match="projector"):
        ProjectorRepresentation(np.array([np.eye(2), 2 * np.eye(2)]), np.eye(2) / 2, ConfusabilityGraph.complete(2))


def test_witness_dump_format():
    rep = OrthonormalRepresentation(np.eye(2), np.array([1.0, 0]), ConfusabilityGraph.empty(2))
    out = rep.to_dict(0.5)
    assert set(out) == {"u", "f", "value_nats"}
    assert out["u"][1] == {"re": [0.0, 1.0], "im": [0.0, 0.0]}


def test_purify_rank_one_pure_state():
    u = umbrella_vectors()
    rep = OrthonormalRepresentation(u, np.array([1.0, 0, 0]), C5)
    pr = ProjectorRepresentation(np.einsum("xi,xj->xij", u, u), np.diag([1.0, 0, 0]), C5)
    out = purify_to_rank_one(pr)
    np.testing.assert_allclose(out.point(), rep.point(), atol=1e-12)
    np.testing.assert_allclose(np.abs(out.vectors.conj() @ out.vectors.T), np.abs(u @ u.T), atol=1e-12)


def test_purify_maximally_mixed():
    d = 3
    pr = ProjectorRepresentation(np.array([np.diag(e) for e in np.eye(d)]), np.eye(d) / d, ConfusabilityGraph.empty(d))
    np.testing.assert_allclose(purify_to_rank_one(pr).point(), np.full(d, 1 / d), atol=1e-12)


def test_purify_random_projectors():
    rng = np.random.default_rng(11)
    d, n = 4, 3
    U = []
    for r in (1, 2, 2):
        B = rng.normal(size=(d, r)) + 1j * rng.normal(size=(d, r))
        Q, _ = np.linalg.qr(B)
        U.append(Q @ Q.conj().T)
    W = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    F = W @ W.conj().T
    pr = ProjectorRepresentation(np.array(U), F / np.trace(F).real, ConfusabilityGraph.complete(n))
    np.testing.assert_allclose(purify_to_rank_one(pr).point(), pr.point(), atol=1e-9)


def test_purify_rejects_zero_weight():
    pr = ProjectorRepresentation(np.array([np.diag([1.0, 0]), np.diag([0, 1.0])]), np.diag([1.0, 0]), ConfusabilityGraph.empty(2))
    with pytest.raises(InvalidInputError):
        purify_to_rank_one(pr)


@pytest.mark.parametrize("p", [0.0, 0.25, 0.3, 0.5, 0.75, 1.0])
def test_direct_sum_mix_convex(p):
    P1 = np.ones(5) / 5
    P2 = np.array([0.4, 0.1, 0.1, 0.2, 0.2])
    r1 = theta_marton(C5, P1, FAST.with_(restarts=2)).witness
    r2 = theta_marton(C5, P2, FAST.with_(restarts=2, seed=3)).witness
    mix = direct_sum_mix(r1, r2, p)
    np.testing.assert_allclose(mix.point(), p * r1.point() + (1 - p) * r2.point(), atol=1e-12)


def test_direct_sum_mix_errors():
    r = OrthonormalRepresentation(np.eye(2), np.array([1.0, 0]), ConfusabilityGraph.empty(2))
    s = OrthonormalRepresentation(np.array([[1.0, 0], [1.0, 0]]), np.array([1.0, 0]), ConfusabilityGraph.complete(2))
    with pytest.raises(InvalidInputError):
        direct_sum_mix(r, s, 0.5)
    with pytest.raises(InvalidInputError):
        direct_sum_mix(r, r, 1.5)


def test_max_p_theta_small_graphs():
    res = max_p_theta(ConfusabilityGraph.complete(3), FAST, iters=5)
    assert res.value <= 1e-6
    res = max_p_theta(ConfusabilityGraph.empty(3), FAST, iters=20)
    assert res.value == pytest.approx(np.log(3), abs=1e-3)
    assert res.gap < 1e-3
