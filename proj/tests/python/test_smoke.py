import numpy as np
import pytest

import adjdyn


def test_elementary_matrix_rows():
    m = adjdyn.generate_ca_1d(16)
    assert (m.rows, m.cols, m.nnz) == (16, 16, 48)
    assert m.at(0, 15) == 4 and m.at(0, 0) == 2 and m.at(0, 1) == 1
    assert m.at(15, 0) == 1
    assert not adjdyn.is_symmetric(m)


def test_von_neumann_matrix_is_symmetric():
    m = adjdyn.generate_ca_2d(4, 4, "von_neumann")
    dense = m.to_dense()
    assert np.array_equal(dense, dense.T)
    assert set(np.flatnonzero(dense[5])) == {1, 4, 6, 9}
    assert set(np.flatnonzero(dense[0])) == {1, 3, 4, 12}


def test_matvec_matches_numpy():
    rng = np.random.default_rng(0)
    m = adjdyn.generate_ca_2d(5, 6, "moore", center_weight=9)
    v = rng.integers(0, 2, size=30).astype(float)
    assert np.array_equal(m.matvec(v), m.to_dense() @ v)


def test_matrix_market_round_trip(tmp_path):
    m, inputs = adjdyn.generate_random_digraph(10, 3, seed=5)
    assert all(len(set(row)) == 3 for row in inputs)
    path = tmp_path / "m.mtx"
    adjdyn.write_matrix_market(path, m)
    assert adjdyn.read_matrix_market(path) == m
    assert adjdyn.SparseMatrix.from_matrix_market(m.to_matrix_market()) == m


def rule30_step(s):
    left, right = np.roll(s, 1), np.roll(s, -1)
    pattern = (4 * left + 2 * s + right).astype(int)
    return ((30 >> pattern) & 1).astype(float)


def test_rule30_against_numpy():
    init = adjdyn.random_binary_state(24, 0.5, 3)
    history = adjdyn.elementary_ca(24, 30, True, init).run(20)
    assert history.shape == (21, 24)
    s = np.asarray(init)
    for t in range(1, 21):
        s = rule30_step(s)
        assert np.array_equal(history[t], s)


def test_glider_cycle_and_pca():
    sys = adjdyn.game_of_life(7, 7, True, adjdyn.glider_state(7, 7))
    history = sys.run(28)
    report = adjdyn.detect_cycle(history)
    assert report == {"transient": 0, "period": 28, "approximate": False}
    p = adjdyn.pca_project(history)
    assert np.allclose(p["points"][28], p["points"][0], atol=1e-9)
    top = np.sort(np.linalg.eigvalsh(np.cov(history.T)))[::-1][:2]
    assert np.allclose(p["explained_variance"], top, atol=1e-8)


def test_esn_radius_and_readout():
    n = 40
    sys = adjdyn.echo_state_network(n, 0.1, 0.9, 2, adjdyn.random_uniform_state(n, -1, 1, 1))
    radius = np.max(np.abs(np.linalg.eigvals(sys.matrix.to_dense())))
    assert abs(radius - 0.9) < 1e-6
    history = sys.run(30)
    features = np.ascontiguousarray(history[:, :5])
    targets = history[:, 3].copy()
    model = adjdyn.train_linear_readout(features, targets, 0.0)
    assert model.training_residual < 1e-20
    assert model.predict(features[5]) == pytest.approx(targets[5])


def test_rules_and_errors():
    rule = adjdyn.elementary_rule(110)
    assert rule.to_text() == "rule pattern index0first n=2 k=3 table=01110110"
    assert adjdyn.Rule.from_text(rule.to_text()) == rule
    with pytest.raises(adjdyn.Error, match="RuleOutOfRange"):
        adjdyn.elementary_rule(300)
    with pytest.raises(adjdyn.Error, match="StencilWiderThanGrid"):
        adjdyn.generate_ca_1d(2)
    with pytest.raises(adjdyn.Error, match="NonIntegerKey"):
        adjdyn.apply_rule(rule, np.array([2.5]))
    sys = adjdyn.elementary_ca(8, 110, True, np.zeros(8))
    with pytest.raises(adjdyn.Error, match="BadStateValue"):
        sys.state = np.full(8, 0.5)


def test_cml_stays_bounded():
    init = adjdyn.random_uniform_state(64, 0.0, 1.0, 4)
    history = adjdyn.coupled_map_lattice(64, 0.3, 4.0, True, init).run(500)
    assert history.min() >= 0.0 and history.max() <= 1.0


def test_states_round_trip(tmp_path):
    history = np.array([[0.1, 1 / 3], [-2.5e17, 5e-324]])
    for fmt in ("csv", "lfst"):
        path = tmp_path / f"h.{fmt}"
        adjdyn.write_states(path, history, fmt)
        assert np.array_equal(adjdyn.read_states(path), history)
    assert adjdyn.render_text(np.array([[0, 1, 1, 0]]), 2, 2) == ".#\n#.\n"
