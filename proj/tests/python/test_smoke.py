import pytest

import vecchoose as vc


def test_bad_triangle_has_no_choice():
    a = vc.cycle_bad_assignment(3, vc.Field.prime(3))
    assert a.dimensions() == [2, 2, 2]
    cert = vc.find_choice(a)
    assert cert["verdict"] == "no_choice"
    assert cert["witness"] is None


def test_witness_verifies_and_corruption_is_caught():
    g = vc.path_graph(2)
    f = vc.Field.prime(3)
    a = vc.Assignment(g, f, 3, [[[1, 0, 0], [0, 1, 0]], [[0, 1, 0], [0, 0, 1]], [[1, 1, 1]]])
    cert = vc.find_choice(a, seed=4)
    assert cert["verdict"] == "choosable"
    assert cert["seed"] == 4
    assert vc.verify_choice(a, cert["witness"])["valid"]
    bad = vc.verify_choice(a, [[1, 0, 0], [0, 1, 0], [1, 1, 1]])
    assert not bad["valid"]
    assert bad["bad_edge"] == (1, 2) or bad["bad_vertex"] is not None


def test_text_round_trip():
    a = vc.cycle_bad_assignment(5, vc.Field.rationals())
    text = a.to_text()
    g = vc.Graph.from_text(a.graph.to_text())
    assert g == a.graph
    assert vc.Assignment.from_text(g, text) == a
    assert a.basis(0)[0][0] == "1"


def test_rational_cycle_obstruction():
    r = vc.real_cycle_choice(vc.cycle_bad_assignment(4, vc.Field.rationals()))
    assert not r["exists"]
    assert r["polynomial"] is not None


def test_reduction_and_sat_choice():
    red = vc.Reduction("p cnf 3 1\n1 2 3 0\n")
    assert len(red.graph) == 43
    assert vc.is_bipartite(red.graph)
    a = red.forcing_assignment(vc.Field.prime(2))
    choice = red.sat_choice(a, [True, False, False])
    assert vc.verify_choice(a, choice)["valid"]
    with pytest.raises(vc.VecchooseError):
        red.sat_choice(a, [False, False, False])


def test_projective_plane_partition():
    p = vc.projective_plane_partition(2)
    assert p["certified"]
    assert len(p["graph"]) == 6
    assert vc.check_k_partitioned(p["graph"], p["text"])["verdict"] == "certified_yes"


def test_errors_surface_as_python_exceptions():
    with pytest.raises(vc.VecchooseError, match="NotPrime"):
        vc.Field.prime(4)
    with pytest.raises(vc.VecchooseError):
        vc.Graph.from_text("graph 2 1\ne 0 7\n")
    with pytest.raises(vc.VecchooseError):
        vc.find_choice(vc.cycle_bad_assignment(3, vc.Field.rationals()))


def test_amplification_size():
    g = vc.path_graph(3)
    assert len(vc.amplify_to_k(g, [2, 3, 3, 2], 3)) == 38
