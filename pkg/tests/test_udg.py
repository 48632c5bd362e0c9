import itertools
import json
import math
import random

import pytest

from annulus_chroma.gadgets import SPINDLE_EDGES, embed_odd_cycle, spindle_points
from annulus_chroma.schema import SchemaError
from annulus_chroma.udg import (
    MAX_VERTICES,
    UnitDistanceGraph,
    build_udg,
    chromatic_number_exact,
    graph_from_edges,
    graph_from_json,
    graph_to_json,
    greedy_clique,
    greedy_coloring,
    is_proper,
)
from oracles import brute_chromatic, brute_colorable, random_graph


class TestBuildUdg:
    def test_spindle_points_give_eleven_edges(self):
        g = build_udg(list(spindle_points()), 1e-9)
        assert len(g.edges) == 11
        assert g.edges == SPINDLE_EDGES

    def test_far_points_give_no_edges(self):
        g = build_udg([(0.0, 0.0), (0.5, 0.0)], 1e-9)
        assert g.edges == ()

    def test_cycle_embedding_has_no_chords(self):
        emb = embed_odd_cycle(0.01)
        g = build_udg(list(emb.vertices), 1e-9)
        assert len(g.edges) == emb.params["n"] == 9
        assert set(g.edges) == set(emb.edges)

    def test_negative_tolerance_rejected(self):
        with pytest.raises(ValueError):
            build_udg([(0.0, 0.0)], -1e-9)

    def test_tolerance_widens_detection(self):
        pts = [(0.0, 0.0), (1.0005, 0.0)]
        assert build_udg(pts, 1e-9).edges == ()
        assert build_udg(pts, 1e-3).edges == ((0, 1),)


class TestGraphStructure:
    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            graph_from_edges(3, [(1, 1)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ValueError):
            graph_from_edges(3, [(0, 1), (1, 0)])

    def test_out_of_range_edge_rejected(self):
        with pytest.raises(ValueError):
            graph_from_edges(3, [(0, 3)])

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            graph_from_edges(0, [])

    def test_edge_length_validated_when_points_given(self):
        with pytest.raises(ValueError):
            UnitDistanceGraph(2, ((0, 1),), ((0.0, 0.0), (0.5, 0.0)), 1e-9)

    def test_edges_canonicalized(self):
        g = graph_from_edges(4, [(3, 1), (2, 0)])
        assert g.edges == ((0, 2), (1, 3))


class TestChromaticNumber:
    def test_odd_cycle(self):
        c5 = graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        chi, witness = chromatic_number_exact(c5)
        assert chi == 3
        assert is_proper(c5, witness)

    def test_complete_graph(self):
        k4 = graph_from_edges(4, list(itertools.combinations(range(4), 2)))
        assert chromatic_number_exact(k4)[0] == 4

    def test_single_vertex(self):
        g = graph_from_edges(1, [])
        chi, witness = chromatic_number_exact(g)
        assert (chi, witness) == (1, (0,))
        assert is_proper(g, witness)

    def test_bipartite(self):
        g = graph_from_edges(6, [(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5)])
        assert chromatic_number_exact(g)[0] == 2

    def test_moser_spindle(self):
        g = build_udg(list(spindle_points()), 1e-9)
        chi, witness = chromatic_number_exact(g)
        assert chi == 4
        assert is_proper(g, witness)
        assert max(witness) + 1 == 4

    def test_moser_spindle_not_three_colorable_exhaustively(self):
        g = build_udg(list(spindle_points()), 1e-9)
        assert not brute_colorable(g, 3)  # all 3^7 = 2187 assignments
        assert brute_colorable(g, 4)

    def test_agrees_with_brute_force(self):
        rng = random.Random(314)
        for _ in range(80):
            g = random_graph(rng)
            chi, witness = chromatic_number_exact(g)
            assert chi == brute_chromatic(g)
            assert is_proper(g, witness)
            assert max(witness) + 1 == chi

    def test_bounds_sandwich(self):
        rng = random.Random(1618)
        for _ in range(80):
            g = random_graph(rng)
            chi, _ = chromatic_number_exact(g)
            assert len(greedy_clique(g)) <= chi <= max(greedy_coloring(g)) + 1

    def test_greedy_coloring_is_proper(self):
        rng = random.Random(27)
        for _ in range(50):
            g = random_graph(rng)
            assert is_proper(g, greedy_coloring(g))

    def test_deterministic(self):
        g = build_udg(list(spindle_points()), 1e-9)
        assert chromatic_number_exact(g) == chromatic_number_exact(g)

    def test_size_cap(self):
        g = graph_from_edges(MAX_VERTICES + 1, [])
        with pytest.raises(ValueError, match="capped"):
            chromatic_number_exact(g)

    def test_cap_boundary_accepted(self):
        g = graph_from_edges(MAX_VERTICES, [(0, 1)])
        assert chromatic_number_exact(g)[0] == 2


class TestIsProper:
    def test_spindle_witness(self):
        g = build_udg(list(spindle_points()), 1e-9)
        _, witness = chromatic_number_exact(g)
        assert is_proper(g, witness)

    def test_length_mismatch(self):
        g = graph_from_edges(3, [(0, 1)])
        with pytest.raises(ValueError):
            is_proper(g, (0, 1))

    def test_monochromatic_edge_detected(self):
        g = graph_from_edges(2, [(0, 1)])
        assert not is_proper(g, (0, 0))
        assert is_proper(g, (0, 1))


class TestJson:
    def test_points_form_round_trip(self):
        g = build_udg(list(spindle_points()), 1e-9)
        doc = json.loads(json.dumps(graph_to_json(g)))
        assert graph_from_json(doc).edges == g.edges

    def test_abstract_form_round_trip(self):
        g = graph_from_edges(5, [(0, 1), (2, 4)])
        assert graph_from_json(graph_to_json(g)) == g

    def test_points_form_default_tolerance(self):
        g = graph_from_json({"points": [[0.0, 0.0], [1.0, 0.0]]})
        assert g.edges == ((0, 1),)

    def test_bad_point_position_reported(self):
        with pytest.raises(SchemaError, match=r"points\[1\]"):
            graph_from_json({"points": [[0.0, 0.0], [1.0]]})

    def test_unknown_key_rejected(self):
        with pytest.raises(SchemaError, match="unknown keys"):
            graph_from_json({"n": 2, "edges": [], "weights": []})

    def test_bad_edge_rejected(self):
        with pytest.raises(SchemaError, match=r"edges\[0\]"):
            graph_from_json({"n": 2, "edges": [[0, "x"]]})

    def test_structural_error_wrapped(self):
        with pytest.raises(SchemaError, match="self-loop"):
            graph_from_json({"n": 2, "edges": [[1, 1]]})
