"""Rotation systems, face traversal, validation, and diagram decoration."""

from __future__ import annotations

import pytest

from moytree.generate import seed_cycle, seed_lens_triangle, seed_theta
from moytree.graph import DirectedMultigraph, Edge
from moytree.planar import (
    CombinatorialMap,
    Dart,
    DiagramError,
    MapStructureError,
    decorate,
    faces,
    require_positive_balanced,
    validate_map,
)


def plain_map(records, rotation_tokens):
    vertices = sorted(rotation_tokens)
    g = DirectedMultigraph(vertices, [Edge(*r) for r in records])
    rotation = {
        v: tuple(Dart.parse(tok) for tok in toks)
        for v, toks in rotation_tokens.items()
    }
    return CombinatorialMap(g, rotation)


# -- darts -------------------------------------------------------------------


def test_dart_twin_and_token():
    d = Dart("e", "t")
    assert d.twin() == Dart("e", "h")
    assert d.twin().twin() == d
    assert d.token() == "e:t"
    assert Dart.parse("e:h") == Dart("e", "h")


def test_dart_parse_keeps_colons_in_edge_ids():
    assert Dart.parse("a:b:t") == Dart("a:b", "t")


def test_dart_parse_rejects_bad_tokens():
    for bad in ("e", "e:x", "e:"):
        with pytest.raises(ValueError, match="bad dart token"):
            Dart.parse(bad)
    # an empty edge id parses; resolving it is the map layer's problem
    assert Dart.parse(":t") == Dart("", "t")


# -- structural validation -----------------------------------------------------


def test_map_requires_every_dart_once(lens_map):
    g = lens_map.graph
    rot = dict(lens_map.rotation)
    rot["v1"] = rot["v1"][:-1]
    with pytest.raises(MapStructureError, match="missing from rotation"):
        CombinatorialMap(g, rot)


def test_map_rejects_duplicate_darts(lens_map):
    g = lens_map.graph
    rot = dict(lens_map.rotation)
    rot["v1"] = rot["v1"] + (rot["v1"][0],)
    with pytest.raises(MapStructureError, match="more than once"):
        CombinatorialMap(g, rot)


def test_map_rejects_darts_at_wrong_vertex(lens_map):
    g = lens_map.graph
    rot = dict(lens_map.rotation)
    rot["v1"], rot["v2"] = rot["v2"], rot["v1"]
    with pytest.raises(MapStructureError, match="belongs at"):
        CombinatorialMap(g, rot)


def test_map_rejects_unknown_edges_and_vertices(make_graph):
    g = make_graph(["a", "b"], [("e", "a", "b", 1)])
    with pytest.raises(MapStructureError, match="unknown edge"):
        CombinatorialMap(g, {"a": (Dart("zz", "t"),), "b": (Dart("e", "h"),)})
    with pytest.raises(MapStructureError, match="unknown vertex"):
        CombinatorialMap(
            g, {"a": (Dart("e", "t"),), "b": (Dart("e", "h"),), "x": ()}
        )


def test_map_rejects_non_dart_entries(make_graph):
    g = make_graph(["a", "b"], [("e", "a", "b", 1)])
    with pytest.raises(TypeError, match="must be Dart"):
        CombinatorialMap(g, {"a": ("e:t",), "b": (Dart("e", "h"),)})


# -- traversal ------------------------------------------------------------------


def test_successor_walks_the_rotation(lens_map):
    v1 = lens_map.rotation["v1"]
    for i, d in enumerate(v1):
        assert lens_map.successor(d) == v1[(i + 1) % len(v1)]
        assert lens_map.vertex_of(d) == "v1"
    assert lens_map.next_in_face(v1[0]) == lens_map.successor(v1[0].twin())


def test_darts_property_lists_all_darts(lens_map):
    assert len(lens_map.darts) == 2 * len(lens_map.graph.edges)
    assert lens_map.darts == tuple(sorted(lens_map.darts))


def test_lens_faces_exact_orbits(lens_map):
    tokens = tuple(tuple(d.token() for d in f) for f in faces(lens_map))
    assert tokens == (
        ("e12:h", "e21:h"),
        ("e12:t", "e23:t", "e13:h"),
        ("e13:t", "e31:t"),
        ("e21:t", "e31:h", "e23:h"),
    )


def test_faces_partition_darts(lens_map):
    seen = [d for f in lens_map.faces() for d in f]
    assert sorted(seen) == list(lens_map.darts)
    assert len(seen) == len(set(seen))


def test_seed_face_counts():
    assert seed_cycle(4, 1).face_count() == 2
    assert seed_theta([1, 2], [3]).face_count() == 3
    assert seed_lens_triangle(1, 2, 3).face_count() == 4


def test_edgeless_map_has_one_face():
    m = plain_map([], {"a": ()})
    assert m.face_count() == 1
    assert validate_map(m) == []


# -- validation diagnostics ------------------------------------------------------


def test_clean_seeds_have_no_violations(lens_map):
    assert validate_map(lens_map) == []
    assert validate_map(seed_cycle(3, 2)) == []
    assert validate_map(seed_theta([2, 1], [1, 2])) == []


def test_loop_violation():
    m = plain_map([("e", "a", "a", 1)], {"a": ("e:t", "e:h")})
    checks = [v.check for v in validate_map(m)]
    assert checks == ["loop"]


def test_transverse_violation_on_interleaved_darts():
    m = plain_map(
        [("e1", "a", "b", 1), ("e2", "a", "b", 1), ("f1", "b", "a", 1), ("f2", "b", "a", 1)],
        {
            "a": ("e1:t", "f1:h", "e2:t", "f2:h"),
            "b": ("e1:h", "e2:h", "f1:t", "f2:t"),
        },
    )
    assert "transverse" in {v.check for v in validate_map(m)}


def test_planar_violation_on_twisted_theta():
    t = seed_theta([1, 1], [1, 1])
    rot = dict(t.rotation)
    a = list(rot["a"])
    a[2], a[3] = a[3], a[2]
    rot["a"] = tuple(a)
    twisted = CombinatorialMap(t.graph, rot)
    assert twisted.face_count() == 2
    assert [v.check for v in validate_map(twisted)] == ["planar"]


def test_balance_violation_reported_per_vertex():
    m = plain_map([("e", "a", "b", 1)], {"a": ("e:t",), "b": ("e:h",)})
    violations = validate_map(m)
    assert [(v.check, v.subject) for v in violations] == [
        ("balance", "a"),
        ("balance", "b"),
    ]


def test_disconnected_map_fails_planarity_and_connectivity():
    m = plain_map(
        [("e1", "a", "b", 1), ("e2", "b", "a", 1), ("f1", "c", "d", 1), ("f2", "d", "c", 1)],
        {
            "a": ("e1:t", "e2:h"),
            "b": ("e2:t", "e1:h"),
            "c": ("f1:t", "f2:h"),
            "d": ("f2:t", "f1:h"),
        },
    )
    assert [v.check for v in validate_map(m)] == ["planar", "connectivity"]


# -- decoration --------------------------------------------------------------------


def test_decorated_lens_layout(lens_diagram):
    d = lens_diagram
    assert d.basepoint == "e23"
    assert d.root == "v3"
    assert len(d.regions) == 7
    assert len(d.crossings) == 5
    assert {c.edge: c.vertex for c in d.crossings} == {
        "e12": "v2",
        "e13": "v3",
        "e21": "v1",
        "e23": "v3",
        "e31": "v1",
    }
    assert len(d.regions) == len(d.crossings) + 2


def test_decorated_lens_marked_regions(lens_diagram):
    d = lens_diagram
    expected = tuple(
        sorted((d.face_of[Dart("e23", "t")], d.face_of[Dart("e23", "h")]))
    )
    assert d.marked == expected
    assert len(d.unmarked) == 5
    assert set(d.unmarked).isdisjoint(d.marked)
    assert set(d.unmarked) | set(d.marked) == set(d.regions)


def test_corner_orientation_is_pinned(lens_diagram):
    d = lens_diagram
    for eid, head in (("e12", "v2"), ("e23", "v3"), ("e31", "v1")):
        assert d.corner_region[eid, "N"] == d.circle_of[head]
        assert d.corner_region[eid, "E"] == d.face_of[Dart(eid, "t")]
        assert d.corner_region[eid, "W"] == d.face_of[Dart(eid, "h")]


def test_admissible_corners(lens_diagram):
    assert lens_diagram.admissible_corners("e23") == ("N",)
    assert lens_diagram.admissible_corners("e12") == ("N", "W", "E")


def test_region_labels(lens_diagram):
    labels = {r.label() for r in lens_diagram.regions}
    assert "circle(v3)" in labels
    assert "face(e12:h)" in labels


def test_decorate_rejects_unknown_basepoint(lens_map):
    with pytest.raises(DiagramError, match="unknown basepoint"):
        decorate(lens_map, "zz")


def test_decorate_rejects_loops():
    m = plain_map(
        [("e", "a", "a", 1), ("f", "a", "b", 1), ("g", "b", "a", 1)],
        {"a": ("e:t", "e:h", "f:t", "g:h"), "b": ("f:h", "g:t")},
    )
    with pytest.raises(DiagramError, match="loop"):
        decorate(m, "f")


def test_decorate_rejects_nonplanar_rotation():
    t = seed_theta([1, 1], [1, 1])
    rot = dict(t.rotation)
    a = list(rot["a"])
    a[2], a[3] = a[3], a[2]
    rot["a"] = tuple(a)
    with pytest.raises(DiagramError, match="planar"):
        decorate(CombinatorialMap(t.graph, rot), "f0")


def test_decorate_rejects_bridges():
    m = plain_map([("e", "a", "b", 1)], {"a": ("e:t",), "b": ("e:h",)})
    with pytest.raises(DiagramError, match="bridge"):
        decorate(m, "e")


# -- positivity guard ------------------------------------------------------------


def test_require_positive_balanced(lens_map):
    require_positive_balanced(lens_map)
    zero = plain_map(
        [("e", "a", "b", 0), ("f", "b", "a", 0)],
        {"a": ("e:t", "f:h"), "b": ("f:t", "e:h")},
    )
    with pytest.raises(ValueError, match="must be positive"):
        require_positive_balanced(zero)
    lopsided = plain_map(
        [("e", "a", "b", 2), ("f", "b", "a", 1)],
        {"a": ("e:t", "f:h"), "b": ("f:t", "e:h")},
    )
    with pytest.raises(ValueError, match="not balanced"):
        require_positive_balanced(lopsided)
