"""Kauffman states on decorated plane diagrams and the tree bijection.

A state assigns to each crossing one of its corners so that the induced
map from crossings to regions is a bijection onto the unmarked regions.
The basepoint crossing is forced north (its west and east corners sit in
the two marked regions).  The state sum multiplies local weights per
crossing and adds over states:

    generic edge of weight i:  west -> t^(-i/2), east -> t^(i/2),
                               north -> [i] (the quantum integer);
    basepoint edge of weight i1: north -> t^(i1/2).

States correspond bijectively to spanning trees rooted at the head of
the basepoint edge: tree edges (and the basepoint) go north, and every
other crossing takes the corner met when its dual edge is crossed while
growing the dual spanning tree outward from the two marked faces.
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple

from .laurent import HalfLaurent, ONE, monomial, quantum_integer
from .planar import (
    CORNERS,
    EAST,
    HEAD,
    NORTH,
    TAIL,
    WEST,
    Dart,
    DecoratedDiagram,
    Region,
)
from .spanning import SpanningTree, _validate_tree

State = dict[str, str]


def enumerate_states(diagram: DecoratedDiagram) -> list[State]:
    """All Kauffman states, in canonical order.

    Crossings are processed in edge-id order and corners tried north,
    west, east; regions are claimed exclusively, marked regions are never
    available.  The result lists each state as {edge id: corner}.
    """
    edge_ids = [c.edge for c in diagram.crossings]
    marked = set(diagram.marked)
    claimed: dict[Region, str] = {}
    choice: dict[str, str] = {}
    states: list[State] = []

    def assign(i: int) -> None:
        if i == len(edge_ids):
            states.append(dict(choice))
            return
        eid = edge_ids[i]
        for corner in diagram.admissible_corners(eid):
            region = diagram.corner_region[eid, corner]
            if region in marked or region in claimed:
                continue
            claimed[region] = eid
            choice[eid] = corner
            assign(i + 1)
            del claimed[region]
            del choice[eid]

    assign(0)
    return states


def local_weight(diagram: DecoratedDiagram, edge_id: str, corner: str) -> HalfLaurent:
    """Weight contributed by one crossing when its chosen corner is given."""
    e = diagram.map.graph.edge(edge_id)
    if corner not in CORNERS:
        raise ValueError(f"unknown corner {corner!r}")
    if e.weight < 1:
        raise ValueError(f"edge {edge_id!r}: crossing weight must be positive")
    if edge_id == diagram.basepoint:
        if corner != NORTH:
            raise ValueError("the basepoint crossing only admits the north corner")
        return monomial(1, e.weight)
    if corner == NORTH:
        return quantum_integer(e.weight)
    if corner == WEST:
        return monomial(1, -e.weight)
    return monomial(1, e.weight)


def state_weight(diagram: DecoratedDiagram, state: State) -> HalfLaurent:
    """Product of local weights over all crossings of one state."""
    w = ONE
    for eid in sorted(state):
        w = w * local_weight(diagram, eid, state[eid])
    return w


def state_sum(diagram: DecoratedDiagram) -> HalfLaurent:
    """The diagram's state-sum polynomial (sum of state weights)."""
    total = HalfLaurent()
    for state in enumerate_states(diagram):
        total = total + state_weight(diagram, state)
    return total


class DualEdge(NamedTuple):
    """The dual of a diagram edge: it joins the edge's two flanking faces."""

    edge: str
    faces: tuple[Region, Region]


def dual_edges(diagram: DecoratedDiagram) -> tuple[DualEdge, ...]:
    out = []
    for e in diagram.map.graph.edges:
        pair = (
            diagram.face_of[Dart(e.id, TAIL)],
            diagram.face_of[Dart(e.id, HEAD)],
        )
        out.append(DualEdge(e.id, tuple(sorted(pair))))
    return tuple(out)


def dual_tree(diagram: DecoratedDiagram, tree: SpanningTree) -> tuple[DualEdge, ...]:
    """Duals of the edges outside the tree; always a spanning tree of the
    dual graph (checked: face count minus one edges, connecting all faces)."""
    _validate_tree(diagram.map.graph, tree)
    chosen = [d for d in dual_edges(diagram) if d.edge not in tree.edges]
    all_faces = {r for r in diagram.regions if r.kind == "face"}
    if len(chosen) != len(all_faces) - 1:
        raise RuntimeError(
            f"dual complement has {len(chosen)} edges for {len(all_faces)} faces"
        )
    reached = {next(iter(sorted(all_faces)))}
    frontier = True
    while frontier:
        frontier = False
        for d in chosen:
            a, b = d.faces
            if (a in reached) != (b in reached):
                reached.update((a, b))
                frontier = True
    if reached != all_faces:
        raise RuntimeError("dual complement does not connect all faces")
    return tuple(sorted(chosen))


def tree_to_state(diagram: DecoratedDiagram, tree: SpanningTree) -> State:
    """The state matching a spanning tree rooted at head(basepoint).

    Tree edges and the basepoint go north.  The remaining duals form the
    dual spanning tree; growing it breadth-first from the two marked
    faces, each dual edge crossed into a fresh face f assigns that edge's
    crossing the corner lying in f (east when f flanks the tail side,
    west when it flanks the head side).
    """
    g = diagram.map.graph
    if tree.root != diagram.root:
        raise ValueError(
            f"tree root {tree.root!r} differs from head of basepoint "
            f"({diagram.root!r})"
        )
    if diagram.basepoint in tree.edges:
        raise ValueError("the basepoint edge cannot belong to the tree")
    _validate_tree(g, tree)

    state: State = {diagram.basepoint: NORTH}
    for eid in tree.edges:
        state[eid] = NORTH

    remaining = [
        e.id
        for e in g.edges
        if e.id not in tree.edges and e.id != diagram.basepoint
    ]
    incident: dict[Region, list[tuple[str, Region, str]]] = {}
    for eid in remaining:
        east_face = diagram.face_of[Dart(eid, TAIL)]
        west_face = diagram.face_of[Dart(eid, HEAD)]
        incident.setdefault(east_face, []).append((eid, west_face, WEST))
        incident.setdefault(west_face, []).append((eid, east_face, EAST))

    visited = set(diagram.marked)
    queue = deque(sorted(visited))
    used: set[str] = set()
    while queue:
        face = queue.popleft()
        for eid, other, corner in sorted(incident.get(face, ())):
            if eid in used:
                continue
            if other in visited:
                raise RuntimeError(
                    f"dual complement closes a cycle at edge {eid!r}"
                )
            used.add(eid)
            visited.add(other)
            state[eid] = corner
            queue.append(other)

    faces_total = sum(1 for r in diagram.regions if r.kind == "face")
    if len(visited) != faces_total or len(used) != len(remaining):
        raise RuntimeError("dual traversal did not reach every face")
    _check_state(diagram, state)
    return state


def _check_state(diagram: DecoratedDiagram, state: State) -> None:
    expected = {c.edge for c in diagram.crossings}
    if set(state) != expected:
        raise ValueError("state must assign a corner to every crossing")
    claimed: dict[Region, str] = {}
    marked = set(diagram.marked)
    for eid, corner in state.items():
        if corner not in diagram.admissible_corners(eid):
            raise ValueError(f"edge {eid!r}: corner {corner!r} not admissible")
        region = diagram.corner_region[eid, corner]
        if region in marked:
            raise ValueError(f"edge {eid!r}: corner lies in a marked region")
        if region in claimed:
            raise ValueError(
                f"edges {claimed[region]!r} and {eid!r} claim the same region"
            )
        claimed[region] = eid
    # |crossings| = |unmarked regions|, so injective means bijective.


def state_to_tree(diagram: DecoratedDiagram, state: State) -> SpanningTree:
    """The spanning tree matching a state: north edges minus the basepoint.

    Validates that the input is a genuine state, then re-validates the
    resulting edge set as a spanning tree rooted at head(basepoint); a
    failure of the latter would contradict the correspondence theorem and
    raises RuntimeError.
    """
    _check_state(diagram, state)
    edges = frozenset(
        eid
        for eid, corner in state.items()
        if corner == NORTH and eid != diagram.basepoint
    )
    tree = SpanningTree(diagram.root, edges)
    try:
        _validate_tree(diagram.map.graph, tree)
    except ValueError as exc:
        raise RuntimeError(f"state does not induce a spanning tree: {exc}") from exc
    return tree
