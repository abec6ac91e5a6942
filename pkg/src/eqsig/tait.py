"""Symmetric diagrams from their unshaded checkerboard graphs.

The input is a plane graph whose vertices are the unshaded regions of the
wanted diagram and whose edges are its crossings, given as a rotation
system: ``rotation[v]`` lists the darts ``(edge, end)`` at ``v`` in
counterclockwise order (``end`` 0 at the edge's tail, 1 at its head).
Faces of the graph become the shaded regions.  Each edge carries the
Goeritz sign of its crossing.

The knot is the medial graph.  Around the vertex ``v`` the strand from the
crossing of dart ``rotation[v][i]`` to that of ``rotation[v][i+1]`` is the
*corner arc* ``(v, i)``.  The two fixed points sit on two corner arcs of
the vertex holding h'.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LEFT, RIGHT, SymmetricDiagram, make_diagram

NE, NW, SW, SE = range(4)


@dataclass(frozen=True)
class CheckerboardGraph:
    rotation: dict
    eta: dict
    outer: object          # vertex holding h'
    start_gap: int         # F0 lies on corner arc (outer, start_gap)
    end_gap: int           # F1 lies on corner arc (outer, end_gap)


def _attachments(g: CheckerboardGraph):
    """For every crossing: the four corner-arc ends in counterclockwise order."""
    where = {}
    for v, darts in g.rotation.items():
        for i, dart in enumerate(darts):
            if dart in where:
                raise ValueError(f"dart {dart} listed twice")
            where[dart] = (v, i)
    att = {}
    for e in g.eta:
        (vt, it), (vh, ih) = where[(e, 0)], where[(e, 1)]
        kt, kh = len(g.rotation[vt]), len(g.rotation[vh])
        att[e] = [((vh, (ih - 1) % kh), "end"),
                  ((vt, it), "start"),
                  ((vt, (it - 1) % kt), "end"),
                  ((vh, ih), "start")]
    return att


def _arc_end(g: CheckerboardGraph, arc, which):
    """(crossing, attachment) reached at one end of a corner arc."""
    v, i = arc
    darts = g.rotation[v]
    if which == "start":
        e, end = darts[i]
        return e, (NW if end == 0 else SE)
    e, end = darts[(i + 1) % len(darts)]
    return e, (SW if end == 0 else NE)


@dataclass(frozen=True)
class TaitBuild:
    diagram: SymmetricDiagram
    regions: dict          # graph vertex -> a side (segment, side) in its region
    crossing_of: dict      # graph edge -> crossing id


def build_symmetric_diagram(g: CheckerboardGraph, name: str) -> SymmetricDiagram:
    return build_detailed(g, name).diagram


def build_detailed(g: CheckerboardGraph, name: str) -> TaitBuild:
    att = _attachments(g)
    labels = {e: [None] * 4 for e in g.eta}
    incoming = {e: set() for e in g.eta}
    order, seen = [], set()
    f0 = (g.outer, g.start_gap)
    f1 = (g.outer, g.end_gap)

    label = 1
    arc, forward = f0, True
    end_side = None
    passes = 0
    regions = {g.outer: (1, LEFT)}
    while True:
        e, p = _arc_end(g, arc, "end" if forward else "start")
        if e not in seen:
            seen.add(e)
            order.append(e)
        if labels[e][p] is not None:
            raise ValueError(f"attachment {p} of crossing {e} visited twice")
        labels[e][p] = label
        incoming[e].add(p)
        q = (p + 2) % 4
        label += 1
        labels[e][q] = label
        passes += 1
        arc, which = att[e][q]
        forward = which == "start"
        regions.setdefault(arc[0], (label, LEFT if forward else RIGHT))
        if arc == f1:
            end_side = RIGHT if forward else LEFT
            label += 1
        if arc == f0:
            if not forward:
                raise ValueError("traversal returns to F0 from the wrong side")
            break
    if passes != 2 * len(g.eta) or end_side is None:
        raise ValueError("the medial graph is not a single closed curve through both fixed points")

    n = len(g.eta)
    ids = {e: k + 1 for k, e in enumerate(order)}
    crossings = []
    for e in order:
        lab = labels[e]
        under = (NW, SE) if g.eta[e] == 1 else (NE, SW)
        first = under[0] if under[0] in incoming[e] else under[1]
        pd = tuple(lab[(first + k) % 4] for k in range(4))
        crossings.append((ids[e], pd))

    top = 2 * n + 2
    by_set = {frozenset(pd): cid for cid, pd in crossings}
    on_axis, pairs = [], set()
    for cid, pd in crossings:
        img = by_set.get(frozenset(top + 1 - s for s in pd))
        if img is None:
            raise ValueError(f"crossing {cid} has no mirror image; the graph is not symmetric")
        if img == cid:
            on_axis.append(cid)
        else:
            pairs.add(tuple(sorted((cid, img))))
    d = make_diagram(name, n, crossings, on_axis, sorted(pairs), RIGHT, end_side)
    return TaitBuild(d, regions, ids)
