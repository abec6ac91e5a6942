"""Built-in diagrams: the axis-kink unknot, the T(2, 2n+1) family and 7_4b.

Every entry is generated from its unshaded checkerboard graph (see
:mod:`eqsig.tait`).  The two 7_4b diagrams are also shipped as data files
under ``eqsig/data``; :func:`build_7_4` reads those files, and the test
suite checks that they agree with the graphs recorded here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .diagram import SymmetricDiagram, parse, validate
from .tait import CheckerboardGraph, build_symmetric_diagram


def unknot_graph() -> CheckerboardGraph:
    # one loop edge at the outer vertex: a single kink sitting on the axis
    return CheckerboardGraph({"r": [(0, 0), (0, 1)]}, {0: 1}, "r", 0, 1)


def torus_graph(n: int) -> CheckerboardGraph:
    """Cycle on 2n+2 vertices; the edge opposite the outer vertex is on the axis.

    Every edge has Goeritz sign -1.  This is the chirality for which each
    off-axis crossing has ab-sign -1.
    """
    verts = ["r"] + [f"B{i}" for i in range(1, 2 * n + 1)]
    m = len(verts)
    rot = {v: [] for v in verts}
    for i in range(m):
        rot[verts[i]].append((i, 0))
        rot[verts[(i + 1) % m]].append((i, 1))
    return CheckerboardGraph(rot, {i: -1 for i in range(m)}, "r", 0, 1)


def graph_7_4b_plus() -> CheckerboardGraph:
    """Three parallel edges from the outer vertex to each of L and R, plus the
    on-axis edge ``m`` from L to R.  All Goeritz signs are -1, so the diagram
    is alternating."""
    rot = {
        "O": [("r1", 1), ("r2", 1), ("r3", 1), ("l3", 1), ("l2", 1), ("l1", 1)],
        "L": [("m", 0), ("l1", 0), ("l2", 0), ("l3", 0)],
        "R": [("r2", 0), ("r1", 0), ("m", 1), ("r3", 0)],
    }
    eta = {e: -1 for e in ("l1", "l2", "l3", "r1", "r2", "r3", "m")}
    return CheckerboardGraph(rot, eta, "O", 5, 2)


def graph_7_4b_minus() -> CheckerboardGraph:
    """Two paths r-a-b-c-d-r and r-A-B-C-D-r joined by the on-axis edge d-D.

    Vertex ``x`` is the region labelled x and ``X`` the one labelled
    x'.  All edges have Goeritz sign +1 except the on-axis one.
    """
    rot = {
        "r": [("e1", 0), ("e5", 1), ("f5", 1), ("f1", 0)],
        "a": [("e1", 1), ("e2", 0)],
        "b": [("e3", 0), ("e2", 1)],
        "c": [("e4", 0), ("e3", 1)],
        "d": [("m", 0), ("e5", 0), ("e4", 1)],
        "A": [("f1", 1), ("f2", 0)],
        "B": [("f2", 1), ("f3", 0)],
        "C": [("f3", 1), ("f4", 0)],
        "D": [("f5", 0), ("m", 1), ("f4", 1)],
    }
    eta = {e: 1 for e in ("e1", "e2", "e3", "e4", "e5", "f1", "f2", "f3", "f4", "f5")}
    eta["m"] = -1
    return CheckerboardGraph(rot, eta, "r", 3, 1)


# Region label -> graph vertex of graph_7_4b_minus().
REGION_LABELS_7_4B_MINUS = {
    "a": "a", "b": "b", "c": "c", "d": "d",
    "a'": "A", "b'": "B", "c'": "C", "d'": "D",
}
REGION_ORDER_7_4B_MINUS = ("a", "b", "c", "d", "a'", "b'", "c'", "d'")

DATA_FILES = {"plus": "7_4b_plus.json", "minus": "7_4b_minus.json"}
LABEL_FILE_7_4B_MINUS = "7_4b_minus.labels.json"


def build_unknot_axis_kink() -> SymmetricDiagram:
    return validate(build_symmetric_diagram(unknot_graph(), "unknot"))


def build_torus_2_odd(n: int) -> SymmetricDiagram:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"torus family needs an integer n >= 1, got {n!r}")
    return validate(build_symmetric_diagram(torus_graph(n), f"T(2,{2 * n + 1})"))


def _read_data(filename: str) -> str:
    return resources.files("eqsig").joinpath("data", filename).read_text(encoding="utf-8")


def build_7_4(direction: str) -> SymmetricDiagram:
    if direction not in DATA_FILES:
        raise ValueError(f"direction must be 'plus' or 'minus', got {direction!r}")
    return validate(parse(_read_data(DATA_FILES[direction])))


def region_labels_7_4b_minus() -> dict[str, tuple[int, str]]:
    """Region label -> a side ``(segment, side)`` lying in that region."""
    raw = json.loads(_read_data(LABEL_FILE_7_4B_MINUS))
    return {k: (int(v[0]), str(v[1])) for k, v in raw["regions"].items()}


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    description: str
    takes_n: bool
    expected: str  # known values, for `catalog list`

    def build(self, n: int | None = None) -> SymmetricDiagram:
        if self.takes_n:
            return BUILDERS[self.key](1 if n is None else n)
        if n is not None:
            raise ValueError(f"catalog entry {self.key!r} takes no --n")
        return BUILDERS[self.key]()


BUILDERS = {
    "unknot": build_unknot_axis_kink,
    "torus": build_torus_2_odd,
    "7_4b_plus": lambda: build_7_4("plus"),
    "7_4b_minus": lambda: build_7_4("minus"),
}

CATALOG = {
    "unknot": CatalogEntry("unknot", "one-crossing unknot with its kink on the axis",
                           False, "sigma_tilde 0"),
    "torus": CatalogEntry("torus", "torus knot T(2,2n+1), alternating (--n, default 1)",
                          True, "sigma_tilde -2n, bg4 >= n"),
    "7_4b_plus": CatalogEntry("7_4b_plus", "7_4 with direction b+, alternating",
                              False, "sigma_tilde -6, bg4 >= 3"),
    "7_4b_minus": CatalogEntry("7_4b_minus", "7_4 with direction b-",
                               False, "gsig -2, e 8, sigma_tilde -10, bg4 >= 5"),
}
