"""Symmetric knot diagrams: data model, file format and structural checks.

A diagram is a planar-diagram (PD) code whose segments are numbered
1..2n+2 in traversal order, starting at the fixed point F0.  Segment n+1
ends at the second fixed point F1.  The arc ``a`` is segments 1..n+1 and
the arc ``b`` is segments n+2..2n+2.  Each crossing lists its four
segments counterclockwise, beginning with the incoming under-strand.

The strong inversion acts on segments by ``j -> 2n+3-j``.  In the plane it
is a reflection across the axis followed by a crossing switch.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import ParseError, ValidationError

LEFT = "left"
RIGHT = "right"
SIDES = (LEFT, RIGHT)

KEY_ORDER = ("name", "n", "crossings", "on_axis", "involution",
             "h_side_at_start", "h_side_at_end")


def other_side(side: str) -> str:
    return RIGHT if side == LEFT else LEFT


@dataclass(frozen=True)
class Crossing:
    id: int
    pd: tuple[int, int, int, int]

    @property
    def sign(self) -> int:
        """Traversal sign: +1 iff the over strand runs from slot 4 to slot 2."""
        return 1 if self.pd[1] == self.pd[3] + 1 else -1

    @property
    def over_in(self) -> int:
        return self.pd[3] if self.sign == 1 else self.pd[1]

    @property
    def over_out(self) -> int:
        return self.pd[1] if self.sign == 1 else self.pd[3]

    @property
    def under_in(self) -> int:
        return self.pd[0]

    @property
    def under_out(self) -> int:
        return self.pd[2]


@dataclass(frozen=True)
class SymmetricDiagram:
    name: str
    n: int
    crossings: tuple[Crossing, ...]
    on_axis: frozenset[int]
    involution: tuple[tuple[int, int], ...]
    h_side_at_start: str
    h_side_at_end: str

    @property
    def num_segments(self) -> int:
        return 2 * self.n + 2

    def sigma(self, segment: int) -> int:
        """Image of a segment label under the strong inversion."""
        return 2 * self.n + 3 - segment

    def crossing(self, cid: int) -> Crossing:
        return self._by_id[cid]

    def partner(self, cid: int) -> int:
        """Image of a crossing under the involution."""
        return self._partner.get(cid, cid)

    @cached_property
    def _by_id(self) -> dict[int, Crossing]:
        return {c.id: c for c in self.crossings}

    @cached_property
    def _partner(self) -> dict[int, int]:
        out = {}
        for x, y in self.involution:
            out[x] = y
            out[y] = x
        return out


def make_diagram(name, n, crossings, on_axis, involution,
                 h_side_at_start, h_side_at_end) -> SymmetricDiagram:
    """Build a diagram in canonical order (crossings by id, sorted pairs)."""
    cr = tuple(sorted((Crossing(int(c[0]), tuple(int(x) for x in c[1]))
                       if not isinstance(c, Crossing) else c
                       for c in crossings), key=lambda c: c.id))
    pairs = tuple(sorted(tuple(sorted((int(x), int(y)))) for x, y in involution))
    return SymmetricDiagram(name=str(name), n=int(n), crossings=cr,
                            on_axis=frozenset(int(x) for x in on_axis),
                            involution=pairs,
                            h_side_at_start=h_side_at_start,
                            h_side_at_end=h_side_at_end)


# -- file format ------------------------------------------------------------

def _require(obj, key, kind, where):
    if key not in obj:
        raise ParseError(f"missing field '{key}'", where=where)
    value = obj[key]
    if kind is int:
        ok = isinstance(value, int) and not isinstance(value, bool)
    else:
        ok = isinstance(value, kind)
    if not ok:
        raise ParseError(f"field '{key}' must be {kind.__name__}", where=where)
    return value


def _int(value, where):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError("expected an integer", where=where)
    return value


def parse(text: str) -> SymmetricDiagram:
    """Read the JSON diagram format.  No inference or repair is done."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, where=f"line {exc.lineno}, column {exc.colno}") from None
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object", where="line 1")
    unknown = set(obj) - set(KEY_ORDER)
    if unknown:
        raise ParseError(f"unknown field(s) {sorted(unknown)}", where="top level")

    name = _require(obj, "name", str, "name")
    n = _require(obj, "n", int, "n")
    if n < 1:
        raise ParseError("n must be at least 1", where="n")
    top = 2 * n + 2

    raw = _require(obj, "crossings", list, "crossings")
    crossings = []
    seen = set()
    for i, rec in enumerate(raw):
        where = f"crossings[{i}]"
        if not isinstance(rec, dict) or set(rec) != {"id", "pd"}:
            raise ParseError("crossing must be an object with keys 'id' and 'pd'", where=where)
        cid = _int(rec["id"], f"{where}.id")
        if cid in seen:
            raise ParseError(f"duplicate crossing id {cid}", where=f"{where}.id")
        if not 1 <= cid <= n:
            raise ParseError(f"crossing id {cid} outside 1..{n}", where=f"{where}.id")
        seen.add(cid)
        pd = rec["pd"]
        if not isinstance(pd, list) or len(pd) != 4:
            raise ParseError("pd must be a list of four segment labels", where=f"{where}.pd")
        for k, s in enumerate(pd):
            s = _int(s, f"{where}.pd[{k}]")
            if not 1 <= s <= top:
                raise ParseError(f"segment label {s} outside 1..{top}", where=f"{where}.pd[{k}]")
        crossings.append(Crossing(cid, tuple(pd)))

    on_axis = _require(obj, "on_axis", list, "on_axis")
    on_axis = [_int(x, f"on_axis[{i}]") for i, x in enumerate(on_axis)]
    if len(set(on_axis)) != len(on_axis):
        raise ParseError("duplicate id in on_axis", where="on_axis")

    pairs = []
    for i, p in enumerate(_require(obj, "involution", list, "involution")):
        if not isinstance(p, list) or len(p) != 2:
            raise ParseError("involution entries must be [id, id] pairs", where=f"involution[{i}]")
        pairs.append((_int(p[0], f"involution[{i}][0]"), _int(p[1], f"involution[{i}][1]")))

    sides = []
    for key in ("h_side_at_start", "h_side_at_end"):
        value = _require(obj, key, str, key)
        if value not in SIDES:
            raise ParseError("must be 'left' or 'right'", where=key)
        sides.append(value)

    return SymmetricDiagram(
        name=name, n=n,
        crossings=tuple(sorted(crossings, key=lambda c: c.id)),
        on_axis=frozenset(on_axis),
        involution=tuple(tuple(p) for p in pairs),
        h_side_at_start=sides[0], h_side_at_end=sides[1],
    )


def serialize(d: SymmetricDiagram) -> str:
    """Canonical text: crossings by id, sorted pairs, two-space indent."""
    pairs = sorted(tuple(sorted(p)) for p in d.involution)
    lines = ["{", f'  "name": {json.dumps(d.name)},', f'  "n": {d.n},']
    if d.crossings:
        lines.append('  "crossings": [')
        rows = [f'    {{"id": {c.id}, "pd": [{", ".join(map(str, c.pd))}]}}'
                for c in sorted(d.crossings, key=lambda c: c.id)]
        lines.append(",\n".join(rows))
        lines.append("  ],")
    else:
        lines.append('  "crossings": [],')
    lines.append(f'  "on_axis": [{", ".join(map(str, sorted(d.on_axis)))}],')
    lines.append(f'  "involution": [{", ".join(f"[{x}, {y}]" for x, y in pairs)}],')
    lines.append(f'  "h_side_at_start": "{d.h_side_at_start}",')
    lines.append(f'  "h_side_at_end": "{d.h_side_at_end}"')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load(path) -> SymmetricDiagram:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(d: SymmetricDiagram, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(d))


# -- structural validation --------------------------------------------------

def symmetric_image_pd(d: SymmetricDiagram, c: Crossing) -> tuple[int, ...]:
    """PD tuple that the involution's image of ``c`` must carry.

    Relabel by sigma, reverse the cyclic order (the reflection), and start
    at the new incoming under-strand, which is the image of the outgoing
    over-strand (the crossing switch).
    """
    rev = [d.sigma(s) for s in reversed(c.pd)]
    start = rev.index(d.sigma(c.over_out))
    return tuple(rev[start:] + rev[:start])


def validate(d: SymmetricDiagram) -> SymmetricDiagram:
    """Check every structural invariant; return ``d`` unchanged."""
    n, top = d.n, d.num_segments
    if n < 1:
        raise ValidationError("n must be at least 1", where="n")
    ids = sorted(c.id for c in d.crossings)
    if ids != list(range(1, n + 1)):
        raise ValidationError(f"crossing ids must be exactly 1..{n}", where="crossings")

    count = [0] * (top + 1)
    for c in d.crossings:
        for s in c.pd:
            if not 1 <= s <= top:
                raise ValidationError(f"segment label {s} outside 1..{top}", where=f"crossing {c.id}")
            count[s] += 1
    ends = {1, n + 1, n + 2, top}
    for s in range(1, top + 1):
        want = 1 if s in ends else 2
        if count[s] != want:
            raise ValidationError(
                f"segment multiplicity: segment {s} appears {count[s]} times, expected {want}",
                where=f"segment {s}")

    for c in d.crossings:
        i, j, k, l = c.pd
        if k != i + 1 or i in (n + 1, top):
            raise ValidationError(
                f"traversal incoherence: under strand {i} -> {k} is not a successor step",
                where=f"crossing {c.id}")
        lo, hi = min(j, l), max(j, l)
        if hi != lo + 1 or lo in (n + 1, top):
            raise ValidationError(
                f"traversal incoherence: over strand {j}/{l} is not a successor step",
                where=f"crossing {c.id}")

    id_set = set(ids)
    bad = d.on_axis - id_set
    if bad:
        raise ValidationError(f"unknown on-axis crossing id(s) {sorted(bad)}", where="on_axis")
    paired = set()
    for x, y in d.involution:
        for z in (x, y):
            if z not in id_set:
                raise ValidationError(f"unknown crossing id {z} in involution", where="involution")
            if z in d.on_axis:
                raise ValidationError(
                    f"on-axis crossing {z} must be its own image, not paired", where=f"crossing {z}")
            if z in paired:
                raise ValidationError(f"crossing {z} appears in two involution pairs", where=f"crossing {z}")
            paired.add(z)
        if x == y:
            raise ValidationError(
                f"crossing {x} is paired with itself but not listed on the axis", where=f"crossing {x}")
    missing = id_set - paired - d.on_axis
    if missing:
        raise ValidationError(
            f"crossing(s) {sorted(missing)} are neither on the axis nor paired", where="involution")

    for c in d.crossings:
        img = d.crossing(d.partner(c.id))
        if img.sign != c.sign:
            raise ValidationError(
                f"involution is not a symmetry: crossing {c.id} has sign {c.sign:+d} "
                f"but its image {img.id} has sign {img.sign:+d}", where=f"crossing {c.id}")
        want = symmetric_image_pd(d, c)
        if img.pd != want:
            raise ValidationError(
                f"involution is not a symmetry of the code: image of crossing {c.id} "
                f"should be {list(want)}, crossing {img.id} is {list(img.pd)}",
                where=f"crossing {c.id}")

    for key in ("h_side_at_start", "h_side_at_end"):
        if getattr(d, key) not in SIDES:
            raise ValidationError("must be 'left' or 'right'", where=key)
    return d


# -- arcs and signs ---------------------------------------------------------

@dataclass(frozen=True)
class ArcClassification:
    segment_arc: dict[int, str]
    crossing_class: dict[int, str]
    on_axis: dict[int, bool]

    def ids(self, cls: str, on_axis: bool | None = None) -> list[int]:
        return [c for c, k in sorted(self.crossing_class.items())
                if k == cls and (on_axis is None or self.on_axis[c] == on_axis)]


def arc_of(d: SymmetricDiagram, segment: int) -> str:
    return "a" if segment <= d.n + 1 else "b"


def classify_strands(d: SymmetricDiagram) -> ArcClassification:
    seg = {s: arc_of(d, s) for s in range(1, d.num_segments + 1)}
    cls = {}
    for c in d.crossings:
        pair = sorted((seg[c.under_in], seg[c.over_in]))
        cls[c.id] = "".join(pair)
    return ArcClassification(seg, cls, {c.id: c.id in d.on_axis for c in d.crossings})


def crossing_sign(d: SymmetricDiagram, cid: int, mode: str = "traversal") -> int:
    """Sign of a crossing.

    ``traversal`` uses the global traversal orientation.  ``ab`` orients the
    arc a along the traversal and the arc b against it, so both run from F0
    to F1; it only makes sense for crossings between a and b.
    """
    c = d.crossing(cid)
    if mode == "traversal":
        return c.sign
    if mode != "ab":
        raise ValueError(f"unknown orientation mode {mode!r}")
    if arc_of(d, c.under_in) == arc_of(d, c.over_in):
        raise ValueError(f"crossing {cid} is not between arcs a and b")
    return -c.sign

