"""Faces of the diagram's 4-valent graph, checkerboard shading, region involution.

A *side* is a pair ``(segment, "left"|"right")`` taken relative to the
traversal direction of the segment.  Faces are traced with the face kept on
the left of the walk: on arriving at a crossing through slot ``p`` the walk
leaves through slot ``p - 1``, the next slot clockwise.  Fixed points are
degree-2 vertices that the walk passes straight through.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LEFT, RIGHT, SymmetricDiagram, other_side
from .errors import AdmissibilityError, ValidationError

HEAD, TAIL = "head", "tail"


@dataclass(frozen=True)
class FaceComplex:
    faces: tuple[tuple[tuple[int, str], ...], ...]
    side_lookup: dict[tuple[int, str], int]

    def face_of(self, segment: int, side: str) -> int:
        return self.side_lookup[(segment, side)]

    def __len__(self):
        return len(self.faces)


@dataclass(frozen=True)
class Shading:
    shaded: frozenset[int]
    unshaded: frozenset[int]
    r_infinity: int

    def is_shaded(self, face: int) -> bool:
        return face in self.shaded


@dataclass(frozen=True)
class RegionInvolution:
    mapping: dict[int, int]

    def __call__(self, face: int) -> int:
        return self.mapping[face]


def slot_table(d: SymmetricDiagram) -> dict[tuple[int, str], tuple[int, int]]:
    """Where each segment end sits: (segment, head|tail) -> (crossing id, slot)."""
    table = {}
    for c in d.crossings:
        for slot, seg in enumerate(c.pd):
            if slot == 0 or seg == c.over_in and slot in (1, 3):
                end = HEAD
            else:
                end = TAIL
            table[(seg, end)] = (c.id, slot)
    return table


def corner_side(c, slot: int) -> tuple[int, str]:
    """Side naming the corner between ``slot`` and ``slot + 1`` (counterclockwise)."""
    nxt = (slot + 1) % 4
    seg = c.pd[nxt]
    incoming = nxt == 0 or (nxt in (1, 3) and seg == c.over_in)
    return (seg, LEFT) if incoming else (seg, RIGHT)


def trace_faces(d: SymmetricDiagram) -> FaceComplex:
    n, top = d.n, d.num_segments
    table = slot_table(d)

    def step(seg, forward):
        # leave the vertex reached by the dart (seg, forward)
        if forward and seg == n + 1:
            return n + 2, True
        if forward and seg == top:
            return 1, True
        if not forward and seg == n + 2:
            return n + 1, False
        if not forward and seg == 1:
            return top, False
        cid, slot = table[(seg, HEAD if forward else TAIL)]
        c = d.crossing(cid)
        out = (slot + 3) % 4
        nseg = c.pd[out]
        leaves_forward = (out == 2) or (out in (1, 3) and nseg == c.over_out)
        return nseg, leaves_forward

    lookup: dict[tuple[int, str], int] = {}
    faces = []
    for s in range(1, top + 1):
        for side in (LEFT, RIGHT):
            if (s, side) in lookup:
                continue
            fid = len(faces)
            cycle = []
            seg, fwd = s, side == LEFT
            while True:
                key = (seg, LEFT if fwd else RIGHT)
                if key in lookup:
                    if key != (s, side):
                        raise ValidationError(
                            f"face tracing revisited side {key}; the code is corrupt",
                            where=f"segment {seg}")
                    break
                lookup[key] = fid
                cycle.append(key)
                seg, fwd = step(seg, fwd)
            faces.append(tuple(cycle))

    if len(faces) != n + 2:
        raise ValidationError(
            f"Euler relation fails: {len(faces)} faces, expected n + 2 = {n + 2}; "
            "the code is not a planar knot projection", where="faces")
    return FaceComplex(tuple(faces), lookup)


def checkerboard(d: SymmetricDiagram, fc: FaceComplex) -> Shading:
    """Two-colour the faces; the shaded class is the one containing h."""
    colour = {0: 0}
    adj: dict[int, set[int]] = {f: set() for f in range(len(fc))}
    for s in range(1, d.num_segments + 1):
        x, y = fc.face_of(s, LEFT), fc.face_of(s, RIGHT)
        if x == y:
            raise ValidationError("segment has the same face on both sides",
                                  where=f"segment {s}")
        adj[x].add(y)
        adj[y].add(x)
    stack = [0]
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if g not in colour:
                colour[g] = 1 - colour[f]
                stack.append(g)
            elif colour[g] == colour[f]:
                raise ValidationError(f"checkerboard colouring conflict at faces {f} and {g}",
                                      where="shading")
    if len(colour) != len(fc):
        raise ValidationError("face adjacency graph is disconnected", where="shading")

    h_face = fc.face_of(1, d.h_side_at_start)
    shaded = frozenset(f for f in colour if colour[f] == colour[h_face])
    unshaded = frozenset(colour) - shaded
    r_inf = fc.face_of(1, other_side(d.h_side_at_start))

    end_face = fc.face_of(d.n + 1, d.h_side_at_end)
    if end_face not in shaded:
        raise AdmissibilityError(
            "h arrives at F1 through an unshaded face; h is not contained in the "
            "shaded surface", where="h_side_at_end")
    if fc.face_of(d.n + 1, other_side(d.h_side_at_end)) != r_inf:
        raise AdmissibilityError(
            "the faces opposite h at F0 and at F1 differ, so h' would have to "
            "cross the diagram", where="h_side_at_end")
    return Shading(shaded, unshaded, r_inf)


def region_involution(d: SymmetricDiagram, fc: FaceComplex) -> RegionInvolution:
    """Faces permuted by the strong inversion.

    The reflection exchanges left and right while the knot orientation is
    reversed, so the side label is kept: (s, side) -> (sigma(s), side).
    """
    mapping = {}
    for fid, sides in enumerate(fc.faces):
        images = {fc.face_of(d.sigma(s), side) for s, side in sides}
        if len(images) != 1:
            raise ValidationError(
                f"the involution does not map face {fid} onto a single face",
                where=f"face {fid}")
        mapping[fid] = images.pop()
    for f, g in mapping.items():
        if mapping[g] != f:
            raise ValidationError(f"region map is not an involution at face {f}", where=f"face {f}")
        if len(fc.faces[f]) != len(fc.faces[g]):
            raise ValidationError(f"faces {f} and {g} have different sizes", where=f"face {f}")
    return RegionInvolution(mapping)


def check_region_involution(shading: Shading, rho: RegionInvolution) -> None:
    for f, g in rho.mapping.items():
        if shading.is_shaded(f) != shading.is_shaded(g):
            raise AdmissibilityError(f"region involution swaps colours of faces {f} and {g}",
                                     where=f"face {f}")
    if rho(shading.r_infinity) != shading.r_infinity:
        raise AdmissibilityError("the region containing h' is not invariant", where="r_infinity")


def describe_faces(fc: FaceComplex, shading: Shading | None = None) -> list[str]:
    lines = []
    for fid, sides in enumerate(fc.faces):
        tag = ""
        if shading is not None:
            tag = " shaded" if shading.is_shaded(fid) else " unshaded"
            if fid == shading.r_infinity:
                tag += " (h')"
        body = " ".join(f"{s}{'L' if side == LEFT else 'R'}" for s, side in sides)
        lines.append(f"face {fid}{tag}: {body}")
    return lines



def check_admissible(d: SymmetricDiagram):
    """All face-level checks; returns (faces, shading, region involution)."""
    fc = trace_faces(d)
    shading = checkerboard(d, fc)
    rho = region_involution(d, fc)
    check_region_involution(shading, rho)
    return fc, shading, rho
