"""Equivariant connected sum and mirror image of symmetric diagrams."""

from __future__ import annotations

from .diagram import SymmetricDiagram, make_diagram, other_side, validate


def reverse_traversal(d: SymmetricDiagram) -> SymmetricDiagram:
    """Same picture traversed the other way round.

    Segment j becomes sigma(j), so F0 and F1 keep their roles and h keeps
    its orientation; every segment is run backwards, so both h sides flip.
    """
    s = d.sigma
    crossings = [(c.id, (s(c.pd[2]), s(c.pd[3]), s(c.pd[0]), s(c.pd[1]))) for c in d.crossings]
    return make_diagram(d.name, d.n, crossings, d.on_axis, d.involution,
                        other_side(d.h_side_at_start), other_side(d.h_side_at_end))


def connect_sum(d1: SymmetricDiagram, d2: SymmetricDiagram, name: str | None = None) -> SymmetricDiagram:
    """Splice ``d2`` in at the terminal fixed point of ``d1``.

    The strand leaving F1 of ``d1`` runs on into segment 1 of ``d2`` and the
    strand returning to F0 of ``d2`` runs on into segment n1+2 of ``d1``; the
    two half-axes h join into one.  No crossings are added.  When h meets
    the two splice points from opposite sides, ``d2`` is first traversed
    backwards so the strands line up.
    """
    d1, d2 = validate(d1), validate(d2)
    if d1.h_side_at_end != d2.h_side_at_start:
        d2 = reverse_traversal(d2)
    n1, n2 = d1.n, d2.n

    def first(j):
        return j if j <= n1 + 1 else j + 2 * n2

    def second(j):
        return n1 + j

    crossings = [(c.id, tuple(first(x) for x in c.pd)) for c in d1.crossings]
    crossings += [(c.id + n1, tuple(second(x) for x in c.pd)) for c in d2.crossings]
    on_axis = set(d1.on_axis) | {c + n1 for c in d2.on_axis}
    pairs = list(d1.involution) + [(a + n1, b + n1) for a, b in d2.involution]
    return make_diagram(name or f"{d1.name} # {d2.name}", n1 + n2, crossings, on_axis, pairs,
                        d1.h_side_at_start, d2.h_side_at_end)


def mirror(d: SymmetricDiagram, name: str | None = None) -> SymmetricDiagram:
    """Switch every crossing in place.

    The old over strand becomes the under strand, so the pd tuple is
    rotated to start at its incoming segment; the plane picture, the axis
    and all symmetry data stay as they are.
    """
    crossings = []
    for c in d.crossings:
        i, j, k, l = c.pd
        crossings.append((c.id, (l, i, j, k) if c.sign == 1 else (j, k, l, i)))
    if name is None:
        name = d.name[2:] if d.name.startswith("m ") else f"m {d.name}"
    return make_diagram(name, d.n, crossings, d.on_axis, d.involution,
                        d.h_side_at_start, d.h_side_at_end)
