import random
from collections import Counter

from eqsig.algebra import connect_sum, mirror, reverse_traversal
from eqsig.diagram import classify_strands, crossing_sign, other_side, parse, serialize, validate
from eqsig.faces import check_admissible
from eqsig.invariant import sigma_tilde
from symgen import random_diagram


def st(d):
    return sigma_tilde(d).sigma_tilde


def off_axis_ab_signs(d):
    arcs = classify_strands(d)
    return Counter(crossing_sign(d, c, "ab") for c in arcs.ids("ab", on_axis=False))


def test_trefoil_sum(trefoil):
    s = connect_sum(trefoil, trefoil)
    assert validate(s) is s
    assert s.num_segments == 2 * 6 + 2
    assert st(s) == -4


def test_unknot_is_neutral(unknot, k74_minus, trefoil):
    for d in (k74_minus, trefoil):
        assert st(connect_sum(d, unknot)) == st(d)
        assert st(connect_sum(unknot, d)) == st(d)


def test_kernel_example(k74_plus, k74_minus):
    assert st(connect_sum(k74_plus, mirror(k74_minus))) == 4


def test_mirror_values(trefoil, k74_minus):
    assert st(mirror(trefoil)) == 2
    assert st(mirror(k74_minus)) == 10


def test_mirror_is_involution(k74_minus):
    assert mirror(mirror(k74_minus)) == k74_minus


def test_mirror_keeps_symmetry_data(k74_minus):
    m = mirror(k74_minus)
    assert (m.on_axis, m.involution, m.h_side_at_start, m.h_side_at_end) == \
        (k74_minus.on_axis, k74_minus.involution, k74_minus.h_side_at_start, k74_minus.h_side_at_end)
    for a, b in zip(k74_minus.crossings, m.crossings):
        assert set(a.pd) == set(b.pd) and a.sign == -b.sign


def test_reverse_traversal_keeps_invariant(k74_minus, t25):
    for d in (k74_minus, t25):
        r = reverse_traversal(d)
        assert validate(r) is r
        assert r.h_side_at_start == other_side(d.h_side_at_start)
        assert st(r) == st(d)


def test_sum_needing_reversal(trefoil, k74_plus):
    # both catalog entries end on the left and start on the right
    assert trefoil.h_side_at_end != k74_plus.h_side_at_start
    r = reverse_traversal(k74_plus)
    assert trefoil.h_side_at_end == r.h_side_at_start
    assert st(connect_sum(trefoil, r)) == st(connect_sum(trefoil, k74_plus)) == -8


def test_sum_additive_counts(k74_plus, k74_minus):
    s = connect_sum(k74_plus, k74_minus)
    assert s.n == k74_plus.n + k74_minus.n
    assert len(s.on_axis) == len(k74_plus.on_axis) + len(k74_minus.on_axis)
    assert off_axis_ab_signs(s) == off_axis_ab_signs(k74_plus) + off_axis_ab_signs(k74_minus)
    assert s.h_side_at_start == k74_plus.h_side_at_start


def test_sum_output_round_trips(t25, k74_minus):
    s = connect_sum(t25, k74_minus)
    assert parse(serialize(s)) == s
    check_admissible(s)


def test_random_sums_and_mirrors():
    rng = random.Random(21)
    for _ in range(150):
        a = random_diagram(rng.randrange(10**9))
        b = random_diagram(rng.randrange(10**9))
        s = connect_sum(a, b)
        check_admissible(s)
        assert parse(serialize(s)) == s
        assert st(s) == st(a) + st(b)
        assert st(mirror(a)) == -st(a)
        assert mirror(mirror(a)) == a
