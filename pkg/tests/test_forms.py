import random

import pytest

from eqsig.catalog import REGION_ORDER_7_4B_MINUS, build_torus_2_odd, region_labels_7_4b_minus
from eqsig.faces import RegionInvolution, check_admissible
from eqsig.forms import (GoeritzData, eigen_split, goeritz_eta, goeritz_matrix, is_equivariant,
                         restricted_forms, unshaded_corners)
from eqsig.invariant import is_alternating
from eqsig.linalg import congruent, direct_sum, signature
from reference_values import E_MINUS_7_4B_MINUS, E_PLUS_7_4B_MINUS, GOERITZ_7_4B_MINUS
from symgen import random_diagram
from test_linalg import det


def pipeline(d):
    fc, sh, rho = check_admissible(d)
    g = goeritz_matrix(d, fc, sh, rho)
    split = eigen_split(g, rho)
    return fc, sh, rho, g, split


def labelled_faces(d, fc):
    return {k: fc.face_of(*side) for k, side in region_labels_7_4b_minus().items()}


def test_7_4_minus_matrix_matches_print(k74_minus):
    fc, sh, rho, g, _ = pipeline(k74_minus)
    faces = labelled_faces(k74_minus, fc)
    pos = [g.basis.index(faces[k]) for k in REGION_ORDER_7_4B_MINUS]
    permuted = [[g.matrix[i][j] for j in pos] for i in pos]
    assert permuted == GOERITZ_7_4B_MINUS


def test_7_4_minus_labels_are_the_basis(k74_minus):
    fc, sh, rho, g, _ = pipeline(k74_minus)
    faces = labelled_faces(k74_minus, fc)
    assert sorted(faces.values()) == sorted(g.basis)
    for x in "abcd":
        assert rho(faces[x]) == faces[x + "'"]


def crossing_between(d, fc, sh, f, h):
    hits = [c.id for c in d.crossings if set(unshaded_corners(c, fc, sh)) == {f, h}]
    assert len(hits) == 1
    return hits[0]


def test_7_4_minus_eta_values(k74_minus):
    fc, sh, rho, g, _ = pipeline(k74_minus)
    faces = labelled_faces(k74_minus, fc)
    dd = crossing_between(k74_minus, fc, sh, faces["d"], faces["d'"])
    assert dd in k74_minus.on_axis
    assert goeritz_eta(k74_minus, fc, sh, dd) == -1
    ab = crossing_between(k74_minus, fc, sh, faces["a"], faces["b"])
    assert goeritz_eta(k74_minus, fc, sh, ab) == 1


def test_7_4_minus_restricted_forms(k74_minus):
    fc, sh, rho, g, split = pipeline(k74_minus)
    faces = labelled_faces(k74_minus, fc)
    assert [(faces[x], faces[x + "'"]) for x in "abcd"] == [tuple(sorted(p)) for p in split.pairs]
    m_plus, m_minus = restricted_forms(g, split)
    assert m_plus == E_PLUS_7_4B_MINUS
    assert m_minus == E_MINUS_7_4B_MINUS
    assert split.invariant == ()


def test_unknot_is_empty(unknot):
    fc, sh, rho, g, split = pipeline(unknot)
    assert g.basis == () and g.matrix == ()
    assert split.plus_basis == split.minus_basis == ()
    assert restricted_forms(g, split) == ([], [])


def test_trefoil_forms(trefoil):
    fc, sh, rho, g, split = pipeline(trefoil)
    assert len(g.basis) == 2
    m_plus, m_minus = restricted_forms(g, split)
    # by hand: triangle checkerboard graph, every sign -1, so off-diagonal +1 and
    # diagonal -2; then (x - y)G(x - y) = -6 and (x + y)G(x + y) = -2
    assert g.matrix == ((-2, 1), (1, -2))
    assert m_plus == [[-6]] and m_minus == [[-2]]


def test_eta_equals_ab_sign_on_axis_torus():
    from eqsig.diagram import crossing_sign
    for n in range(1, 6):
        d = build_torus_2_odd(n)
        fc, sh, rho = check_admissible(d)
        for cid in d.on_axis:
            assert goeritz_eta(d, fc, sh, cid) == crossing_sign(d, cid, "ab")


def test_invariant_region_goes_to_minus_space():
    # synthetic data: regions 1 and 2 swapped, region 3 fixed, r_infinity = 0
    g = GoeritzData(basis=(1, 2, 3), matrix=((2, 0, -1), (0, 2, -1), (-1, -1, 3)),
                    r_infinity=0)
    rho = RegionInvolution({0: 0, 1: 2, 2: 1, 3: 3})
    assert is_equivariant(g, rho)
    split = eigen_split(g, rho)
    assert split.plus_basis == ((1, -1, 0),)
    assert split.minus_basis == ((1, 1, 0), (0, 0, 1))
    assert split.invariant == (3,)
    m_plus, m_minus = restricted_forms(g, split)
    assert m_plus == [[4]]
    assert m_minus == [[4, -2], [-2, 3]]


def test_eigen_split_rejects_basis_leak():
    from eqsig.errors import ValidationError
    g = GoeritzData(basis=(1,), matrix=((1,),), r_infinity=0)
    with pytest.raises(ValidationError):
        eigen_split(g, RegionInvolution({0: 1, 1: 0}))


def check_form_properties(d):
    fc, sh, rho, g, split = pipeline(d)
    assert len(g.basis) == len(sh.unshaded) - 1
    full = g.full_matrix()
    assert all(sum(row) == 0 for row in full)
    assert all(full[i][j] == full[j][i] for i in range(len(full)) for j in range(len(full)))
    assert is_equivariant(g, rho)
    assert len(split.plus_basis) + len(split.minus_basis) == len(g.basis)
    m_plus, m_minus = restricted_forms(g, split)
    if g.basis:
        p = [list(col) for col in zip(*(split.plus_basis + split.minus_basis))]
        assert det(p) != 0
        assert congruent([list(r) for r in g.matrix], p) == direct_sum(m_plus, m_minus)
    sg, sp, sm = signature(g.matrix), signature(m_plus), signature(m_minus)
    assert sp.signature + sm.signature == sg.signature
    assert sp.rank + sm.rank == sg.rank
    return sp, sm


def test_catalog_form_properties(unknot, trefoil, t25, k74_plus, k74_minus):
    for d in (unknot, trefoil, t25, k74_plus, k74_minus):
        check_form_properties(d)


def test_random_form_properties():
    rng = random.Random(2)
    for _ in range(200):
        d = random_diagram(rng.randrange(10**9))
        sp, sm = check_form_properties(d)
        if is_alternating(d) and sp.dim:
            # definite of one common sign
            assert sp.z == sm.z == 0
            assert (sp.q == sm.q == 0) or (sp.p == sm.p == 0)


def test_admissible_diagrams_have_no_other_invariant_regions():
    rng = random.Random(8)
    for _ in range(200):
        d = random_diagram(rng.randrange(10**9))
        _, sh, rho, g, split = pipeline(d)
        assert split.invariant == ()
