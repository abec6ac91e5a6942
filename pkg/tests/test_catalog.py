import json

import pytest

from eqsig import catalog
from eqsig.diagram import parse, serialize
from eqsig.faces import check_admissible
from eqsig.forms import goeritz_matrix
from eqsig.invariant import is_alternating, sigma_tilde
from eqsig.tait import build_detailed, build_symmetric_diagram
from conftest import CORPUS_DIR
from corpus_graphs import CORPUS


def test_unknot_entry(unknot):
    assert unknot.n == 1 and unknot.on_axis == {1}
    r = sigma_tilde(unknot)
    assert r.sigma_tilde == 0 and r.intermediates["basis"] == []


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_torus_entries(n):
    d = catalog.build_torus_2_odd(n)
    assert d.n == 2 * n + 1
    assert len(d.on_axis) == 1 and len(d.involution) == n
    assert is_alternating(d)
    check_admissible(d)
    assert sigma_tilde(d).sigma_tilde == -2 * n


@pytest.mark.parametrize("bad", [0, -1, 1.5, "2"])
def test_torus_rejects_bad_n(bad):
    with pytest.raises(ValueError):
        catalog.build_torus_2_odd(bad)


def test_7_4_data_files_match_graphs():
    for direction, graph in (("plus", catalog.graph_7_4b_plus), ("minus", catalog.graph_7_4b_minus)):
        built = build_symmetric_diagram(graph(), f"7_4b_{direction}")
        assert catalog.build_7_4(direction) == built


def test_7_4_label_file_matches_graph():
    built = build_detailed(catalog.graph_7_4b_minus(), "7_4b_minus")
    want = {k: built.regions[v] for k, v in catalog.REGION_LABELS_7_4B_MINUS.items()}
    assert catalog.region_labels_7_4b_minus() == want
    assert list(catalog.region_labels_7_4b_minus()) == list(catalog.REGION_ORDER_7_4B_MINUS)


def test_7_4_minus_region_counts(k74_minus):
    fc, sh, rho = check_admissible(k74_minus)
    assert len(sh.unshaded) == 9
    assert len(goeritz_matrix(k74_minus, fc, sh).basis) == 8


def test_7_4_plus_alternating(k74_plus):
    assert is_alternating(k74_plus)


def test_bad_direction():
    with pytest.raises(ValueError):
        catalog.build_7_4("sideways")


@pytest.mark.parametrize("key", sorted(catalog.CATALOG))
def test_every_entry_round_trips_and_computes(key):
    d = catalog.CATALOG[key].build()
    assert parse(serialize(d)) == d
    sigma_tilde(d)


def test_entry_without_parameter_rejects_n():
    with pytest.raises(ValueError):
        catalog.CATALOG["unknot"].build(3)


@pytest.mark.parametrize("key", sorted(CORPUS))
def test_corpus_files_match_graphs(key):
    text = (CORPUS_DIR / f"{key}.json").read_text()
    assert serialize(build_symmetric_diagram(CORPUS[key](), key)) == text


def test_label_file_is_plain_json():
    raw = json.loads(catalog._read_data(catalog.LABEL_FILE_7_4B_MINUS))
    assert raw["diagram"] == catalog.DATA_FILES["minus"]
