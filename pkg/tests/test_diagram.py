"""Diagram construction, validation, serialization, and moves."""

import json

import pytest

from ftik import catalog
from ftik.diagram import (
    LinkDiagram,
    SurgeryPresentation,
    closed_braid,
    disjoint_union,
    mirror,
    parallel,
    smooth_crossing,
    sublink,
    switch_crossing,
    with_framings,
)
from ftik.errors import DiagramError

TREFOIL_PD = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]


def test_from_pd_trefoil():
    d = LinkDiagram.from_pd(TREFOIL_PD)
    assert d.components == 1
    assert len(d.crossings) == 3
    assert d.validate() == []
    assert abs(d.writhe()) == 3


def test_from_pd_rejects_bad_arc_multiplicity():
    with pytest.raises(DiagramError) as exc:
        LinkDiagram.from_pd([(1, 2, 3, 4), (1, 2, 3, 5)])
    assert exc.value.violations


def test_validate_reports_framing_mismatch():
    d = closed_braid(2, [(0, 1)] * 3)
    bad = LinkDiagram(d.crossings, d.over_in, d.arc_component,
                      d.components, (1, 1), d.marker_components)
    assert any("framings" in v for v in bad.validate())


def test_closed_braid_components():
    assert closed_braid(2, [(0, 1)] * 3).components == 1
    assert closed_braid(2, [(0, 1)] * 2).components == 2
    # Untouched strands become marker components.
    d = closed_braid(3, [(0, 1)] * 2)
    assert d.components == 3
    assert d.unknotted_components == 1


def test_linking_matrix_hopf():
    hopf = catalog.get("hopf-positive").diagram
    lm = hopf.linking_matrix()
    assert lm[0][1] == lm[1][0] == 1


def test_linking_matrix_asl_zero():
    for name in ("whitehead", "borromean"):
        lm = catalog.get(name).diagram.linking_matrix()
        n = len(lm)
        assert all(lm[i][j] == 0 for i in range(n) for j in range(n) if i != j)


def test_json_roundtrip_bit_exact():
    for entry in catalog.entries():
        doc = entry.diagram.to_json_dict(entry.name)
        text = json.dumps(doc, sort_keys=True)
        name, rebuilt = LinkDiagram.from_json_dict(json.loads(text))
        assert name == entry.name
        assert json.dumps(rebuilt.to_json_dict(name), sort_keys=True) == text


def test_from_json_dict_missing_key():
    with pytest.raises(DiagramError):
        LinkDiagram.from_json_dict({"name": "x", "components": 0})


def test_mirror_involution_and_sign_flip():
    d = catalog.get("trefoil-right").diagram
    m = mirror(d)
    assert m.writhe() == -d.writhe()
    assert mirror(m).canonical_key() == d.canonical_key()


def test_switch_crossing_changes_sign():
    d = catalog.get("trefoil-right").diagram
    s = switch_crossing(d, 0)
    assert s.crossing_sign(0) == -d.crossing_sign(0)
    assert s.writhe() == d.writhe() - 2 * d.crossing_sign(0)


def test_smooth_crossing_trefoil_gives_hopf():
    d = catalog.get("trefoil-right").diagram
    s = smooth_crossing(d, 0)
    assert s.components == 2
    assert len(s.crossings) == 2
    assert abs(s.linking_matrix()[0][1]) == 1


def test_sublink():
    b = catalog.get("borromean").diagram
    sub = sublink(b, (0, 2))
    assert sub.components == 2
    assert sub.validate() == []
    # Any 2-component sublink of the Borromean rings is an unlink; its
    # crossings between the two survivors cancel but arcs stay consistent.
    assert sublink(b, ()).is_empty()


def test_disjoint_union():
    a = catalog.get("trefoil-right").diagram
    b = catalog.get("unknot").diagram
    u = disjoint_union(a, b)
    assert u.components == 2
    assert u.unknotted_components == 1
    assert u.validate() == []


def test_parallel_two_cable():
    d = catalog.get("trefoil-right").diagram
    c = parallel(d, 2)
    assert c.components == 2
    assert c.validate() == []
    lm = c.linking_matrix()
    # 0-framed parallel: copies have linking number 0 with each other.
    assert lm[0][1] == 0


def test_parallel_of_link():
    w = catalog.get("whitehead").diagram
    c = parallel(w, 2)
    assert c.components == 4
    assert c.validate() == []
    lm = c.linking_matrix()
    assert all(lm[i][j] == 0 for i in range(4) for j in range(4) if i != j)


def test_surgery_presentation_constraints():
    tref = catalog.get("trefoil-right").diagram
    SurgeryPresentation(with_framings(tref, (1,)))
    with pytest.raises(DiagramError):
        SurgeryPresentation(with_framings(tref, (2,)))
    hopf = catalog.get("hopf-positive").diagram
    with pytest.raises(DiagramError):
        SurgeryPresentation(with_framings(hopf, (1, 1)))


def test_surgery_presentation_mirror_negates_framings():
    sp = catalog.presentation("trefoil-right-plus1")
    assert sp.mirror().diagram.framings == (-1,)
