"""Surgery-formula invariants: Casson, lambda1, lambda2, phi weights, and
the induced knot invariant psi2."""

from fractions import Fraction

import pytest

from ftik import catalog
from ftik.diagram import (
    SurgeryPresentation,
    closed_braid,
    disjoint_union,
    with_framings,
)
from ftik.errors import TruncationError
from ftik.invariants import (
    casson_invariant,
    jones_exp_derivative,
    jones_sublink_weight,
    normalized_jones_series,
    ohtsuki_lambda1,
    ohtsuki_lambda2,
    psi2_knot_invariant,
    required_order,
    sublink_alternating_series,
    sublink_alternating_series_naive,
)


def sp(name):
    return catalog.presentation(name)


def framed(name, framings):
    return SurgeryPresentation(with_framings(catalog.get(name).diagram, framings))


def test_casson_catalog_values():
    assert casson_invariant(sp("empty")) == 0
    assert casson_invariant(sp("unknot-plus1")) == 0
    assert casson_invariant(sp("trefoil-right-plus1")) == 1
    assert casson_invariant(sp("trefoil-right-minus1")) == -1
    assert casson_invariant(sp("figure-eight-plus1")) == -1
    assert casson_invariant(sp("trefoils-two-plus1")) == 2


def test_casson_additive_on_split_unions():
    a = catalog.get("trefoil-right").diagram
    b = catalog.get("figure-eight").diagram
    union = SurgeryPresentation(with_framings(disjoint_union(a, b), (1, 1)))
    assert casson_invariant(union) == casson_invariant(
        framed("trefoil-right", (1,))
    ) + casson_invariant(framed("figure-eight", (1,)))


def test_casson_presentation_independence_whitehead():
    # Surgery on one Whitehead component twists the other into a twist knot:
    # (f, +1) and (f, -1) surgeries reproduce trefoil/figure-eight surgeries.
    assert casson_invariant(framed("whitehead", (1, 1))) == casson_invariant(
        framed("trefoil-right", (1,))
    )
    assert casson_invariant(framed("whitehead", (1, -1))) == casson_invariant(
        framed("figure-eight", (1,))
    )


def test_lambda1_is_six_casson():
    for entry in catalog.asl_entries():
        p = SurgeryPresentation(entry.diagram)
        assert ohtsuki_lambda1(p) == 6 * casson_invariant(p)


def test_phi1_equals_six_a2():
    from ftik.skein import conway_a2

    for name in ("unknot", "trefoil-right", "figure-eight", "whitehead",
                 "borromean"):
        d = catalog.get(name).diagram
        assert jones_sublink_weight(d, 1) == 6 * conway_a2(d), name


def test_sublink_alternating_series_factored_matches_naive():
    split = disjoint_union(
        catalog.get("trefoil-right").diagram, catalog.get("figure-eight").diagram
    )
    assert sublink_alternating_series(split, 8).coeffs == \
        sublink_alternating_series_naive(split, 8).coeffs
    # A split unknot component kills the whole alternating sum.
    with_unknot = disjoint_union(split, catalog.get("unknot").diagram)
    assert sublink_alternating_series(with_unknot, 8).is_zero()


def test_lambda2_anchor_values():
    assert ohtsuki_lambda2(sp("trefoil-right-plus1")) == 39
    assert ohtsuki_lambda2(sp("trefoil-left-plus1")) == 63
    assert ohtsuki_lambda2(sp("figure-eight-plus1")) == 69
    assert ohtsuki_lambda2(sp("unknot-plus1")) == 0
    assert ohtsuki_lambda2(sp("empty")) == 0


def test_lambda2_diagram_independence():
    # The same trefoil presented on 2 and on 3 strands.
    two = closed_braid(2, [(0, 1)] * 3)
    three = closed_braid(3, [(0, 1), (1, 1)] * 2)
    assert three.components == 1
    a = ohtsuki_lambda2(SurgeryPresentation(with_framings(two, (1,))))
    b = ohtsuki_lambda2(SurgeryPresentation(with_framings(three, (1,))))
    assert a == b == 39


def test_lambda2_presentation_independence_whitehead():
    # Same manifolds as the twist-knot surgeries, via the Whitehead link.
    assert ohtsuki_lambda2(framed("whitehead", (1, 1))) == 39
    assert ohtsuki_lambda2(framed("whitehead", (1, -1))) == ohtsuki_lambda2(
        framed("figure-eight", (1,))
    )
    assert ohtsuki_lambda2(framed("whitehead", (-1, -1))) == ohtsuki_lambda2(
        framed("figure-eight", (-1,))
    )


def test_lambda2_truncation_error_reports_required_order():
    with pytest.raises(TruncationError) as exc:
        ohtsuki_lambda2(sp("trefoil-right-plus1"), order=2)
    assert exc.value.required_order >= 3


def test_required_order_floor():
    assert required_order(1) == 12
    assert required_order(7) == 16


def test_jones_exp_derivatives_frozen():
    tr = catalog.get("trefoil-right").diagram
    tl = catalog.get("trefoil-left").diagram
    f8 = catalog.get("figure-eight").diagram
    assert [jones_exp_derivative(tr, i) for i in (2, 3, 4)] == [-6, 36, -174]
    assert [jones_exp_derivative(tl, i) for i in (2, 3, 4)] == [-6, -36, -174]
    assert [jones_exp_derivative(f8, i) for i in (2, 3, 4)] == [6, 0, 30]
    unknot = catalog.get("unknot").diagram
    assert all(jones_exp_derivative(unknot, i) == 0 for i in (1, 2, 3, 4))


def test_normalized_jones_series_empty_is_one():
    s = normalized_jones_series(catalog.get("empty").diagram, 6)
    assert s.coeff(0) == 1 and all(s.coeff(k) == 0 for k in range(1, 7))


def test_psi2_values():
    assert psi2_knot_invariant(catalog.get("unknot").diagram) == 0
    assert psi2_knot_invariant(catalog.get("trefoil-right").diagram) == 39
    assert psi2_knot_invariant(catalog.get("trefoil-left").diagram) == 63
    assert psi2_knot_invariant(catalog.get("figure-eight").diagram) == 69


def test_psi2_rejects_links():
    with pytest.raises(ValueError):
        psi2_knot_invariant(catalog.get("whitehead").diagram)


def test_psi2_matches_lambda2_surgery_definition():
    for entry in catalog.entries():
        d = entry.diagram
        if d.components == 1 and d.framings == (0,):
            plus_one = SurgeryPresentation(with_framings(d, (1,)))
            assert psi2_knot_invariant(d) == ohtsuki_lambda2(plus_one), entry.name


def test_values_are_fractions():
    v = ohtsuki_lambda2(sp("trefoil-right-plus1"))
    assert isinstance(v, Fraction)
