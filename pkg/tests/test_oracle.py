import time
from fractions import Fraction

import pytest

from liesuper import catalog
from liesuper.algebra import SuperDim, derived_subalgebra
from liesuper.errors import ClassBoundError, FormatError, OracleLimitError
from liesuper.oracle import (
    FreePresentation,
    central_extension_check,
    epicenter_oracle,
    exterior_square_oracle,
    hopf_multiplier,
    oracle_report,
    parse_relator,
    presentation,
    presentation_of,
    presented_algebra,
)

H1_GENS = [("x", 0), ("y", 1)]
H1_RELS = ["[y,y]", "[x,[x,y]]"]


def h1(cb=3):
    return presentation(H1_GENS, H1_RELS, cb)


def test_h1_multiplier_and_basis():
    t = time.perf_counter()
    m = hopf_multiplier(h1())
    assert m.superdim == SuperDim(1, 1)
    assert set(m.representatives) == {"[y,y]", "[x,[x,y]]"}
    assert time.perf_counter() - t < 10


def test_h1_presented_algebra_and_invariants():
    L = presented_algebra(h1())
    assert L.superdim == SuperDim(1, 2)
    assert exterior_square_oracle(h1()) == SuperDim(1, 2)
    assert epicenter_oracle(h1()).superdim == SuperDim(0, 0)
    assert central_extension_check(h1())


def test_h1_class_two_is_rejected():
    with pytest.raises(ClassBoundError):
        hopf_multiplier(h1(2))


def test_stability_one_class_up():
    assert hopf_multiplier(h1(), stable=True).superdim == SuperDim(1, 1)
    assert hopf_multiplier(h1(4)).superdim == SuperDim(1, 1)


@pytest.mark.parametrize(
    "L,mult,ext,epi",
    [
        (catalog.abelian(1, 0), (0, 0), (0, 0), (1, 0)),
        (catalog.heisenberg_even(1, 0), (2, 0), (3, 0), (0, 0)),
        (catalog.heisenberg_even(0, 1), (0, 0), (1, 0), (1, 0)),
        (catalog.heisenberg_odd(2), (4, 3), (4, 4), (0, 1)),
        (catalog.abelian(0, 1), (1, 0), (1, 0), (0, 0)),
    ],
)
def test_oracle_on_catalog(L, mult, ext, epi):
    for minimal in (False, True):
        r = oracle_report(presentation_of(L, minimal=minimal))
        assert (r.multiplier, r.exterior_square, r.epicenter) == (SuperDim(*mult), SuperDim(*ext), SuperDim(*epi))
        assert r.derived == derived_subalgebra(L).superdim


def test_epicenter_ideal_lives_in_target():
    H = catalog.heisenberg_even(0, 1)
    e = epicenter_oracle(presentation_of(H))
    assert e.algebra is H
    assert e.ideal.basis == derived_subalgebra(H).basis


def test_presentation_of_shapes():
    P = presentation_of(catalog.abelian(1, 1))
    assert len(P.generators) == 2
    assert sorted(P.render_relator(r) for r in P.relators) == ["[a1,b1]", "[b1,b1]"]
    P = presentation_of(catalog.heisenberg_even(1, 0))
    assert [lab for lab, _ in P.generators] == ["x1", "x2", "z"]
    assert sorted(P.render_relator(r) for r in P.relators) == ["[x1,x2] - z", "[x1,z]", "[x2,z]"]
    Pm = presentation_of(catalog.heisenberg_even(1, 0), minimal=True)
    assert [lab for lab, _ in Pm.generators] == ["x1", "x2"]


def test_cover_quotient_is_capable(cover):
    from liesuper.algebra import center, quotient

    Q = quotient(cover, center(cover))
    assert epicenter_oracle(presentation_of(Q)).superdim == SuperDim(0, 0)
    assert epicenter_oracle(presentation_of(cover)).superdim == SuperDim(0, 0)


def test_zero_presentation():
    P = presentation([("x", 0)], ["x"], 2)
    r = oracle_report(P)
    assert r.multiplier == r.exterior_square == r.epicenter == SuperDim(0, 0)
    P0 = presentation_of(catalog.abelian(0, 0))
    assert hopf_multiplier(P0).superdim == SuperDim(0, 0)


def test_limits_refuse():
    P = presentation_of(catalog.abelian(3, 0), class_bound=2)
    with pytest.raises(OracleLimitError):
        hopf_multiplier(P, {"max_generators": 2})
    with pytest.raises(OracleLimitError):
        hopf_multiplier(P.with_class_bound(9))


def test_presentation_validation():
    with pytest.raises(ValueError):
        FreePresentation((("x", 0), ("x", 1)), (), 2)
    with pytest.raises(ValueError):
        presentation(H1_GENS, ["[x,y] + x"], 3)  # mixed parity
    with pytest.raises(ValueError):
        presentation(H1_GENS, [], 1)


def test_parse_relator():
    labels = ["x", "y"]
    assert parse_relator("[x,y]", labels) == {(0, 1): 1}
    assert parse_relator("1/2*[y,y] - (x)", labels) == {(1, 1): Fraction(1, 2), 0: -1}
    assert parse_relator("[x,[x,y]]", labels) == {(0, (0, 1)): 1}
    # [y,x] = -[x,y] for x even, so these relators present the same algebra
    a = presented_algebra(presentation(H1_GENS, ["2*[x,y] + [y,x]", "[y,y]"], 3))
    b = presented_algebra(presentation(H1_GENS, ["[x,y]", "[y,y]"], 3))
    assert a.superdim == b.superdim == SuperDim(1, 1)
    with pytest.raises(FormatError) as e:
        parse_relator("[x,,y]", labels)
    assert e.value.column == 4
    with pytest.raises(FormatError):
        parse_relator("[x,q]", labels)
    with pytest.raises(FormatError):
        parse_relator("[x,y", labels)
