import pytest

from liesuper import catalog
from liesuper.algebra import SuperDim, bracket, center, derived_subalgebra, is_valid, nilpotency_class


def test_abelian():
    L = catalog.abelian(2, 3)
    assert L.superdim == SuperDim(2, 3)
    assert derived_subalgebra(L).dim == 0
    assert catalog.abelian(1, 0).dim == 1
    assert catalog.abelian(0, 0).dim == 0


def test_heisenberg_even_classical():
    H = catalog.heisenberg_even(1, 0)
    assert H.superdim == SuperDim(3, 0)
    assert H.basis_labels() == ("x1", "x2", "z")
    assert bracket(H, H.unit(0), H.unit(1)) == H.unit(2)


def test_heisenberg_even_odd_part():
    H = catalog.heisenberg_even(0, 1)
    assert H.superdim == SuperDim(1, 1)
    assert bracket(H, H.unit(1), H.unit(1)) == H.unit(0)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_heisenberg_odd(m):
    H = catalog.heisenberg_odd(m)
    assert H.superdim == SuperDim(m, m + 1)
    z = H.unit(2 * m)
    for j in range(m):
        assert bracket(H, H.unit(j), H.unit(m + j)) == z
    assert center(H).superdim == SuperDim(0, 1)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(4) if m + n >= 1])
def test_heisenberg_even_structure(m, n):
    H = catalog.heisenberg_even(m, n)
    assert is_valid(H)
    assert H.superdim == SuperDim(2 * m + 1, n)
    assert center(H).basis == derived_subalgebra(H).basis
    assert derived_subalgebra(H).superdim == SuperDim(1, 0)
    assert nilpotency_class(H) == 2


def test_rejects_bad_parameters():
    for f, args in [(catalog.heisenberg_even, (0, 0)), (catalog.heisenberg_odd, (0,)), (catalog.abelian, (-1, 0))]:
        with pytest.raises(ValueError):
            f(*args)
    with pytest.raises(ValueError):
        catalog.FamilyTag("heisenberg_even", (0, 0))


def test_named_examples():
    assert catalog.named_labels() == ["cover_of_H1"]
    with pytest.raises(KeyError):
        catalog.named_example("nope")


def test_construct_and_tags():
    assert catalog.construct(catalog.FamilyTag("heisenberg_odd", (2,))) == catalog.heisenberg_odd(2)
    assert str(catalog.FamilyTag("abelian", (1, 2))) == "A(1|2)"
    L = catalog.parse_tag("H(1,0)+A(2|0)")
    assert L.superdim == SuperDim(5, 0)
    assert catalog.parse_tag("H_1 ⊕ A(0|1)").superdim == SuperDim(1, 3)
    assert catalog.parse_tag("cover_of_H1").superdim == SuperDim(1, 3)
    with pytest.raises(ValueError):
        catalog.parse_tag("K(1)")


def test_with_abelian_identity():
    H = catalog.heisenberg_even(1, 0)
    assert catalog.with_abelian(H, 0, 0) is H
