from fractions import Fraction

import numpy as np
import pytest

from liesuper import catalog
from liesuper.algebra import (
    GradedSubspace,
    LieSuperalgebra,
    Parity,
    SuperDim,
    bracket,
    center,
    change_basis,
    derived_subalgebra,
    direct_sum,
    is_graded_ideal,
    is_nilpotent,
    is_valid,
    jacobi_residual,
    lower_central_series,
    nilpotency_class,
    quotient,
    superdim,
    validate,
)
from liesuper.errors import MalformedAlgebraError, NotAnIdealError, NotGradedError

F = Fraction


def so3_like(perturb=None):
    # [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=0
    br = {(0, 1): {2: 1}, (0, 2): {1: 1}}
    if perturb:
        br.update(perturb)
    return LieSuperalgebra(3, 0, br)


def test_catalog_algebras_validate():
    for L in (catalog.heisenberg_even(1, 0), catalog.heisenberg_even(1, 2), catalog.heisenberg_odd(2), catalog.abelian(2, 3)):
        assert validate(L) == []


def test_even_diagonal_is_a_skew_violation():
    L = LieSuperalgebra(2, 0, {(0, 0): {1: 1}})
    v = validate(L)
    assert [x.axiom for x in v] == ["skew-symmetry"]
    assert v[0].indices == (0, 0)


def test_odd_diagonal_is_allowed():
    assert is_valid(catalog.heisenberg_even(0, 1))


def test_grading_violation():
    # [x, y] with x even, y odd landing on an even vector
    L = LieSuperalgebra(2, 1, {(0, 2): {1: 1}})
    assert "grading" in {v.axiom for v in validate(L)}


def test_jacobi_violation_reported_on_basis_triple():
    assert validate(so3_like()) == []
    # [e2,e3] = e1 keeps Jacobi; [e2,e3] = e2 breaks it with residual e3
    assert validate(so3_like({(1, 2): {0: 1}})) == []
    bad = validate(so3_like({(1, 2): {1: 1}}))
    assert [(v.axiom, v.indices) for v in bad] == [("jacobi", (0, 1, 2))]
    # [e1,[e2,e3]] = [e1,e2] = e3; the other two terms vanish
    assert bad[0].residual == (0, 0, F(1))


def test_malformed_index_is_input_error():
    with pytest.raises(MalformedAlgebraError):
        LieSuperalgebra(2, 0, {(0, 5): {1: 1}})
    with pytest.raises(MalformedAlgebraError):
        LieSuperalgebra(2, 0, {(1, 0): {1: 1}})
    with pytest.raises(MalformedAlgebraError):
        LieSuperalgebra(2, 0, {(0, 1): {7: 1}})


def test_bracket_skew_symmetry_signs():
    H = catalog.heisenberg_odd(1)  # x, y, z with [x,y] = z
    x, y, z = H.unit(0), H.unit(1), H.unit(2)
    assert bracket(H, x, y) == z
    assert bracket(H, y, x) == tuple(-c for c in z)
    G = catalog.heisenberg_even(0, 1)  # x0 = z, y with [y,y] = z
    y = G.unit(1)
    assert bracket(G, y, y) == G.unit(0)


def test_bracket_bilinear():
    H = catalog.heisenberg_even(1, 0)
    u = (F(2), F(3), F(0))
    v = (F(-1), F(5), F(7))
    # [2x1+3x2, -x1+5x2+7z] = (10+3) z
    assert bracket(H, u, v) == (0, 0, F(13))


def test_derived_and_center():
    assert derived_subalgebra(catalog.abelian(2, 3)).dim == 0
    assert center(catalog.abelian(2, 3)).superdim == SuperDim(2, 3)
    H = catalog.heisenberg_even(1, 0)
    assert derived_subalgebra(H).superdim == SuperDim(1, 0)
    assert center(H).basis == ((0, 0, 1),)
    H1 = catalog.heisenberg_odd(1)
    assert derived_subalgebra(H1).superdim == SuperDim(0, 1)
    for m, n in [(1, 1), (2, 0), (0, 3)]:
        L = catalog.heisenberg_even(m, n)
        assert center(L).basis == derived_subalgebra(L).basis


def test_cover_center_and_quotient(cover):
    Z = center(cover)
    assert Z.basis == ((0, 0, 0, 1),)
    Q = quotient(cover, Z)
    assert Q.superdim == SuperDim(1, 2)
    assert bracket(Q, Q.unit(0), Q.unit(1)) == Q.unit(2)


def test_nilpotency_class(cover):
    assert nilpotency_class(catalog.abelian(3, 1)) == 1
    assert nilpotency_class(catalog.heisenberg_even(2, 1)) == 2
    assert nilpotency_class(cover) == 3
    series = lower_central_series(cover)
    assert [s.superdim for s in series[:4]] == [SuperDim(1, 3), SuperDim(0, 2), SuperDim(0, 1), SuperDim(0, 0)]


def test_not_nilpotent():
    L = so3_like()
    assert nilpotency_class(L) is None
    assert not is_nilpotent(L)


def test_direct_sum_blocks():
    H = catalog.heisenberg_even(1, 0)
    A = catalog.abelian(1, 1)
    S = direct_sum(H, A)
    assert S.superdim == SuperDim(4, 1)
    assert is_valid(S)
    # even part of A goes after the even part of H, odd part last
    assert bracket(S, S.unit(0), S.unit(3)) == tuple([F(0)] * 5)
    assert derived_subalgebra(S).superdim == SuperDim(1, 0)
    assert center(S).superdim == SuperDim(2, 1)


def test_graded_ideal_checks():
    H = catalog.heisenberg_even(1, 0)
    assert is_graded_ideal(H, derived_subalgebra(H))
    x1 = GradedSubspace.span(H.parities, [H.unit(0)])
    assert not is_graded_ideal(H, x1)
    with pytest.raises(NotAnIdealError):
        quotient(H, x1)
    with pytest.raises(NotGradedError):
        GradedSubspace.span(catalog.heisenberg_odd(1).parities, [(1, 1, 0)])


def test_superdim_of_subspace_and_algebra():
    H = catalog.heisenberg_odd(2)
    assert superdim(H) == SuperDim(2, 3)
    assert superdim(center(H)) == SuperDim(0, 1)


def test_change_basis_preserves_validity_and_dims():
    H = catalog.heisenberg_odd(1)
    M = np.array([[2, 0, 0], [0, 1, 1], [0, -1, 0]])
    K = change_basis(H, M)
    assert is_valid(K)
    assert derived_subalgebra(K).superdim == SuperDim(0, 1)
    with pytest.raises(ValueError):
        change_basis(H, np.array([[1, 1, 0], [0, 1, 0], [0, 0, 1]]))
    with pytest.raises(ValueError):
        change_basis(H, np.array([[1, 0, 0], [0, 1, 1], [0, 1, 1]]))


def test_jacobi_residual_zero_on_heisenberg():
    H = catalog.heisenberg_even(0, 2)
    assert not any(jacobi_residual(H, H.unit(1), H.unit(1), H.unit(2)))


def test_superdim_arithmetic():
    assert SuperDim(2, 1) + SuperDim(1, 1) == SuperDim(3, 2)
    assert str(SuperDim(1, 2)) == "(1|2)"
    with pytest.raises(ValueError):
        SuperDim(1, 0) - SuperDim(0, 1)
    assert Parity.ODD == 1
