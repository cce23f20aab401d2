from fractions import Fraction

import numpy as np
import pytest

from liesuper.algebra import SuperDim, is_valid
from liesuper.errors import OracleLimitError
from liesuper.free import free_dimension, free_nilpotent, pbw_dimensions, supercommutator
from liesuper.oracle import ideal_closure, presentation


def mobius(n: int) -> int:
    out, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            out = -out
        k += 1
    return -out if n > 1 else out


def witt(m: int, d: int) -> int:
    """Dimension of the degree-d part of the free Lie algebra on m generators."""
    return sum(mobius(d // k) * m**k for k in range(1, d + 1) if d % k == 0) // d


def test_two_generators_class_two():
    F = free_nilpotent([("x", 0), ("y", 1)], 2)
    assert F.degree_dims() == {1: (1, 1), 2: (1, 1)}
    assert sorted(F.word_label(i) for i in range(F.dim) if F.degree[i] == 2) == ["[x,y]", "[y,y]"]


def test_two_generators_class_three():
    F = free_nilpotent([("x", 0), ("y", 1)], 3)
    # degree 3: [x,[x,y]] odd and [x,[y,y]] even; [y,[x,y]] and [y,[y,y]] are dependent
    assert F.degree_dims() == {1: (1, 1), 2: (1, 1), 3: (1, 1)}
    assert is_valid(F.algebra)


def test_one_even_generator_is_abelian():
    for c in (1, 2, 4):
        assert free_nilpotent([("x", 0)], c).dim == 1


def test_one_odd_generator():
    for c in (2, 3, 4):
        F = free_nilpotent([("y", 1)], c)
        assert F.algebra.superdim == SuperDim(1, 1)


@pytest.mark.parametrize("m,c", [(2, 5), (3, 3), (4, 2)])
def test_even_generators_match_witt(m, c):
    F = free_nilpotent([(f"x{i}", 0) for i in range(m)], c)
    assert F.degree_dims() == {d: (witt(m, d), 0) for d in range(1, c + 1)}


def test_odd_pairs_are_symmetric():
    F = free_nilpotent([("a", 1), ("b", 1)], 2)
    # [a,a], [a,b], [b,b]
    assert F.degree_dims()[2] == (3, 0)


def test_pbw_counts_total():
    assert free_dimension([0, 1], 3) == 6
    assert pbw_dimensions(2, 0, 3) == {1: (2, 0), 2: (1, 0), 3: (2, 0)}


def test_supercommutator_signs():
    x, y = {(0,): 1}, {(1,): 1}
    # even-odd: xy - yx; odd-odd: yy + yy
    assert supercommutator(x, 0, y, 1) == {(0, 1): 1, (1, 0): -1}
    assert supercommutator(y, 1, y, 1) == {(1, 1): 2}


def test_limits():
    with pytest.raises(OracleLimitError):
        free_nilpotent([("x", 0)] * 3, 9)
    with pytest.raises(OracleLimitError):
        free_nilpotent([(f"x{i}", 0) for i in range(3)], 3, {"max_generators": 2})
    with pytest.raises(OracleLimitError):
        free_nilpotent([(f"x{i}", 0) for i in range(5)], 5, {"max_free_dim": 50})


def test_evaluate_words():
    F = free_nilpotent([("x", 0), ("y", 1)], 3)
    v = F.evaluate((0, (0, 1)))
    k = F.words.index((0, (0, 1)))
    assert v[k] == 1 and sum(1 for t in v if t) == 1


def test_ideal_closure():
    P = presentation([("x", 0), ("y", 1)], ["[y,y]", "[x,[x,y]]"], 3)
    F = free_nilpotent(P.generators, 3)
    assert ideal_closure(F, np.zeros((0, F.dim), dtype=object)).dim == 0
    gens = np.zeros((2, F.dim), dtype=object)
    gens[0, F.generator_index[0]] = 1
    gens[1, F.generator_index[1]] = 1
    assert ideal_closure(F, gens).dim == F.dim
    seeds = [F.evaluate((1, 1)), F.evaluate((0, (0, 1)))]
    R = ideal_closure(F, seeds)
    # [y,y], [x,[x,y]], [x,[y,y]] span R; F/R is H_1 of dim 3
    assert R.superdim == SuperDim(1, 1) + SuperDim(1, 0)
    assert F.dim - R.dim == 3
    assert all(Fraction(x).denominator == 1 for r in R.basis for x in r)
