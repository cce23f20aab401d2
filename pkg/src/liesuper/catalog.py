"""Constructors for the standard families.

``A(m|n)`` abelian, ``H(m,n)`` Heisenberg with even center, ``H_m`` Heisenberg
with odd center, and a few named examples.  Generator order follows the usual
presentations so serialized fixtures stay stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LieSuperalgebra, direct_sum

ONE = Fraction(1)


@dataclass(frozen=True)
class FamilyTag:
    kind: str  # "abelian" | "heisenberg_even" | "heisenberg_odd" | "named"
    params: tuple = ()

    def __post_init__(self):
        if self.kind == "named":
            return
        if any(p < 0 for p in self.params):
            raise ValueError("family parameters must be nonnegative")
        if self.kind == "heisenberg_even" and sum(self.params) < 1:
            raise ValueError("H(m,n) needs m+n >= 1")
        if self.kind == "heisenberg_odd" and self.params[0] < 1:
            raise ValueError("H_m needs m >= 1")

    def __str__(self):
        if self.kind == "abelian":
            return "A({}|{})".format(*self.params)
        if self.kind == "heisenberg_even":
            return "H({},{})".format(*self.params)
        if self.kind == "heisenberg_odd":
            return "H_{}".format(*self.params)
        return str(self.params[0])


def abelian(m: int, n: int) -> LieSuperalgebra:
    if m < 0 or n < 0:
        raise ValueError("A(m|n) needs m, n >= 0")
    labels = tuple(f"a{i + 1}" for i in range(m)) + tuple(f"b{j + 1}" for j in range(n))
    return LieSuperalgebra(m, n, {}, f"A({m}|{n})", labels)


def heisenberg_even(m: int, n: int) -> LieSuperalgebra:
    """H(m,n): even x_1..x_2m, z and odd y_1..y_n with [x_i, x_{m+i}] = [y_j, y_j] = z."""
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError("H(m,n) needs m, n >= 0 and m+n >= 1")
    z = 2 * m
    brackets = {(i, m + i): {z: ONE} for i in range(m)}
    for j in range(n):
        y = 2 * m + 1 + j
        brackets[(y, y)] = {z: ONE}
    labels = tuple(f"x{i + 1}" for i in range(2 * m)) + ("z",) + tuple(f"y{j + 1}" for j in range(n))
    return LieSuperalgebra(2 * m + 1, n, brackets, f"H({m},{n})", labels)


def heisenberg_odd(m: int) -> LieSuperalgebra:
    """H_m: even x_1..x_m, odd y_1..y_m and odd central z with [x_j, y_j] = z."""
    if m < 1:
        raise ValueError("H_m needs m >= 1")
    z = 2 * m
    brackets = {(j, m + j): {z: ONE} for j in range(m)}
    labels = tuple(f"x{j + 1}" for j in range(m)) + tuple(f"y{j + 1}" for j in range(m)) + ("z",)
    return LieSuperalgebra(m, m + 1, brackets, f"H_{m}", labels)


def _cover_of_h1() -> LieSuperalgebra:
    # x even; y, r, z odd; [x,y] = r, [x,r] = z
    return LieSuperalgebra(1, 3, {(0, 1): {2: ONE}, (0, 2): {3: ONE}}, "cover_of_H1", ("x", "y", "r", "z"))


_NAMED = {"cover_of_H1": _cover_of_h1}


def named_example(label: str) -> LieSuperalgebra:
    try:
        return _NAMED[label]()
    except KeyError:
        raise KeyError(f"unknown example {label!r}; known: {sorted(_NAMED)}") from None


def named_labels() -> list[str]:
    return sorted(_NAMED)


def construct(tag: FamilyTag) -> LieSuperalgebra:
    if tag.kind == "abelian":
        return abelian(*tag.params)
    if tag.kind == "heisenberg_even":
        return heisenberg_even(*tag.params)
    if tag.kind == "heisenberg_odd":
        return heisenberg_odd(*tag.params)
    if tag.kind == "named":
        return named_example(tag.params[0])
    raise ValueError(f"unknown family {tag.kind!r}")


def with_abelian(L: LieSuperalgebra, r: int, s: int) -> LieSuperalgebra:
    """``L ⊕ A(r|s)``, or ``L`` itself when ``r = s = 0``."""
    if r == 0 and s == 0:
        return L
    return direct_sum(L, abelian(r, s), name=f"{L.name}+A({r}|{s})")


def parse_tag(text: str) -> LieSuperalgebra:
    """Build an algebra from a textual tag.

    Accepted forms: ``A(m|n)``, ``H(m,n)``, ``H_m``, a named example label,
    and sums joined with ``+`` such as ``H(1,0)+A(2|0)``.
    """
    import re

    parts = [p.strip() for p in text.replace("⊕", "+").split("+")]
    algs = []
    for p in parts:
        if m := re.fullmatch(r"A\((\d+)\|(\d+)\)", p):
            algs.append(abelian(int(m[1]), int(m[2])))
        elif m := re.fullmatch(r"H\((\d+),(\d+)\)", p):
            algs.append(heisenberg_even(int(m[1]), int(m[2])))
        elif m := re.fullmatch(r"H_\{?(\d+)\}?", p):
            algs.append(heisenberg_odd(int(m[1])))
        elif p in _NAMED:
            algs.append(named_example(p))
        else:
            raise ValueError(f"unknown algebra tag {p!r}")
    out = algs[0]
    for a in algs[1:]:
        out = direct_sum(out, a, name=f"{out.name}+{a.name}")
    return out
