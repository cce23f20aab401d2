"""JSON file formats.

Algebra interchange (``version`` 1)::

    {"version": 1, "name": "H(1,0)", "dim_even": 3, "dim_odd": 0,
     "labels": ["x1", "x2", "z"],
     "brackets": [{"i": 0, "j": 1, "coeffs": [{"k": 2, "num": 1, "den": 1}]}]}

``labels`` and ``name`` are optional.  Only pairs ``i <= j`` are stored.

Presentation (``version`` 1)::

    {"version": 1,
     "generators": [{"label": "x", "parity": "even"}, {"label": "y", "parity": "odd"}],
     "relators": ["[y,y]", "[x,[x,y]]"],
     "class_bound": 3}

Relators use bracket notation with rational coefficients, e.g.
``"[x1,x2] - z"`` or ``"2*[y,[x,y]] + 1/2*[x,[y,y]]"``.  ``class_bound`` is
optional; without it the smallest admissible class is searched for.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebra import LieSuperalgebra
from .errors import FormatError, MalformedAlgebraError
from .oracle import FreePresentation, parse_relator, _normalize_relator, _LABEL

VERSION = 1


def _load(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(e.msg, e.lineno, e.colno) from None
    if not isinstance(data, dict):
        raise FormatError("top level must be a JSON object", 1, 1)
    if data.get("version") != VERSION:
        raise FormatError(f"unsupported version {data.get('version')!r} (expected {VERSION})")
    return data


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"{where}: expected an integer, got {value!r}")
    return value


def algebra_to_dict(L: LieSuperalgebra) -> dict:
    brackets = []
    for (i, j), coeffs in L.brackets.items():
        brackets.append(
            {"i": i, "j": j, "coeffs": [{"k": k, "num": c.numerator, "den": c.denominator} for k, c in coeffs]}
        )
    out = {"version": VERSION}
    if L.name:
        out["name"] = L.name
    out["dim_even"] = L.dim_even
    out["dim_odd"] = L.dim_odd
    if L.labels is not None:
        out["labels"] = list(L.labels)
    out["brackets"] = brackets
    return out


def dumps_algebra(L: LieSuperalgebra) -> str:
    return json.dumps(algebra_to_dict(L), indent=1) + "\n"


def loads_algebra(text: str) -> LieSuperalgebra:
    data = _load(text)
    de = _int(data.get("dim_even"), "dim_even")
    do = _int(data.get("dim_odd"), "dim_odd")
    raw = data.get("brackets", [])
    if not isinstance(raw, list):
        raise FormatError("brackets: expected a list")
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for n, entry in enumerate(raw):
        where = f"brackets[{n}]"
        if not isinstance(entry, dict):
            raise FormatError(f"{where}: expected an object")
        i, j = _int(entry.get("i"), where + ".i"), _int(entry.get("j"), where + ".j")
        if (i, j) in brackets:
            raise FormatError(f"{where}: pair ({i},{j}) listed twice")
        row: dict[int, Fraction] = {}
        for m, c in enumerate(entry.get("coeffs", [])):
            cw = f"{where}.coeffs[{m}]"
            k = _int(c.get("k"), cw + ".k")
            den = _int(c.get("den", 1), cw + ".den")
            if den == 0:
                raise FormatError(f"{cw}: zero denominator")
            row[k] = row.get(k, Fraction(0)) + Fraction(_int(c.get("num"), cw + ".num"), den)
        brackets[(i, j)] = row
    labels = data.get("labels")
    try:
        return LieSuperalgebra(de, do, brackets, data.get("name"), tuple(labels) if labels is not None else None)
    except MalformedAlgebraError as e:
        raise FormatError(str(e)) from None


def read_algebra(path: str | Path) -> LieSuperalgebra:
    return loads_algebra(Path(path).read_text())


def write_algebra(L: LieSuperalgebra, path: str | Path) -> None:
    Path(path).write_text(dumps_algebra(L))


_PARITY = {"even": 0, "odd": 1, 0: 0, 1: 1}


def _line_of(text: str, needle: str) -> int | None:
    pos = text.find(json.dumps(needle))
    if pos < 0:
        return None
    return text.count("\n", 0, pos) + 1


def loads_presentation(text: str) -> tuple[FreePresentation, bool]:
    """``(presentation, explicit)``; ``explicit`` is False when the class bound
    was not given (it is then set to 2 and must be searched for)."""
    data = _load(text)
    gens = []
    for n, g in enumerate(data.get("generators", [])):
        where = f"generators[{n}]"
        if not isinstance(g, dict) or "label" not in g:
            raise FormatError(f"{where}: expected {{label, parity}}")
        lab = g["label"]
        if not isinstance(lab, str) or not _LABEL.fullmatch(lab):
            raise FormatError(f"{where}: label {lab!r} is not an identifier", _line_of(text, str(lab)))
        if g.get("parity") not in _PARITY:
            raise FormatError(f"{where}: parity must be 'even' or 'odd'")
        gens.append((lab, _PARITY[g["parity"]]))
    labels = [lab for lab, _ in gens]
    rels = []
    for r in data.get("relators", []):
        if not isinstance(r, str):
            raise FormatError(f"relator {r!r} must be a string")
        try:
            rels.append(_normalize_relator(parse_relator(r, labels)))
        except FormatError as e:
            line = _line_of(text, r)
            col = e.column
            if line is not None and col is not None:
                # column inside the file: opening quote + offset
                start = text.find(json.dumps(r))
                col = start - text.rfind("\n", 0, start) + col
            raise FormatError(str(e).split(" (column")[0], line, col) from None
    explicit = "class_bound" in data
    cb = _int(data["class_bound"], "class_bound") if explicit else 2
    try:
        P = FreePresentation(tuple(gens), tuple(rels), cb)
    except ValueError as e:
        raise FormatError(str(e)) from None
    return P, explicit


def read_presentation(path: str | Path) -> tuple[FreePresentation, bool]:
    return loads_presentation(Path(path).read_text())


def dumps_presentation(P: FreePresentation) -> str:
    data = {
        "version": VERSION,
        "generators": [{"label": lab, "parity": "odd" if int(p) else "even"} for lab, p in P.generators],
        "relators": [P.render_relator(r) for r in P.relators],
        "class_bound": P.class_bound,
    }
    return json.dumps(data, indent=1) + "\n"
