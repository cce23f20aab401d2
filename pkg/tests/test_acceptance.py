"""Acceptance suite: one test per criterion, one summary line each.

Run with ``pytest tests/test_acceptance.py -v``; the summary lines appear in
the "acceptance criteria" section at the end of the report.
"""

import time
import zlib

import numpy as np
import pytest

from liesuper import catalog, formulas as fm
from liesuper.algebra import SuperDim, derived_subalgebra
from liesuper.capability import (
    FamilyDescriptor,
    capable_algebra_of_corank,
    corank_formula,
    corank_table,
    is_capable,
    is_capable_checked,
    multiplier_formula,
    recognize,
)
from liesuper.oracle import epicenter_oracle, hopf_multiplier, oracle_report, presentation, presentation_of
from liesuper.reproduce import descriptors

from conftest import ACCEPTANCE, ACCEPTANCE_NOTES, scrambled
from test_properties import TRIPLES, fuzz_jacobi

GRID = descriptors(7)
ORACLE_MAX_DIM = 7


def record(n: int, failures: list[str], detail: str) -> None:
    ok = not failures
    shown = detail if ok else f"{detail}; failures: " + "; ".join(failures[:6]) + (" ..." if len(failures) > 6 else "")
    ACCEPTANCE[n] = (ok, shown)
    assert ok, shown


@pytest.fixture(scope="module")
def grid_reports():
    """Oracle on the canonical presentation of every grid algebra."""
    t = time.perf_counter()
    out = {str(d): (d, oracle_report(presentation_of(d.construct()))) for d in GRID}
    return out, time.perf_counter() - t


def test_criterion_1_h1_multiplier():
    t = time.perf_counter()
    P = presentation([("x", 0), ("y", 1)], ["[y,y]", "[x,[x,y]]"], 3)
    m = hopf_multiplier(P)
    dt = time.perf_counter() - t
    fails = []
    if m.superdim != SuperDim(1, 1):
        fails.append(f"multiplier {m.superdim}")
    if set(m.representatives) != {"[y,y]", "[x,[x,y]]"}:
        fails.append(f"basis {m.representatives}")
    if dt >= 10:
        fails.append(f"runtime {dt:.1f}s")
    record(1, fails, f"M(H_1) = {m.superdim}, basis {{{', '.join(m.representatives)}}}, {dt:.2f}s")


def test_criterion_2_formula_oracle_grid(grid_reports):
    reports, dt = grid_reports
    fails = []
    for tag, (d, rep) in reports.items():
        f = multiplier_formula(d).value
        if f != rep.multiplier:
            fails.append(f"{tag}: formula {f}, oracle {rep.multiplier}")
    # the one published value that differs: the direct-sum term tensored with
    # H(0,1) itself rather than its abelianization
    d = FamilyDescriptor("heisenberg_even", (0, 1, 1, 0))
    published = fm.multiplier_direct_sum(SuperDim(0, 0), SuperDim(0, 0), SuperDim(1, 1), SuperDim(1, 0))
    got = reports[str(d)][1].multiplier
    ACCEPTANCE_NOTES.append(
        f"  known-divergent: M(H(0,1)+A(1|0)) published reading {published}, computed {got} "
        f"(formula {multiplier_formula(d).value})"
    )
    if published == got:
        fails.append("the documented discrepancy vanished; recheck")
    if dt >= 300:
        fails.append(f"runtime {dt:.0f}s")
    record(2, fails, f"{len(reports)} algebras of dim <= 7, oracle = formula, {dt:.1f}s")


def test_criterion_3_exterior_square(grid_reports):
    reports, _ = grid_reports
    fails = []
    for tag, (d, rep) in reports.items():
        if rep.exterior_square != rep.multiplier + rep.derived:
            fails.append(f"{tag}: {rep.exterior_square} != {rep.multiplier} + {rep.derived}")
        if rep.derived != derived_subalgebra(d.construct()).superdim:
            fails.append(f"{tag}: derived {rep.derived}")
    table = {
        "H(1,0)": SuperDim(3, 0),
        "H(0,1)": SuperDim(1, 0),
        "H_1": SuperDim(1, 2),
        "H_2": SuperDim(4, 4),
    }
    for tag, want in table.items():
        got = reports[tag][1].exterior_square
        if got != want:
            fails.append(f"{tag}: {got}, expected {want}")
    record(3, fails, f"ext = M + L' on {len(reports)} algebras; H(1,0),H(0,1),H_1,H_2 -> (3|0),(1|0),(1|2),(4|4)")


def _capable_set():
    out = [catalog.abelian(0, 1)]
    out += [catalog.abelian(m, n) for m in range(5) for n in range(5) if 2 <= m + n <= 4]
    H10, H1 = catalog.heisenberg_even(1, 0), catalog.heisenberg_odd(1)
    for r in range(3):
        for s in range(3 - r):
            out.append(catalog.with_abelian(H10, r, s))
            out.append(catalog.with_abelian(H1, r, s))
    return out


def _not_capable_set():
    return [
        catalog.abelian(1, 0),
        catalog.heisenberg_even(0, 1),
        catalog.heisenberg_even(2, 0),
        catalog.heisenberg_even(0, 2),
        catalog.heisenberg_even(1, 1),
        catalog.heisenberg_odd(2),
        catalog.with_abelian(catalog.heisenberg_even(0, 1), 1, 0),
    ]


def test_criterion_4_capability():
    fails = []
    n = 0
    for want, algs in (("capable", _capable_set()), ("not_capable", _not_capable_set())):
        for L in algs:
            n += 1
            name = str(recognize(L))
            table = is_capable(L)
            checked = is_capable_checked(L)
            zero = checked.epicenter_dim == SuperDim(0, 0)
            if zero != (want == "capable"):
                fails.append(f"{name}: epicenter {checked.epicenter_dim}")
            if table.status != want or checked.status != want or checked.agrees is not True:
                fails.append(f"{name}: table {table.status}, oracle {checked.status}")
    record(4, fails, f"{n} algebras, decision table and oracle epicenter agree")


def test_criterion_5_corank_table():
    fails, lines = [], []
    for k in range(5):
        for e in corank_table(k):
            if not e.constructible:
                if k != 0:
                    lines.append(f"{e.label} flagged")
                    if "not constructible" not in e.note:
                        fails.append(f"{e.label}: missing flag")
                continue
            L = e.descriptor.construct()
            t_formula = corank_formula(e.descriptor)
            t_oracle = fm.corank(L.superdim, oracle_report(presentation_of(L)).multiplier)
            if t_formula != k or t_oracle != k:
                fails.append(f"{e.label} listed {k}, formula {t_formula}, oracle {t_oracle}")
    # k = 0 is the parametric abelian family
    for m in range(4):
        for n in range(4):
            if corank_formula(FamilyDescriptor("abelian", (m, n))) != 0:
                fails.append(f"A({m}|{n}) corank nonzero")
    record(5, fails, "lists for k = 0..4 (" + ", ".join(lines) + ")")


def test_criterion_6_arbitrary_corank():
    fails, modes = [], []
    for k in range(9):
        L = capable_algebra_of_corank(k)
        d = recognize(L)
        t = corank_formula(d)
        if L.dim <= ORACLE_MAX_DIM:
            rep = oracle_report(presentation_of(L))
            t_or = fm.corank(L.superdim, rep.multiplier)
            if t_or != k or rep.epicenter != SuperDim(0, 0):
                fails.append(f"k={k}: oracle corank {t_or}, epicenter {rep.epicenter}")
            modes.append(f"{k}:oracle")
        else:
            if is_capable(L).status != "capable":
                fails.append(f"k={k}: table says {is_capable(L).status}")
            modes.append(f"{k}:formula+table")
        if t != k:
            fails.append(f"k={k}: formula corank {t}")
    record(6, fails, " ".join(modes))


def test_criterion_7_property_suites():
    fails = []
    # graded Jacobi fuzz
    algs = [(str(d), d.construct()) for d in GRID] + [("cover_of_H1", catalog.named_example("cover_of_H1"))]
    for name, L in algs:
        bad = fuzz_jacobi(L, TRIPLES, np.random.default_rng(zlib.crc32(name.encode())))
        if bad:
            fails.append(f"Jacobi {name}: {bad}")
    # recognize o construct over m, n, r, s <= 3
    rt = 0
    for m in range(4):
        for n in range(4):
            for r in range(4):
                for s in range(4):
                    cands = [FamilyDescriptor("abelian", (m, n))] if r == s == 0 else []
                    if m + n >= 1:
                        cands.append(FamilyDescriptor("heisenberg_even", (m, n, r, s)))
                    if m >= 1 and n == 0:
                        cands.append(FamilyDescriptor("heisenberg_odd", (m, r, s)))
                    for d in cands:
                        rt += 1
                        if recognize(d.construct()) != d:
                            fails.append(f"round trip {d}")
    # 20 recorded basis changes per algebra
    changes = 0
    for d in GRID:
        L = d.construct()
        status = is_capable(L).status
        for seed in range(20):
            v = is_capable(scrambled(L, seed))
            changes += 1
            if v.descriptor != d or v.status != status:
                fails.append(f"basis change {d} seed {seed}: {v.descriptor}, {v.status}")
    # Hopf stability at class + 1, on minimal presentations (a second presentation
    # of every grid algebra, compared with the canonical one as well)
    for d in GRID:
        L = d.construct()
        try:
            a = oracle_report(presentation_of(L, minimal=True), stable=True)
        except Exception as e:  # ClassBoundError on instability
            fails.append(f"stability {d}: {e}")
            continue
        b = oracle_report(presentation_of(L))
        if (a.multiplier, a.exterior_square, a.epicenter) != (b.multiplier, b.exterior_square, b.epicenter):
            fails.append(f"presentation dependence {d}")
    h1 = presentation([("x", 0), ("y", 1)], ["[y,y]", "[x,[x,y]]"], 3)
    if hopf_multiplier(h1, stable=True).superdim != SuperDim(1, 1):
        fails.append("stability H_1 presentation")
    record(
        7,
        fails,
        f"Jacobi {len(algs)}x{TRIPLES} triples, {rt} round trips, {changes} basis changes, "
        f"{len(GRID) + 1} stability checks",
    )
