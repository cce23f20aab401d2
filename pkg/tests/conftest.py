import numpy as np
import pytest
from hypothesis import settings

from liesuper import catalog
from liesuper.algebra import LieSuperalgebra, change_basis
from liesuper.reproduce import descriptors

# exact arithmetic on larger algebras is slow enough to trip the default deadline
settings.register_profile("exact", deadline=None, derandomize=True)
settings.load_profile("exact")


def random_basis_change(L: LieSuperalgebra, rng: np.random.Generator) -> np.ndarray:
    """Invertible parity-preserving integer matrix with small entries."""
    d, de = L.dim, L.dim_even
    while True:
        M = np.zeros((d, d), dtype=np.int64)
        M[:de, :de] = rng.integers(-2, 3, size=(de, de))
        M[de:, de:] = rng.integers(-2, 3, size=(d - de, d - de))
        if d == 0 or round(np.linalg.det(M.astype(float))) != 0:
            return M


def scrambled(L: LieSuperalgebra, seed: int) -> LieSuperalgebra:
    return change_basis(L, random_basis_change(L, np.random.default_rng(seed)))


GRID = descriptors(7)
GRID_IDS = [str(d) for d in GRID]


@pytest.fixture(scope="session")
def cover():
    return catalog.named_example("cover_of_H1")


# criterion number -> (passed, detail); printed after the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}
ACCEPTANCE_NOTES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    for note in ACCEPTANCE_NOTES:
        terminalreporter.write_line(note)
