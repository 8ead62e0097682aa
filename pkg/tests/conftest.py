import random

import pytest

from affschur.periodic import PeriodicMatrix


def pairs_with_matching_sums(mats):
    by_co = {}
    for m in mats:
        by_co.setdefault(m.col_sums(), []).append(m)
    for a in mats:
        for b in by_co.get(a.row_sums(), []):
            yield b, a


def random_tilde_matrix(rng: random.Random, n: int, band: int, max_entry: int, offdiag_terms: int = 2) -> PeriodicMatrix:
    """Random matrix with nonnegative off-diagonal inside the band window and
    diagonal entries in [-max_entry, max_entry]."""
    entries = []
    for _ in range(rng.randint(0, offdiag_terms)):
        i = rng.randint(1, n)
        off = rng.choice([k for k in range(-band, band + 1) if k])
        entries.append((i, i + off, rng.randint(1, max_entry)))
    for i in range(1, n + 1):
        v = rng.randint(-max_entry, max_entry)
        if v:
            entries.append((i, i, v))
    return PeriodicMatrix(n, entries)


def complete_to_row_sums(offdiag: PeriodicMatrix, target) -> PeriodicMatrix:
    """Add the diagonal making the row sums equal to target."""
    need = tuple(t - x for t, x in zip(target, offdiag.row_sums()))
    return offdiag + PeriodicMatrix.from_diag(need)


@pytest.fixture
def rng():
    return random.Random(20260808)
