from __future__ import annotations

import math

import pytest

from stabcodes.distance import additional_count
from stabcodes.tables import TABLE1, run_table


def _statuses(cells):
    return {c["cell"]: c["status"] for c in cells}


def test_table_one_cells():
    cells = {c["cell"]: c for c in run_table(1)}
    assert cells["n=32 additional"]["status"] == "matched"
    assert cells["n=32 decoder entries"]["got"] == 1 + 64 + math.comb(64, 2)
    # the two large cells disagree with the printed values; the formula is checked by brute force elsewhere
    assert cells["n=64 additional"]["exact"] == additional_count(64, 3, 3) == 5_698_051_968
    assert cells["n=128 additional"]["exact"] == additional_count(128, 3, 3) == 377_510_649_600
    assert {cells[f"n={1 << m} deficit"]["got"] for m, *_ in TABLE1} == {10, 20, 35}


def test_table_two_small_rows():
    cells = run_table(2, nmax=6)
    st = _statuses(cells)
    assert st["n=5 k=1"] == "matched"
    assert st["n=6 k=2"] == "matched"
    assert st["n=13 k=1"] == "skipped-budget"
    assert "mismatch" not in st.values()


@pytest.mark.parametrize("number, cell", [(3, "p=7"), (4, "n=8"), (5, "p=5")])
def test_qr_tables_first_cells(number, cell):
    st = _statuses(run_table(number, pmax=7))
    assert st[cell] == "matched"
    assert all(v == "skipped-budget" for k, v in st.items() if k != cell)


def test_unknown_table():
    with pytest.raises(ValueError):
        run_table(6)
