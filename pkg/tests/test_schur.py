import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import DATA
from tautilt import schur
from tautilt.catalog import load_quiver

PRINTED = json.loads((DATA / "young_characters.json").read_text())
TABLES = json.loads((DATA / "schur_tables.json").read_text())
PRIMES = st.sampled_from([2, 3, 5, 7])


@st.composite
def parts(draw, max_r=20):
    r = draw(st.integers(0, max_r))
    return schur.partitions(r)[draw(st.integers(0, len(schur.partitions(r)) - 1))]


def hooks(lam):
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
    return [lam[i] - j - 1 + conj[j] - i - 1 + 1 for i in range(len(lam)) for j in range(lam[i])]


def test_partition_parsing():
    assert schur.partition("6,5") == (6, 5)
    assert schur.partition([3, 0, 1][:2]) == (3,)
    with pytest.raises(ValueError):
        schur.partition("1,2")
    assert schur.fmt(()) == "0"


def test_partition_counts():
    assert [len(schur.partitions(r)) for r in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(schur.partitions(7, max_parts=2)) == 4


def test_core_examples():
    assert schur.p_core("6,5", 2) == (2, 1)
    assert schur.p_core("2,1", 2) == (2, 1)
    assert schur.p_core("11", 2) == (1,)
    assert schur.p_core("4,4", 3) == (1, 1)


@given(parts(), PRIMES)
def test_core_has_no_hook_divisible_by_p(lam, p):
    core = schur.p_core(lam, p)
    assert all(h % p for h in hooks(core))
    assert (sum(lam) - sum(core)) % p == 0
    assert schur.p_core(core, p) == core
    assert schur.p_weight(lam, p) >= 0


@given(parts(), PRIMES)
def test_core_of_conjugate(lam, p):
    conj = tuple(sum(1 for x in lam if x > j) for j in range(lam[0])) if lam else ()
    core = schur.p_core(lam, p)
    cc = tuple(sum(1 for x in core if x > j) for j in range(core[0])) if core else ()
    assert schur.p_core(conj, p) == cc


@given(st.integers(0, 200), PRIMES)
def test_digits(s, p):
    ds = schur.digits(s, p)
    assert sum(d * p ** i for i, d in enumerate(ds)) == s
    assert all(0 <= d < p for d in ds)


@pytest.mark.parametrize("r", sorted(PRINTED, key=int))
def test_printed_character_lists(r):
    for lam, chis in PRINTED[r].items():
        lam = schur.partition(lam)
        k = lam[1] if len(lam) > 1 else 0
        got = schur.young_character(2, int(r), k)
        assert [list(m) for m in got] == chis, lam


@given(st.integers(1, 40), PRIMES, st.data())
def test_young_character_shape(r, p, data):
    k = data.draw(st.integers(0, r // 2))
    lam = schur.partition((r - k, k))
    chis = schur.young_character(p, r, k)
    # chi^lambda occurs, every constituent dominates lambda
    assert lam in chis
    assert all(m[0] >= lam[0] for m in chis)
    # constituents lie in the block of lambda
    assert all(schur.p_core(m, p) == schur.p_core(lam, p) for m in chis)


@given(st.integers(1, 60), PRIMES)
def test_young_character_semisimple_when_p_large(r, p):
    if p > r:
        for k in range(r // 2 + 1):
            assert len(schur.young_character(p, r, k)) == 1


@given(st.integers(0, 60), st.integers(0, 60), PRIMES)
def test_eh_arrow_symmetric(s, t, p):
    assert schur.eh_arrow(p, s, t) == schur.eh_arrow(p, t, s)
    assert schur.eh_arrow(p, s, t) in (0, 1)
    assert schur.eh_arrow(p, s, s) == 0


@given(st.integers(1, 40), PRIMES)
def test_quiver_arrows_stay_in_blocks(r, p):
    q, blocks = schur.s2r_quiver(p, r)
    where = {v: i for i, b in enumerate(blocks) for v in b}
    assert all(where[a.source] == where[a.target] for a in q.arrows)
    assert sorted(v for b in blocks for v in b) == sorted(q.vertices)


def test_eh_examples():
    assert schur.eh_arrow(2, 10, 2) == 1
    assert schur.eh_arrow(2, 10, 6) == 0


@pytest.mark.parametrize("r,fname", [(10, "s2_10_p2.json"), (21, "s2_21_p2.json")])
def test_quiver_matches_drawing(r, fname):
    q, _ = schur.s2r_quiver(2, r)
    drawn = load_quiver(fname)
    assert schur.edge_set(q) == schur.edge_set(drawn)
    assert set(q.vertices) == set(drawn.vertices)


def test_quiver_r11():
    q, blocks = schur.s2r_quiver(2, 11)
    want = {frozenset(e) for e in [("10,1", "6,5"), ("6,5", "8,3"), ("11", "7,4")]}
    assert schur.edge_set(q) == want
    assert sorted(map(sorted, blocks)) == sorted(map(sorted, [["11", "9,2", "7,4"], ["10,1", "8,3", "6,5"]]))


@pytest.mark.parametrize("p", ["2", "3", "5"])
def test_tables(p):
    r0, r1 = TABLES["r_range"]
    for n, row in TABLES["tables"][p].items():
        got = [schur.classify(int(p), int(n), r).letter for r in range(r0, r1 + 1)]
        assert got == row, (p, n)


@given(st.sampled_from([0, 2, 3, 5, 7, 11]), st.integers(1, 8), st.integers(1, 30))
def test_classify_reduction_and_semisimplicity(p, n, r):
    v = schur.classify(p, n, r)
    if n > r:
        assert v.kind == schur.classify(p, r, r).kind
    if p == 0 or p > r or n == 1:
        assert v.kind == "semisimple"
    assert v.kind in schur.KINDS


@given(st.sampled_from([2, 3, 5]), st.integers(3, 7), st.integers(1, 30))
def test_infinite_propagates_to_more_rows(p, n, r):
    """S(n, r) is an idempotent truncation of S(n+1, r); tau-tilting infinite goes up in n."""
    if schur.classify(p, n, r).kind == "wild-infinite":
        assert schur.classify(p, n + 1, r).kind == "wild-infinite"


def test_classify_describe():
    assert schur.classify(3, 3, 7).describe() == "tame -> tau-tilting finite"
    assert schur.classify(2, 2, 8).tau_tilting_finite is None
    assert schur.classify(2, 2, 10).tau_tilting_finite is False
    with pytest.raises(ValueError):
        schur.classify(4, 2, 3)
    with pytest.raises(ValueError):
        schur.classify(2, 0, 3)


def test_table_text():
    txt = schur.table_text(2, 3, 6)
    lines = txt.splitlines()
    assert len(lines) == 3 and lines[1].split()[1:] == ["S", "F", "S", "T", "F", "W+"]
