import csv
import io
import json

import pytest

from dihedral_integral import census
from dihedral_integral.census import (
    CensusDisagreement,
    audit_set,
    canonical_s2,
    count_sets,
    enumerate_sets,
    negation_blocks,
    run_census,
    sample_sets,
)
from dihedral_integral.errors import BadModulus
from dihedral_integral.group import in_boolean_algebra, is_generating, validate_connection_set
from dihedral_integral.integrality import dp_integral_sets
from dihedral_integral.numtheory import is_prime


def test_blocks():
    assert negation_blocks(7) == [(1, 6), (2, 5), (3, 4)]
    assert negation_blocks(6) == [(1, 5), (2, 4), (3,)]


@pytest.mark.parametrize("n, kw, count", [(7, {}, 1024), (6, {}, 512), (3, {"nonempty_s2": True}, 14)])
def test_enumeration_counts(n, kw, count):
    sets = list(enumerate_sets(n, **kw))
    assert len(sets) == count == len(set(sets))


def test_count_formula():
    for n in range(3, 10):
        assert count_sets(n) == sum(1 for _ in enumerate_sets(n))


def test_enumeration_is_deterministic():
    assert list(enumerate_sets(5)) == list(enumerate_sets(5))


def test_filters():
    for S in enumerate_sets(6, connected_only=True):
        assert is_generating(S)
    for S in enumerate_sets(6, s1_in_b_only=True):
        assert in_boolean_algebra(S.s1, 6) is not None
    rot = list(enumerate_sets(7, up_to_rotation=True))
    assert all(tuple(sorted(S.s2)) == canonical_s2(S.s2, 7) for S in rot)
    # 7 prime: 2^7 subsets fall into (2^7 - 2)/7 + 2 = 20 rotation classes
    assert len(rot) == 8 * 20


def test_enumeration_errors():
    with pytest.raises(ValueError):
        list(enumerate_sets(13))
    with pytest.raises(BadModulus):
        list(enumerate_sets(2))
    first = next(iter(enumerate_sets(13, nonempty_s2=True, cap=13)))
    assert first.n == 13 and first.s2


def test_census_small():
    rep = run_census(3, nonempty_s2=True)
    s = rep.summary
    assert s["total"] == 14 and s["integral"] == 14 and s["disagreements"] == 0


@pytest.mark.parametrize("p", [3, 5, 7])
def test_census_matches_dp(p):
    rep = run_census(p, nonempty_s2=True)
    assert set(rep.integral_sets()) == set(dp_integral_sets(p))
    assert rep.summary["integral"] == 2 * (2 * p + 1)


@pytest.mark.parametrize("n", range(3, 9))
def test_zero_disagreements(n):
    rep = run_census(n)
    s = rep.summary
    assert s["disagreements"] == 0 and s["total"] == count_sets(n)
    assert s["integral"] == s["sufficient"] + s["integral_not_sufficient"]
    for row in rep.rows:
        if row.integral_not_sufficient:
            assert row.k_integrality is not None and row.k_integrality >= 1
            if is_prime(n):
                assert row.k_integrality in (1, 2)


def test_rows_carry_exact_spectra():
    rep = run_census(5)
    for row in rep.rows:
        if row.verdict_exact:
            assert sum(k for _, k in row.spectrum) == 10
        else:
            assert row.spectrum is None


def test_parallel_matches_serial():
    a = run_census(5, workers=1)
    b = run_census(5, workers=2)
    assert [r.S for r in a.rows] == [r.S for r in b.rows]
    assert a.summary == b.summary


def test_workers_env(monkeypatch):
    monkeypatch.setenv(census.WORKERS_ENV, "3")
    assert census.default_workers() == 3
    monkeypatch.setenv(census.WORKERS_ENV, "junk")
    assert census.default_workers() == 1


def test_outputs():
    rep = run_census(3, nonempty_s2=True)
    rows = list(csv.reader(io.StringIO(rep.to_csv())))
    assert rows[0] == census.CSV_HEADER and len(rows) == 15
    lines = rep.to_jsonl().splitlines()
    assert len(lines) == 14
    first = json.loads(lines[0])
    assert validate_connection_set(first["n"], first["s1"], first["s2"]) == rep.rows[0].S


def test_disagreement_aborts(monkeypatch):
    from dihedral_integral import oracle

    class Fake:
        integral = False
        roots = {}

    monkeypatch.setattr(oracle, "is_integral", lambda S: Fake())
    S = validate_connection_set(3, [], [0])
    with pytest.raises(CensusDisagreement) as info:
        audit_set(S)
    assert info.value.reproducer == S.to_json()


def test_sample_sets_reproducible():
    assert sample_sets(9, 5, 42) == sample_sets(9, 5, 42)
