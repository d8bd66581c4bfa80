"""Candidate enumeration, catalog IO, and the census itself."""

import pytest

from helpers import are_isomorphic, graphs_with_two_cubic_rest_quadratic
from permpoly.census import (
    CensusRecord,
    OutOfRange,
    ParseError,
    candidate_poly,
    enumerate_candidates,
    make_record,
    read_catalog,
    run_census,
    spec_is_extension,
    write_catalog,
)
from permpoly.graphs import (
    Cycle,
    DisjointUnion,
    Dumbbell,
    MatrixKind,
    Theta,
    degree_stats,
    generate,
)
from permpoly.permanent import perm_poly

L = MatrixKind.LAPLACIAN
Q = MatrixKind.SIGNLESS_LAPLACIAN


def test_candidates_n5():
    assert set(enumerate_candidates(5)) == {Theta(1, 1, 1), Theta(0, 1, 2)}


def test_candidates_n6():
    assert set(enumerate_candidates(6)) == {
        Dumbbell(3, 3, 0), Theta(0, 1, 3), Theta(0, 2, 2), Theta(1, 1, 2),
    }


def test_candidates_n8_contents():
    cands = set(enumerate_candidates(8))
    for expected in (Dumbbell(3, 3, 2), Dumbbell(3, 4, 1), Dumbbell(4, 4, 0),
                     Dumbbell(3, 5, 0), Theta(2, 2, 2),
                     DisjointUnion((Theta(1, 1, 1), Cycle(3)))):
        assert expected in cands
    assert DisjointUnion((Theta(0, 1, 1), Cycle(4))) in cands


def test_candidates_exclude_r0_on_request():
    with_r0 = set(enumerate_candidates(6, include_r0=True))
    without = set(enumerate_candidates(6, include_r0=False))
    assert Dumbbell(3, 3, 0) in with_r0
    assert Dumbbell(3, 3, 0) not in without
    assert without < with_r0


def test_candidates_out_of_range():
    with pytest.raises(OutOfRange):
        enumerate_candidates(4)
    with pytest.raises(OutOfRange):
        enumerate_candidates(17)


def test_candidate_soundness_degree_sequence():
    for n in range(5, 13):
        for spec in enumerate_candidates(n):
            g = generate(spec)
            assert g.n == n
            assert degree_stats(g).degree_sequence == (3, 3) + (2,) * (n - 2)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_candidate_completeness_brute_force(n):
    """An independent exhaustive search over the degree class finds exactly
    the candidate set (n = 8 runs in the acceptance suite)."""
    brute = graphs_with_two_cubic_rest_quadratic(n)
    cands = [generate(s) for s in enumerate_candidates(n)]
    assert len(brute) == len(cands)
    unmatched = list(range(len(cands)))
    for bg in brute:
        hits = [i for i in unmatched if are_isomorphic(bg, cands[i])]
        assert len(hits) == 1
        unmatched.remove(hits[0])
    assert not unmatched


def test_union_poly_multiplies_components():
    spec = DisjointUnion((Theta(1, 1, 1), Cycle(3)))
    expected = perm_poly(generate(Theta(1, 1, 1)), L) * perm_poly(generate(Cycle(3)), L)
    assert candidate_poly(spec, L) == expected


def test_extension_flag():
    assert spec_is_extension(Dumbbell(3, 3, 0))
    assert not spec_is_extension(Dumbbell(3, 3, 1))
    assert spec_is_extension(DisjointUnion((Dumbbell(3, 3, 0), Cycle(3))))
    assert not spec_is_extension(Theta(0, 1, 2))


def test_record_shape():
    rec = make_record(Theta(1, 1, 1), L)
    assert rec.n == 5
    assert len(rec.coefficients) == 6
    assert rec.coefficients[-1] == "1"
    assert len(rec.fingerprint) == 64


def test_run_census_n5():
    report = run_census(5, 5, kinds=(L,))
    assert len(report.records) == 2
    assert report.collisions == ()


def test_census_range_validation():
    with pytest.raises(OutOfRange):
        run_census(4, 6)
    with pytest.raises(OutOfRange):
        run_census(8, 7)


def test_catalog_round_trip(tmp_path):
    report = run_census(5, 6, kinds=(L,))
    path = tmp_path / "catalog.jsonl"
    write_catalog(report.records, path)
    assert tuple(read_catalog(path)) == report.records


def test_catalog_parse_error_names_line(tmp_path):
    report = run_census(5, 5, kinds=(L,))
    path = tmp_path / "catalog.jsonl"
    write_catalog(report.records, path)
    text = path.read_text().splitlines()
    text[1] = text[1][: len(text[1]) // 2]  # truncate the second record
    path.write_text("\n".join(text) + "\n")
    with pytest.raises(ParseError) as exc_info:
        read_catalog(path)
    assert exc_info.value.line_number == 2
    assert "line 2" in str(exc_info.value)


def test_census_thread_counts_byte_identical(tmp_path):
    a = run_census(5, 7, threads=1)
    b = run_census(5, 7, threads=3)
    pa, pb = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    write_catalog(a.records, pa)
    write_catalog(b.records, pb)
    assert pa.read_bytes() == pb.read_bytes()


def test_record_json_round_trip():
    rec = make_record(Dumbbell(3, 3, 0), Q)
    import json

    assert CensusRecord.from_dict(json.loads(rec.to_json())) == rec
