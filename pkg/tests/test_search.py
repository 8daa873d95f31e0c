import pytest

from tforge.codes import gbtp_to_code, hamming, is_equitable, min_distance
from tforge.designs import verify_auto, verify_coloring
from tforge.errors import BadKind, BudgetZero, InconsistentParams
from tforge.search import (
    Budget,
    arrange_resolution,
    equitable_words,
    eswc_witness,
    max_eswc,
    plotkin_cap,
    search_coloring,
    search_gbtp,
    search_starter,
    witness_code_9_8_6,
)
from tforge.starters import develop_starter


def test_equitable_word_enumeration():
    words = list(equitable_words(4, 3))
    assert words[0] == (0, 0, 1, 2)
    assert len(words) == 36
    assert words == sorted(words)
    assert all(len(set(w)) == 3 for w in words)


@pytest.mark.parametrize("n,d,q,want", [
    (3, 2, 2, 3),
    (5, 3, 2, 4),
    (3, 2, 3, 6),
    (4, 3, 3, 6),
    (7, 4, 2, 7),
])
def test_small_exact_values(n, d, q, want):
    res = max_eswc(n, d, q, budget=2_000_000)
    assert res.M == want and res.exact
    assert is_equitable(res.code)
    if res.M >= 2:
        assert min_distance(res.code) >= d


def test_permutation_code_family():
    for q in (2, 3, 4, 5):
        res = max_eswc(q + 1, q + 1, q, budget=500_000)
        assert res.M == q and res.exact


def test_exactness_invariant_under_budget():
    a = max_eswc(4, 3, 3, budget=100_000)
    b = max_eswc(4, 3, 3, budget=10_000_000)
    assert a.exact and b.exact and a.M == b.M


def test_plotkin_prune_soundness():
    res = max_eswc(5, 4, 4, budget=2_000_000)
    assert res.exact and res.M == 12
    assert res.M <= plotkin_cap(5, 4, 4)


def test_budget_zero():
    with pytest.raises(BudgetZero):
        Budget(0)
    with pytest.raises(BudgetZero):
        max_eswc(3, 2, 2, budget=0)


def test_search_gbtp_finds_star_9():
    res = search_gbtp({"K": [2, 3], "v": 9, "m": 4, "n": 5, "star3": True},
                      budget=3_000_000)
    assert res.grid is not None
    assert verify_auto(res.grid).ok
    assert res.grid.star


def test_search_gbtp_exhausts_nonexistent_gbtd_3_3():
    res = search_gbtp({"K": [3], "v": 9, "m": 3, "n": 4}, budget=3_000_000)
    assert res.grid is None and res.exhausted


def test_search_gbtp_rejects_holes():
    with pytest.raises(InconsistentParams):
        search_gbtp({"K": [2, 3], "v": 9, "m": 4, "n": 5, "hole": {"w": 3}})


def test_search_starter_bad_kind():
    with pytest.raises(BadKind):
        search_starter("nope", {"m": 5})


def test_search_starter_gbtd_m5_exhausts():
    res = search_starter("gbtd", {"m": 5}, budget=5_000_000)
    assert not res.starters and res.exhausted


def test_search_starter_frgbtd_t5():
    res = search_starter("frgbtd", {"t": 5}, budget=5_000_000)
    assert res.starters
    g = develop_starter(res.starters[0])
    assert verify_auto(g).ok
    assert sorted(len(grp) for grp in g.groups) == [6] * 5


def test_search_coloring_fig3(fig3):
    res = search_coloring(fig3, 2)
    assert res.colors is not None
    trial = type(fig3)(fig3.kind, fig3.lam, fig3.k_set, fig3.points, fig3.rows,
                       fig3.cols, dict(fig3.cells), res.colors)
    assert verify_coloring(trial, 2).ok


def test_search_coloring_fig2_pi(fig2):
    res = search_coloring(fig2, 3, want_pi=True)
    assert res.colors is not None
    trial = type(fig2)(fig2.kind, fig2.lam, fig2.k_set, fig2.points, fig2.rows,
                       fig2.cols, dict(fig2.cells), res.colors)
    assert verify_coloring(trial, 3, want_pi=True).ok


def test_search_coloring_one_color_impossible(fig2):
    res = search_coloring(fig2, 1)
    assert res.colors is None


def test_witness_9_8_6():
    code = witness_code_9_8_6()
    assert code.size == 14
    assert is_equitable(code)
    assert min_distance(code) == 8


def test_eswc_witness_dispatch():
    code = eswc_witness(9, 8, 6, 14)
    assert code is not None and code.size == 14


def test_arrange_resolution_fig2_deletion(fig2):
    from tforge.algebra import ipoint

    inf = ipoint(0)
    classes = [[tuple(p for p in b if p != inf) for b in fig2.col_blocks(c)]
               for c in fig2.cols]
    g = arrange_resolution(classes, 5, 7)
    assert g is not None
    assert verify_auto(g).ok
    code = gbtp_to_code(g)
    assert code.size == 14 and min_distance(code) == 6 and is_equitable(code)
