import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tforge.codes import (
    Code,
    code_from_obj,
    code_stats,
    code_to_gbtp,
    code_to_obj,
    dumps_code,
    ec_table,
    ec_table_exhaustive,
    gbtp_to_code,
    is_equitable,
    loads_code,
    min_distance,
    optimality_cert_2q3,
    plotkin_check,
    symbol_weights,
    word_equitable,
)
from tforge.errors import MTooSmall, NotVerified, SymbolOutOfRange, TooFewWords
from tforge.starters import build_fq_gbtd_starter, develop_gbtd


def labeled_words(code):
    """Words as 1-based row numbers via the label map, keyed by point."""
    return [tuple(int(code.labels[s]) for s in w) for w in code.words]


def test_running_example_codewords(fig1):
    code = gbtp_to_code(fig1)
    assert code.q == 3 and code.n == 4 and code.size == 6
    assert labeled_words(code) == [
        (2, 1, 3, 2), (2, 2, 1, 3), (2, 3, 2, 1),
        (3, 1, 2, 3), (3, 2, 3, 1), (3, 3, 1, 2),
    ]


def test_symbol_weights_examples():
    assert symbol_weights((1, 0, 2, 1), 3) == (1, 2, 1)
    assert symbol_weights((0,) * 5, 2) == (5, 0)
    assert symbol_weights((0, 1, 2, 3, 4), 5) == (1, 1, 1, 1, 1)
    with pytest.raises(SymbolOutOfRange):
        symbol_weights((0, 5), 3)


def test_equitable_examples(fig1):
    assert is_equitable(gbtp_to_code(fig1))
    assert not word_equitable((0, 0, 0, 1), 3)
    assert word_equitable(tuple(range(6)), 6)


def test_min_distance_examples(fig1):
    assert min_distance(gbtp_to_code(fig1)) == 3
    assert min_distance(Code(2, 4, ((0, 0, 0, 0), (1, 1, 1, 1)))) == 4
    with pytest.raises(TooFewWords):
        min_distance(Code(2, 2, ((0, 1),)))


def test_capability_running_example(fig1):
    code = gbtp_to_code(fig1)
    stats = code_stats(code)
    assert stats.ec == (2, 3, 4)
    assert stats.capability == 2 == code.q - 1
    assert ec_table(code) == ec_table_exhaustive(code)


def test_capability_single_word_style():
    c = Code(2, 4, ((0, 0, 0, 0), (1, 1, 1, 1)))
    assert ec_table(c) == (4, 4)
    assert code_stats(c).capability == 1


def test_plotkin_examples():
    r = plotkin_check(10, 9, 7, 21)
    assert (r.lhs, r.rhs, r.holds, r.equality) == (1890, 1890, True, True)
    r = plotkin_check(4, 3, 3, 6)
    assert (r.lhs, r.rhs, r.holds, r.equality) == (45, 48, True, False)
    r = plotkin_check(29, 28, 16, 34)
    assert (r.lhs, r.rhs, r.holds) == (15708, 15689, False)


def test_plotkin_trivial_family_sanity():
    for q in range(2, 11):
        for n in range(q, 21):
            assert plotkin_check(n, n, q, q).holds


def test_roundtrip_running_example(fig1):
    code = gbtp_to_code(fig1)
    back = code_to_gbtp(code, fig1.k_set, fig1.lam, points=fig1.points)
    assert back.cells == fig1.cells
    assert back.rows == fig1.rows and back.cols == fig1.cols


def test_roundtrip_fig3(fig3):
    code = gbtp_to_code(fig3)
    back = code_to_gbtp(code, fig3.k_set, fig3.lam, points=fig3.points)
    assert back.cells == fig3.cells


def test_gbtd_7_code_distance():
    g = develop_gbtd(build_fq_gbtd_starter(7))
    code = gbtp_to_code(g)
    assert min_distance(code) == g.n - g.lam == 9


def test_gbtp_to_code_rejects_holes(fig7):
    with pytest.raises(NotVerified):
        gbtp_to_code(fig7)


def test_optimality_cert_values():
    cert = optimality_cert_2q3(7)
    assert (cert.lhs, cert.rhs, cert.violated) == (1200, 1199, True)
    cert = optimality_cert_2q3(16)
    assert (cert.lhs, cert.rhs, cert.violated) == (15708, 15689, True)
    with pytest.raises(MTooSmall):
        optimality_cert_2q3(6)


def random_code(rng, q, n, m):
    words = set()
    tries = 0
    while len(words) < m and tries < 200:
        words.add(tuple(rng.randrange(q) for _ in range(n)))
        tries += 1
    return Code(q, n, tuple(sorted(words)))


def test_ec_shortcut_matches_exhaustive_oracle():
    rng = random.Random(11)
    for _ in range(100):
        q = rng.randrange(2, 9)
        n = rng.randrange(2, 9)
        c = random_code(rng, q, n, rng.randrange(2, 7))
        assert ec_table(c) == ec_table_exhaustive(c)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.integers(2, 8), st.integers(0, 10 ** 6))
def test_ec_table_monotone_and_ends_at_n(q, n, seed):
    rng = random.Random(seed)
    c = random_code(rng, q, n, 3)
    table = ec_table(c)
    assert all(a <= b for a, b in zip(table, table[1:]))
    assert table[-1] == n


def test_code_file_roundtrip(fig1):
    code = gbtp_to_code(fig1)
    text = dumps_code(code)
    again = loads_code(text)
    assert code_to_obj(again) == code_to_obj(code)
    assert sorted(again.words) == sorted(code.words)
