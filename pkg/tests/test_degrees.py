import itertools

import pytest
from hypothesis import given

import oracles
from conftest import nu_and_path, nu_word
from nutamari.degrees import (
    area_algorithm,
    degree_table,
    dyck_path_algorithm,
    in_degree,
    in_subposet,
    max_in_set,
    max_out_set,
    ones_from,
    out_degree,
    out_subposet,
    stair_checkpoints,
    staircase_algorithm,
    subposet,
)
from nutamari.paths import LatticePath, maximal_path, minimal_path, parse_path, path_from_left_area
from nutamari.posetcore import build_poset, is_isomorphic, SizeCapExceeded
from nutamari.tamari import tamari_poset, up_covers

M_DYCK_3_2 = parse_path("NEENEENEE")


def all_words(max_len):
    for n in range(1, max_len + 1):
        for t in itertools.product("NE", repeat=n):
            yield "".join(t)


# -- degrees --------------------------------------------------------------------


def test_out_degree_examples():
    assert out_degree(maximal_path(M_DYCK_3_2)) == 0
    assert out_degree(minimal_path(M_DYCK_3_2)) == 2
    nu = parse_path("NEE" * 4)
    for d in max_out_set(nu):
        assert len(set(d.la)) == 4 and out_degree(d) == 3


def test_in_degree_examples():
    assert in_degree(minimal_path(M_DYCK_3_2)) == 0
    assert in_degree(path_from_left_area((0, 0), parse_path("EENN"))) == 1
    d4 = path_from_left_area((0, 1, 1, 3), parse_path("EENNENN"))
    assert d4.ra == (2, 1, 2, 0)
    assert in_degree(d4) == 3


@given(nu_and_path(max_size=7))
def test_degrees_match_brute_force(case):
    nu, la = case
    d = path_from_left_area(la, parse_path(nu))
    assert out_degree(d) == oracles.out_degree(d.word, nu) == len(up_covers(d))
    assert in_degree(d) == oracles.in_degree(d.word, nu)
    # out-degree counts right-hand points preceded by an east step
    assert out_degree(d) == sum(1 for r, _, _ in d.rows if r > 0 and d.word[r - 1] == "E")


# -- staircase ------------------------------------------------------------------


def test_staircase_examples():
    nu = parse_path("NEENNNEEN")
    assert nu.left_area == (0, 2, 2, 2, 4)
    res = staircase_algorithm(nu)
    assert res.size == 3 and res.processed == (0, 0, 1, 2, 3)
    assert res.xi.word == "NN" + "EN" * 3 + "E"
    res = staircase_algorithm(parse_path("NNEENEEN"))
    assert res.size == 2 and res.xi.word == "NN" + "ENEN" + "EE"
    for w in ["EEEE", "NNNN"]:
        assert staircase_algorithm(parse_path(w)).size == 0


@given(nu_word(max_size=12))
def test_staircase_size_matches_brute_force(nu):
    res = staircase_algorithm(parse_path(nu))
    assert res.size == oracles.staircase_size(nu)
    assert res.xi.la == res.processed
    assert oracles.weakly_above(res.xi.word, nu)


# -- area / Dyck path algorithms ------------------------------------------------


def test_area_algorithm_small_example():
    d, tr = area_algorithm("EENNENN")
    assert [s.ra for s in tr.steps] == [(2, 2, 3, 2), (2, 2, 3, 1), (2, 1, 2, 1), (2, 1, 2, 0)]
    assert tr.start == (2, 2, 3, 3)
    assert d.ra == (2, 1, 2, 0)


def test_area_algorithm_larger_example():
    d, tr = area_algorithm("EEENNENNN")
    assert tr.start == (3, 3, 4, 4, 4)
    assert len(tr) == 8 and d.ra == (3, 2, 3, 1, 0)
    assert [s.i for s in tr.steps] == [4, 3, 4, 2, 4, 1, 2, 4]


def test_trace_retention_flag():
    _, tr = area_algorithm("EEENNENNN", trace=False)
    assert tr.steps == [] and len(tr) == 8


def _area_condition_holds(ra):
    """Brute force: is there any i, j > i with equal nonzero RA and larger values between?"""
    n = len(ra)
    for i in range(n):
        for j in range(i + 1, n):
            if ra[i] == ra[j] != 0 and all(ra[t] > ra[i] for t in range(i + 1, j)):
                return True
    return False


def test_strictly_increasing_nu_needs_no_steps():
    checked = 0
    for w in all_words(10):
        la = LatticePath(w).left_area
        if all(a < b for a, b in zip(la, la[1:])):
            checked += 1
            assert not _area_condition_holds(la)
            d, tr = area_algorithm(w)
            assert len(tr) == 0 and d == maximal_path(LatticePath(w))
    assert checked > 100


def test_area_steps_are_exactly_the_brute_force_choices():
    for w in all_words(8):
        _, tr = area_algorithm(w)
        ra = list(tr.start)
        for s in tr.steps:
            assert _area_condition_holds(ra)
            ra = list(s.ra)
        assert not _area_condition_holds(ra)


def test_dyck_path_algorithm_examples():
    # one down-move from NNEE; the terminal path then has two down-moves of its own
    d, tr = dyck_path_algorithm("EENN")
    assert d.word == "NENE" and len(tr) == 1
    assert in_degree(d) == 2
    for a in range(1, 6):
        for b in range(1, 6):
            d, _ = dyck_path_algorithm("E" * a + "N" * b)
            if a >= b:
                assert d.ra == tuple(range(a, a - b, -1))
            else:
                assert d.la == tuple(range(a)) + (a,) * (b - a)


def test_algorithms_agree_up_to_ten_steps():
    for w in all_words(10):
        a, ta = area_algorithm(w)
        b, tb = dyck_path_algorithm(w)
        assert a == b
        assert [s.i for s in ta.steps] == [s.i for s in tb.steps]
        assert [s.ra for s in ta.steps] == [s.ra for s in tb.steps]


def test_chosen_j_sits_on_an_east_free_row_of_nu():
    for w in all_words(10):
        la = LatticePath(w).left_area
        _, tr = area_algorithm(w)
        for s in tr.steps:
            assert s.j >= 2 and la[s.j - 1] == la[s.j - 2]


def test_staircase_checkpoints_follow_the_stair_formula():
    for w in all_words(10):
        nu = LatticePath(w)
        n = nu.n_north
        if n == 0:
            continue
        cp = stair_checkpoints(nu)
        assert cp[n + 1] == maximal_path(nu)
        assert cp[1] == area_algorithm(nu)[0]
        for k in range(1, n + 1):
            upper = cp[k + 1]
            _, t, _ = upper.rows[k - 1]
            t_row = upper.word.count("N", 0, t) + 1
            z = next((i for i in range(t_row, n + 1) if upper.horiz[upper.rows[i - 1][0]] == 0), n + 1)
            want = tuple(a + b - c for a, b, c in zip(upper.la, ones_from(t_row, n), ones_from(z, n)))
            assert cp[k].la == want


def test_ones_from():
    assert ones_from(2, 4) == (0, 1, 1, 1)
    assert ones_from(5, 4) == (0, 0, 0, 0)


# -- max sets and subposets -------------------------------------------------------


def test_max_sets_for_m_dyck():
    assert len(max_out_set(M_DYCK_3_2)) == 5
    assert len(max_in_set(M_DYCK_3_2)) == 5
    for k in range(1, 5):
        assert len(max_out_set(parse_path("E" * k))) == 1
        assert len(max_in_set(parse_path("E" * k))) == 1


def test_max_out_set_of_dyck_paths_has_distinct_entries():
    for n in range(1, 6):
        nu = parse_path("NE" * n)
        want = {la for la in tamari_poset(nu) if len(set(la)) == n}
        assert {d.la for d in max_out_set(nu)} == want


def test_max_in_set_above_eenn():
    nu = parse_path("EENN")
    got = {d.word for d in max_in_set(nu)}
    degrees = {w: oracles.in_degree(w, "EENN") for w in oracles.all_paths("EENN")}
    top = max(degrees.values())
    assert top == 2
    assert got == {w for w, k in degrees.items() if k == top} == {"NENE"}


def test_size_cap():
    with pytest.raises(SizeCapExceeded):
        max_in_set(parse_path("NEE" * 4), max_size=10)


def _figure(edges):
    succ = {}
    for a, b in edges:
        succ.setdefault(a, []).append(b)
        succ.setdefault(b, [])
    return build_poset(sorted(succ), lambda w: succ[w])


# covers read off the two subposet figures (bottom -> top)
IN_FIGURE = [
    ("NENENEEEE", "NENNEEEEE"),
    ("NENENEEEE", "NNENEEEEE"),
    ("NNEEENEEE", "NNENEEEEE"),
    ("NENNEEEEE", "NNNEEEEEE"),
    ("NNENEEEEE", "NNNEEEEEE"),
]
OUT_FIGURE = [
    ("NEENEENEE", "NENEEENEE"),
    ("NEENEENEE", "NEENENEEE"),
    ("NEENENEEE", "NENENEEEE"),
    ("NENEEENEE", "NENEENEEE"),
    ("NENEENEEE", "NENENEEEE"),
]


def _by_word(poset):
    n_east = 6
    from nutamari.paths import _word_from_left_area

    return sorted((_word_from_left_area(a, n_east), _word_from_left_area(b, n_east)) for a, b in poset.cover_pairs())


def test_subposets_match_figures():
    t_in, t_out = in_subposet(M_DYCK_3_2), out_subposet(M_DYCK_3_2)
    assert _by_word(t_in) == sorted(IN_FIGURE)
    assert _by_word(t_out) == sorted(OUT_FIGURE)
    assert is_isomorphic(t_in, _figure(IN_FIGURE)) is not None
    assert is_isomorphic(t_out, _figure(OUT_FIGURE)) is not None
    assert is_isomorphic(t_in, t_out) is None


def test_subposet_accepts_paths_and_vectors():
    p = tamari_poset(M_DYCK_3_2)
    assert len(subposet(p, list(p))) == len(p)
    assert len(subposet(p, max_in_set(M_DYCK_3_2))) == 5
    assert len(subposet(p, [])) == 0


def test_degree_table_order():
    rows = degree_table(M_DYCK_3_2)
    assert [r.la for r in rows] == sorted(r.la for r in rows)
    assert len(rows) == 12


@pytest.mark.parametrize("nu", ["N", "NNNN", "E", "EEE", "NNNEEE"])
def test_max_sets_are_never_empty(nu):
    assert max_in_set(nu) and max_out_set(nu)
