import pytest

import oracles
from nutamari.degrees import in_degree, max_in_set, max_out_set, staircase_algorithm
from nutamari.maps import (
    MDyckShape,
    MNotAtLeastTwo,
    NotInEmbeddedMaxInSet,
    NotInImage,
    NotInMaxInSet,
    NotInMaxOutSet,
    bar_phi,
    bar_phi_iterates,
    bijection_record,
    d_minus,
    hat,
    hat_subtractions,
    m_dyck_nu,
    phi_in,
    phi_in_inverse,
    phi_out,
    phi_out_inverse,
    pi_embed,
    pi_inverse,
)
from nutamari.paths import (
    LatticePath,
    enumerate_nu_dyck,
    hit_point,
    maximal_path,
    minimal_path,
    parse_path,
    path_from_left_area,
    touch_point,
)
from nutamari.tamari import tamari_poset

SMALL = [(3, 2), (3, 3), (4, 2)]


def dyck(word):
    return path_from_left_area(LatticePath(word).left_area, "NE" * word.count("N"))


def test_shape():
    s = MDyckShape(3, 2)
    assert s.nu.word == "NEENEENEE" and s.lowered().nu.word == "NENENE"
    with pytest.raises(ValueError):
        MDyckShape(0, 2)


# -- phi_out ------------------------------------------------------------------------


def test_d_minus_example():
    nu = parse_path("EEEENEENENE")
    assert nu.left_area == (4, 6, 7)
    xi = staircase_algorithm(nu).xi
    assert xi.la == (1, 2, 3)
    assert d_minus(minimal_path(nu)).la == (3, 4, 4)
    assert d_minus(xi).la == (0, 0, 0)


def test_d_minus_rejects_paths_outside_max_out_set():
    nu = m_dyck_nu(3, 2)
    outside = [d for d in enumerate_nu_dyck(nu) if d not in max_out_set(nu)]
    assert len(outside) == 7
    for d in outside:
        with pytest.raises(NotInMaxOutSet):
            d_minus(d)


def test_phi_out_onto_lower_catalan():
    nu, low = m_dyck_nu(3, 2), m_dyck_nu(3, 1)
    images = {phi_out(d) for d in max_out_set(nu)}
    assert images == set(enumerate_nu_dyck(low))
    xi = staircase_algorithm(nu).xi
    assert phi_out(xi).word == "NNN" + "EEE"


@pytest.mark.parametrize("n,m", SMALL)
def test_phi_out_round_trip(n, m):
    for d in max_out_set(m_dyck_nu(n, m)):
        assert phi_out_inverse(phi_out(d)) == d
    for x in enumerate_nu_dyck(m_dyck_nu(n, m - 1)):
        assert phi_out(phi_out_inverse(x)) == x


def test_phi_out_errors():
    with pytest.raises(MNotAtLeastTwo):
        phi_out(minimal_path(m_dyck_nu(3, 1)))
    with pytest.raises(NotInMaxOutSet):
        phi_out(maximal_path(m_dyck_nu(3, 2)))


# -- hat and phi_in ------------------------------------------------------------------


def test_hat_example():
    nu = parse_path("EEEENEENENEN")
    assert nu.left_area == (4, 6, 7, 8)
    d = path_from_left_area((1, 4, 6, 7), nu)
    assert hat_subtractions(d) == (0, 1, 2, 2)
    assert hat(d).la == (1, 3, 4, 5)


def test_hat_fixes_paths_whose_hits_are_all_final():
    for w in ["NNNEEE", "NNEE", "EENN"]:
        nu = parse_path(w)
        d = maximal_path(nu)
        assert hat(d) == d


@pytest.mark.parametrize("n,m", SMALL + [(4, 3)])
def test_max_in_set_counted_by_fuss_catalan(n, m):
    assert len(max_in_set(m_dyck_nu(n, m))) == oracles.fuss_catalan(n, m - 1)
    assert len(max_out_set(m_dyck_nu(n, m))) == oracles.fuss_catalan(n, m - 1)


@pytest.mark.parametrize("n,m", SMALL + [(4, 3), (5, 2)])
def test_hat_injective_on_max_in_set(n, m):
    images = [hat(d) for d in max_in_set(m_dyck_nu(n, m))]
    assert len(set(images)) == len(images)


@pytest.mark.parametrize("n,m", [(3, 2), (4, 2), (3, 3)])
def test_phi_in_round_trip(n, m):
    for x in enumerate_nu_dyck(m_dyck_nu(n, m - 1)):
        d = phi_in_inverse(x)
        assert phi_in(d) == x
    for d in max_in_set(m_dyck_nu(n, m)):
        assert phi_in_inverse(phi_in(d)) == d


def test_phi_in_inverse_lands_in_max_in_set():
    for x in enumerate_nu_dyck(m_dyck_nu(3, 1)):
        d = phi_in_inverse(x)
        assert in_degree(d) == 2
        assert d.horiz[d.rows[0][0]] == 0


def test_phi_in_errors():
    with pytest.raises(MNotAtLeastTwo):
        phi_in(minimal_path(m_dyck_nu(2, 1)))
    with pytest.raises(NotInMaxInSet):
        phi_in(minimal_path(m_dyck_nu(3, 2)))


# -- pi and bar_phi -------------------------------------------------------------------


def test_pi_example():
    d = path_from_left_area(LatticePath("NNEENEEEE").left_area, m_dyck_nu(3, 2))
    assert pi_embed(d).word == "NNNNEENNEEEE"
    assert pi_inverse(pi_embed(d), 2) == d


def test_pi_identity_for_m_one():
    for d in enumerate_nu_dyck(m_dyck_nu(4, 1)):
        assert pi_embed(d) == d


def test_pi_inverse_rejects_non_images():
    with pytest.raises(NotInImage):
        pi_inverse(dyck("NENNEE"), 2)
    with pytest.raises(NotInImage):
        pi_inverse(dyck("NENENE"), 2)


@pytest.mark.parametrize("n,m", [(3, 2), (2, 3), (4, 2)])
def test_pi_is_order_embedding_onto_upper_ideal(n, m):
    small = tamari_poset(m_dyck_nu(n, m))
    big = tamari_poset(LatticePath("NE" * (n * m)))
    emb = {la: pi_embed(path_from_left_area(la, m_dyck_nu(n, m))).la for la in small}
    for a in small:
        for b in small:
            assert small.leq(a, b) == big.leq(emb[a], emb[b])
    image = set(emb.values())
    for a in image:
        for b in big:
            if big.leq(a, b):
                assert b in image


@pytest.mark.parametrize("n,m", [(3, 2), (2, 3), (4, 2)])
def test_pi_keeps_touch_and_hit_points(n, m):
    for d in enumerate_nu_dyck(m_dyck_nu(n, m)):
        e = pi_embed(d)
        for i in range(1, n + 1):
            k = (i - 1) * m + 1
            t, h = touch_point(d, i), hit_point(d, i)
            assert touch_point(e, k) == (t.x, t.y * m)
            assert hit_point(e, k) == (h.x, h.y * m)


def test_bar_phi_worked_example():
    d = dyck("N" * 9 + "E" * 5 + "N" * 3 + "E" * 7)
    want = "N" * 6 + "E" * 4 + "N" * 2 + "E" * 4
    assert pi_inverse(d, 3).word == "NNNEEEEENEEEEEEE"
    assert phi_in(pi_inverse(d, 3)).word == "NNNEEEENEEEE"
    assert bar_phi(d, 3, 4).word == want
    assert bar_phi(d, 3, 4, variant="ne").word == want


@pytest.mark.parametrize("n,m", [(3, 2), (4, 2), (3, 3), (2, 3)])
def test_bar_phi_is_conjugated_phi_in(n, m):
    for d in max_in_set(m_dyck_nu(n, m)):
        want = pi_embed(phi_in(d))
        assert bar_phi(pi_embed(d), m, n) == want
        assert bar_phi(pi_embed(d), m, n, variant="ne") == want


def test_bar_phi_iterates_shapes():
    d = next(iter(max_in_set(m_dyck_nu(3, 2))))
    its = bar_phi_iterates(pi_embed(d), 2, 3, variant="ne")
    assert len(its) == 4
    for i, w in enumerate(its):
        assert w.endswith("NE" * i) and len(w) == 12


def test_bar_phi_errors():
    outside = pi_embed(minimal_path(m_dyck_nu(3, 2)))
    with pytest.raises(NotInEmbeddedMaxInSet):
        bar_phi(outside, 2, 3)
    with pytest.raises(NotInEmbeddedMaxInSet):
        bar_phi(dyck("NENNEE"), 2, 3)
    with pytest.raises(MNotAtLeastTwo):
        bar_phi(dyck("NENENE"), 1, 3)
    with pytest.raises(ValueError):
        bar_phi_iterates(dyck("NENENE"), 2, 3, variant="sideways")


def test_bijection_record():
    rec = bijection_record(3, 2, "out->tamari", True)
    assert rec == {"nm": [3, 2], "direction": "out->tamari", "ok": True, "witness": None}
    d = minimal_path(m_dyck_nu(3, 2))
    assert bijection_record(3, 2, "x", False, d)["witness"] == d.word
