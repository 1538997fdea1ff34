from fractions import Fraction

import pytest

import qweyl


@pytest.fixture(scope="module")
def a3():
    return qweyl.RootSystem("A", 3)


def test_root_system_basics(a3):
    assert a3.rank == 3
    assert a3.num_positive_roots == 6
    assert a3.weyl_order == 24
    assert a3.cartan()[0] == [2, -1, 0]
    assert a3.minuscule_indices() == [1, 2, 3]
    assert a3.fundamental_coweight(2) == [
        Fraction(1, 2),
        Fraction(1),
        Fraction(1, 2),
    ]


def test_words_and_lengths(a3):
    assert a3.length([1, 2, 1]) == 3
    assert a3.reflection_length([1, 2, 1]) == 1
    assert a3.reduced_word([1, 1, 2]) == [2]
    assert a3.longest_word() != []
    assert a3.zeta_word(1) == [1, 2, 3]


def test_qbg():
    a2 = qweyl.RootSystem("A", 2)
    assert a2.qbg_distance([1, 2, 1], []) == 1
    assert a2.qbg_weight([1, 2, 1], []) == [1, 1]


def test_depth_and_dominance(a3):
    rho = [Fraction(3, 2), 2, Fraction(3, 2)]
    assert a3.depth(rho) == 1
    assert a3.dominance_leq([0, 0, 0], [1, 1, 1])
    assert not a3.dominance_leq([1, 1, 1], [0, 0, 0])


def test_affine_and_demazure():
    a2 = qweyl.RootSystem("A", 2)
    two_rho_v = [2, 2]
    assert a2.im_length(two_rho_v, []) == 8
    prod = a2.demazure_product(two_rho_v, [1, 2, 1], two_rho_v, [])
    assert prod["lambda"] == [Fraction(3), Fraction(3)]
    assert prod["word"] == []


def test_xi_and_dimension():
    b3 = qweyl.RootSystem("B", 3)
    assert b3.xi_sigma(tau=1) == [0, 0, Fraction(1, 2)]
    e6 = qweyl.RootSystem("E", 6)
    assert e6.dimension(tau=1, strategy="rank") == 4
    a3 = qweyl.RootSystem("A", 3)
    assert a3.dimension(tau=1, sigma0=2, strategy="all") == 1
    assert a3.key_lemma_j_sets(tau=1, sigma0=2) == [[2]]


def test_newton():
    a2 = qweyl.RootSystem("A", 2)
    np = a2.generic_newton_point(1, 1, [2, 2], [])
    # dim at x = 1 is d(zeta^-1, 1) = 2, so <2rho, nu> = 8 - 2
    assert np["two_rho_pairing"] == Fraction(6)
    nb = a2.nu_b_max(1, 1, [2, 2])
    assert nb["regular"]
    assert nb["nu"] == [Fraction(5, 3), Fraction(4, 3)]
    md = a2.mu_diamond(1, [2, 2])
    assert md == [Fraction(2), Fraction(2)]


def test_suite_hook():
    cases = qweyl.run_suite("xi-tables", max_rank=3)
    assert cases and all(c["pass"] for c in cases)
