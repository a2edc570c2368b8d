"""Formal sums, singular elements, the denominator identity, and the two
independent character algorithms."""

import pytest

from conftest import A2_32_PROFILE, RANK_LE_4_SYSTEMS, mult_profile
from splintbranch.errors import DomainError
from splintbranch.exact import Weight
from splintbranch.formal import (
    FormalSum,
    character_via_weyl,
    freudenthal_character,
    product_expand,
    saturated_set,
    singular_element,
    weight_tables,
)
from splintbranch.rootsys import build_root_system, build_system, weyl_dimension


def w(*coords):
    return Weight(coords)


# ---------------------------------------------------------------------------
# FormalSum algebra
# ---------------------------------------------------------------------------

def test_formal_sum_zero_terms_dropped():
    s = FormalSum({w(1, 0): 2, w(0, 1): 0})
    assert len(s) == 1 and s.coeff(w(0, 1)) == 0
    assert not FormalSum()
    assert (s - s) == FormalSum()


def test_formal_sum_ring_operations():
    x, y = w(1, 0), w(0, 1)
    s = FormalSum.monomial(x) + FormalSum.monomial(y)
    assert (s * s).coeff(x + y) == 2
    assert (s * s).coeff(x + x) == 1
    assert s.scale(3).coeff(x) == 3
    assert s.shift(x).coeff(x + y) == 1
    assert (-s).coeff(x) == -1
    assert s.evaluate_dimension() == 2


def test_formal_sum_json_roundtrip():
    a2 = build_root_system("A", 2)
    ch = freudenthal_character(a2, a2.weight_from_labels([1, 1]))
    data = ch.to_json(a2)
    back = FormalSum.from_json(data)
    assert back == ch
    # Weights serialize as exact rational strings.
    assert all(isinstance(c, str) for t in data["terms"] for c in t["weight"])


# ---------------------------------------------------------------------------
# Singular elements and the denominator identity
# ---------------------------------------------------------------------------

def test_singular_element_a2_edges():
    a2 = build_root_system("A", 2)
    mu = a2.weight_from_labels([3, 2])
    psi = singular_element(a2, mu)
    assert len(psi) == 6
    assert psi.coeff(mu) == 1
    a1, a2s = a2.simple_roots
    # The two edges adjacent to the highest weight walk back (m_k + 1) steps.
    assert psi.coeff(mu - a1.scale(4)) == -1
    assert psi.coeff(mu - a2s.scale(3)) == -1


@pytest.mark.parametrize("series,rank", RANK_LE_4_SYSTEMS)
def test_denominator_identity(series, rank):
    """The alternating orbit sum of rho equals the product over positive
    roots of (1 - e^{-root}), shifted so both sides start at zero."""
    rs = build_root_system(series, rank)
    zero = rs.weight_from_labels([0] * rank)
    psi0 = singular_element(rs, zero)
    prod = product_expand(rs.positive_roots, rs.ambient_dim)
    assert psi0 == prod


def test_product_expand_signs():
    a2 = build_root_system("A", 2)
    prod = product_expand(a2.positive_roots, a2.ambient_dim)
    a1, a2s = a2.simple_roots
    assert prod.coeff(Weight.zero(3)) == 1
    assert prod.coeff((a1 + a2s).scale(-1)) == 0    # two cancelling expansions
    assert prod.coeff((a1 + a2s).scale(-2)) == -1   # product of all three terms


# ---------------------------------------------------------------------------
# Saturated sets and weight tables
# ---------------------------------------------------------------------------

def test_saturated_set_adjoint_a2():
    a2 = build_root_system("A", 2)
    lam = a2.weight_from_labels([1, 1])
    levels, dom_of = saturated_set(a2, lam)
    assert set(dom_of) == set(a2.root_set) | {Weight.zero(3)}
    assert levels[0] == [lam]
    # Every weight's dominant representative is dominant and in the set.
    for x, d in dom_of.items():
        assert a2.is_dominant(d)
        assert d in dom_of


def test_weight_tables_adjoint():
    a2 = build_root_system("A", 2)
    lam = a2.weight_from_labels([1, 1])
    dom_of, mult = weight_tables(a2, lam)
    assert mult[lam] == 1
    assert mult[Weight.zero(3)] == 2
    assert sum(mult[dom_of[x]] for x in dom_of) == 8


def test_freudenthal_profiles():
    a2 = build_root_system("A", 2)
    ch = freudenthal_character(a2, a2.weight_from_labels([3, 2]))
    assert len(ch) == 27
    assert mult_profile(ch.terms) == A2_32_PROFILE
    assert ch.evaluate_dimension() == 42

    b2 = build_root_system("B", 2)
    chb = freudenthal_character(b2, b2.weight_from_labels([3, 2]))
    assert chb.evaluate_dimension() == 154

    aa = build_system("A1+A1")
    cha = freudenthal_character(aa, aa.weight_from_labels([3, 2]))
    assert len(cha) == 12
    assert set(cha.terms.values()) == {1}


def test_character_rejects_non_dominant():
    a2 = build_root_system("A", 2)
    with pytest.raises(DomainError):
        freudenthal_character(a2, a2.weight_from_labels([-1, 0]))
    with pytest.raises(DomainError):
        character_via_weyl(a2, a2.weight_from_labels([0, -2]))


# ---------------------------------------------------------------------------
# Cross-method character identity on a grid of more than 20 pairs
# ---------------------------------------------------------------------------

CHAR_GRID = [
    ("A1", (0,)), ("A1", (3,)), ("A1", (7,)),
    ("A2", (1, 0)), ("A2", (1, 1)), ("A2", (3, 2)), ("A2", (2, 2)),
    ("B2", (1, 0)), ("B2", (0, 1)), ("B2", (2, 2)), ("B2", (3, 2)),
    ("G2", (1, 0)), ("G2", (0, 1)), ("G2", (1, 1)),
    ("A3", (1, 0, 0)), ("A3", (0, 1, 0)), ("A3", (1, 1, 1)),
    ("B3", (1, 0, 0)), ("B3", (0, 0, 1)), ("B3", (1, 0, 1)),
    ("C3", (1, 0, 0)), ("C3", (0, 0, 1)),
    ("D4", (1, 0, 0, 0)), ("D4", (0, 0, 0, 1)),
    ("F4", (0, 0, 0, 1)),
    ("A1+A1", (3, 2)),
]


@pytest.mark.parametrize("label,labels", CHAR_GRID)
def test_characters_agree_across_methods(label, labels):
    rs = build_system(label)
    mu = rs.weight_from_labels(labels)
    ch_f = freudenthal_character(rs, mu)
    ch_w = character_via_weyl(rs, mu)
    assert ch_f == ch_w
    assert ch_f.evaluate_dimension() == weyl_dimension(rs, mu)


def test_char_grid_is_large_enough():
    assert len(CHAR_GRID) >= 20
