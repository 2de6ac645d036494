from waring.groebner import groebner_basis, in_ideal, normal_form, s_polynomial
from waring.polynomial import DUAL, SparsePoly, parse_poly


def D(text, n=3):
    return parse_poly(text, n, DUAL)


def test_normal_form_reduces_leading_terms():
    basis = [D("a0^2 - a1"), D("a1^2 - a2")]
    assert normal_form(D("a0^4"), basis) == D("a2")
    assert normal_form(D("a0^2*a1"), basis) == D("a2")
    assert normal_form(D("a2^5"), basis) == D("a2^5")


def test_normal_form_of_zero():
    assert normal_form(SparsePoly.zero(3, DUAL), [D("a0")]).is_zero()


def test_s_polynomial_cancels_leading_terms():
    f, g = D("a0^2*a1 - 1"), D("a0*a1^2 - a2")
    s = s_polynomial(f, g)
    assert s == D("a0*a2 - a1")


def test_groebner_basis_of_principal_ideal():
    basis = groebner_basis([D("a0^2 - a1^2")])
    assert len(basis) == 1
    assert in_ideal(D("a0^4 - a1^4"), basis)
    assert not in_ideal(D("a0^3"), basis)


def test_groebner_basis_handles_non_coprime_leads():
    # (a0 a1 - a2^2, a0 a2 - a1^2): completion is needed for correct membership
    basis = groebner_basis([D("a0*a1 - a2^2"), D("a0*a2 - a1^2")])
    assert in_ideal(D("a1^3 - a2^3"), basis)
    assert not in_ideal(D("a1^3 + a2^3"), basis)


def test_membership_is_ideal_closed():
    gens = [D("a1^3 - a0^2*a2"), D("a2^4 - a0^2*a1^2")]
    basis = groebner_basis(gens)
    for g in gens:
        assert in_ideal(g, basis)
    combo = gens[0] * D("a0*a2") - gens[1] * D("7*a1")
    assert in_ideal(combo, basis)


def test_basis_is_deterministic():
    gens = [D("a1^3 - a0^2*a2"), D("a2^4 - a0^2*a1^2")]
    one = [str(g) for g in groebner_basis(gens)]
    two = [str(g) for g in groebner_basis(list(reversed(gens)))]
    assert one == two
