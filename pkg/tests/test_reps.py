"""Representation analysis tests: census, indicators, forms, weights."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammagroups.exact import GaussianRational, block_diag, parse_matrix
from gammagroups.groups import MatrixGroup
from gammagroups.reps import (
    Cyc8,
    format_census,
    format_cyc8,
    invariant_bilinear_form,
    irreducibility_norm,
    irrep_census,
    spin_weights,
    structural_invariant,
)

MINUS = GaussianRational(-1, 0)
IMAG = GaussianRational(0, 1)

SX = parse_matrix("[[0,1],[1,0]]")
SY = parse_matrix("[[0,-i],[i,0]]")
SZ = parse_matrix("[[1,0],[0,-1]]")
A1 = SZ * SY
A2 = SX * SZ

GAMMA1 = parse_matrix("[[0,0,0,-i],[0,0,-i,0],[0,i,0,0],[i,0,0,0]]")
GAMMA2 = parse_matrix("[[0,0,0,-1],[0,0,1,0],[0,1,0,0],[-1,0,0,0]]")
GAMMA3 = parse_matrix("[[0,0,-i,0],[0,0,0,i],[i,0,0,0],[0,-i,0,0]]")
GAMMA4 = parse_matrix("[[1,0,0,0],[0,1,0,0],[0,0,-1,0],[0,0,0,-1]]")


@pytest.fixture(scope="module")
def pauli():
    return MatrixGroup.from_generators([SX, SY, SZ])


@pytest.fixture(scope="module")
def q8():
    return MatrixGroup.from_generators([A1, A2])


@pytest.fixture(scope="module")
def d4():
    return MatrixGroup.from_generators([A1, SY])


@pytest.fixture(scope="module")
def dirac():
    return MatrixGroup.from_generators([GAMMA1, GAMMA2, GAMMA3, GAMMA4])


@pytest.fixture(scope="module")
def doubled():
    """Order-32 group in two 2x2 blocks, the second complex conjugated."""
    blocks = [block_diag(m, m.conjugate()) for m in (SX, SY, SZ)]
    extra = block_diag(
        parse_matrix("[[1,0],[0,1]]"), parse_matrix("[[-1,0],[0,-1]]")
    )
    return MatrixGroup.from_generators(blocks + [extra])


class TestCensus:
    def test_pauli(self, pauli):
        assert irrep_census(pauli) == ((1, 8), (2, 2))
        assert format_census(irrep_census(pauli)) == "8x1 + 2x2"

    def test_quaternion_and_dihedral(self, q8, d4):
        assert irrep_census(q8) == ((1, 4), (2, 1))
        assert irrep_census(d4) == ((1, 4), (2, 1))

    def test_dirac(self, dirac):
        assert irrep_census(dirac) == ((1, 16), (4, 1))

    def test_doubled(self, doubled):
        assert irrep_census(doubled) == ((1, 16), (2, 4))

    def test_abelian(self):
        c4 = MatrixGroup.from_generators([A1])
        assert irrep_census(c4) == ((1, 4),)

    def test_census_squares_sum_to_order(self, pauli, dirac, doubled):
        for group in (pauli, dirac, doubled):
            census = irrep_census(group)
            assert sum(count * dim * dim for dim, count in census) == group.order
            assert sum(count for _, count in census) == len(group.conjugacy_classes())


class TestNormAndIndicator:
    def test_irreducible_defining_reps(self, pauli, q8, d4, dirac):
        for group in (pauli, q8, d4, dirac):
            assert irreducibility_norm(group) == 1

    def test_reducible_block_model(self, doubled):
        assert irreducibility_norm(doubled) == 2
        assert irreducibility_norm(doubled, (0, 2)) == 1
        assert irreducibility_norm(doubled, (2, 2)) == 1

    def test_indicator_values(self, pauli, q8, d4, dirac):
        assert structural_invariant(pauli) == 0
        assert structural_invariant(q8) == -1
        assert structural_invariant(d4) == 1
        assert structural_invariant(dirac) == -1

    def test_indicator_of_plus_type_variant(self):
        plus = MatrixGroup.from_generators([GAMMA1, GAMMA2, GAMMA3, GAMMA4.scale(IMAG)])
        assert structural_invariant(plus) == 1

    def test_indicator_per_block(self, doubled):
        assert structural_invariant(doubled, (0, 2)) == 0
        assert structural_invariant(doubled, (2, 2)) == 0

    def test_indicator_requires_irreducible(self, doubled):
        with pytest.raises(ValueError, match="reducible"):
            structural_invariant(doubled)

    def test_block_bounds_checked(self, pauli):
        with pytest.raises(ValueError, match="does not fit"):
            irreducibility_norm(pauli, (1, 2))

    def test_coupled_block_rejected(self, doubled):
        with pytest.raises(ValueError, match="coupled"):
            irreducibility_norm(doubled, (1, 2))


class TestBilinearForm:
    def test_quaternion_form_is_antisymmetric(self, q8):
        kind, form = invariant_bilinear_form(q8)
        assert kind == "antisymmetric"
        assert form.transpose() == form.scale(MINUS)
        for g in q8.elements:
            assert g.transpose() * form * g == form

    def test_dihedral_form_is_symmetric(self, d4):
        kind, form = invariant_bilinear_form(d4)
        assert kind == "symmetric"
        assert form.transpose() == form
        for g in d4.elements:
            assert g.transpose() * form * g == form

    def test_pauli_has_no_form(self, pauli):
        assert invariant_bilinear_form(pauli) == ("none", None)

    def test_dirac_form_is_antisymmetric(self, dirac):
        kind, form = invariant_bilinear_form(dirac)
        assert kind == "antisymmetric"
        for g in dirac.elements:
            assert g.transpose() * form * g == form

    def test_plus_type_form_is_symmetric(self):
        plus = MatrixGroup.from_generators([GAMMA1, GAMMA2, GAMMA3, GAMMA4.scale(IMAG)])
        kind, form = invariant_bilinear_form(plus)
        assert kind == "symmetric"
        for g in plus.elements:
            assert g.transpose() * form * g == form

    def test_block_form(self, doubled):
        assert invariant_bilinear_form(doubled, (0, 2))[0] == "none"


class TestCyc8:
    def test_powers_cycle(self):
        z = Cyc8.zeta_power(1)
        acc = Cyc8(1)
        for _ in range(8):
            acc = acc * z
        assert acc == Cyc8(1)

    def test_fourth_power_is_minus_one(self):
        assert Cyc8.zeta_power(4) == Cyc8(-1)

    @pytest.mark.parametrize("a", range(-8, 9))
    @pytest.mark.parametrize("b", range(0, 8))
    def test_power_addition(self, a, b):
        assert Cyc8.zeta_power(a) * Cyc8.zeta_power(b) == Cyc8.zeta_power(a + b)

    def test_real_sqrt2_combination(self):
        value = Cyc8.zeta_power(1) + Cyc8.zeta_power(-1)
        assert value.is_real
        assert value.real_parts() == (0, 1)
        assert format_cyc8(value) == "r2"

    def test_rational_value_guards(self):
        with pytest.raises(ValueError):
            Cyc8.zeta_power(1).rational_value()
        assert Cyc8(Fraction(3, 2)).rational_value() == Fraction(3, 2)

    def test_formatting(self):
        assert format_cyc8(Cyc8()) == "0"
        assert format_cyc8(Cyc8(0, 0, Fraction(1, 2), 0)) == "1/2i"
        assert format_cyc8(Cyc8(1, 0, Fraction(-1, 2), 0)) == "1-1/2i"
        half_i_zeta = Cyc8(0, 0, Fraction(1, 2), 0) * Cyc8.zeta_power(1)
        assert format_cyc8(half_i_zeta) == "-1/4*r2+1/4*r2i"


class TestSpinWeights:
    def test_rotation_weights_are_half_integers(self):
        report = spin_weights(A1)
        assert report.classification == "real-half-integer"
        assert report.l0 == Fraction(1, 2)
        assert sorted(report.weights) == [("-1/2", 1), ("1/2", 1)]

    def test_reflection_weights_are_imaginary(self):
        for m in (SY, SZ):
            report = spin_weights(m)
            assert report.classification == "pure-imaginary"
            assert report.l0 is None
            assert sorted(report.weights) == [("-1/2i", 1), ("1/2i", 1)]

    def test_order_eight_element_is_mixed(self):
        report = spin_weights(parse_matrix("[[0,1],[i,0]]"))
        assert report.order == 8
        assert report.classification == "mixed"
        assert ("-1/4*r2+1/4*r2i", 1) in report.weights

    def test_multiplicities_fill_dimension(self, dirac):
        for m in dirac.elements:
            report = spin_weights(m)
            assert sum(report.multiplicities) == 4

    def test_identity_and_negative_identity(self):
        eye = parse_matrix("[[1,0],[0,1]]")
        report = spin_weights(eye)
        assert report.order == 1
        assert report.weights == (("1/2i", 2),)
        report = spin_weights(eye.scale(MINUS))
        assert report.order == 2
        assert report.weights == (("-1/2i", 2),)

    def test_unsupported_order_rejected(self):
        sixteenth = parse_matrix("[[0,0,0,i],[1,0,0,0],[0,1,0,0],[0,0,1,0]]")
        with pytest.raises(ValueError, match="order"):
            spin_weights(sixteenth)

    def test_non_invertible_matrix_rejected(self):
        with pytest.raises(ValueError):
            spin_weights(parse_matrix("[[1,0],[0,0]]"))

    def test_report_serializes(self):
        payload = spin_weights(A1).to_dict()
        assert payload["classification"] == "real-half-integer"
        assert payload["l0"] == "1/2"
        assert payload["order"] == 4


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=15))
def test_weights_match_trace(index):
    pauli = MatrixGroup.from_generators([SX, SY, SZ])
    m = pauli.elements[index]
    report = spin_weights(m)
    step = 8 // report.order
    total = Cyc8()
    for k, mult in enumerate(report.multiplicities):
        total = total + Cyc8.zeta_power(k * step).scale(Fraction(mult))
    assert total == Cyc8.from_gaussian(m.trace())
