"""Group engine tests against small groups with independent brute-force oracles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammagroups.exact import ExactMatrix, GaussianRational, parse_matrix
from gammagroups.groups import DEFAULT_CAP, MatrixGroup, generate_closure

SX = parse_matrix("[[0,1],[1,0]]")
SY = parse_matrix("[[0,-i],[i,0]]")
SZ = parse_matrix("[[1,0],[0,-1]]")
A1 = SZ * SY
A2 = SX * SZ
MINUS = GaussianRational(-1, 0)

GAMMA1 = parse_matrix("[[0,0,0,-i],[0,0,-i,0],[0,i,0,0],[i,0,0,0]]")
GAMMA2 = parse_matrix("[[0,0,0,-1],[0,0,1,0],[0,1,0,0],[-1,0,0,0]]")
GAMMA3 = parse_matrix("[[0,0,-i,0],[0,0,0,i],[i,0,0,0],[0,-i,0,0]]")
GAMMA4 = parse_matrix("[[1,0,0,0],[0,1,0,0],[0,0,-1,0],[0,0,0,-1]]")


@pytest.fixture(scope="module")
def q8():
    return MatrixGroup.from_generators([A1, A2])


@pytest.fixture(scope="module")
def d4():
    return MatrixGroup.from_generators([A1, SY])


@pytest.fixture(scope="module")
def pauli():
    return MatrixGroup.from_generators([SX, SY, SZ])


@pytest.fixture(scope="module")
def dirac():
    return MatrixGroup.from_generators([GAMMA1, GAMMA2, GAMMA3, GAMMA4])


def brute_center(group):
    """Center by definition, straight off the matrices."""
    out = []
    for i in range(group.order):
        a = group.elements[i]
        if all((a * b) == (b * a) for b in group.elements):
            out.append(i)
    return set(out)


def brute_derived(group):
    """Closure of all matrix commutators aba^-1 b^-1."""
    comms = []
    for a in group.elements:
        for b in group.elements:
            comms.append(a * b * a.inverse() * b.inverse())
    closed = generate_closure(comms)
    return {m.key() for m in closed}


def brute_frattini(group):
    """Intersection of the maximal subgroups (index 2 in a 2-group)."""
    half = group.order // 2
    common = set(range(group.order))
    for sub in group.subgroups_of_order(half):
        common &= sub.indices
    return common


class TestClosure:
    def test_q8_order_and_histogram(self, q8):
        assert q8.order == 8
        assert q8.order_histogram() == {1: 1, 2: 1, 4: 6}

    def test_identity_comes_first(self, q8):
        assert q8.elements[0].is_identity()

    def test_closure_is_idempotent(self, q8):
        again = generate_closure(list(q8.elements))
        assert len(again) == q8.order
        assert {m.key() for m in again} == {m.key() for m in q8.elements}

    def test_cap_is_enforced(self):
        with pytest.raises(ValueError, match="cap"):
            generate_closure([SX, SY, SZ], cap=7)

    def test_default_cap_accepts_pauli(self):
        assert len(generate_closure([SX, SY, SZ], cap=DEFAULT_CAP)) == 16

    def test_singular_generator_rejected(self):
        bad = parse_matrix("[[1,0],[0,0]]")
        with pytest.raises(ValueError):
            generate_closure([bad])

    def test_mixed_dimensions_rejected(self):
        with pytest.raises(ValueError):
            generate_closure([SX, ExactMatrix.identity(3)])

    def test_no_generators_rejected(self):
        with pytest.raises(ValueError):
            generate_closure([])


class TestCayleyStructure:
    def test_latin_square_rows_and_columns(self, q8):
        n = q8.order
        for i in range(n):
            row = [q8.mul(i, j) for j in range(n)]
            col = [q8.mul(j, i) for j in range(n)]
            assert sorted(row) == list(range(n))
            assert sorted(col) == list(range(n))

    def test_inverses_round_trip(self, pauli):
        for i in range(pauli.order):
            assert pauli.mul(i, pauli.inv(i)) == 0
            assert pauli.mul(pauli.inv(i), i) == 0

    def test_element_order_matches_matrix_power(self, pauli):
        for i in range(pauli.order):
            k = pauli.element_order(i)
            m = pauli.elements[i]
            assert (m ** k).is_identity()
            assert all(not (m ** j).is_identity() for j in range(1, k))

    def test_exponent(self, pauli, q8):
        assert pauli.exponent() == 4
        assert q8.exponent() == 4

    def test_constructor_requires_identity_first(self, q8):
        shuffled = [q8.elements[1], q8.elements[0]] + list(q8.elements[2:])
        with pytest.raises(ValueError):
            MatrixGroup(shuffled)

    def test_constructor_rejects_non_closed_set(self):
        with pytest.raises(ValueError):
            MatrixGroup([ExactMatrix.identity(2), SX, SY]).cayley()


class TestClassesAndCenter:
    def test_class_equation(self, pauli):
        classes = pauli.conjugacy_classes()
        assert sum(len(c) for c in classes) == pauli.order
        seen = [i for c in classes for i in c]
        assert sorted(seen) == list(range(pauli.order))

    def test_class_count_pauli(self, pauli):
        assert len(pauli.conjugacy_classes()) == 10

    def test_class_ordering_is_deterministic(self, pauli):
        classes = pauli.conjugacy_classes()
        key = [(len(c), c[0]) for c in classes]
        assert key == sorted(key)
        assert classes[0] == (0,)

    def test_singleton_classes_are_the_center(self, q8, d4, pauli):
        for g in (q8, d4, pauli):
            singles = {c[0] for c in g.conjugacy_classes() if len(c) == 1}
            assert singles == set(g.center())

    @pytest.mark.parametrize("name", ["q8", "d4", "pauli", "dirac"])
    def test_center_matches_brute_force(self, name, request):
        g = request.getfixturevalue(name)
        assert set(g.center()) == brute_center(g)

    def test_center_sizes(self, q8, d4, pauli, dirac):
        assert len(q8.center()) == 2
        assert len(d4.center()) == 2
        assert len(pauli.center()) == 4
        assert len(dirac.center()) == 2


class TestDerivedAndQuotients:
    @pytest.mark.parametrize("name", ["q8", "d4", "pauli"])
    def test_derived_matches_brute_force(self, name, request):
        g = request.getfixturevalue(name)
        sub = g.derived_subgroup()
        assert {g.elements[i].key() for i in sub.indices} == brute_derived(g)

    def test_derived_subgroup_is_normal(self, pauli, dirac):
        assert pauli.derived_subgroup().is_normal()
        assert dirac.derived_subgroup().is_normal()

    def test_abelian_invariants(self, q8, d4, pauli, dirac):
        assert q8.abelian_invariants() == (2, 2)
        assert d4.abelian_invariants() == (2, 2)
        assert pauli.abelian_invariants() == (2, 2, 2)
        assert dirac.abelian_invariants() == (2, 2, 2, 2)

    def test_cyclic_group_invariants(self):
        c4 = MatrixGroup.from_generators([A1])
        assert c4.abelian_invariants() == (4,)
        assert c4.is_abelian

    @pytest.mark.parametrize("name", ["q8", "d4", "pauli"])
    def test_frattini_matches_maximal_intersection(self, name, request):
        g = request.getfixturevalue(name)
        assert g.frattini_subgroup().indices == brute_frattini(g)

    def test_minimal_generator_counts(self, q8, d4, pauli, dirac):
        assert q8.minimal_generator_count() == 2
        assert d4.minimal_generator_count() == 2
        assert pauli.minimal_generator_count() == 3
        assert dirac.minimal_generator_count() == 4


class TestSubgroups:
    def test_lagrange(self, pauli):
        for k in range(1, 17):
            subs = pauli.subgroups_of_order(k)
            if 16 % k != 0:
                assert subs == []
            for s in subs:
                assert s.order == k

    def test_pauli_order8_census(self, pauli):
        subs = pauli.subgroups_of_order(8)
        assert len(subs) == 7
        hists = [tuple(sorted(s.as_group().order_histogram().items())) for s in subs]
        # one quaternion, three dihedral, three abelian
        assert hists.count(((1, 1), (2, 1), (4, 6))) == 1
        assert hists.count(((1, 1), (2, 5), (4, 2))) == 3
        assert hists.count(((1, 1), (2, 3), (4, 4))) == 3

    def test_index_two_subgroups_are_normal(self, pauli):
        for s in pauli.subgroups_of_order(8):
            assert s.is_normal()

    def test_trivial_and_full_subgroup(self, q8):
        whole = q8.subgroups_of_order(8)
        assert len(whole) == 1
        assert whole[0].indices == frozenset(range(8))
        assert q8.subgroups_of_order(1)[0].indices == frozenset({0})

    def test_as_group_round_trip(self, pauli):
        sub = pauli.subgroups_of_order(8)[0]
        g = sub.as_group()
        assert g.order == 8
        hist = {}
        for i in sub.sorted_indices():
            hist[pauli.element_order(i)] = hist.get(pauli.element_order(i), 0) + 1
        assert g.order_histogram() == hist

    def test_dirac_sixteen_census(self, dirac):
        subs = dirac.subgroups_of_order(16)
        assert len(subs) == 15
        reps, counts = [], []
        for s in subs:
            g = s.as_group()
            for i, rep in enumerate(reps):
                if g.is_isomorphic(rep):
                    counts[i] += 1
                    break
            else:
                reps.append(g)
                counts.append(1)
        assert sorted(counts) == [5, 10]
        assert len(reps) == 2

    def test_subgroup_membership_uses_matrices(self, pauli):
        sub = pauli.subgroups_of_order(4)[0]
        for i in range(pauli.order):
            assert (pauli.elements[i] in sub) == (i in sub.indices)


class TestIsomorphism:
    def test_reflexive_under_relabeling(self, pauli):
        other = MatrixGroup.from_generators([SZ, SX, SY])
        assert pauli.is_isomorphic(other)

    def test_q8_not_isomorphic_to_d4(self, q8, d4):
        assert not q8.is_isomorphic(d4)
        assert not d4.is_isomorphic(q8)

    def test_d4_realizations_agree(self, d4):
        other = MatrixGroup.from_generators([SX, SZ])
        assert d4.is_isomorphic(other)

    def test_certificate_is_a_homomorphism(self, q8):
        other = MatrixGroup.from_generators([A2, A1])
        phi = q8.isomorphism_map(other)
        assert phi is not None
        assert sorted(phi) == list(range(8))
        for i in range(8):
            for j in range(8):
                assert phi[q8.mul(i, j)] == other.mul(phi[i], phi[j])

    def test_size_mismatch_fails_fast(self, q8, pauli):
        assert q8.isomorphism_map(pauli) is None

    def test_same_order_histogram_but_not_isomorphic(self):
        # C4 x C2 and C8 both abelian of order 8 with different histograms;
        # use D4 vs C2^3 instead: same exponent story, different commutativity.
        c2cubed = MatrixGroup.from_generators(
            [
                parse_matrix("[[-1,0,0],[0,1,0],[0,0,1]]"),
                parse_matrix("[[1,0,0],[0,-1,0],[0,0,1]]"),
                parse_matrix("[[1,0,0],[0,1,0],[0,0,-1]]"),
            ]
        )
        d4 = MatrixGroup.from_generators([A1, SY])
        assert c2cubed.order == 8
        assert not d4.is_isomorphic(c2cubed)


@settings(max_examples=30, deadline=None)
@given(seeds=st.lists(st.integers(min_value=0, max_value=15), min_size=1, max_size=4))
def test_generated_subgroup_order_divides_group_order(seeds):
    pauli = MatrixGroup.from_generators([SX, SY, SZ])
    mats = [pauli.elements[i] for i in seeds]
    closed = generate_closure(mats)
    assert 16 % len(closed) == 0


@settings(max_examples=20, deadline=None)
@given(
    i=st.integers(min_value=0, max_value=7),
    j=st.integers(min_value=0, max_value=7),
    k=st.integers(min_value=0, max_value=7),
)
def test_cayley_associativity(i, j, k):
    q8 = MatrixGroup.from_generators([A1, A2])
    assert q8.mul(q8.mul(i, j), k) == q8.mul(i, q8.mul(j, k))
