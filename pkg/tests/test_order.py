import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subnorm.errors import (
    NotALattice,
    NotDistributive,
    PosetLawViolation,
    TooManyVariables,
)
from subnorm.order import (
    bits,
    check_negation_laws,
    free_boolean_algebra,
    is_down_directed,
    is_filter,
    is_up_directed,
    join_irreducibles,
    lattice_from_json,
    lattice_to_json,
    mask_of,
    meet_irreducibles,
    poset_from_hasse,
    poset_from_json,
    prime_filters,
    to_lattice,
    validate_poset,
)
from oracles import join_irreducibles_oracle, meet_irreducibles_oracle, prime_filters_oracle


def members(mask):
    return set(bits(mask))


class TestValidatePoset:
    def test_discrete_order(self):
        p = validate_poset([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert p.n == 3
        assert all(not p.leq(a, b) for a in range(3) for b in range(3) if a != b)

    def test_chain_from_upper_triangular(self):
        p = validate_poset([[1, 1, 1], [0, 1, 1], [0, 0, 1]])
        assert p.leq(0, 2) and not p.leq(2, 0)

    def test_antisymmetry_violation(self):
        with pytest.raises(PosetLawViolation) as exc:
            validate_poset([[1, 1], [1, 1]])
        assert exc.value.law == "antisymmetry"
        assert exc.value.witness == (0, 1)

    def test_reflexivity_violation(self):
        with pytest.raises(PosetLawViolation) as exc:
            validate_poset([[0]])
        assert exc.value.law == "reflexivity"

    def test_transitivity_violation(self):
        with pytest.raises(PosetLawViolation) as exc:
            validate_poset([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
        assert exc.value.law == "transitivity"
        assert exc.value.witness == (0, 1, 2)


class TestToLattice:
    def test_chain_is_distributive_not_boolean(self, chain3):
        assert chain3.is_distributive
        assert not chain3.is_boolean
        assert chain3.bot == 0 and chain3.top == 2

    def test_b4_is_boolean_with_swap_complement(self, b4):
        assert b4.is_boolean
        assert b4.neg == (3, 2, 1, 0)

    def test_antichain_has_no_lub(self, antichain2):
        with pytest.raises(NotALattice) as exc:
            to_lattice(antichain2)
        assert exc.value.pair == (0, 1)

    @pytest.mark.parametrize("name", ["chain4", "b4", "b8", "fdl2"])
    def test_lattice_laws_exhaustive(self, name, request):
        lat = request.getfixturevalue(name)
        n = lat.n
        for a in range(n):
            assert lat.meet[a][a] == a and lat.join[a][a] == a
            assert lat.leq(lat.bot, a) and lat.leq(a, lat.top)
            for b in range(n):
                assert lat.meet[a][b] == lat.meet[b][a]
                assert lat.join[a][b] == lat.join[b][a]
                assert lat.meet[a][lat.join[a][b]] == a
                assert lat.join[a][lat.meet[a][b]] == a
                for c in range(n):
                    assert lat.meet[lat.meet[a][b]][c] == lat.meet[a][lat.meet[b][c]]
                    assert lat.join[lat.join[a][b]][c] == lat.join[a][lat.join[b][c]]

    def test_pentagon_not_distributive(self):
        # 0 < a < c < 1 and 0 < b < 1 with b incomparable to a, c
        lat = to_lattice(poset_from_hasse(
            5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]))
        assert not lat.is_distributive


class TestIrreducibles:
    @pytest.mark.parametrize("name, expected", [
        ("b4", {1, 2}),
        ("chain3", {1, 2}),
        ("chain2", {1}),
    ])
    def test_frozen_examples(self, name, expected, request):
        lat = request.getfixturevalue(name)
        assert members(join_irreducibles(lat)) == expected

    @pytest.mark.parametrize("name", ["chain2", "chain3", "chain4", "b4", "b8", "fdl2"])
    def test_against_oracle(self, name, request):
        lat = request.getfixturevalue(name)
        assert members(join_irreducibles(lat)) == join_irreducibles_oracle(lat)
        assert members(meet_irreducibles(lat)) == meet_irreducibles_oracle(lat)


class TestPrimeFilters:
    def test_b4(self, b4):
        assert [members(f) for f in prime_filters(b4)] == [{1, 3}, {2, 3}]

    def test_chain3(self, chain3):
        assert [members(f) for f in prime_filters(chain3)] == [{2}, {1, 2}]

    def test_two_element(self, chain2):
        assert [members(f) for f in prime_filters(chain2)] == [{1}]

    @pytest.mark.parametrize("name", ["chain4", "b4", "b8", "fdl2"])
    def test_against_oracle_and_bijection(self, name, request):
        lat = request.getfixturevalue(name)
        got = {frozenset(members(f)) for f in prime_filters(lat)}
        assert got == prime_filters_oracle(lat)
        jirr = members(join_irreducibles(lat))
        assert len(got) == len(jirr)
        assert got == {frozenset(members(lat.poset.up[j])) for j in jirr}

    def test_requires_distributive(self):
        m3 = to_lattice(poset_from_hasse(
            5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]))
        assert not m3.is_distributive
        with pytest.raises(NotDistributive):
            prime_filters(m3)


class TestDirectedness:
    def test_empty_is_directed(self, b4):
        assert is_down_directed(0, b4.poset)
        assert is_up_directed(0, b4.poset)

    def test_atoms_not_down_directed(self, b4):
        assert not is_down_directed(mask_of([1, 2]), b4.poset)

    def test_with_common_lower_bound(self, b4):
        assert is_down_directed(mask_of([1, 3]), b4.poset)

    @pytest.mark.parametrize("name", ["chain4", "b4"])
    def test_filter_iff_upclosed_down_directed(self, name, request):
        lat = request.getfixturevalue(name)
        for mask in range(1, 1 << lat.n):
            upclosed = lat.poset.up_closure(mask) == mask
            assert is_filter(mask, lat) == (upclosed and is_down_directed(mask, lat.poset))


class TestNegationLaws:
    def test_boolean_complement_all_laws(self, b4):
        report = check_negation_laws(b4, b4.neg)
        assert report.all_laws()

    def test_identity_not_antitone(self, b4):
        report = check_negation_laws(b4, (0, 1, 2, 3))
        assert not report.antitone

    def test_constant_top_not_involutive(self, b4):
        report = check_negation_laws(b4, (3, 3, 3, 3))
        assert not report.involutive

    def test_b8_complement(self, b8):
        assert check_negation_laws(b8, b8.neg).all_laws()

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_free_algebra_complement(self, k):
        lat, _ = free_boolean_algebra(k)
        assert check_negation_laws(lat, lat.neg).all_laws()


class TestFreeBooleanAlgebra:
    def test_sizes(self):
        for k, size in [(0, 2), (1, 4), (2, 16), (3, 256)]:
            lat, gens = free_boolean_algebra(k)
            assert lat.n == size
            assert len(gens) == k
            assert lat.is_boolean and lat.is_distributive

    def test_generator_is_projection(self):
        lat, gens = free_boolean_algebra(1)
        assert members(join_irreducibles(lat)) >= {gens[0]}

    def test_meet_of_generators_is_atom(self):
        lat, (p, q) = free_boolean_algebra(2)
        atom = lat.meet[p][q]
        assert bin(atom).count("1") == 1  # a single valuation survives

    def test_cap(self):
        with pytest.raises(TooManyVariables):
            free_boolean_algebra(4)

    def test_flags_match_generic_construction(self):
        lat, _ = free_boolean_algebra(2)
        rebuilt = to_lattice(lat.poset)
        assert rebuilt.is_distributive == lat.is_distributive
        assert rebuilt.is_boolean == lat.is_boolean
        assert rebuilt.neg == lat.neg
        assert rebuilt.meet == lat.meet and rebuilt.join == lat.join


class TestJson:
    def test_roundtrip(self, b4):
        again = lattice_from_json(lattice_to_json(b4))
        assert again == b4

    def test_hasse_input(self):
        lat = lattice_from_json({"hasse": [[0, 1], [1, 2]]})
        assert lat.n == 3 and lat.leq(0, 2)

    def test_neg_attached(self):
        obj = {"elements": ["x", "y"], "leq": [[1, 0], [0, 1]], "neg": [1, 0]}
        p, neg = poset_from_json(obj)
        assert neg == (1, 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 16 - 1))
def test_random_matrices_validate_or_raise(packed):
    matrix = [[bool(packed >> (4 * a + b) & 1) or a == b for b in range(4)]
              for a in range(4)]
    try:
        p = validate_poset(matrix)
    except PosetLawViolation:
        return
    # accepted orders really satisfy the three laws
    for a in range(4):
        assert p.leq(a, a)
        for b in range(4):
            if a != b and p.leq(a, b):
                assert not p.leq(b, a)
            for c in range(4):
                if p.leq(a, b) and p.leq(b, c):
                    assert p.leq(a, c)
