"""Catalog data, profile validation, signature search, and extensions."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammagroups import catalog
from gammagroups.catalog import (
    CATALOG_NAMES,
    STABLE_NAMES,
    SWEEP_SIGNATURES,
    SignatureSpec,
    catalog_entry,
    catalog_group,
    component_composition,
    compute_profile,
    decompose_index_two,
    enumerate_extensions,
    find_gamma_models,
    index_two_summary_for,
    load_generator_file,
    pool_group,
    sweep_extensions,
    sweep_stable_models,
    validate_entry,
)
from gammagroups.exact import (
    ExactMatrix,
    GaussianRational,
    block_diag,
    format_matrix,
    parse_matrix,
    parse_scalar,
)
from gammagroups.groups import MatrixGroup

MINUS = GaussianRational(-1, 0)
IMAG = GaussianRational(0, 1)


class TestCatalogData:
    def test_catalog_has_fourteen_entries(self):
        assert len(CATALOG_NAMES) == 14

    @pytest.mark.parametrize("name", CATALOG_NAMES)
    def test_entry_loads_with_consistent_dimension(self, name):
        entry = catalog_entry(name)
        assert entry.generators, name
        assert all(g.dim == entry.dimension for g in entry.generators)

    def test_unknown_name_rejected(self):
        with pytest.raises(KeyError):
            catalog_entry("pauli_typo")

    def test_blocks_cover_the_space_when_declared(self):
        for name in CATALOG_NAMES:
            entry = catalog_entry(name)
            if entry.blocks is None:
                continue
            covered = sum(size for _, size in entry.blocks)
            assert covered == entry.dimension, name

    def test_summaries_are_prose(self):
        for name in CATALOG_NAMES:
            assert catalog_entry(name).summary.strip(), name


class TestValidation:
    @pytest.mark.parametrize("name", CATALOG_NAMES)
    def test_entry_validates(self, name):
        report = validate_entry(name)
        details = "; ".join(f"{c.check_id}: {c.detail}" for c in report.failures())
        assert report.passed, details

    def test_validation_recomputes_rather_than_trusts(self):
        # A deliberately wrong expectation must be flagged.
        entry = catalog_entry("q8")
        report = validate_entry("q8")
        by_id = {c.check_id: c for c in report.checks}
        assert by_id["order"].passed
        assert entry.expected["order"] == 8


class TestProfiles:
    def test_pauli_profile_numbers(self):
        profile = compute_profile(catalog_group("pauli"), deep=True)
        assert profile.order == 16
        assert profile.class_count == 10
        assert profile.center_order == 4
        assert profile.abelian_invariants == (2, 2, 2)
        assert profile.min_generators == 3
        assert profile.census == ((1, 8), (2, 2))
        assert profile.indicators == (0,)
        assert profile.index_two_class_count == 3
        assert profile.composition == ("d", "f")

    def test_two_dim_groups_differ_only_in_indicator(self):
        q8 = compute_profile(catalog_group("q8"))
        d4 = compute_profile(catalog_group("d4"))
        assert q8.indicators == (-1,)
        assert d4.indicators == (1,)
        assert (q8.order, q8.class_count, q8.center_order, q8.census) == (
            d4.order, d4.class_count, d4.center_order, d4.census,
        )

    def test_irreducible_order32_compositions(self):
        minus = component_composition(catalog_group("gamma_minus"))
        plus = component_composition(catalog_group("gamma_plus"))
        assert minus == frozenset({"b", "d", "f"})
        assert plus == frozenset({"c", "d", "f"})

    def test_reducible_order32_compositions(self):
        assert component_composition(catalog_group("pauli_c2")) == frozenset("bcdf")
        assert component_composition(catalog_group("q8_v4")) == frozenset({"b"})
        assert component_composition(catalog_group("d4_v4")) == frozenset({"c"})

    def test_index_two_split_of_the_irreducible_pair(self):
        minus = [[c["component"], c["count"]] for c in index_two_summary_for("gamma_minus")]
        plus = [[c["component"], c["count"]] for c in index_two_summary_for("gamma_plus")]
        assert minus == [["b", 5], ["d", 10]]
        assert plus == [["c", 9], ["d", 6]]


class TestExtraction:
    def test_extracted_entries_sit_inside_their_parents(self):
        for name, parent in (("q8_c2", "gamma_minus"), ("d4_c2", "gamma_plus")):
            entry = catalog_entry(name)
            assert entry.extracted_from == parent
            parent_group = catalog_group(parent)
            assert all(g in parent_group for g in entry.generators)

    def test_extraction_is_deterministic(self):
        first = catalog._resolve_extraction(catalog._load_payload("q8_c2"))
        second = catalog._resolve_extraction(catalog._load_payload("q8_c2"))
        assert [g.key() for g in first.generators] == [g.key() for g in second.generators]

    def test_q8_c2_matches_a_direct_product_model(self):
        qi = parse_matrix("[[i, 0], [0, -i]]")
        qj = parse_matrix("[[0, 1], [-1, 0]]")
        two = ExactMatrix.identity(2)
        model = MatrixGroup.from_generators([
            block_diag(qi, qi), block_diag(qj, qj), block_diag(two, two.scale(MINUS)),
        ])
        assert model.is_isomorphic(catalog_group("q8_c2"))

    def test_d4_c2_matches_a_direct_product_model(self):
        rot = parse_matrix("[[0, -i], [-i, 0]]")
        ref = parse_matrix("[[0, -i], [i, 0]]")
        two = ExactMatrix.identity(2)
        model = MatrixGroup.from_generators([
            block_diag(rot, rot), block_diag(ref, ref), block_diag(two, two.scale(MINUS)),
        ])
        assert model.is_isomorphic(catalog_group("d4_c2"))

    def test_extracted_groups_are_not_isomorphic_to_pauli(self):
        pauli = catalog_group("pauli")
        assert not catalog_group("q8_c2").is_isomorphic(pauli)
        assert not catalog_group("d4_c2").is_isomorphic(pauli)


class TestPools:
    def test_pool_orders(self):
        assert pool_group("dirac4").order == 64
        assert pool_group("penta8").order == 128

    def test_pools_contain_the_imaginary_scalar(self):
        for name in ("dirac4", "penta8"):
            pool = pool_group(name)
            scalar = ExactMatrix.identity(pool.elements[0].dim).scale(IMAG)
            assert scalar in pool

    def test_unknown_pool_rejected(self):
        with pytest.raises(KeyError):
            pool_group("octonion16")


class TestSignatureSpec:
    @pytest.mark.parametrize("text", SWEEP_SIGNATURES)
    def test_round_trip(self, text):
        assert str(SignatureSpec.parse(text)) == text

    def test_anticommuting_spec_shape(self):
        spec = SignatureSpec.parse("++--")
        assert spec.squares == (1, 1, -1, -1)
        assert spec.commuting_fourth is None

    def test_commuting_spec_shape(self):
        spec = SignatureSpec.parse("+--|+")
        assert spec.squares == (1, -1, -1)
        assert spec.commuting_fourth == 1

    @pytest.mark.parametrize("text", ["+++", "+++++", "++|++", "|+++", "+-x-"])
    def test_malformed_specs_rejected(self, text):
        with pytest.raises(ValueError):
            SignatureSpec.parse(text)

    @settings(max_examples=30, deadline=None)
    @given(st.text(alphabet="+-", min_size=4, max_size=4))
    def test_any_four_sign_string_parses(self, text):
        assert str(SignatureSpec.parse(text)) == text


class TestSearch:
    def test_anticommuting_quadruples_in_the_small_pool(self):
        for text, expect in (
            ("++++", "gamma_minus"),
            ("+++-", "gamma_plus"),
            ("++--", "gamma_plus"),
            ("+---", "gamma_minus"),
            ("----", "gamma_minus"),
        ):
            hits = [h for h in find_gamma_models(text, "dirac4") if h.order == 32]
            assert [h.identified for h in hits] == [expect], text

    def test_twisted_triples_have_no_small_pool_model(self):
        # The two commuting-fourth signatures whose order-32 groups need
        # 6-dim blocks must come up empty in the 4-dim pool.
        for text in ("---|+", "++-|+"):
            hits = [h for h in find_gamma_models(text, "dirac4") if h.order == 32]
            assert hits == [], text

    def test_search_results_are_cached_and_stable(self):
        first = find_gamma_models("++++", "dirac4")
        second = find_gamma_models("++++", "dirac4")
        assert [h.generator_indices for h in first] == [h.generator_indices for h in second]

    def test_full_sweep_identifies_exactly_the_five_stable_groups(self):
        sweep = sweep_stable_models("penta8")
        assert set(sweep) == set(SWEEP_SIGNATURES)
        for text, hits in sweep.items():
            assert len(hits) == 1, f"{text} found {len(hits)} order-32 classes"
            assert hits[0].identified is not None, text
        found = {hits[0].identified for hits in sweep.values()}
        assert found == set(STABLE_NAMES)

    def test_sweep_respects_declared_signatures(self):
        # Wherever a stable entry declares its signature, the sweep must
        # rediscover that entry for that signature.
        sweep = sweep_stable_models("penta8")
        for name in STABLE_NAMES:
            declared = catalog_entry(name).signature
            assert sweep[declared][0].identified == name


class TestExtensions:
    def test_each_irreducible_base_extends_both_ways(self):
        table = {
            ("gamma_minus", 1): "gamma64_minus",
            ("gamma_minus", -1): "gamma64_null",
            ("gamma_plus", 1): "gamma64_null",
            ("gamma_plus", -1): "gamma64_plus",
        }
        for (base, square), expect in table.items():
            result = enumerate_extensions(base, square)
            assert result.found, (base, square)
            assert result.order == 64
            assert result.identified == expect
            assert result.report is not None and result.report.passed

    @pytest.mark.parametrize("base", ["pauli_c2", "q8_v4", "d4_v4"])
    @pytest.mark.parametrize("square", [1, -1])
    def test_reducible_bases_report_failure_without_raising(self, base, square):
        result = enumerate_extensions(base, square)
        assert not result.found
        assert "no phase" in result.reason

    def test_extension_sweep_collapses_to_three_classes(self):
        results = sweep_extensions()
        assert len(results) == 10
        found = {r.identified for r in results if r.found}
        assert found == {"gamma64_minus", "gamma64_plus", "gamma64_null"}

    def test_invalid_square_rejected(self):
        with pytest.raises(ValueError):
            enumerate_extensions("gamma_minus", 2)


class TestOrder64Models:
    def test_sixth_generator_blocks(self):
        # Product of all five generators: scalar on each 4-dim block, with
        # opposite signs (or opposite imaginary units for the null model).
        cases = {
            "gamma64_minus": ("1", "-1"),
            "gamma64_plus": ("-1", "1"),
            "gamma64_null": ("i", "-i"),
        }
        four = ExactMatrix.identity(4)
        for name, (top, bottom) in cases.items():
            gens = catalog_entry(name).generators
            product = gens[0]
            for g in gens[1:]:
                product = product * g
            want = block_diag(four.scale(parse_scalar(top)), four.scale(parse_scalar(bottom)))
            assert product == want, name

    @pytest.mark.parametrize("name,expected", [
        ("gamma64_minus", (("gamma_minus", 16), ("pauli_c2", 10), ("q8_v4", 5))),
        ("gamma64_plus", (("d4_v4", 9), ("gamma_plus", 16), ("pauli_c2", 6))),
        ("gamma64_null", (("gamma_minus", 6), ("gamma_plus", 10), ("pauli_c2", 15))),
    ])
    def test_index_two_decompositions(self, name, expected):
        assert decompose_index_two(name) == expected

    @pytest.mark.parametrize("name", ["gamma64_minus", "gamma64_plus", "gamma64_null"])
    def test_exactly_three_subgroup_classes_of_half_order(self, name):
        assert len(decompose_index_two(name)) == 3
        assert sum(count for _, count in decompose_index_two(name)) == 31

    def test_the_three_models_are_pairwise_nonisomorphic(self):
        names = ["gamma64_minus", "gamma64_plus", "gamma64_null"]
        for i, a in enumerate(names):
            for b in names[i + 1:]:
                assert not catalog_group(a).is_isomorphic(catalog_group(b))


class TestGeneratorFiles:
    def test_round_trip(self, tmp_path):
        entry = catalog_entry("pauli")
        payload = {
            "name": "custom",
            "dimension": 2,
            "generators": [format_matrix(g) for g in entry.generators],
        }
        path = tmp_path / "custom.json"
        path.write_text(json.dumps(payload))
        name, group = load_generator_file(str(path))
        assert name == "custom"
        assert group.order == 16

    def test_missing_key_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"name": "x", "dimension": 2}))
        with pytest.raises(ValueError):
            load_generator_file(str(path))

    def test_empty_generator_list_rejected(self, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text(json.dumps({"name": "x", "dimension": 2, "generators": []}))
        with pytest.raises(ValueError):
            load_generator_file(str(path))
