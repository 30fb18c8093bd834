"""Registry of verifiable numeric claims about the catalog groups.

Each claim pairs a frozen expected value with a callable that recomputes
the value from scratch. A claim passes only on exact equality, so every
expected value is a plain JSON-compatible object in a canonical form
(sorted lists, formatted scalars, census strings).
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fnmatch import fnmatch
from typing import Callable

from . import catalog
from .brackets import (
    BracketTable,
    RelationSet,
    evaluate_word,
    find_component_match,
    verify_bracket_table,
    verify_relations,
)
from .exact import GaussianRational, format_scalar
from .reps import format_census, invariant_bilinear_form, spin_weights


class UnknownClaimFilter(Exception):
    """Raised when a claim filter matches nothing in the registry."""


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    expected: object
    compute: Callable[[], object]


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    description: str
    expected: object
    computed: object
    status: str
    ms: int

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "description": self.description,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
            "ms": self.ms,
        }


def _report_verdict(report) -> str:
    if report.passed:
        return "pass"
    return "fail: " + ", ".join(c.check_id for c in report.failures())


def _table_verdict(entry_name: str) -> str:
    """Verify an entry's bracket table row by row on explicit matrices."""
    entry = catalog.catalog_entry(entry_name)
    table = BracketTable.load(entry.table)
    if entry.table_assignment is not None:
        genmap = entry.generator_assignment()
        assignment = {
            label: evaluate_word(word, genmap)
            for label, word in entry.table_assignment.items()
        }
    else:
        group = catalog.catalog_group(entry_name)
        match = find_component_match(group, designated=entry.generators)
        if match is None or match.table != entry.table:
            return f"fail: no {entry.table} match"
        assignment = match.assignment(group, table)
    return _report_verdict(verify_bracket_table(table, assignment))


def _relations_verdict(entry_name: str, relation_set: str) -> str:
    entry = catalog.catalog_entry(entry_name)
    genmap = entry.generator_assignment()
    mapping = entry.relations[relation_set]
    assignment = {label: evaluate_word(word, genmap) for label, word in mapping.items()}
    return _report_verdict(verify_relations(RelationSet.load(relation_set), assignment))


def _substituted_table_verdict() -> str:
    """Scaling the involution boosts by i turns a d-table pass into b."""
    entry = catalog.catalog_entry("pauli")
    genmap = entry.generator_assignment()
    d_table = BracketTable.load("d")
    b_table = BracketTable.load("b")
    imag = GaussianRational(0, 1)
    d_assignment = {
        label: evaluate_word(word, genmap)
        for label, word in entry.table_assignment.items()
    }
    assignment = {}
    for k in range(3):
        assignment[b_table.rotations[k]] = d_assignment[d_table.rotations[k]]
        assignment[b_table.boosts[k]] = d_assignment[d_table.boosts[k]].scale(imag)
    return _report_verdict(verify_bracket_table(b_table, assignment))


def _center_scalars(name: str) -> list[str]:
    group = catalog.catalog_group(name)
    out = []
    for idx in group.center():
        value = group.elements[idx].scalar_value()
        out.append(format_scalar(value) if value is not None else "nonscalar")
    return sorted(out)


def _weight_summary(name: str, word: str) -> dict:
    entry = catalog.catalog_entry(name)
    report = spin_weights(evaluate_word(word, entry.generator_assignment()))
    return {
        "weights": [[v, m] for v, m in report.weights],
        "l0": str(report.l0) if report.l0 is not None else None,
        "classification": report.classification,
    }


def _generator_orders(name: str) -> list[int]:
    group = catalog.catalog_group(name)
    return [group.element_order(i) for i in group.generator_indices]


def _indicator_and_form(name: str) -> dict:
    entry = catalog.catalog_entry(name)
    group = catalog.catalog_group(name)
    profile = catalog.compute_profile(group, entry.blocks)
    kinds = []
    for block in entry.blocks:
        kind, _ = invariant_bilinear_form(group, block)
        kinds.append(kind)
    return {"indicators": sorted(set(profile.indicators)), "forms": sorted(set(kinds))}


def _realform(name: str) -> dict:
    entry = catalog.catalog_entry(name)
    group = catalog.catalog_group(name)
    kinds = set()
    nonsingular = True
    for block in entry.blocks:
        kind, form = invariant_bilinear_form(group, block)
        kinds.add(kind)
        if form is None:
            nonsingular = False
        else:
            form.inverse()  # raises if singular
    if kinds == {"none"}:
        return {"kind": "none"}
    (kind,) = kinds
    return {"kind": kind, "nonsingular": nonsingular}


def _delta_profile(name: str) -> dict:
    group = catalog.catalog_group(name)
    profile = catalog.compute_profile(group, catalog.catalog_entry(name).blocks)
    return {
        "order": profile.order,
        "census": format_census(profile.census),
        "half_order_classes": len(catalog.decompose_index_two(name)),
    }


def _index_two_value(name: str) -> dict:
    summary = catalog.index_two_summary_for(name)
    return {
        "count": sum(item["count"] for item in summary),
        "classes": [[item["component"], item["count"]] for item in summary],
    }


def _sweep_value() -> dict:
    sweep = catalog.sweep_stable_models("penta8")
    out = {}
    for spec, hits in sweep.items():
        out[spec] = hits[0].identified if len(hits) == 1 else sorted(
            h.identified or "?" for h in hits
        )
    return out


def _small_pool_gap() -> dict:
    out = {}
    for spec in ("---|+", "++-|+"):
        hits = [h for h in catalog.find_gamma_models(spec, "dirac4") if h.order == 32]
        out[spec] = sorted(h.identified or "?" for h in hits)
    return out


def _extension_value() -> dict:
    results = catalog.sweep_extensions()
    return {
        "attempted": len(results),
        "found": sum(1 for r in results if r.found),
        "classes": sorted({r.identified for r in results if r.found}),
    }


def _decomposition_value(name: str) -> dict:
    return {key: count for key, count in catalog.decompose_index_two(name)}


def _isomorphic(a: str, b: str) -> bool:
    return catalog.catalog_group(a).is_isomorphic(catalog.catalog_group(b))


_EXPECTED_SWEEP = {
    "++++": "gamma_minus",
    "+++-": "gamma_plus",
    "++--": "gamma_plus",
    "+---": "gamma_minus",
    "----": "gamma_minus",
    "+++|+": "pauli_c2",
    "+++|-": "pauli_c2",
    "++-|+": "d4_v4",
    "++-|-": "pauli_c2",
    "+--|+": "pauli_c2",
    "+--|-": "pauli_c2",
    "---|+": "q8_v4",
    "---|-": "pauli_c2",
}


def _build_registry() -> list[Claim]:
    claims = [
        Claim(
            "pauli.order", "Closure of the three involution generators has order 16.",
            16, lambda: catalog.catalog_group("pauli").order,
        ),
        Claim(
            "pauli.classes", "The order-16 phase group has ten conjugacy classes.",
            10, lambda: len(catalog.catalog_group("pauli").conjugacy_classes()),
        ),
        Claim(
            "pauli.center", "The center consists of the four scalar phases.",
            ["-1", "-i", "1", "i"], lambda: _center_scalars("pauli"),
        ),
        Claim(
            "pauli.census", "Irreducible dimensions: eight linear, two of dimension 2.",
            "8x1 + 2x2",
            lambda: format_census(catalog.compute_profile(catalog.catalog_group("pauli")).census),
        ),
        Claim(
            "pauli.rank", "Minimal generator count is three.",
            3, lambda: catalog.catalog_group("pauli").minimal_generator_count(),
        ),
        Claim(
            "pauli.weights", "The rotation g3*g2 carries weights +-1/2 with top weight 1/2.",
            {
                "weights": [["-1/2", 1], ["1/2", 1]],
                "l0": "1/2",
                "classification": "real-half-integer",
            },
            lambda: _weight_summary("pauli", "g3 g2"),
        ),
        Claim(
            "quaternion.order", "The two order-4 generators close into a group of order 8.",
            8, lambda: catalog.catalog_group("q8").order,
        ),
        Claim(
            "quaternion.relations", "The quaternion relation set verifies exactly.",
            "pass", lambda: _relations_verdict("q8", "quaternion"),
        ),
        Claim(
            "quaternion.second_kind",
            "Replacing one generator by an order-2 element keeps order 8 with orders (4, 2).",
            {"order": 8, "generator_orders": [4, 2]},
            lambda: {
                "order": catalog.catalog_group("d4").order,
                "generator_orders": _generator_orders("d4"),
            },
        ),
        Claim(
            "quaternion.nonisomorphic",
            "The two order-8 groups are not isomorphic (full backtracking check).",
            False, lambda: _isomorphic("q8", "d4"),
        ),
        Claim(
            "brackets.table_d", "Table d verifies row by row on the pauli realization.",
            "pass", lambda: _table_verdict("pauli"),
        ),
        Claim(
            "brackets.table_q2", "Table q2 verifies on the order-8 dihedral rotations.",
            "pass", lambda: _table_verdict("d4"),
        ),
        Claim(
            "brackets.table_f", "Table f verifies on the mixed-square boost triple.",
            "pass", lambda: _table_verdict("pauli_f"),
        ),
        Claim(
            "brackets.table_b", "Table b verifies on the component extracted from gamma_minus.",
            "pass", lambda: _table_verdict("q8_c2"),
        ),
        Claim(
            "brackets.table_c", "Table c verifies on the component extracted from gamma_plus.",
            "pass", lambda: _table_verdict("d4_c2"),
        ),
        Claim(
            "brackets.substitution",
            "Scaling the d-table boosts by i satisfies table b row by row.",
            "pass", _substituted_table_verdict,
        ),
        Claim(
            "brackets.products", "The generator product identities verify exactly.",
            "pass", lambda: _relations_verdict("pauli", "pauli_products"),
        ),
        Claim(
            "weights.imaginary_second",
            "The second rotation of the f realization has pure imaginary weights.",
            "pure-imaginary",
            lambda: _weight_summary("pauli_f", "-i*g2")["classification"],
        ),
        Claim(
            "weights.imaginary_third",
            "The third rotation of the f realization has pure imaginary weights.",
            "pure-imaginary",
            lambda: _weight_summary("pauli_f", "-i*g3")["classification"],
        ),
        Claim(
            "dirac.order", "Four anticommuting involutions close into a group of order 32.",
            32, lambda: catalog.catalog_group("gamma_minus").order,
        ),
        Claim(
            "dirac.subgroup_classes",
            "The 15 index-two subgroups split into classes b (5) and d (10).",
            {"count": 15, "classes": [["b", 5], ["d", 10]]},
            lambda: _index_two_value("gamma_minus"),
        ),
        Claim(
            "dirac.iso_df",
            "The d and f realizations are the same abstract group (verified certificate).",
            True, lambda: _isomorphic("pauli", "pauli_f"),
        ),
        Claim(
            "invariants.gamma_minus", "Indicator -1 with antisymmetric block form.",
            {"indicators": [-1], "forms": ["antisymmetric"]},
            lambda: _indicator_and_form("gamma_minus"),
        ),
        Claim(
            "invariants.gamma_plus", "Indicator +1 with symmetric block form.",
            {"indicators": [1], "forms": ["symmetric"]},
            lambda: _indicator_and_form("gamma_plus"),
        ),
        Claim(
            "invariants.pauli_c2", "Indicator 0 with no invariant bilinear form.",
            {"indicators": [0], "forms": ["none"]},
            lambda: _indicator_and_form("pauli_c2"),
        ),
        Claim(
            "invariants.q8_v4", "Indicator -1 on every 2-dim block.",
            {"indicators": [-1], "forms": ["antisymmetric"]},
            lambda: _indicator_and_form("q8_v4"),
        ),
        Claim(
            "invariants.d4_v4", "Indicator +1 on every 2-dim block.",
            {"indicators": [1], "forms": ["symmetric"]},
            lambda: _indicator_and_form("d4_v4"),
        ),
        Claim(
            "search.exhaustive",
            "The 13-signature sweep finds one order-32 class per signature, "
            "five distinct groups overall.",
            dict(_EXPECTED_SWEEP), _sweep_value,
        ),
        Claim(
            "search.small_pool_gap",
            "The twisted-triple signatures have no order-32 model in the 4-dim pool.",
            {"---|+": [], "++-|+": []}, _small_pool_gap,
        ),
        Claim(
            "extensions.exhaustive",
            "Ten base/square extension attempts land on exactly three order-64 groups.",
            {
                "attempted": 10,
                "found": 4,
                "classes": ["gamma64_minus", "gamma64_null", "gamma64_plus"],
            },
            _extension_value,
        ),
    ]
    delta_rows = [
        (
            "delta1", "gamma64_minus", "delta1",
            {"gamma_minus": 16, "pauli_c2": 10, "q8_v4": 5},
            [-1, -1], {"kind": "antisymmetric", "nonsingular": True},
        ),
        (
            "delta2", "gamma64_plus", "delta2",
            {"d4_v4": 9, "gamma_plus": 16, "pauli_c2": 6},
            [1, 1], {"kind": "symmetric", "nonsingular": True},
        ),
        (
            "delta3", "gamma64_null", "delta3",
            {"gamma_minus": 6, "gamma_plus": 10, "pauli_c2": 15},
            [0, 0], {"kind": "none"},
        ),
    ]
    for prefix, name, relation_set, decomposition, indicators, realform in delta_rows:
        claims.extend([
            Claim(
                f"{prefix}.profile",
                f"{name} has order 64, census 32x1 + 2x4, three half-order classes.",
                {"order": 64, "census": "32x1 + 2x4", "half_order_classes": 3},
                lambda name=name: _delta_profile(name),
            ),
            Claim(
                f"{prefix}.decomposition",
                f"Index-two subgroups of {name} split by isomorphism type.",
                decomposition, lambda name=name: _decomposition_value(name),
            ),
            Claim(
                f"{prefix}.sixth",
                f"The sixth-generator relations of {name} verify (centrality and square).",
                "pass", lambda name=name, rels=relation_set: _relations_verdict(name, rels),
            ),
            Claim(
                f"{prefix}.invariants",
                f"Block indicators of {name}.",
                indicators,
                lambda name=name: list(
                    catalog.compute_profile(
                        catalog.catalog_group(name), catalog.catalog_entry(name).blocks
                    ).indicators
                ),
            ),
            Claim(
                f"{prefix}.realform",
                f"Invariant bilinear form kind on the 4-dim blocks of {name}.",
                realform, lambda name=name: _realform(name),
            ),
        ])
    claims.sort(key=lambda c: c.claim_id)
    ids = [c.claim_id for c in claims]
    if len(ids) != len(set(ids)):
        raise RuntimeError("duplicate claim ids in registry")
    return claims


_REGISTRY: list[Claim] | None = None


def registry() -> list[Claim]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build_registry()
    return list(_REGISTRY)


def claim_ids() -> list[str]:
    return [c.claim_id for c in registry()]


def _matches(claim_id: str, pattern: str) -> bool:
    # "delta.*" is read as a namespace prefix even though the ids continue
    # with digits (delta1, delta2, ...), so try the dotless variant too.
    return fnmatch(claim_id, pattern) or fnmatch(claim_id, pattern.replace(".*", "*"))


def run_claims(pattern: str | None = None, *, jobs: int = 1) -> list[ClaimResult]:
    """Run the registry (or a glob-filtered slice) and collect results.

    Results come back sorted by claim id regardless of execution order.
    Raises UnknownClaimFilter when the pattern selects nothing.
    """
    selected = registry()
    if pattern is not None:
        selected = [c for c in selected if _matches(c.claim_id, pattern)]
        if not selected:
            raise UnknownClaimFilter(f"claim filter {pattern!r} matches no registered claim")

    def run_one(claim: Claim) -> ClaimResult:
        start = time.perf_counter()
        try:
            computed = claim.compute()
        except Exception as err:  # a crashed claim is a failed claim
            computed = f"error: {err}"
        ms = int((time.perf_counter() - start) * 1000)
        status = "PASS" if computed == claim.expected else "FAIL"
        return ClaimResult(
            claim_id=claim.claim_id,
            description=claim.description,
            expected=claim.expected,
            computed=computed,
            status=status,
            ms=ms,
        )

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_one, selected))
    else:
        results = [run_one(c) for c in selected]
    return sorted(results, key=lambda r: r.claim_id)
