"""Command-line surface: analyses, claim verification, reports.

Every command builds one report document with the same top-level shape,

    {"tool_version", "input", "profile", "claims", "timings"}

and renders it as JSON or markdown. The JSON renderer is canonical
(sorted keys, two-space indent), so parsing a report and re-serializing
it reproduces the bytes exactly.

Exit codes: 0 on success, 1 when a verification or claim fails, 2 on
usage errors (unknown names, unparseable input, empty claim filter).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, catalog, claims
from .brackets import (
    BracketTable,
    TABLE_NAMES,
    evaluate_word,
    find_component_match,
    verify_bracket_table,
)
from .exact import ParseError
from .groups import DEFAULT_CAP, MatrixGroup


class UsageError(Exception):
    """Input that cannot be resolved: unknown name, bad file, bad signature."""


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _markdown_value(value) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, sort_keys=True)


def _markdown_table(rows: list[dict]) -> list[str]:
    columns = sorted({key for row in rows for key in row})
    lines = ["| " + " | ".join(columns) + " |"]
    lines.append("| " + " | ".join("---" for _ in columns) + " |")
    for row in rows:
        cells = [_markdown_value(row.get(col, "")) for col in columns]
        lines.append("| " + " | ".join(cells) + " |")
    return lines


def render_markdown(doc: dict) -> str:
    lines = [f"# gammagroups {doc['input']['command']} report", ""]
    lines.append(f"- tool_version: {doc['tool_version']}")
    for key in sorted(doc["input"]):
        if key != "command":
            lines.append(f"- {key}: {_markdown_value(doc['input'][key])}")
    lines.append("")
    profile = doc.get("profile")
    if profile:
        lines.append("## profile")
        bullets = []
        tables = []
        for key in sorted(profile):
            value = profile[key]
            if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
                tables.append((key, value))
            else:
                bullets.append(f"- {key}: {_markdown_value(value)}")
        if bullets:
            lines.append("")
            lines.extend(bullets)
        for key, rows in tables:
            lines.append("")
            lines.append(f"### {key}")
            lines.append("")
            lines.extend(_markdown_table(rows))
        lines.append("")
    if doc.get("claims"):
        lines.append("## claims")
        lines.append("")
        lines.append("| status | claim | expected | computed | ms |")
        lines.append("| --- | --- | --- | --- | --- |")
        for claim in doc["claims"]:
            lines.append(
                "| {status} | {claim_id} | {expected} | {computed} | {ms} |".format(
                    status=claim["status"],
                    claim_id=claim["claim_id"],
                    expected=_markdown_value(claim["expected"]),
                    computed=_markdown_value(claim["computed"]),
                    ms=claim["ms"],
                )
            )
        lines.append("")
    lines.append(f"- total_ms: {doc['timings']['total_ms']}")
    return "\n".join(lines) + "\n"


def _document(command: str, started: float, *, profile=None, claim_results=None, **input_args) -> dict:
    return {
        "tool_version": __version__,
        "input": {"command": command, **input_args},
        "profile": profile,
        "claims": [r.to_dict() for r in (claim_results or [])],
        "timings": {"total_ms": int((time.perf_counter() - started) * 1000)},
    }


def _resolve_target(target: str, cap: int) -> tuple[str, MatrixGroup, object]:
    """Catalog name or generator-file path -> (name, group, entry or None)."""
    if target in catalog.catalog_names():
        return target, catalog.catalog_group(target), catalog.catalog_entry(target)
    try:
        name, group = catalog.load_generator_file(target, cap=cap)
    except FileNotFoundError as err:
        raise UsageError(f"{target!r} is neither a catalog entry nor a readable file") from err
    except (ValueError, ParseError, json.JSONDecodeError) as err:
        raise UsageError(f"cannot load generator file {target!r}: {err}") from err
    return name, group, None


def _analyze_profile(name: str, group: MatrixGroup, entry) -> dict:
    blocks = entry.blocks if entry is not None else None
    profile = catalog.compute_profile(group, blocks)
    doc = {"name": name, "dimension": group.elements[0].dim, **profile.to_dict()}
    del doc["index_two_class_count"]
    doc["blocks"] = [list(b) for b in blocks] if blocks else None
    if group.order == 16:
        designated = None
        if entry is not None and len(entry.generators) == 3:
            designated = entry.generators
        match = find_component_match(group, designated=designated)
        doc["component"] = match.table if match else None
    if 2 <= group.order <= 64:
        if entry is not None and group.order == 64:
            decomposition = catalog.decompose_index_two(name)
            doc["index_two"] = {
                "count": sum(count for _, count in decomposition),
                "classes": [[label, count] for label, count in decomposition],
            }
        else:
            summary = catalog.index_two_summary_for(name) if entry is not None else (
                catalog.index_two_component_summary(group)
            )
            doc["index_two"] = {
                "count": sum(item["count"] for item in summary),
                "classes": [[item["component"], item["count"]] for item in summary],
            }
    if 16 <= group.order <= 32:
        doc["composition"] = sorted(catalog.component_composition(group))
    return doc


def _cmd_catalog(args, started: float) -> tuple[dict, int]:
    entries = []
    for name in catalog.catalog_names():
        entry = catalog.catalog_entry(name)
        entries.append({
            "name": name,
            "dimension": entry.dimension,
            "order": entry.expected["order"],
            "summary": entry.summary,
        })
    doc = _document("catalog", started, profile={"entries": entries}, action="list")
    return doc, 0


def _cmd_analyze(args, started: float) -> tuple[dict, int]:
    name, group, entry = _resolve_target(args.target, args.cap)
    profile = _analyze_profile(name, group, entry)
    doc = _document("analyze", started, profile=profile, target=args.target)
    return doc, 0


def _cmd_verify(args, started: float) -> tuple[dict, int]:
    try:
        results = claims.run_claims(args.filter, jobs=args.jobs)
    except claims.UnknownClaimFilter as err:
        raise UsageError(str(err)) from err
    failed = sum(1 for r in results if r.status != "PASS")
    summary = {"total": len(results), "passed": len(results) - failed, "failed": failed}
    doc = _document(
        "verify", started, profile=summary, claim_results=results,
        filter=args.filter,
    )
    return doc, 0 if failed == 0 else 1


def _cmd_subgroups(args, started: float) -> tuple[dict, int]:
    name, group, _ = _resolve_target(args.name, args.cap)
    if args.order < 1 or group.order % args.order != 0:
        raise UsageError(f"order {args.order} does not divide the group order {group.order}")
    rows = []
    for position, sub in enumerate(group.subgroups_of_order(args.order)):
        row = {"position": position, "order": args.order}
        if args.classify and args.order == 16:
            match = find_component_match(sub.as_group())
            row["component"] = match.table if match else None
        rows.append(row)
    profile = {"name": name, "order": args.order, "count": len(rows), "subgroups": rows}
    doc = _document(
        "subgroups", started, profile=profile,
        name=args.name, order=args.order, classify=args.classify,
    )
    return doc, 0


def _cmd_brackets(args, started: float) -> tuple[dict, int]:
    name, group, entry = _resolve_target(args.name, args.cap)
    table = BracketTable.load(args.table)
    assignment = None
    if entry is not None and entry.table == args.table and entry.table_assignment:
        genmap = entry.generator_assignment()
        assignment = {
            label: evaluate_word(word, genmap)
            for label, word in entry.table_assignment.items()
        }
    else:
        designated = None
        if entry is not None and entry.table == args.table and len(entry.generators) == 3:
            designated = entry.generators
        try:
            match = find_component_match(group, designated=designated, tables=(args.table,))
        except ValueError as err:
            raise UsageError(str(err)) from err
        if match is not None:
            assignment = match.assignment(group, table)
    if assignment is None:
        profile = {
            "name": name, "table": args.table, "passed": False,
            "detail": f"no realization of table {args.table} found in {name}",
            "checks": [],
        }
        doc = _document("brackets", started, profile=profile, name=args.name, table=args.table)
        return doc, 1
    report = verify_bracket_table(table, assignment)
    profile = {
        "name": name, "table": args.table, "passed": report.passed,
        "checks": [c.to_dict() for c in report.checks],
    }
    doc = _document("brackets", started, profile=profile, name=args.name, table=args.table)
    return doc, 0 if report.passed else 1


def _cmd_search(args, started: float) -> tuple[dict, int]:
    try:
        hits = catalog.find_gamma_models(args.signature, args.pool)
    except (ValueError, KeyError) as err:
        raise UsageError(str(err)) from err
    profile = {
        "signature": args.signature,
        "pool": args.pool,
        "hits": [
            {
                "order": h.order,
                "identified": h.identified,
                "generator_indices": list(h.generator_indices),
            }
            for h in hits
        ],
    }
    doc = _document(
        "search", started, profile=profile, signature=args.signature, pool=args.pool,
    )
    return doc, 0


def _cmd_extensions(args, started: float) -> tuple[dict, int]:
    square = 1 if args.square == "plus" else -1
    if args.base not in catalog.catalog_names():
        raise UsageError(f"unknown catalog entry {args.base!r}")
    result = catalog.enumerate_extensions(args.base, square)
    profile = {
        "base": result.base,
        "square": square,
        "found": result.found,
    }
    if result.found:
        profile.update({
            "phase": result.phase,
            "order": result.order,
            "identified": result.identified,
            "relations_passed": bool(result.report and result.report.passed),
        })
    else:
        profile["reason"] = result.reason
    doc = _document(
        "extensions", started, profile=profile, base=args.base, square=args.square,
    )
    return doc, 0


_GLOBAL_DEFAULTS = {"format": "markdown", "jobs": 1, "cap": DEFAULT_CAP}


def build_parser() -> argparse.ArgumentParser:
    # The shared options use SUPPRESS so a subcommand parse does not
    # overwrite a value given before the subcommand; parse_args fills
    # the real defaults in afterwards.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "markdown"),
                        default=argparse.SUPPRESS,
                        help="report rendering (default: markdown)")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="parallel workers for claim verification")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help="closure size cap for generator files")

    parser = argparse.ArgumentParser(
        prog="gammagroups",
        description="Exact analysis of finite gamma-matrix groups.",
        parents=[common],
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("catalog", help="catalog operations", parents=[common])
    sub.add_argument("action", choices=("list",))

    sub = commands.add_parser("analyze", parents=[common],
                              help="profile a catalog entry or generator file")
    sub.add_argument("target")

    sub = commands.add_parser("verify", help="run the claim registry", parents=[common])
    sub.add_argument("--filter", default=None, help="claim-id glob, e.g. 'pauli.*'")

    sub = commands.add_parser("subgroups", parents=[common],
                              help="enumerate subgroups of one order")
    sub.add_argument("name")
    sub.add_argument("--order", type=int, required=True)
    sub.add_argument("--classify", action="store_true",
                     help="classify order-16 subgroups by bracket table")

    sub = commands.add_parser("brackets", parents=[common],
                              help="verify a bracket table on an entry")
    sub.add_argument("name")
    sub.add_argument("--table", choices=TABLE_NAMES, required=True)

    sub = commands.add_parser("search", parents=[common],
                              help="find generator tuples matching a signature")
    sub.add_argument("--signature", required=True,
                     help="e.g. '+++-'; write --signature='---|+' for leading dashes")
    sub.add_argument("--pool", choices=catalog.POOL_NAMES, default="dirac4")

    sub = commands.add_parser("extensions", parents=[common],
                              help="extend a base by a fifth generator")
    sub.add_argument("--base", required=True)
    sub.add_argument("--square", choices=("plus", "minus"), required=True)

    return parser


_HANDLERS = {
    "catalog": _cmd_catalog,
    "analyze": _cmd_analyze,
    "verify": _cmd_verify,
    "subgroups": _cmd_subgroups,
    "brackets": _cmd_brackets,
    "search": _cmd_search,
    "extensions": _cmd_extensions,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in _GLOBAL_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, default)
    started = time.perf_counter()
    try:
        doc, code = _HANDLERS[args.command](args, started)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    text = render_json(doc) if args.format == "json" else render_markdown(doc)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
