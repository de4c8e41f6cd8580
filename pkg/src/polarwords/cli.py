"""Command-line front end.  Every computation in the library is reachable
here with deterministic output: stable orders, sorted JSON keys, exactly one
trailing newline, no timings.

Exit codes: 0 success, 1 a verification reported failures, 2 usage problems,
3 a size guard refused the request.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .bijection import VERIFY_MAX_AMBIENT, full_table, verify_bijection
from .errors import GuardError
from .language import classify_word, count_words, enumerate_words, g
from .nset import classify_subspace, enumerate_N
from .polarspace import build_geometry, export_incidence, strata, udim
from .verify import format_report, run_all


@dataclass(slots=True)
class CommandConfig:
    command: str
    n: int | None = None
    base: int = 0
    case_filter: int | None = None
    format: str = "text"
    out: str | None = None
    figure: str | None = None
    threads: int = 1
    verify: bool = False
    fast: bool = False


def _json_doc(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _lines_doc(lines: list[str]) -> str:
    # every output ends with exactly one newline, even an empty enumeration
    return "\n".join(lines) + "\n"


def _scalar(config: CommandConfig, key: str, value: int) -> tuple[int, str]:
    if config.format == "json":
        return 0, _json_doc({"n": config.n, key: value})
    if config.format == "csv":
        return 0, _lines_doc([f"{config.n},{value}"])
    return 0, _lines_doc([str(value)])


def _run_g(config: CommandConfig) -> tuple[int, str]:
    return _scalar(config, "g", g(config.n))


def _run_count_words(config: CommandConfig) -> tuple[int, str]:
    return _scalar(config, "count", count_words(config.n))


def _run_udim(config: CommandConfig) -> tuple[int, str]:
    return _scalar(config, "udim", udim(config.n))


def _run_enumerate_words(config: CommandConfig) -> tuple[int, str]:
    labeled = [(w, classify_word(w)) for w in enumerate_words(config.n)]
    if config.case_filter is not None:
        labeled = [(w, label) for w, label in labeled if label.case == config.case_filter]
    if config.format == "json":
        doc = _json_doc(
            {
                "n": config.n,
                "words": [{"case": label.case, "word": w} for w, label in labeled],
            }
        )
    elif config.format == "csv":
        doc = _lines_doc([f"{w},{label.case}" for w, label in labeled])
    else:
        doc = _lines_doc([w for w, _ in labeled])
    return 0, doc


def _run_enumerate_subspaces(config: CommandConfig) -> tuple[int, str]:
    labeled = [(space, classify_subspace(space)) for space in enumerate_N(config.n)]
    if config.case_filter is not None:
        labeled = [(s, label) for s, label in labeled if label.case == config.case_filter]
    if config.format == "json":
        doc = _json_doc(
            {
                "n": config.n,
                "subspaces": [
                    {
                        "basis": str(space),
                        "case": label.case,
                        "dim": space.dim,
                        "subcase": label.subcase,
                    }
                    for space, label in labeled
                ],
            }
        )
    else:
        doc = _lines_doc(
            [
                f"{space},{space.dim},{label.case},{label.subcase or ''}"
                for space, label in labeled
            ]
        )
    return 0, doc


def _run_strata(config: CommandConfig) -> tuple[int, str]:
    report = strata(config.n, config.base)
    if config.figure:
        from . import figures

        figures.render_strata(report, config.figure)
    if config.format == "json":
        doc = _json_doc(
            {
                "base": report.base_index,
                "components": [[list(c) for c in comps] for comps in report.components],
                "n": report.n,
                "strata": [list(s) for s in report.strata],
            }
        )
    else:
        doc = _lines_doc(
            [
                f"{k},{len(members)},{len(comps)}"
                for k, (members, comps) in enumerate(zip(report.strata, report.components))
            ]
        )
    return 0, doc


def _run_bijection(config: CommandConfig) -> tuple[int, str]:
    if not 1 <= config.n <= VERIFY_MAX_AMBIENT:
        raise GuardError(
            f"bijection supports 1 <= n <= {VERIFY_MAX_AMBIENT}, got {config.n}"
        )
    if config.verify:
        report = verify_bijection(config.n)
        if config.figure:
            from . import figures

            figures.render_case_counts(config.n, report.case_counts, config.figure)
        if config.format == "json":
            doc = _json_doc(
                {
                    "case_counts": list(report.case_counts),
                    "failures": list(report.failures),
                    "matched": report.matched,
                    "n": report.n,
                    "subspaces": report.subspace_count,
                    "words": report.word_count,
                }
            )
        else:
            lines = [
                f"n {report.n}: {report.word_count} words, "
                f"{report.subspace_count} subspaces, {report.matched} matched",
                "classes: " + ", ".join(map(str, report.case_counts)),
            ]
            lines.extend(f"FAIL {failure}" for failure in report.failures)
            doc = _lines_doc(lines)
        return (0 if report.ok else 1), doc
    table = full_table(config.n)
    entries = [(w, classify_word(w), table.forward[w]) for w in enumerate_words(config.n)]
    if config.figure:
        from . import figures

        counts = [0] * 7
        for _, label, _ in entries:
            counts[label.case - 1] += 1
        figures.render_case_counts(config.n, tuple(counts), config.figure)
    if config.format == "json":
        doc = _json_doc(
            {
                "n": config.n,
                "table": [
                    {"case": label.case, "subspace": str(space), "word": w}
                    for w, label, space in entries
                ],
            }
        )
    else:
        doc = _lines_doc([f"{w},{label.case},{space}" for w, label, space in entries])
    return 0, doc


def _run_export_incidence(config: CommandConfig) -> tuple[int, str]:
    doc = export_incidence(config.n, config.format)
    if config.figure:
        from . import figures

        figures.render_incidence(build_geometry(config.n), config.figure)
    return 0, doc


def _run_verify_all(config: CommandConfig) -> tuple[int, str]:
    results = run_all(fast=config.fast)
    return (0 if all(r.ok for r in results) else 1), format_report(results)


_HANDLERS = {
    "g": _run_g,
    "count-words": _run_count_words,
    "enumerate-words": _run_enumerate_words,
    "enumerate-subspaces": _run_enumerate_subspaces,
    "udim": _run_udim,
    "strata": _run_strata,
    "bijection": _run_bijection,
    "export-incidence": _run_export_incidence,
    "verify-all": _run_verify_all,
}


def run(config: CommandConfig) -> tuple[int, str]:
    """Dispatch a parsed command; returns (exit status, output document)."""
    return _HANDLERS[config.command](config)


def _add_common(p: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--out", metavar="PATH", help="write the document to a file instead of stdout")
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        metavar="K",
        help="worker count; accepted for interface stability, output never depends on it",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarwords",
        description="Restricted-growth words, their subspace family, and the "
        "rank-n symplectic polar space over F_2, with cross-verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("g", help="the closed-form count (2^n + 1)(2^(n-1) + 1)/3")
    p.add_argument("n", type=int)
    _add_common(p, ("text", "json", "csv"), "text")

    p = sub.add_parser("count-words", help="language size by dynamic programming")
    p.add_argument("n", type=int)
    _add_common(p, ("text", "json", "csv"), "text")

    p = sub.add_parser("enumerate-words", help="all words of one length, optionally one class")
    p.add_argument("n", type=int)
    p.add_argument("--case", dest="case_filter", type=int, choices=range(1, 8))
    _add_common(p, ("text", "json", "csv"), "text")

    p = sub.add_parser(
        "enumerate-subspaces",
        help="the subspace family with dim, class and subclass per member",
    )
    p.add_argument("n", type=int)
    p.add_argument("--case", dest="case_filter", type=int, choices=range(1, 8))
    _add_common(p, ("text", "json", "csv"), "text")

    p = sub.add_parser("udim", help="points minus GF(2) rank of the line-sum relations")
    p.add_argument("n", type=int)
    _add_common(p, ("text", "json", "csv"), "text")

    p = sub.add_parser("strata", help="distance strata around a base point, with components")
    p.add_argument("n", type=int)
    p.add_argument("base", type=int, nargs="?", default=0)
    p.add_argument("--figure", metavar="PATH", help="also render a bar chart to a file")
    _add_common(p, ("text", "json", "csv"), "text")

    p = sub.add_parser("bijection", help="the word-subspace dictionary, or its verification")
    p.add_argument("n", type=int)
    p.add_argument("--verify", action="store_true", help="check bijectivity instead of printing the table")
    p.add_argument("--figure", metavar="PATH", help="also render per-class counts to a file")
    _add_common(p, ("text", "json", "csv"), "text")

    p = sub.add_parser("export-incidence", help="point-line incidence as json, csv or dot")
    p.add_argument("n", type=int)
    p.add_argument("--figure", metavar="PATH", help="also render the incidence graph to a file")
    _add_common(p, ("json", "csv", "dot"), "json")

    p = sub.add_parser("verify-all", help="run the full acceptance battery")
    p.add_argument("--fast", action="store_true", help="trim the largest sizes")
    p.add_argument("--out", metavar="PATH")
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        metavar="K",
        help="worker count; accepted for interface stability, output never depends on it",
    )

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    config = CommandConfig(
        command=ns.command,
        n=getattr(ns, "n", None),
        base=getattr(ns, "base", 0),
        case_filter=getattr(ns, "case_filter", None),
        format=getattr(ns, "format", "text"),
        out=getattr(ns, "out", None),
        figure=getattr(ns, "figure", None),
        threads=getattr(ns, "threads", 1),
        verify=getattr(ns, "verify", False),
        fast=getattr(ns, "fast", False),
    )
    if config.threads < 1:
        parser.error(f"--threads wants a positive count, got {config.threads}")
    if config.command == "bijection" and config.verify and config.format == "csv":
        parser.error("the verification report has no csv form")
    try:
        status, document = run(config)
    except GuardError as err:
        print(f"guard refused: {err}", file=sys.stderr)
        return 3
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(document)
    else:
        sys.stdout.write(document)
    return status
