"""``normcheck`` command-line entry point."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from normcheck import __version__
from normcheck.annotate.rules import load_rules
from normcheck.consistency import CheckerConfig, Severity
from normcheck.corpus import extract_term_entries, load_corpus
from normcheck.errors import NormcheckError
from normcheck.ontology import load_ontology, ontology_stats
from normcheck.report import bundle_files, dump_json, findings_csv, write_files
from normcheck.workflow import RunOutputs, run_workflow

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_INPUT = 2

logger = logging.getLogger("normcheck")


class InputError(Exception):
    pass


def _color(stream: object) -> bool:
    return not os.environ.get("NORMCHECK_NO_COLOR") and hasattr(stream, "isatty") and stream.isatty()


def _diag(message: str) -> None:
    prefix = "\033[31merror\033[0m" if _color(sys.stderr) else "error"
    print(f"normcheck: {prefix}: {message}", file=sys.stderr)


@dataclass(frozen=True)
class RunConfig:
    manifest: Path
    ontologies: tuple[Path, ...]
    rules: tuple[Path, ...]
    registry: Path | None
    checker: CheckerConfig
    out_dir: Path
    jobs: int = 1
    strict: bool = False
    timestamp: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        missing = []
        if args.manifest is None:
            raise InputError("--manifest is required")
        if not Path(args.manifest).is_file():
            missing.append(f"manifest not found: {args.manifest}")
        if not args.ontology:
            raise InputError("at least one --ontology is required")
        missing += [f"ontology not found: {p}" for p in args.ontology if not Path(p).is_file()]
        missing += [f"rule file not found: {p}" for p in args.rules if not Path(p).is_file()]
        if args.registry is not None and not Path(args.registry).is_file():
            missing.append(f"registry not found: {args.registry}")
        if missing:
            raise InputError("\n".join(missing))
        try:
            checker = CheckerConfig(
                duplicate_similarity_threshold=args.threshold,
                case_ambiguity_min_count=args.case_min_count,
            )
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        if args.jobs < 1:
            raise InputError("--jobs must be at least 1")
        return cls(
            Path(args.manifest),
            tuple(Path(p) for p in args.ontology),
            tuple(Path(p) for p in args.rules),
            Path(args.registry) if args.registry else None,
            checker,
            Path(args.out),
            args.jobs,
            args.strict,
            args.timestamp,
        )


def _run(config: RunConfig) -> RunOutputs:
    return run_workflow(
        config.manifest, config.ontologies, config.rules, config.registry, config.checker, config.jobs
    )


def _finish(outputs: RunOutputs, config: RunConfig) -> int:
    for name, message in sorted(outputs.failures.items()):
        _diag(f"{name}: {message}")
    if outputs.failures:
        return EXIT_INPUT
    if config.strict and any(f.severity is Severity.ERROR for f in outputs.findings):
        return EXIT_FINDINGS
    return EXIT_OK


def cmd_ingest(args: argparse.Namespace) -> int:
    if args.manifest is None or not Path(args.manifest).is_file():
        raise InputError(f"manifest not found: {args.manifest}")
    corpus, failures = load_corpus(args.manifest, jobs=args.jobs)
    documents = []
    for doc in corpus:
        documents.append(
            {
                "doc_id": doc.doc_id,
                "standard_ref": doc.standard_ref,
                "title": doc.title,
                "bytes": len(doc.data),
                "clauses": [
                    {"number": c.number, "heading": c.heading, "kind": c.kind.value, "start": c.span[0], "end": c.span[1]}
                    for c in doc.iter_clauses()
                ],
                "terms": [
                    {"term": e.term, "clause": e.clause_number, "definition": e.definition,
                     "adapted_from": e.adapted_from, "start": e.span[0], "end": e.span[1]}
                    for e in extract_term_entries(doc)
                ],
            }
        )
    write_files({"corpus.json": dump_json({"corpus_id": corpus.corpus_id, "documents": documents})}, args.out)
    print(f"ingested {len(corpus)} documents into {Path(args.out) / 'corpus.json'}")
    for name, message in sorted(failures.items()):
        _diag(f"{name}: {message}")
    return EXIT_INPUT if failures else EXIT_OK


def cmd_annotate(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)
    outputs = _run(config)
    files = {k: v for k, v in bundle_files(outputs).items() if k.startswith("annotations/")}
    write_files(files, config.out_dir, config.timestamp)
    total = sum(len(item.annotations) for item in outputs.annotated)
    print(f"annotated {len(outputs.annotated.documents)} documents, {total} annotations")
    return _finish(outputs, config)


def cmd_check(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)
    outputs = _run(config)
    files = {
        "findings.json": dump_json([f.to_json() for f in outputs.findings]),
        "findings.csv": findings_csv(outputs.findings),
    }
    write_files(files, config.out_dir, config.timestamp)
    for finding in outputs.findings:
        loc = finding.locations[0]
        print(f"{finding.severity.value:7} {finding.kind.value:21} {loc.doc_id} {loc.clause_number}: {finding.detail}")
    print(f"{len(outputs.findings)} findings")
    return _finish(outputs, config)


def cmd_populate(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)
    outputs = _run(config)
    write_files({"candidates.json": dump_json([c.to_json() for c in outputs.candidates])}, config.out_dir, config.timestamp)
    print(f"{len(outputs.candidates)} candidate classes")
    return _finish(outputs, config)


def cmd_report(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)
    outputs = _run(config)
    manifest = write_files(bundle_files(outputs), config.out_dir, config.timestamp)
    print(f"wrote {len(manifest['files']) + 1} files to {config.out_dir}; {len(outputs.findings)} findings")
    return _finish(outputs, config)


def cmd_stats(args: argparse.Namespace) -> int:
    if not Path(args.ontology_path).is_file():
        raise InputError(f"ontology not found: {args.ontology_path}")
    stats = ontology_stats(load_ontology(args.ontology_path))
    print(
        f"classes={stats['classes']} object_properties={stats['object_properties']} "
        f"datatype_properties={stats['datatype_properties']}"
    )
    print(f"subclass_edges={stats['subclass_edges']} roots={stats['roots']}")
    return EXIT_OK


def _pipeline_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--manifest", help="corpus manifest (JSON)")
    parser.add_argument("--ontology", action="append", default=[], help="ontology file, repeatable")
    parser.add_argument("--rules", action="append", default=[], help="rule file, repeatable")
    parser.add_argument("--registry", help="registry of known standards (JSON)")
    parser.add_argument("--out", default="out", help="output directory (default: out)")
    parser.add_argument("--threshold", type=float, default=0.95, help="duplicate-definition similarity threshold")
    parser.add_argument("--case-min-count", type=int, default=1, help="lowercase occurrences needed for a case finding")
    parser.add_argument("--strict", action="store_true", help="exit 1 when any Error finding is reported")
    parser.add_argument("--jobs", type=int, default=1, help="documents processed concurrently")
    parser.add_argument("--timestamp", action="store_true", help="record generation time in manifest.json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="normcheck", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    ingest = sub.add_parser("ingest", help="parse the corpus and cache its clause structure")
    ingest.add_argument("--manifest", help="corpus manifest (JSON)")
    ingest.add_argument("--out", default="out")
    ingest.add_argument("--jobs", type=int, default=1)
    ingest.set_defaults(func=cmd_ingest)

    for name, func, text in (
        ("annotate", cmd_annotate, "write stand-off annotations per document"),
        ("check", cmd_check, "run the consistency checks"),
        ("populate", cmd_populate, "propose candidate ontology classes"),
        ("report", cmd_report, "run everything and write the full bundle"),
    ):
        cmd = sub.add_parser(name, help=text)
        _pipeline_args(cmd)
        cmd.set_defaults(func=func)

    stats = sub.add_parser("stats", help="print ontology size")
    stats.add_argument("ontology_path")
    stats.set_defaults(func=cmd_stats)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        for line in str(exc).splitlines():
            _diag(line)
        return EXIT_INPUT
    except (NormcheckError, ValueError, OSError) as exc:
        _diag(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
