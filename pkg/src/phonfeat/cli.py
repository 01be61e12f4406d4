"""Command-line surface: validate, features, encode, embed, per, project, table.

Exit codes: 0 success, 1 usage error, 2 data or validation error, 3 input
parse error. All output is deterministic given identical inputs, flags and
data files. The PHONFEAT_DATA environment variable overrides --data-dir.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .accent import project_utterance, substitution_table, substitution_table_tsv
from .encoding import embed_utterance, encode_utterance, serialize
from .errors import DATA_ERRORS, INPUT_ERRORS
from .features import Feature
from .inventory import LANGS, default_inventory, validate_inventory
from .metrics import per_from_files
from .parsing import tokenize_tagged_line

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INPUT = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this CLI reserves 2 for data errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="phonfeat", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--data-dir",
        default=None,
        help="directory with inventory/mapping tables (default: packaged data; "
        "PHONFEAT_DATA overrides)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the shipped inventories")
    p.add_argument("--lang", choices=LANGS, default=None)

    p = sub.add_parser("features", help="print a phoneme's feature set")
    p.add_argument("lang", choices=LANGS)
    p.add_argument("sampa")

    p = sub.add_parser("encode", help="encode tagged transcription lines")
    p.add_argument("input", nargs="?", default="-", help="file of tagged lines, or - for stdin")
    p.add_argument("--mode", choices=("phonemic", "surface"), default="phonemic")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("embed", help="encode and add the 256-dim toy embedding")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--mode", choices=("phonemic", "surface"), default="phonemic")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("per", help="phone error rate between two line-aligned files")
    p.add_argument("ref")
    p.add_argument("hyp")

    p = sub.add_parser("project", help="project utterances onto another language")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--from", dest="source_lang", choices=LANGS, required=True)
    p.add_argument("--to", dest="target_lang", choices=LANGS, required=True)
    p.add_argument("--tone-policy", choices=("drop", "preserve"), default="preserve")
    p.add_argument("--weights", nargs=2, type=float, default=(1.0, 2.0),
                   metavar=("W_MATCH", "W_MISMATCH"))

    p = sub.add_parser("table", help="full substitution table between two languages")
    p.add_argument("--from", dest="source_lang", choices=LANGS, required=True)
    p.add_argument("--to", dest="target_lang", choices=LANGS, required=True)
    p.add_argument("--weights", nargs=2, type=float, default=(1.0, 2.0),
                   metavar=("W_MATCH", "W_MISMATCH"))

    return parser


def _read_lines(source: str) -> list[str]:
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source, encoding="utf-8") as handle:
            text = handle.read()
    return [line for line in text.splitlines() if line.strip()]


def _cmd_validate(args, data_dir) -> int:
    langs = (args.lang,) if args.lang else LANGS
    any_violations = False
    for lang in langs:
        inventory = default_inventory(lang, data_dir)
        violations = validate_inventory(inventory)
        print(f"{lang}\t{len(inventory.phonemic_entries)} phonemes\t{len(violations)} violations")
        for violation in violations:
            any_violations = True
            print(str(violation))
    return EXIT_DATA if any_violations else EXIT_OK


def _cmd_features(args, data_dir) -> int:
    entry = default_inventory(args.lang, data_dir).lookup(args.sampa)
    parts = []
    for feature in Feature:
        if feature in entry.features.specified:
            name = feature.name
            if feature in entry.features.optional:
                name = f"({name})"
            parts.append(name)
    print(" ".join(parts))
    return EXIT_OK


def _cmd_encode(args, data_dir) -> int:
    blocks = []
    for line in _read_lines(args.input):
        encoded = encode_utterance(tokenize_tagged_line(line), mode=args.mode, data_dir=data_dir)
        blocks.append(serialize(encoded, args.format))
    if args.format == "json":
        sys.stdout.buffer.write(b"[" + b",".join(b.rstrip(b"\n") for b in blocks) + b"]\n")
    else:
        sys.stdout.buffer.write(b"\n".join(blocks))
    return EXIT_OK


def _cmd_embed(args, data_dir) -> int:
    out = sys.stdout
    first = True
    for line in _read_lines(args.input):
        encoded = encode_utterance(tokenize_tagged_line(line), mode=args.mode, data_dir=data_dir)
        embedding = embed_utterance(encoded, args.seed)
        if not first:
            out.write("\n")
        first = False
        out.write("idx\tsymbol\t" + "\t".join(f"e{i}" for i in range(256)) + "\n")
        for idx, frame in enumerate(encoded.frames):
            values = "\t".join(repr(float(v)) for v in embedding.matrix[idx])
            out.write(f"{idx}\t{frame.symbol}\t{values}\n")
    return EXIT_OK


def _fmt_per(value: Fraction) -> str:
    return f"{float(value):.6f}"


def _cmd_per(args, data_dir) -> int:
    results, summary = per_from_files(args.ref, args.hyp)
    print("line\tentries\tdeletions\tinsertions\tsubstitutions\tper")
    for lineno, r in enumerate(results, start=1):
        print(f"{lineno}\t{r.entries}\t{r.deletions}\t{r.insertions}\t{r.substitutions}"
              f"\t{_fmt_per(r.per)}")
    print(f"corpus\t{summary.total_entries}\t\t\t\t{_fmt_per(summary.per)}")
    print(f"mean\t\t\t\t\t{_fmt_per(summary.mean_per)}")
    return EXIT_OK


def _cmd_project(args, data_dir) -> int:
    weights = tuple(args.weights)
    print("line\tpos\tsrc_sampa\ttone_id\trank\ttgt_sampa\tmatches\tmismatches"
          "\tno_mismatches\tscore")
    for lineno, line in enumerate(_read_lines(args.input), start=1):
        report = project_utterance(
            tokenize_tagged_line(line),
            args.source_lang,
            args.target_lang,
            tone_policy=args.tone_policy,
            weights=weights,
            data_dir=data_dir,
        )
        for pos, seg in enumerate(report.segments):
            ranked = [(seg.target_sampa, seg.outcome)] + list(seg.runners_up)
            for rank, (sampa, outcome) in enumerate(ranked, start=1):
                print(f"{lineno}\t{pos}\t{seg.source_sampa}\t{seg.tone_id}\t{rank}\t{sampa}"
                      f"\t{outcome.matches}\t{outcome.mismatches}\t{outcome.no_mismatches}"
                      f"\t{outcome.score:g}")
    return EXIT_OK


def _cmd_table(args, data_dir) -> int:
    source = default_inventory(args.source_lang, data_dir)
    target = default_inventory(args.target_lang, data_dir)
    rows = substitution_table(source, target, tuple(args.weights))
    sys.stdout.write(substitution_table_tsv(rows))
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "features": _cmd_features,
    "encode": _cmd_encode,
    "embed": _cmd_embed,
    "per": _cmd_per,
    "project": _cmd_project,
    "table": _cmd_table,
}


def run(argv: list[str] | None = None) -> int:
    """Parse arguments and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    data_dir = os.environ.get("PHONFEAT_DATA") or args.data_dir
    try:
        return _COMMANDS[args.command](args, data_dir)
    except INPUT_ERRORS as exc:
        print(f"phonfeat: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DATA_ERRORS as exc:
        print(f"phonfeat: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"phonfeat: {exc}", file=sys.stderr)
        return EXIT_DATA


def console_main() -> None:
    sys.exit(run())


main = run
