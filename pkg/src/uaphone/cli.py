"""Command-line front end.

Every command runs the same fixed pipeline: clean, fold, key, index.
Data goes to stdout (or ``--output``), diagnostics and the reject summary to
stderr.  Exit status: 0 ok, 1 input problems (rejects, unreadable files),
2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .bench import BenchError, run_bench
from .index import (
    FULL,
    STRUCTURED,
    BuildError,
    DegenerateInput,
    PhoneticIndex,
    Reject,
    build,
    dedup,
    frequency_report,
    lookup,
    optimization_report,
)
from .medicine import MEDICINE_RULES, medicine_keys
from .rewrite import lint
from .surname import SURNAME_RULES, surname_key_trace
from .textnorm import MEDICINE, MODES, SURNAME, CleanError, clean

EXIT_OK, EXIT_INPUT, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_lines(path: str | None) -> list[str]:
    if path in (None, "-"):
        return [line.rstrip("\r\n") for line in sys.stdin]
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    lines = []
    for lineno, line in enumerate(raw.splitlines(), 1):
        try:
            lines.append(line.decode("utf-8"))
        except UnicodeDecodeError:
            raise BuildError(lineno, f"{path}: invalid UTF-8") from None
    return lines


def _read_index(path: str | None) -> PhoneticIndex:
    return PhoneticIndex.loads("\n".join(_read_lines(path)))


def _emit(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")


def _structured(args) -> bool:
    return args.format == "structured"


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2)


def _report_rejects(args, rejects) -> int:
    if not rejects:
        return EXIT_OK
    lines = "".join(f"{r.line}\t{r.reason}\n" for r in rejects)
    if args.rejects:
        Path(args.rejects).write_text(lines, encoding="utf-8")
    else:
        sys.stderr.write(lines)
    print(f"{len(rejects)} record(s) rejected", file=sys.stderr)
    return EXIT_INPUT


def cmd_key(args) -> int:
    lines = [args.name] if args.name is not None else _read_lines(args.input)
    out: list[str] = []
    records: list[dict] = []
    rejects: list[Reject] = []
    for lineno, line in enumerate(lines, 1):
        if args.ruleset == MEDICINE:
            keys = medicine_keys(line)
            out.append(" ".join(keys))
            records.append({"input": line, "keys": keys})
            continue
        try:
            token = clean(line, SURNAME)
        except CleanError as exc:
            rejects.append(Reject(lineno, str(exc)))
            out.append("")
            records.append({"input": line, "key": None, "error": str(exc)})
            continue
        key, trace = surname_key_trace(token)
        out.append(key)
        if args.trace:
            out.extend(f"{t.step}\t{t.before}\t{t.after}" for t in trace)
        rec = {"input": line, "clean": token.text, "key": key}
        if args.trace:
            rec["trace"] = [t._asdict() for t in trace]
        records.append(rec)
    if _structured(args):
        _emit(args, "\n".join(json.dumps(r, ensure_ascii=False) for r in records))
    else:
        _emit(args, "\n".join(out))
    return _report_rejects(args, rejects)


def cmd_index_build(args) -> int:
    index, rejects = build(_read_lines(args.input), args.ruleset)
    _emit(args, index.dumps())
    print(
        f"{index.records} records, {len(index)} keys, {len(rejects)} rejected",
        file=sys.stderr,
    )
    return _report_rejects(args, rejects)


def cmd_index_stats(args) -> int:
    index = _read_index(args.input)
    reports = [optimization_report(index, STRUCTURED), optimization_report(index, FULL)]
    if _structured(args):
        _emit(args, _dump({"ruleset": index.ruleset, "reports": [r.as_dict() for r in reports]}))
    else:
        _emit(args, f"ruleset: {index.ruleset}\n" + "\n".join(r.format() for r in reports))
    if args.figures:
        from .plotting import plot_gain

        plot_gain(reports, Path(args.figures) / "gain.png")
    return EXIT_OK


def cmd_query(args) -> int:
    index = _read_index(args.input)
    names = [args.name] if args.name is not None else sys.stdin.read().splitlines()
    results = []
    for name in names:
        try:
            hits = lookup(index, name, rank=args.rank)
        except CleanError as exc:
            raise InputError(f"query {name!r}: {exc}") from None
        results.append((name, hits))
    if _structured(args):
        _emit(args, _dump([{"query": n, "hits": [h._asdict() for h in hits]} for n, hits in results]))
    else:
        lines = []
        for name, hits in results:
            if len(results) > 1:
                lines.append(f"# {name}")
            for h in hits:
                cols = [h.form, str(h.count)] + ([] if h.distance is None else [str(h.distance)])
                lines.append("\t".join(cols))
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_dedup(args) -> int:
    groups = dedup(_read_index(args.input))
    if args.top:
        groups = groups[: args.top]
    if _structured(args):
        _emit(
            args,
            _dump(
                [
                    {"key": g.key, "total": g.total, "members": [{"form": f, "count": c} for f, c in g.members]}
                    for g in groups
                ]
            ),
        )
    else:
        _emit(
            args,
            "\n".join(
                f"{g.key}\t{g.total}\t" + " ".join(f"{f}:{c}" for f, c in g.members) for g in groups
            ),
        )
    return EXIT_OK


def cmd_stats_freq(args) -> int:
    index = _read_index(args.input)
    if index.ruleset != SURNAME:
        raise InputError("stats-freq needs a surname index")
    report = frequency_report(index, args.top or 10)
    _emit(args, _dump(report.as_dict()) if _structured(args) else report.format())
    if args.figures:
        from .plotting import plot_endings, plot_power_law

        out = Path(args.figures)
        plot_power_law(report, out / "frequency.png")
        plot_endings(report, out / "endings.png")
    return EXIT_OK


def cmd_bench(args) -> int:
    texts = _read_lines(args.input)
    try:
        report = run_bench(texts, args.ruleset, scan_queries=args.scan_queries)
    except BenchError as exc:
        raise InputError(str(exc)) from None
    _emit(args, _dump(report.as_dict()) if _structured(args) else report.format())
    if args.figures:
        from .plotting import plot_rule_times

        plot_rule_times(report.rule_times, Path(args.figures) / "rule_times.png")
    return EXIT_OK


def cmd_rules(args) -> int:
    ruleset = SURNAME_RULES if args.ruleset == SURNAME else MEDICINE_RULES
    if args.lint:
        warnings = lint(ruleset)
        _emit(args, "\n".join(warnings) if warnings else "no warnings")
        return EXIT_INPUT if warnings else EXIT_OK
    _emit(args, ruleset.to_table())
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.ruleset == MEDICINE:
        pairs = corpus.medicine_pairs(args.size)
        lines = [t for pair in pairs for t in pair]
    else:
        lines = corpus.surname_corpus(args.size, seed=args.seed)
    _emit(args, "\n".join(lines))
    return EXIT_OK


HANDLERS = {
    "key": cmd_key,
    "index-build": cmd_index_build,
    "index-stats": cmd_index_stats,
    "query": cmd_query,
    "dedup": cmd_dedup,
    "stats-freq": cmd_stats_freq,
    "bench": cmd_bench,
    "rules": cmd_rules,
    "generate": cmd_generate,
}


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="uaphone", description="Phonetic keys and indexes for Ukrainian surnames and medicine titles.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help, ruleset_required=False, index_input=False):
        p = sub.add_parser(name, help=help)
        p.add_argument(
            "--ruleset",
            choices=MODES,
            required=ruleset_required,
            default=None if ruleset_required else SURNAME,
        )
        p.add_argument(
            "--input",
            help="index file" if index_input else "one record per line (default: stdin)",
        )
        p.add_argument("--output", help="default: stdout")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--rejects", help="write rejected lines here instead of stderr")
        return p

    p = add("key", "print the phonetic key of each input line", ruleset_required=True)
    p.add_argument("--trace", action="store_true", help="print step<TAB>before<TAB>after after each key")
    p.add_argument("--name", help="key a single value instead of reading input")

    add("index-build", "build an index file from records", ruleset_required=True)
    p = add("index-stats", "optimization coefficients of an index", index_input=True)
    p.add_argument("--figures", help="directory for PNG figures")

    p = add("query", "look up names in an index", index_input=True)
    p.add_argument("--name", help="query (default: one per stdin line)")
    p.add_argument("--rank", choices=("none", "edit-distance"), default="none")

    p = add("dedup", "groups of spellings sharing a key", index_input=True)
    p.add_argument("--top", type=int, default=0, help="only the N largest groups")

    p = add("stats-freq", "surname frequency report", index_input=True)
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--figures", help="directory for PNG figures")

    p = add("bench", "time the rules and bucket lookup against a linear scan")
    p.add_argument("--scan-queries", type=int, default=20)
    p.add_argument("--figures", help="directory for PNG figures")

    p = add("rules", "print a rule table")
    p.add_argument("--lint", action="store_true")

    p = add("generate", "write a synthetic corpus")
    p.add_argument("--size", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if getattr(args, "top", 0) and args.top < 0:
        parser.error("argument --top: must be non-negative")
    try:
        return HANDLERS[args.command](args)
    except (InputError, BuildError, DegenerateInput) as exc:
        print(f"uaphone {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
