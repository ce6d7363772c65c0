"""Command-line front end for the lexicon derivation pipeline.

Subcommands mirror the batch stages: align builds three-way alignment
dumps, apply produces the transformed lexicon, stats and clusters run
the corpus analyses, serve hosts the HTTP API for the workbench.
All state lives in plain files so every stage is diffable and rerunnable.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass

from .align import align_lexicon, default_equivalences, write_alignment_dump
from .analysis import coverage_stats, detect_ambiguities
from .deva import default_akshara_map, translit_lexicon
from .errors import LexiforgeError
from .lexicon import read_cmu_dict, read_translit_tsv, write_lexicon
from .phoneset import default_phoneset, load_inventories
from .rules import format_match, parse_rules, default_rules

log = logging.getLogger("lexiforge")


@dataclass
class RunConfig:
    """Resolved paths and flags for one subcommand invocation."""

    dict_path: str | None = None
    translit_path: str | None = None
    rules_path: str | None = None
    phoneset_path: str | None = None
    out_path: str | None = None
    strict: bool = True
    all_variants: bool = False
    jobs: int = 1
    port: int = 8737

    def require(self, *names):
        for name in names:
            path = getattr(self, f"{name}_path")
            if path is None:
                raise LexiforgeError(f"--{name} is required for this command")
            if not os.path.exists(path):
                raise LexiforgeError(f"--{name}: no such file: {path}")


def _config(args):
    return RunConfig(
        dict_path=getattr(args, "dict", None),
        translit_path=getattr(args, "translit", None),
        rules_path=getattr(args, "rules", None),
        phoneset_path=getattr(args, "phoneset", None),
        out_path=getattr(args, "out", None),
        strict=not getattr(args, "lenient", False),
        all_variants=getattr(args, "all_variants", False),
        jobs=getattr(args, "jobs", 1),
        port=getattr(args, "port", 8737),
    )


def _load_phoneset(cfg):
    if cfg.phoneset_path:
        with open(cfg.phoneset_path, encoding="utf-8") as fh:
            return load_inventories(fh.read())
    return default_phoneset()


def _load_dict(cfg, phoneset):
    with open(cfg.dict_path, encoding="utf-8") as fh:
        return read_cmu_dict(
            fh.read(), phoneset, strict=cfg.strict, path=cfg.dict_path
        )


def _load_rules(cfg, phoneset):
    if cfg.rules_path is None:
        return default_rules()
    with open(cfg.rules_path, encoding="utf-8") as fh:
        return parse_rules(fh.read(), phoneset, path=cfg.rules_path)


def _open_out(cfg):
    if cfg.out_path is None or cfg.out_path == "-":
        return sys.stdout
    return open(cfg.out_path, "w", encoding="utf-8")


def cmd_align(args):
    """Write the three-way alignment dump for words in both inputs."""
    cfg = _config(args)
    cfg.require("dict", "translit")
    phoneset = _load_phoneset(cfg)
    cmu_lex = _load_dict(cfg, phoneset)
    with open(cfg.translit_path, encoding="utf-8") as fh:
        pairs = read_translit_tsv(
            fh.read(), strict=cfg.strict, path=cfg.translit_path
        )
    amap = default_akshara_map(phoneset)
    cls_lex, notes = translit_lexicon(pairs, amap, strict=cfg.strict)
    for word, note in notes:
        log.warning("%s: %s", word, note)

    missing_dict = [w for w in cls_lex.words() if w not in cmu_lex]
    for w in missing_dict:
        log.warning("%s: transliteration has no dictionary entry, skipped", w)
    without_translit = sum(1 for w in cmu_lex.words() if w not in cls_lex)
    if without_translit:
        log.warning(
            "%d dictionary words lack a transliteration, skipped",
            without_translit,
        )

    equiv = default_equivalences(phoneset)
    aligned = align_lexicon(
        cmu_lex, cls_lex, equiv, all_variants=cfg.all_variants
    )
    out = _open_out(cfg)
    try:
        out.write(write_alignment_dump(aligned))
    finally:
        if out is not sys.stdout:
            out.close()
    print(
        f"aligned {len(aligned)} words"
        f" ({without_translit + len(missing_dict)} skipped)",
        file=sys.stderr,
    )
    return 0


def cmd_apply(args):
    """Transform the dictionary with a rule file; log matches beside it."""
    cfg = _config(args)
    cfg.require("dict")
    if cfg.rules_path is not None:
        cfg.require("rules")
    phoneset = _load_phoneset(cfg)
    lex = _load_dict(cfg, phoneset)
    rules = _load_rules(cfg, phoneset)
    from .rules import apply_rules

    out_lex, matches = apply_rules(lex, rules, phoneset, jobs=cfg.jobs)
    out = _open_out(cfg)
    try:
        out.write(write_lexicon(out_lex))
    finally:
        if out is not sys.stdout:
            out.close()
    if cfg.out_path and cfg.out_path != "-":
        match_path = cfg.out_path + ".matches"
        with open(match_path, "w", encoding="utf-8") as fh:
            for m in matches:
                fh.write(format_match(m) + "\n")
    changed = len({m.word for m in matches})
    print(
        f"applied {len(rules)} rules to {len(lex.words())} words:"
        f" {changed} changed, {len(matches)} matches",
        file=sys.stderr,
    )
    return 0


def cmd_stats(args):
    """Coverage statistics as canonical TSV (or an aligned table)."""
    cfg = _config(args)
    cfg.require("dict")
    if cfg.rules_path is not None:
        cfg.require("rules")
    phoneset = _load_phoneset(cfg)
    lex = _load_dict(cfg, phoneset)
    rules = _load_rules(cfg, phoneset)
    report = coverage_stats(lex, rules, phoneset)
    text = report.to_table() if args.table else report.to_tsv()
    out = _open_out(cfg)
    try:
        out.write(text)
    finally:
        if out is not sys.stdout:
            out.close()
    print(
        f"{report.total_words} of {report.lexicon_words} words changed"
        f" ({report.total_percent:.3f}%)",
        file=sys.stderr,
    )
    return 0


def cmd_clusters(args):
    """Ambiguity clusters from an alignment dump."""
    from .align import read_alignment_dump

    cfg = _config(args)
    phoneset = _load_phoneset(cfg)
    equiv = default_equivalences(phoneset)
    with open(args.alignments, encoding="utf-8") as fh:
        aligned = read_alignment_dump(fh.read(), equiv)
    clusters = detect_ambiguities(aligned)
    from .analysis import format_clusters

    out = _open_out(cfg)
    try:
        out.write(format_clusters(clusters))
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"{len(clusters)} ambiguous phones", file=sys.stderr)
    return 0


def cmd_serve(args):
    """Host the curation API (and the workbench UI when built)."""
    cfg = _config(args)
    cfg.require("dict")
    if cfg.rules_path is not None:
        cfg.require("rules")
    if cfg.translit_path is not None:
        cfg.require("translit")
    from .service import SessionState, create_app

    state = SessionState.from_paths(
        dict_path=cfg.dict_path,
        rules_path=cfg.rules_path,
        translit_path=cfg.translit_path,
        phoneset_path=cfg.phoneset_path,
        strict=cfg.strict,
        ui_dir=args.ui_dir,
    )
    app = create_app(state)
    import uvicorn

    uvicorn.run(app, host=args.host, port=cfg.port, log_level="info")
    return 0


def _add_common(p, *, dict_required=False):
    p.add_argument("--dict", required=dict_required, help="CMU dictionary file")
    p.add_argument("--rules", help="rule file (defaults to the shipped set)")
    p.add_argument("--phoneset", help="phoneset config (defaults to shipped)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument(
        "--lenient",
        action="store_true",
        help="skip malformed input lines instead of failing",
    )


def build_parser():
    ap = argparse.ArgumentParser(
        prog="lexiforge",
        description="Derive a non-native English pronunciation lexicon.",
    )
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("align", help="three-way alignment dump")
    _add_common(p, dict_required=True)
    p.add_argument("--translit", required=True, help="word<TAB>devanagari TSV")
    p.add_argument(
        "--all-variants",
        action="store_true",
        help="align every pronunciation variant, not just the first",
    )
    p.set_defaults(func=cmd_align)

    p = sub.add_parser("apply", help="transform the dictionary")
    _add_common(p, dict_required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("stats", help="rule coverage statistics")
    _add_common(p, dict_required=True)
    p.add_argument(
        "--table", action="store_true", help="aligned table instead of TSV"
    )
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("clusters", help="ambiguity clusters from a dump")
    p.add_argument("alignments", help="alignment dump file")
    p.add_argument("--phoneset", help="phoneset config (defaults to shipped)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_clusters)

    p = sub.add_parser("serve", help="run the curation HTTP API")
    _add_common(p, dict_required=True)
    p.add_argument("--translit", help="word<TAB>devanagari TSV for clusters")
    p.add_argument("--port", type=int, default=8737)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui-dir", help="directory of built workbench assets")
    p.set_defaults(func=cmd_serve)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except LexiforgeError as exc:
        log.error("%s", exc)
        return 1
    except OSError as exc:
        log.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
