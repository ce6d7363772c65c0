"""Local HTTP API for rule curation.

Serves the analysis loop: browse ambiguity clusters, inspect a word's
alignment, preview a draft rule's effect, accept it into the rule file.
Mutations are optimistic-concurrency guarded by a revision counter and
persist atomically (temp file + rename).  Binds loopback by default.
"""

from __future__ import annotations

import os
import tempfile
import threading

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel

from .align import align_lexicon, align_three_way, default_equivalences
from .analysis import coverage_stats, detect_ambiguities
from .deva import default_akshara_map, translit_lexicon
from .errors import LexiforgeError, ParseError
from .lexicon import Lexicon, read_cmu_dict, read_translit_tsv
from .phoneset import default_phoneset, load_inventories
from .rules import (
    default_rules,
    make_rule,
    parse_rules,
    serialize_rules,
    what_if,
)
from .syllables import syllabify, to_brackets


class RuleBody(BaseModel):
    """Rule fields as they appear in the rule file, snake_case."""

    id: str
    kind: str
    letters: str
    source: str
    target: str
    position: str | None = None
    side: str | None = None


class PreviewRequest(BaseModel):
    rule: RuleBody
    limit: int = 2000  # words of the lexicon slice; 0 means all


class AcceptRequest(BaseModel):
    rule: RuleBody
    revision: int


def _rule_json(rule):
    return {
        "id": rule.id,
        "kind": rule.kind,
        "letters": "".join(rule.letter_pattern),
        "source": " ".join(rule.source_phones),
        "target": " ".join(rule.target_phones),
        "position": rule.position,
        "side": rule.affix_side,
    }


def _build_rule(body, phoneset):
    try:
        return make_rule(
            body.id,
            body.kind,
            body.letters,
            body.source.split(),
            body.target.split(),
            position=body.position,
            affix_side=body.side,
            phoneset=phoneset,
        )
    except LexiforgeError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


class SessionState:
    """Everything one serve invocation works on.

    Readers take plain attribute snapshots; the lock serializes rule
    mutations and the revision bump that goes with them.
    """

    def __init__(
        self,
        lexicon,
        ruleset,
        phoneset,
        rules_path=None,
        alignments=(),
        ui_dir=None,
    ):
        self.lexicon = lexicon
        self.ruleset = ruleset
        self.phoneset = phoneset
        self.rules_path = rules_path
        self.alignments = tuple(alignments)
        self.clusters = detect_ambiguities(self.alignments)
        self.ui_dir = ui_dir
        self.revision = 0
        self.lock = threading.Lock()
        self._stats_cache = None  # (revision, CoverageReport)
        self._slice_cache = {}

    @classmethod
    def from_paths(
        cls,
        dict_path,
        rules_path=None,
        translit_path=None,
        phoneset_path=None,
        strict=True,
        ui_dir=None,
    ):
        if phoneset_path:
            with open(phoneset_path, encoding="utf-8") as fh:
                phoneset = load_inventories(fh.read())
        else:
            phoneset = default_phoneset()
        with open(dict_path, encoding="utf-8") as fh:
            lexicon = read_cmu_dict(fh.read(), phoneset, strict=strict, path=dict_path)
        if rules_path:
            with open(rules_path, encoding="utf-8") as fh:
                ruleset = parse_rules(fh.read(), phoneset, path=rules_path)
        else:
            ruleset = default_rules()
        alignments = ()
        if translit_path:
            with open(translit_path, encoding="utf-8") as fh:
                pairs = read_translit_tsv(fh.read(), strict=strict, path=translit_path)
            amap = default_akshara_map(phoneset)
            cls_lex, _ = translit_lexicon(pairs, amap, strict=strict)
            equiv = default_equivalences(phoneset)
            alignments = align_lexicon(lexicon, cls_lex, equiv)
        return cls(
            lexicon,
            ruleset,
            phoneset,
            rules_path=rules_path,
            alignments=alignments,
            ui_dir=ui_dir,
        )

    def lexicon_slice(self, limit):
        if limit <= 0 or limit >= len(self.lexicon.words()):
            return self.lexicon
        cached = self._slice_cache.get(limit)
        if cached is not None:
            return cached
        piece = Lexicon(self.lexicon.inventory)
        for word in sorted(self.lexicon.words())[:limit]:
            for e in self.lexicon.entries(word):
                piece.add(e.word, e.phones, e.variant)
        self._slice_cache[limit] = piece
        return piece

    def stats(self):
        with self.lock:
            cached = self._stats_cache
            ruleset, revision = self.ruleset, self.revision
        if cached is not None and cached[0] == revision:
            return cached[1]
        report = coverage_stats(self.lexicon, ruleset, self.phoneset)
        with self.lock:
            if self.revision == revision:
                self._stats_cache = (revision, report)
        return report

    def persist(self, ruleset):
        """Atomically rewrite the rules file, if one backs this session."""
        if self.rules_path is None:
            return
        directory = os.path.dirname(os.path.abspath(self.rules_path))
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".rules.tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(serialize_rules(ruleset))
            os.replace(tmp, self.rules_path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def mutate(self, expected_revision, change):
        """Run change(ruleset) -> new ruleset under the writer lock."""
        with self.lock:
            if expected_revision != self.revision:
                raise HTTPException(
                    status_code=409,
                    detail=f"revision {expected_revision} is stale,"
                    f" current is {self.revision}",
                )
            new_set = change(self.ruleset)
            self.persist(new_set)
            self.ruleset = new_set
            self.revision += 1
            return self.revision


def create_app(state):
    app = FastAPI(title="lexiforge", docs_url=None, redoc_url=None)

    @app.get("/api/health")
    def health():
        return {
            "status": "ok",
            "revision": state.revision,
            "words": len(state.lexicon.words()),
            "rules": len(state.ruleset),
            "clusters": len(state.clusters),
        }

    @app.get("/api/inventories")
    def inventories():
        ps = state.phoneset
        return {
            "cmu": list(ps.inventory("cmu").members),
            "cls": list(ps.inventory("cls").members),
            "common": list(ps.inventory("common").members),
        }

    @app.get("/api/rules")
    def rules():
        return {
            "revision": state.revision,
            "rules": [_rule_json(r) for r in state.ruleset],
        }

    @app.get("/api/clusters")
    def clusters(
        phone: str | None = None,
        letter: str | None = None,
        position: str | None = None,
        page: int = Query(1, ge=1),
        page_size: int = Query(20, ge=1, le=200),
    ):
        rows = []
        for c in state.clusters:
            if phone and c.source_cmu != phone:
                continue
            targets = {}
            for cls_label, occs in c.targets.items():
                kept = [
                    o
                    for o in occs
                    if (letter is None or o.letter == letter)
                    and (position is None or o.position == position)
                ]
                if kept:
                    targets[cls_label] = kept
            if len(targets) < 2:
                continue
            rows.append(
                {
                    "source_cmu": c.source_cmu,
                    "total": sum(len(v) for v in targets.values()),
                    "targets": [
                        {
                            "cls": cls_label,
                            "count": len(occs),
                            "occurrences": [
                                {
                                    "word": o.word,
                                    "letter": o.letter,
                                    "position": o.position,
                                    "left": o.left,
                                    "right": o.right,
                                }
                                for o in occs
                            ],
                        }
                        for cls_label, occs in targets.items()
                    ],
                }
            )
        start = (page - 1) * page_size
        return {
            "total": len(rows),
            "page": page,
            "page_size": page_size,
            "clusters": rows[start : start + page_size],
        }

    @app.get("/api/words/{word}")
    def word_detail(word: str):
        word = word.upper()
        entry = state.lexicon.lookup(word)
        if entry is None:
            raise HTTPException(status_code=404, detail=f"unknown word {word!r}")
        ruleset = state.ruleset
        piece = Lexicon(state.lexicon.inventory)
        piece.add(entry.word, entry.phones, entry.variant)
        from .rules import apply_rules

        out, matches = apply_rules(piece, ruleset, state.phoneset)
        derived = next(
            (a for a in state.alignments if a.word == word), None
        )
        if derived is None:
            equiv = default_equivalences(state.phoneset)
            common = [state.phoneset.common_label(p) for p in entry.phones]
            derived = align_three_way(word.lower(), entry.phones, common, equiv)
        syll = syllabify(entry.phones)
        return {
            "word": word,
            "phones": list(entry.phones),
            "syllables": to_brackets(syll),
            "pronunciation": list(out.lookup(word).phones),
            "columns": [
                {
                    "letter": c.letter.text if c.letter else None,
                    "cmu": c.cmu,
                    "cls": c.cls,
                }
                for c in derived.columns
            ],
            "matches": [
                {
                    "rule_id": m.rule_id,
                    "start": m.start,
                    "end": m.end,
                    "before": list(m.before),
                    "after": list(m.after),
                }
                for m in matches
            ],
            "revision": state.revision,
        }

    @app.post("/api/rules/preview")
    def preview(req: PreviewRequest):
        draft = _build_rule(req.rule, state.phoneset)
        baseline = state.ruleset
        piece = state.lexicon_slice(req.limit)
        try:
            report = what_if(piece, draft, baseline, state.phoneset)
        except ParseError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {
            "rule": _rule_json(draft),
            "sample_words": len(piece.words()),
            "words_changed": report.words_changed,
            "entries_changed": report.entries_changed,
            "changed": [
                {
                    "word": word,
                    "variant": variant,
                    "before": list(before),
                    "after": list(after),
                }
                for word, variant, before, after in report.changed
            ],
            "revision": state.revision,
        }

    @app.post("/api/rules", status_code=201)
    def accept(req: AcceptRequest):
        draft = _build_rule(req.rule, state.phoneset)

        def change(ruleset):
            if ruleset.get(draft.id) is not None:
                raise HTTPException(
                    status_code=400, detail=f"rule id {draft.id!r} already in use"
                )
            return ruleset.with_rule(draft)

        revision = state.mutate(req.revision, change)
        return {"revision": revision, "rule": _rule_json(draft)}

    @app.delete("/api/rules/{rule_id}")
    def remove(rule_id: str, revision: int):
        def change(ruleset):
            if ruleset.get(rule_id) is None:
                raise HTTPException(
                    status_code=404, detail=f"unknown rule {rule_id!r}"
                )
            return ruleset.without(rule_id)

        new_revision = state.mutate(revision, change)
        return {"revision": new_revision}

    @app.get("/api/stats")
    def stats(format: str = "json"):
        report = state.stats()
        if format == "tsv":
            return PlainTextResponse(report.to_tsv(), media_type="text/plain")
        return {
            "lexicon_words": report.lexicon_words,
            "rows": [
                {
                    "rule_id": r.rule_id,
                    "kind": r.kind,
                    "family": r.family,
                    "words_changed": r.words_changed,
                    "percent": r.percent,
                }
                for r in report.rows
            ],
            "families": [
                {"family": name, "words_changed": words, "percent": pct}
                for name, words, pct in report.families
            ],
            "total_words": report.total_words,
            "total_percent": report.total_percent,
            "revision": state.revision,
        }

    if state.ui_dir and os.path.isdir(state.ui_dir):
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=state.ui_dir, html=True), name="ui")

    return app
