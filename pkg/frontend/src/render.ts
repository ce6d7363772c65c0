// DOM rendering. One render pass rebuilds the page from state; at
// workbench scale (a handful of panels, 100-row diff pages) that is
// simpler and safer than incremental updates. Every pronunciation and
// count shown here was produced by the service.

import type { Filters, WorkbenchState } from "./state.js";
import { clusterFacets, diffPage, diffPageCount } from "./state.js";
import type { RuleDraft } from "./types.js";

export interface Handlers {
  onFilterChange(filters: Filters): void;
  onClustersPage(page: number): void;
  onFacetClick(sourceCmu: string, letter: string, position: string | null): void;
  onWordClick(word: string): void;
  onDraftEdit(field: keyof RuleDraft, value: string): void;
  onAccept(): void;
  onDeleteRule(id: string): void;
  onPreviewPage(page: number): void;
  onDownloadDiff(): void;
  onRetry(): void;
  onReload(): void;
}

type Child = Node | string;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  children: Child[] = [],
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key === "class") node.className = value;
    else node.setAttribute(key, value);
  }
  for (const child of children) node.append(child);
  return node;
}

function button(
  label: string,
  attrs: Record<string, string>,
  onClick: () => void,
): HTMLButtonElement {
  const node = el("button", { type: "button", ...attrs }, [label]);
  node.addEventListener("click", onClick);
  return node;
}

function renderBanner(state: WorkbenchState, handlers: Handlers): Child[] {
  if (!state.banner) return [];
  return [
    el("div", { id: "banner", class: "banner" }, [
      el("span", {}, [state.banner]),
      button("retry", { id: "retry-btn" }, handlers.onRetry),
    ]),
  ];
}

function renderHeader(state: WorkbenchState): HTMLElement {
  const bits: string[] = [];
  if (state.health) {
    bits.push(
      `${state.health.words} words`,
      `${state.rules.length} rules`,
      `${state.clustersTotal} clusters`,
      `revision ${state.revision}`,
    );
  }
  return el("header", {}, [
    el("h1", {}, ["lexiforge workbench"]),
    el("span", { class: "counts" }, [bits.join(" · ")]),
  ]);
}

function filterControls(state: WorkbenchState, handlers: Handlers): HTMLElement {
  const wrap = el("div", { class: "filters" });
  const change = (patch: Partial<Filters>) =>
    handlers.onFilterChange({ ...state.filters, ...patch });

  const phone = el("input", {
    id: "filter-phone",
    placeholder: "phone (e.g. AA)",
    value: state.filters.phone,
  });
  phone.addEventListener("change", () => change({ phone: phone.value.trim() }));
  const letter = el("input", {
    id: "filter-letter",
    placeholder: "letter",
    value: state.filters.letter,
  });
  letter.addEventListener("change", () =>
    change({ letter: letter.value.trim() }),
  );
  const position = el("select", { id: "filter-position" });
  for (const value of ["", "start", "end", "internal"]) {
    position.append(el("option", { value }, [value || "any position"]));
  }
  position.value = state.filters.position;
  position.addEventListener("change", () =>
    change({ position: position.value }),
  );
  wrap.append(phone, letter, position);
  return wrap;
}

function pager(
  page: number,
  pageCount: number,
  id: string,
  go: (page: number) => void,
): HTMLElement {
  const wrap = el("div", { class: "pager", id });
  const prev = button("prev", { class: "pager-prev" }, () => go(page - 1));
  const next = button("next", { class: "pager-next" }, () => go(page + 1));
  if (page <= 1) prev.disabled = true;
  if (page >= pageCount) next.disabled = true;
  wrap.append(prev, el("span", {}, [`${page} / ${pageCount}`]), next);
  return wrap;
}

function renderClusters(state: WorkbenchState, handlers: Handlers): HTMLElement {
  const section = el("section", { id: "cluster-panel" });
  section.append(el("h2", {}, ["ambiguity clusters"]));
  section.append(filterControls(state, handlers));
  const list = el("div", { id: "cluster-list" });

  if (state.clusters.length === 0) {
    const filtered =
      state.filters.phone || state.filters.letter || state.filters.position;
    list.append(
      el("p", { class: "empty-state" }, [
        filtered
          ? "no clusters match the current filters."
          : "no ambiguity clusters in this corpus.",
      ]),
    );
  }

  for (const cluster of state.clusters) {
    const card = el("div", { class: "cluster", "data-phone": cluster.source_cmu });
    card.append(
      el("h3", {}, [`${cluster.source_cmu} — ${cluster.total} occurrences`]),
    );
    for (const target of cluster.targets) {
      const row = el("div", { class: "target-row", "data-cls": target.cls });
      row.append(
        el("span", { class: "target-label" }, [
          `→ ${target.cls} (${target.count})`,
        ]),
      );
      for (const occ of target.occurrences) {
        row.append(
          button(
            `${occ.word} ${occ.left}_${occ.right}`,
            { class: "word-chip", "data-word": occ.word },
            () => handlers.onWordClick(occ.word),
          ),
        );
      }
      card.append(row);
    }
    const facets = el("div", { class: "facet-list" });
    for (const facet of clusterFacets(cluster)) {
      facets.append(
        button(
          `${facet.letter} · ${facet.position ?? "anywhere"} (${facet.count})`,
          {
            class: "facet-chip",
            "data-phone": cluster.source_cmu,
            "data-letter": facet.letter,
            "data-position": facet.position ?? "",
          },
          () =>
            handlers.onFacetClick(
              cluster.source_cmu,
              facet.letter,
              facet.position,
            ),
        ),
      );
    }
    card.append(facets);
    list.append(card);
  }
  section.append(list);

  const pageCount = Math.max(
    1,
    Math.ceil(state.clustersTotal / state.clustersPageSize),
  );
  if (pageCount > 1) {
    section.append(
      pager(state.clustersPage, pageCount, "cluster-pager", handlers.onClustersPage),
    );
  }
  return section;
}

function renderWordDetail(state: WorkbenchState): HTMLElement {
  const section = el("section", { id: "word-panel" });
  section.append(el("h2", {}, ["word detail"]));
  const detail = state.word;
  if (!detail) {
    section.append(
      el("p", { class: "empty-state" }, ["click a word chip to inspect it."]),
    );
    return section;
  }
  section.append(el("h3", {}, [detail.word]));
  const table = el("table", { id: "alignment-table" });
  const rows: [string, (c: { letter: string | null; cmu: string | null; cls: string | null }) => string][] = [
    ["letters", (c) => c.letter ?? "·"],
    ["cmu", (c) => c.cmu ?? "·"],
    ["cls", (c) => c.cls ?? "·"],
  ];
  for (const [label, pick] of rows) {
    const tr = el("tr", {}, [el("th", {}, [label])]);
    for (const column of detail.columns) {
      tr.append(el("td", {}, [pick(column)]));
    }
    table.append(tr);
  }
  section.append(table);
  section.append(el("p", {}, [`syllables: ${detail.syllables}`]));
  section.append(
    el("p", { id: "word-pron" }, [
      `derived: ${detail.pronunciation.join(" ")}`,
    ]),
  );
  if (detail.matches.length > 0) {
    const ul = el("ul", { class: "match-list" });
    for (const match of detail.matches) {
      ul.append(
        el("li", {}, [
          `${match.rule_id}: ${match.before.join(" ")} → ${match.after.join(" ")}`,
        ]),
      );
    }
    section.append(ul);
  }
  return section;
}

function formField(
  id: string,
  label: string,
  input: HTMLElement,
): HTMLElement {
  return el("div", { class: "field" }, [
    el("label", { for: id }, [label]),
    input,
  ]);
}

function renderRuleForm(state: WorkbenchState, handlers: Handlers): HTMLElement {
  const section = el("section", { id: "rule-form" });
  section.append(el("h2", {}, ["draft rule"]));
  const draft = state.draft;

  const kind = el("select", { id: "draft-kind" });
  for (const value of ["syllable", "sequence", "affix"]) {
    kind.append(el("option", { value }, [value]));
  }
  kind.value = draft.kind;
  kind.addEventListener("change", () => handlers.onDraftEdit("kind", kind.value));

  const textInput = (id: string, field: keyof RuleDraft, value: string) => {
    const input = el("input", { id, value });
    input.addEventListener("input", () =>
      handlers.onDraftEdit(field, input.value),
    );
    return input;
  };

  section.append(
    formField("draft-id", "id", textInput("draft-id", "id", draft.id)),
    formField("draft-kind", "kind", kind),
    formField(
      "draft-letters",
      "letters",
      textInput("draft-letters", "letters", draft.letters),
    ),
    formField(
      "draft-source",
      "source phones (CMU)",
      textInput("draft-source", "source", draft.source),
    ),
    formField(
      "draft-target",
      "target phones (common)",
      textInput("draft-target", "target", draft.target),
    ),
  );

  if (draft.kind === "syllable") {
    const position = el("select", { id: "draft-position" });
    for (const value of ["start", "end", "anywhere"]) {
      position.append(el("option", { value }, [value]));
    }
    position.value = draft.position ?? "anywhere";
    position.addEventListener("change", () =>
      handlers.onDraftEdit("position", position.value),
    );
    section.append(formField("draft-position", "syllable position", position));
  }
  if (draft.kind === "affix") {
    const side = el("select", { id: "draft-side" });
    for (const value of ["prefix", "suffix"]) {
      side.append(el("option", { value }, [value]));
    }
    side.value = draft.side ?? "suffix";
    side.addEventListener("change", () =>
      handlers.onDraftEdit("side", side.value),
    );
    section.append(formField("draft-side", "affix side", side));
  }

  if (state.draftProblems.length > 0) {
    const ul = el("ul", { id: "draft-problems", class: "problems" });
    for (const problem of state.draftProblems) {
      ul.append(el("li", {}, [problem]));
    }
    section.append(ul);
  }
  if (state.formNotice) {
    section.append(
      el("div", { id: "form-notice", class: "notice" }, [state.formNotice]),
    );
  }
  if (state.staleRevision) {
    section.append(
      el("div", { id: "reload-prompt", class: "notice" }, [
        "the rule file changed under you — reload to pick up the new revision. ",
        button("reload", { id: "reload-btn" }, handlers.onReload),
      ]),
    );
  }

  const accept = button("accept rule", { id: "accept-btn" }, handlers.onAccept);
  if (
    state.draftProblems.length > 0 ||
    !draft.id ||
    !draft.letters ||
    !draft.source ||
    !draft.target ||
    state.staleRevision
  ) {
    accept.disabled = true;
  }
  section.append(accept);
  return section;
}

function renderPreview(state: WorkbenchState, handlers: Handlers): HTMLElement {
  const section = el("section", { id: "preview-panel" });
  section.append(el("h2", {}, ["live preview"]));
  if (state.previewPending) {
    section.append(el("p", { id: "preview-pending" }, ["previewing…"]));
  }
  const preview = state.preview;
  if (!preview) {
    if (!state.previewPending) {
      section.append(
        el("p", { class: "empty-state" }, [
          "edit a valid draft to see its effect.",
        ]),
      );
    }
    return section;
  }
  section.append(
    el("p", { id: "preview-summary" }, [
      `${preview.words_changed} of ${preview.sample_words} sample words change` +
        ` (${preview.entries_changed} entries)`,
    ]),
  );

  const table = el("table", { id: "diff-table" });
  table.append(
    el("thead", {}, [
      el("tr", {}, [
        el("th", {}, ["word"]),
        el("th", {}, ["before"]),
        el("th", {}, ["after"]),
      ]),
    ]),
  );
  const body = el("tbody");
  for (const row of diffPage(preview, state.previewPage)) {
    const label = row.variant > 1 ? `${row.word}(${row.variant})` : row.word;
    body.append(
      el("tr", {}, [
        el("td", {}, [label]),
        el("td", {}, [row.before.join(" ")]),
        el("td", {}, [row.after.join(" ")]),
      ]),
    );
  }
  table.append(body);
  section.append(table);

  const pages = diffPageCount(preview);
  if (pages > 1) {
    section.append(
      pager(state.previewPage, pages, "preview-pager", handlers.onPreviewPage),
    );
  }
  section.append(
    button("download diff as TSV", { id: "download-diff" }, handlers.onDownloadDiff),
  );
  return section;
}

function renderRules(state: WorkbenchState, handlers: Handlers): HTMLElement {
  const section = el("section", { id: "rules-panel" });
  section.append(el("h2", {}, [`rules (revision ${state.revision})`]));
  const list = el("table", { id: "rules-list" });
  list.append(
    el("thead", {}, [
      el("tr", {}, [
        el("th", {}, ["id"]),
        el("th", {}, ["kind"]),
        el("th", {}, ["letters"]),
        el("th", {}, ["source"]),
        el("th", {}, ["target"]),
        el("th", {}, ["where"]),
        el("th", {}, [""]),
      ]),
    ]),
  );
  const body = el("tbody");
  for (const rule of state.rules) {
    const where = rule.position ?? rule.side ?? "";
    const remove = button("delete", { class: "delete-rule", "data-id": rule.id }, () =>
      handlers.onDeleteRule(rule.id),
    );
    body.append(
      el("tr", { "data-rule-id": rule.id }, [
        el("td", {}, [rule.id]),
        el("td", {}, [rule.kind]),
        el("td", {}, [rule.letters]),
        el("td", {}, [rule.source]),
        el("td", {}, [rule.target]),
        el("td", {}, [where]),
        el("td", {}, [remove]),
      ]),
    );
  }
  list.append(body);
  section.append(list);
  return section;
}

function renderStats(state: WorkbenchState): HTMLElement {
  const section = el("section", { id: "stats-panel" });
  section.append(el("h2", {}, ["coverage"]));
  const stats = state.stats;
  if (!stats) {
    section.append(el("p", { class: "empty-state" }, ["no statistics yet."]));
    return section;
  }
  const table = el("table", { id: "family-stats" });
  table.append(
    el("thead", {}, [
      el("tr", {}, [
        el("th", {}, ["family"]),
        el("th", {}, ["words"]),
        el("th", {}, ["%"]),
      ]),
    ]),
  );
  const body = el("tbody");
  for (const family of stats.families) {
    body.append(
      el("tr", {}, [
        el("td", {}, [family.family]),
        el("td", {}, [String(family.words_changed)]),
        el("td", {}, [family.percent.toFixed(3)]),
      ]),
    );
  }
  body.append(
    el("tr", { class: "total-row" }, [
      el("td", {}, ["total"]),
      el("td", {}, [String(stats.total_words)]),
      el("td", {}, [stats.total_percent.toFixed(3)]),
    ]),
  );
  table.append(body);
  section.append(table);

  const details = el("details", {}, [el("summary", {}, ["per rule"])]);
  const ruleTable = el("table", { id: "rule-stats" });
  for (const row of stats.rows) {
    ruleTable.append(
      el("tr", {}, [
        el("td", {}, [row.rule_id]),
        el("td", {}, [String(row.words_changed)]),
        el("td", {}, [row.percent.toFixed(3)]),
      ]),
    );
  }
  details.append(ruleTable);
  section.append(details);
  return section;
}

export function renderApp(
  root: HTMLElement,
  state: WorkbenchState,
  handlers: Handlers,
): void {
  const main = el("main", { class: "grid" }, [
    renderClusters(state, handlers),
    renderWordDetail(state),
    renderRuleForm(state, handlers),
    renderPreview(state, handlers),
    renderRules(state, handlers),
    renderStats(state),
  ]);
  root.replaceChildren(...renderBanner(state, handlers), renderHeader(state), main);
}
