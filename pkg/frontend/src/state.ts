// Workbench state and the pure helpers around it: facet prefill,
// preview debouncing, diff pagination and TSV export. No DOM in here.

import type {
  ClusterView,
  DiffRow,
  Health,
  Inventories,
  PreviewResponse,
  RuleDraft,
  RuleJson,
  StatsResponse,
  WordDetail,
} from "./types.js";

export interface Filters {
  phone: string;
  letter: string;
  position: string;
}

export interface WorkbenchState {
  health: Health | null;
  revision: number;
  inventories: Inventories | null;
  rules: RuleJson[];
  clusters: ClusterView[];
  clustersTotal: number;
  clustersPage: number;
  clustersPageSize: number;
  filters: Filters;
  draft: RuleDraft;
  draftProblems: string[];
  preview: PreviewResponse | null;
  previewPage: number;
  previewPending: boolean;
  stats: StatsResponse | null;
  word: WordDetail | null;
  banner: string | null;
  formNotice: string | null;
  staleRevision: boolean;
}

export function emptyDraft(): RuleDraft {
  return {
    id: "",
    kind: "syllable",
    letters: "",
    source: "",
    target: "",
    position: "anywhere",
    side: null,
  };
}

export function initialState(): WorkbenchState {
  return {
    health: null,
    revision: 0,
    inventories: null,
    rules: [],
    clusters: [],
    clustersTotal: 0,
    clustersPage: 1,
    clustersPageSize: 20,
    filters: { phone: "", letter: "", position: "" },
    draft: emptyDraft(),
    draftProblems: [],
    preview: null,
    previewPage: 1,
    previewPending: false,
    stats: null,
    word: null,
    banner: null,
    formNotice: null,
    staleRevision: false,
  };
}

/** Unused id of the form syll_<letter>_<phone>, numbered on collision. */
export function suggestRuleId(
  rules: RuleJson[],
  letter: string,
  source: string,
): string {
  const taken = new Set(rules.map((r) => r.id));
  const base = `syll_${letter}_${source.toLowerCase()}`;
  if (!taken.has(base)) return base;
  for (let n = 2; ; n++) {
    if (!taken.has(`${base}${n}`)) return `${base}${n}`;
  }
}

/** Prefill the rule form from a cluster context facet.
 *
 * Occurrence positions are start/end/internal, rule positions are
 * start/end/anywhere; internal occurrences (and the per-letter
 * aggregate, passed as null) can only be reached by an anywhere rule.
 * The target is the analyst's call and stays empty.
 */
export function prefillDraft(
  state: WorkbenchState,
  sourceCmu: string,
  letter: string,
  position: string | null,
): void {
  const pos =
    position === "start" || position === "end" ? position : "anywhere";
  state.draft = {
    id: suggestRuleId(state.rules, letter, sourceCmu),
    kind: "syllable",
    letters: letter,
    source: sourceCmu,
    target: "",
    position: pos,
    side: null,
  };
  state.preview = null;
  state.previewPage = 1;
  state.formNotice = null;
  state.draftProblems = [];
}

export interface Debounced<A extends unknown[]> {
  (...args: A): void;
  cancel(): void;
}

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  ms: number,
): Debounced<A> {
  let timer: ReturnType<typeof setTimeout> | null = null;
  const wrapped = (...args: A) => {
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = null;
      fn(...args);
    }, ms);
  };
  wrapped.cancel = () => {
    if (timer !== null) clearTimeout(timer);
    timer = null;
  };
  return wrapped as Debounced<A>;
}

export const DIFF_PAGE_SIZE = 100;

export function diffPageCount(preview: PreviewResponse): number {
  return Math.max(1, Math.ceil(preview.changed.length / DIFF_PAGE_SIZE));
}

export function diffPage(preview: PreviewResponse, page: number): DiffRow[] {
  const start = (page - 1) * DIFF_PAGE_SIZE;
  return preview.changed.slice(start, start + DIFF_PAGE_SIZE);
}

/** Whole diff as TSV, straight from the API rows. */
export function diffToTsv(preview: PreviewResponse): string {
  const lines = ["word\tvariant\tbefore\tafter"];
  for (const row of preview.changed) {
    lines.push(
      `${row.word}\t${row.variant}\t${row.before.join(" ")}\t${row.after.join(" ")}`,
    );
  }
  return lines.join("\n") + "\n";
}

/** Context facets of one cluster: distinct (letter, position) pairs
 * with counts, preceded by a per-letter aggregate (position null). */
export interface Facet {
  letter: string;
  position: string | null;
  count: number;
}

export function clusterFacets(cluster: ClusterView): Facet[] {
  const byLetter = new Map<string, Map<string, number>>();
  for (const target of cluster.targets) {
    for (const occ of target.occurrences) {
      let positions = byLetter.get(occ.letter);
      if (!positions) {
        positions = new Map();
        byLetter.set(occ.letter, positions);
      }
      positions.set(occ.position, (positions.get(occ.position) ?? 0) + 1);
    }
  }
  const out: Facet[] = [];
  for (const [letter, positions] of byLetter) {
    let total = 0;
    for (const count of positions.values()) total += count;
    out.push({ letter, position: null, count: total });
    for (const [position, count] of positions) {
      out.push({ letter, position, count });
    }
  }
  return out;
}
