// API payload shapes, snake_case mirroring the service JSON.

export interface Health {
  status: string;
  revision: number;
  words: number;
  rules: number;
  clusters: number;
}

export interface Inventories {
  cmu: string[];
  cls: string[];
  common: string[];
}

export interface RuleJson {
  id: string;
  kind: string;
  letters: string;
  source: string;
  target: string;
  position: string | null;
  side: string | null;
}

export interface RulesResponse {
  revision: number;
  rules: RuleJson[];
}

export interface Occurrence {
  word: string;
  letter: string;
  position: string;
  left: string;
  right: string;
}

export interface TargetRow {
  cls: string;
  count: number;
  occurrences: Occurrence[];
}

export interface ClusterView {
  source_cmu: string;
  total: number;
  targets: TargetRow[];
}

export interface ClustersResponse {
  total: number;
  page: number;
  page_size: number;
  clusters: ClusterView[];
}

export interface AlignColumn {
  letter: string | null;
  cmu: string | null;
  cls: string | null;
}

export interface WordMatch {
  rule_id: string;
  start: number;
  end: number;
  before: string[];
  after: string[];
}

export interface WordDetail {
  word: string;
  phones: string[];
  syllables: string;
  pronunciation: string[];
  columns: AlignColumn[];
  matches: WordMatch[];
  revision: number;
}

// The rule form's fields; also the body sent to preview/accept.
export interface RuleDraft {
  id: string;
  kind: string;
  letters: string;
  source: string;
  target: string;
  position: string | null;
  side: string | null;
}

export interface DiffRow {
  word: string;
  variant: number;
  before: string[];
  after: string[];
}

export interface PreviewResponse {
  rule: RuleJson;
  sample_words: number;
  words_changed: number;
  entries_changed: number;
  changed: DiffRow[];
  revision: number;
}

export interface AcceptResponse {
  revision: number;
  rule: RuleJson;
}

export interface StatsRow {
  rule_id: string;
  kind: string;
  family: string;
  words_changed: number;
  percent: number;
}

export interface FamilyRow {
  family: string;
  words_changed: number;
  percent: number;
}

export interface StatsResponse {
  lexicon_words: number;
  rows: StatsRow[];
  families: FamilyRow[];
  total_words: number;
  total_percent: number;
  revision: number;
}

export interface ClusterFilters {
  phone?: string;
  letter?: string;
  position?: string;
  page?: number;
  page_size?: number;
}
