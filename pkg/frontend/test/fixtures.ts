// Service responses captured from the curation API running over a
// five-word fixture corpus (DOT POT TOP COT POD, CLS sides chosen so
// AA maps to aa three times and o twice). The fake service in the
// tests replays these bodies, so what the UI consumes here is exactly
// what the real service emits.

import type {
  AcceptResponse,
  ClustersResponse,
  Health,
  Inventories,
  PreviewResponse,
  RuleJson,
  RulesResponse,
  StatsResponse,
  WordDetail,
} from "../src/types.js";

export const health: Health = {
  status: "ok",
  revision: 0,
  words: 5,
  rules: 1,
  clusters: 1,
};

export const inventories: Inventories = {
  cmu: [
    "AA", "AE", "AH", "AO", "AW", "AY", "B", "CH", "D", "DH", "EH", "ER",
    "EY", "F", "G", "HH", "IH", "IY", "JH", "K", "L", "M", "N", "NG",
    "OW", "OY", "P", "R", "S", "SH", "T", "TH", "UH", "UW", "V", "W",
    "Y", "Z", "ZH",
  ],
  cls: [
    "a", "aa", "i", "ii", "u", "uu", "e", "ee", "ai", "o", "oo", "au",
    "ax", "ei", "ou", "eu", "k", "kh", "g", "gh", "ng", "c", "ch", "j",
    "jh", "nj", "tx", "txh", "dx", "dxh", "nx", "t", "th", "d", "dh",
    "n", "p", "ph", "b", "bh", "m", "y", "r", "l", "w", "sh", "sx", "s",
    "h", "rx", "rxh", "lx", "f", "z", "q", "rq", "mq", "hq", "zh",
  ],
  common: [
    "a", "aa", "i", "ii", "u", "uu", "e", "ee", "ai", "o", "oo", "au",
    "ax", "ei", "ou", "eu", "k", "kh", "g", "gh", "ng", "c", "ch", "j",
    "jh", "nj", "tx", "txh", "dx", "dxh", "nx", "t", "th", "d", "dh",
    "n", "p", "ph", "b", "bh", "m", "y", "r", "l", "w", "sh", "sx", "s",
    "h", "rx", "rxh", "lx", "f", "z", "q", "rq", "mq", "hq", "zh",
    "AE", "CH", "DH", "ER", "HH", "JH", "OY", "SH", "TH", "V", "W", "Y",
    "Z", "ZH",
  ],
};

export const initialRule: RuleJson = {
  id: "suf_ted",
  kind: "affix",
  letters: "ted",
  source: "T AH D",
  target: "t ee d",
  position: null,
  side: "suffix",
};

export const rules: RulesResponse = {
  revision: 0,
  rules: [initialRule],
};

export const clusters: ClustersResponse = {
  total: 1,
  page: 1,
  page_size: 20,
  clusters: [
    {
      source_cmu: "AA",
      total: 5,
      targets: [
        {
          cls: "aa",
          count: 3,
          occurrences: [
            { word: "DOT", letter: "o", position: "internal", left: "d", right: "t" },
            { word: "POD", letter: "o", position: "internal", left: "p", right: "d" },
            { word: "POT", letter: "o", position: "internal", left: "p", right: "t" },
          ],
        },
        {
          cls: "o",
          count: 2,
          occurrences: [
            { word: "COT", letter: "o", position: "internal", left: "c", right: "t" },
            { word: "TOP", letter: "o", position: "internal", left: "t", right: "p" },
          ],
        },
      ],
    },
  ],
};

export const wordDot: WordDetail = {
  word: "DOT",
  phones: ["D", "AA", "T"],
  syllables: "[D AA T]",
  pronunciation: ["d", "aa", "t"],
  columns: [
    { letter: "d", cmu: "D", cls: "d" },
    { letter: "o", cmu: "AA", cls: "aa" },
    { letter: "t", cmu: "T", cls: "t" },
  ],
  matches: [],
  revision: 0,
};

export const statsBefore: StatsResponse = {
  lexicon_words: 5,
  rows: [
    { rule_id: "suf_ted", kind: "affix", family: "suffix", words_changed: 0, percent: 0.0 },
  ],
  families: [
    { family: "prefix", words_changed: 0, percent: 0.0 },
    { family: "suffix", words_changed: 0, percent: 0.0 },
    { family: "sequence", words_changed: 0, percent: 0.0 },
    { family: "syllable", words_changed: 0, percent: 0.0 },
  ],
  total_words: 0,
  total_percent: 0.0,
  revision: 0,
};

// POST /api/rules/preview with the syll2 draft (syllable, letters o,
// AA -> ax, anywhere) over the whole fixture lexicon.
export const previewSyll2: PreviewResponse = {
  rule: {
    id: "syll2",
    kind: "syllable",
    letters: "o",
    source: "AA",
    target: "ax",
    position: "anywhere",
    side: null,
  },
  sample_words: 5,
  words_changed: 5,
  entries_changed: 5,
  changed: [
    { word: "DOT", variant: 1, before: ["d", "aa", "t"], after: ["d", "ax", "t"] },
    { word: "POT", variant: 1, before: ["p", "aa", "t"], after: ["p", "ax", "t"] },
    { word: "TOP", variant: 1, before: ["t", "aa", "p"], after: ["t", "ax", "p"] },
    { word: "COT", variant: 1, before: ["k", "aa", "t"], after: ["k", "ax", "t"] },
    { word: "POD", variant: 1, before: ["p", "aa", "d"], after: ["p", "ax", "d"] },
  ],
  revision: 0,
};

export const acceptSyll2: AcceptResponse = {
  revision: 1,
  rule: previewSyll2.rule,
};

export const statsAfter: StatsResponse = {
  lexicon_words: 5,
  rows: [
    { rule_id: "suf_ted", kind: "affix", family: "suffix", words_changed: 0, percent: 0.0 },
    { rule_id: "syll2", kind: "syllable", family: "syllable", words_changed: 5, percent: 100.0 },
  ],
  families: [
    { family: "prefix", words_changed: 0, percent: 0.0 },
    { family: "suffix", words_changed: 0, percent: 0.0 },
    { family: "sequence", words_changed: 0, percent: 0.0 },
    { family: "syllable", words_changed: 5, percent: 100.0 },
  ],
  total_words: 5,
  total_percent: 100.0,
  revision: 1,
};
