// Client-side draft validation. Phone labels are checked against the
// inventories fetched from the service so typos never leave the page;
// structural checks mirror the service's rule constructor except for
// letter-unit grouping, which stays server-side (the 400 detail is
// surfaced inline if a pattern slips through).

import type { Inventories, RuleDraft } from "./types.js";

export const KINDS = ["affix", "sequence", "syllable"];
export const POSITIONS = ["start", "end", "anywhere"];
export const SIDES = ["prefix", "suffix"];

export function splitPhones(text: string): string[] {
  return text.split(/\s+/).filter((tok) => tok.length > 0);
}

function stripStress(label: string): string {
  return /^[A-Z]+[012]$/.test(label) ? label.slice(0, -1) : label;
}

export function validateDraft(
  draft: RuleDraft,
  inv: Inventories,
  existingIds: string[] = [],
): string[] {
  const problems: string[] = [];
  const id = draft.id.trim();
  if (!draft.id || /\s/.test(draft.id) || !id) {
    problems.push("rule id must be non-empty without spaces");
  } else if (existingIds.includes(id)) {
    problems.push(`rule id '${id}' already in use`);
  }
  if (!KINDS.includes(draft.kind)) {
    problems.push(`unknown rule kind '${draft.kind}'`);
  }

  const letters = draft.letters.trim().toLowerCase();
  const letterPattern =
    draft.kind === "sequence" ? /^[a-z'.*-]+$/ : /^[a-z'.-]+$/;
  if (!letters) {
    problems.push("letter pattern is empty");
  } else if (!letterPattern.test(letters)) {
    problems.push(`letters '${letters}' contain characters outside a-z'-.`);
  }

  const source = splitPhones(draft.source);
  const target = splitPhones(draft.target);
  if (source.length === 0) problems.push("source phones are empty");
  if (target.length === 0) problems.push("target phones are empty");
  for (const tok of source) {
    if (!inv.cmu.includes(stripStress(tok))) {
      problems.push(`unknown source phone '${tok}'`);
    }
  }
  for (const tok of target) {
    if (tok === "*") {
      if (draft.kind !== "sequence") {
        problems.push("wildcard targets are only valid in sequence rules");
      }
    } else if (!inv.common.includes(tok) && !inv.cmu.includes(tok)) {
      problems.push(`unknown target phone '${tok}'`);
    }
  }

  if (draft.kind === "syllable") {
    if (letters.length > 2) {
      problems.push(`syllable rule letter '${letters}' is not a single unit`);
    }
    if (source.length !== 1 || target.length !== 1) {
      problems.push("syllable rules take one source and one target phone");
    }
    if (!draft.position || !POSITIONS.includes(draft.position)) {
      problems.push(`bad syllable position '${draft.position ?? ""}'`);
    }
  } else if (draft.kind === "sequence") {
    const wildLetters = (letters.match(/\*/g) ?? []).length;
    const wildTargets = target.filter((tok) => tok === "*").length;
    if (wildLetters !== wildTargets) {
      problems.push(
        `${wildLetters} wildcard unit(s) vs ${wildTargets} wildcard target(s)`,
      );
    }
    if (letters.length > 0 && letters.replace(/\*/g, "").length === 0) {
      problems.push("sequence pattern needs at least one literal unit");
    }
  } else if (draft.kind === "affix") {
    if (!draft.side || !SIDES.includes(draft.side)) {
      problems.push(`bad affix side '${draft.side ?? ""}'`);
    }
  }

  return problems;
}
