// Wiring: load everything from the API, route UI events back into it,
// re-render after each state change.

import { Api, ApiError, ConnectionLost } from "./api.js";
import type { Handlers } from "./render.js";
import { renderApp } from "./render.js";
import type { Filters, WorkbenchState } from "./state.js";
import {
  debounce,
  diffToTsv,
  emptyDraft,
  initialState,
  prefillDraft,
} from "./state.js";
import type { RuleDraft } from "./types.js";
import { validateDraft } from "./validate.js";

export interface BootOptions {
  api?: Api;
  previewDebounceMs?: number;
  previewLimit?: number;
  reload?: () => void;
}

export interface Workbench {
  state: WorkbenchState;
  ready: Promise<void>;
}

function connectionMessage(exc: unknown): string {
  if (exc instanceof ConnectionLost) {
    return "lost the connection to the curation service.";
  }
  return `unexpected error: ${String(exc)}`;
}

export function boot(root: HTMLElement, options: BootOptions = {}): Workbench {
  const api = options.api ?? new Api();
  const debounceMs = options.previewDebounceMs ?? 300;
  const previewLimit = options.previewLimit ?? 2000;
  const reload = options.reload ?? (() => window.location.reload());
  const state = initialState();

  const rerender = () => renderApp(root, state, handlers);

  function validate(): void {
    if (!state.inventories) {
      state.draftProblems = ["inventories not loaded yet"];
      return;
    }
    state.draftProblems = validateDraft(
      state.draft,
      state.inventories,
      state.rules.map((rule) => rule.id),
    );
  }

  function sameDraft(a: RuleDraft, b: RuleDraft): boolean {
    return (
      a.id === b.id &&
      a.kind === b.kind &&
      a.letters === b.letters &&
      a.source === b.source &&
      a.target === b.target &&
      a.position === b.position &&
      a.side === b.side
    );
  }

  const requestPreview = debounce(async () => {
    const draft = { ...state.draft };
    try {
      const preview = await api.preview(draft, previewLimit);
      if (!sameDraft(draft, state.draft)) return; // draft moved on, drop it
      state.preview = preview;
      state.previewPage = 1;
      state.previewPending = false;
    } catch (exc) {
      state.previewPending = false;
      state.preview = null;
      if (exc instanceof ApiError) state.formNotice = exc.message;
      else state.banner = connectionMessage(exc);
    }
    rerender();
  }, debounceMs);

  async function loadClusters(): Promise<void> {
    const response = await api.clusters({
      phone: state.filters.phone || undefined,
      letter: state.filters.letter || undefined,
      position: state.filters.position || undefined,
      page: state.clustersPage,
    });
    state.clusters = response.clusters;
    state.clustersTotal = response.total;
    state.clustersPageSize = response.page_size;
  }

  async function loadAll(): Promise<void> {
    try {
      const [health, inventories, rules, stats] = await Promise.all([
        api.health(),
        api.inventories(),
        api.rules(),
        api.stats(),
      ]);
      state.health = health;
      state.inventories = inventories;
      state.rules = rules.rules;
      state.revision = rules.revision;
      state.stats = stats;
      await loadClusters();
      state.banner = null;
    } catch (exc) {
      state.banner = connectionMessage(exc);
    }
    rerender();
  }

  async function refreshAfterMutation(): Promise<void> {
    const [rules, stats] = await Promise.all([api.rules(), api.stats()]);
    state.rules = rules.rules;
    state.revision = rules.revision;
    state.stats = stats;
    await loadClusters();
  }

  const handlers: Handlers = {
    onFilterChange(filters: Filters) {
      state.filters = filters;
      state.clustersPage = 1;
      loadClusters()
        .catch((exc) => {
          state.banner = connectionMessage(exc);
        })
        .finally(rerender);
    },

    onClustersPage(page: number) {
      state.clustersPage = page;
      loadClusters()
        .catch((exc) => {
          state.banner = connectionMessage(exc);
        })
        .finally(rerender);
    },

    onFacetClick(sourceCmu: string, letter: string, position: string | null) {
      prefillDraft(state, sourceCmu, letter, position);
      validate();
      requestPreview.cancel();
      state.previewPending = false;
      rerender();
    },

    onWordClick(word: string) {
      api
        .word(word)
        .then((detail) => {
          state.word = detail;
        })
        .catch((exc) => {
          if (exc instanceof ApiError) state.formNotice = exc.message;
          else state.banner = connectionMessage(exc);
        })
        .finally(rerender);
    },

    onDraftEdit(field: keyof RuleDraft, value: string) {
      state.draft = { ...state.draft, [field]: value };
      if (field === "kind") {
        // position/side only apply to one kind each
        state.draft.position = value === "syllable" ? "anywhere" : null;
        state.draft.side = value === "affix" ? "suffix" : null;
      }
      state.formNotice = null;
      validate();
      if (state.draftProblems.length === 0) {
        state.previewPending = true;
        requestPreview();
      } else {
        requestPreview.cancel();
        state.previewPending = false;
        state.preview = null;
      }
      rerender();
    },

    onAccept() {
      validate();
      if (state.draftProblems.length > 0 || state.staleRevision) {
        rerender();
        return;
      }
      api
        .accept({ ...state.draft }, state.revision)
        .then(async (accepted) => {
          state.revision = accepted.revision;
          state.draft = emptyDraft();
          state.preview = null;
          state.formNotice = null;
          state.draftProblems = [];
          await refreshAfterMutation();
        })
        .catch((exc) => {
          if (exc instanceof ApiError && exc.status === 409) {
            state.staleRevision = true;
            state.formNotice = exc.message;
          } else if (exc instanceof ApiError) {
            state.formNotice = exc.message;
          } else {
            state.banner = connectionMessage(exc);
          }
        })
        .finally(rerender);
    },

    onDeleteRule(id: string) {
      api
        .removeRule(id, state.revision)
        .then(async (result) => {
          state.revision = result.revision;
          await refreshAfterMutation();
        })
        .catch((exc) => {
          if (exc instanceof ApiError && exc.status === 409) {
            state.staleRevision = true;
            state.formNotice = exc.message;
          } else if (exc instanceof ApiError) {
            state.formNotice = exc.message;
          } else {
            state.banner = connectionMessage(exc);
          }
        })
        .finally(rerender);
    },

    onPreviewPage(page: number) {
      state.previewPage = page;
      rerender();
    },

    onDownloadDiff() {
      if (!state.preview) return;
      const tsv = diffToTsv(state.preview);
      if (typeof URL.createObjectURL !== "function") return;
      const url = URL.createObjectURL(
        new Blob([tsv], { type: "text/tab-separated-values" }),
      );
      const anchor = document.createElement("a");
      anchor.href = url;
      anchor.download = `${state.preview.rule.id || "draft"}-diff.tsv`;
      anchor.click();
      URL.revokeObjectURL(url);
    },

    onRetry() {
      state.banner = null;
      rerender();
      void loadAll();
    },

    onReload() {
      reload();
    },
  };

  rerender();
  const ready = loadAll();
  return { state, ready };
}

const rootElement =
  typeof document !== "undefined" ? document.getElementById("app") : null;
if (rootElement instanceof HTMLElement) {
  boot(rootElement);
}
