// End-to-end flows against the fake service: the full draft-preview-
// accept-reload loop plus the error paths (validation stops requests,
// stale revisions prompt a reload, lost connections banner and retry).

import { afterEach, describe, expect, it, vi } from "vitest";

import { Api } from "../src/api.js";
import { boot } from "../src/main.js";
import { FakeService } from "./fake_service.js";

function sleep(ms = 5): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

function mountRoot(): HTMLElement {
  const root = document.createElement("div");
  document.body.append(root);
  return root;
}

function setField(root: HTMLElement, id: string, value: string): void {
  const input = root.querySelector<HTMLInputElement>(`#${id}`)!;
  input.value = value;
  input.dispatchEvent(new Event("input"));
}

afterEach(() => {
  document.body.replaceChildren();
});

describe("workbench round-trip", () => {
  it("drafting syll2 from the AA facet previews, accepts and survives reload", async () => {
    const svc = new FakeService();
    const root = mountRoot();
    const { state, ready } = boot(root, {
      api: new Api("", svc.fetch),
      previewDebounceMs: 0,
    });
    await ready;

    // the AA cluster is on screen with its two target tallies
    const card = root.querySelector('.cluster[data-phone="AA"]')!;
    expect(card.textContent).toContain("aa (3)");
    expect(card.textContent).toContain("o (2)");

    // facet click prefills (letter, source phone, position)
    root
      .querySelector<HTMLButtonElement>(
        '.facet-chip[data-phone="AA"][data-letter="o"][data-position=""]',
      )!
      .click();
    expect(state.draft).toMatchObject({
      kind: "syllable",
      letters: "o",
      source: "AA",
      position: "anywhere",
    });
    expect(
      root.querySelector<HTMLInputElement>("#draft-letters")!.value,
    ).toBe("o");

    // the analyst names the rule and fills in the target
    setField(root, "draft-id", "syll2");
    setField(root, "draft-target", "ax");
    await sleep();

    // diff table row count equals the count the API reported
    const preview = state.preview!;
    expect(preview.entries_changed).toBe(5);
    expect(preview.words_changed).toBe(5);
    const rows = root.querySelectorAll("#diff-table tbody tr");
    expect(rows.length).toBe(preview.entries_changed);
    expect(rows.length).toBe(preview.words_changed);
    expect(rows[0]!.textContent).toContain("d aa t");
    expect(rows[0]!.textContent).toContain("d ax t");

    // accept: persisted on the service, panels refreshed
    root.querySelector<HTMLButtonElement>("#accept-btn")!.click();
    await sleep();
    expect(svc.rulesFile.map((rule) => rule.id)).toContain("syll2");
    expect(state.revision).toBe(1);
    expect(root.querySelector('#rules-list [data-rule-id="syll2"]')).not.toBeNull();
    expect(root.querySelector("#stats-panel")!.textContent).toContain("100.000");

    // reload: the old page goes away, a fresh boot against the same
    // service shows the same rules
    root.remove();
    const root2 = mountRoot();
    const second = boot(root2, { api: new Api("", svc.fetch) });
    await second.ready;
    expect(second.state.rules.map((rule) => rule.id)).toEqual(
      svc.rulesFile.map((rule) => rule.id),
    );
    const reloadedRow = root2.querySelector('#rules-list [data-rule-id="syll2"]')!;
    expect(reloadedRow.textContent).toContain("AA");
    expect(reloadedRow.textContent).toContain("ax");
  });

  it("an invalid phone label never reaches the service", async () => {
    const svc = new FakeService();
    const root = mountRoot();
    const { ready } = boot(root, {
      api: new Api("", svc.fetch),
      previewDebounceMs: 0,
    });
    await ready;

    root.querySelector<HTMLButtonElement>('.facet-chip[data-position=""]')!.click();
    setField(root, "draft-id", "syll_bad");
    setField(root, "draft-target", "zz99");
    await sleep(10);

    expect(root.querySelector("#draft-problems")!.textContent).toContain("zz99");
    expect(svc.previewCalls()).toHaveLength(0);
    expect(root.querySelector<HTMLButtonElement>("#accept-btn")!.disabled).toBe(true);
  });

  it("a stale revision turns into a reload prompt", async () => {
    const svc = new FakeService();
    const reload = vi.fn();
    const root = mountRoot();
    const { state, ready } = boot(root, {
      api: new Api("", svc.fetch),
      previewDebounceMs: 0,
      reload,
    });
    await ready;

    // someone else accepts a rule behind this session's back
    await new Api("", svc.fetch).accept(
      {
        id: "syll_other",
        kind: "syllable",
        letters: "o",
        source: "AA",
        target: "o",
        position: "anywhere",
        side: null,
      },
      0,
    );

    root.querySelector<HTMLButtonElement>('.facet-chip[data-position=""]')!.click();
    setField(root, "draft-id", "syll2");
    setField(root, "draft-target", "ax");
    await sleep();
    root.querySelector<HTMLButtonElement>("#accept-btn")!.click();
    await sleep();

    expect(state.staleRevision).toBe(true);
    expect(root.querySelector("#form-notice")!.textContent).toContain("stale");
    expect(svc.rulesFile.map((rule) => rule.id)).not.toContain("syll2");
    root.querySelector<HTMLButtonElement>("#reload-btn")!.click();
    expect(reload).toHaveBeenCalledOnce();
  });

  it("a lost connection banners and retry recovers", async () => {
    const svc = new FakeService();
    svc.failNext = true;
    const root = mountRoot();
    const { state, ready } = boot(root, { api: new Api("", svc.fetch) });
    await ready;

    expect(state.banner).toContain("lost the connection");
    expect(root.querySelector("#banner")).not.toBeNull();

    root.querySelector<HTMLButtonElement>("#retry-btn")!.click();
    await sleep();
    expect(state.banner).toBeNull();
    expect(root.querySelector('.cluster[data-phone="AA"]')).not.toBeNull();
  });

  it("an empty corpus gets the empty-state message", async () => {
    const svc = new FakeService();
    svc.emptyCorpus = true;
    const root = mountRoot();
    const { ready } = boot(root, { api: new Api("", svc.fetch) });
    await ready;
    expect(root.querySelector("#cluster-list .empty-state")!.textContent).toBe(
      "no ambiguity clusters in this corpus.",
    );
  });

  it("clicking a word chip shows its alignment from the API", async () => {
    const svc = new FakeService();
    const root = mountRoot();
    const { ready } = boot(root, { api: new Api("", svc.fetch) });
    await ready;

    root.querySelector<HTMLButtonElement>('.word-chip[data-word="DOT"]')!.click();
    await sleep();
    expect(root.querySelector("#word-panel h3")!.textContent).toBe("DOT");
    expect(root.querySelector("#word-pron")!.textContent).toBe("derived: d aa t");
  });

  it("deleting a rule refreshes the listing", async () => {
    const svc = new FakeService();
    const root = mountRoot();
    const { state, ready } = boot(root, { api: new Api("", svc.fetch) });
    await ready;

    root
      .querySelector<HTMLButtonElement>('.delete-rule[data-id="suf_ted"]')!
      .click();
    await sleep();
    expect(svc.rulesFile).toHaveLength(0);
    expect(state.revision).toBe(1);
    expect(root.querySelector('#rules-list [data-rule-id="suf_ted"]')).toBeNull();
  });

  it("filtering clusters hits the API with the filter", async () => {
    const svc = new FakeService();
    const root = mountRoot();
    const { ready } = boot(root, { api: new Api("", svc.fetch) });
    await ready;

    const phone = root.querySelector<HTMLInputElement>("#filter-phone")!;
    phone.value = "ZH";
    phone.dispatchEvent(new Event("change"));
    await sleep();
    expect(
      svc.calls.some((call) => call.url === "/api/clusters?phone=ZH&page=1"),
    ).toBe(true);
    expect(root.querySelector("#cluster-list .empty-state")!.textContent).toBe(
      "no clusters match the current filters.",
    );
  });
});
