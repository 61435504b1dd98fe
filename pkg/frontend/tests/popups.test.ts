import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { POPUP_WIDTH, PopupManager, placePopup } from "../src/popups.js";

const anchor = { x: 100, y: 50, w: 80, h: 40 };
const TIMEOUT = 6000;

function manager() {
  const layer = document.createElement("div");
  document.body.appendChild(layer);
  return new PopupManager(layer, TIMEOUT);
}

function sentences(...texts: string[]) {
  return texts.map((text) => ({ text, inferred: false, fallback: false }));
}

beforeEach(() => {
  vi.useFakeTimers();
});

afterEach(() => {
  vi.useRealTimers();
  document.body.innerHTML = "";
});

describe("placePopup", () => {
  it("places the popup to the right of the element", () => {
    const pos = placePopup(anchor, POPUP_WIDTH, 2000);
    expect(pos.x).toBe(anchor.x + anchor.w + 12);
    expect(pos.y).toBe(anchor.y);
  });

  it("flips to the left at the canvas edge", () => {
    const pos = placePopup(anchor, POPUP_WIDTH, anchor.x + anchor.w + POPUP_WIDTH - 1);
    expect(pos.x).toBe(anchor.x - POPUP_WIDTH - 12);
  });
});

describe("PopupManager", () => {
  it("auto-hides an unfrozen popup after the timeout", () => {
    const popups = manager();
    popups.show("edge:teaches", "teaches", sentences("A."), anchor, 2000);
    expect(popups.isOpen("edge:teaches")).toBe(true);
    vi.advanceTimersByTime(TIMEOUT - 1);
    expect(popups.isOpen("edge:teaches")).toBe(true);
    vi.advanceTimersByTime(2);
    expect(popups.isOpen("edge:teaches")).toBe(false);
    expect(document.querySelector("[data-popup-for]")).toBeNull();
  });

  it("frozen popups survive well past twice the timeout", () => {
    const popups = manager();
    popups.show("edge:teaches", "teaches", sentences("A."), anchor, 2000);
    popups.toggleFreeze("edge:teaches");
    vi.advanceTimersByTime(TIMEOUT * 2 + 500);
    expect(popups.isOpen("edge:teaches")).toBe(true);
  });

  it("unfreezing restarts the auto-hide clock", () => {
    const popups = manager();
    popups.show("e", "e", sentences("A."), anchor, 2000);
    popups.toggleFreeze("e");
    vi.advanceTimersByTime(TIMEOUT * 3);
    popups.toggleFreeze("e");
    vi.advanceTimersByTime(TIMEOUT + 1);
    expect(popups.isOpen("e")).toBe(false);
  });

  it("keeps at most one popup per element id", () => {
    const popups = manager();
    popups.show("e", "e", sentences("first."), anchor, 2000);
    popups.show("e", "e", sentences("second."), anchor, 2000);
    const nodes = document.querySelectorAll('[data-popup-for="e"]');
    expect(nodes.length).toBe(1);
    expect(nodes[0].textContent).toContain("second.");
    expect(nodes[0].textContent).not.toContain("first.");
  });

  it("four or more frozen popups coexist", () => {
    const popups = manager();
    for (const id of ["a", "b", "c", "d", "e"]) {
      popups.show(id, id, sentences(`${id}.`), anchor, 2000);
      popups.toggleFreeze(id);
    }
    vi.advanceTimersByTime(TIMEOUT * 4);
    expect(popups.frozenCount()).toBeGreaterThanOrEqual(4);
    expect(document.querySelectorAll("[data-popup-for]").length).toBe(5);
  });

  it("renders sentence text verbatim via textContent", () => {
    const popups = manager();
    const tricky = 'Weird <text> & "quotes" — exactly 1 académic program.';
    popups.show("e", "e", sentences(tricky), anchor, 2000);
    const item = document.querySelector('[data-popup-for="e"] .sentence')!;
    expect(item.textContent).toBe(tricky);
  });

  it("marks inferred and fallback sentences with classes", () => {
    const popups = manager();
    popups.show(
      "e",
      "e",
      [
        { text: "Asserted.", inferred: false, fallback: false },
        { text: "Derived.", inferred: true, fallback: false },
        { text: "x Range y", inferred: false, fallback: true },
      ],
      anchor,
      2000,
    );
    const items = document.querySelectorAll('[data-popup-for="e"] .sentence');
    expect(items[0].classList.contains("inferred")).toBe(false);
    expect(items[1].classList.contains("inferred")).toBe(true);
    expect(items[2].classList.contains("fallback")).toBe(true);
  });

  it("separates indirect sentences from direct ones", () => {
    const popups = manager();
    popups.show(
      "e",
      "e",
      [
        { text: "Direct.", inferred: false, fallback: false, indirect: false },
        { text: "Indirect.", inferred: false, fallback: false, indirect: true },
      ],
      anchor,
      2000,
    );
    const list = document.querySelector('[data-popup-for="e"] .popup-sentences')!;
    const classes = [...list.children].map((c) => c.className);
    expect(classes).toEqual(["sentence", "popup-separator", "sentence indirect"]);
  });

  it("shows a placeholder for elements without axioms", () => {
    const popups = manager();
    popups.show("e", "e", [], anchor, 2000);
    expect(document.querySelector('[data-popup-for="e"] .sentence.empty')!.textContent).toBe(
      "No axioms for this element.",
    );
  });

  it("the pin button freezes via the DOM", () => {
    const popups = manager();
    popups.show("e", "e", sentences("A."), anchor, 2000);
    (document.querySelector('[data-popup-for="e"] .popup-pin') as HTMLButtonElement).click();
    vi.advanceTimersByTime(TIMEOUT * 2);
    expect(popups.isOpen("e")).toBe(true);
    expect(document.querySelector('[data-popup-for="e"]')!.classList.contains("frozen")).toBe(true);
  });
});
