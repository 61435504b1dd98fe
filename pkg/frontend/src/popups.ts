/** Verbalization popups: one per diagram element, auto-hiding after a
 * timeout unless frozen with the pin. Sentence text is inserted verbatim via
 * textContent; the client never rewrites what the service said. */

export interface PopupSentence {
  text: string;
  inferred: boolean;
  fallback: boolean;
  /** true in referencing/inferred scope for sentences whose axioms are not
   * directly represented by the element */
  indirect?: boolean;
}

export interface Anchor {
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface PopupHandle {
  id: string;
  root: HTMLElement;
  frozen: boolean;
}

export const POPUP_WIDTH = 340;
const MARGIN = 12;

/** Placement rule: to the right of the element, flipped to the left side
 * when the right edge of the canvas would clip the popup. */
export function placePopup(anchor: Anchor, popupWidth: number, canvasWidth: number): { x: number; y: number } {
  let x = anchor.x + anchor.w + MARGIN;
  if (x + popupWidth > canvasWidth) {
    x = anchor.x - popupWidth - MARGIN;
  }
  return { x, y: anchor.y };
}

export class PopupManager {
  private popups = new Map<string, PopupHandle>();
  private timers = new Map<string, ReturnType<typeof setTimeout>>();

  constructor(
    private layer: HTMLElement,
    public timeoutMs = 6000,
  ) {}

  show(id: string, title: string, sentences: PopupSentence[], anchor: Anchor, canvasWidth: number): PopupHandle {
    let handle = this.popups.get(id);
    if (!handle) {
      const root = this.layer.ownerDocument.createElement("div");
      root.className = "popup";
      root.dataset.popupFor = id;
      handle = { id, root, frozen: false };
      const header = this.layer.ownerDocument.createElement("div");
      header.className = "popup-header";
      const titleEl = this.layer.ownerDocument.createElement("span");
      titleEl.className = "popup-title";
      titleEl.textContent = title;
      const pin = this.layer.ownerDocument.createElement("button");
      pin.className = "popup-pin";
      pin.type = "button";
      pin.title = "freeze this popup";
      pin.textContent = "pin";
      pin.addEventListener("click", () => this.toggleFreeze(id));
      header.appendChild(titleEl);
      header.appendChild(pin);
      root.appendChild(header);
      const list = this.layer.ownerDocument.createElement("ul");
      list.className = "popup-sentences";
      root.appendChild(list);
      this.layer.appendChild(root);
      this.popups.set(id, handle);
    }
    const pos = placePopup(anchor, POPUP_WIDTH, canvasWidth);
    handle.root.style.left = `${pos.x}px`;
    handle.root.style.top = `${pos.y}px`;
    this.setContent(id, sentences);
    this.scheduleHide(handle);
    return handle;
  }

  setContent(id: string, sentences: PopupSentence[]): void {
    const handle = this.popups.get(id);
    if (!handle) return;
    const list = handle.root.querySelector("ul.popup-sentences")!;
    list.textContent = "";
    const doc = this.layer.ownerDocument;
    let separated = false;
    for (const s of sentences) {
      if (s.indirect && !separated) {
        const sep = doc.createElement("li");
        sep.className = "popup-separator";
        list.appendChild(sep);
        separated = true;
      }
      const item = doc.createElement("li");
      item.className =
        "sentence" +
        (s.inferred ? " inferred" : "") +
        (s.fallback ? " fallback" : "") +
        (s.indirect ? " indirect" : "");
      item.textContent = s.text;
      list.appendChild(item);
    }
    if (sentences.length === 0) {
      const item = doc.createElement("li");
      item.className = "sentence empty";
      item.textContent = "No axioms for this element.";
      list.appendChild(item);
    }
  }

  private scheduleHide(handle: PopupHandle): void {
    this.clearTimer(handle.id);
    if (handle.frozen) return;
    this.timers.set(
      handle.id,
      setTimeout(() => this.hide(handle.id), this.timeoutMs),
    );
  }

  private clearTimer(id: string): void {
    const timer = this.timers.get(id);
    if (timer !== undefined) {
      clearTimeout(timer);
      this.timers.delete(id);
    }
  }

  toggleFreeze(id: string): boolean {
    const handle = this.popups.get(id);
    if (!handle) return false;
    handle.frozen = !handle.frozen;
    handle.root.classList.toggle("frozen", handle.frozen);
    if (handle.frozen) {
      this.clearTimer(id);
    } else {
      this.scheduleHide(handle);
    }
    return handle.frozen;
  }

  hide(id: string): void {
    const handle = this.popups.get(id);
    if (!handle) return;
    this.clearTimer(id);
    handle.root.remove();
    this.popups.delete(id);
  }

  isOpen(id: string): boolean {
    return this.popups.has(id);
  }

  openIds(): string[] {
    return [...this.popups.keys()];
  }

  frozenCount(): number {
    return [...this.popups.values()].filter((p) => p.frozen).length;
  }

  get(id: string): PopupHandle | undefined {
    return this.popups.get(id);
  }
}
