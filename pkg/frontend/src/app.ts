import { ApiClient } from "./api.js";
import { PopupManager, type PopupSentence } from "./popups.js";
import { elementLabel, markerDefs, renderDiagram } from "./svg.js";
import type { DiagramElement, DiagramModel, Scope, SentenceJson } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface AppOptions {
  popupTimeoutMs?: number;
}

/** Wires the pieces together: fetch the diagram, render it, open a
 * verbalization popup on element click, re-render open popups on scope
 * switches. The canvas pans and zooms; elements are not editable. */
export class App {
  readonly svg: SVGSVGElement;
  readonly popups: PopupManager;
  scope: Scope = "direct";
  diagram: DiagramModel | null = null;
  private viewBox = { x: 0, y: 0, w: 1000, h: 700 };

  constructor(
    private container: HTMLElement,
    private api: ApiClient,
    options: AppOptions = {},
  ) {
    const doc = container.ownerDocument;
    this.svg = doc.createElementNS(SVG_NS, "svg") as SVGSVGElement;
    this.svg.setAttribute("class", "canvas");
    const popupLayer = doc.createElement("div");
    popupLayer.className = "popup-layer";
    container.appendChild(this.svg);
    container.appendChild(popupLayer);
    this.popups = new PopupManager(popupLayer, options.popupTimeoutMs ?? 6000);
  }

  async start(): Promise<void> {
    const doc = this.container.ownerDocument;
    let diagram: DiagramModel;
    try {
      diagram = await this.api.getDiagram();
      this.renderScene(diagram);
    } catch (err) {
      this.showBanner(`Could not load the diagram: ${String(err)}`);
      this.svg.textContent = "";
      return;
    }
    this.svg.addEventListener("click", (event) => {
      const target = event.target as Element | null;
      const host = target?.closest?.("[data-element-id]");
      const id = host?.getAttribute("data-element-id");
      if (id) void this.openPopup(id);
    });
    this.installPanZoom(doc);
  }

  renderScene(diagram: DiagramModel): void {
    this.diagram = diagram;
    const doc = this.container.ownerDocument;
    this.svg.textContent = "";
    this.svg.appendChild(markerDefs(doc));
    const scene = renderDiagram(doc, diagram);
    this.svg.appendChild(scene.root);
    const pad = 40;
    this.viewBox = {
      x: scene.bounds.minX - pad,
      y: scene.bounds.minY - pad,
      w: scene.bounds.maxX - scene.bounds.minX + 2 * pad,
      h: scene.bounds.maxY - scene.bounds.minY + 2 * pad,
    };
    this.applyViewBox();
  }

  element(id: string): DiagramElement | undefined {
    return this.diagram?.elements.find((e) => e.id === id);
  }

  async openPopup(elementId: string): Promise<void> {
    const element = this.element(elementId);
    if (!element || !this.diagram) return;
    try {
      const response = await this.api.verbalize(elementId, this.scope);
      this.popups.show(
        elementId,
        elementLabel(element),
        this.decorate(elementId, response.sentences),
        this.anchorFor(element),
        this.canvasWidth(),
      );
    } catch (err) {
      if ((err as Error).name === "AbortError") return;
      this.popups.show(
        elementId,
        elementLabel(element),
        [{ text: `Could not verbalize this element: ${String(err)}`, inferred: false, fallback: false }],
        this.anchorFor(element),
        this.canvasWidth(),
      );
    }
  }

  /** Sentences whose axioms are not directly represented by the element are
   * marked indirect so the popup can set them apart visually. */
  private decorate(elementId: string, sentences: SentenceJson[]): PopupSentence[] {
    const direct = new Set(this.diagram?.element_axioms[elementId] ?? []);
    return sentences.map((s) => ({
      text: s.text,
      inferred: s.inferred,
      fallback: s.fallback,
      indirect: !s.axiom_ids.every((id) => direct.has(id)),
    }));
  }

  async setScope(scope: Scope): Promise<void> {
    this.scope = scope;
    for (const id of this.popups.openIds()) {
      try {
        const response = await this.api.verbalize(id, scope);
        this.popups.setContent(id, this.decorate(id, response.sentences));
      } catch (err) {
        if ((err as Error).name !== "AbortError") {
          this.popups.setContent(id, [
            { text: `Could not verbalize this element: ${String(err)}`, inferred: false, fallback: false },
          ]);
        }
      }
    }
  }

  private anchorFor(element: DiagramElement) {
    return { x: element.x, y: element.y, w: element.w, h: element.h };
  }

  private canvasWidth(): number {
    const width = (this.container as HTMLElement).clientWidth;
    return width > 0 ? width : 1200;
  }

  private showBanner(message: string): void {
    const banner = this.container.ownerDocument.createElement("div");
    banner.className = "error-banner";
    banner.textContent = message;
    this.container.prepend(banner);
  }

  private applyViewBox(): void {
    const { x, y, w, h } = this.viewBox;
    this.svg.setAttribute("viewBox", `${x} ${y} ${w} ${h}`);
  }

  private installPanZoom(doc: Document): void {
    let dragging = false;
    let last = { x: 0, y: 0 };
    this.svg.addEventListener("pointerdown", (event) => {
      dragging = true;
      last = { x: event.clientX, y: event.clientY };
    });
    doc.addEventListener("pointerup", () => {
      dragging = false;
    });
    doc.addEventListener("pointermove", (event) => {
      if (!dragging) return;
      const scale = this.viewBox.w / Math.max(this.canvasWidth(), 1);
      this.viewBox.x -= (event.clientX - last.x) * scale;
      this.viewBox.y -= (event.clientY - last.y) * scale;
      last = { x: event.clientX, y: event.clientY };
      this.applyViewBox();
    });
    this.svg.addEventListener("wheel", (event) => {
      event.preventDefault();
      const factor = event.deltaY > 0 ? 1.1 : 1 / 1.1;
      const { x, y, w, h } = this.viewBox;
      this.viewBox = {
        x: x + (w - w * factor) / 2,
        y: y + (h - h * factor) / 2,
        w: w * factor,
        h: h * factor,
      };
      this.applyViewBox();
    });
  }
}
