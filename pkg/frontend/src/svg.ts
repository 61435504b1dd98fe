import type { DiagramElement, DiagramModel } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const NODE_KINDS = new Set(["class-node", "individual-node", "fork-node"]);

export interface Scene {
  root: SVGGElement;
  /** bounding box of all geometry, for the initial viewBox */
  bounds: { minX: number; minY: number; maxX: number; maxY: number };
}

export function elementLabel(element: DiagramElement): string {
  return (
    element.labels.name ??
    element.labels.role ??
    element.labels.property ??
    element.labels.text ??
    element.id
  );
}

function assertModel(diagram: DiagramModel): void {
  if (!diagram || !Array.isArray(diagram.elements) || typeof diagram.element_axioms !== "object") {
    throw new Error("malformed diagram document");
  }
}

/** Build the SVG scene for a diagram. Every graphical element carries its
 * element id in data-element-id so clicks map straight back to the model. */
export function renderDiagram(doc: Document, diagram: DiagramModel): Scene {
  assertModel(diagram);
  const root = doc.createElementNS(SVG_NS, "g") as SVGGElement;
  root.setAttribute("class", "diagram");
  const byId = new Map(diagram.elements.map((e) => [e.id, e]));
  const owned = new Map<string, DiagramElement[]>();
  for (const e of diagram.elements) {
    if (e.owner) {
      const list = owned.get(e.owner) ?? [];
      list.push(e);
      owned.set(e.owner, list);
    }
  }

  const edges = doc.createElementNS(SVG_NS, "g");
  const nodes = doc.createElementNS(SVG_NS, "g");
  root.appendChild(edges);
  root.appendChild(nodes);

  for (const e of diagram.elements) {
    if (NODE_KINDS.has(e.kind)) {
      nodes.appendChild(renderNode(doc, e, owned.get(e.id) ?? []));
    } else if (e.source && e.target && byId.has(e.source) && byId.has(e.target)) {
      edges.appendChild(renderEdge(doc, e, byId.get(e.source)!, byId.get(e.target)!));
    }
  }

  let minX = Infinity, minY = Infinity, maxX = -Infinity, maxY = -Infinity;
  for (const e of diagram.elements) {
    if (!NODE_KINDS.has(e.kind)) continue;
    minX = Math.min(minX, e.x);
    minY = Math.min(minY, e.y);
    maxX = Math.max(maxX, e.x + e.w);
    maxY = Math.max(maxY, e.y + e.h);
  }
  if (!isFinite(minX)) {
    minX = minY = 0;
    maxX = maxY = 100;
  }
  return { root, bounds: { minX, minY, maxX, maxY } };
}

function renderNode(doc: Document, e: DiagramElement, children: DiagramElement[]): SVGGElement {
  const g = doc.createElementNS(SVG_NS, "g") as SVGGElement;
  g.setAttribute("class", `element ${e.kind}`);
  g.setAttribute("data-element-id", e.id);

  const rect = doc.createElementNS(SVG_NS, "rect");
  rect.setAttribute("x", String(e.x));
  rect.setAttribute("y", String(e.y));
  rect.setAttribute("width", String(e.w));
  rect.setAttribute("height", String(e.h));
  g.appendChild(rect);

  if (e.kind === "fork-node") {
    const label = e.labels.constraint ? `{${e.labels.constraint}}` : "";
    if (label) {
      g.appendChild(text(doc, e.x + e.w + 4, e.y + e.h, label, "fork-constraint"));
    }
    return g;
  }

  const title = text(doc, e.x + e.w / 2, e.y + 14, elementLabel(e), "node-title");
  title.setAttribute("text-anchor", "middle");
  if (e.kind === "individual-node") title.setAttribute("text-decoration", "underline");
  g.appendChild(title);

  for (const child of children) {
    const line = text(doc, child.x + 4, child.y + 14, child.labels.text ?? "", `owned ${child.kind}`);
    line.setAttribute("data-element-id", child.id);
    g.appendChild(line);
  }
  return g;
}

function renderEdge(doc: Document, e: DiagramElement, from: DiagramElement, to: DiagramElement): SVGGElement {
  const g = doc.createElementNS(SVG_NS, "g") as SVGGElement;
  g.setAttribute("class", `element ${e.kind}`);
  g.setAttribute("data-element-id", e.id);

  const x1 = from.x + from.w / 2;
  const y1 = from.y + from.h / 2;
  const x2 = to.x + to.w / 2;
  const y2 = to.y + to.h / 2;
  const line = doc.createElementNS(SVG_NS, "line");
  line.setAttribute("x1", String(x1));
  line.setAttribute("y1", String(y1));
  line.setAttribute("x2", String(x2));
  line.setAttribute("y2", String(y2));
  if (e.kind === "restriction-edge") {
    line.setAttribute("stroke", "#cc2222");
    line.setAttribute("marker-end", "url(#arrow-red)");
  } else if (e.kind === "generalization-edge") {
    line.setAttribute("marker-end", "url(#triangle-hollow)");
  } else if (e.kind === "instanceof-edge") {
    line.setAttribute("stroke-dasharray", "6 4");
    line.setAttribute("marker-end", "url(#arrow-open)");
  }
  g.appendChild(line);

  const at = (t: number) => ({ x: x1 + (x2 - x1) * t, y: y1 + (y2 - y1) * t });
  if (e.labels.role) {
    const p = at(0.62);
    g.appendChild(text(doc, p.x + 4, p.y - 4, e.labels.role, "edge-role"));
  }
  if (e.labels.inverse_role) {
    const p = at(0.38);
    g.appendChild(text(doc, p.x + 4, p.y - 4, e.labels.inverse_role, "edge-role inverse"));
  }
  if (e.labels.cardinality) {
    const p = at(0.62);
    g.appendChild(text(doc, p.x + 4, p.y + 14, e.labels.cardinality, "edge-cardinality"));
  }
  if (e.kind === "restriction-edge" && e.labels.text) {
    const p = at(0.5);
    g.appendChild(text(doc, p.x + 4, p.y - 6, e.labels.text, "edge-restriction-text"));
  }
  return g;
}

function text(doc: Document, x: number, y: number, content: string, cls: string): SVGTextElement {
  const t = doc.createElementNS(SVG_NS, "text") as SVGTextElement;
  t.setAttribute("x", String(x));
  t.setAttribute("y", String(y));
  t.setAttribute("class", cls);
  t.textContent = content;
  return t;
}

/** Arrowhead definitions shared by all edges. */
export function markerDefs(doc: Document): SVGDefsElement {
  const defs = doc.createElementNS(SVG_NS, "defs") as SVGDefsElement;
  defs.appendChild(marker(doc, "triangle-hollow", "M0,0 L12,5 L0,10 Z", "white", "#333"));
  defs.appendChild(marker(doc, "arrow-open", "M0,0 L10,5 L0,10", "none", "#333"));
  defs.appendChild(marker(doc, "arrow-red", "M0,0 L10,5 L0,10", "none", "#cc2222"));
  return defs;
}

function marker(doc: Document, id: string, path: string, fill: string, stroke: string): SVGMarkerElement {
  const m = doc.createElementNS(SVG_NS, "marker") as SVGMarkerElement;
  m.setAttribute("id", id);
  m.setAttribute("markerWidth", "12");
  m.setAttribute("markerHeight", "10");
  m.setAttribute("refX", "11");
  m.setAttribute("refY", "5");
  m.setAttribute("orient", "auto");
  const p = doc.createElementNS(SVG_NS, "path");
  p.setAttribute("d", path);
  p.setAttribute("fill", fill);
  p.setAttribute("stroke", stroke);
  m.appendChild(p);
  return m;
}
