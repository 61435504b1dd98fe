export type Scope = "direct" | "referencing" | "inferred";

export interface DiagramElement {
  id: string;
  kind: string;
  owner: string | null;
  labels: Record<string, string>;
  x: number;
  y: number;
  w: number;
  h: number;
  source: string | null;
  target: string | null;
}

export interface DiagramModel {
  elements: DiagramElement[];
  element_axioms: Record<string, string[]>;
}

export interface SentenceJson {
  text: string;
  axiom_ids: string[];
  inferred: boolean;
  fallback: boolean;
}

export interface VerbalizationResponse {
  element: string;
  scope: Scope;
  sentences: SentenceJson[];
}

export interface LoadSummary {
  entities: number;
  axioms: number;
  elements: number;
  inferred: number;
  diagnostics: string[];
}
