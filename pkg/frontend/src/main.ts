import { ApiClient } from "./api.js";
import { App } from "./app.js";
import type { Scope } from "./types.js";

function apiBase(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("api") ?? "http://127.0.0.1:8000";
}

window.addEventListener("DOMContentLoaded", () => {
  const container = document.getElementById("workbench");
  const scopeSelect = document.getElementById("scope") as HTMLSelectElement | null;
  if (!container) return;
  const app = new App(container, new ApiClient(apiBase()));
  void app.start();
  scopeSelect?.addEventListener("change", () => {
    void app.setScope(scopeSelect.value as Scope);
  });
});
