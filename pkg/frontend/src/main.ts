// Page bootstrap: wire the DOM to the view. The service URL defaults to
// the usual local port and can be overridden with ?service=http://host:port.

import { ServiceClient } from "./api.js";
import { CanvasDisplay } from "./draw.js";
import { ClientView } from "./view.js";

function element<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) {
    throw new Error(`missing element #${id}`);
  }
  return el as T;
}

async function start(): Promise<void> {
  const serviceUrl =
    new URLSearchParams(window.location.search).get("service") ??
    "http://127.0.0.1:8080";
  const canvas = element<HTMLCanvasElement>("partition");
  const display = new CanvasDisplay(
    canvas,
    element("state"),
    element("count"),
    element("feedback"),
    element("error"),
  );

  let view: ClientView;
  try {
    view = await ClientView.connect(new ServiceClient(serviceUrl), display);
  } catch (err) {
    display.showError(
      `cannot reach the service at ${serviceUrl}: ` +
        `${err instanceof Error ? err.message : err}. ` +
        "Start it with: sectormap serve --lib <dir> --port 8080",
    );
    return;
  }

  canvas.addEventListener("click", (event) => {
    const rect = canvas.getBoundingClientRect();
    const px = ((event.clientX - rect.left) * canvas.width) / rect.width;
    const py = ((event.clientY - rect.top) * canvas.height) / rect.height;
    void view.click(px, py);
  });

  const surface = (err: unknown) => {
    display.showError(
      `request failed: ${err instanceof Error ? err.message : err}`,
    );
  };
  element("reset").addEventListener("click", () => {
    void view.reset().catch(surface);
  });
  element("compare").addEventListener("click", () => {
    void view.compareWithServer().catch(surface);
  });

  const stateInput = element<HTMLInputElement>("state-input");
  element("apply-state").addEventListener("click", () => {
    void view.setState(stateInput.value.trim()).catch((err: unknown) => {
      display.showError(
        `state rejected: ${err instanceof Error ? err.message : err}`,
      );
    });
  });
}

void start();
