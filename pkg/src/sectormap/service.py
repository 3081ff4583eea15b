"""HTTP service hosting one interactive session over a layer library.

Endpoints (JSON unless noted): GET /spec, GET /state, POST /state,
POST /hit, POST /reset, GET /render.pbm (PBM P1 bytes). All state
mutations are serialized behind one lock; readers observe a consistent
status/highlight pair. 200 on success, 400 on malformed input, 404 on
unknown paths.
"""

from __future__ import annotations

import json
import logging
import math
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Any
from urllib.parse import urlsplit

from .raster import LayerLibrary, load_library, write_pbm
from .session import SessionState
from .state import format_bits, parse_state

logger = logging.getLogger(__name__)


class SectorMapServer(ThreadingHTTPServer):
    """ThreadingHTTPServer carrying the shared session and its lock."""

    daemon_threads = True

    def __init__(self, address: tuple[str, int], library: LayerLibrary) -> None:
        super().__init__(address, SessionHandler)
        self.session = SessionState(library)
        self.session_lock = threading.Lock()


class SessionHandler(BaseHTTPRequestHandler):
    server: SectorMapServer

    def log_message(self, format: str, *args: Any) -> None:
        logger.debug(format, *args)

    # --- response helpers ---

    def _send(self, status: int, content_type: str, body: bytes) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        # allow the browser UI to call the service from another origin
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()
        self.wfile.write(body)

    def _json(self, payload: dict, status: int = 200) -> None:
        self._send(status, "application/json", json.dumps(payload).encode("utf-8"))

    def _error(self, status: int, message: str) -> None:
        self._json({"error": message}, status)

    def _state_payload(self) -> dict:
        status = self.server.session.status
        return {"state": format_bits(status), "state_int": status.bits}

    def _read_json_body(self) -> dict:
        length = int(self.headers.get("Content-Length", 0))
        raw = self.rfile.read(length) if length else b""
        try:
            body = json.loads(raw.decode("utf-8")) if raw else {}
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise ValueError(f"request body is not valid JSON: {exc}") from exc
        if not isinstance(body, dict):
            raise ValueError("request body must be a JSON object")
        return body

    # --- routes ---

    def do_GET(self) -> None:
        path = urlsplit(self.path).path
        if path == "/spec":
            self._json(self.server.session.spec.to_dict())
        elif path == "/state":
            with self.server.session_lock:
                self._json(self._state_payload())
        elif path == "/render.pbm":
            with self.server.session_lock:
                body = write_pbm(self.server.session.render())
            self._send(200, "application/octet-stream", body)
        else:
            self._error(404, f"unknown path {path}")

    def do_POST(self) -> None:
        path = urlsplit(self.path).path
        if path == "/hit":
            self._handle_hit()
        elif path == "/state":
            self._handle_set_state()
        elif path == "/reset":
            with self.server.session_lock:
                self.server.session.reset()
                self._json(self._state_payload())
        else:
            self._error(404, f"unknown path {path}")

    def do_OPTIONS(self) -> None:
        self._send(204, "text/plain", b"")

    def _handle_hit(self) -> None:
        try:
            body = self._read_json_body()
            x, y = body.get("x"), body.get("y")
            for name, value in (("x", x), ("y", y)):
                if isinstance(value, bool) or not isinstance(value, (int, float)):
                    raise ValueError(f"hit requires numeric {name!r}")
                if not math.isfinite(value):
                    raise ValueError(f"hit coordinate {name!r} must be finite")
        except ValueError as exc:
            self._error(400, str(exc))
            return
        with self.server.session_lock:
            sector = self.server.session.hit(float(x), float(y))
            payload = {"sector": sector, **self._state_payload()}
        self._json(payload)

    def _handle_set_state(self) -> None:
        try:
            body = self._read_json_body()
            text = body.get("state")
            if not isinstance(text, str):
                raise ValueError("state update requires a string 'state'")
            mask = parse_state(text, self.server.session.library.sector_count)
        except ValueError as exc:
            self._error(400, str(exc))
            return
        with self.server.session_lock:
            self.server.session.set_status(mask)
            self._json(self._state_payload())


def create_server(
    library: LayerLibrary, port: int = 0, host: str = "127.0.0.1"
) -> SectorMapServer:
    """Create the service bound to ``host:port`` (port 0 picks a free one)."""
    return SectorMapServer((host, port), library)


def serve(library_dir: str | Path, port: int, host: str = "127.0.0.1") -> None:
    """Load a library directory and serve it until interrupted."""
    library = load_library(library_dir)
    server = create_server(library, port=port, host=host)
    host_shown, bound_port = server.server_address[0], server.server_address[1]
    print(f"serving {library.sector_count}-sector session on http://{host_shown}:{bound_port}")
    try:
        server.serve_forever()
    finally:
        server.server_close()
