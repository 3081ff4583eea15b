"""Small urllib helpers for driving a live service instance in tests."""

from __future__ import annotations

import json
import urllib.error
import urllib.request


def base_url(srv) -> str:
    host, port = srv.server_address[0], srv.server_address[1]
    return f"http://{host}:{port}"


def request(srv, method: str, path: str, payload=None, raw_body: bytes | None = None):
    """Return (status, headers, body bytes) without raising on 4xx."""
    data = raw_body
    headers = {}
    if payload is not None:
        data = json.dumps(payload).encode("utf-8")
    if data is not None:
        headers["Content-Type"] = "application/json"
    req = urllib.request.Request(
        base_url(srv) + path, data=data, headers=headers, method=method
    )
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, dict(resp.headers), resp.read()
    except urllib.error.HTTPError as err:
        return err.code, dict(err.headers), err.read()


def get_json(srv, path):
    status, _, body = request(srv, "GET", path)
    return status, json.loads(body)


def post_json(srv, path, payload=None, raw_body=None):
    status, _, body = request(srv, "POST", path, payload=payload, raw_body=raw_body)
    return status, json.loads(body)
