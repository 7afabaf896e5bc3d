"""Stateless scoring service over a shared immutable engine.

Endpoints (also available unversioned):

* ``POST /v1/score``  — body {"password": ..., optional "adversary",
  "protection", "t_seconds", "year"}; responds with the same
  machine-readable record the CLI emits, byte for byte.
* ``GET /v1/config``  — redacted engine configuration and presets.
* ``GET /v1/health``  — plain "ok".

Passwords travel only in request bodies and are never logged or persisted;
error responses never echo request content. CORS is permissive so a
browser meter served from elsewhere can call the API.
"""

from __future__ import annotations

import json
import logging
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .engine import Engine, canonical_record_json
from .errors import ValidationError

log = logging.getLogger("rulespace.service")

_MAX_BODY = 1 << 20


class ScoreRequestHandler(BaseHTTPRequestHandler):
    engine: Engine  # set by make_server on the handler subclass

    protocol_version = "HTTP/1.1"

    # -- plumbing -------------------------------------------------------------
    def log_message(self, fmt: str, *args) -> None:
        # default handler prints to stderr including the request line; the
        # request line never contains a password (body-only transport), but
        # route through logging so tests can assert content
        log.info("%s " + fmt, self.address_string(), *args)

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, payload: dict | str) -> None:
        text = payload if isinstance(payload, str) else canonical_record_json(payload)
        self._send(status, text.encode("utf-8"), "application/json")

    def _send_error_record(self, status: int, error: dict) -> None:
        self._send_json(status, {"error": error})

    @staticmethod
    def _route(path: str) -> str:
        path = path.split("?", 1)[0].rstrip("/")
        if path.startswith("/v1/"):
            path = path[3:]
        return path or "/"

    # -- methods ----------------------------------------------------------------
    def do_OPTIONS(self) -> None:  # CORS preflight
        self._send(204, b"", "text/plain; charset=utf-8")

    def do_GET(self) -> None:
        route = self._route(self.path)
        if route == "/health":
            self._send(200, b"ok", "text/plain; charset=utf-8")
        elif route == "/config":
            self._send_json(200, self.engine.redacted_config())
        else:
            self._send_error_record(404, {"code": "not_found", "message": "no such endpoint"})

    def do_POST(self) -> None:
        route = self._route(self.path)
        if route != "/score":
            self._send_error_record(404, {"code": "not_found", "message": "no such endpoint"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
        except ValueError:
            length = -1
        if length < 0 or length > _MAX_BODY:
            self._send_error_record(400, {"code": "bad_request", "message": "bad content length"})
            return
        try:
            payload = json.loads(self.rfile.read(length).decode("utf-8"))
            if not isinstance(payload, dict):
                raise ValueError("body must be a JSON object")
        except (ValueError, UnicodeDecodeError):
            self._send_error_record(400, {"code": "bad_request", "message": "body must be JSON"})
            return

        password = payload.get("password")
        if not isinstance(password, str):
            self._send_error_record(
                400, {"code": "validation", "message": "missing string field 'password'"}
            )
            return
        try:
            result = self.engine.score(
                password,
                adversary_id=payload.get("adversary"),
                protection_id=payload.get("protection"),
                threshold_seconds=payload.get("t_seconds"),
                year=payload.get("year"),
            )
        except ValidationError as exc:
            self._send_error_record(400, exc.to_record())
            return
        except Exception:
            # opaque by design: no input material in the error path
            log.exception("scoring failed")
            self._send_error_record(500, {"code": "internal", "message": "internal error"})
            return
        self._send_json(200, result.to_record())


def make_server(engine: Engine, host: str = "127.0.0.1", port: int = 0) -> ThreadingHTTPServer:
    handler = type("BoundScoreRequestHandler", (ScoreRequestHandler,), {"engine": engine})
    return ThreadingHTTPServer((host, port), handler)


def serve_forever(engine: Engine, bind: str = "127.0.0.1:8750") -> None:
    host, _, port_text = bind.rpartition(":")
    if not host or not port_text.isdigit():
        raise ValidationError("bind address must look like HOST:PORT", field="bind")
    server = make_server(engine, host=host, port=int(port_text))
    log.info("serving on http://%s:%d", *server.server_address[:2])
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
