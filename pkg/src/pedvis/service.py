"""Read-only HTTP API over a loaded dataset, for the companion UI.

All endpoints are GET and return JSON (``/healthz`` returns plain text).
The dataset is immutable; layouts are computed lazily per family and
memoized under a lock, so repeated identical requests return identical
bytes whether the cache is cold or warm.  Every response carries
permissive cross-origin headers so a UI served elsewhere can call in.
"""

from __future__ import annotations

import logging
import mimetypes
import os
import threading
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, unquote, urlparse

from . import analytics, jsonio
from .analytics import Scope
from .config import AppConfig
from .glyphs import build_dotplots
from .ingest import Dataset
from .layout import RadialLayout, compute_layout, layout_to_json

log = logging.getLogger("pedvis.service")


class _HttpError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


@dataclass
class ServiceState:
    """Immutable dataset plus pure memo caches (safe to share)."""

    dataset: Dataset
    config: AppConfig
    ui_dir: str | None = None
    _lock: threading.Lock = field(default_factory=threading.Lock)
    _layouts: dict[tuple[str, str], RadialLayout] = field(default_factory=dict)
    _dotplots_json: str | None = None

    def graph(self, family_id: str):
        graph = self.dataset.families.get(family_id)
        if graph is None:
            raise _HttpError(404, f"unknown family {family_id!r}")
        return graph

    def layout_for(self, family_id: str) -> RadialLayout:
        graph = self.graph(family_id)
        key = (family_id, self.config.layout.cache_key())
        with self._lock:
            cached = self._layouts.get(key)
        if cached is not None:
            return cached
        layout = compute_layout(
            graph, self.config.layout, disease_count=self.dataset.disease_count
        )
        with self._lock:
            return self._layouts.setdefault(key, layout)

    def layout_json(self, family_id: str) -> str:
        return jsonio.dumps(layout_to_json(self.layout_for(family_id)))

    def dotplots_json_value(self) -> list:
        return [
            {
                "disease_index": s.disease_index,
                "disease_name": s.disease_name,
                "dots": [
                    {
                        "person_id": d.person_id,
                        "family_id": d.family_id,
                        "age_at_diagnosis": d.age_at_diagnosis,
                    }
                    for d in s.dots
                ],
            }
            for s in build_dotplots(self.dataset)
        ]

    def dotplots_json(self) -> str:
        with self._lock:
            if self._dotplots_json is None:
                self._dotplots_json = jsonio.dumps(self.dotplots_json_value())
            return self._dotplots_json


def _person_in(graph, person_id: str, label: str) -> str:
    if person_id not in graph.persons:
        raise _HttpError(404, f"unknown person {person_id!r} ({label})")
    return person_id


class ApiHandler(BaseHTTPRequestHandler):
    server_version = "pedvis"
    protocol_version = "HTTP/1.1"
    state: ServiceState  # set by make_server on the subclass

    # --- plumbing -------------------------------------------------------

    def log_message(self, fmt: str, *args) -> None:
        log.debug("%s - %s", self.address_string(), fmt % args)

    def _cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def _reply(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self._cors()
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _json(self, status: int, body: str) -> None:
        self._reply(status, body.encode("utf-8"), "application/json; charset=utf-8")

    def _error(self, status: int, message: str) -> None:
        self._json(status, jsonio.dumps({"error": message}))

    def _params(self) -> dict[str, str]:
        parsed = parse_qs(urlparse(self.path).query, keep_blank_values=True)
        out = {}
        for key, values in parsed.items():
            if len(values) != 1:
                raise _HttpError(400, f"parameter {key!r} given {len(values)} times")
            out[key] = values[0]
        return out

    def _require(self, params: dict[str, str], name: str) -> str:
        value = params.get(name, "")
        if not value:
            raise _HttpError(400, f"missing parameter {name!r}")
        return value

    # --- request handling -----------------------------------------------

    def do_OPTIONS(self) -> None:  # noqa: N802 (http.server naming)
        self.send_response(204)
        self._cors()
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:  # noqa: N802
        try:
            self._route(urlparse(self.path).path)
        except _HttpError as exc:
            self._error(exc.status, exc.message)
        except BrokenPipeError:  # client went away; nothing to answer
            pass

    def _route(self, path: str) -> None:
        state = self.state
        if path == "/healthz":
            self._reply(200, b"ok", "text/plain; charset=utf-8")
            return
        if path == "/api/families":
            body = jsonio.dumps(
                [
                    {
                        "family_id": fid,
                        "person_count": len(g.persons),
                        "suicide_count": g.suicide_count(),
                    }
                    for fid, g in sorted(state.dataset.families.items())
                ]
            )
            self._json(200, body)
            return
        parts = [unquote(p) for p in path.split("/")]
        if len(parts) == 5 and parts[1:3] == ["api", "families"] and parts[4] == "layout":
            self._json(200, state.layout_json(parts[3]))
            return
        if path == "/api/compare":
            params = self._params()
            left = self._require(params, "left")
            right = self._require(params, "right")
            body = (
                '{"left":' + state.layout_json(left)
                + ',"right":' + state.layout_json(right)
                + ',"dotplots":' + state.dotplots_json()
                + ',"palette":' + jsonio.dumps(state.config.render.palette.to_json())
                + "}"
            )
            self._json(200, body)
            return
        if path == "/api/dotplots":
            self._json(200, state.dotplots_json())
            return
        if path == "/api/analytics/lca":
            params = self._params()
            graph = state.graph(self._require(params, "family"))
            a = _person_in(graph, self._require(params, "a"), "a")
            b = _person_in(graph, self._require(params, "b"), "b")
            self._json(
                200, jsonio.dumps(sorted(analytics.lowest_common_ancestors(graph, a, b)))
            )
            return
        if path == "/api/analytics/lineages":
            params = self._params()
            graph = state.graph(self._require(params, "family"))
            chains = [
                {
                    "persons": list(chain.persons),
                    "shared_diagnoses": sorted(chain.shared_diagnoses),
                }
                for chain in analytics.suicide_lineages(graph)
            ]
            self._json(200, jsonio.dumps(chains))
            return
        if path == "/api/analytics/cooccurrence":
            params = self._params()
            scope_raw = params.get("scope", "suicide")
            try:
                scope = Scope(scope_raw)
            except ValueError:
                raise _HttpError(400, f"scope {scope_raw!r} not one of suicide/all") from None
            body = jsonio.dumps(
                {
                    "scope": scope.value,
                    "disease_names": list(state.dataset.disease_names),
                    "matrix": analytics.diagnosis_cooccurrence(state.dataset, scope),
                }
            )
            self._json(200, body)
            return
        if path == "/api/analytics/isolated":
            params = self._params()
            graph = state.graph(self._require(params, "family"))
            raw_min = params.get("min", "5")
            try:
                minimum = int(raw_min)
                if minimum < 1:
                    raise ValueError
            except ValueError:
                raise _HttpError(400, f"min {raw_min!r} is not a positive integer") from None
            findings = [
                {
                    "person_id": f.person_id,
                    "diagnosis_count": f.diagnosis_count,
                    "generation": f.generation,
                    "peer_alive_fraction": f.peer_alive_fraction,
                    "context_alive_fraction": f.context_alive_fraction,
                }
                for f in analytics.isolated_burden(graph, minimum)
            ]
            self._json(200, jsonio.dumps(findings))
            return
        if not path.startswith("/api/") and self.state.ui_dir is not None:
            self._serve_static(path)
            return
        raise _HttpError(404, f"no such endpoint {path!r}")

    def _serve_static(self, path: str) -> None:
        root = os.path.realpath(self.state.ui_dir)
        relative = unquote(path).lstrip("/") or "index.html"
        target = os.path.realpath(os.path.join(root, relative))
        if target != root and not target.startswith(root + os.sep):
            raise _HttpError(404, "not found")
        if os.path.isdir(target):
            target = os.path.join(target, "index.html")
        if not os.path.isfile(target):
            raise _HttpError(404, "not found")
        ctype = mimetypes.guess_type(target)[0] or "application/octet-stream"
        with open(target, "rb") as fh:
            self._reply(200, fh.read(), ctype)


def make_server(
    dataset: Dataset,
    config: AppConfig,
    port: int,
    host: str = "127.0.0.1",
    ui_dir: str | None = None,
) -> ThreadingHTTPServer:
    """Build (but do not start) the HTTP server; port 0 picks a free port."""
    state = ServiceState(dataset=dataset, config=config, ui_dir=ui_dir)
    handler = type("BoundApiHandler", (ApiHandler,), {"state": state})
    server = ThreadingHTTPServer((host, port), handler)
    server.daemon_threads = True
    return server
