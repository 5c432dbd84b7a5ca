"""Stateless json-over-http service exposing the full pipeline.

Routes (all under /api/v1, request and response bodies are json):

* ``POST /networks[?format=json|csv]`` — upload a network, returns its id.
* ``GET  /networks/{id}/views/{viz}`` — mark geometry for one visualization.
* ``POST /networks/{id}/selection`` — resolve a region, mine it bottom-up,
  and return the selector summary, mapping case, and instances.
* ``GET  /networks/{id}/patterns`` — cached top-down mining result.
* ``GET  /networks/{id}/explanations/{instance}?viz=...`` — explanation
  card, data facts, and related instance previews for one instance.
* ``GET  /repository/cards`` — every explanation card.

Network ids are sequential per store, layout seeds derive from the id,
and payloads are serialized canonically, so replaying an upload/request
sequence against a fresh instance reproduces identical bytes.

Errors are ``{"code", "message"}`` with statuses 400/404/409.
"""

from __future__ import annotations

import hashlib
import json
import re
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .errors import (DegenerateRegion, EmptyNetwork, MotiflensError,
                     NotTemporal, ParseError, UnknownInstance, UnknownPair)
from .explain import (classify_mapping, data_facts, format_facts,
                      related_instances, selector_summary)
from .geometry import (MATRIX, NODE_LINK, TIME_ARCS, VIZ_KINDS, MarkGeometry,
                       SelectionRegion, mark_geometry, resolve_selection)
from .graph import ElementSet, Network, close_selection
from .layout import force_layout
from .motifs import BOTTOM_UP, MiningResult, PatternInstance, mine
from .netio import load_network
from .repository import Repository, default_repository
from .seriation import barycenter_order

DEFAULT_CANVAS = {
    NODE_LINK: (1000.0, 700.0),
    MATRIX: (800.0, 800.0),
    TIME_ARCS: (1000.0, 700.0),
}


def _layout_seed(network_id: str) -> int:
    return int.from_bytes(hashlib.sha1(network_id.encode()).digest()[:4], "big")


class _Entry:
    """Per-network cache: layouts, geometries, mining, known instances."""

    def __init__(self, network: Network, network_id: str):
        self.network = network
        self.id = network_id
        self.lock = threading.Lock()
        self.ordering = None
        self.coordinates = None
        self.views: dict[str, MarkGeometry] = {}
        self.mining: MiningResult | None = None
        self.instances: dict[str, PatternInstance] = {}

    def view(self, viz: str) -> MarkGeometry:
        if viz not in VIZ_KINDS:
            raise ValueError(f"unknown visualization {viz!r}")
        with self.lock:
            if viz in self.views:
                return self.views[viz]
            if viz == NODE_LINK:
                if self.coordinates is None:
                    self.coordinates = force_layout(self.network, _layout_seed(self.id))
                geom = mark_geometry(self.network, viz, coordinates=self.coordinates,
                                     canvas=DEFAULT_CANVAS[viz])
            else:
                if self.ordering is None:
                    self.ordering = barycenter_order(self.network)
                geom = mark_geometry(self.network, viz, ordering=self.ordering,
                                     canvas=DEFAULT_CANVAS[viz])
            self.views[viz] = geom
            return geom

    def top_down(self) -> MiningResult:
        with self.lock:
            if self.mining is None:
                self.mining = mine(self.network)
                for inst in self.mining.instances:
                    self.instances[inst.salience_key] = inst
            return self.mining

    def register(self, instances) -> None:
        with self.lock:
            for inst in instances:
                self.instances[inst.salience_key] = inst

    def instance(self, key: str) -> PatternInstance:
        with self.lock:
            if key not in self.instances:
                raise UnknownInstance(f"unknown instance {key!r}")
            return self.instances[key]


class SessionStore:
    """network-id -> network plus lazily computed artifacts."""

    def __init__(self, repository: Repository | None = None):
        self.repository = repository if repository is not None else default_repository()
        self._lock = threading.Lock()
        self._entries: dict[str, _Entry] = {}
        self._counter = 0

    def add(self, network: Network) -> str:
        with self._lock:
            self._counter += 1
            network_id = f"n{self._counter}"
            self._entries[network_id] = _Entry(network, network_id)
            return network_id

    def entry(self, network_id: str) -> _Entry:
        with self._lock:
            if network_id not in self._entries:
                raise KeyError(network_id)
            return self._entries[network_id]

    def ids(self) -> list[str]:
        with self._lock:
            return sorted(self._entries, key=lambda i: int(i[1:]))


# -- request handling --------------------------------------------------------

class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _canonical(payload) -> bytes:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()


def _parse_region(doc: dict) -> SelectionRegion:
    try:
        kind = doc["kind"]
        points = [(float(x), float(y)) for x, y in doc["points"]]
    except (KeyError, TypeError, ValueError):
        raise ApiError(400, "bad-request", "region needs kind and points") from None
    if kind == "rectangle":
        if len(points) != 2:
            raise ApiError(400, "bad-request", "rectangle region needs 2 corner points")
        return SelectionRegion.rectangle(points[0], points[1])
    if kind == "lasso":
        return SelectionRegion.lasso(points)
    raise ApiError(400, "bad-request", f"unknown region kind {kind!r}")


def _instance_preview(inst: PatternInstance) -> dict:
    return {
        "key": inst.salience_key,
        "kind": inst.kind.value,
        "nodes": sorted(inst.elements.node_ids),
        "links": sorted(inst.elements.link_ids),
        "facts": inst.facts,
    }


class Api:
    """Http-agnostic endpoint logic, shared by the handler and tests."""

    def __init__(self, store: SessionStore):
        self.store = store

    def upload(self, body: bytes, fmt: str) -> dict:
        if fmt not in ("json", "csv"):
            raise ApiError(400, "bad-request", f"unknown format {fmt!r}")
        try:
            net = load_network(body, fmt)
        except (ParseError, EmptyNetwork) as e:
            raise ApiError(400, _error_code(e), str(e)) from None
        network_id = self.store.add(net)
        return {"id": network_id,
                "summary": {"nodes": len(net.nodes), "links": len(net.links),
                            "directed": net.directed, "temporal": net.temporal}}

    def _entry(self, network_id: str) -> _Entry:
        try:
            return self.store.entry(network_id)
        except KeyError:
            raise ApiError(404, "unknown-network", f"unknown network {network_id!r}") from None

    def view(self, network_id: str, viz: str) -> dict:
        entry = self._entry(network_id)
        try:
            return entry.view(viz).to_dict()
        except NotTemporal as e:
            raise ApiError(409, "not-temporal", str(e)) from None
        except ValueError as e:
            raise ApiError(400, "bad-request", str(e)) from None

    def patterns(self, network_id: str) -> dict:
        return self._entry(network_id).top_down().to_dict()

    def selection(self, network_id: str, doc: dict) -> dict:
        entry = self._entry(network_id)
        viz = doc.get("viz")
        if viz not in VIZ_KINDS:
            raise ApiError(400, "bad-request", f"selection needs viz, one of {VIZ_KINDS}")
        region = _parse_region(doc.get("region") or {})
        try:
            geom = entry.view(viz)
            raw = resolve_selection(geom, region)
        except NotTemporal as e:
            raise ApiError(409, "not-temporal", str(e)) from None
        except DegenerateRegion as e:
            raise ApiError(400, "degenerate-region", str(e)) from None
        subgraph = close_selection(entry.network, raw)
        result = mine(subgraph, BOTTOM_UP)
        entry.register(result.instances)
        summary = selector_summary(result)
        return {
            "summary": summary.to_dict(),
            "mapping": classify_mapping(result).value,
            "instances": [_instance_preview(i) for i in result.instances],
            "selection": {"nodes": sorted(raw.node_ids), "links": sorted(raw.link_ids)},
        }

    def explanation(self, network_id: str, instance_key: str, viz: str) -> dict:
        entry = self._entry(network_id)
        if viz not in VIZ_KINDS:
            raise ApiError(400, "bad-request", f"explanation needs viz, one of {VIZ_KINDS}")
        try:
            inst = entry.instance(instance_key)
        except UnknownInstance as e:
            raise ApiError(404, "unknown-instance", str(e)) from None
        try:
            card = self.store.repository.card(inst.kind, viz)
        except UnknownPair as e:
            raise ApiError(404, "unknown-pair", str(e)) from None
        facts = data_facts(inst, entry.network)
        related = related_instances(inst.kind, entry.network, exclude=inst,
                                    mining=entry.top_down())
        return {
            "card": card.to_dict(),
            "facts": facts,
            "facts_text": format_facts(card.facts_template, facts),
            "instance": _instance_preview(inst),
            "related": [_instance_preview(i) for i in related],
        }

    def cards(self) -> list[dict]:
        return [c.to_dict() for c in self.store.repository.all_cards()]


def _error_code(err: MotiflensError) -> str:
    name = type(err).__name__
    return re.sub(r"(?<!^)(?=[A-Z])", "-", name).lower()


_ROUTES = [
    ("POST", re.compile(r"^/api/v1/networks$"), "upload"),
    ("GET", re.compile(r"^/api/v1/networks/([^/]+)/views/([^/]+)$"), "view"),
    ("POST", re.compile(r"^/api/v1/networks/([^/]+)/selection$"), "selection"),
    ("GET", re.compile(r"^/api/v1/networks/([^/]+)/patterns$"), "patterns"),
    ("GET", re.compile(r"^/api/v1/networks/([^/]+)/explanations/([^/]+)$"), "explanation"),
    ("GET", re.compile(r"^/api/v1/repository/cards$"), "cards"),
]


def make_handler(api: Api):
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, *args):  # keep test output clean
            pass

        def _send(self, status: int, payload) -> None:
            body = _canonical(payload)
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def do_OPTIONS(self):
            self.send_response(204)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Content-Length", "0")
            self.end_headers()

        def _dispatch(self, method: str) -> None:
            path, _, query = self.path.partition("?")
            params = dict(p.split("=", 1) for p in query.split("&") if "=" in p)
            try:
                for verb, pattern, name in _ROUTES:
                    m = pattern.match(path)
                    if not m:
                        continue
                    if verb != method:
                        raise ApiError(405, "method-not-allowed",
                                       f"{method} not allowed on {path}")
                    self._send(200, self._call(name, m.groups(), params))
                    return
                raise ApiError(404, "not-found", f"no route for {path}")
            except ApiError as e:
                self._send(e.status, {"code": e.code, "message": e.message})

        def _call(self, name: str, groups: tuple, params: dict):
            if name == "upload":
                return api.upload(self._body(), params.get("format", "json"))
            if name == "view":
                return api.view(groups[0], groups[1])
            if name == "selection":
                return api.selection(groups[0], self._json_body())
            if name == "patterns":
                return api.patterns(groups[0])
            if name == "explanation":
                return api.explanation(groups[0], groups[1], params.get("viz", ""))
            if name == "cards":
                return api.cards()
            raise ApiError(500, "internal", "unroutable")

        def _body(self) -> bytes:
            length = int(self.headers.get("Content-Length") or 0)
            return self.rfile.read(length)

        def _json_body(self) -> dict:
            try:
                doc = json.loads(self._body() or b"{}")
            except json.JSONDecodeError:
                raise ApiError(400, "bad-request", "request body is not valid json") from None
            if not isinstance(doc, dict):
                raise ApiError(400, "bad-request", "request body must be a json object")
            return doc

        def do_GET(self):
            self._dispatch("GET")

        def do_POST(self):
            self._dispatch("POST")

    return Handler


def make_server(host: str = "127.0.0.1", port: int = 0,
                store: SessionStore | None = None) -> ThreadingHTTPServer:
    """Build (but do not start) the http server; port 0 binds ephemeral."""
    api = Api(store if store is not None else SessionStore())
    server = ThreadingHTTPServer((host, port), make_handler(api))
    server.api = api  # handy for tests and the cli
    return server


def serve(host: str = "127.0.0.1", port: int = 8787,
          store: SessionStore | None = None) -> None:
    server = make_server(host, port, store)
    print(f"motiflens service listening on http://{host}:{server.server_address[1]}/api/v1")
    try:
        server.serve_forever()
    finally:
        server.server_close()
