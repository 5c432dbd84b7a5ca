"""Network ingestion and serialization.

Two formats:

* json — ``{"directed": bool, "temporal": bool, "nodes": [{"id","label"}],
  "links": [{"id","source","target","weight","type","time"}]}``. Links
  missing an ``id`` get ``"e<index>"``. Links referencing undeclared
  nodes are an error.
* csv — headerless edge list ``source,target[,weight[,type[,timestamp]]]``.
  The node set is the union of all endpoints; the network is temporal
  iff any row carries a timestamp.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .errors import DanglingEndpoint, EmptyNetwork, ParseError
from .graph import Link, Network, Node

FORMATS = ("json", "csv")


def _as_text(source) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def _parse_time(value, where: str):
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where}: timestamp must be a number, got {value!r}")
    return value


def load_network(source, format: str = "json", *, directed: bool | None = None) -> Network:
    """Parse a byte stream, string, or file object into a Network.

    ``directed`` overrides the format's own flag (csv has none and
    defaults to undirected).
    """
    if format not in FORMATS:
        raise ParseError(f"unknown format {format!r}; expected one of {FORMATS}")
    text = _as_text(source)
    if format == "json":
        net = _load_json(text)
    else:
        net = _load_csv(text)
    if directed is not None and directed != net.directed:
        net = Network(list(net.nodes), list(net.links), directed=directed, temporal=net.temporal)
    if not net.nodes:
        raise EmptyNetwork("network has zero nodes")
    return net


def load_network_file(path: str | Path, format: str | None = None, **kw) -> Network:
    path = Path(path)
    fmt = format or ("csv" if path.suffix.lower() == ".csv" else "json")
    return load_network(path.read_bytes(), fmt, **kw)


def _load_json(text: str) -> Network:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid json: {e}") from None
    if not isinstance(doc, dict):
        raise ParseError("top-level json value must be an object")
    directed = bool(doc.get("directed", False))
    temporal = bool(doc.get("temporal", False))
    nodes = []
    for i, rec in enumerate(doc.get("nodes", [])):
        if not isinstance(rec, dict) or not rec.get("id"):
            raise ParseError(f"nodes[{i}]: missing id")
        nodes.append(Node(id=str(rec["id"]), label=str(rec.get("label") or rec["id"])))
    declared = {n.id for n in nodes}
    links = []
    for i, rec in enumerate(doc.get("links", [])):
        if not isinstance(rec, dict):
            raise ParseError(f"links[{i}]: not an object")
        try:
            src, tgt = str(rec["source"]), str(rec["target"])
        except KeyError as e:
            raise ParseError(f"links[{i}]: missing {e.args[0]}") from None
        if src not in declared or tgt not in declared:
            raise DanglingEndpoint(f"links[{i}]: endpoint not declared in nodes")
        weight = rec.get("weight", 1.0)
        if isinstance(weight, bool) or not isinstance(weight, (int, float)):
            raise ParseError(f"links[{i}]: weight must be a number")
        if weight < 0:
            raise ParseError(f"links[{i}]: weight must be non-negative")
        time = _parse_time(rec.get("time"), f"links[{i}]")
        if time is not None and not temporal:
            raise ParseError(f"links[{i}]: timestamp present but network is not temporal")
        links.append(Link(id=str(rec.get("id") or f"e{i}"), source=src, target=tgt,
                          weight=float(weight), type=str(rec.get("type") or ""), time=time))
    try:
        return Network(nodes, links, directed=directed, temporal=temporal)
    except ValueError as e:
        raise ParseError(str(e)) from None


def _load_csv(text: str) -> Network:
    reader = csv.reader(io.StringIO(text))
    node_order: list[str] = []
    seen: set[str] = set()
    rows = []
    for lineno, row in enumerate(reader, start=1):
        row = [c.strip() for c in row]
        if not row or not any(row):
            continue
        if len(row) < 2:
            raise ParseError(f"line {lineno}: expected source,target[,weight[,type[,time]]]")
        src, tgt = row[0], row[1]
        if not src or not tgt:
            raise ParseError(f"line {lineno}: empty endpoint")
        weight = 1.0
        if len(row) > 2 and row[2]:
            try:
                weight = float(row[2])
            except ValueError:
                raise ParseError(f"line {lineno}: bad weight {row[2]!r}") from None
            if weight < 0:
                raise ParseError(f"line {lineno}: weight must be non-negative")
        ltype = row[3] if len(row) > 3 else ""
        time = None
        if len(row) > 4 and row[4]:
            try:
                time = float(row[4]) if "." in row[4] else int(row[4])
            except ValueError:
                raise ParseError(f"line {lineno}: bad timestamp {row[4]!r}") from None
        for nid in (src, tgt):
            if nid not in seen:
                seen.add(nid)
                node_order.append(nid)
        rows.append((src, tgt, weight, ltype, time))
    temporal = any(r[4] is not None for r in rows)
    nodes = [Node(id=n) for n in node_order]
    links = [Link(id=f"e{i}", source=s, target=t, weight=w, type=ty, time=tm)
             for i, (s, t, w, ty, tm) in enumerate(rows)]
    try:
        return Network(nodes, links, temporal=temporal)
    except ValueError as e:
        raise ParseError(str(e)) from None


def network_to_dict(net: Network) -> dict:
    links = []
    for l in net.links:
        rec = {"id": l.id, "source": l.source, "target": l.target,
               "weight": l.weight, "type": l.type}
        if l.time is not None:
            rec["time"] = l.time
        links.append(rec)
    return {
        "directed": net.directed,
        "temporal": net.temporal,
        "nodes": [{"id": n.id, "label": n.label} for n in net.nodes],
        "links": links,
    }


def serialize_network(net: Network) -> str:
    """Canonical json form; parses back to a field-wise identical Network."""
    return json.dumps(network_to_dict(net), sort_keys=True, separators=(",", ":"))
