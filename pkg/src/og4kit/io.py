"""Pair documents (JSON), DOT export and CSV census tables."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .errors import DocumentError
from .families import FamilySpec
from .graphcore import OrientedGraph, to_dot
from .ogpair import OrientedPair
from .permgroup import PermGroup

FORMAT_VERSION = 1
CENSUS_COLUMNS = ("family", "r", "s", "subgroup-id", "length", "oriented", "maximal")


@dataclass
class PairDocument:
    n: int
    generators: list
    arcs: list
    family: FamilySpec | None = None
    labels: list | None = None
    version: int = FORMAT_VERSION

    @classmethod
    def from_pair(cls, pair: OrientedPair, family: FamilySpec | None = None,
                  labels: list | None = None) -> "PairDocument":
        return cls(
            n=pair.n,
            generators=[list(g) for g in pair.group.gens],
            arcs=[list(a) for a in pair.graph.sorted_arcs],
            family=family,
            labels=labels,
        )

    def to_dict(self) -> dict:
        d = {"version": self.version, "n": self.n, "generators": self.generators,
             "arcs": self.arcs}
        if self.family is not None:
            d["family"] = self.family.to_dict()
        if self.labels is not None:
            d["labels"] = self.labels
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"

    def to_pair(self) -> OrientedPair:
        try:
            graph = OrientedGraph(self.n, frozenset(tuple(a) for a in self.arcs))
        except ValueError as exc:
            raise DocumentError(str(exc), "arcs") from None
        return OrientedPair(graph, PermGroup([tuple(g) for g in self.generators], self.n))


def _int(value, where: str, lo: int = 0, hi: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"expected an integer, got {value!r}", where)
    if value < lo or (hi is not None and value >= hi):
        raise DocumentError(f"{value} out of range", where)
    return value


def _list(value, where: str) -> list:
    if not isinstance(value, list):
        raise DocumentError(f"expected a list, got {type(value).__name__}", where)
    return value


def parse_document(data: dict) -> PairDocument:
    """Validate a decoded document; errors name the offending field."""
    if not isinstance(data, dict):
        raise DocumentError("top level must be an object", "$")
    for key in ("version", "n", "generators", "arcs"):
        if key not in data:
            raise DocumentError("missing field", key)
    version = _int(data["version"], "version")
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported version {version}", "version")
    n = _int(data["n"], "n", lo=1)
    gens = []
    for i, g in enumerate(_list(data["generators"], "generators")):
        where = f"generators[{i}]"
        g = _list(g, where)
        if len(g) != n:
            raise DocumentError(f"length {len(g)}, expected {n}", where)
        img = [_int(x, f"{where}[{k}]", 0, n) for k, x in enumerate(g)]
        if len(set(img)) != n:
            raise DocumentError("not a permutation", where)
        gens.append(img)
    arcs = []
    seen = set()
    for i, a in enumerate(_list(data["arcs"], "arcs")):
        where = f"arcs[{i}]"
        a = _list(a, where)
        if len(a) != 2:
            raise DocumentError("an arc has two ends", where)
        u, v = (_int(x, f"{where}[{k}]", 0, n) for k, x in enumerate(a))
        if u == v:
            raise DocumentError("loop", where)
        if frozenset((u, v)) in seen:
            raise DocumentError("repeated edge", where)
        seen.add(frozenset((u, v)))
        arcs.append([u, v])
    family = None
    if data.get("family") is not None:
        try:
            family = FamilySpec.from_dict(data["family"])
        except Exception as exc:
            raise DocumentError(str(exc), "family") from None
    labels = data.get("labels")
    if labels is not None:
        labels = _list(labels, "labels")
        if len(labels) != n or not all(isinstance(x, str) for x in labels):
            raise DocumentError(f"expected {n} strings", "labels")
    return PairDocument(n, gens, arcs, family, labels, version)


def loads(text: str) -> PairDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return parse_document(data)


def read_document(path) -> PairDocument:
    return loads(Path(path).read_text(encoding="utf-8"))


def read_pair(path) -> OrientedPair:
    return read_document(path).to_pair()


def write_document(doc: PairDocument, path) -> None:
    Path(path).write_text(doc.dumps(), encoding="utf-8")


def write_pair(pair: OrientedPair, path, family: FamilySpec | None = None,
               labels: list | None = None) -> PairDocument:
    doc = PairDocument.from_pair(pair, family, labels)
    write_document(doc, path)
    return doc


def pair_dot(doc: PairDocument, name: str = "G") -> str:
    return to_dot(doc.to_pair().graph, doc.labels, name)


def census_csv(rows: Iterable, family: str = "", r="", s="") -> str:
    """Census rows as CSV; ``subgroup-id`` indexes the sorted normal-subgroup list."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CENSUS_COLUMNS)
    for row in rows:
        w.writerow([family, r, s, row.index, row.length, int(row.oriented), int(row.maximal)])
    return buf.getvalue()
