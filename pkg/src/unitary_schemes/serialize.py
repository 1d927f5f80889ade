"""Deterministic text formats: scheme documents and relation matrices.

Documents are line-oriented, one scheme per file, with the intersection
tensor stored as sparse (h, i, j, value) quadruples in lexicographic order.
Rendering the parse of a rendered document reproduces it byte for byte.

The relation-matrix format is the small-scheme exchange layout: a header
line "points rank" followed by one whitespace-separated integer row per
point, entry (x, y) being the sequential relation index of that pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chartable import CharTable
from .eisenstein import parse as parse_entry
from .eisenstein import render as render_entry
from .scheme import SchemeDescriptor, is_commutative

FORMAT_LINE = "unitary-scheme-document 1"


@dataclass(frozen=True, eq=False)
class SchemeDocument:
    n: int
    q: int
    rank: int
    order: int
    mode: str
    seed: int
    valencies: tuple[int, ...] | None = None
    conj_map: tuple[int, ...] | None = None
    tensor_entries: tuple[tuple[int, int, int, int], ...] | None = None
    commutative: bool | None = None
    witness: tuple[int, int, int] | None = None
    chartable: tuple[tuple[str, ...], ...] | None = None
    multiplicities: tuple[int, ...] | None = None
    fusion: str | None = None


def document_from_descriptor(sd: SchemeDescriptor, seed: int = 0) -> SchemeDocument:
    entries = []
    for h in range(sd.rank):
        for i in range(sd.rank):
            for j in range(sd.rank):
                v = sd.tensor[h][i][j]
                if v:
                    entries.append((h, i, j, v))
    commutative, witness = is_commutative(sd)
    return SchemeDocument(
        n=sd.n, q=sd.q, rank=sd.rank, order=sd.order, mode=sd.mode, seed=seed,
        valencies=sd.valencies, conj_map=sd.conj_map,
        tensor_entries=tuple(entries), commutative=commutative, witness=witness,
    )


def document_from_chartable(ct: CharTable, n: int, fusion: str | None = None,
                            seed: int = 0) -> SchemeDocument:
    rendered = tuple(tuple(render_entry(x) for x in row) for row in ct.entries)
    return SchemeDocument(
        n=n, q=2, rank=ct.size, order=ct.order, mode="closed", seed=seed,
        valencies=ct.valencies, chartable=rendered,
        multiplicities=ct.multiplicities, fusion=fusion,
    )


def chartable_from_document(doc: SchemeDocument) -> CharTable:
    if doc.chartable is None or doc.multiplicities is None:
        raise ValueError("document carries no character table")
    entries = tuple(tuple(parse_entry(x) for x in row) for row in doc.chartable)
    if doc.valencies is None:
        raise ValueError("document carries no valencies")
    return CharTable(entries=entries, multiplicities=doc.multiplicities,
                     valencies=doc.valencies, order=doc.order)


def render_document(doc: SchemeDocument) -> str:
    lines = [FORMAT_LINE]
    for key in ("n", "q", "rank", "order"):
        lines.append(f"{key} {getattr(doc, key)}")
    lines.append(f"mode {doc.mode}")
    lines.append(f"seed {doc.seed}")
    if doc.valencies is not None:
        lines.append("valencies " + " ".join(map(str, doc.valencies)))
    if doc.conj_map is not None:
        lines.append("conjugation " + " ".join(map(str, doc.conj_map)))
    if doc.tensor_entries is not None:
        lines.append(f"tensor {len(doc.tensor_entries)}")
        for quad in doc.tensor_entries:
            lines.append(" ".join(map(str, quad)))
    if doc.commutative is not None:
        lines.append(f"commutative {'true' if doc.commutative else 'false'}")
        if doc.witness is not None:
            lines.append("witness " + " ".join(map(str, doc.witness)))
    if doc.fusion is not None:
        lines.append(f"fusion {doc.fusion}")
    if doc.chartable is not None:
        lines.append(f"chartable {len(doc.chartable)}")
        for row in doc.chartable:
            lines.append(" ".join(row))
    if doc.multiplicities is not None:
        lines.append("multiplicities " + " ".join(map(str, doc.multiplicities)))
    lines.append("end")
    return "\n".join(lines) + "\n"


def parse_document(text: str) -> SchemeDocument:
    lines = text.splitlines()
    if not lines or lines[0] != FORMAT_LINE:
        raise ValueError("not a scheme document")
    fields: dict = {}
    pos = 1
    while pos < len(lines):
        line = lines[pos]
        pos += 1
        if line == "end":
            break
        key, _, rest = line.partition(" ")
        if key in ("n", "q", "rank", "order", "seed"):
            fields[key] = int(rest)
        elif key == "mode":
            fields["mode"] = rest
        elif key == "valencies":
            fields["valencies"] = tuple(int(x) for x in rest.split())
        elif key == "conjugation":
            fields["conj_map"] = tuple(int(x) for x in rest.split())
        elif key == "tensor":
            count = int(rest)
            quads = []
            for _ in range(count):
                quads.append(tuple(int(x) for x in lines[pos].split()))
                pos += 1
            fields["tensor_entries"] = tuple(quads)
        elif key == "commutative":
            fields["commutative"] = rest == "true"
        elif key == "witness":
            fields["witness"] = tuple(int(x) for x in rest.split())
        elif key == "fusion":
            fields["fusion"] = rest
        elif key == "chartable":
            count = int(rest)
            rows = []
            for _ in range(count):
                rows.append(tuple(lines[pos].split()))
                pos += 1
            fields["chartable"] = tuple(rows)
        elif key == "multiplicities":
            fields["multiplicities"] = tuple(int(x) for x in rest.split())
        else:
            raise ValueError(f"unknown document line {line!r}")
    else:
        raise ValueError("document has no end line")
    return SchemeDocument(**fields)


def tensor_csv(doc: SchemeDocument) -> str:
    if doc.tensor_entries is None:
        raise ValueError("document carries no tensor")
    lines = ["h,i,j,value"]
    lines.extend(",".join(map(str, quad)) for quad in doc.tensor_entries)
    return "\n".join(lines) + "\n"


def chartable_csv(doc: SchemeDocument) -> str:
    if doc.chartable is None:
        raise ValueError("document carries no character table")
    lines = []
    for row, m in zip(doc.chartable, doc.multiplicities):
        lines.append(",".join(row) + f",{m}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# relation-matrix exchange format


def render_relation_matrix(matrix: np.ndarray, rank: int) -> str:
    matrix = np.asarray(matrix)
    count = matrix.shape[0]
    lines = [f"{count} {rank}"]
    for row in matrix:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_relation_matrix(text: str) -> tuple[np.ndarray, int]:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty relation-matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError("header must be 'points rank'")
    count, rank = int(header[0]), int(header[1])
    if len(lines) != count + 1:
        raise ValueError(f"expected {count} matrix rows, found {len(lines) - 1}")
    matrix = np.array([[int(x) for x in line.split()] for line in lines[1:]],
                      dtype=np.int64)
    if matrix.shape != (count, count):
        raise ValueError("relation matrix is not square")
    if matrix.min() < 0 or matrix.max() >= rank:
        raise ValueError("relation indices exceed the declared rank")
    return matrix, rank
