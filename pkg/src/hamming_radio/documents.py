"""File formats for orderings and instruction matrices.

Canonical text format: a header line ``spec: 3^4 x 4^7`` followed by one line
per row of space-separated 1-based coordinates.  A JSON object with "spec",
"rows" and optional "metadata" keys carries the same payload.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import DocumentError, RadioGraphError
from .graphs import GraphSpec, make_graph_spec
from .instructions import InstructionGenerator, OrderGenerator, make_order_generator
from .perms import Permutation, identity
from .verify import Ordering

_FACTOR_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_spec_string(text: str) -> GraphSpec:
    """Parse '3^4x4^7' (whitespace and case of the x separator are ignored)."""
    parts = re.split(r"[xX]", text.strip())
    factors = []
    for part in parts:
        part = part.strip().replace(" ", "")
        m = _FACTOR_RE.match(part)
        if not m:
            raise DocumentError(f"cannot parse factor {part!r} in spec {text!r}")
        factors.append((int(m.group(1)), int(m.group(2) or 1)))
    try:
        return make_graph_spec(factors)
    except RadioGraphError as exc:
        raise DocumentError(str(exc)) from exc


def format_spec_string(spec: GraphSpec) -> str:
    return " x ".join(f"{f.size}^{f.copies}" for f in spec.factors)


@dataclass
class OrderingDocument:
    spec: GraphSpec
    rows: tuple[tuple[int, ...], ...]
    metadata: dict = field(default_factory=dict)

    def to_ordering(self) -> Ordering:
        try:
            return Ordering(self.spec, self.rows)
        except RadioGraphError as exc:
            raise DocumentError(str(exc)) from exc

    @classmethod
    def from_ordering(cls, ordering: Ordering, metadata: dict | None = None) -> "OrderingDocument":
        return cls(ordering.spec, ordering.rows, dict(metadata or {}))


def parse_ordering_text(text: str) -> OrderingDocument:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines or not lines[0].lower().startswith("spec:"):
        raise DocumentError("first line must be 'spec: <factors>'")
    spec = parse_spec_string(lines[0].split(":", 1)[1])
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            rows.append(tuple(int(tok) for tok in line.split()))
        except ValueError as exc:
            raise DocumentError(f"line {lineno}: expected integers, got {line!r}") from exc
    return OrderingDocument(spec, tuple(rows))


def serialize_ordering_text(doc: OrderingDocument) -> str:
    lines = [f"spec: {format_spec_string(doc.spec)}"]
    lines.extend(" ".join(str(c) for c in row) for row in doc.rows)
    return "\n".join(lines) + "\n"


def parse_ordering_json(text: str) -> OrderingDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"bad JSON: {exc}") from exc
    if not isinstance(obj, dict) or "spec" not in obj or "rows" not in obj:
        raise DocumentError("JSON document needs 'spec' and 'rows' keys")
    raw_spec = obj["spec"]
    if isinstance(raw_spec, str):
        spec = parse_spec_string(raw_spec)
    else:
        try:
            spec = make_graph_spec([(int(n), int(t)) for n, t in raw_spec])
        except (RadioGraphError, TypeError, ValueError) as exc:
            raise DocumentError(f"bad spec entry: {raw_spec!r}") from exc
    try:
        rows = tuple(tuple(int(c) for c in row) for row in obj["rows"])
    except (TypeError, ValueError) as exc:
        raise DocumentError("rows must be lists of integers") from exc
    metadata = obj.get("metadata")
    if metadata is None:
        metadata = {}
    if not isinstance(metadata, dict):
        raise DocumentError("metadata must be an object")
    return OrderingDocument(spec, rows, metadata)


def serialize_ordering_json(doc: OrderingDocument) -> str:
    payload = {
        "spec": [[f.size, f.copies] for f in doc.spec.factors],
        "rows": [list(row) for row in doc.rows],
    }
    if doc.metadata:
        payload["metadata"] = doc.metadata
    return json.dumps(payload, indent=2) + "\n"


def parse_ordering_document(text: str) -> OrderingDocument:
    """Sniff the format: JSON when the payload starts with a brace."""
    if text.lstrip().startswith("{"):
        return parse_ordering_json(text)
    return parse_ordering_text(text)


_TOKEN_RE = re.compile(r"^f(\d+)$")


def parse_instruction_rows(
    text: str, spec: GraphSpec, generators: tuple[InstructionGenerator, ...]
) -> OrderGenerator:
    """Parse an instruction matrix of 'id' / 'f2' / 'f3' ... tokens.

    Tokens are resolved against each column's instruction set at that row, so
    the same token can mean different permutations for history-aware kinds.
    """
    lines = [line.split() for line in text.splitlines() if line.strip()]
    t = spec.diameter
    if len(lines) != spec.num_vertices:
        raise DocumentError(
            f"instruction matrix has {len(lines)} rows, spec needs {spec.num_vertices}"
        )
    for lineno, toks in enumerate(lines, start=1):
        if len(toks) != t:
            raise DocumentError(f"row {lineno} has {len(toks)} entries, expected {t}")

    histories: list[list[Permutation]] = [[] for _ in range(t)]
    cells: list[tuple[Permutation, ...]] = []
    for i, toks in enumerate(lines, start=1):
        row: list[Permutation] = []
        for j, tok in enumerate(toks):
            gen = generators[j]
            if i == 1:
                if tok != "id":
                    raise DocumentError(f"row 1 must be 'id' in every column, got {tok!r}")
                sigma = identity(gen.n)
            else:
                m = _TOKEN_RE.match(tok)
                if not m:
                    raise DocumentError(f"row {i}: bad instruction token {tok!r}")
                subscript = int(m.group(1))
                iset = gen.sets(i, histories[j])
                try:
                    sigma = iset.by_subscript(subscript)
                except RadioGraphError as exc:
                    raise DocumentError(f"row {i}, column {j + 1}: {exc}") from exc
                if i == 2 and subscript != 2:
                    raise DocumentError("row 2 must be 'f2' in every column")
            histories[j].append(sigma)
            row.append(sigma)
        cells.append(tuple(row))
    try:
        return make_order_generator(spec, cells, generators)
    except RadioGraphError as exc:
        raise DocumentError(str(exc)) from exc
