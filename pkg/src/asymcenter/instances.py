"""Instance files and reports: the bit-exact JSON wire format of the CLI.

Rationals travel as "p/q" strings with q > 0 (plain "p" for integers) so no
value is ever rounded through a float.  ``serialize_instances`` is the
canonical writer; parsing its output and re-serializing reproduces the bytes.
Euclidean outputs in reports are decimal strings with 12 significant digits.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .sequences import RepresentableSeq, ScalarPeriodic, SpaceKind

FORMAT_VERSION = 1


class SchemaError(ValueError):
    """Instance document violates the wire schema."""


def parse_rational(s: Any) -> Fraction:
    if not isinstance(s, str):
        raise SchemaError(f"rationals are 'p/q' strings, got {type(s).__name__}")
    parts = s.split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            p, q = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise SchemaError(f"malformed rational {s!r}") from None
    if q <= 0:
        raise SchemaError(f"rational {s!r} must have a positive denominator")
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def format_float(x: float) -> str:
    return f"{x:.12g}"


def _parse_vector(row: Any, dim: int) -> tuple[Fraction, ...]:
    if not isinstance(row, list) or len(row) != dim:
        raise SchemaError(f"expected a vector of {dim} rationals, got {row!r}")
    return tuple(parse_rational(x) for x in row)


def _parse_channel(obj: Any, name: str) -> ScalarPeriodic:
    if not isinstance(obj, dict):
        raise SchemaError(f"{name} must be an object with preperiod and cycle")
    pre = obj.get("preperiod", [])
    cyc = obj.get("cycle")
    if not isinstance(pre, list) or not isinstance(cyc, list) or not cyc:
        raise SchemaError(f"{name} needs a (possibly empty) preperiod and a nonempty cycle")
    return ScalarPeriodic(tuple(parse_rational(x) for x in pre),
                          tuple(parse_rational(x) for x in cyc))


def seq_from_json_dict(obj: Any) -> RepresentableSeq:
    if not isinstance(obj, dict):
        raise SchemaError("sequence entries must be objects")
    space = obj.get("space")
    if not isinstance(space, dict):
        raise SchemaError("missing space object")
    try:
        kind = SpaceKind(space.get("kind"))
    except ValueError:
        raise SchemaError(f"unknown space kind {space.get('kind')!r}") from None
    dim = space.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise SchemaError("space.dim must be a positive integer")
    pre = obj.get("preperiod", [])
    cyc = obj.get("cycle")
    if not isinstance(pre, list) or not isinstance(cyc, list) or not cyc:
        raise SchemaError("need a preperiod list and a nonempty cycle list")
    spike = obj.get("spike")
    tail = obj.get("tail")
    try:
        return RepresentableSeq(
            kind, dim,
            tuple(_parse_vector(v, dim) for v in pre),
            tuple(_parse_vector(v, dim) for v in cyc),
            spike=_parse_channel(spike, "spike") if spike is not None else None,
            tail=_parse_channel(tail, "tail") if tail is not None else None,
        )
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def seq_to_json_dict(seq: RepresentableSeq) -> dict:
    def channel(ch: ScalarPeriodic | None):
        if ch is None:
            return None
        return {"preperiod": [format_rational(x) for x in ch.preperiod],
                "cycle": [format_rational(x) for x in ch.cycle]}

    return {
        "space": {"kind": seq.kind.value, "dim": seq.dim},
        "preperiod": [[format_rational(x) for x in v] for v in seq.preperiod],
        "cycle": [[format_rational(x) for x in v] for v in seq.cycle],
        "spike": channel(seq.spike),
        "tail": channel(seq.tail),
    }


def parse_instances(text: str) -> list[RepresentableSeq]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("version") != FORMAT_VERSION:
        raise SchemaError(f"expected a document with version = {FORMAT_VERSION}")
    seqs = doc.get("sequences")
    if not isinstance(seqs, list) or not seqs:
        raise SchemaError("document needs a nonempty sequences list")
    return [seq_from_json_dict(s) for s in seqs]


def load_instances(path: str) -> list[RepresentableSeq]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instances(fh.read())


def serialize_instances(seqs: list[RepresentableSeq]) -> str:
    doc = {"version": FORMAT_VERSION, "sequences": [seq_to_json_dict(s) for s in seqs]}
    return json.dumps(doc, indent=2) + "\n"


def save_instances(seqs: list[RepresentableSeq], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_instances(seqs))


def input_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def jsonable(value) -> Any:
    """Recursively render Fractions / floats / result objects JSON-ready."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "to_json_dict"):
        return value.to_json_dict()
    return value


@dataclass
class Report:
    """Machine-readable record of one CLI invocation; deterministic per seed."""

    command: str
    inputs_digest: str | None = None
    seed: int | None = None
    results: dict = field(default_factory=dict)
    oracle: dict = field(default_factory=dict)

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "seed": self.seed,
            "results": jsonable(self.results),
            "oracle": jsonable(self.oracle),
        }
        return json.dumps(doc, indent=2) + "\n"
