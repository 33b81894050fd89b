"""Line-oriented instance files and the bundled fixtures.

Format (``#`` starts a comment, blank lines are ignored)::

    mode digraph            # or: mode graph
    vertices <n>
    arc <id> <tail> <head>  # digraph mode; ids contiguous from 0
    edge <id> <u> <v>       # graph mode; edge i induces arcs 2i=(u,v), 2i+1=(v,u)
    tau1 <arc-id> <p/q>     # optional; missing weights default to 1
    tau2 <arc-id> <p/q>
    prob <arc-id> <p/q>     # graph mode only; transition probabilities

Rationals are written ``p/q`` or ``p``; floats are rejected so that reports
stay byte-deterministic.  Weight lines must follow the arc/edge block, a
weight may be given at most once per arc, and arc ids in graph mode refer to
the induced arcs (edge i contributes arc 2i in the written direction and
arc 2i+1 reversed).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from .algebra import QQ
from .digraph import Digraph, GraphMode, build_digraph, symmetric_digraph
from .zeta import WeightAssignment


class ParseError(ValueError):
    """Malformed instance file; carries the offending line number."""

    def __init__(self, source: str, line: int, message: str):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line


_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


@dataclass
class Instance:
    mode: GraphMode
    vertex_count: int
    pairs: tuple[tuple[int, int], ...]
    tau1: dict[int, Fraction] = dataclass_field(default_factory=dict)
    tau2: dict[int, Fraction] = dataclass_field(default_factory=dict)
    prob: dict[int, Fraction] = dataclass_field(default_factory=dict)
    source: str = "<instance>"

    @property
    def arc_count(self) -> int:
        if self.mode is GraphMode.SYMMETRIC:
            return 2 * len(self.pairs)
        return len(self.pairs)


def parse_instance(text: str, source: str = "<instance>") -> Instance:
    mode = None
    vertices = None
    pairs: list[tuple[int, int]] = []
    tau1: dict[int, Fraction] = {}
    tau2: dict[int, Fraction] = {}
    prob: dict[int, Fraction] = {}

    def fail(line_no, msg):
        raise ParseError(source, line_no, msg)

    def parse_rational(tok, line_no) -> Fraction:
        if not _RATIONAL.match(tok):
            fail(line_no, f"expected a rational p/q, got {tok!r}")
        return Fraction(tok)

    def parse_int(tok, line_no) -> int:
        try:
            return int(tok)
        except ValueError:
            fail(line_no, f"expected an integer, got {tok!r}")

    def arc_count() -> int:
        return 2 * len(pairs) if mode is GraphMode.SYMMETRIC else len(pairs)

    def weight_line(store, name, rest, line_no):
        if not pairs:
            fail(line_no, f"{name} line before any arcs are declared")
        if len(rest) != 2:
            fail(line_no, f"{name} needs: {name} <arc-id> <p/q>")
        aid = parse_int(rest[0], line_no)
        if not 0 <= aid < arc_count():
            fail(line_no, f"arc id {aid} out of range (have {arc_count()} arcs)")
        if aid in store:
            fail(line_no, f"duplicate {name} for arc {aid}")
        store[aid] = parse_rational(rest[1], line_no)

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if key == "mode":
            if mode is not None:
                fail(line_no, "duplicate mode line")
            if rest == ["digraph"]:
                mode = GraphMode.GENERAL
            elif rest == ["graph"]:
                mode = GraphMode.SYMMETRIC
            else:
                fail(line_no, f"mode must be 'digraph' or 'graph', got {' '.join(rest)!r}")
        elif key == "vertices":
            if vertices is not None:
                fail(line_no, "duplicate vertices line")
            if len(rest) != 1:
                fail(line_no, "vertices needs one integer")
            vertices = parse_int(rest[0], line_no)
            if vertices < 0:
                fail(line_no, "vertex count must be nonnegative")
        elif key in ("arc", "edge"):
            if mode is None or vertices is None:
                fail(line_no, f"{key} line before mode/vertices are declared")
            expected = "arc" if mode is GraphMode.GENERAL else "edge"
            if key != expected:
                fail(line_no, f"{key} line not allowed in {mode.value} mode (use {expected})")
            if tau1 or tau2 or prob:
                fail(line_no, f"{key} line after weight lines")
            if len(rest) != 3:
                fail(line_no, f"{key} needs: {key} <id> <a> <b>")
            ident = parse_int(rest[0], line_no)
            if ident != len(pairs):
                fail(line_no, f"{key} ids must be contiguous from 0; expected {len(pairs)}")
            a, b = parse_int(rest[1], line_no), parse_int(rest[2], line_no)
            for v in (a, b):
                if not 0 <= v < vertices:
                    fail(line_no, f"{key} {ident} endpoint {v} out of range for {vertices} vertices")
            pairs.append((a, b))
        elif key == "tau1":
            weight_line(tau1, "tau1", rest, line_no)
        elif key == "tau2":
            weight_line(tau2, "tau2", rest, line_no)
        elif key == "prob":
            if mode is not GraphMode.SYMMETRIC:
                fail(line_no, "prob lines are only allowed in graph mode")
            weight_line(prob, "prob", rest, line_no)
        else:
            fail(line_no, f"unknown directive {key!r}")
    if mode is None:
        fail(0, "missing mode line")
    if vertices is None:
        fail(0, "missing vertices line")
    return Instance(mode, vertices, tuple(pairs), tau1, tau2, prob, source)


def load_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read(), source=str(path))


def render_instance(inst: Instance) -> str:
    lines = [f"mode {inst.mode.value}", f"vertices {inst.vertex_count}"]
    kind = "arc" if inst.mode is GraphMode.GENERAL else "edge"
    for i, (a, b) in enumerate(inst.pairs):
        lines.append(f"{kind} {i} {a} {b}")
    for name, store in (("tau1", inst.tau1), ("tau2", inst.tau2), ("prob", inst.prob)):
        for aid in sorted(store):
            lines.append(f"{name} {aid} {store[aid]}")
    return "\n".join(lines) + "\n"


def instance_digraph(inst: Instance) -> Digraph:
    if inst.mode is GraphMode.GENERAL:
        return build_digraph(inst.vertex_count, inst.pairs)
    return symmetric_digraph(inst.vertex_count, inst.pairs)


def instance_weights(inst: Instance, field=QQ) -> WeightAssignment:
    d = instance_digraph(inst)
    return WeightAssignment.from_maps(d, tau1=inst.tau1, tau2=inst.tau2, field=field)


FIXTURES: dict[str, str] = {
    "paper-digraph": """\
# three vertices, two loops at 0, double arcs both ways between 0 and 1,
# single opposite arcs 1<->2 and 0<->2
mode digraph
vertices 3
arc 0 0 0
arc 1 0 0
arc 2 0 1
arc 3 0 1
arc 4 1 0
arc 5 1 0
arc 6 1 2
arc 7 2 1
arc 8 0 2
arc 9 2 0
""",
    "paper-graph": """\
# the same ten arcs as paper-digraph, induced by five edges: a loop at 0,
# a double edge 0-1, and single edges 1-2 and 0-2
mode graph
vertices 3
edge 0 0 0
edge 1 0 1
edge 2 0 1
edge 3 1 2
edge 4 0 2
""",
    "triangle": """\
mode graph
vertices 3
edge 0 0 1
edge 1 1 2
edge 2 0 2
""",
    "c4": """\
mode graph
vertices 4
edge 0 0 1
edge 1 1 2
edge 2 2 3
edge 3 0 3
""",
    "k4": """\
mode graph
vertices 4
edge 0 0 1
edge 1 0 2
edge 2 0 3
edge 3 1 2
edge 4 1 3
edge 5 2 3
""",
    "p3": """\
mode graph
vertices 3
edge 0 0 1
edge 1 1 2
prob 0 1
prob 1 1/3
prob 2 2/3
prob 3 1
""",
}


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        known = ", ".join(sorted(FIXTURES))
        raise KeyError(f"unknown fixture {name!r}; available: {known}")
    return FIXTURES[name]


def fixture_instance(name: str) -> Instance:
    return parse_instance(fixture_text(name), source=f"fixture:{name}")


def fixture_digraph(name: str) -> Digraph:
    return instance_digraph(fixture_instance(name))
