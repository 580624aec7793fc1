"""Deterministic generators for path, comet, double-comet and lollipop networks.

Node numbering follows each family's conventional labeling so that ids, roles
and figures line up, and is a stability guarantee:

* path(n): the chain is 0 - 1 - ... - n-1.
* comet(s, t): ids 0..t-2 walk along the handle from its free end, id t-1 is
  the star center, ids t..t+s-1 are the star leaves.
* double_comet(n, a, b): ids 0..a-1 are the pendants on the A end, a..a+b-1
  the pendants on the B end, a+b..n-1 the connecting path from A to B.
* lollipop(n, d): ids 0..d-1 walk along the tail toward the clique (id d-1 is
  the junction), ids d..n-1 form the clique.

Labeled graphs serialize with "# family ..." and "# class <id> <label>"
comment lines on top of the plain edge-list format, and round-trip exactly.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Union

from .errors import EdgeListError, FamilyParameterError
from .graph import Graph, from_edge_list, parse_edge_list, to_edge_list


class NodeClass(enum.Enum):
    """Structural role of a node within its family."""

    PATH_END = "path_end"
    PATH_INNER = "path_inner"
    COMET_PATH_END = "comet_path_end"
    COMET_PATH_INNER = "comet_path_inner"
    COMET_CENTER = "comet_center"
    COMET_STAR_LEAF = "comet_star_leaf"
    DC_LEAF_A = "dc_leaf_a"
    DC_LEAF_B = "dc_leaf_b"
    DC_END_A = "dc_end_a"
    DC_END_B = "dc_end_b"
    DC_INNER = "dc_inner"
    LP_PATH_END = "lp_path_end"
    LP_PATH_INNER = "lp_path_inner"
    LP_JUNCTION = "lp_junction"
    LP_CLIQUE = "lp_clique"


_CLASS_BY_LABEL = {c.value: c for c in NodeClass}


@dataclass(frozen=True)
class PathSpec:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise FamilyParameterError(f"path requires n >= 2, got n={self.n}")

    @property
    def order(self) -> int:
        return self.n

    def label(self) -> str:
        return f"P({self.n})"

    def comment_fields(self) -> str:
        return f"path n={self.n}"


@dataclass(frozen=True)
class CometSpec:
    """Star with s leaves whose center closes one end of a handle of t nodes."""

    s: int
    t: int

    def __post_init__(self):
        if self.s < 1:
            raise FamilyParameterError(f"comet requires s >= 1, got s={self.s}")
        if self.t < 1:
            raise FamilyParameterError(f"comet requires t >= 1, got t={self.t}")

    @property
    def order(self) -> int:
        return self.s + self.t

    def label(self) -> str:
        return f"C({self.s},{self.t})"

    def comment_fields(self) -> str:
        return f"comet s={self.s} t={self.t}"


@dataclass(frozen=True)
class DoubleCometSpec:
    """Path of n-a-b nodes with a pendants on one end and b on the other."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1:
            raise FamilyParameterError(f"double comet requires a >= 1, got a={self.a}")
        if self.b < 1:
            raise FamilyParameterError(f"double comet requires b >= 1, got b={self.b}")
        if self.n - self.a - self.b < 2:
            raise FamilyParameterError(
                f"double comet requires n - a - b >= 2, got {self.n - self.a - self.b}"
            )

    @property
    def order(self) -> int:
        return self.n

    @property
    def path_len(self) -> int:
        return self.n - self.a - self.b

    def label(self) -> str:
        return f"DC({self.n},{self.a},{self.b})"

    def comment_fields(self) -> str:
        return f"double_comet n={self.n} a={self.a} b={self.b}"


@dataclass(frozen=True)
class LollipopSpec:
    """Complete graph on n-d nodes with a tail of d nodes hanging off it."""

    n: int
    d: int

    def __post_init__(self):
        if self.d < 2:
            raise FamilyParameterError(f"lollipop requires d >= 2, got d={self.d}")
        if self.n - self.d < 1:
            raise FamilyParameterError(
                f"lollipop requires n - d >= 1, got {self.n - self.d}"
            )

    @property
    def order(self) -> int:
        return self.n

    def label(self) -> str:
        return f"L({self.n},{self.d})"

    def comment_fields(self) -> str:
        return f"lollipop n={self.n} d={self.d}"


FamilySpec = Union[PathSpec, CometSpec, DoubleCometSpec, LollipopSpec]


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    classes: tuple[NodeClass, ...]
    spec: FamilySpec


def generate(spec: FamilySpec) -> LabeledGraph:
    """Build the graph for a family spec with one role label per node."""
    if isinstance(spec, PathSpec):
        edges = [(i, i + 1) for i in range(spec.n - 1)]
        classes = [NodeClass.PATH_INNER] * spec.n
        classes[0] = classes[-1] = NodeClass.PATH_END
    elif isinstance(spec, CometSpec):
        s, t = spec.s, spec.t
        center = t - 1
        edges = [(i, i + 1) for i in range(t - 1)]
        edges += [(center, t + j) for j in range(s)]
        classes = [NodeClass.COMET_PATH_INNER] * t + [NodeClass.COMET_STAR_LEAF] * s
        classes[center] = NodeClass.COMET_CENTER
        if t >= 2:
            classes[0] = NodeClass.COMET_PATH_END
    elif isinstance(spec, DoubleCometSpec):
        a, b, k = spec.a, spec.b, spec.path_len
        first, last = a + b, spec.n - 1
        edges = [(i, first) for i in range(a)]
        edges += [(a + j, last) for j in range(b)]
        edges += [(i, i + 1) for i in range(first, last)]
        classes = (
            [NodeClass.DC_LEAF_A] * a
            + [NodeClass.DC_LEAF_B] * b
            + [NodeClass.DC_INNER] * k
        )
        classes[first] = NodeClass.DC_END_A
        classes[last] = NodeClass.DC_END_B
    elif isinstance(spec, LollipopSpec):
        d, m = spec.d, spec.n - spec.d
        junction = d - 1
        edges = [(i, i + 1) for i in range(d - 1)]
        edges += [(junction, d + j) for j in range(m)]
        edges += [(d + i, d + j) for i in range(m) for j in range(i + 1, m)]
        classes = [NodeClass.LP_PATH_INNER] * d + [NodeClass.LP_CLIQUE] * m
        classes[0] = NodeClass.LP_PATH_END
        classes[junction] = NodeClass.LP_JUNCTION
    else:
        raise TypeError(f"not a family spec: {spec!r}")
    return LabeledGraph(
        graph=from_edge_list(edges, n=spec.order),
        classes=tuple(classes),
        spec=spec,
    )


def class_of(lg: LabeledGraph, v: int) -> NodeClass:
    """Role of node v in the labeled graph."""
    if not 0 <= v < lg.graph.n:
        raise IndexError(f"node {v} out of range for graph of order {lg.graph.n}")
    return lg.classes[v]


_FAMILY_LINE = re.compile(r"#\s*family\s+(\w+)((?:\s+[a-z]+=\d+)+)\s*$")
_CLASS_LINE = re.compile(r"#\s*class\s+(\d+)\s+(\S+)\s*$")
_FIELD = re.compile(r"([a-z]+)=(\d+)")


def _spec_from_fields(name: str, fields: dict[str, int]) -> FamilySpec:
    try:
        if name == "path":
            return PathSpec(n=fields.pop("n"))
        if name == "comet":
            return CometSpec(s=fields.pop("s"), t=fields.pop("t"))
        if name == "double_comet":
            return DoubleCometSpec(n=fields.pop("n"), a=fields.pop("a"), b=fields.pop("b"))
        if name == "lollipop":
            return LollipopSpec(n=fields.pop("n"), d=fields.pop("d"))
    except KeyError as missing:
        raise EdgeListError(f"family {name} is missing parameter {missing}") from None
    raise EdgeListError(f"unknown family {name!r}")


def write_labeled(lg: LabeledGraph) -> str:
    """Serialize graph, spec and per-node classes as a commented edge list."""
    lines = [f"# family {lg.spec.comment_fields()}"]
    lines += [f"# class {v} {c.value}" for v, c in enumerate(lg.classes)]
    return "".join(line + "\n" for line in lines) + to_edge_list(lg.graph)


def scan_class_comments(text: str) -> dict[int, str]:
    """Collect "# class <id> <label>" lines; labels are kept as raw strings."""
    classes: dict[int, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        m = _CLASS_LINE.match(raw.strip())
        if not m:
            continue
        v = int(m.group(1))
        if v in classes:
            raise EdgeListError(f"repeated class comment for node {v}", line=line_no)
        classes[v] = m.group(2)
    return classes


def read_labeled(text: str) -> LabeledGraph:
    """Parse a labeled edge list written by write_labeled.

    Requires a family line and a class line for every node; class
    multiplicities must match what the spec generates.
    """
    spec: FamilySpec | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        m = _FAMILY_LINE.match(raw.strip())
        if m:
            if spec is not None:
                raise EdgeListError("second '# family' line", line=line_no)
            fields = {key: int(val) for key, val in _FIELD.findall(m.group(2))}
            spec = _spec_from_fields(m.group(1), fields)
    if spec is None:
        raise EdgeListError("missing '# family' line")
    g = parse_edge_list(text)
    if g.n != spec.order:
        raise EdgeListError(f"graph order {g.n} does not match family order {spec.order}")
    raw_classes = scan_class_comments(text)
    classes = []
    for v in range(g.n):
        if v not in raw_classes:
            raise EdgeListError(f"missing class comment for node {v}")
        label = raw_classes[v]
        if label not in _CLASS_BY_LABEL:
            raise EdgeListError(f"unknown node class {label!r}")
        classes.append(_CLASS_BY_LABEL[label])
    expected = sorted(c.value for c in generate(spec).classes)
    if sorted(c.value for c in classes) != expected:
        raise EdgeListError("class multiplicities do not match the family spec")
    return LabeledGraph(graph=g, classes=tuple(classes), spec=spec)
