"""Model specification documents.

A spec is a small YAML/JSON mapping, for example::

    {kind: graphical, shape: [2, 2, 2], edges: [[1, 2], [2, 3]]}

Errors carry the line and column of the offending node.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any

import yaml

from ..groebner import Ideal
from ..polyalgebra import Polynomial, PolynomialSyntaxError, VariableContext, flat_context
from ..statmodels import GeneratorSet, Graph, Shape, ToricMatrix, check_partition, graphical_matrix, loglinear_matrix

KINDS = ("toric", "log_linear", "graphical", "independence", "joint_independence", "ideal")

_ALLOWED = {
    "toric": {"A", "shape", "ideal"},
    "log_linear": {"shape", "generators"},
    "graphical": {"shape", "edges"},
    "independence": {"shape"},
    "joint_independence": {"shape", "partition"},
    "ideal": {"ideal", "shape", "size", "singular_locus"},
}
_REQUIRED = {
    "toric": {"A"},
    "log_linear": {"shape", "generators"},
    "graphical": {"shape", "edges"},
    "independence": {"shape"},
    "joint_independence": {"shape", "partition"},
    "ideal": {"ideal"},
}
OPTION_KEYS = {"method", "saturate", "order", "seed", "minor_size", "name"}

_CHOICES = {
    "method": ("lagrange", "toric", "independence", "auto"),
    "saturate": ("full", "pplus"),
    "order": ("lex", "grevlex", "paper"),
    "minor_size": ("rank", "literal"),
}

_FLAT = re.compile(r"^[pu](\d+)$")


class SpecError(ValueError):
    def __init__(self, msg: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + msg)


@dataclass
class ModelSpec:
    kind: str
    shape: Shape | None = None
    payload: Any = None
    options: dict = field(default_factory=dict)
    raw: dict = field(default_factory=dict)

    # derived objects -------------------------------------------------------
    def context(self) -> VariableContext:
        if self.shape is not None:
            return self.shape.context()
        return flat_context(self.size())

    def size(self) -> int:
        if self.shape is not None:
            return self.shape.size
        if self.kind == "toric":
            return self.payload["A"].ncols
        return self.payload["size"]

    def toric_matrix(self) -> ToricMatrix | None:
        if self.kind == "toric":
            return self.payload["A"]
        if self.kind == "log_linear":
            return loglinear_matrix(self.shape, self.payload["generators"])
        if self.kind == "graphical":
            return graphical_matrix(self.shape, self.payload["graph"])
        if self.kind == "independence":
            return loglinear_matrix(self.shape, [[i] for i in range(1, self.shape.n + 1)])
        if self.kind == "joint_independence":
            return loglinear_matrix(self.shape, self.payload["partition"])
        return None

    def ideal_override(self) -> Ideal | None:
        """Explicit model ideal given in the spec, in the full p/u ring."""
        texts = self.payload.get("ideal") if isinstance(self.payload, dict) else None
        if texts is None:
            return None
        ctx = self.context()
        return Ideal(ctx, [Polynomial.parse(ctx, t) for t in texts])

    def singular_locus(self) -> Ideal | None:
        texts = self.payload.get("singular_locus") if isinstance(self.payload, dict) else None
        if not texts:
            return None
        ctx = self.context()
        return Ideal(ctx, [Polynomial.parse(ctx, t) for t in texts])

    def label(self) -> str:
        if self.shape is not None:
            return str(self.shape)
        return f"n={self.size()}"


def _mark(node) -> tuple[int, int]:
    return node.start_mark.line + 1, node.start_mark.column + 1


def _fail(msg, node=None):
    if node is None:
        raise SpecError(msg)
    raise SpecError(msg, *_mark(node))


def _int_list(node, what, value):
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        _fail(f"{what} must be a list of integers", node)
    return value


def _int_matrix(node, what, value):
    if not isinstance(value, list) or not value:
        _fail(f"{what} must be a nonempty list of lists", node)
    for row in value:
        if not isinstance(row, list):
            _fail(f"{what} must be a list of lists", node)
        _int_list(node, what, row)
    return value


def _strings(node, what, value):
    if isinstance(value, str):
        return [value]
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        _fail(f"{what} must be a string or a list of strings", node)
    return value


def parse_spec(text: str) -> ModelSpec:
    """Parse and validate a spec document."""
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark or exc.context_mark
        if mark is not None:
            raise SpecError(f"malformed document: {exc.problem}", mark.line + 1, mark.column + 1) from None
        raise SpecError(f"malformed document: {exc}") from None
    except yaml.YAMLError as exc:
        raise SpecError(f"malformed document: {exc}") from None
    if root is None or not isinstance(data, dict):
        _fail("spec must be a mapping", root)
    keynodes = {k.value: (k, v) for k, v in root.value}
    kind = data.get("kind")
    if kind not in KINDS:
        _fail(f"kind must be one of {', '.join(KINDS)}", keynodes["kind"][1] if "kind" in keynodes else root)
    allowed = _ALLOWED[kind] | OPTION_KEYS | {"kind"}
    for k in data:
        if k not in allowed:
            _fail(f"unknown key {k!r} for kind {kind}", keynodes[k][0])
    for k in _REQUIRED[kind]:
        if k not in data:
            _fail(f"kind {kind} requires key {k!r}", root)

    def node(k):
        return keynodes[k][1]

    shape = None
    if "shape" in data:
        dims = _int_list(node("shape"), "shape", data["shape"])
        try:
            shape = Shape(dims)
        except ValueError as exc:
            _fail(str(exc), node("shape"))
    elif kind not in ("toric", "ideal"):
        _fail(f"kind {kind} requires a shape", root)

    payload: dict[str, Any] = {}
    if kind == "toric":
        A = _int_matrix(node("A"), "A", data["A"])
        if shape is not None and any(len(r) != shape.size for r in A):
            _fail(f"A needs {shape.size} columns to match shape {shape}", node("A"))
        try:
            T = ToricMatrix(A, shape=shape)
        except ValueError as exc:
            _fail(str(exc), node("A"))
        if any(not any(T.column(j)) for j in range(T.ncols)):
            _fail("A has a zero column", node("A"))
        if not T.has_equal_column_sums():
            _fail("the columns of A must have equal sums", node("A"))
        payload["A"] = T
    elif kind == "log_linear":
        subsets = _int_matrix(node("generators"), "generators", data["generators"])
        try:
            gs = GeneratorSet(subsets)
            for g in gs:
                shape.check_block(g, proper=False)
        except ValueError as exc:
            _fail(str(exc), node("generators"))
        payload["generators"] = gs
    elif kind == "graphical":
        edges = data["edges"]
        if edges != []:
            _int_matrix(node("edges"), "edges", edges)
        if any(len(e) != 2 for e in edges):
            _fail("every edge needs two endpoints", node("edges"))
        try:
            payload["graph"] = Graph(shape.n, edges)
        except ValueError as exc:
            _fail(str(exc), node("edges"))
    elif kind == "joint_independence":
        part = _int_matrix(node("partition"), "partition", data["partition"])
        try:
            payload["partition"] = check_partition(shape, part)
        except ValueError as exc:
            _fail(str(exc), node("partition"))
    if "size" in data:
        size = data["size"]
        if not isinstance(size, int) or size < 1:
            _fail("size must be a positive integer", node("size"))
        payload["size"] = size
    if "ideal" in data:
        payload["ideal"] = _strings(node("ideal"), "ideal", data["ideal"])
    if "singular_locus" in data:
        payload["singular_locus"] = _strings(node("singular_locus"), "singular_locus", data["singular_locus"])
    if kind == "ideal" and shape is None and "size" not in payload:
        payload["size"] = _infer_size(payload["ideal"] + payload.get("singular_locus", []), node("ideal"))
    options = {k: data[k] for k in OPTION_KEYS if k in data}
    if "seed" in options and (not isinstance(options["seed"], int) or isinstance(options["seed"], bool)):
        _fail("seed must be an integer", node("seed"))
    for key, choices in _CHOICES.items():
        if key in options and options[key] not in choices:
            _fail(f"{key} must be one of {', '.join(choices)}", node(key))
    spec = ModelSpec(kind, shape, payload, options, dict(data))
    # parse polynomials now so bad input fails before any computation
    for key in ("ideal", "singular_locus"):
        if key in payload:
            ctx = spec.context()
            for t in payload[key]:
                try:
                    Polynomial.parse(ctx, t)
                except (PolynomialSyntaxError, KeyError, ValueError) as exc:
                    _fail(f"cannot parse polynomial {t!r}: {exc}", node(key))
    if "ideal" in payload:
        ideal = spec.ideal_override()
        for g in ideal.generators:
            if not g.variables() <= set(ideal.ctx.block("p")):
                _fail(f"model polynomial {g} may only use p variables", node("ideal"))
            if not g.is_homogeneous():
                _fail(f"model polynomial {g} is not homogeneous", node("ideal"))
    return spec


def _infer_size(texts, node) -> int:
    top = -1
    for t in texts:
        for name in re.findall(r"[A-Za-z_][A-Za-z0-9_]*", t):
            m = _FLAT.match(name)
            if m is None:
                _fail(f"unknown variable {name!r}; flat models use p0, p1, ...", node)
            top = max(top, int(m.group(1)))
    if top < 0:
        _fail("cannot infer the number of states; add a size key", node)
    return top + 1


def load_spec(arg: str) -> ModelSpec:
    """Spec from a file path, ``-`` for stdin, or an inline document."""
    import os
    import sys

    if arg == "-":
        text = sys.stdin.read()
    elif os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = arg
    return parse_spec(text)
