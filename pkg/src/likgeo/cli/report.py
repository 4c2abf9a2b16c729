"""Dispatch from a :class:`ModelSpec` to a construction, and the report it produces."""

from __future__ import annotations

import csv
import io
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass, field

from ..groebner import Ideal, hilbert, interreduce, is_groebner, minimalize
from ..likelihood import (
    LikelihoodProblem,
    independence_likelihood,
    joint_independence_likelihood,
    lagrange_likelihood,
    ml_degree,
    toric_likelihood,
)
from ..polyalgebra import Polynomial, TermOrder, VariableContext
from ..statmodels import toric_ideal
from .spec import ModelSpec

COMMANDS = ("model-ideal", "likelihood", "ml-degree", "verify-gb")
METHODS = ("lagrange", "toric", "independence", "auto")
ORDERS = ("lex", "grevlex", "paper")


class MethodError(ValueError):
    """The requested construction does not apply to the model."""


@dataclass
class IdealReport:
    model: dict
    command: str
    construction: str
    order: str
    saturation: str | None
    variables: list[str]
    generators: list[str]
    counts_by_degree: dict[str, int]
    gb_size: int
    dimension: int
    projective_dimension: int
    degree: int
    ml_degree: int | None = None
    is_groebner: bool | None = None
    notes: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "IdealReport":
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"command: {self.command}",
            f"construction: {self.construction}",
            f"order: {self.order}",
        ]
        if self.saturation:
            lines.append(f"saturation: {self.saturation}")
        degs = ", ".join(f"{k}: {v}" for k, v in self.counts_by_degree.items())
        lines += [
            f"generators: {len(self.generators)} (by degree {degs})",
            f"gb_size: {self.gb_size}",
            f"dimension: {self.dimension}",
            f"projective_dimension: {self.projective_dimension}",
            f"degree: {self.degree}",
        ]
        if self.ml_degree is not None:
            lines.append(f"ml_degree: {self.ml_degree}")
        if self.is_groebner is not None:
            lines.append(f"is_groebner: {str(self.is_groebner).lower()}")
        for n in self.notes:
            lines.append(f"note: {n}")
        lines.append("timings: " + ", ".join(f"{k}={v:.3f}s" for k, v in self.timings.items()))
        lines.append("generator list:")
        lines += [f"  {g}" for g in self.generators]
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        cols = ["command", "construction", "order", "generators", "gb_size", "dimension", "degree", "ml_degree", "is_groebner"]
        cols += [f"t_{k}" for k in self.timings]
        row = [self.command, self.construction, self.order, len(self.generators), self.gb_size, self.dimension, self.degree]
        row += ["" if self.ml_degree is None else self.ml_degree, "" if self.is_groebner is None else self.is_groebner]
        row += [f"{v:.6f}" for v in self.timings.values()]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        w.writerow(row)
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        return self.to_text()

    def stable(self) -> dict:
        """Everything except wall times, for determinism checks."""
        d = self.to_dict()
        d.pop("timings")
        return d


def ideal_from_report(report) -> Ideal:
    """Re-parse the serialized generators of a report (dict or IdealReport)."""
    d = report.to_dict() if isinstance(report, IdealReport) else report
    names = d["variables"]
    blocks = {b: [n for n in names if n.startswith(b)] for b in ("p", "u")}
    ctx = VariableContext(names, blocks={k: v for k, v in blocks.items() if v})
    return Ideal(ctx, [Polynomial.parse(ctx, g) for g in d["generators"]])


# ---------------------------------------------------------------------------
# construction dispatch


def resolve_method(spec: ModelSpec, method: str) -> str:
    if method not in METHODS:
        raise MethodError(f"unknown method {method!r}")
    indep = spec.kind in ("independence", "joint_independence")
    if method == "auto":
        if indep:
            return "independence"
        if spec.toric_matrix() is not None:
            return "toric"
        return "lagrange"
    if method == "independence" and not indep:
        raise MethodError(f"the independence construction does not apply to kind {spec.kind}")
    if method == "toric" and spec.toric_matrix() is None:
        raise MethodError(f"the toric construction needs an A-matrix; kind {spec.kind} has none")
    return method


def model_ideal(spec: ModelSpec) -> Ideal:
    """Model ideal in the full p/u ring of the spec."""
    ctx = spec.context()
    override = spec.ideal_override()
    if override is not None:
        return override
    A = spec.toric_matrix()
    if A is None:
        return Ideal(ctx, [])
    pnames = A.p_names()
    return toric_ideal(A, VariableContext(pnames, blocks={"p": pnames})).to_context(ctx)


def build_likelihood(spec: ModelSpec, method: str = "auto", saturation: str = "full", minor_size: str = "rank") -> tuple[Ideal, TermOrder | None, str]:
    """Returns the likelihood ideal, the construction's own order (if any) and the method used."""
    method = resolve_method(spec, method)
    if method == "independence":
        if spec.kind == "independence":
            L, order = independence_likelihood(spec.shape)
        else:
            L, order = joint_independence_likelihood(spec.shape, spec.payload["partition"])
        return L, order, method
    ctx = spec.context()
    if method == "toric":
        L = toric_likelihood(spec.toric_matrix(), model=spec.ideal_override(), saturation=saturation, ctx=ctx)
        return L, None, method
    prob = LikelihoodProblem(ctx, model_ideal(spec), shape=spec.shape, singular_locus=spec.singular_locus())
    return lagrange_likelihood(prob, saturation=saturation, minor_size=minor_size), None, method


def _order_for(name: str, ctx: VariableContext, native: TermOrder | None) -> TermOrder:
    if name not in ORDERS:
        raise MethodError(f"unknown order {name!r}")
    if name == "grevlex":
        return TermOrder.grevlex(ctx.nvars)
    if name == "lex":
        return TermOrder.lex(ctx.nvars)
    # p block before u block, lex; independence constructions carry their own
    return native or TermOrder.lex(ctx.nvars)


def _options(spec: ModelSpec, **cli) -> dict:
    opts = {"method": "auto", "saturate": "full", "order": None, "seed": 0, "minor_size": "rank"}
    opts.update(spec.options)
    opts.update({k: v for k, v in cli.items() if v is not None})
    return opts


def run(spec: ModelSpec, command: str, **cli) -> IdealReport:
    """Execute one CLI verb on a spec.

    Keyword options (``method``, ``saturate``, ``order``, ``seed``,
    ``minor_size``) override those given in the spec itself.
    """
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    opts = _options(spec, **cli)
    if opts["saturate"] not in ("full", "pplus"):
        raise MethodError("saturate must be full or pplus")
    if opts["minor_size"] not in ("rank", "literal"):
        raise MethodError("minor_size must be rank or literal")
    order_name = opts["order"] or ("paper" if command == "verify-gb" else "grevlex")
    timings = {"build": 0.0, "gb": 0.0, "saturation": 0.0, "ml_degree": 0.0}
    notes: list[str] = []

    if command == "model-ideal":
        t0 = time.perf_counter()
        full = model_ideal(spec)
        names = [full.ctx.names[i] for i in full.ctx.block("p")]
        ideal = full.to_context(VariableContext(names, blocks={"p": names}))
        timings["build"] = time.perf_counter() - t0
        native, construction, saturation = None, "model", None
    else:
        ideal, native, construction = build_likelihood(spec, opts["method"], opts["saturate"], opts["minor_size"])
        timings.update(ideal.info.get("timings", {}))
        saturation = opts["saturate"] if construction in ("lagrange", "toric") else None
        if construction == "lagrange" and ideal.info.get("minor_size"):
            notes.append(f"rank condition via {ideal.info['minor_size']}-minors")
        if ideal.info.get("merged_route_agrees"):
            notes.append("merged-shape route agrees")

    ctx = ideal.ctx
    order = _order_for(order_name, ctx, native)
    t0 = time.perf_counter()
    check = None
    if command == "verify-gb" or (native is not None and order == native):
        check = is_groebner(ideal.generators, order)
        if check and native is not None and order == native:
            ideal.set_gb(interreduce(ideal.generators, order), order)
        elif not check:
            notes.append(f"S-pair {check.pair} leaves remainder {check.remainder}")
    gb = ideal.gb(order) if not ideal.is_zero() else []
    timings["gb"] = time.perf_counter() - t0

    if ideal.is_zero():
        hd_proj, hd_deg, krull = ctx.nvars - 1, 1, ctx.nvars
    else:
        hd = hilbert(ideal.initial_ideal(order))
        hd_proj, hd_deg, krull = hd.projective_dimension, hd.degree, hd.krull_dimension
    # likelihood ideals sit in P^n x P^n, model ideals in P^n
    dimension = krull - 2 if command != "model-ideal" else hd_proj

    gens = minimalize(ideal.generators) if ideal.homogeneous() else list(ideal.generators)
    counts = Counter(g.total_degree() for g in gens)

    ml = None
    if command == "ml-degree":
        t0 = time.perf_counter()
        ml, _ = ml_degree(ideal, seed=opts["seed"])
        timings["ml_degree"] = time.perf_counter() - t0

    return IdealReport(
        model=dict(spec.raw),
        command=command,
        construction=construction,
        order=order_name,
        saturation=saturation,
        variables=list(ctx.names),
        generators=[str(g) for g in gens],
        counts_by_degree={str(k): counts[k] for k in sorted(counts)},
        gb_size=len(gb),
        dimension=dimension,
        projective_dimension=hd_proj,
        degree=hd_deg,
        ml_degree=ml,
        is_groebner=None if check is None or command != "verify-gb" else bool(check),
        notes=notes,
        timings=timings,
    )
