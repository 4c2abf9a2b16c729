"""Benchmark harness: median wall time per (model, method) cell.

Every repetition runs in a fresh interpreter so no cached context or
Groebner basis leaks between repetitions, and a cell that exceeds the
timeout is reported as ``TIMEOUT``.
"""

from __future__ import annotations

import csv
import io
import json
import os
import statistics
import subprocess
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

HEADER = ["shape", "method", "median_s", "min_s", "max_s", "generators", "ml_degree"]
TIMEOUT = "TIMEOUT"
PPLUS_SUFFIX = "-pplus"


@dataclass
class Cell:
    shape: str
    method: str
    times: list[float]
    generators: int | None = None
    ml_degree: int | None = None
    status: str = "ok"  # ok | TIMEOUT | error message

    def row(self) -> list:
        if self.status != "ok":
            flag = TIMEOUT if self.status == TIMEOUT else "ERROR"
            return [self.shape, self.method, flag, flag, flag, "", ""]
        return [
            self.shape,
            self.method,
            f"{statistics.median(self.times):.6f}",
            f"{min(self.times):.6f}",
            f"{max(self.times):.6f}",
            "" if self.generators is None else self.generators,
            "" if self.ml_degree is None else self.ml_degree,
        ]

    @property
    def median(self) -> float:
        """Median seconds; ``inf`` for a timed-out cell."""
        if self.status == TIMEOUT:
            return float("inf")
        if self.status != "ok":
            return float("nan")
        return statistics.median(self.times)


def max_jobs(requested: int = 1) -> int:
    cap = os.environ.get("LIKGEO_THREADS")
    if cap:
        try:
            return max(1, min(requested, int(cap)))
        except ValueError:
            pass
    return max(1, requested)


def _worker_command(spec_text: str, method: str, saturate: str, want_ml: bool, seed: int) -> list[str]:
    payload = json.dumps({"spec": spec_text, "method": method, "saturate": saturate, "ml": want_ml, "seed": seed})
    return [sys.executable, "-m", "likgeo.cli.bench", payload]


def _one(spec_text, method, saturate, want_ml, seed, timeout) -> dict:
    cmd = _worker_command(spec_text, method, saturate, want_ml, seed)
    try:
        proc = subprocess.run(cmd, capture_output=True, text=True, timeout=timeout, encoding="utf-8")
    except subprocess.TimeoutExpired:
        return {"status": TIMEOUT}
    if proc.returncode != 0:
        tail = (proc.stderr or proc.stdout).strip().splitlines()
        return {"status": tail[-1] if tail else f"exit {proc.returncode}"}
    return json.loads(proc.stdout.strip().splitlines()[-1])


def run_cell(spec_text: str, label: str, method: str, repetitions: int = 3, timeout: float = 60.0, seed: int = 0, ml: bool = True) -> Cell:
    """Time one cell; ``method`` may carry the ``-pplus`` suffix."""
    if repetitions < 3:
        raise ValueError("at least 3 repetitions are required")
    saturate = "full"
    base = method
    if method.endswith(PPLUS_SUFFIX):
        base, saturate = method[: -len(PPLUS_SUFFIX)], "pplus"
    cell = Cell(label, method, [])
    for rep in range(repetitions):
        res = _one(spec_text, base, saturate, ml and rep == 0, seed, timeout)
        if res["status"] != "ok":
            cell.status = res["status"]
            cell.times = []
            return cell
        cell.times.append(res["seconds"])
        cell.generators = res["generators"]
        if res.get("ml_degree") is not None:
            cell.ml_degree = res["ml_degree"]
    return cell


def bench(specs, methods, repetitions: int = 3, timeout: float = 60.0, pplus: bool = False, jobs: int = 1, seed: int = 0, ml: bool = True) -> list[Cell]:
    """All (spec, method) cells.  ``specs`` holds ``(label, spec_text)`` pairs.

    With ``pplus`` each ``toric`` cell gets a companion that saturates by
    ``p_+`` only.  Cells run sequentially unless ``jobs > 1``.
    """
    if repetitions < 3:
        raise ValueError("at least 3 repetitions are required")
    methods = list(methods)
    if pplus and "toric" in methods:
        methods.insert(methods.index("toric") + 1, "toric" + PPLUS_SUFFIX)
    tasks = [(label, text, m) for label, text in specs for m in methods]
    if not tasks:
        return []
    jobs = max_jobs(jobs)

    def go(t):
        label, text, m = t
        return run_cell(text, label, m, repetitions, timeout, seed, ml)

    if jobs == 1:
        return [go(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(go, tasks))


def to_csv(cells) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for c in cells:
        w.writerow(c.row())
    return buf.getvalue()


def grid(cells) -> str:
    """Median seconds as a shape-by-method text table."""
    shapes = list(dict.fromkeys(c.shape for c in cells))
    methods = list(dict.fromkeys(c.method for c in cells))
    table = {(c.shape, c.method): c for c in cells}
    rows = [["shape"] + methods]
    for s in shapes:
        row = [s]
        for m in methods:
            c = table.get((s, m))
            if c is None:
                row.append("")
            elif c.status == TIMEOUT:
                row.append(TIMEOUT)
            elif c.status != "ok":
                row.append("ERROR")
            else:
                row.append(f"{c.median:.3f}")
        rows.append(row)
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in rows) + "\n"


def _worker(payload: str) -> int:
    from .report import build_likelihood
    from .spec import parse_spec

    args = json.loads(payload)
    spec = parse_spec(args["spec"])
    t0 = time.perf_counter()
    L, _, _ = build_likelihood(spec, args["method"], args["saturate"])
    seconds = time.perf_counter() - t0
    out = {"status": "ok", "seconds": seconds, "generators": len(L.generators), "ml_degree": None}
    if args["ml"]:
        from ..likelihood import ml_degree

        out["ml_degree"] = ml_degree(L, seed=args["seed"])[0]
    print(json.dumps(out))
    return 0


if __name__ == "__main__":
    sys.exit(_worker(sys.argv[1]))
