"""Stage-timed pipeline runs."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from . import generators
from .embed import STAGES, embed
from .errors import Rejected
from .graph import Graph


@dataclass
class RunReport:
    name: str
    n: int
    m: int
    tau: int | None = None
    matching_size: int | None = None
    dimension: int | None = None
    timings: dict[str, float] = field(default_factory=dict)
    status: str = "ok"

    @property
    def total(self) -> float:
        return sum(self.timings.values())

    @property
    def dominant_stage(self) -> str | None:
        if not self.timings:
            return None
        return max(self.timings, key=self.timings.__getitem__)

    def as_dict(self) -> dict:
        out = asdict(self)
        out["total"] = self.total
        out["dominant_stage"] = self.dominant_stage
        return out


def run(g: Graph, name: str = "") -> RunReport:
    report = RunReport(name=name, n=g.n, m=g.m)
    start = time.perf_counter()
    try:
        result = embed(g)
    except Rejected as exc:
        report.status = type(exc).__name__
        report.timings = {"recognition": time.perf_counter() - start}
        return report
    report.tau = result.tau
    report.matching_size = result.matching_size
    report.dimension = result.d
    report.timings = dict(result.timings)
    return report


def warm_up() -> None:
    """Load compiled kernels so first-run overhead stays out of the timings."""
    embed(generators.grid(3, 3))
    embed(generators.star(3))


def bench_graph(family: str, size: int, seed: int = 0) -> Graph:
    if family == "grid":
        return generators.grid(size, size)
    if family == "random-tree":
        return generators.random_tree(size, seed)
    if family in ("path", "cycle", "hypercube", "star", "complete"):
        return generators.FAMILIES[family][0](size)
    raise ValueError(f"cannot benchmark family {family!r}")


def format_table(reports: list[RunReport]) -> str:
    head = ["graph", "n", "m", "tau", "|M|", "d", *STAGES, "total", "dominant", "status"]
    rows = [head]
    for r in reports:
        rows.append(
            [
                r.name,
                str(r.n),
                str(r.m),
                "-" if r.tau is None else str(r.tau),
                "-" if r.matching_size is None else str(r.matching_size),
                "-" if r.dimension is None else str(r.dimension),
                *(f"{r.timings[s]:.4f}" if s in r.timings else "-" for s in STAGES),
                f"{r.total:.4f}",
                r.dominant_stage or "-",
                r.status,
            ]
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(head))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in rows) + "\n"
