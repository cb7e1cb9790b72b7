"""Bound-comparison experiments over random graph families."""

from __future__ import annotations

import csv
import hashlib
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from typing import Optional

from .bounds import bounds_report
from .coloring import DEFAULT_EXACT_LIMIT
from .errors import BadParams, BoundViolation
from .generators import (
    gen_clique_plus_path,
    gen_gnp,
    gen_random_cnf,
    gen_random_regular,
    gen_random_tree,
)
from .graph import Graph
from .reduction import karp_graph

__all__ = [
    "ExperimentRow",
    "FAMILIES",
    "check_family",
    "make_graph",
    "trial_seed",
    "run_compare",
    "rows_to_csv",
]

FAMILIES = {
    "tree": ("n",),
    "regular": ("n", "k"),
    "gnp": ("n", "p"),
    "clique-path": ("a", "b"),
    "karp": ("vars", "clauses"),
}


@dataclass(frozen=True)
class ExperimentRow:
    family: str
    trial: int
    seed: int
    n: int
    m: int
    is_ah: bool
    bound_mad: int
    bound_delta: int
    bound_brooks: Optional[int]
    bound_soto: Optional[int]
    lower_clique: int
    degeneracy_plus_1: int
    greedy_colors: int
    exact_chromatic: Optional[int]


def trial_seed(seed: int, trial: int) -> int:
    """Independent 64-bit sub-seed for one trial (SHA-256 of ``"seed:trial"``)."""
    digest = hashlib.sha256(f"{seed}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def check_family(family: str, params: dict) -> None:
    if family not in FAMILIES:
        raise BadParams(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    missing = [k for k in FAMILIES[family] if params.get(k) is None]
    if missing:
        raise BadParams(f"family {family!r} needs parameter(s): {', '.join(missing)}")


def make_graph(family: str, params: dict, seed: int) -> Graph:
    check_family(family, params)
    if family == "tree":
        return gen_random_tree(int(params["n"]), seed)
    if family == "regular":
        return gen_random_regular(int(params["n"]), int(params["k"]), seed)
    if family == "gnp":
        return gen_gnp(int(params["n"]), float(params["p"]), seed)
    if family == "clique-path":
        return gen_clique_plus_path(int(params["a"]), int(params["b"]))
    phi = gen_random_cnf(int(params["vars"]), int(params["clauses"]), seed)
    return karp_graph(phi).graph


def _run_trial(args) -> ExperimentRow:
    family, params, seed, trial, run_exact, exact_limit = args
    sub = trial_seed(seed, trial)
    g = make_graph(family, params, sub)
    r = bounds_report(g, run_exact=run_exact, exact_limit=exact_limit)
    if r.bound_mad > r.bound_delta:
        raise BoundViolation(f"trial {trial}: floor(MAD+1)={r.bound_mad} > Delta+1={r.bound_delta}")
    if r.bound_soto is not None and r.bound_mad > r.bound_soto:
        raise BoundViolation(f"trial {trial}: floor(MAD+1)={r.bound_mad} > Soto={r.bound_soto}")
    if r.exact_chromatic is not None and r.exact_chromatic > r.bound_mad:
        raise BoundViolation(f"trial {trial}: chi={r.exact_chromatic} > floor(MAD+1)={r.bound_mad}")
    return ExperimentRow(
        family=family,
        trial=trial,
        seed=sub,
        n=r.n,
        m=r.m,
        is_ah=r.is_ah,
        bound_mad=r.bound_mad,
        bound_delta=r.bound_delta,
        bound_brooks=r.bound_brooks,
        bound_soto=r.bound_soto,
        lower_clique=r.lower_clique,
        degeneracy_plus_1=r.degeneracy + 1,
        greedy_colors=r.greedy_colors,
        exact_chromatic=r.exact_chromatic,
    )


def run_compare(
    family: str,
    params: dict,
    trials: int,
    seed: int,
    run_exact: bool = False,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
    jobs: int = 1,
) -> list[ExperimentRow]:
    """One row per trial, in trial order.

    Every row is checked against ``floor(MAD+1) <= Delta+1``, against the Soto
    bound when the graph is connected, and against the exact chromatic number
    when it was computed; a failure raises :class:`BoundViolation`. Trials
    only depend on ``(seed, trial)``, so ``jobs > 1`` gives identical rows.
    """
    if trials < 0:
        raise BadParams("trials must be non-negative")
    check_family(family, params)
    tasks = [(family, dict(params), seed, i, run_exact, exact_limit) for i in range(trials)]
    if jobs > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_trial, tasks))
    return [_run_trial(t) for t in tasks]


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(f.name for f in fields(ExperimentRow))
    for row in rows:
        writer.writerow(_cell(v) for v in astuple(row))
    return buf.getvalue()
