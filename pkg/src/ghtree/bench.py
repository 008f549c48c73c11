"""Benchmark harness: per-run statistics as JSON lines and fitted constants."""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict

import numpy as np

from .config import DEFAULT_CONFIG, GHConfig
from .generators import generate
from .hypergraph import Hypergraph
from .oracle import MAXFLOW_ORACLE_CAP, verify_ghtree
from .recursive import compute_ghtree
from .stats import depth_bound, size_constant

# unweighted scaling suite at a fixed average degree of 20
SCALING_SIZES = (2000, 4000, 8000, 16000)
SCALING_DENSITY = 10


def scaling_suite(sizes=SCALING_SIZES, density=SCALING_DENSITY, seeds=(0,)) -> list[dict]:
    return [
        {"kind": "gnm", "params": {"n": m // density, "m": m}, "seed": s}
        for m in sizes for s in seeds
    ]


def run_instance(G, seed: int = 0, config: GHConfig = DEFAULT_CONFIG, *,
                 oracle_cap: int = MAXFLOW_ORACLE_CAP, label: dict | None = None) -> dict:
    """Build, certify and summarise one run."""
    start = time.perf_counter()
    T = compute_ghtree(G, None, seed, config)
    wall = (time.perf_counter() - start) * 1000.0
    report = verify_ghtree(G, None, T, oracle_cap=oracle_cap)
    st = T.stats
    m = G.p if isinstance(G, Hypergraph) else G.m
    u = int(T.terminals.size)
    row = dict(label or {})
    row.update(
        n=G.n,
        m=m,
        terminals=u,
        seed=seed,
        depth=st.depth,
        depth_bound=depth_bound(u),
        per_level_edges=st.per_level_edges,
        per_level_vertices=st.per_level_vertices,
        instance_edges=st.instance_edge_sum,
        maxflow_calls=st.maxflow_calls,
        maxflow_edge_sum=st.maxflow_edge_sum,
        c_size=size_constant(st.instance_edge_sum, max(m, 1), u),
        c_mf=st.maxflow_calls / max(math.log2(max(G.n, 2)) ** 6, 1.0),
        partial_depth=st.partial_depth,
        retries=st.retries,
        wall_ms=wall,
        certified=report.ok,
        verified=report.ok and not report.oracle_refused,
    )
    return row


def _run_entry(args):
    entry, config, oracle_cap = args
    G = generate(entry["kind"], entry.get("seed", 0), **entry.get("params", {}))
    return run_instance(G, entry.get("seed", 0), config, oracle_cap=oracle_cap,
                        label={"kind": entry["kind"], "params": entry.get("params", {})})


def run_suite(suite: list[dict], *, config: GHConfig = DEFAULT_CONFIG, workers: int = 1,
              oracle_cap: int = MAXFLOW_ORACLE_CAP, out=None) -> list[dict]:
    """Run every suite entry; rows come back in suite order and are appended to ``out``."""
    jobs = [(entry, config, oracle_cap) for entry in suite]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_run_entry, jobs))
    else:
        rows = [_run_entry(job) for job in jobs]
    if out is not None:
        with open(out, "a") as fh:
            for row in rows:
                fh.write(json.dumps(row, sort_keys=True) + "\n")
    return rows


def summarize(rows: list[dict]) -> dict:
    """Fitted constants plus the scaling trend of ``c_size`` against ``m``."""
    c = np.array([r["c_size"] for r in rows], dtype=float)
    m = np.array([r["m"] for r in rows], dtype=float)
    out = {
        "runs": len(rows),
        "c_size": float(c.max()) if c.size else 0.0,
        "c_size_ratio": float(c.max() / c.min()) if c.size else 0.0,
        "c_mf": float(max(r["c_mf"] for r in rows)) if rows else 0.0,
        "depth_ok": all(r["depth"] <= r["depth_bound"] for r in rows),
    }
    if np.unique(m).size >= 2:
        out["c_size_loglog_slope"] = float(np.polyfit(np.log(m), np.log(c), 1)[0])
    return out


def config_dict(config: GHConfig) -> dict:
    return asdict(config)
