"""Exhaustive search over small signed graphs up to switching.

Enumerates one representative per isomorphism class of connected underlying
graphs, and per underlying graph one signed representative per switching class
(spanning-tree edges pinned positive). Searches maximize edges, spectral
radius, or negative edges at maximum edge count, and theorem verifiers match
the maximizers against the named constructions.
"""

from __future__ import annotations

import json
import math
import os
import time
from dataclasses import dataclass, replace
from functools import lru_cache
from multiprocessing import get_context

import numpy as np

from ._render import json_scalar
from .bounds import (
    SPECTRAL_SLACK,
    BoundReport,
    edge_bound,
    neg_edge_bound,
    rho_bound,
)
from .core import (
    SignedGraph,
    canonical_form,
    canonical_signed_code,
    find_signed_triangles,
    is_balanced,
    is_connected,
    signed_isomorphic,
    switching_equivalent,
    switching_isomorphic,
)
from .families import (
    build_complete,
    build_gst,
    build_gst_maxneg,
    build_kn_switched_maxneg,
)
from .graphio import format_graph
from .spectral import FORMULA_TOL, SpectralError, eigenvalues

__all__ = [
    "OBJECTIVES",
    "FORBIDDEN",
    "THEOREMS",
    "SearchConfig",
    "SearchReport",
    "SearchTimeout",
    "enumerate_underlying",
    "enumerate_signatures",
    "search",
    "verify_theorem",
    "switching_neg_edge_maximum",
]

OBJECTIVES = ("MAX_EDGES", "MAX_RHO", "MAX_NEG_EDGES_AT_MAX_EDGES")
FORBIDDEN = ("C3_MINUS", "C3_PLUS", "NONE")
THEOREMS = ("T1_1", "T1_2_EDGES", "T1_2_NEG", "T1_3", "L2_2", "L3_6_ORDER")

_MIN_N, _MAX_N = 4, 8
_BATCH_CLASSES = 256
_EIG_BATCH = 8192


@dataclass(frozen=True)
class SearchConfig:
    n: int
    objective: str = "MAX_EDGES"
    forbidden: str = "C3_MINUS"
    require_unbalanced: bool = True
    require_connected: bool = True
    workers: int = 1
    prune_with_edge_bound: bool = True

    def validate(self):
        if not (_MIN_N <= self.n <= _MAX_N):
            raise ValueError(f"search supports {_MIN_N} <= n <= {_MAX_N}, got {self.n}")
        if self.objective not in OBJECTIVES:
            raise ValueError(f"unknown objective {self.objective!r}")
        if self.forbidden not in FORBIDDEN:
            raise ValueError(f"unknown forbidden-triangle selector {self.forbidden!r}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if not self.require_connected:
            raise ValueError("search only enumerates connected graphs")

    def to_json(self) -> str:
        parts = [
            f'"n":{self.n}',
            f'"objective":{json_scalar(self.objective)}',
            f'"forbidden":{json_scalar(self.forbidden)}',
            f'"require_unbalanced":{json_scalar(self.require_unbalanced)}',
            f'"require_connected":{json_scalar(self.require_connected)}',
            f'"workers":{self.workers}',
            f'"prune_with_edge_bound":{json_scalar(self.prune_with_edge_bound)}',
        ]
        return "{" + ",".join(parts) + "}"


@dataclass
class SearchReport:
    config: SearchConfig
    optimum: float | int
    witnesses: list[SignedGraph]
    matched_family: list[str | None]
    counts: dict[str, int]
    wall_time: float

    def to_json(self) -> str:
        """Stable-order JSON; wall_time is excluded so identical flags give
        byte-identical reports."""
        wit = ",".join(json_scalar(format_graph(w)) for w in self.witnesses)
        fam = ",".join(json_scalar(m) for m in self.matched_family)
        cnt = ",".join(f'"{k}":{self.counts[k]}' for k in
                       ("underlying_scanned", "signatures_scanned", "feasible"))
        parts = [
            f'"config":{self.config.to_json()}',
            f'"optimum":{json_scalar(self.optimum)}',
            f'"witnesses":[{wit}]',
            f'"matched_family":[{fam}]',
            f'"counts":{{{cnt}}}',
        ]
        return "{" + ",".join(parts) + "}"


class SearchTimeout(RuntimeError):
    """Time budget exceeded; carries the partial report."""

    def __init__(self, partial: SearchReport):
        self.partial = partial
        super().__init__(
            f"time budget exceeded after {partial.counts['underlying_scanned']} "
            f"underlying classes"
        )


# ---------------------------------------------------------------------------
# Underlying-graph enumeration (one representative per isomorphism class)
# ---------------------------------------------------------------------------

def _cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _bitmap_to_adj(code: int, n: int) -> np.ndarray:
    ncells = n * (n - 1) // 2
    nbytes = (ncells + 7) // 8
    raw = np.frombuffer(code.to_bytes(nbytes, "big"), dtype=np.uint8)
    bits = np.unpackbits(raw)[:ncells]
    adj = np.zeros((n, n), dtype=bool)
    for (i, j), b in zip(_cells(n), bits):
        if b:
            adj[i, j] = adj[j, i] = True
    return adj


@lru_cache(maxsize=None)
def _connected_class_bitmaps(n: int) -> tuple[int, ...]:
    # Grow by one vertex at a time: every connected graph arises from a
    # connected graph minus a non-cutvertex, so extending each smaller class
    # representative by every nonempty attachment mask reaches every class.
    if n == 1:
        return (0,)
    out = set()
    for code in _connected_class_bitmaps(n - 1):
        base = _bitmap_to_adj(code, n - 1)
        for mask in range(1, 1 << (n - 1)):
            adj = np.zeros((n, n), dtype=bool)
            adj[: n - 1, : n - 1] = base
            for v in range(n - 1):
                if (mask >> v) & 1:
                    adj[v, n - 1] = adj[n - 1, v] = True
            out.add(canonical_form(adj)[0])
    return tuple(sorted(out))


def enumerate_underlying(n: int):
    """Yield one all-positive representative per isomorphism class of connected
    graphs on n vertices, in canonical-bitmap order."""
    if not (_MIN_N <= n <= _MAX_N):
        raise ValueError(f"enumeration supports {_MIN_N} <= n <= {_MAX_N}, got {n}")
    for code in _connected_class_bitmaps(n):
        yield SignedGraph(_bitmap_to_adj(code, n).astype(np.int8))


def _bfs_nontree_edges(adj: np.ndarray) -> list[tuple[int, int]]:
    # Same spanning tree as canonical_switch: breadth-first from vertex 0,
    # neighbors in increasing index order.
    n = adj.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    order = [0]
    tree = set()
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for u in np.nonzero(adj[v])[0]:
            u = int(u)
            if not seen[u]:
                seen[u] = True
                tree.add((min(v, u), max(v, u)))
                order.append(u)
    if not seen.all():
        raise ValueError("graph must be connected")
    return [(i, j) for i, j in _cells(n) if adj[i, j] and (i, j) not in tree]


def enumerate_signatures(g: SignedGraph):
    """Yield one signed graph per switching class of g's underlying graph.

    Spanning-tree edges are pinned +1; the 2^(m-n+1) sign patterns on the
    non-tree edges enumerate the switching classes exactly once each.
    """
    adj = np.abs(g.adj).astype(bool)
    nontree = _bfs_nontree_edges(adj)
    for pattern in range(1 << len(nontree)):
        yield _signature_graph(adj, nontree, pattern)


def _signature_graph(adj_bool: np.ndarray, nontree, pattern: int) -> SignedGraph:
    a = adj_bool.astype(np.int8)
    for i, (u, v) in enumerate(nontree):
        if (pattern >> i) & 1:
            a[u, v] = a[v, u] = -1
    return SignedGraph(a)


def _triangle_masks(adj: np.ndarray, nontree) -> list[int]:
    n = adj.shape[0]
    index = {e: i for i, e in enumerate(nontree)}
    masks = []
    for i in range(n):
        for j in range(i + 1, n):
            if not adj[i, j]:
                continue
            for k in range(j + 1, n):
                if adj[i, k] and adj[j, k]:
                    m = 0
                    for e in ((i, j), (i, k), (j, k)):
                        if e in index:
                            m |= 1 << index[e]
                    masks.append(m)
    return masks


def _feasible_patterns(k: int, tri_masks, forbidden: str,
                       require_unbalanced: bool) -> np.ndarray:
    pats = np.arange(1 << k, dtype=np.uint64)
    ok = np.ones(pats.shape, dtype=bool)
    if forbidden != "NONE":
        want_odd = forbidden == "C3_PLUS"
        for m in tri_masks:
            par = (np.bitwise_count(pats & np.uint64(m)) & 1).astype(bool)
            ok &= par if want_odd else ~par
            if not ok.any():
                break
    if require_unbalanced:
        # with the tree pinned +1, pattern 0 is exactly the balanced class
        ok &= pats != 0
    return pats[ok]


# ---------------------------------------------------------------------------
# Scan workers and the coordinator
# ---------------------------------------------------------------------------

def _scan_chunk(args):
    codes, n, objective, forbidden, require_unbalanced, prune = args
    slack = SPECTRAL_SLACK if objective == "MAX_RHO" else 0
    best = -math.inf
    cands: list[tuple[int, int, float]] = []
    scanned = 0
    feasible = 0
    for code in codes:
        adj = _bitmap_to_adj(code, n)
        m = int(adj.sum()) // 2
        nontree = _bfs_nontree_edges(adj)
        k = len(nontree)
        tri_masks = _triangle_masks(adj, nontree) if forbidden != "NONE" else []
        feas = _feasible_patterns(k, tri_masks, forbidden, require_unbalanced)
        scanned += 1 << k
        feasible += len(feas)
        if len(feas) == 0:
            continue
        if objective == "MAX_EDGES":
            if m > best:
                best = m
                cands = [c for c in cands if c[2] >= best]
            if m >= best:
                cands.extend((code, int(p), float(m)) for p in feas)
            continue
        # MAX_RHO: batched symmetric eigenvalues of all feasible signatures
        base = adj.astype(np.float64)
        for lo in range(0, len(feas), _EIG_BATCH):
            part = feas[lo:lo + _EIG_BATCH]
            stack = np.repeat(base[None, :, :], len(part), axis=0)
            for i, (u, v) in enumerate(nontree):
                neg = ((part >> np.uint64(i)) & np.uint64(1)).astype(bool)
                stack[neg, u, v] = -1.0
                stack[neg, v, u] = -1.0
            try:
                w = np.linalg.eigvalsh(stack)
            except np.linalg.LinAlgError as exc:  # pragma: no cover
                raise SpectralError(f"batch eigensolver failed: {exc}") from exc
            lam1 = w[:, -1]
            if prune and math.sqrt(m) < best - slack:
                # sqrt(e) dominates -lambda_n on feasible graphs, so only the
                # lambda_1 branch can still improve the current best
                vals = lam1
            else:
                vals = np.maximum(lam1, -w[:, 0])
            vmax = float(vals.max())
            if vmax > best:
                best = vmax
                if len(cands) > 20000:
                    cands = [c for c in cands if c[2] >= best - slack]
            sel = vals >= best - slack
            cands.extend(
                (code, int(p), float(v)) for p, v in zip(part[sel], vals[sel])
            )
    return {"best": best, "cands": cands, "scanned": scanned,
            "feasible": feasible, "classes": len(codes)}


def _merge(partials):
    best = -math.inf
    cands = []
    counters = {"underlying_scanned": 0, "signatures_scanned": 0, "feasible": 0}
    for p in partials:
        best = max(best, p["best"])
        cands.extend(p["cands"])
        counters["underlying_scanned"] += p["classes"]
        counters["signatures_scanned"] += p["scanned"]
        counters["feasible"] += p["feasible"]
    return best, cands, counters


def _chunks(seq, pieces):
    size = max(1, math.ceil(len(seq) / pieces))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def _match_family(w: SignedGraph, n: int) -> str | None:
    if w.edge_count == n * (n - 1) // 2:
        if switching_equivalent(w, build_complete(n, 1)):
            return "complete-pos"
        if switching_equivalent(w, build_complete(n, -1)):
            return "complete-neg"
    if n >= 4 and w.edge_count == edge_bound(n):
        for s in range(1, (n - 2) // 2 + 1):
            if switching_isomorphic(w, build_gst(s, n - 2 - s)):
                return f"gst({s},{n - 2 - s})"
    return None


def _recheck_witness(w: SignedGraph, config: SearchConfig, value):
    if config.require_connected and not is_connected(w):
        raise RuntimeError("internal error: disconnected witness emitted")
    if config.require_unbalanced and is_balanced(w):
        raise RuntimeError("internal error: balanced witness emitted")
    if config.forbidden == "C3_MINUS" and find_signed_triangles(w, -1):
        raise RuntimeError("internal error: witness contains a negative triangle")
    if config.forbidden == "C3_PLUS" and find_signed_triangles(w, 1):
        raise RuntimeError("internal error: witness contains a positive triangle")
    if config.objective == "MAX_EDGES":
        ok = w.edge_count == value
        observed = w.edge_count
    else:
        observed = eigenvalues(w).rho
        ok = abs(observed - value) <= SPECTRAL_SLACK
    if not ok:
        raise RuntimeError(
            f"internal error: witness re-evaluates to {observed}, expected {value}"
        )


def _finalize(config, best, cands, counters, t0) -> SearchReport:
    if best == -math.inf:
        raise ValueError("no feasible signed graph under this configuration")
    slack = SPECTRAL_SLACK if config.objective == "MAX_RHO" else 0
    survivors = sorted(
        (c for c in cands if c[2] >= best - slack), key=lambda c: (c[0], c[1])
    )
    if len(survivors) > 5000:
        raise ValueError(
            f"{len(survivors)} signatures tie the optimum; witness "
            "materialization is only supported for constrained searches"
        )
    seen = {}
    for code, pattern, _val in survivors:
        adj = _bitmap_to_adj(code, config.n)
        g = _signature_graph(adj, _bfs_nontree_edges(adj), pattern)
        key = canonical_signed_code(g)
        if key not in seen:
            seen[key] = g
    witnesses = [seen[k] for k in sorted(seen)]
    optimum = int(best) if config.objective == "MAX_EDGES" else best
    for w in witnesses:
        _recheck_witness(w, config, optimum)
    matched = [_match_family(w, config.n) for w in witnesses]
    return SearchReport(
        config=config,
        optimum=optimum,
        witnesses=witnesses,
        matched_family=matched,
        counts=counters,
        wall_time=time.perf_counter() - t0,
    )


def _checkpoint_load(path, fingerprint):
    if not path or not os.path.exists(path):
        return None
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("fingerprint") != fingerprint:
        raise ValueError("checkpoint does not match this search configuration")
    return data


def _checkpoint_save(path, fingerprint, next_batch, best, cands, counters):
    data = {
        "fingerprint": fingerprint,
        "next_batch": next_batch,
        "best": None if best == -math.inf else best,
        "cands": [[c, p, v] for c, p, v in cands],
        "counters": counters,
    }
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(data, fh)
    os.replace(tmp, path)


def _scan(config: SearchConfig, checkpoint, time_budget, progress, t0) -> SearchReport:
    codes = list(_connected_class_bitmaps(config.n))
    # results are worker-independent, so a resumed run may change parallelism
    fingerprint = replace(config, workers=1).to_json()
    best = -math.inf
    cands: list[tuple[int, int, float]] = []
    counters = {"underlying_scanned": 0, "signatures_scanned": 0, "feasible": 0}
    start_batch = 0
    state = _checkpoint_load(checkpoint, fingerprint)
    if state is not None:
        best = -math.inf if state["best"] is None else state["best"]
        cands = [(int(c), int(p), float(v)) for c, p, v in state["cands"]]
        counters = {k: int(v) for k, v in state["counters"].items()}
        start_batch = int(state["next_batch"])

    batches = _chunks(codes, math.ceil(len(codes) / _BATCH_CLASSES))
    pool = None
    try:
        if config.workers > 1:
            pool = get_context().Pool(processes=config.workers)
        for bi in range(start_batch, len(batches)):
            batch = batches[bi]
            args = [
                (chunk, config.n, config.objective, config.forbidden,
                 config.require_unbalanced, config.prune_with_edge_bound)
                for chunk in _chunks(batch, config.workers)
            ]
            partials = pool.map(_scan_chunk, args) if pool else [_scan_chunk(a) for a in args]
            pbest, pcands, pcounts = _merge(partials)
            best = max(best, pbest)
            slack = SPECTRAL_SLACK if config.objective == "MAX_RHO" else 0
            cands = [c for c in cands + pcands if c[2] >= best - slack]
            for key in counters:
                counters[key] += pcounts[key]
            if checkpoint:
                _checkpoint_save(checkpoint, fingerprint, bi + 1, best, cands, counters)
            if progress:
                progress(dict(counters))
            if time_budget is not None and time.perf_counter() - t0 > time_budget:
                raise SearchTimeout(_finalize(config, best, cands, counters, t0))
    finally:
        if pool:
            pool.close()
            pool.join()
    if checkpoint and os.path.exists(checkpoint):
        os.remove(checkpoint)
    return _finalize(config, best, cands, counters, t0)


def switching_neg_edge_maximum(g: SignedGraph):
    """Maximum negative edge count over all 2^n switchings of g.

    Returns (best, maximizers) where maximizers are the distinct switched
    graphs attaining the maximum, in deterministic order.
    """
    best = -1
    maximizers: dict[bytes, SignedGraph] = {}
    n = g.n
    for mask in range(1 << n):
        spin = np.array([-1 if (mask >> v) & 1 else 1 for v in range(n)],
                        dtype=np.int8)
        adj = np.outer(spin, spin) * g.adj
        neg = int(np.count_nonzero(adj == -1)) // 2
        if neg > best:
            best = neg
            maximizers = {}
        if neg == best:
            key = adj.tobytes()
            if key not in maximizers:
                maximizers[key] = SignedGraph(adj)
    return best, [maximizers[k] for k in sorted(maximizers)]


def search(config: SearchConfig, *, checkpoint: str | None = None,
           time_budget: float | None = None, progress=None) -> SearchReport:
    """Run an exhaustive search; returns optimum, deduplicated witnesses, and counters.

    Results are deterministic and independent of the worker count. A checkpoint
    path makes long runs resumable (class-batch high-water mark).
    """
    config.validate()
    t0 = time.perf_counter()
    if config.objective != "MAX_NEG_EDGES_AT_MAX_EDGES":
        return _scan(config, checkpoint, time_budget, progress, t0)

    # two-phase: find the edge maximizers, then maximize negative edges over
    # all switchings of every maximizer class
    base = replace(config, objective="MAX_EDGES")
    edge_rep = _scan(base, checkpoint, time_budget, progress, t0)
    best_neg = -1
    maximizers: dict[bytes, SignedGraph] = {}
    switchings = 0
    for w in edge_rep.witnesses:
        switchings += 1 << config.n
        neg, maxs = switching_neg_edge_maximum(w)
        if neg > best_neg:
            best_neg = neg
            maximizers = {}
        if neg == best_neg:
            for m in maxs:
                maximizers.setdefault(m.adj.tobytes(), m)
    witnesses = [maximizers[k] for k in sorted(maximizers)]
    matched = [
        "gst-maxneg" if signed_isomorphic(w, build_gst_maxneg(config.n)) else None
        for w in witnesses
    ]
    counts = dict(edge_rep.counts)
    counts["signatures_scanned"] += switchings
    return SearchReport(
        config=config,
        optimum=best_neg,
        witnesses=witnesses,
        matched_family=matched,
        counts=counts,
        wall_time=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# Theorem verification
# ---------------------------------------------------------------------------

def _complete_signature_classes(n: int, forbidden: str) -> list[SignedGraph]:
    """All switching classes of signatures of K_n avoiding the forbidden triangle."""
    adj = np.abs(build_complete(n, 1).adj).astype(bool)
    nontree = _bfs_nontree_edges(adj)
    k = len(nontree)
    tri_masks = _triangle_masks(adj, nontree)
    if k <= 22:
        feas = _feasible_patterns(k, tri_masks, forbidden, False)
        return [_signature_graph(adj, nontree, int(p)) for p in feas]
    # beyond scan range the constraint set is an affine GF(2) system
    solutions = _gf2_affine_solutions(tri_masks, k, forbidden == "C3_PLUS")
    return [_signature_graph(adj, nontree, p) for p in solutions]


def _gf2_affine_solutions(masks: list[int], width: int, want_odd: bool) -> list[int]:
    """Solutions of parity(x & mask) = want_odd for every mask, as bit patterns."""
    # rows augmented with a constant column at bit `width`; pivots are chosen
    # among the variable bits only
    rhs = 1 << width
    var_mask = rhs - 1
    rows = [m | (rhs if want_odd else 0) for m in masks]
    pivots: dict[int, int] = {}
    for row in rows:
        r = row
        for col in sorted(pivots, reverse=True):
            if (r >> col) & 1:
                r ^= pivots[col]
        if r & var_mask == 0:
            if r & rhs:
                return []  # inconsistent system
            continue
        lead = (r & var_mask).bit_length() - 1
        for col in list(pivots):
            if (pivots[col] >> lead) & 1:
                pivots[col] ^= r
        pivots[lead] = r
    free = [c for c in range(width) if c not in pivots]
    if len(free) > 20:
        raise ValueError("solution space too large to enumerate")
    particular = 0
    for col, row in pivots.items():
        if (row >> width) & 1:
            particular |= 1 << col
    basis = []
    for f in free:
        v = 1 << f
        for col, row in pivots.items():
            if (row >> f) & 1:
                v |= 1 << col
        basis.append(v)
    out = []
    for sel in range(1 << len(basis)):
        x = particular
        for i, b in enumerate(basis):
            if (sel >> i) & 1:
                x ^= b
        out.append(x)
    return sorted(out)


def _verify_t1_1(n: int, workers: int) -> BoundReport:
    if not (3 <= n <= _MAX_N):
        raise ValueError(f"T1_1 verification supports 3 <= n <= {_MAX_N}")
    outcomes = {}
    for forbidden, target in (
        ("C3_MINUS", build_complete(n, 1)),
        ("C3_PLUS", build_complete(n, -1)),
    ):
        classes = _complete_signature_classes(n, forbidden)
        outcomes[forbidden] = (
            len(classes) == 1 and switching_equivalent(classes[0], target)
        )
    passed = all(outcomes.values())
    rep = BoundReport(
        bound_name="t1_1",
        n=n,
        bound_value=n * (n - 1) // 2,
        observed=n * (n - 1) // 2,
        satisfied=True,
        witness=build_complete(n, 1),
        passed=passed,
        notes="unique homogeneous switching class per forbidden triangle sign",
    )
    rep.details = {k: bool(v) for k, v in outcomes.items()}
    return rep


def _verify_t1_2_edges(n: int, workers: int) -> BoundReport:
    rep = search(SearchConfig(n=n, objective="MAX_EDGES", workers=workers))
    bound = edge_bound(n)
    matched = all(m is not None and m.startswith("gst(") for m in rep.matched_family)
    passed = rep.optimum == bound and len(rep.witnesses) > 0 and matched
    out = BoundReport(
        bound_name="t1_2_edges",
        n=n,
        bound_value=bound,
        observed=rep.optimum,
        satisfied=rep.optimum <= bound,
        witness=rep.witnesses[0] if rep.witnesses else None,
        passed=passed,
        notes=f"{len(rep.witnesses)} maximizer classes: "
              + ", ".join(str(m) for m in rep.matched_family),
    )
    out.details = {"counts": rep.counts, "matched_family": rep.matched_family}
    return out


def _verify_t1_2_neg(n: int, workers: int) -> BoundReport:
    if not (4 <= n <= 16):
        raise ValueError("T1_2_NEG verification supports 4 <= n <= 16")
    bound = neg_edge_bound(n)
    if n <= _MAX_N:
        rep = search(SearchConfig(n=n, objective="MAX_NEG_EDGES_AT_MAX_EDGES",
                                  workers=workers))
        observed = rep.optimum
        maximizers = rep.witnesses
        hits = sum(1 for m in rep.matched_family if m == "gst-maxneg")
        # the maximum must be attained by the canonical layout; from n = 6 on
        # it is also the unique maximizer (n = 5 admits one extra tie class)
        structure_ok = hits > 0 and (n <= 5 or hits == len(maximizers))
        notes = (f"switchings of every enumerated edge-maximizer class; "
                 f"{len(maximizers)} maximizers, {hits} in canonical layout")
    else:
        # beyond enumeration range: brute-force the 2^n switchings of every
        # split of the extremal construction itself
        observed = -1
        maximizers = []
        at_balanced_split_only = True
        s_star = (n - 2) // 2
        for s in range(1, (n - 2) // 2 + 1):
            neg, maxs = switching_neg_edge_maximum(build_gst(s, n - 2 - s))
            if neg > observed:
                observed = neg
                maximizers = maxs
                at_balanced_split_only = s == s_star
            elif neg == observed:
                maximizers.extend(maxs)
                at_balanced_split_only = at_balanced_split_only and s == s_star
        structure_ok = (
            at_balanced_split_only
            and maximizers == [build_gst_maxneg(n)]
        )
        notes = "switchings of the construction family (n beyond enumeration)"
    passed = observed == bound and structure_ok
    return BoundReport(
        bound_name="t1_2_neg",
        n=n,
        bound_value=bound,
        observed=observed,
        satisfied=observed <= bound,
        witness=maximizers[0] if maximizers else None,
        passed=passed,
        notes=notes,
    )


def _verify_t1_3(n: int, workers: int) -> BoundReport:
    rep = search(SearchConfig(n=n, objective="MAX_RHO", workers=workers))
    bound = rho_bound(n)
    expect = f"gst(1,{n - 3})"
    passed = (
        abs(rep.optimum - bound) <= FORMULA_TOL
        and len(rep.witnesses) == 1
        and rep.matched_family == [expect]
    )
    out = BoundReport(
        bound_name="t1_3",
        n=n,
        bound_value=bound,
        observed=rep.optimum,
        satisfied=rep.optimum <= bound + FORMULA_TOL,
        witness=rep.witnesses[0] if rep.witnesses else None,
        passed=passed,
        notes=f"maximizers: {', '.join(str(m) for m in rep.matched_family)}",
    )
    out.details = {"counts": rep.counts}
    return out


def _is_halved_switching_of_positive(g: SignedGraph) -> bool:
    # balanced complete signed graph whose two spin classes are as even as
    # possible: exactly the switchings of all-positive at floor(n/2) vertices
    n = g.n
    if g.edge_count != n * (n - 1) // 2:
        return False
    spin = np.ones(n, dtype=np.int8)
    spin[1:] = g.adj[0, 1:]
    expected = np.outer(spin, spin).astype(np.int8)
    np.fill_diagonal(expected, 0)
    if not np.array_equal(expected, g.adj):
        return False
    return int(np.sum(spin == -1)) in (n // 2, (n + 1) // 2)


def _verify_l2_2(n: int) -> BoundReport:
    if not (3 <= n <= 12):
        raise ValueError("L2_2 verification supports 3 <= n <= 12")
    reps = _complete_signature_classes(n, "C3_MINUS")
    bound = (n // 2) * ((n + 1) // 2)
    best = -1
    maximizers: dict[bytes, SignedGraph] = {}
    for rep_graph in reps:
        neg, maxs = switching_neg_edge_maximum(rep_graph)
        if neg > best:
            best = neg
            maximizers = {}
        if neg == best:
            for m in maxs:
                maximizers.setdefault(m.adj.tobytes(), m)
    winners = [maximizers[k] for k in sorted(maximizers)]
    structure_ok = len(winners) > 0 and all(
        _is_halved_switching_of_positive(m) for m in winners
    )
    if n <= 6:
        # cheap cross-validation of the structural predicate; complete graphs
        # force a full permutation scan, so keep this to small orders
        structure_ok = structure_ok and all(
            switching_isomorphic(m, build_kn_switched_maxneg(n)) for m in winners
        )
    passed = best == bound and structure_ok
    return BoundReport(
        bound_name="l2_2",
        n=n,
        bound_value=bound,
        observed=best,
        satisfied=best <= bound,
        witness=winners[0] if winners else None,
        passed=passed,
        notes=f"{len(reps)} negative-triangle-free switching classes, "
              f"{len(winners)} maximizers",
    )


def _verify_l3_6_order(n: int) -> BoundReport:
    if not (5 <= n <= 40):
        raise ValueError("L3_6_ORDER verification supports 5 <= n <= 40")
    lams = [
        eigenvalues(build_gst(s, n - 2 - s)).eigenvalues[0]
        for s in range(1, (n - 2) // 2 + 1)
    ]
    strict = all(a - b > 1e-6 for a, b in zip(lams, lams[1:]))
    bound = rho_bound(n)
    formula_ok = abs(lams[0] - bound) <= FORMULA_TOL
    return BoundReport(
        bound_name="l3_6_order",
        n=n,
        bound_value=bound,
        observed=lams[0],
        satisfied=lams[0] <= bound + FORMULA_TOL,
        witness=build_gst(1, n - 3),
        passed=strict and formula_ok,
        notes="descending top eigenvalues: " + ", ".join(f"{v:.12g}" for v in lams),
    )


def verify_theorem(name: str, n: int, workers: int = 1) -> BoundReport:
    """Verify one of the named statements at order n; `passed` is the verdict."""
    key = name.upper().replace("-", "_")
    if key not in THEOREMS:
        raise ValueError(f"unknown theorem {name!r}; known: {', '.join(THEOREMS)}")
    if key == "T1_1":
        return _verify_t1_1(n, workers)
    if key == "T1_2_EDGES":
        return _verify_t1_2_edges(n, workers)
    if key == "T1_2_NEG":
        return _verify_t1_2_neg(n, workers)
    if key == "T1_3":
        return _verify_t1_3(n, workers)
    if key == "L2_2":
        return _verify_l2_2(n)
    return _verify_l3_6_order(n)
