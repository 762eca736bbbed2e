"""Builders for the named signed-graph families.

Vertex layout is fixed so the equitable partitions are index ranges and every
output is reproducible byte for byte: the two apex vertices are 0 (u) and
1 (v), the s clique vertices attached to u come next, then the t clique
vertices attached to v.
"""

from __future__ import annotations

import numpy as np

from .core import SignedGraph, switch

__all__ = [
    "build_gst",
    "build_gst_maxneg",
    "build_h",
    "build_complete",
    "build_kn_switched_maxneg",
    "build_family",
    "gst_partition",
    "h_partition",
    "FAMILY_NAMES",
]


def build_gst(s: int, t: int) -> SignedGraph:
    """Positive clique on s+t vertices, apex u joined to s of them, apex v to the
    other t, plus the single negative edge uv. Order n = s+t+2."""
    if s < 1 or t < 1:
        raise ValueError("build_gst needs s,t >= 1")
    n = s + t + 2
    adj = np.zeros((n, n), dtype=np.int8)
    adj[2:, 2:] = 1
    np.fill_diagonal(adj, 0)
    adj[0, 1] = adj[1, 0] = -1
    for i in range(2, s + 2):
        adj[0, i] = adj[i, 0] = 1
    for j in range(s + 2, n):
        adj[1, j] = adj[j, 1] = 1
    return SignedGraph(adj)


def gst_partition(s: int, t: int) -> list[list[int]]:
    """The 4-block equitable partition {u}, {v}, u-side, v-side."""
    n = s + t + 2
    return [[0], [1], list(range(2, s + 2)), list(range(s + 2, n))]


def build_gst_maxneg(n: int) -> SignedGraph:
    """The balanced-split family switched at v and the whole u-side, which
    maximizes the negative edge count within the family's switching class."""
    if n < 4:
        raise ValueError("build_gst_maxneg needs n >= 4")
    s = (n - 2) // 2
    t = (n - 1) // 2
    u_set = [1] + list(range(2, s + 2))
    return switch(build_gst(s, t), u_set)


def build_h(family: str, s: int, t: int) -> SignedGraph:
    """All-positive comparison graphs derived from the clique-plus-apexes family.

    H1(s,t): delete the clique edge between the first u-side and first v-side
    vertex, then forget signs. H2(s,t), s >= 2: delete the edge between the
    first two u-side vertices instead. H3(s,t): forget signs and add a new
    vertex adjacent to every clique vertex (order s+t+3).
    """
    if family == "H1":
        if s < 1 or t < 1:
            raise ValueError("H1 needs s,t >= 1")
        base = build_gst(s, t)
        adj = np.abs(base.adj)
        adj[2, s + 2] = adj[s + 2, 2] = 0
        return SignedGraph(adj)
    if family == "H2":
        if s < 2 or t < 1:
            raise ValueError("H2 needs s >= 2 and t >= 1")
        base = build_gst(s, t)
        adj = np.abs(base.adj)
        adj[2, 3] = adj[3, 2] = 0
        return SignedGraph(adj)
    if family == "H3":
        if s < 1 or t < 1:
            raise ValueError("H3 needs s,t >= 1")
        base = build_gst(s, t)
        m = s + t + 2
        adj = np.zeros((m + 1, m + 1), dtype=np.int8)
        adj[:m, :m] = np.abs(base.adj)
        for i in range(2, m):
            adj[m, i] = adj[i, m] = 1
        return SignedGraph(adj)
    raise ValueError(f"unknown family {family!r}, expected H1, H2 or H3")


def h_partition(family: str, s: int, t: int) -> list[list[int]]:
    """Equitable partitions matching the build_h layouts."""
    n = s + t + 2
    if family == "H1":
        if s == 1:
            if t < 2:
                raise ValueError("H1 partition needs t >= 2 when s = 1")
            return [[0], [1], [2], [3], list(range(4, n))]
        if t < 2:
            raise ValueError("H1 partition needs t >= 2 when s >= 2")
        return [[0], [1], [2], [s + 2], list(range(3, s + 2)), list(range(s + 3, n))]
    if family == "H2":
        if s == 2:
            return [[0], [1], [2], [3], list(range(4, n))]
        return [[0], [1], [2], [3], list(range(4, s + 2)), list(range(s + 2, n))]
    if family == "H3":
        return [[0], [1], list(range(2, s + 2)), list(range(s + 2, n)), [n]]
    raise ValueError(f"unknown family {family!r}")


def build_complete(n: int, sign: int) -> SignedGraph:
    """The homogeneous complete signed graph (K_n, +) or (K_n, -)."""
    if n < 1:
        raise ValueError("build_complete needs n >= 1")
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or +1")
    adj = np.full((n, n), sign, dtype=np.int8)
    np.fill_diagonal(adj, 0)
    return SignedGraph(adj)


def build_kn_switched_maxneg(n: int) -> SignedGraph:
    """(K_n, +) switched at the first floor(n/2) vertices: the balanced complete
    signed graph with the most negative edges."""
    if n < 2:
        raise ValueError("build_kn_switched_maxneg needs n >= 2")
    return switch(build_complete(n, 1), range(n // 2))


FAMILY_NAMES = (
    "gst",
    "gst-maxneg",
    "h1",
    "h2",
    "h3",
    "unbal-c4",
    "complete-pos",
    "complete-neg",
    "kn-switched-maxneg",
)


def build_family(name: str, s: int | None = None, t: int | None = None,
                 n: int | None = None) -> SignedGraph:
    """Dispatch a family by its command-line name."""
    key = name.lower().replace("_", "-")
    if key == "gst":
        _need(s is not None and t is not None, "gst needs --s and --t")
        return build_gst(s, t)
    if key == "gst-maxneg":
        _need(n is not None, "gst-maxneg needs --n")
        return build_gst_maxneg(n)
    if key in ("h1", "h2", "h3"):
        _need(s is not None and t is not None, f"{key} needs --s and --t")
        return build_h(key.upper(), s, t)
    if key == "unbal-c4":
        return build_gst(1, 1)
    if key == "complete-pos":
        _need(n is not None, "complete-pos needs --n")
        return build_complete(n, 1)
    if key == "complete-neg":
        _need(n is not None, "complete-neg needs --n")
        return build_complete(n, -1)
    if key == "kn-switched-maxneg":
        _need(n is not None, "kn-switched-maxneg needs --n")
        return build_kn_switched_maxneg(n)
    raise ValueError(f"unknown family {name!r}; known: {', '.join(FAMILY_NAMES)}")


def _need(ok: bool, msg: str):
    if not ok:
        raise ValueError(msg)
