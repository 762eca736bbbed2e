"""Signed graphs: representation, switching algebra, balance, triangles, cycles.

A signed graph on vertices 0..n-1 is stored as a dense symmetric matrix with
entries in {-1, 0, +1}. All operations here are pure functions returning new
values; SignedGraph instances are immutable and hashable.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SignedGraph",
    "Cycle",
    "new_signed_graph",
    "from_adjacency",
    "permute",
    "switch",
    "negate",
    "is_connected",
    "is_balanced",
    "canonical_switch",
    "switching_equivalent",
    "switching_isomorphic",
    "find_signed_triangles",
    "shortest_unbalanced_cycle",
    "cycle_sign",
    "counts",
]


class SignedGraph:
    """Immutable signed graph backed by a read-only int8 sign matrix."""

    __slots__ = ("adj",)

    def __init__(self, adj):
        a = np.array(adj, dtype=np.int8)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        if a.shape[0] < 1:
            raise ValueError("signed graph needs at least one vertex")
        if not np.all(np.isin(a, (-1, 0, 1))):
            raise ValueError("adjacency entries must be in {-1, 0, +1}")
        if np.any(np.diag(a) != 0):
            raise ValueError("loops are not allowed (diagonal must be zero)")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        a.setflags(write=False)
        self.adj = a

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    @property
    def edge_count(self) -> int:
        return int(np.count_nonzero(self.adj)) // 2

    @property
    def neg_edge_count(self) -> int:
        return int(np.count_nonzero(self.adj == -1)) // 2

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges as (u, v, sign) with u < v, sorted."""
        iu, ju = np.nonzero(np.triu(self.adj))
        return [(int(u), int(v), int(self.adj[u, v])) for u, v in zip(iu, ju)]

    def neighbors(self, v: int) -> list[int]:
        return [int(u) for u in np.nonzero(self.adj[v])[0]]

    def underlying(self) -> "SignedGraph":
        """The same graph with every edge made positive."""
        return SignedGraph(np.abs(self.adj))

    def __eq__(self, other):
        return isinstance(other, SignedGraph) and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self):
        return f"SignedGraph(n={self.n}, e={self.edge_count}, e_neg={self.neg_edge_count})"


@dataclass(frozen=True)
class Cycle:
    """A cycle given by its vertex sequence and its edge-sign product."""

    vertices: tuple[int, ...]
    sign: int

    def __len__(self):
        return len(self.vertices)


def new_signed_graph(n: int, edges) -> SignedGraph:
    """Build a signed graph from an edge list of (u, v, sign) triples.

    Rejects loops, out-of-range or duplicate edges, and signs outside {-1, +1}.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"vertex count must be a positive integer, got {n!r}")
    adj = np.zeros((n, n), dtype=np.int8)
    seen = set()
    for u, v, s in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}): vertex out of range 0..{n - 1}")
        if u == v:
            raise ValueError(f"edge ({u},{v}): loops are not allowed")
        if s not in (-1, 1):
            raise ValueError(f"edge ({u},{v}): sign must be -1 or +1, got {s!r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge ({u},{v})")
        seen.add(key)
        adj[u, v] = adj[v, u] = s
    return SignedGraph(adj)


def from_adjacency(adj) -> SignedGraph:
    """Wrap a full sign matrix (validated) as a SignedGraph."""
    return SignedGraph(adj)


def permute(g: SignedGraph, order) -> SignedGraph:
    """Relabel so that new vertex i is old vertex order[i]."""
    idx = np.asarray(order, dtype=np.intp)
    if sorted(int(i) for i in idx) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    return SignedGraph(g.adj[np.ix_(idx, idx)])


def _check_vertex_set(g: SignedGraph, vertex_set) -> np.ndarray:
    members = frozenset(int(v) for v in vertex_set)
    if any(v < 0 or v >= g.n for v in members):
        raise ValueError("vertex set contains vertices outside the graph")
    mask = np.zeros(g.n, dtype=bool)
    mask[list(members)] = True
    return mask


def switch(g: SignedGraph, vertex_set) -> SignedGraph:
    """Negate every edge with exactly one endpoint in vertex_set."""
    mask = _check_vertex_set(g, vertex_set)
    s = np.where(mask, -1, 1).astype(np.int8)
    return SignedGraph(np.outer(s, s) * g.adj)


def negate(g: SignedGraph) -> SignedGraph:
    """Flip the sign of every edge."""
    return SignedGraph(-g.adj)


def is_connected(g: SignedGraph) -> bool:
    """Breadth-first reachability on the underlying graph."""
    seen = np.zeros(g.n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in np.nonzero(g.adj[v])[0]:
            if not seen[u]:
                seen[u] = True
                queue.append(int(u))
    return bool(seen.all())


def _components(g: SignedGraph):
    seen = np.zeros(g.n, dtype=bool)
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in np.nonzero(g.adj[v])[0]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(int(u))
                    queue.append(int(u))
        yield comp


def is_balanced(g: SignedGraph) -> bool:
    """True iff a spin assignment s:V->{+1,-1} has sign(uv) = s(u)s(v) on every edge.

    Checked by spin propagation over a breadth-first search, per component.
    """
    spin = np.zeros(g.n, dtype=np.int8)
    for comp in _components(g):
        root = comp[0]
        spin[root] = 1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in np.nonzero(g.adj[v])[0]:
                want = spin[v] * g.adj[v, u]
                if spin[u] == 0:
                    spin[u] = want
                    queue.append(int(u))
                elif spin[u] != want:
                    return False
    return True


def _bfs_tree_spins(g: SignedGraph) -> np.ndarray:
    # Spins that make every edge of the canonical spanning forest positive.
    # Tree: breadth-first from the smallest-index vertex of each component,
    # neighbors visited in increasing index order.
    spin = np.zeros(g.n, dtype=np.int8)
    for root in range(g.n):
        if spin[root] != 0:
            continue
        spin[root] = 1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in np.nonzero(g.adj[v])[0]:
                if spin[u] == 0:
                    spin[u] = spin[v] * g.adj[v, u]
                    queue.append(int(u))
    return spin


def canonical_switch(g: SignedGraph) -> SignedGraph:
    """The unique switching-equivalent graph whose canonical spanning forest is all-positive.

    Deterministic for a fixed labeling, so two signed graphs on the same labeled
    underlying graph are switching equivalent iff their canonical forms are equal.
    """
    spin = _bfs_tree_spins(g)
    return SignedGraph(np.outer(spin, spin) * g.adj)


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> bool:
    """True iff g1, g2 share the labeled underlying graph and a switching maps one to the other."""
    if g1.n != g2.n or not np.array_equal(np.abs(g1.adj), np.abs(g2.adj)):
        return False
    return canonical_switch(g1) == canonical_switch(g2)


def counts(g: SignedGraph) -> tuple[int, int]:
    """(edge count, negative edge count)."""
    return g.edge_count, g.neg_edge_count


def find_signed_triangles(g: SignedGraph, sign: int) -> list[Cycle]:
    """All triangles whose edge-sign product equals sign (+1 or -1)."""
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or +1")
    a = g.adj
    out = []
    for i, j, k in itertools.combinations(range(g.n), 3):
        p = int(a[i, j]) * int(a[j, k]) * int(a[i, k])
        if p == sign:
            out.append(Cycle((i, j, k), sign))
    return out


def cycle_sign(g: SignedGraph, vertices) -> int:
    """Edge-sign product along the closed walk vertices[0] -> ... -> vertices[0]."""
    vs = list(vertices)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise ValueError("cycle needs at least 3 distinct vertices")
    prod = 1
    for a, b in zip(vs, vs[1:] + vs[:1]):
        s = int(g.adj[a, b])
        if s == 0:
            raise ValueError(f"({a},{b}) is not an edge")
        prod *= s
    return prod


def shortest_unbalanced_cycle(g: SignedGraph) -> Cycle | None:
    """A minimum-length negative cycle, or None if the graph is balanced.

    Searches the signed double cover: two layers of V, positive edges stay
    within a layer, negative edges cross. The shortest path from (v, 0) to
    (v, 1), minimized over v, projects onto a shortest negative cycle.
    """
    if is_balanced(g):
        return None
    n = g.n
    best_len = None
    best_path = None
    for start in range(n):
        # nodes 0..n-1 are layer 0, n..2n-1 layer 1
        parent = np.full(2 * n, -2, dtype=np.int64)
        parent[start] = -1
        queue = deque([start])
        found = False
        while queue and not found:
            x = queue.popleft()
            v, layer = x % n, x // n
            for u in np.nonzero(g.adj[v])[0]:
                nl = layer if g.adj[v, u] == 1 else 1 - layer
                y = int(u) + n * nl
                if parent[y] == -2:
                    parent[y] = x
                    if y == start + n:
                        found = True
                        break
                    queue.append(y)
        if not found:
            continue
        path = [start + n]
        while path[-1] != start:
            path.append(int(parent[path[-1]]))
        path.reverse()
        if best_len is None or len(path) - 1 < best_len:
            best_len = len(path) - 1
            best_path = [p % n for p in path[:-1]]
    vs = tuple(best_path)
    # the globally shortest negative closed walk is a simple cycle
    assert len(set(vs)) == len(vs) and len(vs) >= 3
    assert cycle_sign(g, vs) == -1
    return Cycle(vs, -1)


# ---------------------------------------------------------------------------
# Canonical labeling machinery (shared with the search engine)
# ---------------------------------------------------------------------------

def _triu_cells(n: int):
    iu, ju = np.triu_indices(n, k=1)
    return iu.astype(np.intp), ju.astype(np.intp)


def refined_color_classes(adj_bool: np.ndarray) -> list[list[int]]:
    """Vertex classes under iterated neighbor-multiset (degree) refinement.

    Class order is an isomorphism invariant: colors start as degree ranks and
    each round re-ranks (color, sorted neighbor colors) keys, so isomorphic
    graphs produce corresponding classes in the same order.
    """
    n = adj_bool.shape[0]
    nbrs = [np.nonzero(adj_bool[v])[0] for v in range(n)]
    degs = [len(nb) for nb in nbrs]
    ranks = {d: r for r, d in enumerate(sorted(set(degs)))}
    colors = [ranks[d] for d in degs]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[int(u)] for u in nbrs[v])))
            for v in range(n)
        ]
        ranks = {k: r for r, k in enumerate(sorted(set(keys)))}
        new_colors = [ranks[k] for k in keys]
        if len(set(new_colors)) == len(set(colors)):
            colors = new_colors
            break
        colors = new_colors
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    return [classes[c] for c in sorted(classes)]


def _candidate_orders(classes) -> np.ndarray:
    """All vertex orders that respect the refined class order, as an array."""
    pools = [list(itertools.permutations(c)) for c in classes]
    orders = [sum(combo, ()) for combo in itertools.product(*pools)]
    return np.array(orders, dtype=np.intp)


def _minimal_rows(values: np.ndarray) -> np.ndarray:
    """Indices of rows equal to the lexicographic minimum row."""
    idx = np.lexsort(values.T[::-1])
    lo = values[idx[0]]
    return np.nonzero((values == lo).all(axis=1))[0]


def canonical_form(adj_bool: np.ndarray) -> tuple[int, np.ndarray]:
    """Canonical bitmap of an unsigned graph and the orders achieving it.

    The bitmap is the lexicographically smallest upper-triangle bit string over
    all class-respecting relabelings, packed into a Python int (MSB first).
    """
    n = adj_bool.shape[0]
    if n == 1:
        return 0, np.zeros((1, 1), dtype=np.intp)
    classes = refined_color_classes(adj_bool)
    orders = _candidate_orders(classes)
    iu, ju = _triu_cells(n)
    vals = adj_bool[orders[:, iu], orders[:, ju]].astype(np.uint8)
    mins = _minimal_rows(vals)
    bits = vals[mins[0]]
    code = int.from_bytes(np.packbits(bits).tobytes(), "big")
    return code, orders[mins]


def canonical_signed_code(g: SignedGraph) -> tuple[int, bytes]:
    """A complete invariant of the (relabeling, switching) class of g.

    First minimizes the underlying bitmap over class-respecting relabelings,
    then minimizes the canonical-switch sign pattern over the relabelings that
    attain that minimum.
    """
    code, orders = canonical_form(np.abs(g.adj).astype(bool))
    iu, ju = _triu_cells(g.n)
    best = None
    for order in orders:
        c = canonical_switch(permute(g, order))
        # entries -1/0/+1 -> bytes 2/0/1 so the comparison is deterministic
        row = np.where(c.adj[iu, ju] == -1, 2, c.adj[iu, ju]).astype(np.uint8).tobytes()
        if best is None or row < best:
            best = row
    return code, best


def signed_isomorphic(g1: SignedGraph, g2: SignedGraph) -> bool:
    """True iff some relabeling maps g1 onto g2 with identical signs (no switching)."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if g1.neg_edge_count != g2.neg_edge_count:
        return False
    return _exact_signed_code(g1) == _exact_signed_code(g2)


def _exact_signed_code(g: SignedGraph) -> tuple[int, bytes]:
    code, orders = canonical_form(np.abs(g.adj).astype(bool))
    iu, ju = _triu_cells(g.n)
    vals = g.adj[orders[:, iu], orders[:, ju]]
    vals = np.where(vals == -1, 2, vals).astype(np.uint8)
    best = vals[_minimal_rows(vals)[0]].tobytes()
    return code, best


def switching_isomorphic(g1: SignedGraph, g2: SignedGraph, max_order: int = 9) -> bool:
    """True iff some vertex bijection maps g1 onto a switching of g2.

    Exhaustive over class-respecting relabelings, so intended for small orders;
    rejects graphs larger than max_order to bound the cost.
    """
    if g1.n != g2.n:
        return False
    if g1.n > max_order:
        raise ValueError(f"switching isomorphism capped at {max_order} vertices")
    if g1.edge_count != g2.edge_count:
        return False
    if sorted(len(nb) for nb in map(g1.neighbors, range(g1.n))) != sorted(
        len(nb) for nb in map(g2.neighbors, range(g2.n))
    ):
        return False
    # triangle sign counts are invariant under both relabeling and switching
    if len(find_signed_triangles(g1, -1)) != len(find_signed_triangles(g2, -1)):
        return False
    return canonical_signed_code(g1) == canonical_signed_code(g2)
