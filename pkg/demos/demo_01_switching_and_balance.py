"""Switching algebra, balance, and cycle certificates.

Run with: python demos/demo_01_switching_and_balance.py
"""

import signed_extremal as se

# ---------------------------------------------------------------------------
# A signed graph is a graph whose edges carry +1 or -1. The smallest genuinely
# "signed" phenomenon is the 4-cycle with a single negative edge: its only
# cycle has negative sign product, so no relabeling of vertices by +-1 spins
# can explain the signs, and the graph is called unbalanced.
# ---------------------------------------------------------------------------

c4 = se.new_signed_graph(4, [(0, 1, -1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
print("unbalanced 4-cycle:", c4)
print("edges:", c4.edges())
print("balanced?", se.is_balanced(c4))

# Switching at a vertex set U negates every edge crossing the cut. It changes
# the signature but not the essential structure: every cycle keeps its sign.
sw = se.switch(c4, [0])
print("\nafter switching at {0}:", sw.edges())
print("still unbalanced?", not se.is_balanced(sw))
print("switching equivalent to the original?", se.switching_equivalent(c4, sw))

# Every switching class has a unique representative whose spanning-tree edges
# are all positive; equality of canonical forms decides class membership.
print("\ncanonical form of both:")
print(se.format_graph(se.canonical_switch(c4)))
assert se.canonical_switch(c4) == se.canonical_switch(sw)

# An unbalanced graph always carries a shortest negative cycle as a witness.
cert = se.shortest_unbalanced_cycle(c4)
print("shortest negative cycle:", cert.vertices, "sign", cert.sign)

# A balanced graph has none:
k4 = se.build_complete(4, 1)
print("complete positive graph certificate:", se.shortest_unbalanced_cycle(k4))

# ---------------------------------------------------------------------------
# Triangles come in two flavors up to switching: all-positive and
# single-negative. Forbidding the negative one is the constraint behind the
# extremal results this package verifies.
# ---------------------------------------------------------------------------

g = se.build_gst(1, 4)  # the extremal family at order 7
print("\nextremal family member:", g)
print("negative triangles:", se.find_signed_triangles(g, -1))
print("positive triangles:", len(se.find_signed_triangles(g, 1)))

# Text round trip: the one-graph-per-file format is 'n m' then 'u v sign'.
text = se.format_graph(g)
assert se.parse_graph(text) == g
print("\ntext format round trip OK:")
print(text)
