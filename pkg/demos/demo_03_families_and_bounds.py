"""The named graph families and the closed-form bounds they saturate.

Run with: python demos/demo_03_families_and_bounds.py
"""

import signed_extremal as se

# ---------------------------------------------------------------------------
# The extremal family: an all-positive clique, two apex vertices u and v, one
# negative bridge uv. It is connected, unbalanced, has no negative triangle,
# and meets the edge bound n(n-1)/2 - (n-2) with equality.
# ---------------------------------------------------------------------------

for n in range(4, 10):
    s = (n - 2) // 2
    g = se.build_gst(s, n - 2 - s)
    e, eneg = se.counts(g)
    print(f"n={n}: e={e} (bound {se.edge_bound(n)}), e_neg={eneg}, "
          f"unbalanced={not se.is_balanced(g)}, "
          f"neg-triangle-free={not se.find_signed_triangles(g, -1)}")

# Within the family's switching class the negative edge count is maximized by
# switching at v plus the whole u-side:
print("\nnegative-edge maximum inside the class:")
for n in (6, 8, 10):
    gm = se.build_gst_maxneg(n)
    print(f"n={n}: e_neg={gm.neg_edge_count} == bound {se.neg_edge_bound(n)}")

# The lopsided split s=1 maximizes the spectral radius, matching the bound
# (sqrt(n^2-8)+n-4)/2, and the splits order strictly by lopsidedness:
print("\ntop eigenvalue per split at n=10:")
for s in range(1, 5):
    lam = se.eigenvalues(se.build_gst(s, 8 - s)).eigenvalues[0]
    print(f"  split ({s},{8 - s}): {lam:.9f}")
print("rho bound:", se.rho_bound(10))

# ---------------------------------------------------------------------------
# Comparison graphs: deleting one clique edge (two ways) or hanging an extra
# vertex off the clique always drops the top eigenvalue strictly below the
# extremal value.
# ---------------------------------------------------------------------------

n = 9
lam_star = se.eigenvalues(se.build_gst(1, n - 3)).eigenvalues[0]
print(f"\nextremal top eigenvalue at n={n}: {lam_star:.9f}")
for fam, s, t in [("H1", 1, 6), ("H2", 2, 5), ("H3", 1, 5)]:
    lam = se.eigenvalues(se.build_h(fam, s, t)).eigenvalues[0]
    print(f"  {fam}({s},{t}): {lam:.9f}  (below: {lam < lam_star})")

# ---------------------------------------------------------------------------
# Two general-purpose bounds: the balanced-clique bound on the top eigenvalue,
# and the balanced spanning subgraph that never loses spectral radius.
# ---------------------------------------------------------------------------

g = se.negate(se.build_gst(1, 4))
rep = se.clique_spectral_bound(g)
print(f"\nbalanced clique number of the negated family: "
      f"{se.balanced_clique_number(g)}")
print(f"clique bound: lambda_1 = {rep.observed:.6f} <= {rep.bound_value:.6f}")

h = se.balanced_spanning_subgraph(se.build_gst(1, 4))
print("balanced spanning subgraph keeps the radius:",
      se.eigenvalues(h).eigenvalues[0],
      ">=", se.eigenvalues(se.build_gst(1, 4)).eigenvalues[0])
