"""A tour of the independence-preserving operations.

Starting from the cross-polytope graph K_{2d} (the smallest minimally
rigid graph for the non-Euclidean l_q norms), grow new frameworks with
extensions, splits, substitutions, and the two dimension-hopping moves,
checking independence numerically after every step.
"""

from lqrig import (
    LqSpace,
    brace,
    complete_graph,
    cone,
    f_count,
    henneberg_generate,
    is_tight,
    one_extension,
    one_reduction_search,
    substitute,
    verdict,
    vertex_split,
    zero_extension,
)

D, Q = 3, 3.0


def show(tag, g, d=D):
    vd = verdict(g, LqSpace(d, Q), seed=0)
    print(f"  {tag:<28} n={g.n:<3} m={g.m:<3} f_{d}={f_count(g, d):<3} "
          f"independent={vd.independent} rigid={vd.rigid}")
    return g


print(f"everything below lives in l_q^{D} with q = {Q}\n")

g = complete_graph(2 * D)
show("K_6 (cross-polytope base)", g)

g, _ = zero_extension(g, [0, 1, 2], D)
show("after 0-extension", g)

g, _ = one_extension(g, [0, 1, 2, 6], (0, 1), D)
show("after 1-extension", g)

v0 = max(range(g.n), key=g.degree)
nbrs = sorted(g.neighbors(v0))
g, _ = vertex_split(g, v0, nbrs[:2], nbrs[2:4], D)
show(f"after vertex split at {v0}", g)

g, _ = substitute(g, 0, complete_graph(4))
show("after vertex-to-K4 subst", g)

print("\ndimension hopping (independence moves up one dimension):")
small = complete_graph(4)
coned, _ = cone(small)
show("cone of K4, checked in 4D", coned, d=D + 1)
braced, _ = brace(small, [0, 1, 2, 3], 2)
print("  (K4 braced on all vertices is K6, minimally rigid one dimension up)")
show("brace of K4, checked in 3D", braced, d=3)

print("\nrandom (3,3)-tight generation and a 1-reduction back down:")
g, log = henneberg_generate(D, 10, seed=42)
print(f"  generated n={g.n} with {len(log)} moves; (3,3)-tight: {is_tight(g, D)}")
for v in range(g.n):
    if g.degree(v) == D + 1:
        pair = one_reduction_search(g, v, D)
        print(f"  vertex {v} has degree {D + 1}; reduction adding {pair} keeps sparsity")
        break
