"""Triangulated surfaces in three dimensions.

Sphere triangulations carry |E| = 3|V| - 6 edges: three short of the
3|V| - 3 a non-Euclidean l_q^3 norm demands, so they are independent but
never rigid.  Projective-plane triangulations hit the count exactly and
come out minimally rigid.
"""

from lqrig import (
    LqSpace,
    PROJECTIVE_PLANE,
    SPHERE,
    base_complex,
    generate_triangulation,
    link_cycle,
    topological_vertex_split,
    validate,
    verdict,
)

print("the three base complexes:")
for kind in ("K4", "K6", "K7_minus_K3"):
    t = base_complex(kind)
    chi = t.n - t.graph.m + len(t.faces)
    print(f"  {kind:<12} {t.surface:<17} V={t.n} E={t.graph.m} F={len(t.faces)} chi={chi}")

print("\none topological vertex split on the tetrahedron:")
t = base_complex("K4")
cycle = link_cycle(t, 0)
print(f"  link of vertex 0: {cycle}")
t5, rec = topological_vertex_split(t, 0, cycle[0], cycle[1])
print(f"  split along ({cycle[0]}, {cycle[1]}): n={t5.n}, E={t5.graph.m} = 3n-6, "
      f"valid: {bool(validate(t5))}")

print("\ngrowing random triangulations and checking verdicts at q = 1.5, 3:")
for surface, n in ((SPHERE, 10), (PROJECTIVE_PLANE, 10)):
    t, log = generate_triangulation(surface, n, seed=7)
    law = 3 * n - 6 if surface == SPHERE else 3 * n - 3
    print(f"  {surface}: n={n}, E={t.graph.m} (law {law}), {len(log)} splits")
    for q in (1.5, 3.0):
        vd = verdict(t.graph, LqSpace(3, q), seed=0)
        print(f"    q={q}: independent={vd.independent} rigid={vd.rigid} "
              f"(rank {vd.rank}, target {vd.target_rank})")

print("\nprojective triangulations from the other base:")
t, _ = generate_triangulation(PROJECTIVE_PLANE, 11, seed=3, base="K7_minus_K3")
vd = verdict(t.graph, LqSpace(3, 3.0), seed=0)
print(f"  K7-K3 grown to n=11: minimally rigid: {vd.minimally_rigid}")
