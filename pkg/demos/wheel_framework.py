"""The 5-wheel in the l_q plane: one framework, three stories.

Walks through the motivating example: build the altered rigidity matrix at
an explicit placement, evaluate its corner determinant against the closed
form 2^{q-1} - 2, and watch the rank collapse at a symmetric placement.
"""

import numpy as np

from lqrig import LqSpace, cokernel_basis, rigidity_matrix, verdict, wheel_graph
from lqrig.oracles import (
    wheel_corner_submatrix,
    wheel_degenerate_placement,
    wheel_det,
    wheel_placement,
)

g = wheel_graph(5)
print(f"wheel on 5 vertices: {g.m} edges, 2|V|-2 = {2 * g.n - 2}")

print("\nclosed-form determinant of the 8x8 corner M vs numpy:")
for q in (1.5, 2.5, 3.0, 4.0):
    num = np.linalg.det(wheel_corner_submatrix(q))
    print(f"  q={q:<4} det M = {num:+.12f}   2^(q-1)-2 = {wheel_det(q):+.12f}")
print("  (at q = 2 the formula gives 0: the Euclidean wheel needs 2|V|-3 rank)")

print("\nsampled verdicts:")
for q in (1.5, 3.0):
    vd = verdict(g, LqSpace(2, q), seed=0)
    print(f"  q={q}: rank {vd.rank}/{vd.target_rank}, minimally rigid: {vd.minimally_rigid}")

print("\nthe degenerate placement p_v4 = (0,-1) is non-regular for q != 2:")
for q in (1.5, 3.0):
    m = rigidity_matrix(g, wheel_degenerate_placement(), LqSpace(2, q))
    stresses = cokernel_basis(m)
    print(f"  q={q}: rank drops to {8 - stresses.shape[0]}, "
          f"{stresses.shape[0]} self-stress vector(s)")
    omega = stresses[0]
    residual = np.linalg.norm(omega @ m.entries)
    print(f"        stress residual |w R| = {residual:.2e}")

print("\nregular placement has no stress at all:")
m = rigidity_matrix(g, wheel_placement(), LqSpace(2, 3.0))
print(f"  cokernel dimension: {cokernel_basis(m).shape[0]}")
