"""Walkthrough: the dual numbers k[a]/(a^2) are *not* hereditary.

The homotopy engine computes hom-spaces between perfect complexes; the
chain C_2 = (R --a--> R) maps nonzero to its own [-1] shift, which puts a
weight -1 edge on the shift-graph and produces a negative closed walk.

Run:  python demos/02_dual_numbers.py
"""

from derhed import PrimeField, check_hereditary, gen_dual_numbers, hom_k_dim
from derhed.generators import dual_numbers_algebra, dual_numbers_chain

fld = PrimeField()
alg = dual_numbers_algebra()

c2 = dual_numbers_chain(alg, 2)
print("Self hom-dimensions of C2 = (R --a--> R):")
for n in range(-2, 3):
    print(f"  dim Hom(C2, C2[{n:+d}]) = {hom_k_dim(c2, c2, n, fld)}")

graph = gen_dual_numbers(max_length=3, window=2)
print("\nShift-graph on the chains C1..C3 (window |n| <= 2):")
for (a, b), edges in sorted(graph.homs.items()):
    print(f"  {a} -> {b}  weights {[e.weight for e in edges]}")

result = check_hereditary(graph, sorted(graph.orbit_ids()))
print("\nVerdict:", result.verdict)
print("Negative-walk indicator:", result.indicator)
print("Witness (a walk from X[1] back down to X):")
for step in result.witness:
    print(f"  {step.kind:>5}  {step.at.orbit}[{step.at.offset}]")
