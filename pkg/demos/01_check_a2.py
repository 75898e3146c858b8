"""Walkthrough: deciding that the derived category of the A_2 quiver is
hereditary, and seeing a bad heart rejected.

Run:  python demos/01_check_a2.py
"""

from derhed import check_hereditary, gen_example_a2, validate, verify_heart

graph, bad_heart = gen_example_a2()

print("The A_2 instance has three shift-orbits:", sorted(graph.orbit_ids()))
print("Hom edges (from, to) -> weights:")
for (a, b), edges in sorted(graph.homs.items()):
    print(f"  {a:>2} -> {b:<2}  {[e.weight for e in edges]}")

report = validate(graph)
print("\nStructural validation:", "ok" if report.ok else report.errors)

# The decision: no orbit lies on a closed walk of negative total weight,
# so the category is hereditary and a heart drops out of shortest walks.
result = check_hereditary(graph, sorted(graph.orbit_ids()))
print("\nVerdict:", result.verdict)
print("Heart offsets:", result.heart.offsets)
print("Hom-edge degrees hitting the heart:", dict(result.heart_check.m_values))

# The same data also refutes a tempting but inadmissible heart: shifting I
# up by one creates a morphism landing in negative heart degree.
check = verify_heart(graph, bad_heart)
print("\nCandidate heart", bad_heart.offsets, "->",
      "admissible" if check.ok else "rejected")
for (src, dst, m) in check.violations:
    print(f"  violation: {src.orbit}[{src.offset}] -> "
          f"{dst.orbit}[{dst.offset}] in degree m = {m}")
