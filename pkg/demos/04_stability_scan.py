"""Growth sequences: stabilization and monotonicity, measured honestly.

Growing the target by arms-and-legs and the source by a line produces a
sequence of plethysm coefficients that is known to become eventually
constant. No effective bound for the onset is known, so the lab reports
window-confirmed stabilization over a finite range and never claims more.
"""

from plethlab import (
    Partition,
    ScanBounds,
    SequenceSpec,
    SkewShape,
    coefficient_sequence,
    detect_stabilization,
    recurrence_coefficient,
    scan,
)

P = Partition
S = SkewShape.straight

print("One family: target (3,3), source (3), parameters l=1, m=2.")
report = coefficient_sequence(SequenceSpec(S((3, 3)), S((3,)), 1, 2, 12))
print("  values for j = 0..12:", list(report.values))
print("  least constant index:", report.stabilization_index,
      "| window confirmed:", report.window_confirmed,
      "| limit:", report.limit,
      "| weakly increasing:", report.weakly_increasing)

print("\nDetection semantics on plain sequences:")
for values in ([1, 1, 1, 1], [0, 1, 2, 2, 2, 2], [1, 2, 1, 2]):
    print(f"  {values} with window 3 ->", detect_stabilization(values, 3))

print("\nThe alternating reduction to smaller row sizes cross-checks itself:")
print("  reduced value for source (1,1), target (3,1), m=2:",
      recurrence_coefficient(P((1, 1)), P((3, 1)), 2))
print("  reduced value for source (2,1), target (4,3,2), m=3 (deep):",
      recurrence_coefficient(P((2, 1)), P((4, 3, 2)), 3, deep=True))

print("\nA bulk scan over small sources (this is the acceptance-scale run")
print("shrunk to demo size; every cell is a full sequence):")
bounds = ScanBounds(tau_sizes=(0, 1, 2), m_values=(2,))
result = scan(bounds, j_max=10, window=4)
print("  cells:", len(result.cells))
print("  stabilized within budget:", sum(1 for c in result.cells if c.report.window_confirmed))
print("  stabilization indices seen:",
      sorted({c.report.stabilization_index for c in result.cells}))
print("  violations in proven monotone families:", len(result.proven_family_violations))

print("\nThe one monotonicity exception in the conjectured family:")
for cell in result.conjectured_family_violations:
    print(f"  {cell.key}: values {list(cell.report.values)}")
print("  (the empty-against-empty family: index 0 carries the unit-rule")
print("   coefficient 1, every grown index vanishes; an indexing artifact")
print("   of starting at j = 0 rather than evidence against the conjecture)")

print("\nEmpirical limits across one family of targets:")
for sigma in ((6,), (5, 1), (4, 2), (3, 3)):
    rep = coefficient_sequence(SequenceSpec(S(sigma), S((3,)), 2, 2, 10))
    print(f"  target {sigma}: values {list(rep.values)} -> limit {rep.limit}")
