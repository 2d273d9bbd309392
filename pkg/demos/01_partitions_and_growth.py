"""Partitions, skew shapes, and the two growth operators.

A tour of the basic objects: canonical partitions, conjugation, the
componentwise sum and the sorted union, first-column deletion, and the
arm-and-legs / single-line growth operators that drive everything else in
the package.
"""

from plethlab import (
    Partition,
    add,
    conjugate,
    contains,
    dominates,
    format_partition,
    grow_arm_legs,
    grow_line,
    grow_skew_arm_legs,
    parse_skew,
    partitions_of,
    remove_first_column,
    union_sort,
)


def show(label, value):
    print(f"  {label:<38} {value}")


print("Partitions are weakly decreasing tuples, stored canonically:")
lam = Partition((4, 2, 1))
show("Partition((4, 2, 1))", lam)
show("size, length", (lam.size, lam.length))
show("conjugate (transpose the diagram)", conjugate(lam))
show("conjugate twice", conjugate(conjugate(lam)))

print("\nTwo ways to combine partitions:")
a, b = Partition((2, 1)), Partition((1, 1))
show("componentwise sum (2,1) + (1,1)", add(a, b))
show("sorted union (2,1) u (1,1)", union_sort(a, b))
show("conjugate swaps them", conjugate(union_sort(a, b)) == add(conjugate(a), conjugate(b)))

print("\nFirst-column deletion:")
show("(3, 2, 1) minus its first column", remove_first_column(Partition((3, 2, 1))))
show("(1, 1, 1) minus its first column", remove_first_column(Partition((1, 1, 1))))

print("\nGrowth operators, parameters (l, m) with 0 <= l <= m:")
alpha = Partition((2, 1))
print("  arm-and-legs growth widens row 1 by l*j and appends j rows of width m-l;")
print("  line growth adds a row of j boxes (m+l even) or a column (m+l odd).")
for j in range(4):
    show(f"arm+legs of (2,1), l=1, m=2, j={j}", grow_arm_legs(alpha, 1, 2, j))
for j in range(4):
    show(f"line of (2,1), l=1, m=2, j={j} (column)", grow_line(alpha, 1, 2, j))
for j in range(4):
    show(f"line of (2,1), l=2, m=2, j={j} (row)", grow_line(alpha, 2, 2, j))

print("\nSkew shapes grow on the outer partition only:")
sigma = parse_skew("2,1/1")
show("parse_skew('2,1/1')", sigma)
show("grown once, l=1, m=2", grow_skew_arm_legs(sigma, 1, 2, 1))

print("\nContainment and dominance:")
show("(3,2) contains (2,1)", contains(Partition((3, 2)), Partition((2, 1))))
show("(4) dominates (2,2)", dominates(Partition((4,)), Partition((2, 2))))
show("(2,2) dominates (3,1)", dominates(Partition((2, 2)), Partition((3, 1))))

print("\nAll partitions of 5, reverse-lexicographic:")
print(" ", "  ".join(format_partition(p) for p in partitions_of(5)))
