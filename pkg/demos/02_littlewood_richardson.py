"""Littlewood-Richardson fillings and coefficients.

Fillings of a skew diagram are enumerated directly: rows weakly increase,
columns strictly increase, and the right-to-left reading word is a lattice
word. Counting them by content gives the coefficients; grouping them gives
skew Schur expansions.
"""

from plethlab import (
    Partition,
    SkewShape,
    conjugate,
    format_partition,
    is_lattice_word,
    lr_coefficient,
    lr_fillings,
    partitions_of,
    skew_schur_expansion,
)

print("Lattice words: every prefix has at least as many i's as (i+1)'s.")
for word in [(1, 1, 2), (2, 1), (1, 2, 1, 3), (1, 1, 2, 2, 3)]:
    print(f"  {word}: {is_lattice_word(word)}")

print("\nAll fillings of the skew shape (3,2,1)/(1,1):")
shape = SkewShape(Partition((3, 2, 1)), Partition((1, 1)))
for filling in lr_fillings(shape):
    print(f"  rows={filling.rows}  reading word={filling.reading_word()}  "
          f"content={format_partition(filling.weight)}")

print("\nGrouping by content gives the skew Schur expansion:")
for weight, count in sorted(skew_schur_expansion(shape).items()):
    print(f"  content {format_partition(weight)}: multiplicity {count}")

print("\nCoefficients count fillings of a fixed content:")
print("  c^(3)_(2),(1)      =", lr_coefficient((3,), (2,), (1,)))
print("  c^(3,2,1)_(2,1),(2,1) =", lr_coefficient((3, 2, 1), (2, 1), (2, 1)))
print("  c^(2,2)_(2),(2)    =", lr_coefficient((2, 2), (2,), (2,)))

print("\nTwo symmetries, checked over all shapes up to 6 boxes:")
ok = True
for a in range(0, 7):
    for b in range(0, 7 - a):
        for lam in partitions_of(a):
            for mu in partitions_of(b):
                for nu in partitions_of(a + b):
                    c = lr_coefficient(nu, lam, mu)
                    ok = ok and c == lr_coefficient(nu, mu, lam)
                    ok = ok and c == lr_coefficient(
                        conjugate(nu), conjugate(lam), conjugate(mu)
                    )
print("  swap the two lower shapes, or conjugate all three:", "all agree" if ok else "MISMATCH")

print("\nA non-contained inner shape denotes the zero function:")
print("  fillings of (2)/(3):", lr_fillings(SkewShape(Partition((2,)), Partition((3,)))))
print("  expansion of (2)/(3):", skew_schur_expansion(SkewShape(Partition((2,)), Partition((3,)))))
