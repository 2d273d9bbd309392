"""Large plethysm coefficients against a one-row inner shape.

For an inner shape with a single row, the outer Schur function is expanded
through its Jacobi-Trudi determinant, over its rows or its columns
(whichever side is shorter), and composition distributes over the
determinant because composing with a fixed symmetric function is a ring
homomorphism in the first argument. Each determinant term is then a product
of one-piece compositions: complete homogeneous pieces on the row side,
elementary pieces on the column side.

Pairing a determinant term against the target Schur function peels off the
small factors by skew expansions of the target (cheap as long as the peeled
degrees stay small) and finishes with a lookup of the single remaining big
factor:

* for a row of size 2 the lookups are classical closed forms: the complete
  side is supported on partitions with all rows even, the elementary side on
  partitions whose Frobenius arm lengths exceed the leg lengths by exactly
  one, both with multiplicity one;
* for larger rows the one-piece compositions are tabulated by Newton's
  identities lifted through the composition, keeping full Schur expansions
  pruned to an envelope of the target shapes. Pruning is sound because
  multiplying by a power sum only adds boxes, so anything outside a
  downward-closed envelope can never re-enter it.

The route declines (returns None) when the outer shape is not thin enough or
a determinant term would carry two large factors; callers then fall back to
a slower general method.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import cache
from itertools import permutations
from typing import Iterable

from .lr import _perm_sign, dual_pieri_expansion
from .partitions import Partition, as_partition, conjugate
from .plethysm import ExactnessError, _plethysm_items, schur_to_powersum

__all__ = ["row_coefficient", "warm_tables", "reset_tables"]

# A determinant term may carry at most one factor whose composed degree
# exceeds this; all smaller factors are peeled through skew expansions.
_SMALL_FACTOR_CAP = 18
# Maximum number of Jacobi-Trudi rows (= permutations up to 120 terms).
_THIN_MAX = 5


def _within(shape: Partition, cap: tuple[int, ...]) -> bool:
    if len(shape) > len(cap):
        return False
    return all(shape[i] <= cap[i] for i in range(len(shape)))


@cache
def _strip_additions(shape: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    """All ways to add a border strip of k boxes: (bigger, sign) pairs.

    Mirror image of border-strip removal on the beta numbers: a strip
    addition replaces a beta number b by b+k when the target slot is free,
    with sign (-1) to the number of beta numbers strictly in between.
    """
    L = len(shape) + k
    beta = [(shape[i] if i < len(shape) else 0) + (L - 1 - i) for i in range(L)]
    present = set(beta)
    out = []
    for b in beta:
        nb = b + k
        if nb in present:
            continue
        height = sum(1 for x in beta if b < x < nb)
        rebuilt = sorted((x for x in beta if x != b), reverse=True)
        rebuilt.append(nb)
        rebuilt.sort(reverse=True)
        parts = [rebuilt[i] - (L - 1 - i) for i in range(L)]
        out.append((Partition(parts), -1 if height % 2 else 1))
    return tuple(out)


def _all_even_rows(p: Partition) -> bool:
    return all(part % 2 == 0 for part in p)


def _arm_excess_one(p: Partition) -> bool:
    """True iff every Frobenius arm is exactly one longer than its leg."""
    if not p:
        return False
    cols = conjugate(p)
    d = 0
    while d < len(p) and p[d] >= d + 1:
        d += 1
    for i in range(d):
        if p[i] - (i + 1) != cols[i] - (i + 1) + 1:
            return False
    return True


@cache
def _small_expansion(kind: str, a: int, m: int) -> tuple[tuple[Partition, int], ...]:
    shape = Partition((a,)) if kind == "h" else Partition((1,) * a)
    return _plethysm_items(shape, Partition((m,)))


class _RowTables:
    """Envelope-pruned Schur expansions of the one-piece compositions.

    ``tables[kind][a]`` maps each partition inside the envelope to its
    coefficient in the composition of (h_a or e_a) with the one-row shape.
    Coefficients inside the envelope are exact; growing the envelope resets
    the tables, so callers should warm it with every target shape they will
    query (see :func:`warm_tables`).
    """

    def __init__(self, m: int):
        self.m = m
        self.cap: tuple[int, ...] = ()
        self._row_pexp = tuple(schur_to_powersum(Partition((m,))).items())
        self._reset()

    def _reset(self) -> None:
        one = {Partition(): 1}
        self.tables: dict[str, list[dict[Partition, int]]] = {
            "h": [dict(one)],
            "e": [dict(one)],
        }
        self._addcache: dict[tuple[Partition, int], tuple[tuple[Partition, int], ...]] = {}

    def extend_cap(self, shapes: Iterable[Partition]) -> None:
        shapes = list(shapes)
        rows = max([len(self.cap)] + [len(s) for s in shapes])
        cap = []
        for i in range(rows):
            best = self.cap[i] if i < len(self.cap) else 0
            for s in shapes:
                if i < len(s) and s[i] > best:
                    best = s[i]
            cap.append(best)
        if cap:
            cap[0] += 2  # mild slack against near-miss rebuilds
            cap.append(min(cap[-1], 1))
        self.cap = tuple(cap)
        self._reset()

    def _additions(self, shape: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
        key = (shape, k)
        hit = self._addcache.get(key)
        if hit is None:
            hit = tuple(
                (ns, sg) for ns, sg in _strip_additions(shape, k) if _within(ns, self.cap)
            )
            self._addcache[key] = hit
        return hit

    def _mul_power_sum(
        self, level: dict[Partition, int], k: int
    ) -> dict[Partition, int]:
        out: defaultdict[Partition, int] = defaultdict(int)
        for shape, c in level.items():
            for bigger, sign in self._additions(shape, k):
                out[bigger] += c * sign
        return {s: v for s, v in out.items() if v}

    def ensure(self, kind: str, a: int) -> None:
        tabs = self.tables[kind]
        while len(tabs) <= a:
            b = len(tabs)
            acc: defaultdict[Partition, Fraction] = defaultdict(Fraction)
            for r in range(1, b + 1):
                src = tabs[b - r]
                if not src:
                    continue
                base = 1 if kind == "h" else (-1) ** (r - 1)
                for kappa, zfrac in self._row_pexp:
                    level = src
                    for part in kappa:
                        level = self._mul_power_sum(level, r * part)
                        if not level:
                            break
                    if not level:
                        continue
                    coeff = base * zfrac
                    for shape, c in level.items():
                        acc[shape] += coeff * c
            tab: dict[Partition, int] = {}
            for shape, val in acc.items():
                if not val:
                    continue
                q = val / b
                if q.denominator != 1:
                    raise ExactnessError(
                        f"table coefficient {q} at {shape} is not integral"
                    )
                tab[shape] = int(q)
            tabs.append(tab)

    def value(self, kind: str, a: int, shape: Partition) -> int:
        self.ensure(kind, a)
        return self.tables[kind][a].get(shape, 0)


_tables: dict[int, _RowTables] = {}


def _tables_for(m: int) -> _RowTables:
    if m not in _tables:
        _tables[m] = _RowTables(m)
    return _tables[m]


def reset_tables() -> None:
    _tables.clear()


def warm_tables(nus: Iterable[Iterable[int]], m: int) -> None:
    """Grow the envelope for m once, before a batch of queries.

    Purely a performance hint: queries outside the envelope grow it on the
    fly, at the cost of a table rebuild per growth.
    """
    if m <= 2:
        return
    shapes = [as_partition(nu) for nu in nus]
    tables = _tables_for(m)
    if any(not _within(s, tables.cap) for s in shapes):
        tables.extend_cap(shapes)


def row_coefficient(nu: Partition, lam: Partition, m: int) -> int | None:
    """Coefficient of nu in the composition of lam with a one-row shape.

    Returns None when this route does not apply; the caller falls back.
    Assumes the caller already checked degrees and the row-count bound.
    """
    rows, cols = len(lam), lam[0]
    if min(rows, cols) > _THIN_MAX:
        return None
    kind = "h" if rows <= cols else "e"
    parts = lam if kind == "h" else conjugate(lam)
    k = len(parts)
    terms = []
    for w in permutations(range(k)):
        sizes = tuple(parts[i] - (i + 1) + (w[i] + 1) for i in range(k))
        if any(s < 0 for s in sizes):
            continue
        big_i = max(range(k), key=lambda i: sizes[i])
        smalls = tuple(
            sorted((s for i, s in enumerate(sizes) if i != big_i and s > 0), reverse=True)
        )
        if smalls and m * smalls[0] > _SMALL_FACTOR_CAP:
            return None
        terms.append((_perm_sign(w), sizes[big_i], smalls))
    if not terms:
        return 0
    tables = None
    if m > 2:
        tables = _tables_for(m)
        if not _within(nu, tables.cap):
            tables.extend_cap([nu])
    total = 0
    for sign, big, smalls in terms:
        level: dict[Partition, int] = {nu: 1}
        for s in smalls:
            nxt: defaultdict[Partition, int] = defaultdict(int)
            expansion = _small_expansion(kind, s, m)
            for rho, c in level.items():
                for theta, tc in expansion:
                    for smaller, c2 in dual_pieri_expansion(rho, theta):
                        nxt[smaller] += c * tc * c2
            level = {sh: v for sh, v in nxt.items() if v}
            if not level:
                break
        if not level:
            continue
        if m == 2:
            predicate = _all_even_rows if kind == "h" else _arm_excess_one
            sub = sum(c for rho, c in level.items() if predicate(rho))
        else:
            assert tables is not None
            tables.ensure(kind, big)
            tab = tables.tables[kind][big]
            sub = sum(c * tab.get(rho, 0) for rho, c in level.items())
        total += sign * sub
    return total
