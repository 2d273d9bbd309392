"""Integer partitions, skew shapes, and diagram growth operators.

Every value is immutable and canonical: a :class:`Partition` never stores
trailing zeros, so equal partitions compare and hash equal, which makes
memoization throughout the package trivial. Python integers are unbounded,
so overflow is structurally impossible.

Text syntax (shared with the command line): comma separated parts, e.g.
``3,2,1``; the empty partition is the empty string or ``0``. A skew shape is
``outer/inner``, e.g. ``3,2,1/1,1``; a plain partition parses as a skew
shape with empty inner part.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Partition",
    "SkewShape",
    "conjugate",
    "add",
    "union_sort",
    "remove_first_column",
    "grow_arm_legs",
    "grow_line",
    "grow_skew_arm_legs",
    "grow_skew_line",
    "contains",
    "dominates",
    "partitions_of",
    "parse_partition",
    "parse_skew",
    "format_partition",
    "format_skew",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The constructor accepts any iterable of nonnegative integers in weakly
    decreasing order and strips trailing zeros. ``Partition()`` is the empty
    partition.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        prev = None
        for p in parts:
            if p < 0:
                raise ValueError(f"parts must be nonnegative, got {p}")
            if prev is not None and p > prev:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
            prev = p
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        """Number of boxes, i.e. the sum of the parts."""
        return sum(self)

    @property
    def length(self) -> int:
        """Number of (positive) parts."""
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


_EMPTY = Partition()


class SkewShape(NamedTuple):
    """Ordered pair (outer, inner) of partitions.

    Containment of the inner shape is deliberately not required: a pair with
    ``inner`` not contained in ``outer`` is a valid value that denotes the
    zero skew Schur function, and downstream operations treat it as such.
    """

    outer: Partition
    inner: Partition

    @classmethod
    def straight(cls, outer: Iterable[int]) -> "SkewShape":
        return cls(Partition(outer), _EMPTY)

    @property
    def is_contained(self) -> bool:
        return contains(self.outer, self.inner)

    @property
    def size(self) -> int:
        """Number of boxes of the diagram difference.

        Equals ``outer.size - inner.size`` whenever the inner shape is
        contained in the outer one.
        """
        inner = self.inner
        return sum(
            max(0, o - (inner[i] if i < len(inner) else 0))
            for i, o in enumerate(self.outer)
        )


def as_partition(value: Iterable[int] | Partition) -> Partition:
    """Coerce an iterable of parts to a canonical Partition."""
    return value if type(value) is Partition else Partition(value)


def as_skew(value) -> SkewShape:
    """Coerce a SkewShape, a partition, or an (outer, inner) pair."""
    if isinstance(value, SkewShape):
        return SkewShape(as_partition(value.outer), as_partition(value.inner))
    if isinstance(value, Partition):
        return SkewShape(value, _EMPTY)
    value = tuple(value)
    if len(value) == 2 and not all(isinstance(v, int) for v in value):
        return SkewShape(as_partition(value[0]), as_partition(value[1]))
    return SkewShape(Partition(value), _EMPTY)


def conjugate(p: Iterable[int]) -> Partition:
    """Transpose the diagram: column lengths become the parts."""
    p = as_partition(p)
    if not p:
        return _EMPTY
    cols = [0] * p[0]
    for part in p:
        for c in range(part):
            cols[c] += 1
    return Partition(cols)


def add(a: Iterable[int], b: Iterable[int]) -> Partition:
    """Componentwise sum, the shorter operand padded with zeros."""
    a, b = as_partition(a), as_partition(b)
    if len(a) < len(b):
        a, b = b, a
    return Partition(
        tuple(x + y for x, y in zip(a, b)) + a[len(b):]
    )


def union_sort(a: Iterable[int], b: Iterable[int]) -> Partition:
    """Multiset union of the parts, re-sorted weakly decreasing."""
    a, b = as_partition(a), as_partition(b)
    return Partition(sorted(a + b, reverse=True))


def remove_first_column(p: Iterable[int]) -> Partition:
    """Delete the leftmost column of the diagram (subtract 1 from each part)."""
    p = as_partition(p)
    return Partition(x - 1 for x in p)


def _check_growth_params(l: int, m: int, j: int) -> None:
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if not 0 <= l <= m:
        raise ValueError(f"l must satisfy 0 <= l <= m, got l={l}, m={m}")
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")


def grow_arm_legs(a: Iterable[int], l: int, m: int, j: int) -> Partition:
    """Widen the first row by l*j boxes and append j rows of width m-l.

    The result has size ``|a| + m*j``; j = 0 returns the input unchanged.
    """
    _check_growth_params(l, m, j)
    a = as_partition(a)
    armed = add(a, Partition((l * j,)))
    if m == l or j == 0:
        return armed
    return union_sort(armed, Partition((m - l,) * j))


def grow_line(a: Iterable[int], l: int, m: int, j: int) -> Partition:
    """Grow by a single line of j boxes: a row when m+l is even, else a column."""
    _check_growth_params(l, m, j)
    a = as_partition(a)
    if (m + l) % 2 == 0:
        return add(a, Partition((j,)))
    return union_sort(a, Partition((1,) * j))


def grow_skew_arm_legs(s: SkewShape, l: int, m: int, j: int) -> SkewShape:
    """Apply :func:`grow_arm_legs` to the outer partition; inner unchanged."""
    s = as_skew(s)
    return SkewShape(grow_arm_legs(s.outer, l, m, j), s.inner)


def grow_skew_line(s: SkewShape, l: int, m: int, j: int) -> SkewShape:
    """Apply :func:`grow_line` to the outer partition; inner unchanged."""
    s = as_skew(s)
    return SkewShape(grow_line(s.outer, l, m, j), s.inner)


def contains(outer: Iterable[int], inner: Iterable[int]) -> bool:
    """True iff the inner diagram fits inside the outer one, row by row."""
    outer, inner = as_partition(outer), as_partition(inner)
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def dominates(a: Iterable[int], b: Iterable[int]) -> bool:
    """Dominance order on partitions of equal size: prefix sums of a cover b's."""
    a, b = as_partition(a), as_partition(b)
    if a.size != b.size:
        raise ValueError("dominance compares partitions of equal size")
    ta = tb = 0
    for i in range(max(len(a), len(b))):
        ta += a[i] if i < len(a) else 0
        tb += b[i] if i < len(b) else 0
        if ta < tb:
            return False
    return True


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, exactly once, in reverse-lexicographic order.

    The order starts at ``(n)`` and ends at ``(1, ..., 1)``; it is
    deterministic, so reports built by iterating it are reproducible.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield _EMPTY
        return
    parts = [n]
    while True:
        yield Partition(parts)
        # decrement the rightmost part larger than 1, redistribute the rest
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        parts[i] -= 1
        rem = len(parts) - i  # the ones removed plus the decremented box
        cap = parts[i]
        del parts[i + 1:]
        while rem > 0:
            t = min(cap, rem)
            parts.append(t)
            rem -= t


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text syntax; '' and '0' give the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return _EMPTY
    parts = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            parts.append(int(tok))
        except ValueError:
            raise ValueError(f"malformed partition text: {text!r}") from None
    try:
        return Partition(parts)
    except ValueError as exc:
        raise ValueError(f"invalid partition {text!r}: {exc}") from None


def parse_skew(text: str) -> SkewShape:
    """Parse ``outer/inner`` text; a plain partition means empty inner shape."""
    if "/" in text:
        outer_text, _, inner_text = text.partition("/")
        return SkewShape(parse_partition(outer_text), parse_partition(inner_text))
    return SkewShape(parse_partition(text), _EMPTY)


def format_partition(p: Iterable[int]) -> str:
    p = as_partition(p)
    return ",".join(map(str, p)) if p else "0"


def format_skew(s: SkewShape) -> str:
    s = as_skew(s)
    if s.inner:
        return f"{format_partition(s.outer)}/{format_partition(s.inner)}"
    return format_partition(s.outer)
