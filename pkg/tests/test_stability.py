import pytest

from plethlab import (
    Partition,
    ScanBounds,
    SequenceSpec,
    SkewShape,
    VerificationError,
    coefficient_sequence,
    detect_stabilization,
    grow_arm_legs,
    grow_line,
    partitions_of,
    plethysm_coefficient,
    recurrence_coefficient,
    scan,
    skew_plethysm_coefficient,
    verify_growth_identity,
)

P = Partition
S = SkewShape.straight


# ---------------------------------------------------------------------------
# stabilization detection
# ---------------------------------------------------------------------------


def test_detect_examples():
    assert detect_stabilization([1, 1, 1, 1, 1], 3) == (0, True)
    assert detect_stabilization([0, 1, 2, 2, 2, 2], 4) == (2, True)
    assert detect_stabilization([1, 2, 1, 2], 3) == (None, False)


def test_detect_edges():
    assert detect_stabilization([7], 1) == (0, True)
    assert detect_stabilization([7], 2) == (0, False)
    assert detect_stabilization([1, 1], 3) == (0, False)
    with pytest.raises(ValueError):
        detect_stabilization([], 1)
    with pytest.raises(ValueError):
        detect_stabilization([1], 0)


def reference_least_constant_index(values):
    for j in range(len(values)):
        if all(v == values[j] for v in values[j:]):
            return j
    return None


@pytest.mark.parametrize(
    "values",
    [
        [0, 0, 1, 1, 1],
        [3, 2, 2],
        [1],
        [1, 1, 1],
        [5, 4, 3, 2],
        [2, 2, 2, 3],
    ],
)
def test_detect_index_is_minimal(values):
    idx, _ = detect_stabilization(values, 2)
    ref = reference_least_constant_index(values)
    if len(values) > 1 and values[-1] != values[-2]:
        assert idx is None
    else:
        assert idx == ref


# ---------------------------------------------------------------------------
# sequences
# ---------------------------------------------------------------------------


def test_sequence_row_size_one_is_kronecker_delta():
    spec = SequenceSpec(S((2, 1)), S((2, 1)), 1, 1, 4)
    report = coefficient_sequence(spec)
    assert report.values == (1, 1, 1, 1, 1)
    assert report.stabilization_index == 0
    assert report.window_confirmed and report.limit == 1
    for n in range(0, 5):
        for nu in partitions_of(n):
            for lam in partitions_of(n):
                for l in (0, 1):
                    rep = coefficient_sequence(SequenceSpec(S(nu), S(lam), l, 1, 3))
                    expected = 1 if nu == lam else 0
                    assert rep.values == (expected,) * 4


def test_sequence_examples_with_row_size_two():
    rep = coefficient_sequence(SequenceSpec(S((4,)), S((2,)), 2, 2, 2))
    assert rep.values == (1, 1, 1)
    rep = coefficient_sequence(SequenceSpec(S((3, 1)), S((1, 1)), 1, 2, 2))
    assert rep.values == (1, 1, 1)


def test_sequence_first_value_is_the_plain_coefficient():
    for sigma_n, m in [(4, 2), (6, 2), (6, 3)]:
        for sigma in partitions_of(sigma_n):
            for tau in partitions_of(sigma_n // m):
                for l in range(m + 1):
                    rep = coefficient_sequence(SequenceSpec(S(sigma), S(tau), l, m, 2))
                    assert rep.values[0] == plethysm_coefficient(sigma, tau, P((m,)))


def test_sequence_degree_mismatch_is_identically_zero():
    rep = coefficient_sequence(SequenceSpec(S((3,)), S((2,)), 1, 2, 6))
    assert rep.values == (0,) * 7
    # the degree gap is growth-invariant, so this holds for every j
    sigma, tau = P((3,)), P((2,))
    for j in range(7):
        assert grow_arm_legs(sigma, 1, 2, j).size - 2 * grow_line(tau, 1, 2, j).size == -1


def test_sequence_skew_inputs():
    spec = SequenceSpec(
        SkewShape(P((3, 1)), P((1,))), SkewShape(P((2, 1)), P((1, 1))), 1, 2, 4
    )
    rep = coefficient_sequence(spec)
    assert len(rep.values) == 5
    for j, value in enumerate(rep.values):
        direct = skew_plethysm_coefficient(
            SkewShape(grow_arm_legs(P((3, 1)), 1, 2, j), P((1,))),
            SkewShape(grow_line(P((2, 1)), 1, 2, j), P((1, 1))),
            P((2,)),
        )
        assert value == direct


def test_sequence_non_contained_inner_gives_zero_sequence():
    spec = SequenceSpec(
        SkewShape(P((2,)), P((3,))), S((1,)), 2, 2, 3
    )
    assert coefficient_sequence(spec).values == (0, 0, 0, 0)


def test_sequence_spec_validation():
    with pytest.raises(ValueError):
        SequenceSpec(S((1,)), S((1,)), 3, 2, 4)
    with pytest.raises(ValueError):
        SequenceSpec(S((1,)), S((1,)), 0, 0, 4)
    with pytest.raises(ValueError):
        SequenceSpec(S((1,)), S((1,)), 1, 2, -1)


# ---------------------------------------------------------------------------
# the alternating reduction
# ---------------------------------------------------------------------------


def test_reduction_examples():
    assert recurrence_coefficient(P((1, 1)), P((3, 1)), 2) == 1
    assert recurrence_coefficient(P((2,)), P((2, 2)), 2) == 1
    assert recurrence_coefficient(P((2,)), P((1, 1, 1, 1)), 2) == 0


def test_reduction_rejects_bad_arguments():
    with pytest.raises(ValueError):
        recurrence_coefficient(P((2,)), P((2, 2)), 1)
    with pytest.raises(ValueError):
        recurrence_coefficient(P(()), P(()), 2)


def test_reduction_matches_direct_small():
    for n in range(1, 4):
        for lam in partitions_of(n):
            for m in (2, 3):
                for nu in partitions_of(m * n):
                    if len(nu) <= n:
                        assert recurrence_coefficient(lam, nu, m) == plethysm_coefficient(
                            nu, lam, P((m,))
                        )


def test_reduction_deep_mode():
    assert recurrence_coefficient(P((2, 1)), P((4, 3, 2)), 3, deep=True) == 1
    for lam in partitions_of(3):
        for nu in partitions_of(9):
            if len(nu) <= 3:
                assert recurrence_coefficient(lam, nu, 3, deep=True) == plethysm_coefficient(
                    nu, lam, P((3,))
                )


def test_reduction_mismatch_raises():
    # a deliberately corrupted inner evaluation must be reported, not returned
    from plethlab import stability

    original = stability.plethysm_coefficient
    try:
        stability.plethysm_coefficient = lambda *a, **k: original(*a, **k) + 1
        with pytest.raises(VerificationError):
            recurrence_coefficient(P((1, 1)), P((3, 1)), 2)
    finally:
        stability.plethysm_coefficient = original


# ---------------------------------------------------------------------------
# the two-sided growth identity
# ---------------------------------------------------------------------------


def test_growth_identity_examples():
    assert verify_growth_identity(P((3, 1)), P((1, 1)), 1, 1, 2).equal
    assert verify_growth_identity(P((4,)), P((2,)), 2, 1, 1).equal
    vac = verify_growth_identity(P((3,)), P((2,)), 1, 1, 1)
    assert vac.vacuous and vac.equal and "vacuous" in vac.note


def test_growth_identity_small_sweep():
    for n in (1, 2):
        for lam in partitions_of(n):
            for m in (1, 2):
                for nu in partitions_of((m + 1) * n):
                    if len(nu) > n:
                        continue
                    for l in range(m + 1):
                        for j in range(3):
                            assert verify_growth_identity(nu, lam, l, m, j).equal


# ---------------------------------------------------------------------------
# scans
# ---------------------------------------------------------------------------


def test_scan_empty_bounds():
    report = scan(ScanBounds(), j_max=3, window=2)
    assert report.cells == ()
    assert report.to_dict()["cells"] == 0


def test_scan_small_and_deterministic():
    bounds = ScanBounds(tau_sizes=(0, 1, 2), m_values=(2,))
    r1 = scan(bounds, j_max=6, window=3)
    r2 = scan(bounds, j_max=6, window=3)
    assert [c.to_dict() for c in r1.cells] == [c.to_dict() for c in r2.cells]
    assert len(r1.cells) == (1 + 1 * 2 + 2 * 5) * 3
    assert not r1.not_stabilized
    assert not r1.proven_family_violations


def test_scan_arm_only_growth_is_weakly_increasing():
    bounds = ScanBounds(tau_sizes=(1, 2), m_values=(2, 3), l_values=None)
    report = scan(bounds, j_max=8, window=4)
    for cell in report.cells:
        if cell.l == cell.m or cell.l == 0:
            assert cell.report.weakly_increasing, cell.key


def test_scan_reports_the_degenerate_anchor_violation():
    # the empty-against-empty family at (l, m) = (1, 2) starts at the unit
    # coefficient 1 and vanishes for every grown index; the report must
    # carry it as a conjectured-family violation rather than fail
    bounds = ScanBounds(tau_sizes=(0,), m_values=(2,))
    report = scan(bounds, j_max=6, window=3)
    keys = [c.key for c in report.conjectured_family_violations]
    assert keys == ["0|0|l=1|m=2"]
    (cell,) = report.conjectured_family_violations
    assert cell.report.values == (1,) + (0,) * 6
