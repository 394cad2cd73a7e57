import pytest

from hamming_radio.errors import RepetitionError, ShapeError
from hamming_radio.graphs import make_graph_spec
from hamming_radio.perms import Permutation, from_cycles
from hamming_radio.verify import (
    NonConsecutiveViolation,
    Ordering,
    RadioViolation,
    RepetitionViolation,
    check_labeling,
    check_ordering,
    induced_labeling,
    is_consecutive,
    is_valid_ordering,
    permute_column,
    position_labeling,
    repetition_violations,
    verify_radio,
)
from hamming_radio.verify import Labeling, _minimal_label

from .oracles import (
    oracle_greedy_labels,
    oracle_minimal_label,
    oracle_pairwise_violations,
    random_permutation_rows,
    random_weak_rows,
    seeded,
)


def test_ordering_shape_validation(k32_spec):
    with pytest.raises(ShapeError):
        Ordering(k32_spec, ((1, 1),) * 8)
    with pytest.raises(ShapeError):
        Ordering(k32_spec, ((1, 4),) + ((1, 1),) * 8)
    ordering = Ordering(k32_spec, ((1, 1),) * 9)
    assert ordering.row(1) == (1, 1)
    with pytest.raises(ShapeError):
        ordering.row(0)
    with pytest.raises(ShapeError):
        ordering.row(10)


def test_goldens_are_clean(golden_k32, golden_k34):
    for golden in (golden_k32, golden_k34):
        assert check_ordering(golden) == []
        assert is_valid_ordering(golden)
        labeling = position_labeling(golden)
        assert is_consecutive(labeling)
        assert verify_radio(labeling) == []
        assert check_labeling(labeling) == []


def test_induced_labeling_on_valid_ordering_is_row_number(golden_k32, golden_k34):
    for golden in (golden_k32, golden_k34):
        induced = induced_labeling(golden)
        assert induced.assignment == position_labeling(golden).assignment


def test_window_check_equals_all_pairs_check():
    """Dual route: the row-window rule and the all-pairs label rule must flag
    exactly the same (row, gap, shared) triples on repetition-free orderings."""
    spec = make_graph_spec([(3, 3)])
    rng = seeded(101)
    for _ in range(60):
        ordering = Ordering(spec, random_permutation_rows(spec, rng))
        window_side = {v for v in check_ordering(ordering) if isinstance(v, RadioViolation)}
        label_side = set(verify_radio(position_labeling(ordering)))
        assert window_side == label_side


def test_check_ordering_matches_definition_oracle():
    spec = make_graph_spec([(2, 1), (3, 1)])
    rng = seeded(103)
    for _ in range(100):
        rows = random_permutation_rows(spec, rng)
        ordering = Ordering(spec, rows)
        labeled = [(v, i) for i, v in enumerate(rows, start=1)]
        oracle = oracle_pairwise_violations(spec.diameter, labeled)
        got = sorted(
            (v.row - v.gap, v.row, v.shared)
            for v in check_ordering(ordering)
            if isinstance(v, RadioViolation)
        )
        assert got == sorted(oracle)


def test_check_ordering_reports_repetitions():
    spec = make_graph_spec([(3, 1)])
    ordering = Ordering(spec, ((1,), (2,), (1,)))
    reps = [v for v in check_ordering(ordering) if isinstance(v, RepetitionViolation)]
    assert reps == [RepetitionViolation(1, 3)]
    assert not is_valid_ordering(ordering)


def test_repetition_violations_all_pairs():
    rows = ((1, 1), (2, 2), (1, 1), (2, 2), (1, 1), (1, 2), (2, 1), (1, 3), (2, 3))
    out = repetition_violations(rows)
    assert RepetitionViolation(1, 3) in out
    assert RepetitionViolation(1, 5) in out
    assert RepetitionViolation(3, 5) in out
    assert RepetitionViolation(2, 4) in out
    assert len(out) == 4


def test_synthetic_violation_details(golden_k32):
    # swapping two rows of a valid ordering must surface window violations
    rows = list(golden_k32.rows)
    rows[2], rows[6] = rows[6], rows[2]
    broken = Ordering(golden_k32.spec, tuple(rows))
    violations = check_ordering(broken)
    assert violations
    for v in violations:
        assert isinstance(v, RadioViolation)
        assert v.shared >= v.gap
        assert "share" in str(v)


def test_minimal_label_matches_oracle():
    rng = seeded(107)
    for _ in range(200):
        lower = rng.randint(1, 10)
        intervals = []
        for _ in range(rng.randint(0, 6)):
            lo = rng.randint(-3, 12)
            intervals.append((lo, lo + rng.randint(1, 5)))
        assert _minimal_label(lower, intervals) == oracle_minimal_label(lower, intervals)


def test_induced_labeling_matches_greedy_oracle():
    spec = make_graph_spec([(3, 2)])
    rng = seeded(109)
    for _ in range(50):
        rows = random_permutation_rows(spec, rng)
        labeling = induced_labeling(Ordering(spec, rows))
        expected = oracle_greedy_labels(spec.diameter, rows)
        assert [labeling.assignment[v] for v in rows] == expected


def test_induced_labeling_rejects_repetition(k32_spec):
    rows = ((1, 1),) * 9
    with pytest.raises(RepetitionError):
        induced_labeling(Ordering(k32_spec, rows))
    with pytest.raises(RepetitionError):
        position_labeling(Ordering(k32_spec, rows))


def test_labeling_validation_and_consecutive(k32_spec):
    with pytest.raises(ShapeError):
        Labeling(k32_spec, {(1, 1): 0})
    partial = Labeling(k32_spec, {(1, 1): 1, (2, 2): 3})
    assert not partial.is_total
    assert not is_consecutive(partial)
    report = check_labeling(partial)
    assert NonConsecutiveViolation(first_gap=2) in report


def test_check_labeling_flags_close_pair(k32_spec):
    # same vertex pair distance 1 apart in labels but sharing a coordinate
    labeling = Labeling(k32_spec, {(1, 1): 1, (1, 2): 2})
    radio = verify_radio(labeling)
    assert radio == [RadioViolation(row=2, gap=1, shared=1)]


def test_permute_column_preserves_validity(golden_k34):
    rng = seeded(113)
    ordering = golden_k34
    for col in (1, 2, 3, 4):
        images = [1, 2, 3]
        rng.shuffle(images)
        ordering = permute_column(ordering, col, Permutation(images))
    assert check_ordering(ordering) == []


def test_permute_column_round_trip(golden_k32):
    sigma = from_cycles(3, "(123)")
    once = permute_column(golden_k32, 1, sigma)
    back = permute_column(once, 1, sigma.inverse())
    assert back.rows == golden_k32.rows


def test_permute_column_shape_error(golden_k32):
    with pytest.raises(ShapeError):
        permute_column(golden_k32, 1, Permutation([2, 1]))


def test_weak_rows_allowed_in_ordering():
    # repeated rows are representable; the checks report rather than refuse
    spec = make_graph_spec([(2, 2)])
    rows = random_weak_rows(spec, seeded(127))
    ordering = Ordering(spec, rows)
    assert len(ordering.rows) == spec.num_vertices
