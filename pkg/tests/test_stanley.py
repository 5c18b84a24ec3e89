"""Interval partitions: verification, feasibility search, and scans."""

from __future__ import annotations

import random

import pytest

from sqfdepth import (
    GF2,
    InputError,
    Interval,
    IntervalPartition,
    Monomial,
    conjecture_scan,
    exact_depth,
    partition_exists,
    poset_elements,
    random_instance,
    rho,
    stanley_depth,
    validate_pair,
    verify_partition,
)
from sqfdepth.generate import GeneratorParams, default_params

from oracles import brute_stanley_depth


def mono(n, *indices):
    return Monomial.from_support(n, indices)


def paper_instance():
    return validate_pair(4, [mono(4, 1), mono(4, 3)], [mono(4, 1, 4)])


def pure_powers_instance():
    return validate_pair(
        3,
        [mono(3, 1), mono(3, 2), mono(3, 3)],
        [mono(3, 1, 2), mono(3, 1, 3), mono(3, 2, 3)],
    )


def fuzz_instances(n_values=(3, 4, 5), per_n=15, seed=55):
    out = []
    for n in n_values:
        rng = random.Random(seed + n)
        params = default_params(n)
        out.extend(random_instance(params, rng) for _ in range(per_n))
    return out


def test_verify_partition_accepts_hand_witness():
    inst = paper_instance()
    partition = IntervalPartition(
        intervals=(
            Interval(mono(4, 1), mono(4, 1, 2, 3)),
            Interval(mono(4, 3), mono(4, 2, 3, 4)),
        ),
        sdepth_value=3,
    )
    check = verify_partition(inst, partition)
    assert check.ok, check.reason
    assert len(partition.intervals[0].members(inst)) == 4


def test_verify_partition_rejects_uncovered_element():
    inst = paper_instance()
    partition = IntervalPartition(
        intervals=(Interval(mono(4, 1), mono(4, 1, 2, 3)),), sdepth_value=3
    )
    check = verify_partition(inst, partition)
    assert not check.ok
    assert "not covered" in check.reason


def test_verify_partition_rejects_top_outside_poset():
    inst = paper_instance()
    partition = IntervalPartition(
        intervals=(
            Interval(mono(4, 1), mono(4, 1, 2, 3)),
            Interval(mono(4, 1, 3), mono(4, 1, 2, 3, 4)),
        ),
        sdepth_value=3,
    )
    check = verify_partition(inst, partition)
    assert not check.ok
    assert "not in the poset" in check.reason


def test_verify_partition_rejects_overlap():
    inst = paper_instance()
    partition = IntervalPartition(
        intervals=(
            Interval(mono(4, 1), mono(4, 1, 2, 3)),
            Interval(mono(4, 1, 3), mono(4, 1, 2, 3)),
            Interval(mono(4, 3), mono(4, 2, 3, 4)),
        ),
        sdepth_value=3,
    )
    check = verify_partition(inst, partition)
    assert not check.ok
    assert "overlap" in check.reason


def test_verify_partition_rejects_wrong_recorded_value():
    inst = paper_instance()
    partition = IntervalPartition(
        intervals=(
            Interval(mono(4, 1), mono(4, 1, 2, 3)),
            Interval(mono(4, 3), mono(4, 2, 3, 4)),
        ),
        sdepth_value=2,
    )
    assert not verify_partition(inst, partition).ok


def test_partition_exists_golden():
    inst = paper_instance()
    found = partition_exists(inst, 3)
    assert found is not None
    assert found.sdepth_value >= 3
    assert verify_partition(inst, found).ok
    assert partition_exists(inst, 4) is None
    with pytest.raises(InputError):
        partition_exists(inst, 0)


def test_partition_exists_at_floor_is_always_feasible():
    for inst in fuzz_instances():
        found = partition_exists(inst, inst.d)
        assert found is not None
        assert verify_partition(inst, found).ok


def test_stanley_depth_golden_values():
    value, witness = stanley_depth(paper_instance())
    assert value == 3
    assert verify_partition(paper_instance(), witness).ok

    value, witness = stanley_depth(pure_powers_instance())
    assert value == 1
    assert all(iv.bottom == iv.top for iv in witness.intervals)

    cone = validate_pair(2, [mono(2, 1)], [])
    value, witness = stanley_depth(cone)
    assert value == 2
    assert len(witness.intervals) == 1


def test_full_variable_ideal_matches_known_values():
    # the ideal of all variables: sdepth is ceil(n/2), depth is 1
    for n in range(2, 7):
        gens = [mono(n, j) for j in range(1, n + 1)]
        inst = validate_pair(n, gens, [])
        value, witness = stanley_depth(inst)
        assert value == -(-n // 2)
        assert verify_partition(inst, witness).ok
        assert exact_depth(inst) == 1
        assert exact_depth(inst, GF2) == 1


def test_monotone_feasibility():
    for inst in fuzz_instances(per_n=8):
        value, _ = stanley_depth(inst)
        for k in range(inst.d, value + 1):
            assert partition_exists(inst, k) is not None


def test_witnesses_always_verify():
    for inst in fuzz_instances(per_n=10, seed=91):
        value, witness = stanley_depth(inst)
        assert witness.sdepth_value == value
        assert verify_partition(inst, witness).ok


def test_sdepth_capped_by_top_degree_and_gap_rule():
    for inst in fuzz_instances(per_n=10, seed=14):
        value, _ = stanley_depth(inst)
        top = max(m.degree for m in poset_elements(inst))
        assert value <= top
        if rho(inst, inst.d + 2) == 0:
            assert value <= inst.d + 1


def test_backtracking_agrees_with_bruteforce_on_small_posets():
    checked = 0
    for inst in fuzz_instances(n_values=(3, 4), per_n=25, seed=33):
        if len(poset_elements(inst)) > 12:
            continue
        value, _ = stanley_depth(inst)
        assert value == brute_stanley_depth(inst)
        checked += 1
    assert checked >= 20


def test_conjecture_scan_empty():
    report = conjecture_scan(GeneratorParams(n=4), count=0, seed=1)
    assert report.records == []
    assert report.stanley_violations == []


def test_conjecture_scan_small_run():
    report = conjecture_scan(default_params(4), count=50, seed=9, max_sdepth_poset=None)
    assert len(report.records) == 50
    assert report.stanley_violations == []
    for record in report.records:
        assert record.sdepth is not None
        assert record.sdepth >= max(record.depth.values()) or record.index in report.stanley_violations


def test_conjecture_scan_deterministic():
    a = conjecture_scan(default_params(5), count=30, seed=4, max_sdepth_poset=None)
    b = conjecture_scan(default_params(5), count=30, seed=4, max_sdepth_poset=None)
    assert a.to_json_dict() == b.to_json_dict()


def test_conjecture_scan_respects_poset_cap():
    report = conjecture_scan(default_params(6), count=40, seed=2, max_sdepth_poset=5)
    for record in report.records:
        if record.index in report.skipped_sdepth:
            assert record.sdepth is None
        else:
            assert record.sdepth is not None
