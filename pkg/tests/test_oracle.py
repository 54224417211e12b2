"""Oracle tests: brute-force cross-checks, frozen sizes, compare verdicts."""

import dataclasses
import itertools

import pytest

from derring.derivations import (
    Derivation,
    ModuleStructure,
    ad,
    derivation_module_report,
    leibniz_check,
)
from derring.errors import SizeLimitError
from derring.groups import cyclic_group, dihedral_group, symmetric_group
from derring.oracle import (
    ENUMERATION_LIMIT,
    compare,
    solve_all_derivations,
)
from derring.rings import GFRing, INTEGERS, ProductRing, ZmRing


def leibniz_holds(G, A, matrix):
    """Independent Leibniz check written directly against the ring ops."""
    for g1 in range(G.order):
        for g2 in range(G.order):
            for h in range(G.order):
                lhs = matrix[h][G.mul(g1, g2)]
                rhs = A.add(
                    matrix[G.mul(h, G.inv(g2))][g1],
                    matrix[G.mul(G.inv(g1), h)][g2],
                )
                if lhs != rhs:
                    return False
    return True


def test_oracle_matches_exhaustive_filter_on_z4_c2():
    G = cyclic_group(2)
    A = ZmRing(4)
    brute = set()
    for entries in itertools.product(range(4), repeat=4):
        matrix = ((entries[0], entries[1]), (entries[2], entries[3]))
        if leibniz_holds(G, A, matrix):
            brute.add(matrix)
    sol = solve_all_derivations(G, A)
    assert {d.matrix for d in sol.enumerate_solutions()} == brute
    assert sol.cardinality == len(brute) == 4
    assert sol.invariants == ((2, 1), (2, 1))


def test_oracle_solutions_satisfy_leibniz():
    for G, A in [
        (symmetric_group(3), ZmRing(4)),
        (symmetric_group(3), ZmRing(2)),
        (dihedral_group(2), GFRing(2, 1)),
    ]:
        sol = solve_all_derivations(G, A)
        assert sol.unknown_count == G.order**2
        for d, o in zip(sol.generators, sol.orders):
            assert leibniz_holds(G, A, d.matrix)
            assert leibniz_check(d)
            assert d.additive_order() == o
        card = 1
        for o in sol.orders:
            card *= o
        assert card == sol.cardinality


def test_oracle_enumeration_is_closed_under_module_ops():
    G = symmetric_group(3)
    A = ZmRing(2)
    sol = solve_all_derivations(G, A)
    sols = sol.enumerate_solutions()
    assert len(sols) == sol.cardinality == 32
    mats = {d.matrix for d in sols}
    assert len(mats) == 32
    for d in sols:
        assert leibniz_holds(G, A, d.matrix)
    for d1 in sols[:8]:
        for d2 in sols[:8]:
            assert (d1 + d2).matrix in mats
        for a in A.elements():
            assert d1.scale(a).matrix in mats


def test_oracle_frozen_cardinalities():
    cases = [
        (symmetric_group(3), ZmRing(4), 256),
        (symmetric_group(3), ZmRing(3), 81),
        (symmetric_group(3), ZmRing(2), 32),
        (symmetric_group(3), ZmRing(6), 2592),
        (cyclic_group(2), ZmRing(4), 4),
        (dihedral_group(2), GFRing(2, 1), 4096),
        (dihedral_group(2), GFRing(2, 2), 2**24),
        (dihedral_group(3), GFRing(2, 1), 2**16),
        (dihedral_group(3), GFRing(2, 2), 2**32),
        (dihedral_group(4), GFRing(2, 1), 2**20),
    ]
    for G, A, size in cases:
        assert solve_all_derivations(G, A).cardinality == size


def test_oracle_invariants_match_report_for_z4_s3():
    G = symmetric_group(3)
    A = ZmRing(4)
    sol = solve_all_derivations(G, A)
    assert sol.invariants == ((2, 1), (2, 1), (2, 2), (2, 2), (2, 2))
    report = derivation_module_report(G, A)
    assert report.module_structure.primary_invariants() == sol.invariants


def test_oracle_product_ring_splits_by_factor():
    G = symmetric_group(3)
    P = ProductRing((ZmRing(2), ZmRing(3)))
    sol = solve_all_derivations(G, P)
    assert sol.cardinality == 32 * 81
    report = derivation_module_report(G, P)
    assert compare(report, sol).passed


def test_compare_passes_on_reference_cases():
    cases = [
        (symmetric_group(3), ZmRing(4)),
        (symmetric_group(3), ZmRing(3)),
        (symmetric_group(3), ZmRing(6)),
        (cyclic_group(2), ZmRing(4)),
        (cyclic_group(6), ZmRing(4)),
        (dihedral_group(2), GFRing(2, 1)),
    ]
    for G, A in cases:
        report = derivation_module_report(G, A)
        sol = solve_all_derivations(G, A)
        verdict = compare(report, sol)
        assert verdict.cardinality_match
        assert verdict.report_generators_in_kernel
        assert verdict.oracle_generators_decompose
        assert verdict.inner_matches_loop_trivial
        assert verdict.passed
        if sol.cardinality <= ENUMERATION_LIMIT:
            assert any("enumerated both" in n for n in verdict.notes)


def test_compare_rejects_mismatched_pair():
    report = derivation_module_report(symmetric_group(3), ZmRing(4))
    sol = solve_all_derivations(symmetric_group(3), ZmRing(2))
    with pytest.raises(ValueError):
        compare(report, sol)


def test_compare_flags_wrong_cardinality():
    G = symmetric_group(3)
    A = ZmRing(4)
    report = derivation_module_report(G, A)
    sol = solve_all_derivations(G, A)
    inflated = dataclasses.replace(
        report,
        module_structure=ModuleStructure(A, report.inner_rank + 1, report.module_structure.torsion),
    )
    verdict = compare(inflated, sol)
    assert not verdict.cardinality_match
    assert not verdict.passed


def test_compare_flags_corrupted_generator():
    G = symmetric_group(3)
    A = ZmRing(4)
    report = derivation_module_report(G, A)
    sol = solve_all_derivations(G, A)
    rows = [[A.zero] * 6 for _ in range(6)]
    rows[0][2] = 1  # lone entry: fails the Leibniz equations
    bad = Derivation.from_rows(G, A, rows)
    block = report.outer[1]
    bad_gen = dataclasses.replace(block.generators[0], derivation=bad)
    bad_block = dataclasses.replace(block, generators=(bad_gen,))
    tampered = dataclasses.replace(
        report, outer=(report.outer[0], bad_block, report.outer[2])
    )
    verdict = compare(tampered, sol)
    assert not verdict.report_generators_in_kernel
    assert not verdict.passed


def test_compare_flags_corrupted_oracle_generator():
    G = symmetric_group(3)
    A = ZmRing(4)
    report = derivation_module_report(G, A)
    sol = solve_all_derivations(G, A)
    rows = [[A.zero] * 6 for _ in range(6)]
    rows[0][2] = 1
    bad = Derivation.from_rows(G, A, rows)
    tampered = dataclasses.replace(
        sol, generators=sol.generators[:-1] + (bad,)
    )
    verdict = compare(report, tampered)
    assert not verdict.oracle_generators_decompose
    assert not verdict.passed


def test_oracle_size_limits():
    with pytest.raises(SizeLimitError):
        solve_all_derivations(symmetric_group(4), ZmRing(2), max_group_order=6)
    with pytest.raises(SizeLimitError):
        solve_all_derivations(symmetric_group(3), ZmRing(300))
    with pytest.raises(SizeLimitError):
        solve_all_derivations(symmetric_group(3), INTEGERS)
    sol = solve_all_derivations(dihedral_group(3), GFRing(2, 1))
    assert sol.cardinality > ENUMERATION_LIMIT
    with pytest.raises(SizeLimitError):
        sol.enumerate_solutions()


def test_oracle_inner_span_sits_inside_solutions():
    G = symmetric_group(3)
    A = ZmRing(2)
    sol = solve_all_derivations(G, A)
    mats = {d.matrix for d in sol.enumerate_solutions()}
    for g in range(G.order):
        assert ad(G, A, g).matrix in mats
