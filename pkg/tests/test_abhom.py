"""Abelianization and Hom_Ab(H, A) tests, cross-checked by brute force."""

import itertools

import pytest

from derring.abhom import (
    abelianization,
    commutator_subgroup,
    hom_from_values,
    hom_group,
    zero_hom,
)
from derring.groups import (
    cyclic_group,
    dihedral_group,
    element_order,
    full_subgroup,
    product_group,
    subgroup,
    subgroup_closure,
    symmetric_group,
)
from derring.rings import GFRing, INTEGERS, ProductRing, ZmRing


def brute_force_homs(H, A):
    """All additive maps from the subgroup H to (A, +), by propagating
    generator images through the Cayley graph and rejecting clashes."""
    G = H.group
    gens = []
    span = subgroup_closure(G, [])
    for g in H.elements:
        if g not in span:
            gens.append(g)
            span = subgroup_closure(G, gens)
        if span.order == H.order:
            break
    found = []
    for images in itertools.product(A.elements(), repeat=len(gens)):
        table = {0: A.zero}
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, img in zip(gens, images):
                    y = G.mul(x, g)
                    val = A.add(table[x], img)
                    if y in table:
                        if table[y] != val:
                            ok = False
                            break
                    else:
                        table[y] = val
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        # additive maps must also respect products of arbitrary pairs
        if ok:
            for x in H.elements:
                for y in H.elements:
                    if A.add(table[x], table[y]) != table[G.mul(x, y)]:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            found.append(tuple(table[g] for g in H.elements))
    return set(found)


def test_commutator_subgroup():
    S3 = symmetric_group(3)
    assert set(commutator_subgroup(full_subgroup(S3)).elements) == {0, 3, 4}
    C6 = cyclic_group(6)
    assert commutator_subgroup(full_subgroup(C6)).order == 1
    D3 = dihedral_group(3)
    K = commutator_subgroup(full_subgroup(D3))
    assert set(K.elements) == {0, 2, 4}  # even rotations, generated by r^2


def test_abelianization_s3():
    q = abelianization(full_subgroup(symmetric_group(3)))
    assert q.quotient.order == 2
    assert q.orders == (2,)
    assert q.project(1) == q.project(2) == q.project(5) != 0
    assert q.project(3) == 0


def test_abelianization_subgroup_and_dihedral():
    S3 = symmetric_group(3)
    a3 = abelianization(subgroup(S3, [0, 3, 4]))
    assert a3.quotient.order == 3
    assert a3.orders == (3,)
    d3 = abelianization(full_subgroup(dihedral_group(3)))
    assert sorted(d3.orders) == [2, 2]


def test_abelian_quotient_coords():
    q = abelianization(full_subgroup(cyclic_group(12)))
    assert sorted(q.orders) == [3, 4]
    comp_orders = tuple(c.order for c in q.components)
    for g in range(12):
        for h in range(12):
            cs = q.coords((g + h) % 12)
            a, b = q.coords(g), q.coords(h)
            summed = tuple((x + y) % o for x, y, o in zip(a, b, comp_orders))
            assert cs == summed


def test_hom_group_s3_z4():
    S3 = symmetric_group(3)
    hg = hom_group(full_subgroup(S3), ZmRing(4))
    assert hg.structure == ((2, 1),)
    assert hg.order == 2
    (phi,) = hg.generators
    for t in (1, 2, 5):
        assert phi(t) == 2
    for c in (0, 3, 4):
        assert phi(c) == 0


def test_hom_group_z3_z4_trivial():
    S3 = symmetric_group(3)
    hg = hom_group(subgroup(S3, [0, 3, 4]), ZmRing(4))
    assert hg.is_trivial()
    assert hg.order == 1


def test_hom_group_z8_z4():
    C8 = cyclic_group(8)
    hg = hom_group(full_subgroup(C8), ZmRing(4))
    assert hg.structure == ((2, 2),)
    assert hg.order == 4
    (phi,) = hg.generators
    assert phi(1) == 1
    assert phi(2) == 2


def test_hom_cross_prime_vanishes():
    assert hom_group(full_subgroup(cyclic_group(3)), ZmRing(4)).is_trivial()
    assert hom_group(full_subgroup(cyclic_group(2)), ZmRing(9)).is_trivial()
    assert hom_group(full_subgroup(cyclic_group(5)), GFRing(2, 3)).is_trivial()


def test_hom_respects_element_orders():
    for H, A in [
        (full_subgroup(dihedral_group(2)), ZmRing(8)),
        (full_subgroup(symmetric_group(3)), GFRing(2, 2)),
        (full_subgroup(cyclic_group(12)), ZmRing(6)),
    ]:
        G = H.group
        for _, phi in hom_group(H, A).enumerate_members():
            for g in H.elements:
                assert A.scalar(element_order(G, g), phi(g)) == A.zero


def test_hom_group_matches_brute_force():
    S3 = symmetric_group(3)
    S4 = symmetric_group(4)
    domains = [
        full_subgroup(cyclic_group(m)) for m in (1, 2, 3, 4, 6, 8, 12)
    ] + [
        full_subgroup(product_group([cyclic_group(2), cyclic_group(2)])),
        full_subgroup(product_group([cyclic_group(2), cyclic_group(4)])),
        full_subgroup(symmetric_group(3)),
        full_subgroup(dihedral_group(2)),
        subgroup(S3, [0, 3, 4]),
        subgroup_closure(S4, [S4.names.index("(123)"), S4.names.index("(124)")]),  # A4
    ]
    rings = [ZmRing(2), ZmRing(3), ZmRing(4), ZmRing(6), ZmRing(8), ZmRing(16),
             ZmRing(9), ZmRing(12), GFRing(2, 2), GFRing(3, 2),
             ProductRing([ZmRing(2), ZmRing(2)])]
    for H in domains:
        for A in rings:
            hg = hom_group(H, A)
            members = {phi.value_table() for _, phi in hg.enumerate_members()}
            assert len(members) == hg.order
            assert members == brute_force_homs(H, A), (H.elements, A.label)


def test_hom_arithmetic():
    H = full_subgroup(cyclic_group(8))
    A = ZmRing(4)
    hg = hom_group(H, A)
    (phi,) = hg.generators
    two_phi = phi.add(phi)
    assert two_phi.value_table() == phi.scale(2).value_table()
    assert phi.add(phi.neg()).is_zero()
    assert phi.additive_order() == 4
    assert zero_hom(phi.quotient, A).is_zero()


def test_hom_from_values_rejects_non_additive():
    H = full_subgroup(cyclic_group(4))
    A = ZmRing(4)
    q = abelianization(H)
    good = hom_from_values(q, A, {g: g for g in range(4)})
    assert good(3) == 3
    with pytest.raises(ValueError):
        hom_from_values(q, A, {0: 0, 1: 1, 2: 3, 3: 3})


def test_coordinates_round_trip():
    H = full_subgroup(product_group([cyclic_group(2), cyclic_group(4)]))
    A = ZmRing(8)
    hg = hom_group(H, A)
    for _, phi in hg.enumerate_members():
        coords = hg.coordinates_of(phi)
        assert coords is not None
        rebuilt = hg.member(coords)
        assert rebuilt.value_table() == phi.value_table()


def test_hom_group_integers_rejected():
    with pytest.raises(TypeError):
        hom_group(full_subgroup(cyclic_group(2)), INTEGERS)
