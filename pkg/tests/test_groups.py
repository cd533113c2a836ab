"""Finite groups by multiplication table."""

import pytest

from galforms.groups import (
    FiniteGroup,
    cyclic,
    direct_product,
    homomorphisms,
    subgroup_closure,
    symmetric,
)


def test_cyclic_basics():
    g = cyclic(6)
    assert g.order == 6
    assert g.identity == 0
    assert g.element_order(1) == 6
    assert g.element_order(2) == 3
    assert g.inv(1) == 5
    assert g.is_abelian()


def test_symmetric_group():
    s3 = symmetric(3)
    assert s3.order == 6
    assert not s3.is_abelian()
    assert sorted(s3.element_order(x) for x in s3.elements()) == [1, 2, 2, 2, 3, 3]
    # conjugation preserves order
    for c in s3.elements():
        for a in s3.elements():
            assert s3.element_order(s3.conjugate(c, a)) == s3.element_order(a)


def test_direct_product():
    v4 = direct_product(cyclic(2), cyclic(2))
    assert v4.order == 4
    assert all(v4.element_order(x) in (1, 2) for x in v4.elements())


def test_bad_table_rejected():
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [1, 1]])


def test_homomorphism_counts():
    # Hom(Z/2, Z/2) = 2, Hom(Z/3, S3) = 3, Hom(S3, Z/2) = 2
    assert len(homomorphisms(cyclic(2), cyclic(2))) == 2
    assert len(homomorphisms(cyclic(3), symmetric(3))) == 3
    assert len(homomorphisms(symmetric(3), cyclic(2))) == 2
    # Hom(S3, S3): 1 trivial + 3 sign-type + 6 automorphisms = 10
    assert len(homomorphisms(symmetric(3), symmetric(3))) == 10
    for h in homomorphisms(symmetric(3), symmetric(3)):
        s3 = symmetric(3)
        for a in s3.elements():
            for b in s3.elements():
                assert h[s3.table[a][b]] == s3.table[h[a]][h[b]]


def test_subgroup_closure():
    s3 = symmetric(3)
    three = next(x for x in s3.elements() if s3.element_order(x) == 3)
    assert len(subgroup_closure(s3, [three])) == 3
    assert len(subgroup_closure(s3, [])) == 1
