from __future__ import annotations

import numpy as np
import pytest

from cayley.core import MAX_ORDER, cyclic_group, from_table, symmetric_group
from cayley.errors import (
    NoIdentityError,
    NotAssociativeError,
    NotClosedError,
    NotLatinError,
    SizeCapError,
)

from oracles import naive_is_group_table, small_group_corpus

# A Latin square with identity 0 that is not a group table: element 1 has
# order 2, impossible in a group of order 5.
NONASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def test_trivial_table():
    g = from_table(1, [[0]])
    assert g.order == 1
    assert g.element_order(0) == 1
    assert g.cyclic_generator() == 0


def test_order_two_table():
    g = from_table(2, [[0, 1], [1, 0]])
    assert g.element_order(1) == 2
    assert g.is_abelian()


def test_not_latin():
    with pytest.raises(NotLatinError):
        from_table(2, [[0, 1], [1, 1]])


def test_out_of_range_entry():
    with pytest.raises(NotClosedError):
        from_table(2, [[0, 1], [1, 2]])


def test_no_identity():
    with pytest.raises(NoIdentityError):
        from_table(2, [[1, 0], [0, 1]])


def test_not_associative_with_witness():
    assert not naive_is_group_table(NONASSOCIATIVE_LOOP)
    with pytest.raises(NotAssociativeError) as excinfo:
        from_table(5, NONASSOCIATIVE_LOOP)
    i, j, k = excinfo.value.triple
    t = NONASSOCIATIVE_LOOP
    assert t[t[i][j]][k] != t[i][t[j][k]]


def test_validator_agrees_with_naive_oracle():
    tables = [
        [[0]],
        [[0, 1], [1, 0]],
        cyclic_group(4).rows(),
        symmetric_group(3).rows(),
        NONASSOCIATIVE_LOOP,
        [[0, 1], [1, 1]],
        [[1, 0], [0, 1]],
    ]
    for rows in tables:
        ok = naive_is_group_table(rows)
        try:
            from_table(len(rows), rows)
            accepted = True
        except Exception:
            accepted = False
        assert accepted == ok


def test_cyclic_group_basics():
    g = cyclic_group(6)
    assert g.element_order(1) == 6
    # Powers of index 2 under addition mod 6: 2, 4, 0 -> order 3.
    walk, steps = 2, 1
    while walk != 0:
        walk = (walk + 2) % 6
        steps += 1
    assert steps == 3
    assert g.element_order(2) == 3
    assert cyclic_group(1).order == 1
    assert g.cyclic_generator() == 1


def test_cyclic_rejects_zero():
    with pytest.raises(SizeCapError):
        cyclic_group(0)


def test_symmetric_group_s3(s3):
    assert s3.order == 6
    assert not s3.is_abelian()
    noncommuting = [
        (i, j)
        for i in range(6)
        for j in range(6)
        if s3.mul(i, j) != s3.mul(j, i)
    ]
    assert noncommuting
    assert max(s3.element_orders()) == 3
    assert not s3.is_cyclic()
    assert symmetric_group(1).order == 1


def test_symmetric_group_size_cap():
    with pytest.raises(SizeCapError):
        symmetric_group(8)
    assert MAX_ORDER == 4096


def test_element_orders_examples(s3):
    assert cyclic_group(15).element_order(1) == 15
    transpositions = [x for x in range(6) if s3.element_order(x) == 2]
    assert transpositions
    for t in transpositions:
        assert s3.mul(t, t) == 0


def test_lagrange_over_corpus():
    for g in small_group_corpus(10):
        for m in g.element_orders():
            assert g.order % m == 0


def test_cyclic_iff_max_order_is_group_order():
    for g in small_group_corpus(10):
        has_full = max(g.element_orders()) == g.order
        assert g.is_cyclic() == has_full
        gen = g.cyclic_generator()
        if gen is not None:
            assert g.element_order(gen) == g.order
            assert all(
                g.element_order(x) < g.order for x in range(gen)
            ), "generator must be the smallest index"


def test_validation_pass_recheckable():
    for g in [cyclic_group(12), symmetric_group(4)]:
        g.validate()
        assert int(g.table[g.inverse[3], 3]) == 0


def test_mul_matches_table(klein):
    assert klein.order == 4
    for i in range(4):
        for j in range(4):
            assert klein.mul(i, j) == int(klein.table[i, j])
    assert klein.is_abelian()
    assert sorted(klein.element_orders()) == [1, 2, 2, 2]


def test_immutability():
    g = cyclic_group(3)
    with pytest.raises(ValueError):
        g.table[0, 0] = 1


def test_group_equality_and_hash():
    a = cyclic_group(5)
    b = cyclic_group(5)
    assert a == b and hash(a) == hash(b)
    assert a != symmetric_group(3)


def test_conjugacy_and_center(s3):
    assert s3.conjugacy_class_sizes() == (1, 2, 3)
    assert s3.center_size() == 1
    c9 = cyclic_group(9)
    assert c9.center_size() == 9
    assert c9.conjugacy_class_sizes() == tuple([1] * 9)
    assert c9.is_abelian()


def test_large_cyclic_validates():
    g = cyclic_group(300)
    assert g.element_order(1) == 300
    assert np.array_equal(g.table[0], np.arange(300))
