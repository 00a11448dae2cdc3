"""Ring constructions: tables, axioms, homomorphisms, literals."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab.rings import (
    HomError,
    RingError,
    RingHom,
    elem_pow,
    identity_hom,
    make_hom,
    make_product,
    make_quotient,
    make_trivial_extension,
    make_zmod,
    module_from_ideal,
    module_from_quotient,
    module_self,
    verify_ring_axioms,
)
from ringlab.ideals import ideal_generated


def test_zmod_basic_arithmetic():
    R = make_zmod(6)
    assert R.order == 6
    assert R.add_i(4, 5) == 3
    assert R.mul_i(4, 5) == 2
    assert R.neg_i(2) == 4
    assert R.one_index == 1
    assert R.zero_index == 0


def test_zmod_rejects_degenerate_modulus():
    with pytest.raises(RingError):
        make_zmod(1)
    with pytest.raises(RingError):
        make_zmod(0)


@given(st.integers(min_value=2, max_value=30))
@settings(max_examples=25, deadline=None)
def test_zmod_axioms_hold(n):
    assert verify_ring_axioms(make_zmod(n)) == []


def test_product_mixed_radix_layout():
    R = make_product([make_zmod(2), make_zmod(3)])
    assert R.order == 6
    # first factor is most significant: index = 3*a + b
    assert R.value(5) == (1, 2)
    assert R.resolve((1, 2)) == 5
    assert R.mul_i(R.resolve((1, 2)), R.resolve((1, 2))) == R.resolve((1, 1))
    assert verify_ring_axioms(R) == []


def test_quotient_of_z12_by_4_is_z4_shaped():
    R = make_zmod(12)
    I = ideal_generated(R, [4])
    Q, pi = make_quotient(R, I)
    assert Q.order == 4
    assert pi.is_surjective
    assert sorted(pi.kernel_indices) == [0, 4, 8]
    assert verify_ring_axioms(Q) == []


def test_quotient_by_whole_ring_rejected():
    R = make_zmod(4)
    I = ideal_generated(R, [1])
    with pytest.raises(RingError):
        make_quotient(R, I)


def test_trivial_extension_square_zero():
    A = make_zmod(2)
    E = module_self(A)
    T = make_trivial_extension(A, E)
    assert T.order == 4
    z = T.resolve((0, 1))
    assert T.mul_i(z, z) == T.zero_index
    assert verify_ring_axioms(T) == []


def test_trivial_extension_multiplication_rule():
    A = make_zmod(3)
    T = make_trivial_extension(A, module_self(A))
    x = T.resolve((2, 1))
    y = T.resolve((1, 2))
    # (a,e)(a',e') = (aa', ae' + a'e)
    assert T.value(T.mul_i(x, y)) == (2, (2 * 2 + 1 * 1) % 3)


def test_module_from_ideal_and_quotient():
    R = make_zmod(8)
    I = ideal_generated(R, [2])
    M = module_from_ideal(R, I.elements)
    assert M.size == 4
    N = module_from_quotient(R, I.elements)
    assert N.size == 2


def test_hom_validation_catches_non_multiplicative():
    A = make_zmod(4)
    B = make_zmod(4)
    # x -> 3x is additive and unital-failing (3*1 = 3 != 1)
    with pytest.raises(HomError):
        make_hom(A, B, [(3 * x) % 4 for x in range(4)])


def test_hom_validation_catches_non_additive():
    A = make_zmod(4)
    table = [0, 1, 2, 3]
    table[2] = 3
    with pytest.raises(HomError):
        make_hom(A, A, table)


def test_canonical_surjection_kernel():
    R = make_zmod(9)
    I = ideal_generated(R, [3])
    _, pi = make_quotient(R, I)
    assert sorted(pi.kernel_indices) == [0, 3, 6]
    assert sorted(pi.image_indices) == [0, 1, 2]


def test_identity_hom_roundtrip():
    R = make_zmod(10)
    f = identity_hom(R)
    assert all(f.apply(x) == x for x in range(10))


@given(st.integers(min_value=2, max_value=20), st.integers(min_value=0, max_value=8))
@settings(max_examples=40, deadline=None)
def test_elem_pow_matches_iterated_multiplication(n, k):
    R = make_zmod(n)
    for x in range(n):
        expected = 1 % n
        for _ in range(k):
            expected = (expected * x) % n
        assert elem_pow(R.elem(x), k).index == expected


def test_element_wrappers_support_operators():
    R = make_zmod(5)
    a, b = R.elem(2), R.elem(4)
    assert (a + b).index == 1
    assert (a * b).index == 3
    assert (-a).index == 3
    assert (a - b).index == 3


def test_tables_are_read_only():
    R = make_zmod(6)
    with pytest.raises(ValueError):
        R.add_table[0, 0] = 1


def test_verify_ring_axioms_reports_violation():
    R = make_zmod(4)
    bad_add = R.add_table.copy()
    bad_add.flags.writeable = True
    bad_add[1, 2] = 0

    class Broken:
        order = 4
        name = "broken"
        zero_index = 0
        one_index = 1
        tables = (bad_add, R.mul_table, R.neg_table)

    assert verify_ring_axioms(Broken()) != []


def test_product_of_three_factors():
    R = make_product([make_zmod(2), make_zmod(2), make_zmod(2)])
    assert R.order == 8
    assert R.value(R.one_index) == (1, 1, 1)
    assert verify_ring_axioms(R) == []


def test_hom_table_as_numpy_array():
    A = make_zmod(2)
    B = make_product([make_zmod(2), make_zmod(2)])
    diag = make_hom(A, B, [B.resolve((a, a)) for a in range(2)])
    assert isinstance(diag.table, np.ndarray)
    assert diag.apply(1) == B.resolve((1, 1))
