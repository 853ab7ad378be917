"""Parity functions, balance, mutual unbiasedness, quadruple classification."""

import pytest

from grac import (
    BooleanFn,
    FunctionSet,
    NotBalancedError,
    ParityLabel,
    QuadrupleClass,
    WidthMismatchError,
    WidthOutOfRangeError,
    WrongCardinalityError,
    are_mutually_unbiased,
    classify_quadruple,
    full_mubs,
    is_balanced,
    is_mubs,
    parity,
    parity_function,
)


def test_parity_basics():
    assert parity(0b100, 0b100) == 1
    assert parity(0b100, 0b011) == 0
    assert parity(0b111, 0b110) == 0
    assert parity(0b111, 0b100) == 1
    assert parity(0b101, 0b111) == 0


def test_boolean_fn_call_and_bits():
    f = parity_function(ParityLabel(3, 0b100))
    # f(x) = x1 (most significant bit), so inputs 4..7 map to 1
    assert f.bits() == "00001111"
    assert [f(x) for x in range(8)] == [0, 0, 0, 0, 1, 1, 1, 1]
    assert f.support(1) == (4, 5, 6, 7)
    assert f.support(0) == (0, 1, 2, 3)


def test_boolean_fn_roundtrip():
    f = BooleanFn.from_bits("01101001")
    assert f.n == 3
    assert f.bits() == "01101001"
    assert BooleanFn(f.n, f.table) == f


def test_boolean_fn_validation():
    with pytest.raises(ValueError):
        BooleanFn.from_bits("011")  # not a power of two
    with pytest.raises(ValueError):
        BooleanFn.from_bits("01x0")
    with pytest.raises(ValueError):
        BooleanFn(2, 1 << 16)  # table wider than 2^n bits
    with pytest.raises(WidthOutOfRangeError):
        BooleanFn(0, 0)
    with pytest.raises(WidthOutOfRangeError):
        BooleanFn(7, 0)


def test_parity_label_roundtrip_and_validation():
    lab = ParityLabel.from_bitstring("110")
    assert (lab.n, lab.r) == (3, 6)
    assert lab.bitstring() == "110"
    with pytest.raises(ValueError):
        ParityLabel(3, 0)  # zero label names the constant function
    with pytest.raises(ValueError):
        ParityLabel(3, 8)
    with pytest.raises(ValueError):
        ParityLabel.from_bitstring("10a")


def test_parity_functions_are_balanced():
    for n in (1, 2, 3, 4):
        for r in range(1, 1 << n):
            assert is_balanced(parity_function(ParityLabel(n, r)))
    assert not is_balanced(BooleanFn(2, 0b0001))
    assert not is_balanced(BooleanFn(2, 0b0000))


def test_distinct_parities_are_mutually_unbiased():
    fns = full_mubs(3).functions()
    for i in range(len(fns)):
        for j in range(len(fns)):
            expected = i != j
            assert are_mutually_unbiased(fns[i], fns[j]) == expected


def test_mutual_unbiasedness_rejects_bad_inputs():
    f3 = parity_function(ParityLabel(3, 1))
    f2 = parity_function(ParityLabel(2, 1))
    with pytest.raises(WidthMismatchError):
        are_mutually_unbiased(f3, f2)
    unbalanced = BooleanFn(3, 0b00000001)
    with pytest.raises(NotBalancedError):
        are_mutually_unbiased(unbalanced, f3)
    with pytest.raises(NotBalancedError):
        are_mutually_unbiased(f3, unbalanced)


def test_balanced_but_biased_pair():
    # f2 = x1 xor (x2 and x3) is balanced yet correlated with f1 = x1:
    # on the x1=0 half, f2 is 1 only at x=011.
    f1 = parity_function(ParityLabel(3, 0b100))
    table = 0
    for x in range(8):
        table |= (((x >> 2) & 1) ^ (((x >> 1) & 1) & (x & 1))) << x
    f2 = BooleanFn(3, table)
    assert is_balanced(f2)
    assert not are_mutually_unbiased(f1, f2)


def test_function_set_canonical_order_and_serialization():
    fset = FunctionSet.from_ints(3, (6, 1, 4))
    assert fset.ints == (1, 4, 6)
    assert fset.bitstrings() == "001,100,110"
    assert FunctionSet.from_bitstrings("110, 001,100") == fset
    assert len(fset) == 3
    assert [lab.r for lab in fset] == [1, 4, 6]


def test_function_set_validation():
    with pytest.raises(ValueError):
        FunctionSet.from_ints(3, (1, 1))
    with pytest.raises(ValueError):
        FunctionSet.from_ints(3, ())
    with pytest.raises(WidthMismatchError):
        FunctionSet(3, (ParityLabel(2, 1),))
    with pytest.raises(ValueError):
        FunctionSet.from_bitstrings("")


def test_full_mubs_and_is_mubs():
    for n in (1, 2, 3):
        fset = full_mubs(n)
        assert len(fset) == (1 << n) - 1
        assert is_mubs(fset)
    assert is_mubs(FunctionSet.from_ints(3, (1, 2, 4)))
    assert is_mubs(FunctionSet.from_ints(3, (7,)))


def test_classify_quadruple():
    assert classify_quadruple(FunctionSet.from_ints(3, (1, 2, 4, 7))) is QuadrupleClass.XOR_CLOSED
    assert classify_quadruple(FunctionSet.from_ints(3, (1, 2, 3, 4))) is QuadrupleClass.OPEN
    assert classify_quadruple(FunctionSet.from_ints(3, (3, 5, 6, 7))) is QuadrupleClass.OPEN
    assert classify_quadruple(FunctionSet.from_ints(3, (1, 2, 5, 6))) is QuadrupleClass.XOR_CLOSED
    with pytest.raises(WrongCardinalityError):
        classify_quadruple(full_mubs(3))


def test_quadruple_class_counts_at_width_3():
    from itertools import combinations

    counts = {QuadrupleClass.XOR_CLOSED: 0, QuadrupleClass.OPEN: 0}
    for combo in combinations(range(1, 8), 4):
        counts[classify_quadruple(FunctionSet.from_ints(3, combo))] += 1
    # xor-closed quadruples are the zero-avoiding cosets of the seven
    # 2-dimensional subspaces of F_2^3, one coset each
    assert counts[QuadrupleClass.XOR_CLOSED] == 7
    assert counts[QuadrupleClass.OPEN] == 28
