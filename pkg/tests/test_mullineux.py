import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import pblock as pb
from pblock.blocks import BeadNotation
from pblock.mullineux import p_rim, rim_hook_leg_sum, rim_path, strip_p_rim
from conftest import all_partitions_up_to, partitions


def N3(*runners):
    return BeadNotation(3, runners)


# ---------------------------------------------------------------------------
# p-rim stripping
# ---------------------------------------------------------------------------

def test_rim_path_order():
    assert rim_path((8, 6, 1)) == [
        (1, 8), (1, 7), (1, 6), (2, 6), (2, 5), (2, 4), (2, 3), (2, 2), (2, 1), (3, 1)]


def test_p_rim_skips_to_next_row_after_full_segment():
    # segment of five ends in row 2; the rest of row 2 is skipped
    assert p_rim((8, 6, 1), 5) == [(1, 8), (1, 7), (1, 6), (2, 6), (2, 5), (3, 1)]
    assert strip_p_rim((8, 6, 1), 5) == ((5, 4), 6, 3)
    assert strip_p_rim((5, 5, 5), 5) == ((4, 4, 2), 5, 3)


def test_symbol_worked_examples():
    for p in (5, 7, 11):
        la = pb.from_3p(N3(p, p - 1, p - 3), p)
        symbol = pb.mullineux_symbol(la, p)
        assert symbol.a == (p + 1, p, p - 1)
        assert symbol.r == (4, 3, 3)
    assert pb.mullineux_symbol((8, 6, 1), 5) == pb.MullineuxSymbol((6, 5, 4), (3, 2, 2))
    assert pb.mullineux_symbol((1,), 7) == pb.MullineuxSymbol((1,), (1,))


def test_symbol_rejects_singular():
    with pytest.raises(ValueError):
        pb.mullineux_symbol((1, 1, 1, 1, 1), 5)


def test_symbol_rows_weakly_decreasing_and_dominating():
    for la in all_partitions_up_to(16):
        if not pb.is_p_regular(la, 5):
            continue
        symbol = pb.mullineux_symbol(la, 5)
        assert all(a >= b for a, b in zip(symbol.a, symbol.a[1:]))
        assert all(a >= r for a, r in zip(symbol.a, symbol.r))


def test_symbol_reconstruction_exhaustive():
    for p in (5, 7, 11):
        for la in all_partitions_up_to(16):
            if pb.is_p_regular(la, p):
                assert pb.partition_from_symbol(pb.mullineux_symbol(la, p), p) == la


@given(partitions(max_n=32), st.sampled_from([3, 5, 7]))
@settings(max_examples=150)
def test_symbol_reconstruction(la, p):
    if pb.is_p_regular(la, p):
        assert pb.partition_from_symbol(pb.mullineux_symbol(la, p), p) == la


# ---------------------------------------------------------------------------
# the involution
# ---------------------------------------------------------------------------

def test_mullineux_worked_examples():
    assert pb.mullineux((5, 4, 3, 2, 1), 5) == (7, 5, 2, 1)
    assert pb.mullineux(pb.from_3p(N3(5, 4, 2), 5), 5) == pb.from_3p(N3(3, 5), 5)
    for p in (7, 11):
        assert pb.mullineux(pb.from_3p(N3(p, p - 1, p - 3), p), p) == pb.from_3p(N3(6, 5, 3), p)


def test_mullineux_rejects_singular():
    with pytest.raises(ValueError):
        pb.mullineux((2, 2, 2, 2, 2), 5)


def test_mullineux_involution_small_exhaustive():
    for p in (5, 7):
        for la in all_partitions_up_to(14):
            if pb.is_p_regular(la, p):
                image = pb.mullineux(la, p)
                assert sum(image) == sum(la)
                assert pb.is_p_regular(image, p)
                assert pb.mullineux(image, p) == la


def test_second_layer_maps_to_third_layer():
    second = {(8, 6, 1), (6, 6, 1, 1, 1), (6, 4, 2, 2, 1),
              (5, 5, 5), (5, 5, 3, 1, 1), (5, 4, 4, 2)}
    third = {(5, 5, 4, 1), (7, 4, 2, 2), (6, 5, 2, 1, 1),
             (9, 6), (8, 5, 2), (7, 6, 1, 1)}
    assert {pb.mullineux(la, 5) for la in second} == third


# ---------------------------------------------------------------------------
# parity
# ---------------------------------------------------------------------------

def test_parity_examples():
    assert pb.parity((3, 1), 5) == 1  # a 5-core
    assert pb.parity((2, 2, 1, 1), 7) == 1  # a 7-core by size
    assert pb.parity((6, 4, 2), 5) == -1
    assert pb.parity((), 5) == 1


def test_parity_conjugation_invariant_small():
    for p in (5, 7):
        for la in all_partitions_up_to(16):
            assert pb.parity(la, p) == pb.parity(pb.conjugate(la), p)


def test_parity_removal_order_independent_small():
    rng = random.Random(431)
    for la in all_partitions_up_to(14):
        base = rim_hook_leg_sum(la, 5) % 2
        for _ in range(20):
            assert rim_hook_leg_sum(la, 5, rng) % 2 == base


def test_parity_flips_in_weight_three_block():
    for p in (5, 7):
        for la in pb.enumerate_block(pb.principal_block(p)):
            if pb.is_p_regular(la, p):
                assert pb.parity(pb.mullineux(la, p), p) != pb.parity(la, p)


# ---------------------------------------------------------------------------
# good-node compatibility
# ---------------------------------------------------------------------------

def test_good_node_compatibility_trivial():
    assert pb.mullineux((1,), 5) == (1,)
    assert pb.check_good_node_compatibility((1,), 5)


def test_good_node_residues_negate_for_staircase():
    la, image = (5, 4, 3, 2, 1), (7, 5, 2, 1)
    res_la = {pb.residue(node, 5) for node in pb.good_nodes(la, 5)}
    res_image = {pb.residue(node, 5) for node in pb.good_nodes(image, 5)}
    assert {(-r) % 5 for r in res_la} <= res_image
    assert pb.check_good_node_compatibility(la, 5)


def test_good_node_compatibility_on_block():
    for p in (5, 7):
        for la in pb.enumerate_block(pb.principal_block(p)):
            if pb.is_p_regular(la, p):
                assert pb.check_good_node_compatibility(la, p)
