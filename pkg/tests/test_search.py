"""Enumeration routines and the embedded expected tables."""

import pytest

from pcflab.ring import RingElem, norm
from pcflab.search import (
    TableName,
    int_range,
    ljunggren_oracle,
    load_table,
    reproduce_table,
    solve_e_curve,
    zw_box,
)

PI_SPLIT = RingElem(2, 1, 2)


@pytest.mark.parametrize("name", [t.value for t in TableName])
def test_reproduce_table_exact(name):
    rep = reproduce_table(name)
    assert rep.match, str(rep)
    assert not rep.missing and not rep.extra


def test_reproduce_table_unknown_name():
    with pytest.raises(ValueError):
        reproduce_table("no_such_table")


def test_load_table_nonempty():
    rows = load_table(TableName.Z_03)
    assert rows
    assert load_table("z22_03")
    with pytest.raises(ValueError):
        load_table("bogus")


def test_empty_table_is_empty():
    assert load_table(TableName.Z22_21_empty) == ()


def test_ljunggren_pairs():
    known = [
        (-239, -13), (-239, 13), (-1, -1), (-1, 1),
        (1, -1), (1, 1), (239, -13), (239, 13),
    ]
    assert ljunggren_oracle(1000) == known
    assert ljunggren_oracle(13) == known
    assert ljunggren_oracle(12) == known[2:6]


def test_search_axes():
    assert int_range(3) == [-3, -2, -1, 0, 1, 2, 3]
    box = zw_box(2)
    assert RingElem(0, 0, 2) in box
    assert RingElem(2, -2, 2) in box
    assert len(box) == len(set(box)) == 25


def test_e_curve_split_prime():
    pts = solve_e_curve(PI_SPLIT, kmax=20)
    assert len(pts) == 21
    assert pts == solve_e_curve(PI_SPLIT, kmax=20)
    negs = [(a, b) for a, b in pts if norm(b) == -1]
    assert len(negs) == 8
    assert {a for a, _ in negs} == {
        RingElem(1), RingElem(-1),
        RingElem(1, -1, 2), RingElem(-1, 1, 2),
        RingElem(13, 9, 2), RingElem(-13, -9, 2),
        RingElem(31, -22, 2), RingElem(-31, 22, 2),
    }


def test_e_curve_filters_are_sound():
    lazy = solve_e_curve(PI_SPLIT, kmax=12, use_filters=False)
    assert lazy == solve_e_curve(PI_SPLIT, kmax=12, use_filters=True)


def test_e_curve_kmax_monotone():
    small = set(solve_e_curve(PI_SPLIT, kmax=5))
    big = set(solve_e_curve(PI_SPLIT, kmax=20))
    assert small <= big


def test_e_curve_rational_prime():
    pts = solve_e_curve(2, kmax=20)
    assert set(pts) == {
        (RingElem(1), RingElem(1)),
        (RingElem(-1), RingElem(1)),
        (RingElem(1), RingElem(-2)),
        (RingElem(-1), RingElem(-2)),
        (RingElem(0), RingElem(2)),
    }
