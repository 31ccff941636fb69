"""Smoke tests for the pylzpath bindings."""

import math

import pylzpath as lz


def test_cartan():
    s = lz.Session("A", 2)
    assert s.label == "A1(1)"
    assert s.cartan() == [[2, -2], [-2, 2]]
    assert s.fundamental(1) == [-1, 1]
    assert s.level(s.fundamental(1)) == 0
    assert s.reflect(1, [-1, 1]) == [1, -1]
    assert len(s.orbit([-1, 1])) == 2


def test_minuscule_sizes():
    for rank in (2, 3, 4):
        s = lz.Session("A", rank)
        for i in range(1, rank):
            weights = [0] * (rank - 1)
            weights[i - 1] = 1
            c = s.crystal(weights)
            assert c["size"] == math.comb(rank, i)
            assert c["simple"]


def test_anchor_values():
    s = lz.Session("A", 2)
    assert s.one_dim_sum([1, 1], [2]) == {0: 1}
    assert s.one_dim_sum([1, 1], [0]) == {-1: 1}
    assert s.kostka([1, 1], [0]) == {1: 1}
    assert s.d_ext([1, 1]) == 0
    assert lz.charge_kostka([2], [1, 1]) == {1: 1}
    assert lz.charge_kostka([1, 1], [1, 1]) == {0: 1}
    deg = s.degree_table([2])
    assert deg["[(-2,2)@1/2,(2,-2)@1/2]"] == -1
    assert deg["[(-2,2)@1/1]"] == 0


def test_verify():
    for rank, seq in ((2, [1, 1]), (3, [1, 2]), (3, [2, 2, 1])):
        rep = lz.Session("A", rank).verify(seq)
        assert rep["ok"], rep


def main():
    test_cartan()
    test_minuscule_sizes()
    test_anchor_values()
    test_verify()
    print("python smoke: all ok")


if __name__ == "__main__":
    main()
