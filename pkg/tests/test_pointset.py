from collections import Counter
from fractions import Fraction

import pytest

from symham.pointset import (
    PointSet,
    Shift,
    all_shifts,
    complement_shift,
    hammersley,
    reflected_symmetrized,
    symmetrized,
    zero_count,
)

F = Fraction


def as_fracs(P):
    return P.fractions()


def expand_definition(m, sigma):
    # literal reading: x = t_m/2 + ... + t_1/2^m, y = s_1/2 + ... + s_m/2^m
    out = []
    for n in range(2**m):
        t = [(n >> (m - j)) & 1 for j in range(1, m + 1)]
        s = [tj ^ sj for tj, sj in zip(t, sigma)]
        x = sum(F(t[m - i], 2**i) for i in range(1, m + 1))
        y = sum(F(s[j - 1], 2**j) for j in range(1, m + 1))
        out.append((x, y))
    return out


def test_small_examples():
    assert as_fracs(hammersley(1, "0")) == [(0, 0), (F(1, 2), F(1, 2))]
    assert as_fracs(hammersley(1, "1")) == [(0, F(1, 2)), (F(1, 2), 0)]
    assert set(as_fracs(hammersley(2, "00"))) == {
        (0, 0), (F(1, 4), F(1, 2)), (F(1, 2), F(1, 4)), (F(3, 4), F(3, 4))
    }


@pytest.mark.parametrize("m", range(1, 7))
def test_matches_literal_definition(m):
    for sigma in all_shifts(m):
        assert as_fracs(hammersley(m, sigma)) == expand_definition(m, sigma.bits)


def test_length_mismatch():
    with pytest.raises(ValueError):
        hammersley(3, "01")


def test_complement():
    assert complement_shift("000") == Shift((1, 1, 1))
    assert complement_shift("0101") == Shift.parse("1010")
    s = Shift.parse("0110100")
    assert s.complement().complement() == s


def test_zero_count():
    assert zero_count("01010101") == 4
    assert zero_count("00000000") == 8
    assert zero_count("111") == 0
    for s in all_shifts(5):
        assert s.zero_count() + s.complement().zero_count() == 5


def test_symmetrized_examples():
    assert set(as_fracs(symmetrized(1, "0"))) == {(0, 0), (F(1, 2), F(1, 2)), (0, F(1, 2)), (F(1, 2), 0)}
    for m in range(1, 7):
        for s in all_shifts(m):
            P = symmetrized(m, s)
            assert P.size == 2 ** (m + 1)
            assert P.as_set() == symmetrized(m, s.complement()).as_set()


@pytest.mark.parametrize("m", range(1, 9))
def test_davenport_reflection_identity(m):
    top = 2**m
    shifts = all_shifts(m) if m <= 6 else all_shifts(m)[::17]
    for s in shifts:
        H = hammersley(m, s)
        mirrored = {(a, top - 1 - b) for a, b in H.points}
        assert symmetrized(m, s).as_set() == H.as_set() | mirrored


@pytest.mark.parametrize("m", range(1, 8))
def test_coordinates_are_permutations_of_grid(m):
    for s in all_shifts(m)[:8]:
        H = hammersley(m, s)
        assert sorted(a for a, _ in H.points) == list(range(2**m))
        assert sorted(b for _, b in H.points) == list(range(2**m))
        assert not H.as_set() & hammersley(m, s.complement()).as_set()


def test_reflected_multiset():
    R = reflected_symmetrized(1, "0")
    assert Counter(as_fracs(R)) == Counter({(0, 0): 1, (F(1, 2), F(1, 2)): 2, (0, 1): 1})
    for m in range(1, 6):
        for s in all_shifts(m):
            R = reflected_symmetrized(m, s)
            H = hammersley(m, s)
            assert R.size == 2 ** (m + 1)
            assert Counter(a for a, _ in R.points) == Counter(2 * [a for a, _ in H.points])


def test_ordering_is_deterministic():
    assert hammersley(4, "0110").points == hammersley(4, Shift.parse("0110")).points
    assert [a for a, _ in hammersley(3, "000").points][:4] == [0, 4, 2, 6]


def test_pointset_validation():
    with pytest.raises(ValueError):
        PointSet(2, ((5, 0),))
