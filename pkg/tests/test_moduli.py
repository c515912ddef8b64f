"""Moduli set builders, dilation, square residue profiles, Farey lists."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sievelab import (derive_subset, enumerate_farey, explicit_moduli,
                      moduli_from_file, primes_up_to_set, square_class_count,
                      square_divisor_profile, squares_in_octave, squares_up_to)
from sievelab.errors import CapacityError, EmptyModuliWarning, SequenceFileError
from sievelab.moduli import build_moduli_set


def test_squares_up_to_layout():
    s = squares_up_to(5)
    assert s.elements.tolist() == [1, 4, 9, 16, 25]
    assert s.M == 0.0 and s.Q == 25.0
    assert s.kind == "squares_up_to" and s.param == 5.0
    assert len(s) == 5


def test_octave_contains_exactly_the_straddling_squares():
    assert squares_in_octave(50).elements.tolist() == [64, 81, 100]
    with pytest.warns(EmptyModuliWarning):
        assert squares_in_octave(4).elements.tolist() == []
    assert squares_in_octave(4.5).elements.tolist() == [9]
    assert squares_in_octave(5).elements.tolist() == [9]
    s = squares_in_octave(10**6)
    el = s.elements
    assert np.all(el > 10**6) and np.all(el <= 2 * 10**6)
    roots = np.sqrt(el.astype(float)).round().astype(np.int64)
    assert np.array_equal(roots * roots, el)


def test_primes_set():
    s = primes_up_to_set(12)
    assert s.elements.tolist() == [2, 3, 5, 7, 11]
    assert s.M == 0.0 and s.Q == 12.0


def test_explicit_set_defaults_interval_to_data():
    s = explicit_moduli([7, 3, 10])
    assert s.elements.tolist() == [3, 7, 10]
    assert s.M == 0.0 and s.Q == 10.0
    assert s.param is None


def test_empty_set_warns():
    with pytest.warns(EmptyModuliWarning):
        explicit_moduli([], span=4.0)
    with pytest.warns(EmptyModuliWarning):
        squares_in_octave(1.5)


def test_moduli_file_round_trip(tmp_path):
    p = tmp_path / "mods.txt"
    p.write_text("4\n9\n\n25\n", encoding="utf-8")
    s = moduli_from_file(str(p), M=2.0)
    assert s.elements.tolist() == [4, 9, 25]
    assert s.M == 2.0
    with pytest.raises(SequenceFileError):
        moduli_from_file(str(tmp_path / "absent.txt"))


def test_build_moduli_set_dispatch():
    assert build_moduli_set("squares_up_to", q=3).elements.tolist() == [1, 4, 9]
    with pytest.raises(ValueError):
        build_moduli_set("nope")


def test_derive_subset_divides_out_the_factor():
    s = explicit_moduli([4, 8, 9, 12], span=12.0)
    assert derive_subset(s, 4).elements.tolist() == [1, 2, 3]
    assert derive_subset(s, 3).elements.tolist() == [3, 4]
    assert derive_subset(s, 1).elements.tolist() == [4, 8, 9, 12]
    assert derive_subset(s, 5).elements.tolist() == []
    assert derive_subset(squares_up_to(3), 2).elements.tolist() == [2]


def test_square_divisor_profile_known_values():
    assert square_divisor_profile(1) == (1, 1)
    assert square_divisor_profile(2) == (2, 2)
    assert square_divisor_profile(4) == (2, 1)
    assert square_divisor_profile(8) == (4, 2)
    assert square_divisor_profile(12) == (6, 3)
    assert square_divisor_profile(49) == (7, 1)
    assert square_divisor_profile(18) == (6, 2)


@given(st.integers(1, 20000))
def test_square_divisor_profile_defining_property(t):
    f, g = square_divisor_profile(t)
    assert f >= 1 and g >= 1
    assert f * f == g * t
    # minimality: no proper divisor of f has t dividing its square
    for d in range(1, f):
        if f % d == 0:
            assert (d * d) % t != 0


def test_square_class_count_small_cases():
    # x^2 mod 4 hits 0 (x=0,2) and 1 (x=1,3)
    assert square_class_count(1, 4, 0) == 2
    assert square_class_count(1, 4, 1) == 2
    assert square_class_count(1, 4, 2) == 0
    assert square_class_count(1, 4, 3) == 0
    # with g=2 (t=2) the image is doubled squares
    assert square_class_count(2, 4, 2) == 2
    assert square_class_count(2, 4, 1) == 0


@given(st.integers(1, 200), st.integers(1, 60))
def test_square_class_count_totals_to_modulus(t, k):
    total = sum(square_class_count(t, k, l) for l in range(k))
    assert total == k


def test_dilated_squares_follow_the_profile():
    s = squares_up_to(30)  # squares <= 900
    for t in (1, 2, 3, 4, 8, 9, 12, 25):
        f, g = square_divisor_profile(t)
        got = derive_subset(s, t).elements.tolist()
        want = [m * m * g for m in range(1, 30 // f + 1)]
        assert got == want


def test_farey_list_is_sorted_and_complete():
    s = explicit_moduli([2, 3, 4])
    fl = enumerate_farey(s)
    vals = [(int(a), int(q)) for a, q in zip(fl.numerators, fl.denominators)]
    assert len(fl) == 1 + 2 + 2  # phi(2) + phi(3) + phi(4)
    assert (1, 4) in vals and (3, 4) in vals and (1, 2) in vals
    assert all(math.gcd(a, q) == 1 for a, q in vals)
    assert np.all(np.diff(fl.values) > 0)
    assert fl.values[-1] == 0.75


def test_modulus_one_contributes_the_full_turn():
    fl = enumerate_farey(explicit_moduli([1, 2]))
    assert fl.values.tolist() == [0.5, 1.0]


def test_farey_capacity_guard():
    s = squares_up_to(40)
    with pytest.raises(CapacityError):
        enumerate_farey(s, capacity=10)


def test_farey_values_match_fraction_data():
    s = explicit_moduli([5])
    fl = enumerate_farey(s)
    assert fl.values.tolist() == [1 / 5, 2 / 5, 3 / 5, 4 / 5]
    assert fl.denominators.tolist() == [5] * 4
    assert enumerate_farey(explicit_moduli([1])).values.tolist() == [1.0]
    assert enumerate_farey(explicit_moduli([4])).values.tolist() == [0.25, 0.75]
