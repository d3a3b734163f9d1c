"""Operator kernels, tensor-window action, word evaluation and invariants."""

import random
from fractions import Fraction

import pytest

from vbraid.algebra import RationalFunction
from vbraid.errors import ArityMismatch, SingularPoint
from vbraid.operators import (
    apply_generator,
    apply_word,
    crossing,
    crossing_inv,
    default_base,
    flat_crossing,
    flat_virtual_swap,
    invariant,
    parse_point,
    point_arity,
    symbolic_point,
    virtual_swap,
)
from vbraid.words import BraidWord, GroupKind, parse_word, rho, sigma

KINDS = [GroupKind.B, GroupKind.FB, GroupKind.VB, GroupKind.FVB]


def F(*args):
    return Fraction(*args)


def fr_tuple(*values):
    return tuple(Fraction(v) for v in values)


# --- kernels ------------------------------------------------------------------


def test_crossing_at_1221():
    assert crossing(fr_tuple(1, 2, 2, 1)) == (F(-2, 3), F(-3), F(-3), F(-2, 3))


def test_crossing_fixes_all_minus_one():
    p = fr_tuple(-1, -1, -1, -1)
    assert crossing(p) == p
    assert crossing_inv(p) == p
    assert virtual_swap(p) == p


def test_virtual_swap_permutes_pairs():
    assert virtual_swap(fr_tuple(1, 2, 3, 4)) == fr_tuple(3, 4, 1, 2)


def test_flat_crossing_at_12():
    assert flat_crossing(fr_tuple(1, 2)) == (F(-2, 5), F(-5))


def test_flat_virtual_swap():
    assert flat_virtual_swap(fr_tuple(-1, 7)) == fr_tuple(7, -1)


def test_crossing_singular_denominator():
    with pytest.raises(SingularPoint):
        crossing(fr_tuple(-2, 2, 2, 1))  # 1 + z1 + z4 = 0


def test_crossing_zero_coordinate_rejected():
    with pytest.raises(SingularPoint):
        crossing(fr_tuple(0, 2, 2, 1))
    with pytest.raises(SingularPoint):
        crossing(fr_tuple(1, 0, 2, 1))
    with pytest.raises(SingularPoint):
        flat_crossing(fr_tuple(0, 2))


def _zvars(n):
    return tuple(RationalFunction.variable(i) for i in range(1, n + 1))


def test_crossing_inverse_pair_symbolic():
    z = _zvars(4)
    assert crossing_inv(crossing(z)) == z
    assert crossing(crossing_inv(z)) == z


def test_involutions_symbolic():
    z = _zvars(4)
    assert virtual_swap(virtual_swap(z)) == z
    t = _zvars(2)
    assert flat_crossing(flat_crossing(t)) == t
    assert flat_virtual_swap(flat_virtual_swap(t)) == t


def test_crossing_on_reciprocal_slice_matches_flat_crossing():
    # on (z1, 1/z1, z3, 1/z3) the crossing preserves the reciprocal-pair shape
    z1, z3 = RationalFunction.variable(1), RationalFunction.variable(3)
    image = crossing((z1, 1 / z1, z3, 1 / z3))
    zeta1 = -(z1 * z3) / (1 + z3 + z1 * z3)
    zeta3 = -(1 + z3 + z1 * z3)
    assert image == (zeta1, 1 / zeta1, zeta3, 1 / zeta3)
    assert flat_crossing((z1, z3)) == (zeta1, zeta3)
    # and is an involution there
    assert crossing(image) == (z1, 1 / z1, z3, 1 / z3)


# --- window action --------------------------------------------------------------


def test_apply_generator_locality():
    point = fr_tuple(1, 2, 2, 1, 1, 2)
    image = apply_generator(GroupKind.VB, sigma(1), point)
    assert image[:4] == crossing(point[:4])
    assert image[4:] == point[4:]
    image2 = apply_generator(GroupKind.VB, sigma(2), point)
    assert image2[:2] == point[:2]
    assert image2[2:] == crossing(point[2:])


def test_apply_generator_flat_window():
    point = fr_tuple(1, 2, 2)
    image = apply_generator(GroupKind.FVB, rho(2), point)
    assert image == point  # swapping two equal coordinates


def test_apply_generator_arity_mismatch():
    with pytest.raises(ArityMismatch):
        apply_generator(GroupKind.VB, sigma(2), fr_tuple(1, 2, 2, 1))
    with pytest.raises(ArityMismatch):
        apply_word(parse_word("s1", 3, "vb"), fr_tuple(1, 2, 2, 1))


# --- word evaluation -------------------------------------------------------------


def test_three_letter_palindrome_vb2():
    w = parse_word("s1 r1 s1", 2, "vb")
    assert apply_word(w, parse_point("1,2,2,1")) == (F(-6, 5), F(-5, 3), F(-5, 3), F(-6, 5))


def test_fourteen_letter_vb2():
    w = parse_word("s1 s1 r1 s1' r1 s1' r1 s1 s1 r1 s1' r1 s1' r1", 2, "vb")
    assert apply_word(w, parse_point("1,2,2,1")) == (
        F(-44, 19),
        F(-19, 22),
        F(-19, 22),
        F(-44, 19),
    )


def test_four_letter_fvb3_pins_composition_order():
    # rightmost letter first; the opposite order gives a different vector
    w = parse_word("s2 r1 s1 r2", 3, "fvb")
    base = parse_point("1,2,2")
    assert apply_word(w, base) == (F(-5), F(4, 11), F(-11, 5))
    reversed_w = BraidWord(3, GroupKind.FVB, tuple(reversed(w.letters)))
    assert apply_word(reversed_w, base) != (F(-5), F(4, 11), F(-11, 5))


def test_four_letter_fb3():
    w = parse_word("s1 s2 s1 s2", 3, "fb")
    assert apply_word(w, parse_point("1,2,2")) == (F(-2, 5), F(-10, 7), F(7))


def test_empty_word_is_identity():
    base = parse_point("1,2,2,1")
    assert apply_word(parse_word("", 2, "vb"), base) == base


def test_singular_point_reports_letter_index():
    # first letter applied is the rightmost "s1"; base makes 1+z1+z4 = 0
    w = parse_word("r1 s1", 2, "vb")
    with pytest.raises(SingularPoint) as info:
        apply_word(w, (F(-2), F(2), F(2), F(1)))
    assert info.value.letter_index == 2


def _random_word(rng, kind, n, length):
    letters = []
    for _ in range(length):
        index = rng.randint(1, n - 1)
        if kind.is_virtual and rng.random() < 0.4:
            letters.append(rho(index))
        else:
            letters.append(sigma(index, rng.choice((1, -1))))
    return BraidWord(n, kind, tuple(letters))


def test_fixed_point_minus_one_200_words():
    rng = random.Random(2024)
    for count in range(200):
        kind = KINDS[count % 4]
        n = rng.randint(2, 5)
        w = _random_word(rng, kind, n, rng.randint(0, 30))
        base = tuple(Fraction(-1) for _ in range(point_arity(kind, n)))
        assert apply_word(w, base) == base


def test_symbolic_images_nonvanishing_short_words():
    # every coordinate of a symbolic image has nonzero numerator and denominator
    rng = random.Random(7)
    for count in range(24):
        kind = KINDS[count % 4]
        n = rng.randint(2, 3)
        w = _random_word(rng, kind, n, rng.randint(1, 6))
        image = apply_word(w, symbolic_point(kind, n))
        for coord in image:
            assert not coord.num.is_zero()
            assert not coord.den.is_zero()


# --- bases and invariants ----------------------------------------------------------


def test_default_bases():
    assert default_base(GroupKind.VB, 2) == fr_tuple(1, 2, 2, 1)
    assert default_base(GroupKind.VB, 3) == fr_tuple(1, 2, 2, 1, 1, 2)
    assert default_base(GroupKind.B, 4) == fr_tuple(1, 2, 2, 1, 1, 2, 2, 1)
    assert default_base(GroupKind.FVB, 3) == fr_tuple(1, 2, 2)
    assert default_base(GroupKind.FB, 5) == fr_tuple(1, 2, 2, 2, 2)


def test_invariant_uses_default_base():
    w = parse_word("s1 r1 s1", 2, "vb")
    result = invariant(w)
    assert result.base == default_base(GroupKind.VB, 2)
    assert result.base_retries == 0
    assert result.image == (F(-6, 5), F(-5, 3), F(-5, 3), F(-6, 5))


def test_invariant_retries_on_singular_base():
    w = parse_word("s1", 2, "vb")
    bad = (F(-2), F(2), F(2), F(1))
    result = invariant(w, base=bad, seed=0)
    assert result.base_retries >= 1
    assert result.base != bad
    # deterministic: same seed, same outcome
    again = invariant(w, base=bad, seed=0)
    assert again.base == result.base and again.image == result.image
    other = invariant(w, base=bad, seed=1)
    assert other.base_retries >= 1


def test_invariant_report_shape():
    w = parse_word("s2 r1 s1 r2", 3, "fvb")
    data = invariant(w).to_json()
    assert data == {
        "word": "s2 r1 s1 r2",
        "group": "fvb",
        "n": 3,
        "base": ["1", "2", "2"],
        "image": ["-5", "4/11", "-11/5"],
        "base_retries": 0,
    }


def test_invariant_empty_word_returns_base():
    w = parse_word("", 3, "vb")
    result = invariant(w)
    assert result.image == result.base


def test_collisions_are_not_errors():
    # distinct words can share an image at one base; that is one-sided evidence
    w1 = parse_word("r1", 2, "fvb")
    w2 = parse_word("", 2, "fvb")
    base = (F(2), F(2))
    assert apply_word(w1, base) == apply_word(w2, base)


# --- homomorphism spot-check -----------------------------------------------------


def _random_nonsingular_eval(word, rng, arity):
    for _ in range(50):
        point = tuple(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(arity))
        try:
            return point, apply_word(word, point)
        except SingularPoint:
            continue
    raise AssertionError("could not find a nonsingular random point")


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_relations_hold_at_random_points(kind, n):
    from vbraid.words import relation_table

    rng = random.Random(hash((kind.value, n)) & 0xFFFF)
    arity = point_arity(kind, n)
    for entry in relation_table(kind, n):
        for _ in range(25):
            point = tuple(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(arity))
            try:
                lhs = apply_word(entry.lhs, point)
                rhs = apply_word(entry.rhs, point)
            except SingularPoint:
                continue
            assert lhs == rhs, f"{entry.tag} fails at {point}"
