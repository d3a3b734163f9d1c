"""Birational operators assigned to braid generators, and word evaluation.

A point is a plain tuple of field values: length 2n for the classical and
virtual kinds (coordinates z1..z_{2n}, two per strand), length n for the flat
kinds (coordinates t1..tn).  Generators act locally on a window of the point:

* sigma_i in B/VB   -> ``crossing`` (or its inverse) on (z_{2i-1},..,z_{2i+2})
* rho_i   in VB     -> ``virtual_swap``: swap the two coordinate pairs
* sigma_i in FB/FVB -> ``flat_crossing`` on (t_i, t_{i+1})
* rho_i   in FVB    -> ``flat_virtual_swap``: swap the two coordinates

A word maps to the composition of its letters' operators with the rightmost
letter applied first, so concatenation of words corresponds to composition of
maps.  All operators fix the all-(-1) point, which keeps generic evaluations
away from zeros and poles; specific rational base points can still land on a
pole, which surfaces as SingularPoint.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import (
    FieldValue,
    Fraction,
    RationalFunction,
    format_field_value,
    is_zero_value,
    parse_rational,
)
from .errors import ArityMismatch, SingularPoint
from .words import BraidWord, Generator, GroupKind

__all__ = [
    "InvariantResult",
    "Point",
    "apply_generator",
    "apply_word",
    "crossing",
    "crossing_inv",
    "default_base",
    "flat_crossing",
    "flat_virtual_swap",
    "invariant",
    "parse_point",
    "format_point",
    "point_arity",
    "symbolic_point",
    "variable_prefix",
    "virtual_swap",
]

Point = tuple[FieldValue, ...]


def point_arity(group: GroupKind, strands: int) -> int:
    return strands if group.is_flat else 2 * strands


def variable_prefix(group: GroupKind) -> str:
    return "t" if group.is_flat else "z"


def default_base(group: GroupKind, strands: int) -> Point:
    """The stock rational base point used when none is supplied.

    Classical/virtual kinds: (1,2), (2,1), (1,2), ... pairwise per strand.
    Flat kinds: (1, 2, 2, ..., 2).
    """
    if group.is_flat:
        return (Fraction(1),) + (Fraction(2),) * (strands - 1)
    coords: list[Fraction] = []
    for k in range(1, strands + 1):
        coords += [Fraction(1), Fraction(2)] if k % 2 else [Fraction(2), Fraction(1)]
    return tuple(coords)


def symbolic_point(group: GroupKind, strands: int) -> Point:
    return tuple(RationalFunction.variable(i) for i in range(1, point_arity(group, strands) + 1))


def parse_point(text: str) -> Point:
    """Comma-separated exact rationals, e.g. ``1,2,2,1``."""
    return tuple(parse_rational(part) for part in text.split(","))


def format_point(point: Point, prefix: str = "z") -> list[str]:
    return [format_field_value(c, prefix) for c in point]


def _check_window_nonzero(values: tuple[FieldValue, ...]) -> None:
    for v in values:
        if is_zero_value(v):
            raise SingularPoint("zero coordinate entering a birational kernel")


def crossing(p: tuple) -> tuple:
    """Positive-crossing kernel on a 4-window:

    (z1,z2,z3,z4) -> (-z1*z3*z4/d, -d/z1, -d/z4, -z1*z2*z4/d) with d = 1+z1+z4.
    """
    _check_window_nonzero(p)
    z1, z2, z3, z4 = p
    try:
        d = 1 + z1 + z4
        return (-(z1 * z3 * z4) / d, -(d / z1), -(d / z4), -(z1 * z2 * z4) / d)
    except SingularPoint:
        raise
    except ZeroDivisionError as exc:
        raise SingularPoint(str(exc)) from exc


def crossing_inv(p: tuple) -> tuple:
    """Inverse crossing kernel:

    (z1,z2,z3,z4) -> (-z3/e, -e*z4, -z1*e, -z2/e) with e = z2+z3+z2*z3.
    """
    _check_window_nonzero(p)
    z1, z2, z3, z4 = p
    try:
        e = z2 + z3 + z2 * z3
        return (-(z3 / e), -(e * z4), -(z1 * e), -(z2 / e))
    except SingularPoint:
        raise
    except ZeroDivisionError as exc:
        raise SingularPoint(str(exc)) from exc


def virtual_swap(p: tuple) -> tuple:
    """(z1,z2,z3,z4) -> (z3,z4,z1,z2): swap the two coordinate pairs."""
    z1, z2, z3, z4 = p
    return (z3, z4, z1, z2)


def flat_crossing(p: tuple) -> tuple:
    """Involutive flat-crossing kernel on a 2-window:

    (t1,t2) -> (-t1*t2/d, -d) with d = 1+t2+t1*t2.
    """
    _check_window_nonzero(p)
    t1, t2 = p
    try:
        d = 1 + t2 + t1 * t2
        return (-(t1 * t2) / d, -d)
    except SingularPoint:
        raise
    except ZeroDivisionError as exc:
        raise SingularPoint(str(exc)) from exc


def flat_virtual_swap(p: tuple) -> tuple:
    t1, t2 = p
    return (t2, t1)


def _window(group: GroupKind, gen: Generator, arity: int) -> tuple[int, int]:
    if group.is_flat:
        lo, hi = gen.index - 1, gen.index + 1
    else:
        lo, hi = 2 * gen.index - 2, 2 * gen.index + 2
    if hi > arity:
        raise ArityMismatch(
            f"generator {gen.format()} needs arity >= {hi}, point has {arity}"
        )
    return lo, hi


def _kernel(group: GroupKind, gen: Generator):
    if group.is_flat:
        return flat_virtual_swap if gen.virtual else flat_crossing
    if gen.virtual:
        return virtual_swap
    return crossing if gen.power > 0 else crossing_inv


def apply_generator(group: GroupKind, gen: Generator, point: Point) -> Point:
    """Apply one generator's operator; coordinates outside the window are
    returned unchanged."""
    lo, hi = _window(group, gen, len(point))
    image = _kernel(group, gen)(point[lo:hi])
    return point[:lo] + image + point[hi:]


def apply_word(word: BraidWord, point: Point) -> Point:
    """Apply the operator of a whole word, rightmost letter first.

    SingularPoint raised mid-word is annotated with the 1-based position of
    the offending letter (counted from the left).
    """
    if len(point) != point_arity(word.group, word.strands):
        raise ArityMismatch(
            f"word over {word.strands} strands in {word.group.value} needs arity "
            f"{point_arity(word.group, word.strands)}, point has {len(point)}"
        )
    for pos in range(len(word.letters) - 1, -1, -1):
        try:
            point = apply_generator(word.group, word.letters[pos], point)
        except SingularPoint as exc:
            if exc.letter_index is None:
                exc.letter_index = pos + 1
            raise
    return point


@dataclass(frozen=True)
class InvariantResult:
    word: BraidWord
    base: Point
    image: Point
    base_retries: int

    def to_json(self) -> dict:
        prefix = variable_prefix(self.word.group)
        return {
            "word": self.word.format(),
            "group": self.word.group.value.lower(),
            "n": self.word.strands,
            "base": format_point(self.base, prefix),
            "image": format_point(self.image, prefix),
            "base_retries": self.base_retries,
        }


def _random_base(rng: random.Random, arity: int) -> Point:
    return tuple(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(arity))


def invariant(
    word: BraidWord,
    base: Point | None = None,
    seed: int = 0,
    max_base_retries: int = 16,
) -> InvariantResult:
    """Image of a base point under the word's operator.

    Unequal images certify unequal words; equal images prove nothing.  If the
    requested (or default) base hits a pole, up to ``max_base_retries`` fresh
    small positive rational bases are drawn from a deterministic stream seeded
    by ``seed``, and the base actually used is reported.
    """
    arity = point_arity(word.group, word.strands)
    candidate = base if base is not None else default_base(word.group, word.strands)
    rng = random.Random(seed)
    last: SingularPoint | None = None
    for retries in range(max_base_retries + 1):
        try:
            return InvariantResult(word, candidate, apply_word(word, candidate), retries)
        except SingularPoint as exc:
            last = exc
            candidate = _random_base(rng, arity)
    raise SingularPoint(
        f"no nonsingular base found after {max_base_retries} retries: {last}"
    ) from last
