"""Symbolic verification of group relations and refutation of the forbidden
relations.

Equality of two words is equality of their birational maps: both words are
applied to a tuple of fresh independent variables and the images are compared
coordinatewise with exact cross-multiplication equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Fraction, Polynomial, RationalFunction, parse_expression
from .errors import LengthLimitExceeded
from .operators import Point, apply_word, point_arity, symbolic_point, variable_prefix
from .words import BraidWord, GroupKind, RelationEntry, relation_table, rho, sigma

__all__ = [
    "DisplayCheck",
    "RelationVerdict",
    "SliceCheck",
    "Witness",
    "check_factorization",
    "check_forbidden",
    "compare_operators",
    "display_report",
    "forbidden_words",
    "verify_presentation",
    "verify_relation",
]

DEFAULT_MAX_SYMBOLIC_N = 6
DEFAULT_MAX_SYMBOLIC_LEN = 12


@dataclass(frozen=True)
class Witness:
    """First coordinate (1-based) where two images differ, with both values
    rendered as expression strings."""

    coordinate: int
    lhs: str
    rhs: str


@dataclass(frozen=True)
class SliceCheck:
    variable: str
    value: Fraction
    equal: bool


@dataclass
class RelationVerdict:
    tag: str
    holds: bool
    witness: Witness | None = None
    slices: list[SliceCheck] | None = None

    def to_json(self) -> dict:
        out: dict = {"tag": self.tag, "holds": self.holds}
        if self.witness is not None:
            out["witness"] = {
                "coordinate": self.witness.coordinate,
                "lhs": self.witness.lhs,
                "rhs": self.witness.rhs,
            }
        if self.slices is not None:
            out["slices"] = [
                {"var": s.variable, "value": str(s.value), "equal": s.equal} for s in self.slices
            ]
        return out


def _compare_images(lhs_image: Point, rhs_image: Point, prefix: str) -> Witness | None:
    for idx, (a, b) in enumerate(zip(lhs_image, rhs_image), start=1):
        if a != b:
            def fmt(v):
                return v.format(prefix) if isinstance(v, RationalFunction) else str(v)

            return Witness(idx, fmt(a), fmt(b))
    return None


def verify_relation(
    group: GroupKind,
    strands: int,
    lhs: BraidWord,
    rhs: BraidWord,
    tag: str = "relation",
    max_symbolic_n: int = DEFAULT_MAX_SYMBOLIC_N,
) -> RelationVerdict:
    """Apply both words to a fresh symbolic point and compare coordinatewise."""
    if strands > max_symbolic_n:
        raise LengthLimitExceeded(
            f"strand count {strands} above the symbolic cost guard {max_symbolic_n}"
        )
    point = symbolic_point(group, strands)
    witness = _compare_images(
        apply_word(lhs, point), apply_word(rhs, point), variable_prefix(group)
    )
    return RelationVerdict(tag, witness is None, witness)


def verify_presentation(
    group: GroupKind | str,
    strands: int,
    max_symbolic_n: int = DEFAULT_MAX_SYMBOLIC_N,
) -> list[RelationVerdict]:
    """Symbolically check every defining relation of the given kind."""
    group = GroupKind.parse(group) if isinstance(group, str) else group
    return [
        verify_relation(group, strands, entry.lhs, entry.rhs, entry.tag, max_symbolic_n)
        for entry in relation_table(group, strands)
    ]


def forbidden_words(strands: int, i: int, variant: str) -> tuple[BraidWord, BraidWord]:
    if not 1 <= i <= strands - 2:
        raise IndexError(f"forbidden-relation index i={i} out of range 1..{strands - 2}")
    if variant == "a":
        lhs = [rho(i), sigma(i + 1), sigma(i)]
        rhs = [sigma(i + 1), sigma(i), rho(i + 1)]
    elif variant == "b":
        lhs = [rho(i + 1), sigma(i), sigma(i + 1)]
        rhs = [sigma(i), sigma(i + 1), rho(i)]
    else:
        raise ValueError(f"variant must be 'a' or 'b', got {variant!r}")
    return (
        BraidWord(strands, GroupKind.VB, tuple(lhs)),
        BraidWord(strands, GroupKind.VB, tuple(rhs)),
    )


def _slice_variables(i: int, variant: str) -> tuple[int, int, int]:
    if variant == "a":
        return (2 * i - 1, 2 * i + 2, 2 * i + 4)
    return (2 * i - 1, 2 * i + 1, 2 * i + 4)


def check_forbidden(strands: int, i: int, variant: str) -> RelationVerdict:
    """Refute one forbidden relation generically and confirm it on its slices.

    Generic part: the two sides applied to independent variables must differ
    in at least one coordinate (``holds`` is False and a witness is recorded).
    Slice part: pinning any single coordinate z_j to -1, for j in the
    variant's three slice positions, must make the two images equal.  The
    verdict carries the generic witness plus one SliceCheck per slice.
    """
    lhs, rhs = forbidden_words(strands, i, variant)
    generic = verify_relation(GroupKind.VB, strands, lhs, rhs, tag=f"forbidden-{variant}")
    slices = []
    arity = point_arity(GroupKind.VB, strands)
    for j in _slice_variables(i, variant):
        point = tuple(
            RationalFunction.constant(-1) if idx == j else RationalFunction.variable(idx)
            for idx in range(1, arity + 1)
        )
        equal = _compare_images(apply_word(lhs, point), apply_word(rhs, point), "z") is None
        slices.append(SliceCheck(f"z{j}", Fraction(-1), equal))
    return RelationVerdict(generic.tag, generic.holds, generic.witness, slices)


def check_factorization(variant: str) -> bool:
    """Polynomial identities behind the forbidden-relation slice analysis:

    variant a: (1+z1+z4)(1+z1+z6) - z1(1+z1-z4*z6) = (1+z1)(1+z4)(1+z6)
    variant b: (1+z3+z6)(1+z1+z6) - z6(1-z1*z3+z6) = (1+z1)(1+z3)(1+z6)
    """
    z1 = Polynomial.variable(1)
    z3 = Polynomial.variable(3)
    z4 = Polynomial.variable(4)
    z6 = Polynomial.variable(6)
    one = Polynomial.one()
    if variant == "a":
        lhs = (one + z1 + z4) * (one + z1 + z6) - z1 * (one + z1 - z4 * z6)
        rhs = (one + z1) * (one + z4) * (one + z6)
    elif variant == "b":
        lhs = (one + z3 + z6) * (one + z1 + z6) - z6 * (one - z1 * z3 + z6)
        rhs = (one + z1) * (one + z3) * (one + z6)
    else:
        raise ValueError(f"variant must be 'a' or 'b', got {variant!r}")
    return lhs == rhs


def compare_operators(
    word1: BraidWord,
    word2: BraidWord,
    max_total_length: int = DEFAULT_MAX_SYMBOLIC_LEN,
    max_symbolic_n: int = DEFAULT_MAX_SYMBOLIC_N,
) -> RelationVerdict:
    """Decide whether two words induce the same birational map.

    This is a complete equality test in the operator group (unlike the
    one-sided numeric invariant), guarded by a combined-length limit because
    degrees grow quickly under composition.
    """
    if (word1.strands, word1.group) != (word2.strands, word2.group):
        raise ValueError("compared words must share strand count and group kind")
    if len(word1) + len(word2) > max_total_length:
        raise LengthLimitExceeded(
            f"combined length {len(word1) + len(word2)} above the cost guard {max_total_length}"
        )
    return verify_relation(
        word1.group, word1.strands, word1, word2, tag="operator-equality", max_symbolic_n=max_symbolic_n
    )


# --- reference displays -----------------------------------------------------
#
# Expected images for several composite operators on three strands,
# transcribed verbatim from a reference table of worked displays.  Each row is
# re-derived here by direct composition; recomputation is authoritative, and a
# mismatching row flags a transcription slip in the reference text, not an
# implementation bug.  Tests pin the exact agreement pattern.


@dataclass(frozen=True)
class DisplayCheck:
    name: str
    coordinates_match: tuple[bool, ...]

    @property
    def matches(self) -> bool:
        return all(self.coordinates_match)


_DISPLAYS: list[tuple[str, str, str, int | None, tuple[str, ...]]] = [
    (
        "braid-composite-lhs",
        "s1 s2 s1",
        "s1 s2 s1",
        None,
        (
            "z1*z3*z5*z6/(1 - z1*z3 + z6)",
            "(1 - z1*z3 + z6)/(z1*z3)",
            "z4*(1 - z1*z3 + z6)/(1 + z1 - z4*z6)",
            "z3*(1 + z1 - z4*z6)/(1 - z1*z3 + z6)",
            "(1 + z1 - z4*z6)/(z4*z6)",
            "z1*z2*z4*z6/(1 + z1 - z4*z6)",
        ),
    ),
    (
        "braid-composite-rhs",
        "s2 s1 s2",
        "s2 s1 s2",
        None,
        (
            "z1*z3*z5*z6/(1 - z1*z3 + z6)",
            "(1 - z1*z3 + z6)/(z1*z3)",
            "z4*(1 - z1*z3 + z6)/(1 + z1 - z4*z6)",
            "z3*(1 + z1 - z4*z6)/(1 - z1*z3 + z6)",
            "(1 + z1 - z4*z6)/(z4*z6)",
            "z1*z2*z4*z6/(1 + z1 - z4*z6)",
        ),
    ),
    (
        "mixed-composite",
        "r1 r2 s1",
        "s2 r1 r2",
        None,
        (
            "z5",
            "z6",
            "-z1*z3*z4/(1 + z1 + z4)",
            "-(1 + z1 + z4)/z1",
            "-(1 + z1 + z4)/z4",
            "-z1*z2*z4/(1 + z1 + z4)",
        ),
    ),
    (
        "forbidden-a-lhs",
        "r1 s2 s1",
        "r1 s2 s1",
        None,
        (
            "-(1 + z1 + z4)*z5*z6/(1 + z1 - z4*z6)",
            "-(1 + z1 - z4*z6)/(1 + z1 + z4)",
            "-z1*z3*z4/(1 + z1 + z4)",
            "-(1 + z1 + z4)/z1",
            "(1 + z1 - z4*z6)/(z4*z6)",
            "z1*z2*z4*z6/(1 + z1 - z4*z6)",
        ),
    ),
    (
        "forbidden-a-rhs",
        "s2 s1 r2",
        "s2 s1 r2",
        None,
        (
            "-z1*z5*z6/(1 + z1 + z6)",
            "-(1 + z1 + z6)/z1",
            "-(1 + z1 + z6)*z3*z4/(1 + z1 - z4*z6)",
            "-(1 + z1 - z6*z4)/(1 + z1 + z6)",
            "(1 + z1 - z6*z4)/(z6*z4)",
            "z1*z2*z6*z4/(1 + z1 - z6*z4)",
        ),
    ),
    (
        "forbidden-a-slice-z1",
        "r1 s2 s1",
        "s2 s1 r2",
        1,
        ("z5", "z6", "z3", "z4", "-1", "z2"),
    ),
    (
        "forbidden-a-slice-z4",
        "r1 s2 s1",
        "s2 s1 r2",
        4,
        (
            "-z1*z5*z6/(1 + z1 + z6)",
            "-(1 + z1 + z6)/z1",
            "z3",
            "-1",
            "-(1 + z2 + z6)/z6",
            "-z1*z2*z6/(1 + z1 + z6)",
        ),
    ),
    (
        "forbidden-a-slice-z6",
        "r1 s2 s1",
        "s2 s1 r2",
        6,
        (
            "z5",
            "-1",
            "-z1*z3*z4/(1 + z1 + z4)",
            "-(1 + z2 + z4)/z1",
            "-(1 + z1 + z4)/z4",
            "-z1*z2*z4/(1 + z1 + z4)",
        ),
    ),
    (
        "forbidden-b-lhs",
        "r2 s1 s2",
        "r2 s1 s2",
        None,
        (
            "z1*z3*z5*z6/(1 - z1*z3 + z6)",
            "(1 - z1*z3 + z6)/(z1*z3)",
            "-(1 + z3 + z6)/z6",
            "-z3*z4*z6/(1 + z3 + z6)",
            "-(1 - z1*z3 + z6)/(1 + z3 + z6)",
            "-z1*z2*(1 + z3 + z6)/(1 - z1*z3 + z6)",
        ),
    ),
    (
        "forbidden-b-rhs",
        "s1 s2 r1",
        "s1 s2 r1",
        None,
        (
            "z3*z1*z5*z6/(1 - z3*z1 + z6)",
            "(1 - z3*z1 + z6)/(z3*z1)",
            "-(1 - z1*z3 + z6)/(1 + z1 + z6)",
            "-z3*z4*(1 + z1 + z6)/(1 - z3*z1 + z6)",
            "-(1 + z1 + z6)/z6",
            "-z1*z2*z6/(1 + z1 + z6)",
        ),
    ),
    (
        "forbidden-b-slice-z1",
        "r2 s1 s2",
        "s1 s2 r1",
        1,
        (
            "-z3*z5*z6/(1 + z3 + z6)",
            "-(1 + z3 + z6)/z3",
            "-(1 + z3 + z6)/z6",
            "-z3*z4*z6/(1 + z3 + z6)",
            "-1",
            "z2",
        ),
    ),
    (
        "forbidden-b-slice-z3",
        "r2 s1 s2",
        "s1 s2 r1",
        3,
        (
            "-z1*z5*z6/(1 + z3 + z6)",
            "-(1 + z1 + z6)/z1",
            "-1",
            "z4",
            "-(1 + z1 + z6)/z6",
            "-z1*z2*z6/(1 + z1 + z6)",
        ),
    ),
    (
        "forbidden-b-slice-z6",
        "r2 s1 s2",
        "s1 s2 r1",
        6,
        ("z5", "-1", "z3", "z4", "z1", "z2"),
    ),
]


def display_report() -> list[DisplayCheck]:
    """Recompute every reference display and report coordinatewise agreement.

    For slice rows both words are evaluated on the sliced point and both
    images must match the reference tuple.
    """
    from .words import parse_word

    checks = []
    for name, text1, text2, slice_var, expected_texts in _DISPLAYS:
        expected = [parse_expression(t) for t in expected_texts]
        point = tuple(
            RationalFunction.constant(-1)
            if slice_var is not None and idx == slice_var
            else RationalFunction.variable(idx)
            for idx in range(1, 7)
        )
        words = {text1, text2}
        images = [apply_word(parse_word(t, 3, GroupKind.VB), point) for t in sorted(words)]
        per_coord = tuple(
            all(img[k] == expected[k] for img in images) for k in range(6)
        )
        checks.append(DisplayCheck(name, per_coord))
    return checks
