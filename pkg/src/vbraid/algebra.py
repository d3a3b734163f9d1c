"""Exact scalar and symbolic arithmetic.

Scalars are ``fractions.Fraction`` (arbitrary precision, always reduced,
positive denominator).  Symbolic values are quotients of sparse multivariate
polynomials with Fraction coefficients; variables are 1-based integer
indices, rendered as ``x1, x2, ...`` (the prefix letter is cosmetic and
configurable at formatting time).

Rational functions are deliberately kept as *unreduced* numerator/denominator
pairs: no polynomial gcd is ever computed.  Normalization is limited to
clearing integer content jointly from the pair and making the denominator's
leading coefficient (graded-lexicographic order, lower variable index more
significant) positive.  Equality is decided by cross-multiplication, which is
exact.  Degrees therefore grow under long compositions; this is a documented
cost, acceptable because every identity checked here involves words of
bounded length.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Iterator, Mapping, Union

from .errors import SingularPoint

__all__ = [
    "Fraction",
    "Monomial",
    "Polynomial",
    "RationalFunction",
    "FieldValue",
    "as_function",
    "field_pow",
    "format_field_value",
    "format_monomial",
    "format_rational",
    "is_zero_value",
    "one_like",
    "parse_expression",
    "parse_field_value",
    "parse_monomial",
    "parse_rational",
]

# A monomial is a tuple of (variable index, exponent) pairs, sorted by
# variable index, with every exponent > 0.  The empty tuple is the constant
# monomial.
Monomial = tuple[tuple[int, int], ...]

_MONO_ONE: Monomial = ()


def _clean_monomial(exponents: Mapping[int, int] | Iterable[tuple[int, int]]) -> Monomial:
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    acc: dict[int, int] = {}
    for var, exp in items:
        if var < 1:
            raise ValueError(f"variable index must be >= 1, got {var}")
        if exp < 0:
            raise ValueError(f"negative exponent {exp} in monomial")
        if exp:
            acc[var] = acc.get(var, 0) + exp
    return tuple(sorted(acc.items()))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for var, exp in b:
        acc[var] = acc.get(var, 0) + exp
    return tuple(sorted(acc.items()))


def mono_degree(m: Monomial) -> int:
    return sum(exp for _, exp in m)


def mono_key(m: Monomial):
    """Graded-lexicographic sort key; larger key = larger monomial.

    Degree first, then lexicographic with the *lowest* variable index most
    significant (x1 beats x2 at equal degree).
    """
    return (mono_degree(m), tuple((-var, exp) for var, exp in m))


def format_monomial(m: Monomial, prefix: str = "x") -> str:
    if not m:
        return "1"
    return "*".join(f"{prefix}{var}^{exp}" if exp != 1 else f"{prefix}{var}" for var, exp in m)


def parse_monomial(text: str) -> Monomial:
    poly = Polynomial.parse(text)
    terms = list(poly.terms())
    if len(terms) != 1 or terms[0][1] != 1:
        raise ValueError(f"not a monomial with coefficient 1: {text!r}")
    return terms[0][0]


_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the wire format for scalars: optional '-', digits, optional '/digits'."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(s)


def format_rational(q: Fraction) -> str:
    return str(q)


class Polynomial:
    """Sparse multivariate polynomial over Fraction coefficients.

    Immutable.  The term map never stores zero coefficients; the zero
    polynomial has an empty term map.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction | int] | Iterable[tuple] | None = None):
        acc: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for mono, coeff in items:
            mono = _clean_monomial(dict(mono))
            c = acc.get(mono, _FR_ZERO) + Fraction(coeff)
            if c:
                acc[mono] = c
            elif mono in acc:
                del acc[mono]
        self._terms = acc

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "Polynomial":
        p = object.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls.constant(1)

    @classmethod
    def constant(cls, value: Fraction | int) -> "Polynomial":
        c = Fraction(value)
        return cls._raw({_MONO_ONE: c} if c else {})

    @classmethod
    def variable(cls, index: int) -> "Polynomial":
        if index < 1:
            raise ValueError(f"variable index must be >= 1, got {index}")
        return cls._raw({((index, 1),): _FR_ONE})

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _MONO_ONE in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get(_MONO_ONE, _FR_ZERO)

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self._terms:
            return -1
        return max(mono_degree(m) for m in self._terms)

    def variables(self) -> set[int]:
        return {var for m in self._terms for var, _ in m}

    def terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in canonical (descending graded-lex) order."""
        for m in sorted(self._terms, key=mono_key, reverse=True):
            yield m, self._terms[m]

    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            return _FR_ZERO
        return self._terms[max(self._terms, key=mono_key)]

    def _scaled(self, factor: Fraction) -> "Polynomial":
        if factor == 1:
            return self
        if not factor:
            return Polynomial.zero()
        return Polynomial._raw({m: c * factor for m, c in self._terms.items()})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(other)._terms
        return NotImplemented

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> "Polynomial":
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for m, c in other._terms.items():
            s = acc.get(m, _FR_ZERO) + c
            if s:
                acc[m] = s
            elif m in acc:
                del acc[m]
        return Polynomial._raw(acc)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        other = _as_polynomial(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return Polynomial.zero()
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = acc.get(m, _FR_ZERO) + c1 * c2
                if s:
                    acc[m] = s
                elif m in acc:
                    del acc[m]
        return Polynomial._raw(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative exponent on a polynomial; use RationalFunction")
        result = Polynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def substitute(
        self,
        assignment: Mapping[int, Fraction | int],
        partial: bool = False,
    ) -> Union[Fraction, "Polynomial"]:
        """Evaluate at exact rational values.

        Full substitution (default) requires every variable to be assigned and
        returns a Fraction; with ``partial=True`` unassigned variables survive
        and a Polynomial is returned.
        """
        if not partial:
            missing = self.variables() - set(assignment)
            if missing:
                raise ValueError(f"assignment missing variables {sorted(missing)}")
            total = _FR_ZERO
            for m, c in self._terms.items():
                v = c
                for var, exp in m:
                    v *= Fraction(assignment[var]) ** exp
                total += v
            return total
        acc: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            v = c
            rest: list[tuple[int, int]] = []
            for var, exp in m:
                if var in assignment:
                    v *= Fraction(assignment[var]) ** exp
                else:
                    rest.append((var, exp))
            if not v:
                continue
            key = tuple(rest)
            s = acc.get(key, _FR_ZERO) + v
            if s:
                acc[key] = s
            elif key in acc:
                del acc[key]
        return Polynomial._raw(acc)

    def format(self, prefix: str = "x") -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for m, c in self.terms():
            mag = abs(c)
            if not m:
                body = str(mag)
            elif mag == 1:
                body = format_monomial(m, prefix)
            else:
                body = f"{mag}*{format_monomial(m, prefix)}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.format()!r})"

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        f = parse_expression(text)
        if not f.den.is_constant():
            raise ValueError(f"not a polynomial (non-constant denominator): {text!r}")
        return f.num._scaled(1 / f.den.constant_value())

    def to_json(self) -> list:
        return [[str(c), [list(pair) for pair in m]] for m, c in self.terms()]

    @classmethod
    def from_json(cls, data: Iterable) -> "Polynomial":
        return cls((tuple((int(v), int(e)) for v, e in mono), parse_rational(coeff)) for coeff, mono in data)


_FR_ZERO = Fraction(0)
_FR_ONE = Fraction(1)
_P_ZERO = Polynomial.zero()
_P_ONE = Polynomial.one()


def _as_polynomial(value) -> Polynomial | None:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    return None


class RationalFunction:
    """Quotient of two polynomials, kept unreduced.

    Invariants after construction: the denominator is nonzero, all
    coefficients are integers with joint content 1, and the denominator's
    leading coefficient is positive.  ``==`` compares by cross-multiplication
    and is therefore true mathematical equality in the function field.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = _P_ONE
        if den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        if num.is_zero():
            self.num = _P_ZERO
            self.den = _P_ONE
            return
        coeffs = list(num._terms.values()) + list(den._terms.values())
        g = reduce(math.gcd, (c.numerator for c in coeffs))
        l = reduce(math.lcm, (c.denominator for c in coeffs))
        scale = Fraction(l, g)
        if den.leading_coefficient() < 0:
            scale = -scale
        self.num = num._scaled(scale)
        self.den = den._scaled(scale)

    @classmethod
    def _raw(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        f = object.__new__(cls)
        f.num = num
        f.den = den
        return f

    @classmethod
    def constant(cls, value: Fraction | int) -> "RationalFunction":
        return cls(Polynomial.constant(value))

    @classmethod
    def variable(cls, index: int) -> "RationalFunction":
        return cls._raw(Polynomial.variable(index), _P_ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def as_rational(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("rational function is not constant")
        return self.num.constant_value() / self.den.constant_value()

    def variables(self) -> set[int]:
        return self.num.variables() | self.den.variables()

    def __eq__(self, other) -> bool:
        other = _as_function(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        other = _as_function(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = _as_function(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        other = _as_function(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = _as_function(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_function(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        other = _as_function(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            if self.num.is_zero():
                raise ZeroDivisionError("negative power of the zero rational function")
            return RationalFunction(self.den ** (-exponent), self.num ** (-exponent))
        return RationalFunction(self.num**exponent, self.den**exponent)

    def substitute(
        self,
        assignment: Mapping[int, Fraction | int],
        partial: bool = False,
    ) -> "FieldValue":
        """Evaluate at exact rational values.

        Full substitution returns a Fraction; partial substitution returns a
        RationalFunction in the remaining variables.  Raises SingularPoint if
        the denominator evaluates to zero (respectively, to the zero
        polynomial).
        """
        if not partial:
            den_val = self.den.substitute(assignment)
            if not den_val:
                raise SingularPoint("denominator vanishes at the given point")
            return self.num.substitute(assignment) / den_val
        den_p = self.den.substitute(assignment, partial=True)
        if den_p.is_zero():
            raise SingularPoint("denominator vanishes identically on the given slice")
        return RationalFunction(self.num.substitute(assignment, partial=True), den_p)

    def format(self, prefix: str = "x") -> str:
        if self.den == _P_ONE:
            return self.num.format(prefix)
        return f"({self.num.format(prefix)})/({self.den.format(prefix)})"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RationalFunction({self.format()!r})"

    @classmethod
    def parse(cls, text: str) -> "RationalFunction":
        return parse_expression(text)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "RationalFunction":
        return cls(Polynomial.from_json(data["num"]), Polynomial.from_json(data["den"]))


def _as_function(value) -> RationalFunction | None:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (int, Fraction)):
        return RationalFunction.constant(value)
    if isinstance(value, Polynomial):
        return RationalFunction(value)
    return None


# A field value is either an exact rational scalar or a rational function.
# The library never mixes the two inside one tuple; promotion is explicit via
# as_function().
FieldValue = Union[Fraction, RationalFunction]


def as_function(value: FieldValue | int) -> RationalFunction:
    f = _as_function(value)
    if f is None:
        raise TypeError(f"cannot promote {type(value).__name__} to a rational function")
    return f


def is_zero_value(value: FieldValue) -> bool:
    if isinstance(value, RationalFunction):
        return value.is_zero()
    return value == 0


def one_like(value: FieldValue) -> FieldValue:
    return RationalFunction.constant(1) if isinstance(value, RationalFunction) else _FR_ONE


def field_pow(value: FieldValue, exponent: int) -> FieldValue:
    if isinstance(value, RationalFunction):
        return value**exponent
    if exponent >= 0:
        return value**exponent
    if value == 0:
        raise ZeroDivisionError("negative power of zero")
    return (1 / value) ** (-exponent)


def format_field_value(value: FieldValue, prefix: str = "x") -> str:
    if isinstance(value, RationalFunction):
        return value.format(prefix)
    return str(value)


def parse_field_value(text: str) -> FieldValue:
    """Parse either a rational literal or a symbolic expression.

    Constant expressions come back as plain Fractions.
    """
    s = text.strip()
    if _RATIONAL_RE.match(s):
        return Fraction(s)
    f = parse_expression(s)
    return f.as_rational() if f.is_constant() else f


# ---------------------------------------------------------------------------
# Expression grammar
#
#   expr   := term (('+'|'-') term)*
#   term   := factor (('*'|'/') factor)*
#   factor := '-'* atom (('^'|'**') '-'? integer)?
#   atom   := integer | variable | '(' expr ')'
#
# Variables are a letter run followed by digits (x1, z12, t3, ...); the letter
# run is ignored, the digits are the variable index.

_TOKEN_RE = re.compile(r"(?:(?P<num>\d+)|(?P<var>[A-Za-z]+(?P<idx>\d+))|(?P<op>\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, object]]:
    tokens: list[tuple[str, object]] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ValueError(f"bad character {text[pos]!r} at offset {pos} in {text!r}")
        if m.group("num"):
            tokens.append(("num", int(m.group("num"))))
        elif m.group("var"):
            tokens.append(("var", int(m.group("idx"))))
        else:
            op = m.group("op")
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, object] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, object]:
        tok = self.peek()
        if tok is None:
            raise ValueError(f"unexpected end of expression in {self.text!r}")
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.take()
        if tok != ("op", op):
            raise ValueError(f"expected {op!r} in {self.text!r}")

    def parse(self) -> RationalFunction:
        value = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing tokens in {self.text!r}")
        return value

    def expr(self) -> RationalFunction:
        value = self.term()
        while (tok := self.peek()) in (("op", "+"), ("op", "-")):
            self.take()
            rhs = self.term()
            value = value + rhs if tok[1] == "+" else value - rhs
        return value

    def term(self) -> RationalFunction:
        value = self.factor()
        while (tok := self.peek()) in (("op", "*"), ("op", "/")):
            self.take()
            rhs = self.factor()
            value = value * rhs if tok[1] == "*" else value / rhs
        return value

    def factor(self) -> RationalFunction:
        sign = 1
        while self.peek() == ("op", "-"):
            self.take()
            sign = -sign
        value = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            esign = 1
            if self.peek() == ("op", "-"):
                self.take()
                esign = -1
            kind, val = self.take()
            if kind != "num":
                raise ValueError(f"exponent must be an integer in {self.text!r}")
            value = value ** (esign * val)
        return -value if sign < 0 else value

    def atom(self) -> RationalFunction:
        kind, val = self.take()
        if kind == "num":
            return RationalFunction.constant(val)
        if kind == "var":
            return RationalFunction.variable(val)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ValueError(f"unexpected token {val!r} in {self.text!r}")


def parse_expression(text: str) -> RationalFunction:
    if not text.strip():
        raise ValueError("empty expression")
    return _Parser(text).parse()
