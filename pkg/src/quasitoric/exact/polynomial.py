"""
Sparse multivariate polynomials with rational coefficients.

Terms are kept in a dict from exponent tuples to non-zero ``Fraction``
coefficients. Iteration and printing use graded-lex order (total degree
descending, then exponents descending), so ``str`` and :meth:`MultiPoly.items`
are canonical.
"""

from __future__ import annotations

import itertools
import math
import typing
from fractions import Fraction

from ..core.errors import DimensionMismatchError, NonHomogeneousError
from ..core.rationals import format_rational
from .linalg import Number

Exponent = typing.Tuple[int, ...]


def graded_lex_key(exponent: Exponent) -> typing.Tuple[int, typing.Tuple[int, ...]]:
    return (-sum(exponent), tuple(-e for e in exponent))


def monomial_label(exponent: Exponent, variables: typing.Sequence[str]) -> str:
    """``(2, 0, 0)`` -> ``"h1^2"``, ``(1, 1, 0)`` -> ``"h1h2"``, zero exponent -> ``"1"``."""
    parts = []
    for name, e in zip(variables, exponent):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "".join(parts) if parts else "1"


def monomials_of_degree(nvars: int, degree: int) -> typing.List[Exponent]:
    """All exponents of the given total degree, in graded-lex order."""
    if nvars == 0:
        return [()] if degree == 0 else []
    out: typing.List[Exponent] = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def monomials_up_to(nvars: int, degree: int) -> typing.List[Exponent]:
    out: typing.List[Exponent] = []
    for d in range(degree, -1, -1):
        out.extend(monomials_of_degree(nvars, d))
    return out


def multi_factorial(exponent: Exponent) -> int:
    return math.prod(math.factorial(e) for e in exponent)


class MultiPoly:
    """Immutable sparse polynomial over an ordered list of variable names."""

    __slots__ = ("_variables", "_terms")

    def __init__(
        self, variables: typing.Sequence[str], terms: typing.Optional[typing.Mapping[Exponent, Number]] = None
    ):
        self._variables: typing.Tuple[str, ...] = tuple(variables)
        cleaned: typing.Dict[Exponent, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            if len(exponent) != len(self._variables):
                raise DimensionMismatchError(
                    "Exponent length does not match the variable count", body=(exponent, self._variables)
                )
            c = Fraction(coefficient)
            if c != 0:
                cleaned[tuple(exponent)] = c
        self._terms = cleaned

    # construction

    @classmethod
    def zero(cls, variables: typing.Sequence[str]) -> "MultiPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: typing.Sequence[str], value: Number) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables: typing.Sequence[str], index: int) -> "MultiPoly":
        exponent = tuple(1 if j == index else 0 for j in range(len(variables)))
        return cls(variables, {exponent: 1})

    @classmethod
    def linear(
        cls, variables: typing.Sequence[str], coefficients: typing.Sequence[Number], constant: Number = 0
    ) -> "MultiPoly":
        if len(coefficients) != len(variables):
            raise DimensionMismatchError("Linear form length mismatch", body=(len(coefficients), len(variables)))
        n = len(variables)
        terms: typing.Dict[Exponent, Number] = {(0,) * n: constant}
        for i, c in enumerate(coefficients):
            terms[tuple(1 if j == i else 0 for j in range(n))] = c
        return cls(variables, terms)

    @classmethod
    def monomial(cls, variables: typing.Sequence[str], exponent: Exponent, coefficient: Number = 1) -> "MultiPoly":
        return cls(variables, {exponent: coefficient})

    # inspection

    @property
    def variables(self) -> typing.Tuple[str, ...]:
        return self._variables

    @property
    def nvars(self) -> int:
        return len(self._variables)

    @property
    def terms(self) -> typing.Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> typing.List[typing.Tuple[Exponent, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: graded_lex_key(kv[0]))

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, degree: typing.Optional[int] = None) -> bool:
        degrees = {sum(e) for e in self._terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def labelled(self) -> typing.Dict[str, Fraction]:
        """Graded-lex ordered map from monomial labels such as ``"h1h2"`` to coefficients."""
        return {monomial_label(e, self._variables): c for e, c in self.items()}

    # arithmetic

    def _check_compatible(self, other: "MultiPoly") -> None:
        if self._variables != other._variables:
            raise DimensionMismatchError(
                "Polynomials over different variables", body=(self._variables, other._variables)
            )

    def _coerce(self, other: typing.Union["MultiPoly", Number]) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check_compatible(other)
            return other
        return MultiPoly.constant(self._variables, other)

    def __add__(self, other: typing.Union["MultiPoly", Number]) -> "MultiPoly":
        o = self._coerce(other)
        terms = dict(self._terms)
        for e, c in o._terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self._variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self._variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: typing.Union["MultiPoly", Number]) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Number) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other: typing.Union["MultiPoly", Number]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check_compatible(other)
        terms: typing.Dict[Exponent, Fraction] = {}
        for (e1, c1), (e2, c2) in itertools.product(self._terms.items(), other._terms.items()):
            e = tuple(a + b for a, b in zip(e1, e2))
            terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self._variables, terms)

    __rmul__ = __mul__

    def scale(self, c: Number) -> "MultiPoly":
        return MultiPoly(self._variables, {e: Fraction(c) * v for e, v in self._terms.items()})

    def __truediv__(self, c: Number) -> "MultiPoly":
        return self.scale(1 / Fraction(c))

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("Negative polynomial power")
        out = MultiPoly.constant(self._variables, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._variables == other._variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self._variables, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._variables, frozenset(self._terms.items())))

    # calculus and evaluation

    def evaluate(self, point: typing.Sequence[Number]) -> Fraction:
        if len(point) != self.nvars:
            raise DimensionMismatchError("Evaluation point length mismatch", body=(len(point), self.nvars))
        values = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for x, k in zip(values, e):
                if k:
                    term *= x**k
            total += term
        return total

    __call__ = evaluate

    def compose(self, forms: typing.Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute ``forms[i]`` for variable ``i``; all forms share one variable list."""
        if len(forms) != self.nvars:
            raise DimensionMismatchError("One form per variable is required", body=(len(forms), self.nvars))
        if not forms:
            return self
        target = forms[0].variables
        for f in forms:
            if f.variables != target:
                raise DimensionMismatchError("Substituted forms use different variables")
        powers: typing.Dict[typing.Tuple[int, int], MultiPoly] = {}

        def power(i: int, k: int) -> MultiPoly:
            if (i, k) not in powers:
                powers[(i, k)] = forms[i] ** k
            return powers[(i, k)]

        out = MultiPoly.zero(target)
        for e, c in self._terms.items():
            term = MultiPoly.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def derivative(self, index: int, times: int = 1) -> "MultiPoly":
        terms: typing.Dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            if e[index] < times:
                continue
            factor = math.perm(e[index], times)
            new = list(e)
            new[index] -= times
            terms[tuple(new)] = c * factor
        return MultiPoly(self._variables, terms)

    def partial(self, exponent: Exponent) -> "MultiPoly":
        """Apply ``d^exponent`` (one derivative order per variable)."""
        out = self
        for i, k in enumerate(exponent):
            if k:
                out = out.derivative(i, k)
        return out

    def antiderivative(self, index: int) -> "MultiPoly":
        """The antiderivative in one variable with zero constant of integration."""
        terms: typing.Dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            new = list(e)
            new[index] += 1
            terms[tuple(new)] = c / new[index]
        return MultiPoly(self._variables, terms)

    # printing

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            label = monomial_label(e, self._variables)
            mag = format_rational(abs(c))
            if label == "1":
                body = mag
            elif abs(c) == 1:
                body = "*".join(self._factors(e))
            else:
                body = "*".join([mag] + self._factors(e))
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for s, body in parts[1:]:
            text += f" {s} {body}"
        return text

    def _factors(self, exponent: Exponent) -> typing.List[str]:
        return [name if k == 1 else f"{name}^{k}" for name, k in zip(self._variables, exponent) if k]

    def __repr__(self) -> str:
        return f"MultiPoly({list(self._variables)!r}, {self!s})"


def polarize(p: MultiPoly, args: typing.Sequence[typing.Sequence[Number]]) -> Fraction:
    """The symmetric multilinear form whose diagonal is ``p``.

    ``p`` must be homogeneous of degree ``n = len(args)``. Computed as
    ``1/n! * sum over nonempty S of (-1)^(n-|S|) p(sum_{j in S} args_j)``.

    Raises:
        NonHomogeneousError: if ``p`` is not homogeneous of degree ``len(args)``.
    """
    n = len(args)
    if not p.is_homogeneous(n):
        raise NonHomogeneousError("Polarization needs a homogeneous polynomial of degree len(args)", body=p.degree)
    for a in args:
        if len(a) != p.nvars:
            raise DimensionMismatchError("Polarization argument length mismatch", body=(len(a), p.nvars))
    if n == 0:
        return p.coefficient((0,) * p.nvars)
    total = Fraction(0)
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            point = [sum((Fraction(args[j][i]) for j in subset), Fraction(0)) for i in range(p.nvars)]
            total += (-1) ** (n - size) * p.evaluate(point)
    return total / math.factorial(n)
