"""
Sparse exact polynomials in the jet variables V_1, V_2, ...

V_1 is the only variable allowed a negative exponent (the ring is Laurent in V_1),
which is all the formulas for W_g and the inverse matrix ever divide by.
"""
from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from utils.exceptions import DomainException, PoleException
from utils.formatting import format_rational

__all__ = ["Grading", "JetMonomial", "JetPolynomial"]

Scalar = Union[int, Fraction]


class Grading(str, Enum):
    """Weight of V_k: ``k`` (derivative order) or ``k-1`` (dilaton grading)"""

    DEGREE = "k"
    DILATON = "k-1"

    def weight(self, k: int) -> int:
        return k if self is Grading.DEGREE else k - 1


def _tpl_zip(left, right):
    i = j = 0
    while i < len(left) or j < len(right):
        if j >= len(right) or (i < len(left) and left[i][0] < right[j][0]):
            yield left[i][0], left[i][1], 0
            i += 1
        elif i >= len(left) or right[j][0] < left[i][0]:
            yield right[j][0], 0, right[j][1]
            j += 1
        else:
            yield left[i][0], left[i][1], right[j][1]
            i += 1
            j += 1


class JetMonomial:
    """
    Product of powers of jet variables, stored as a tuple of (index, exponent)
    pairs sorted by index with no zero exponents.
    """

    __slots__ = ("exponents",)

    def __init__(self, exponents: Union[Mapping[int, int], Iterable[Tuple[int, int]]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        merged: Dict[int, int] = {}
        for k, e in items:
            if not isinstance(k, int) or k < 1:
                raise DomainException(f"jet variable index must be >= 1, got {k}")
            merged[k] = merged.get(k, 0) + e
        for k, e in merged.items():
            if k >= 2 and e < 0:
                raise DomainException(f"only V1 may carry a negative exponent (V{k}^{e})")
        self.exponents = tuple(sorted((k, e) for k, e in merged.items() if e))

    @classmethod
    def _raw(cls, exponents: Tuple[Tuple[int, int], ...]) -> "JetMonomial":
        monomial = cls.__new__(cls)
        monomial.exponents = exponents
        return monomial

    def __mul__(self, other: "JetMonomial") -> "JetMonomial":
        return JetMonomial._raw(tuple(
            (k, a + b) for k, a, b in _tpl_zip(self.exponents, other.exponents) if a + b
        ))

    def __eq__(self, other) -> bool:
        return isinstance(other, JetMonomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __repr__(self) -> str:
        return f"JetMonomial({dict(self.exponents)})"

    def exponent(self, k: int) -> int:
        for index, e in self.exponents:
            if index == k:
                return e
        return 0

    def shifted(self, k: int, delta: int) -> "JetMonomial":
        """Multiply by V_k^delta"""
        return self * JetMonomial._raw(((k, delta),))

    def degree(self, grading: Grading = Grading.DEGREE) -> int:
        return sum(grading.weight(k) * e for k, e in self.exponents)

    def sort_key(self, top: int) -> Tuple[int, ...]:
        """Exponent vector read from V_top down to V_1"""
        exps = dict(self.exponents)
        return tuple(exps.get(k, 0) for k in range(top, 0, -1))

    def render(self) -> str:
        factors = []
        for k, e in reversed(self.exponents):
            factors.append(f"V{k}" if e == 1 else f"V{k}^{e}")
        return "*".join(factors)


ONE = JetMonomial._raw(())


class JetPolynomial:
    """
    Finite sum of jet monomials with rational coefficients.

    Values are immutable; every operation returns a new canonical polynomial
    (no zero coefficients stored).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[JetMonomial, Scalar]] = None):
        cleaned: Dict[JetMonomial, Fraction] = {}
        for monomial, coeff in (terms or {}).items():
            if coeff:
                cleaned[monomial] = Fraction(coeff)
        self._terms = cleaned

    @classmethod
    def _from_clean(cls, terms: Dict[JetMonomial, Fraction]) -> "JetPolynomial":
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    # constructors

    @classmethod
    def zero(cls) -> "JetPolynomial":
        return cls._from_clean({})

    @classmethod
    def constant(cls, value: Scalar) -> "JetPolynomial":
        return cls({ONE: value})

    @classmethod
    def one(cls) -> "JetPolynomial":
        return cls.constant(1)

    @classmethod
    def variable(cls, k: int) -> "JetPolynomial":
        return cls({JetMonomial({k: 1}): 1})

    @classmethod
    def monomial(cls, coeff: Scalar, exponents: Mapping[int, int]) -> "JetPolynomial":
        return cls({JetMonomial(exponents): coeff})

    # accessors

    @property
    def terms(self) -> Mapping[JetMonomial, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[JetMonomial, Fraction]]:
        return iter(self.sorted_terms())

    def coefficient(self, exponents: Mapping[int, int]) -> Fraction:
        return self._terms.get(JetMonomial(exponents), Fraction(0))

    def variables(self) -> Tuple[int, ...]:
        return tuple(sorted({k for m in self._terms for k, _ in m.exponents}))

    def max_variable(self) -> int:
        found = self.variables()
        return found[-1] if found else 0

    def degrees(self, grading: Grading = Grading.DEGREE) -> Tuple[int, ...]:
        return tuple(sorted({m.degree(grading) for m in self._terms}))

    def is_homogeneous(self, degree: int, grading: Grading = Grading.DEGREE) -> bool:
        return all(m.degree(grading) == degree for m in self._terms)

    # ring structure

    def _coerce(self, other) -> "JetPolynomial":
        if isinstance(other, JetPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return JetPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other) -> "JetPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = dict(self._terms)
        for monomial, coeff in other._terms.items():
            total = result.get(monomial, 0) + coeff
            if total:
                result[monomial] = total
            else:
                result.pop(monomial, None)
        return JetPolynomial._from_clean(result)

    __radd__ = __add__

    def __neg__(self) -> "JetPolynomial":
        return JetPolynomial._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "JetPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "JetPolynomial":
        return (-self) + other

    def scale(self, factor: Scalar) -> "JetPolynomial":
        if not factor:
            return JetPolynomial.zero()
        factor = Fraction(factor)
        return JetPolynomial._from_clean({m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other) -> "JetPolynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, JetPolynomial):
            return NotImplemented
        result: Dict[JetMonomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                key = m1 * m2
                result[key] = result.get(key, 0) + c1 * c2
        return JetPolynomial._from_clean({m: c for m, c in result.items() if c})

    def __rmul__(self, other) -> "JetPolynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "JetPolynomial":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            # only monomials in V1 are invertible in this ring
            if len(self._terms) != 1:
                raise PoleException("only a single monomial can be raised to a negative power")
            (monomial, coeff), = self._terms.items()
            if any(k != 1 for k, _ in monomial.exponents):
                raise PoleException("only powers of V1 are invertible")
            return JetPolynomial({
                JetMonomial._raw(tuple((k, e * exponent) for k, e in monomial.exponents)):
                    Fraction(1) / coeff ** -exponent,
            })
        result = JetPolynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = JetPolynomial.constant(other)
        if not isinstance(other, JetPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # differential structure

    def derive(self) -> "JetPolynomial":
        """Total derivative d = sum_k V_{k+1} d/dV_k"""
        result: Dict[JetMonomial, Fraction] = {}
        for monomial, coeff in self._terms.items():
            for k, e in monomial.exponents:
                key = monomial * JetMonomial._raw(((k, -1), (k + 1, 1)))
                result[key] = result.get(key, 0) + coeff * e
        return JetPolynomial._from_clean({m: c for m, c in result.items() if c})

    def partial(self, k: int) -> "JetPolynomial":
        """Formal partial derivative in V_k"""
        if k < 1:
            raise DomainException(f"jet variable index must be >= 1, got {k}")
        result: Dict[JetMonomial, Fraction] = {}
        for monomial, coeff in self._terms.items():
            e = monomial.exponent(k)
            if e:
                result[monomial.shifted(k, -1)] = coeff * e
        return JetPolynomial._from_clean(result)

    def euler(self, grading: Grading = Grading.DEGREE) -> "JetPolynomial":
        """sum_k w(k) V_k dp/dV_k, i.e. each monomial scaled by its weighted degree"""
        grading = Grading(grading)
        return JetPolynomial._from_clean({
            m: c * m.degree(grading) for m, c in self._terms.items() if m.degree(grading)
        })

    def evaluate(self, assignment: Mapping[int, Scalar]) -> Fraction:
        total = Fraction(0)
        for monomial, coeff in self._terms.items():
            value = coeff
            for k, e in monomial.exponents:
                if k not in assignment:
                    raise DomainException(f"no value assigned to V{k}")
                base = Fraction(assignment[k])
                if e < 0 and base == 0:
                    raise PoleException(f"V{k} = 0 meets a negative exponent {e}")
                value *= base ** e
            total += value
        return total

    # serialization

    def sorted_terms(self) -> List[Tuple[JetMonomial, Fraction]]:
        top = self.max_variable()
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key(top), reverse=True)

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for monomial, coeff in self.sorted_terms():
            body = monomial.render()
            pieces.append(f"({format_rational(coeff)})" + (f"*{body}" if body else ""))
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"JetPolynomial({self.render()!r})"

    def to_terms(self) -> List[dict]:
        return [
            {
                "coeff": format_rational(coeff),
                "exps": {str(k): e for k, e in monomial.exponents},
            }
            for monomial, coeff in self.sorted_terms()
        ]

    @classmethod
    def from_terms(cls, terms: Iterable[Mapping]) -> "JetPolynomial":
        result = cls.zero()
        for term in terms:
            exps = {int(k): int(e) for k, e in term["exps"].items()}
            result = result + cls.monomial(Fraction(term["coeff"]), exps)
        return result

    _TERM = re.compile(r"^\((?P<coeff>-?\d+(?:/\d+)?)\)(?P<body>(?:\*V\d+(?:\^-?\d+)?)*)$")
    _FACTOR = re.compile(r"V(\d+)(?:\^(-?\d+))?")

    @classmethod
    def parse(cls, text: str) -> "JetPolynomial":
        """Inverse of ``render``"""
        text = text.strip()
        if text == "0":
            return cls.zero()
        result = cls.zero()
        for piece in text.split(" + "):
            match = cls._TERM.match(piece.strip())
            if not match:
                raise DomainException(f"cannot parse jet term {piece!r}")
            exps: Dict[int, int] = {}
            for index, power in cls._FACTOR.findall(match.group("body")):
                exps[int(index)] = exps.get(int(index), 0) + int(power or 1)
            result = result + cls.monomial(Fraction(match.group("coeff")), exps)
        return result
