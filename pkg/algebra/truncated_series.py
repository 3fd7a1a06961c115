"""
Multivariate power series over Q truncated at a total degree.

Every series carries its precision D: the stored terms are exact for total degree
<= D and nothing above D is stored. Products, derivatives, reciprocals and logs
propagate the precision they can actually guarantee, so a computation never
silently under-truncates; callers check ``precision`` against what they need.
"""
from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from utils.exceptions import DomainException, PoleException, SeriesLogException, TruncationException
from utils.formatting import format_rational

__all__ = ["TruncatedSeries", "series_alphabet", "paired_alphabet"]

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


def series_alphabet(prefix: str, n_max: int) -> Tuple[str, ...]:
    """(T0, ..., TN)"""
    return tuple(f"{prefix}{i}" for i in range(n_max + 1))


def paired_alphabet(n_max: int) -> Tuple[str, ...]:
    """(P0, ..., PN, Q0, ..., QN)"""
    return series_alphabet("P", n_max) + series_alphabet("Q", n_max)


def _mul_terms(left: Mapping[Exponents, Fraction], right: Mapping[Exponents, Fraction], limit: int) -> Dict[Exponents, Fraction]:
    result: Dict[Exponents, Fraction] = {}
    right_items = [(e, c, sum(e)) for e, c in right.items()]
    for e1, c1 in left.items():
        d1 = sum(e1)
        for e2, c2, d2 in right_items:
            if d1 + d2 > limit:
                continue
            key = tuple(a + b for a, b in zip(e1, e2))
            result[key] = result.get(key, 0) + c1 * c2
    return {k: v for k, v in result.items() if v}


class TruncatedSeries:
    __slots__ = ("alphabet", "precision", "_terms")

    def __init__(self, alphabet: Sequence[str], precision: int, terms: Optional[Mapping[Exponents, Scalar]] = None):
        if precision < 0:
            raise TruncationException(f"series precision must be >= 0, got {precision}")
        self.alphabet = tuple(alphabet)
        self.precision = precision
        cleaned: Dict[Exponents, Fraction] = {}
        width = len(self.alphabet)
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != width or any(e < 0 for e in exps):
                raise DomainException(f"exponent vector {exps} does not fit alphabet {self.alphabet}")
            if coeff and sum(exps) <= precision:
                cleaned[exps] = cleaned.get(exps, 0) + Fraction(coeff)
        self._terms = {k: v for k, v in cleaned.items() if v}

    @classmethod
    def _from_clean(cls, alphabet: Tuple[str, ...], precision: int, terms: Dict[Exponents, Fraction]) -> "TruncatedSeries":
        series = cls.__new__(cls)
        series.alphabet = alphabet
        series.precision = precision
        series._terms = terms
        return series

    # constructors

    @classmethod
    def zero(cls, alphabet: Sequence[str], precision: int) -> "TruncatedSeries":
        return cls(alphabet, precision)

    @classmethod
    def constant(cls, alphabet: Sequence[str], precision: int, value: Scalar) -> "TruncatedSeries":
        return cls(alphabet, precision, {(0,) * len(alphabet): value})

    @classmethod
    def variable(cls, alphabet: Sequence[str], precision: int, name: str) -> "TruncatedSeries":
        alphabet = tuple(alphabet)
        if name not in alphabet:
            raise DomainException(f"{name} is not in alphabet {alphabet}")
        exps = tuple(1 if a == name else 0 for a in alphabet)
        return cls(alphabet, precision, {exps: 1})

    # accessors

    @property
    def terms(self) -> Mapping[Exponents, Fraction]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def index_of(self, name: str) -> int:
        try:
            return self.alphabet.index(name)
        except ValueError:
            raise DomainException(f"{name} is not in alphabet {self.alphabet}") from None

    def exponents_of(self, monomial: Mapping[str, int]) -> Exponents:
        exps = [0] * len(self.alphabet)
        for name, e in monomial.items():
            exps[self.index_of(name)] += e
        return tuple(exps)

    def coefficient(self, monomial: Union[Mapping[str, int], Exponents]) -> Fraction:
        exps = self.exponents_of(monomial) if isinstance(monomial, Mapping) else tuple(monomial)
        if sum(exps) > self.precision:
            raise TruncationException(
                f"degree {sum(exps)} coefficient requested from a series exact to degree {self.precision}"
            )
        return self._terms.get(exps, Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * len(self.alphabet), Fraction(0))

    def valuation(self) -> int:
        """Lowest degree that can be nonzero (precision + 1 for the zero series)"""
        if not self._terms:
            return self.precision + 1
        return min(sum(e) for e in self._terms)

    def component(self, degree: int) -> Dict[Exponents, Fraction]:
        return {e: c for e, c in self._terms.items() if sum(e) == degree}

    # arithmetic

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise DomainException(f"cannot combine a series with {type(other).__name__}")
        if other.alphabet != self.alphabet:
            raise DomainException(f"alphabet mismatch: {self.alphabet} vs {other.alphabet}")

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(self.alphabet, self.precision, other)
        self._check(other)
        return other

    def __add__(self, other) -> "TruncatedSeries":
        other = self._lift(other)
        precision = min(self.precision, other.precision)
        result = {e: c for e, c in self._terms.items() if sum(e) <= precision}
        for e, c in other._terms.items():
            if sum(e) <= precision:
                total = result.get(e, 0) + c
                if total:
                    result[e] = total
                else:
                    result.pop(e, None)
        return TruncatedSeries._from_clean(self.alphabet, precision, result)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries._from_clean(self.alphabet, self.precision, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def scale(self, factor: Scalar) -> "TruncatedSeries":
        if not factor:
            return TruncatedSeries.zero(self.alphabet, self.precision)
        factor = Fraction(factor)
        return TruncatedSeries._from_clean(self.alphabet, self.precision, {e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        precision = min(self.precision + other.valuation(), other.precision + self.valuation())
        return TruncatedSeries._from_clean(self.alphabet, precision, _mul_terms(self._terms, other._terms, precision))

    def __rmul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.reciprocal() ** -exponent
        result = TruncatedSeries.constant(self.alphabet, self.precision, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise PoleException("division of a series by zero")
            return self.scale(Fraction(1) / Fraction(other))
        return self * other.reciprocal()

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.alphabet, self.precision, self._terms) == (other.alphabet, other.precision, other._terms)

    def __hash__(self) -> int:
        return hash((self.alphabet, self.precision, frozenset(self._terms.items())))

    def reciprocal(self) -> "TruncatedSeries":
        """1/a by b_0 = 1/a_0, b_d = -(1/a_0) sum_{k=1..d} a_k b_(d-k) on homogeneous parts"""
        a0 = self.constant_term()
        if not a0:
            raise PoleException("series reciprocal needs an invertible constant term")
        components = [self.component(d) for d in range(self.precision + 1)]
        inverse_a0 = Fraction(1) / a0
        parts: List[Dict[Exponents, Fraction]] = [{(0,) * len(self.alphabet): inverse_a0}]
        for d in range(1, self.precision + 1):
            acc: Dict[Exponents, Fraction] = {}
            for k in range(1, d + 1):
                if not components[k] or not parts[d - k]:
                    continue
                for e, c in _mul_terms(components[k], parts[d - k], d).items():
                    acc[e] = acc.get(e, 0) - c * inverse_a0
            parts.append({e: c for e, c in acc.items() if c})
        terms: Dict[Exponents, Fraction] = {}
        for part in parts:
            terms.update(part)
        return TruncatedSeries._from_clean(self.alphabet, self.precision, terms)

    def euler(self) -> "TruncatedSeries":
        """sum_i x_i d/dx_i: the degree-d part scaled by d"""
        return TruncatedSeries._from_clean(
            self.alphabet, self.precision, {e: c * sum(e) for e, c in self._terms.items() if sum(e)}
        )

    def log(self) -> "TruncatedSeries":
        """log a for a_0 = 1, using E(log a) = E(a)/a with E the Euler operator"""
        if self.constant_term() != 1:
            raise SeriesLogException(f"series log needs constant term 1, got {self.constant_term()}")
        ratio = self.euler() * self.reciprocal()
        return TruncatedSeries._from_clean(
            self.alphabet, self.precision,
            {e: c / sum(e) for e, c in ratio._terms.items() if sum(e) and sum(e) <= self.precision},
        )

    def derivative(self, name: str, times: int = 1) -> "TruncatedSeries":
        """Formal derivative; each application costs one degree of precision"""
        position = self.index_of(name)
        series = self
        for _ in range(times):
            if series.precision < 1:
                raise TruncationException(f"no precision left to differentiate in {name}")
            terms: Dict[Exponents, Fraction] = {}
            for e, c in series._terms.items():
                if e[position]:
                    lowered = e[:position] + (e[position] - 1,) + e[position + 1:]
                    terms[lowered] = c * e[position]
            series = TruncatedSeries._from_clean(series.alphabet, series.precision - 1, terms)
        return series

    def truncate(self, precision: int) -> "TruncatedSeries":
        if precision > self.precision:
            raise TruncationException(
                f"cannot raise precision from {self.precision} to {precision}"
            )
        return TruncatedSeries._from_clean(
            self.alphabet, precision, {e: c for e, c in self._terms.items() if sum(e) <= precision}
        )

    def embed(self, alphabet: Sequence[str]) -> "TruncatedSeries":
        """Re-express over a larger alphabet containing this one"""
        alphabet = tuple(alphabet)
        missing = [a for a in self.alphabet if a not in alphabet]
        if missing:
            raise DomainException(f"target alphabet lacks {missing}")
        positions = [alphabet.index(a) for a in self.alphabet]
        terms: Dict[Exponents, Fraction] = {}
        for e, c in self._terms.items():
            exps = [0] * len(alphabet)
            for p, k in zip(positions, e):
                exps[p] = k
            terms[tuple(exps)] = c
        return TruncatedSeries._from_clean(alphabet, self.precision, terms)

    def restrict(self, zero_names: Iterable[str]) -> "TruncatedSeries":
        """Set the named variables to zero"""
        positions = [self.index_of(name) for name in zero_names]
        return TruncatedSeries._from_clean(
            self.alphabet, self.precision,
            {e: c for e, c in self._terms.items() if not any(e[p] for p in positions)},
        )

    def graded_part(self, names: Iterable[str], degree: int) -> "TruncatedSeries":
        """Terms whose total degree in the named variables is exactly degree"""
        positions = [self.index_of(name) for name in names]
        return TruncatedSeries._from_clean(
            self.alphabet, self.precision,
            {e: c for e, c in self._terms.items() if sum(e[p] for p in positions) == degree},
        )

    # serialization

    def render_monomial(self, exps: Exponents) -> str:
        factors = []
        for name, e in zip(self.alphabet, exps):
            if e:
                factors.append(name if e == 1 else f"{name}^{e}")
        return " ".join(factors) if factors else "1"

    def sorted_terms(self) -> List[Tuple[Exponents, Fraction]]:
        """Ascending total degree, then descending exponent vector in alphabet order"""
        return sorted(self._terms.items(), key=lambda item: (sum(item[0]), tuple(-k for k in item[0])))

    def to_terms(self) -> List[dict]:
        return [
            {"monomial": self.render_monomial(e), "value": format_rational(c)}
            for e, c in self.sorted_terms()
        ]

    def render(self) -> str:
        if not self._terms:
            return f"O({self.precision + 1})"
        body = " + ".join(f"({format_rational(c)})*{self.render_monomial(e)}" for e, c in self.sorted_terms())
        return f"{body} + O({self.precision + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.render()!r})"
