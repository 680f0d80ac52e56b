"""Sparse exact-rational linear combinations shared by the vector types."""

from fractions import Fraction
from collections.abc import Mapping

from .errors import BasisMismatchError


def format_coefficient(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_coefficient(text):
    return Fraction(str(text).strip())


class SparseVector:
    """
    Immutable map from keys to nonzero ``Fraction`` coefficients.

    Subclasses describe their homogeneous component through ``_shape`` and
    may override ``_sort_key`` for deterministic iteration.
    """

    def __init__(self, terms=None):
        acc = {}
        if terms is not None:
            pairs = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in pairs:
                self._check_key(key)
                acc[key] = acc.get(key, 0) + Fraction(coeff)
        self._terms = {key: coeff for key, coeff in acc.items() if coeff}

    # hooks

    def _shape(self):
        return ()

    def _check_key(self, key):
        pass

    @staticmethod
    def _sort_key(key):
        return str(key)

    def _like(self, terms):
        return type(self)(*self._shape(), terms=terms)

    def _compatible(self, other):
        if type(other) is not type(self) or other._shape() != self._shape():
            raise BasisMismatchError(
                f"cannot combine {type(self).__name__}{self._shape()} "
                f"with {type(other).__name__}{getattr(other, '_shape', tuple)()}"
            )

    # access

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: self._sort_key(kv[0]))

    def keys(self):
        return [key for key, _ in self.items()]

    def coefficient(self, key):
        return self._terms.get(key, Fraction(0))

    def __getitem__(self, key):
        return self.coefficient(key)

    def __contains__(self, key):
        return key in self._terms

    def __iter__(self):
        return iter(self.keys())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    # arithmetic

    def __add__(self, other):
        self._compatible(other)
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return self._like(terms)

    def __neg__(self):
        return self._like({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        scalar = Fraction(scalar)
        return self._like({key: scalar * coeff for key, coeff in self._terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._shape() == other._shape() and self._terms == other._terms

    __hash__ = None

    def __repr__(self):
        body = ' + '.join(f"{format_coefficient(c)}*{k}" for k, c in self.items()) or '0'
        return f"{type(self).__name__}{self._shape()}[{body}]"
