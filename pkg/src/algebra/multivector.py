"""
Real Clifford algebra Cl(3,0) and its two-particle tensor extension.

Basis order is fixed: {1, s1, s2, s3, s1s2, s1s3, s2s3, i} with i = s1s2s3. Products use a
precomputed 8x8x8 structure tensor built from blade bitmasks; two-particle products scatter
the signed outer product of coefficients onto precomputed target blades.
"""

from numbers import Real
from typing import Union

import numpy as np

BASIS_LABELS = ("1", "s1", "s2", "s3", "s1s2", "s1s3", "s2s3", "i")

# bit 0 -> s1, bit 1 -> s2, bit 2 -> s3
_BLADE_MASKS = (0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111)
_MASK_INDEX = {mask: index for index, mask in enumerate(_BLADE_MASKS)}

GRADES = np.array([bin(mask).count("1") for mask in _BLADE_MASKS])
REVERSION_SIGNS = np.where((GRADES * (GRADES - 1) // 2) % 2 == 0, 1.0, -1.0)


def _reordering_sign(a: int, b: int) -> int:
    """Sign picked up by sorting the basis vectors of blade a followed by blade b."""
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


def _structure_tensor() -> np.ndarray:
    table = np.zeros((8, 8, 8))
    for i, a in enumerate(_BLADE_MASKS):
        for j, b in enumerate(_BLADE_MASKS):
            # Euclidean metric: repeated vectors square to +1
            table[i, j, _MASK_INDEX[a ^ b]] = _reordering_sign(a, b)
    table.setflags(write=False)
    return table


STRUCTURE = _structure_tensor()

# each blade pair multiplies to exactly one signed blade
_PRODUCT_INDEX = np.abs(STRUCTURE).argmax(axis=2)
_PRODUCT_SIGN = np.take_along_axis(STRUCTURE, _PRODUCT_INDEX[..., None], axis=2)[..., 0]

# rows (i, p) of the first pair, columns (j, q) of the second; target k * 8 + l
_PAIR_INDEX = (8 * _PRODUCT_INDEX[:, None, :, None] + _PRODUCT_INDEX[None, :, None, :]).reshape(64, 64).ravel()
_PAIR_SIGN = (_PRODUCT_SIGN[:, None, :, None] * _PRODUCT_SIGN[None, :, None, :]).reshape(64, 64)

# <a b>_0 only pairs each blade with itself
SQUARE_SIGNS = np.diagonal(STRUCTURE[:, :, 0]).copy()
PAIR_SQUARE_SIGNS = np.outer(SQUARE_SIGNS, SQUARE_SIGNS)
PAIR_REVERSION_SIGNS = np.outer(REVERSION_SIGNS, REVERSION_SIGNS)


def _pair_structure() -> np.ndarray:
    """Dense 64x64x64 structure tensor over flattened two-particle coefficients."""
    table = np.zeros((64, 64, 64))
    rows, cols = np.indices((64, 64))
    table[rows.ravel(), cols.ravel(), _PAIR_INDEX] = _PAIR_SIGN.ravel()
    table.setflags(write=False)
    return table


PAIR_STRUCTURE = _pair_structure()


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array


class Multivector3:
    """An element of Cl(3,0) stored as 8 real coefficients. Instances are immutable."""

    __slots__ = ("_coefficients",)
    # numpy scalars defer to our reflected operators
    __array_ufunc__ = None

    def __init__(self, coefficients=None):
        if coefficients is None:
            coefficients = np.zeros(8)
        coefficients = _frozen(coefficients)
        if coefficients.shape != (8,):
            raise ValueError(f"Multivector3 needs 8 coefficients, got shape {coefficients.shape}")
        self._coefficients = coefficients

    @classmethod
    def scalar(cls, value: float) -> "Multivector3":
        coefficients = np.zeros(8)
        coefficients[0] = value
        return cls(coefficients)

    @classmethod
    def basis(cls, index: int) -> "Multivector3":
        coefficients = np.zeros(8)
        coefficients[index] = 1.0
        return cls(coefficients)

    @classmethod
    def vector(cls, x: float, y: float, z: float) -> "Multivector3":
        return cls([0.0, x, y, z, 0.0, 0.0, 0.0, 0.0])

    @property
    def coefficients(self) -> np.ndarray:
        return self._coefficients

    @property
    def scalar_part(self) -> float:
        return float(self._coefficients[0])

    def __getitem__(self, index: int) -> float:
        return float(self._coefficients[index])

    def grade(self, k: int) -> "Multivector3":
        return Multivector3(np.where(GRADES == k, self._coefficients, 0.0))

    def is_even(self, tolerance: float = 0.0) -> bool:
        return bool(np.all(np.abs(self._coefficients[GRADES % 2 == 1]) <= tolerance))

    def reverse(self) -> "Multivector3":
        return Multivector3(REVERSION_SIGNS * self._coefficients)

    def is_close(self, other: Union["Multivector3", Real], tolerance: float = 1e-12) -> bool:
        other = _as_multivector(other)
        return bool(np.max(np.abs(self._coefficients - other._coefficients)) <= tolerance)

    def __add__(self, other):
        other = _as_multivector(other)
        return Multivector3(self._coefficients + other._coefficients)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_multivector(other)
        return Multivector3(self._coefficients - other._coefficients)

    def __rsub__(self, other):
        return _as_multivector(other) - self

    def __neg__(self):
        return Multivector3(-self._coefficients)

    def __mul__(self, other):
        if isinstance(other, Real):
            return Multivector3(float(other) * self._coefficients)
        if isinstance(other, Multivector3):
            return geometric_product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Real):
            return Multivector3(float(other) * self._coefficients)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Real):
            return Multivector3(self._coefficients / float(other))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Multivector3):
            return NotImplemented
        return bool(np.array_equal(self._coefficients, other._coefficients))

    __hash__ = None

    def __repr__(self) -> str:
        terms = [
            f"{value:+.6g}{'' if label == '1' else '*' + label}"
            for value, label in zip(self._coefficients, BASIS_LABELS)
            if value != 0.0
        ]
        return f"Multivector3({' '.join(terms) or '0'})"


def _as_multivector(value) -> Multivector3:
    if isinstance(value, Multivector3):
        return value
    if isinstance(value, Real):
        return Multivector3.scalar(float(value))
    raise TypeError(f"cannot combine Multivector3 with {type(value).__name__}")


class TwoParticleMultivector:
    """
    An element of Cl(3,0) (x) Cl(3,0), stored densely as an 8x8 coefficient matrix.

    Entry [i, j] multiplies (basis i of particle 1)(basis j of particle 2); factors of
    different particles commute.
    """

    __slots__ = ("_coefficients",)
    __array_ufunc__ = None

    def __init__(self, coefficients=None):
        if coefficients is None:
            coefficients = np.zeros((8, 8))
        coefficients = _frozen(coefficients)
        if coefficients.shape != (8, 8):
            raise ValueError(f"TwoParticleMultivector needs 8x8 coefficients, got {coefficients.shape}")
        self._coefficients = coefficients

    @classmethod
    def scalar(cls, value: float) -> "TwoParticleMultivector":
        coefficients = np.zeros((8, 8))
        coefficients[0, 0] = value
        return cls(coefficients)

    @classmethod
    def from_factors(cls, first: Multivector3, second: Multivector3) -> "TwoParticleMultivector":
        """The pure tensor first^1 second^2."""
        return cls(np.outer(first.coefficients, second.coefficients))

    @classmethod
    def particle(cls, element: Multivector3, which: int) -> "TwoParticleMultivector":
        """Embed a single-particle element as acting on particle 1 or 2."""
        one = Multivector3.scalar(1.0)
        if which == 1:
            return cls.from_factors(element, one)
        if which == 2:
            return cls.from_factors(one, element)
        raise ValueError(f"particle index must be 1 or 2, got {which!r}")

    @property
    def coefficients(self) -> np.ndarray:
        return self._coefficients

    @property
    def scalar_part(self) -> float:
        return float(self._coefficients[0, 0])

    def reverse(self) -> "TwoParticleMultivector":
        return TwoParticleMultivector(PAIR_REVERSION_SIGNS * self._coefficients)

    def is_close(self, other: "TwoParticleMultivector", tolerance: float = 1e-12) -> bool:
        other = _as_pair(other)
        return bool(np.max(np.abs(self._coefficients - other._coefficients)) <= tolerance)

    def __add__(self, other):
        other = _as_pair(other)
        return TwoParticleMultivector(self._coefficients + other._coefficients)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_pair(other)
        return TwoParticleMultivector(self._coefficients - other._coefficients)

    def __rsub__(self, other):
        return _as_pair(other) - self

    def __neg__(self):
        return TwoParticleMultivector(-self._coefficients)

    def __mul__(self, other):
        if isinstance(other, Real):
            return TwoParticleMultivector(float(other) * self._coefficients)
        if isinstance(other, TwoParticleMultivector):
            return geometric_product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Real):
            return TwoParticleMultivector(float(other) * self._coefficients)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TwoParticleMultivector):
            return NotImplemented
        return bool(np.array_equal(self._coefficients, other._coefficients))

    __hash__ = None

    def __repr__(self) -> str:
        terms = [
            f"{self._coefficients[i, j]:+.6g}*({BASIS_LABELS[i]})^1({BASIS_LABELS[j]})^2"
            for i, j in zip(*np.nonzero(self._coefficients))
        ]
        return f"TwoParticleMultivector({' '.join(terms) or '0'})"


def _as_pair(value) -> TwoParticleMultivector:
    if isinstance(value, TwoParticleMultivector):
        return value
    if isinstance(value, Real):
        return TwoParticleMultivector.scalar(float(value))
    raise TypeError(f"cannot combine TwoParticleMultivector with {type(value).__name__}")


def geometric_product(a, b):
    """Clifford product of two single-particle or two two-particle multivectors."""
    if isinstance(a, Multivector3) and isinstance(b, Multivector3):
        return Multivector3(np.einsum("i,j,ijk->k", a.coefficients, b.coefficients, STRUCTURE))
    if isinstance(a, TwoParticleMultivector) and isinstance(b, TwoParticleMultivector):
        terms = _PAIR_SIGN * np.outer(a.coefficients, b.coefficients)
        return TwoParticleMultivector(np.bincount(_PAIR_INDEX, weights=terms.ravel(), minlength=64).reshape(8, 8))
    raise TypeError(f"no geometric product between {type(a).__name__} and {type(b).__name__}")


def scalar_product(a, b) -> float:
    """<a b>_0 without forming the full product."""
    if isinstance(a, Multivector3) and isinstance(b, Multivector3):
        return float(np.dot(SQUARE_SIGNS * a.coefficients, b.coefficients))
    if isinstance(a, TwoParticleMultivector) and isinstance(b, TwoParticleMultivector):
        return float(np.sum(PAIR_SQUARE_SIGNS * a.coefficients * b.coefficients))
    raise TypeError(f"no scalar product between {type(a).__name__} and {type(b).__name__}")


def reverse(a):
    """Clifford reversion; flips the sign of grades 2 and 3 (per particle for pairs)."""
    return a.reverse()


ONE = Multivector3.scalar(1.0)
SIGMA = (Multivector3.basis(1), Multivector3.basis(2), Multivector3.basis(3))
IOTA = Multivector3.basis(7)
# i s_k for k = 1, 2, 3
IOTA_SIGMA = tuple(IOTA * sigma for sigma in SIGMA)
