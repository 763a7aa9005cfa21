"""Exact complex-rational arithmetic for cancellation-prone combinations.

Double-precision inputs are dyadic rationals, so recursion replay over
Fraction pairs is exact.  The basic polynomials grow like |r|^j, while the
boundary determinants and eigenvector combinations built from them cancel
down by factors up to |r|^(2N) -- far beyond what doubles can resolve.
"""

from __future__ import annotations

from fractions import Fraction


class ExactComplex:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @classmethod
    def of(cls, z: complex) -> "ExactComplex":
        z = complex(z)
        return cls(z.real, z.imag)

    def __add__(self, o):
        return ExactComplex(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return ExactComplex(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return ExactComplex(-self.re, -self.im)

    def __mul__(self, o):
        return ExactComplex(self.re * o.re - self.im * o.im,
                            self.re * o.im + self.im * o.re)

    def div(self, o: "ExactComplex") -> "ExactComplex":
        dd = o.re * o.re + o.im * o.im
        return ExactComplex((self.re * o.re + self.im * o.im) / dd,
                            (self.im * o.re - self.re * o.im) / dd)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))


def basic_sequences(zeta: complex, eta: complex, lo: int, hi: int,
                    indices=(-2, -1, 1)) -> dict:
    """Exact basic polynomials T_i(j) over [lo, hi] by recursion replay."""
    z = ExactComplex.of(zeta)
    h = ExactComplex.of(eta)
    seqs = {}
    for i in indices:
        vals = {j: ExactComplex(1 if j == i else 0) for j in range(-2, 2)}
        for j in range(2, hi + 1):
            vals[j] = z * vals[j - 2] - vals[j - 4] + h * (vals[j - 1] + vals[j - 3])
        for j in range(-3, lo - 1, -1):
            vals[j] = z * vals[j + 2] - vals[j + 4] + h * (vals[j + 3] + vals[j + 1])
        seqs[i] = vals
    return seqs
