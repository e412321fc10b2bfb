"""Exact arithmetic in Q(beta) for an algebraic integer beta > 1.

A field is described by the monic integer polynomial
p(x) = x^d - a_{d-1} x^{d-1} - ... - a_1 x - a_0 together with a certified
isolating interval for its largest real root beta > 1.  Elements are
rational coordinate vectors in the power basis 1, beta, ..., beta^{d-1}.
Every comparison is decided exactly: rational shortcuts where possible,
otherwise interval refinement of the isolating interval, which terminates
because a nonzero element of the field is a nonzero polynomial of degree
below d evaluated at beta.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from . import polys
from .errors import (
    FieldMismatch,
    InvariantViolation,
    NoRootAboveOne,
    Reducible,
)

_REFINE_CAP = 10**6


class BetaField:
    """The number field Q(beta), beta the largest real root > 1 of p.

    The isolating interval only ever shrinks; refinement swaps in a new
    (lo, hi) tuple atomically, so concurrent readers always observe a
    valid bracket.  Everything else is immutable after construction.
    """

    def __init__(self, coeffs: Sequence[int], _skip_checks: bool = False):
        coeffs = tuple(int(a) for a in coeffs)
        if len(coeffs) < 2:
            raise Reducible("degree must be at least 2")
        if coeffs[0] == 0:
            raise Reducible("constant term a_0 must be nonzero (x divides p)")
        self.coeffs = coeffs
        self.degree = len(coeffs)
        # p(x) = -a_0 - a_1 x - ... - a_{d-1} x^{d-1} + x^d, low to high
        self.poly = polys.poly(tuple(-a for a in coeffs) + (1,))
        irreducible, verified = polys.irreducible_over_q([int(c) for c in self.poly])
        if not irreducible:
            raise Reducible(f"{self.poly_str()} factors over Q")
        self.irreducibility_verified = verified
        self._interval = self._isolate_largest_root()
        self._cache: dict = {}

    # -- construction helpers ------------------------------------------------

    def _isolate_largest_root(self) -> tuple[Fraction, Fraction]:
        p = self.poly
        bound = Fraction(1) + max(Fraction(1), max(abs(c) for c in p[:-1]))
        lo, hi = Fraction(1), bound
        if polys.eval_at(p, lo) == 0 or polys.eval_at(p, hi) == 0:
            raise Reducible("rational root at an isolation endpoint")
        total = polys.count_real_roots(p, lo, hi)
        if total == 0:
            raise NoRootAboveOne(f"{self.poly_str()} has no real root above 1")
        while True:
            mid = (lo + hi) / 2
            right = polys.count_real_roots(p, mid, hi)
            if right >= 1:
                lo = mid
            else:
                hi = mid
            if lo > 1 and polys.count_real_roots(p, lo, hi) == 1:
                break
        # widen checks: bracket the root by a sign change for cheap bisection
        if _sign(polys.eval_at(p, lo)) * _sign(polys.eval_at(p, hi)) >= 0:
            raise InvariantViolation("isolating interval lost its sign change")
        return lo, hi

    # -- public surface ------------------------------------------------------

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self._interval

    def refine(self) -> None:
        """Halve the isolating interval once."""
        lo, hi = self._interval
        mid = (lo + hi) / 2
        v = polys.eval_at(self.poly, mid)
        if v == 0:
            raise InvariantViolation("rational midpoint is a root of an irreducible p")
        if _sign(v) == _sign(polys.eval_at(self.poly, lo)):
            self._interval = (mid, hi)
        else:
            self._interval = (lo, mid)

    def poly_str(self) -> str:
        terms = [f"x^{self.degree}"]
        for i in range(self.degree - 1, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            c = -a
            s = "+" if c > 0 else "-"
            mag = abs(c)
            if i == 0:
                terms.append(f"{s}{mag}")
            elif i == 1:
                terms.append(f"{s}{'' if mag == 1 else mag}x")
            else:
                terms.append(f"{s}{'' if mag == 1 else mag}x^{i}")
        return "".join(terms)

    def __repr__(self) -> str:
        return f"BetaField({self.poly_str()})"

    def __eq__(self, other) -> bool:
        return isinstance(other, BetaField) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def zero(self) -> "FieldElement":
        return FieldElement(self, (Fraction(0),) * self.degree)

    def one(self) -> "FieldElement":
        return self.from_rational(1)

    def from_rational(self, q) -> "FieldElement":
        coords = [Fraction(q)] + [Fraction(0)] * (self.degree - 1)
        return FieldElement(self, coords)

    def from_coords(self, coords: Iterable) -> "FieldElement":
        cs = tuple(Fraction(c) for c in coords)
        if len(cs) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(cs)}")
        return FieldElement(self, cs)

    def beta(self) -> "FieldElement":
        coords = [Fraction(0)] * self.degree
        coords[1] = Fraction(1)
        return FieldElement(self, coords)

    def beta_inverse(self) -> "FieldElement":
        """1/beta from a_0 beta^{-1} = beta^{d-1} - a_{d-1} beta^{d-2} - ... - a_1."""
        if "beta_inverse" not in self._cache:
            a0 = Fraction(self.coeffs[0])
            coords = [Fraction(0)] * self.degree
            for i in range(1, self.degree):
                coords[i - 1] = Fraction(-self.coeffs[i]) / a0
            coords[self.degree - 1] = Fraction(1) / a0
            self._cache["beta_inverse"] = FieldElement(self, coords)
        return self._cache["beta_inverse"]

    def beta_power(self, n: int) -> "FieldElement":
        """beta^n for any integer n, cached."""
        key = ("beta_power", n)
        if key not in self._cache:
            base = self.beta() if n >= 0 else self.beta_inverse()
            acc = self.one()
            for _ in range(abs(n)):
                acc = acc * base
            self._cache[key] = acc
        return self._cache[key]

    def floor_beta(self) -> int:
        if "floor_beta" not in self._cache:
            self._cache["floor_beta"] = self.beta().floor()
        return self._cache["floor_beta"]


def make_field(coeffs: Sequence[int]) -> BetaField:
    """Construct Q(beta) from (a_0, ..., a_{d-1}).

    Raises Reducible when p factors (exactly decided for degree <= 4) and
    NoRootAboveOne when no real root exceeds 1.
    """
    return BetaField(coeffs)


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


class FieldElement:
    """An element of Q(beta) in power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: BetaField, coords: Iterable):
        self.field = field
        self.coords = tuple(
            c if type(c) is Fraction else Fraction(c) for c in coords
        )

    # -- representation ------------------------------------------------------

    def __repr__(self) -> str:
        return f"FieldElement({list(map(str, self.coords))})"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is irrational")
        return self.coords[0]

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.field.coeffs, self.coords))

    # -- ring operations -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("elements belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, (a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, (-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, (a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    prod[i + j] += a * b
        # reduce with beta^d = a_{d-1} beta^{d-1} + ... + a_0
        a = self.field.coeffs
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                prod[k] = Fraction(0)
                for i in range(d):
                    prod[k - d + i] += c * a[i]
        return FieldElement(self.field, prod[:d])

    __rmul__ = __mul__

    def mul_beta(self) -> "FieldElement":
        """beta * self by coordinate shift and one reduction (O(d))."""
        d = self.field.degree
        top = self.coords[d - 1]
        a = self.field.coeffs
        if top:
            coords = [top * a[0]] + [
                self.coords[i - 1] + top * a[i] for i in range(1, d)
            ]
        else:
            coords = [Fraction(0)] + list(self.coords[: d - 1])
        return FieldElement(self.field, coords)

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return self.field.from_rational(1 / self.coords[0])
        a = polys.poly(self.coords)
        p = self.field.poly
        # s*a + t*p = g; g must be a nonzero constant by irreducibility
        r0, r1 = p, a
        s0, s1 = polys.poly(()), polys.poly((1,))
        while r1:
            q, r = polys.divmod_poly(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, polys.sub(s0, polys.mul(q, s1))
        if polys.degree(r0) != 0:
            raise InvariantViolation("common factor found; field polynomial not irreducible")
        inv = polys.scale(s0, Fraction(1) / r0[0])
        inv = polys.rem(inv, p)
        coords = list(inv) + [Fraction(0)] * (self.field.degree - len(inv))
        return FieldElement(self.field, coords)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.from_rational(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.field.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    # -- exact decisions -----------------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}."""
        if self.is_zero():
            return 0
        if self.is_rational():
            return _sign(self.coords[0])
        p = polys.poly(self.coords)
        for _ in range(_REFINE_CAP):
            lo, hi = self.field.interval
            vlo, vhi = polys.eval_interval(p, lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            self.field.refine()
        raise InvariantViolation("sign refinement exceeded the safety cap")

    def floor(self) -> int:
        """Exact integer part."""
        if self.is_rational():
            return math.floor(self.coords[0])
        p = polys.poly(self.coords)
        for _ in range(_REFINE_CAP):
            lo, hi = self.field.interval
            vlo, vhi = polys.eval_interval(p, lo, hi)
            if math.floor(vlo) == math.floor(vhi):
                return math.floor(vlo)
            self.field.refine()
        raise InvariantViolation("floor refinement exceeded the safety cap")

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0


def sign(a: FieldElement) -> int:
    return a.sign()


def floor(a: FieldElement) -> int:
    return a.floor()


def elem_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Dispatch form of +, -, * used by the command line front end."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def unit_disk_profile(field: BetaField) -> tuple[int, int, int]:
    """(inside, on, outside) root counts of p relative to the unit circle."""
    if "disk_profile" not in field._cache:
        field._cache["disk_profile"] = polys.unit_disk_root_profile(field.poly)
    return field._cache["disk_profile"]


def is_pisot(field: BetaField) -> bool:
    """True iff beta is a Pisot number.

    Decided by exact root counting against the unit circle: beta is Pisot
    iff exactly one root (beta itself) lies outside and none lie on it.
    A root on the circle is reported through unit_disk_profile; the verdict
    is then False.  Cross-checked for cubics against the coefficient
    criterion |b-1| < a+c and c^2 - b < sgn(c)(1+ac).
    """
    inside, on, outside = unit_disk_profile(field)
    verdict = on == 0 and outside == 1
    if field.degree == 3:
        a, b, c = field.coeffs[2], field.coeffs[1], field.coeffs[0]
        if verdict != cubic_pisot_criterion(a, b, c):
            raise InvariantViolation(
                f"disk counting and the cubic coefficient criterion disagree on {field}"
            )
    return verdict


def cubic_pisot_criterion(a: int, b: int, c: int) -> bool:
    """Coefficient test for x^3 - ax^2 - bx - c to have a Pisot root."""
    sgn_c = (c > 0) - (c < 0)
    return abs(b - 1) < a + c and c * c - b < sgn_c * (1 + a * c)


def has_boundary_root(field: BetaField) -> bool:
    """Diagnostic: does p have a root of modulus exactly 1?"""
    return unit_disk_profile(field)[1] > 0
