"""The beta-transformation and greedy digit expansions.

For x in [0, 1] the map T(x) = beta*x - floor(beta*x) generates the
greedy digit string d_beta(x).  Orbits of field elements are detected by
exact state hashing, so every expansion comes back as an eventually
periodic Word together with its preperiod and period.  The quasi-greedy
expansion of 1 is the yardstick for Parry's admissibility condition:
a word is realizable iff every shift stays lexicographically below it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation, OrbitBudgetExceeded, OutOfRange
from .field import BetaField, FieldElement
from .words import Word, format_word, lex_cmp

DEFAULT_ORBIT_CAP = 100_000


def t_map(x: FieldElement) -> tuple[int, FieldElement]:
    """One greedy step: (floor(beta x), beta x - floor(beta x)) for x in [0, 1]."""
    if x.sign() < 0 or (x - 1).sign() > 0:
        raise OutOfRange("t_map needs 0 <= x <= 1")
    bx = x.mul_beta()
    digit = bx.floor()
    return digit, bx - digit


def d_beta(x: FieldElement, cap: int = DEFAULT_ORBIT_CAP) -> Word:
    """Greedy digit word of x in [0, 1], found by exact orbit hashing.

    Raises OrbitBudgetExceeded when the orbit does not close within cap
    states, which signals a non-Pisot base or a pathological input.
    """
    if x.sign() < 0 or (x - 1).sign() > 0:
        raise OutOfRange("d_beta needs 0 <= x <= 1")
    seen: dict[FieldElement, int] = {}
    digits: list[int] = []
    state = x
    while len(digits) <= cap:
        if state in seen:
            split = seen[state]
            return Word(digits[:split], digits[split:])
        seen[state] = len(digits)
        digit, state = t_map(state)
        digits.append(digit)
    raise OrbitBudgetExceeded(f"orbit of {x!r} did not close within {cap} states")


def d_beta_one(field: BetaField, cap: int = DEFAULT_ORBIT_CAP) -> Word:
    if "d_beta_one" not in field._cache:
        field._cache["d_beta_one"] = d_beta(field.one(), cap)
    return field._cache["d_beta_one"]


def d_beta_star(field: BetaField, cap: int = DEFAULT_ORBIT_CAP) -> Word:
    """Quasi-greedy expansion of 1.

    If d_beta(1) = d_1 ... d_q 0^inf (finite, q the last nonzero position)
    this is (d_1 ... d_{q-1} (d_q - 1))^inf; otherwise d_beta(1) itself.
    """
    if "d_beta_star" not in field._cache:
        w = d_beta_one(field, cap)
        if w.is_finite():
            if w.is_zero():
                raise InvariantViolation("d_beta(1) cannot be the zero word")
            block = list(w.pre)
            block[-1] -= 1
            field._cache["d_beta_star"] = Word((), block)
        else:
            field._cache["d_beta_star"] = w
    return field._cache["d_beta_star"]


def is_admissible(field: BetaField, w: Word) -> bool:
    """Parry's condition: every shift of w is lexicographically below
    the quasi-greedy expansion of 1.

    Only preperiod + period many shifts are distinct, and each comparison
    is decided on a finite window, so the check is exact.
    """
    if w.has_negative_digit():
        raise ValueError("admissibility is defined for nonnegative digit words")
    dstar = d_beta_star(field)
    for n in range(len(w.pre) + w.period_len()):
        if lex_cmp(w.shift(n), dstar) >= 0:
            return False
    return True


def nu(field: BetaField, w: Word) -> FieldElement:
    """Exact value sum_n w_n beta^{-n} via geometric summation in Q(beta)."""
    binv = field.beta_inverse()
    acc = field.zero()
    power = field.one()
    for d in w.pre:
        power = power * binv
        if d:
            acc = acc + d * power
    if w.period:
        p = len(w.period)
        block = field.zero()
        bpow = power
        for d in w.period:
            bpow = bpow * binv
            if d:
                block = block + d * bpow
        key = ("geom_inverse", p)
        if key not in field._cache:
            field._cache[key] = (field.one() - field.beta_power(-p)).inverse()
        acc = acc + block * field._cache[key]
    return acc


def big_l(x: FieldElement) -> int:
    """Least n >= 0 with x * beta^{-n} < 1."""
    if x.sign() < 0:
        raise OutOfRange("big_l needs x >= 0")
    n = 0
    power = x.field.one()
    while (x - power).sign() >= 0:
        power = power.mul_beta()
        n += 1
    return n


@dataclass(frozen=True)
class Expansion:
    """A floating-point style expansion x = beta^exponent * nu(word)."""

    exponent: int
    word: Word

    def is_finite(self) -> bool:
        return self.word.is_finite()

    def value(self, field: BetaField) -> FieldElement:
        return field.beta_power(self.exponent) * nu(field, self.word)

    def __str__(self) -> str:
        return f"beta^{self.exponent} * 0.{format_word(self.word)}"


def beta_expand(x: FieldElement, cap: int = DEFAULT_ORBIT_CAP) -> Expansion:
    """Expansion of x >= 0: exponent L(x) and word d_beta(beta^{-L(x)} x)."""
    ell = big_l(x)
    scaled = x * x.field.beta_power(-ell)
    word = d_beta(scaled, cap)
    return Expansion(ell, word)


def is_finite_expansion(x: FieldElement, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    return beta_expand(x, cap).is_finite()


def xi(field: BetaField, n: int) -> FieldElement:
    """Value of the (n-1)-shifted quasi-greedy expansion of 1."""
    if n < 1:
        raise ValueError("xi is defined for n >= 1")
    key = ("xi", n)
    if key not in field._cache:
        field._cache[key] = nu(field, d_beta_star(field).shift(n - 1))
    return field._cache[key]


def t_orbit_of_one(field: BetaField, upto: int) -> list[FieldElement]:
    """[T^0(1), T^1(1), ..., T^upto(1)], cached incrementally."""
    orbit: list[FieldElement] = field._cache.setdefault("t_orbit_one", [field.one()])
    while len(orbit) <= upto:
        _, nxt = t_map(orbit[-1])
        orbit.append(nxt)
    return orbit[: upto + 1]


def xi_t_power(field: BetaField, n: int) -> int:
    """The exponent m with xi(n) = T^m(1).

    For an infinite d_beta(1) the shift lines up directly (m = n - 1);
    when d_beta(1) = d_1 ... d_q 0^inf the quasi-greedy word has period q
    and m is the representative of n - 1 modulo q.
    """
    if n < 1:
        raise ValueError("xi index must be >= 1")
    w1 = d_beta_one(field)
    if w1.is_finite():
        q = len(w1.pre)
        return (n - 1) % q
    return n - 1


def frac_part(x: FieldElement) -> FieldElement:
    """The beta-fractional part: value of the digits after position L(x)."""
    if x.sign() < 0:
        raise OutOfRange("frac_part needs x >= 0")
    ell = big_l(x)
    y = x * x.field.beta_power(-ell)
    for _ in range(ell):
        _, y = t_map(y)
    return y
