# Greedy expansions in an algebraic base, all in exact arithmetic.
#
# The base beta is the largest real root of a monic integer polynomial;
# elements of Q(beta) are rational coordinate vectors, and every
# comparison is decided exactly, so the digit strings below are certified.

from fractions import Fraction

from betafin import (
    beta_expand,
    d_beta_one,
    d_beta_star,
    frac_part,
    is_admissible,
    is_finite_expansion,
    make_field,
    format_word,
    parse_word,
)

# the tribonacci base: x^3 - x^2 - x - 1
trib = make_field((1, 1, 1))
print("base:", trib)
print("isolating interval:", trib.interval)
print("floor(beta):", trib.floor_beta())

# the digits of 1 drive everything else
print("d_beta(1)      =", format_word(d_beta_one(trib)))
print("quasi-greedy   =", format_word(d_beta_star(trib)))

# expansions reconstruct their value exactly
for value in (1, 2, Fraction(7, 2)):
    x = trib.from_rational(value)
    e = beta_expand(x)
    print(f"expand({value}): L = {e.exponent}, digits = {format_word(e.word)},",
          "finite" if e.is_finite() else "infinite",
          "| reconstructs:", e.value(trib) == x)

# admissibility is a lexicographic condition against the quasi-greedy word
for text in ("1 0 1", "1 1 1", "1 1 0 1"):
    w = parse_word(text)
    print(f"admissible({text!r}) =", is_admissible(trib, w))

# a base from the cubic family x^3 - 2tx^2 + 2tx - t at t = 2
fam = make_field((2, -4, 4))
print("\nbase:", fam)
print("d_beta(1) =", format_word(d_beta_one(fam)))

# the element with a provably infinite expansion
bi = fam.beta_inverse()
x = fam.from_rational(2) + 2 * bi + bi**2 + bi**4 + bi**5 + bi**6
e = beta_expand(x)
print("the nonfinite example: L =", e.exponent, "digits =", format_word(e.word))
print("finite?", is_finite_expansion(x))
print("fractional part coords:", [str(c) for c in frac_part(x).coords])
