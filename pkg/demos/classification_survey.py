# Finiteness-property survey over a panel of bases.
#
# Verdicts are three-valued (proven / refuted / unknown): most usable
# conditions are one-sided, and the classifier never overclaims.  Every
# verdict carries evidence records naming the rule that produced it.

from betafin import classify, cpcase_check, cubic_unit_classify, make_field

PANEL = [
    ("tribonacci", (1, 1, 1)),
    ("minimal Pisot", (1, 1, 0)),
    ("family t=2", (2, -4, 4)),
    ("family t=3", (3, -6, 6)),
    ("x^2-3x+1", (-1, 3)),
    ("x^3-4x^2+2", (-2, 0, 4)),
    ("x^3-3x^2-x+1", (-1, 1, 3)),
]

print(f"{'base':<16} {'pisot':<8} {'F':<8} {'PF':<8} {'F1':<8}")
for name, coeffs in PANEL:
    rep = classify(make_field(coeffs))
    print(f"{name:<16} {rep.pisot:<8} {rep.f:<8} {rep.pf:<8} {rep.f1:<8}")

# the family members have the rare combination: F1 without PF
rep = classify(make_field((2, -4, 4)))
print("\nevidence trail for family t=2:")
for ev in rep.evidence:
    print(f"  [{ev.rule}] {ev.claim}")

# cubic units are a complete classification
print("\ncubic unit verdicts:")
for a, b, c in ((1, 1, 1), (0, 1, 1), (3, 1, -1), (4, 0, -1)):
    v = cubic_unit_classify(a, b, c)
    print(f"  x^3-{a}x^2-({b})x-({c}):", v)

# under a settled F1 verdict, PF-without-F is equivalent to an infinite
# digit string for 1; check it on an instance
report = cpcase_check(make_field((-1, 0, 4)))  # x^3-4x^2+1
print("\nbiconditional instance on x^3-4x^2+1:",
      "applicable" if report.applicable else "inapplicable",
      "| PF without F:", report.pf_without_f,
      "| d_beta(1) finite:", report.d_beta_one_finite)
