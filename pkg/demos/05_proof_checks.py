"""
Finite checks of the analytic steps
===================================

Each suite evaluates the exact expressions behind an avoidance argument in
Q(sqrt 5) and reports every inequality it tested.
"""

from fibramsey.proofcheck import SUITES, frac_diff

# per-gap drops of {m phi} and their thresholds
print(SUITES["lemma32"](12).text())

# transitions between same-colored positions of S at G-distance
print(SUITES["chains"](5000).text())

# fractional differences for Fibonacci gaps, with the tables rendered at 3 decimals
rep = SUITES["thm2"](40)
print(rep.text())

# a single row, exactly and rounded
row = frac_diff(9, 4)
print(row.n, row.eps, row.shifted, row.branch, row.d, row.rounded)

print(SUITES["modular"]().text())
