"""
Exact arithmetic with the golden ratio
======================================

Everything that compares irrational quantities in this package goes through
``QuadRat``, the number (a + b*sqrt 5)/d with integer a, b, d.
"""

from fibramsey import PHI, SQRT5, QuadRat, beatty_floor, frac_phi, phi_power, seq_value

# phi satisfies phi^2 = phi + 1, and 2 phi - 1 is sqrt 5
print(PHI * PHI == PHI + 1, 2 * PHI - 1 == SQRT5)

# powers stay exact in both directions
print(phi_power(10), phi_power(-5))

# the Binet form of f_30, evaluated exactly
n = 30
binet = (phi_power(n) - (-PHI) ** (-n)) / SQRT5
print(binet, seq_value("fibonacci", n))

# floors come from integer square roots, so they are exact at any size
m = 10**40
print(beatty_floor(m) == (PHI * m).floor())

# signs are decided exactly too: this fractional-part drop is just below -0.38
drop = (phi_power(-5) - PHI) / 4
print(drop.to_decimal(8), drop < QuadRat(-38, 0, 100), drop.round(3))

# {m phi} for the first few m
print([float(frac_phi(m)) for m in range(1, 6)])
