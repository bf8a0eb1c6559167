# Exact arithmetic in Q(t): polynomials, rational functions, and their
# expansions around t = infinity.  Everything is a Fraction underneath,
# so every printed value is exact.

from fractions import Fraction

from slicelab import Poly, RatFunc, T, poly_gcd, rf

# Polynomials store ascending coefficients; Poly((−1, 0, 1)) is t^2 − 1.
f = Poly((-1, 0, 1))
g = Poly((2, 1))
print("f      =", f)
print("g      =", g)
print("f * g  =", f * g)
print("gcd(f*g, g) =", poly_gcd(f * g, g))

# Rational functions reduce to lowest terms with a monic denominator.
x = RatFunc(f, g)
print("\nx = f/g =", x)
print("degree of numerator:", x.num.degree, " denominator:", x.den.degree)

# ord_inf is the vanishing order at infinity: deg(den) − deg(num).
# Negative order means a pole (polynomial growth).
print("ord_inf(x) =", x.ord_inf())
print("ord_inf(1/t^3) =", (rf(1) / (T * T * T)).ord_inf())

# poly_part splits off the polynomial piece of the expansion at infinity:
# x = (t^2 − 1)/(t + 2) = t − 2 + 3/(t + 2).
print("\npoly_part(x)  =", x.poly_part())
print("remainder     =", x - rf(x.poly_part()))

# series_coeff(j) is the coefficient of t^(−j) in the expansion at
# infinity, so the tail above contributes 3/t − 6/t^2 + 12/t^3 − ...
print("\nexpansion coefficients of x at infinity:")
for j in range(5):
    print(f"  t^(-{j}): {x.series_coeff(j)}")

# The whole expansion can be resummed exactly to any finite order, which
# is how the series coefficients were cross-checked in the tests.
approx = rf(x.poly_part()) + sum(
    (rf(x.series_coeff(j)) / T ** j for j in range(1, 9)),
    start=rf(0))
tail = x - approx
print("\nresummed to order 8; remaining tail vanishes to order",
      tail.ord_inf())

# Field operations work as operators and raise on division by zero.
y = rf(Fraction(3, 4)) + rf(1) / (T - 1)
print("\ny =", y, "   x*y/y == x:", (x * y) / y == x)
