# The open chart of the slice attached to -alpha, its moment vectors,
# and the translation group action in coordinates.
#
# A coroot interval alpha = alpha_{r1} + ... + alpha_{r2} of PGL_n has
# height k = r2 - r1 + 1.  The chart point (p, e, b_1..b_{k-1},
# g_1..g_{k-1}) embeds as a (k+1)x(k+1) block inside the identity.

from fractions import Fraction

from slicelab import (CorootInterval, ZastavaPoint, matrix_to_zastava,
                      phi_alpha, translate, xi_alpha, zastava_to_matrix,
                      zeta_alpha)

alpha = CorootInterval(1, 2, 3)  # full interval of PGL_3, height k = 2
print("alpha:", alpha, "height:", alpha.k, "coweight:",
      alpha.neg_coweight())

z = ZastavaPoint(alpha, p=Fraction(3), e=Fraction(2),
                 b=(Fraction(5),), g=(Fraction(-1),))
print("\nchart point: p=3, e=2, b=(5,), g=(-1,)")

y = zastava_to_matrix(z)
print("matrix:")
print(y.x)
print("coweight:", y.mu)

# The moment vectors read expansion coefficients off the U-factor.
# On chart points they have closed forms:
#   phi  = (b_1, ..., b_{k-1}, e)
#   zeta = (g_{k-1} e, ..., g_1 e, p e + e * sum b_i g_i)
print("\nphi  =", [str(v) for v in phi_alpha(y, alpha).values])
print("zeta =", [str(v) for v in zeta_alpha(y, alpha).values])
expected_last = z.p * z.e + z.e * z.b[0] * z.g[0]
print("p*e + e*b1*g1 =", expected_last)

# xi recovers the coordinates from any point of the open locus, and the
# chart inversion recovers them from the matrix itself.
back = xi_alpha(y, alpha)
print("\nxi returns the same point:", back == z)
print("matrix_to_zastava agrees: ", matrix_to_zastava(y, alpha) == z)

# The translation group acts by shifting g and p; e and b never move.
v = (Fraction(1, 2), Fraction(-2))
moved = translate(z, v)
print("\ntranslate by v = (1/2, -2):")
print("  g:", z.g, "->", moved.g)
print("  p:", z.p, "->", moved.p)
print("  (e, b) unchanged:", (moved.e, moved.b) == (z.e, z.b))

# Acting twice composes additively.
w = (Fraction(0), Fraction(7))
lhs = translate(translate(z, v), w)
rhs = translate(z, tuple(a + b for a, b in zip(v, w)))
print("translate(v) then translate(w) == translate(v + w):", lhs == rhs)
