# Multiplication of slice points and its two-sided inverse: the chart
# factor comes back through xi, the remainder through the split map, and
# the whole construction is equivariant for the translation group.

from fractions import Fraction

from slicelab import (CorootInterval, act, multiply, phi_alpha,
                      sample_slice, sample_zastava, split_F, translate,
                      xi_alpha, zastava_to_matrix)

alpha = CorootInterval(1, 1, 3)
n = 3
mu = (0, 0, 0)

# y1: a random chart point of the -alpha slice.  y2: a random point of
# the slice shifted by +alpha, so the product lands in the mu slice.
z = sample_zastava(alpha, seed=12, bound=4)
print("chart factor: p=%s e=%s" % (z.p, z.e))
y1 = zastava_to_matrix(z)

nu = tuple(a + b for a, b in zip(mu, alpha.pos_coweight()))
y2 = sample_slice(n, nu, [CorootInterval(2, 2, 3), (1, 0, -1)], seed=34)
print("rest factor coweight:", y2.mu)

y = multiply(y1, y2)
print("\nproduct coweight:", y.mu)
print("product matrix:")
print(y.x)

# The product remembers both factors exactly.
pair = split_F(y, alpha)
print("\nsplit recovers the chart factor:", pair.zastava == z)
print("split recovers the rest factor: ", pair.rest == y2)
print("xi alone recovers the chart factor:", xi_alpha(y, alpha) == z)

# phi of the product equals phi of the chart factor (moment invariance).
print("\nphi(product) == phi(chart factor):",
      phi_alpha(y, alpha) == phi_alpha(y1, alpha))

# Equivariance: acting on the product is the same as translating the
# chart factor before multiplying.
v = (Fraction(-3, 2),)
lhs = act(v, y, alpha)
rhs = multiply(zastava_to_matrix(translate(z, v)), y2)
print("act(v, y1 * y2) == translate(v, y1) * y2:", lhs == rhs)

# Multiplying back the split pair returns the original point.
again = multiply(zastava_to_matrix(pair.zastava), pair.rest)
print("multiply(split(y)) == y:", again == y)
