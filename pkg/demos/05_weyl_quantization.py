# The localized Weyl algebra on generators (p, e, e^-1, b_i, g_i) with
# relations [p, e] = hbar*e and [b_i, g_i] = hbar, in PBW normal form,
# and its semiclassical limit against the chart Poisson bracket.

from slicelab import (coord_generators, nc_comm, poisson_bracket,
                      semiclassical, symbol, weyl_generators)

k = 2
W = weyl_generators(k)
p, e, einv, hbar = W.p, W.e, W.einv, W.hbar
b1, g1 = W.b[0], W.g[0]

# The defining relations.
print("[p, e]     =", nc_comm(p, e))
print("[b1, g1]   =", nc_comm(b1, g1))
print("[p, b1]    =", nc_comm(p, b1))
print("e * e^-1   =", e * einv)

# Reordering a product into PBW form generates lower-order terms with
# explicit hbar powers; these are computed by the rewriting rules, not
# approximated.
print("\ng1^2 * b1^2 =", g1 * g1 * b1 * b1)
print("p^2 * e     =", p * p * e)
print("e*(p+h)^2   =", e * (p + hbar) * (p + hbar))

# hbar is central and products associate exactly.
x = p * b1 + g1
y = e * g1
z = b1 * b1 - hbar * p
print("\n(x*y)*z == x*(y*z):", (x * y) * z == x * (y * z))
print("[hbar, x] == 0:     ", nc_comm(hbar, x).is_zero())

# The derivation property of the commutator.
lhs = nc_comm(x, y * z)
rhs = nc_comm(x, y) * z + y * nc_comm(x, z)
print("[x, yz] == [x,y]z + y[x,z]:", lhs == rhs)

# Semiclassical limit: the hbar-linear part of a commutator, with hbar
# then set to zero, equals the Poisson bracket of the classical symbols.
C = coord_generators(k)
pairs = [(p, e), (b1, g1), (p * b1, g1), (e * b1, p)]
print("\nsemiclassical limits vs Poisson brackets:")
for a, bb in pairs:
    sc = semiclassical(a, bb)
    pb = poisson_bracket(symbol(a), symbol(bb))
    print(f"  {{{symbol(a)}, {symbol(bb)}}} = {sc}   match: {sc == pb}")

# The loop grading: p, e, b of weight 1, g of weight 0, hbar of weight 1,
# e^-1 of weight -1.  Products add weights; mixed sums are ungraded.
print("\nloop weights: p ->", p.loop_weight(), " e^-1 ->",
      einv.loop_weight(), " g1*b1 ->", (g1 * b1).loop_weight(),
      " p+g1 ->", (p + g1).loop_weight())
