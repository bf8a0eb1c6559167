# Gauss (UDL) factorization over the Laurent field at infinity:
# x = U * t^mu * H * L with U upper unipotent, L lower unipotent, H
# diagonal in the first congruence subgroup (H = 1 + O(1/t)), and mu an
# integer coweight.  Membership in the slice attached to mu means all
# factors are congruence-normalized and the coweight matches.

import json

from slicelab import (MatQt, T, gauss_decompose, minor_degrees, project_pi,
                      rf, slice_membership)

# The basic 2x2 example: a matrix whose diagonal factor is t^(-1), t.
x = MatQt([[rf(0), rf(1)], [rf(-1), T]])
print("x =")
print(x)

gf = gauss_decompose(x)
print("\nU =")
print(gf.U)
print("H =")
print(gf.H)
print("mu =", gf.mu)
print("L =")
print(gf.L)
print("\nrecompose == x:", gf.recompose() == x)

# Membership reports say which factor breaks, and where.
ok = slice_membership(x, gf.mu)
print("\nmembership at mu =", gf.mu, "->", "ok" if ok.ok else "fail")
bad = slice_membership(x, (0, 0))
print("membership at mu = (0, 0)   -> factor:", bad.factor,
      " found:", bad.mu_found)

# Minor degrees of the denominator-cleared representative drive the
# closure-order bounds; an identically zero minor reports None.
swap = MatQt([[rf(0), rf(1)], [rf(1), rf(0)]])
print("\nminor degrees of the coordinate swap:", minor_degrees(swap))

# project_pi clears the off-slice part of a matrix and returns the two
# unipotent translation witnesses; on a slice point both are identities.
y, nw, mw = project_pi(x, gf.mu)
print("\nprojection of x is x itself:", y.x == x,
      "| witnesses trivial:", nw.is_identity() and mw.is_identity())

# Perturb x by a polynomial upper unipotent on the left: the projection
# lands back on the same point and the witnesses recompose the equality
# nw @ (u @ x) @ mw == y.
u = MatQt([[rf(1), T * T], [rf(0), rf(1)]])
y2, nw2, mw2 = project_pi(u @ x, gf.mu)
print("projection of u@x equals x:", y2.x == x)
print("witness identity holds:", nw2 @ (u @ x) @ mw2 == y2.x)

# Slice points serialize to JSON and back.
doc = y.to_json()
print("\nslice point JSON:", json.dumps(doc)[:70], "...")
