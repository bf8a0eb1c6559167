# Partition bookkeeping: dominance order, the coweight alpha_mu, and the
# two quiver dimension tables attached to a partition.

from slicelab import (Partition, alpha_mu, dominance_leq, equiv_quiver,
                      mv_quiver)

N = 4
parts = list(Partition.all_partitions(N))
print(f"partitions of {N}:", [p.parts for p in parts])

# Dominance order: partial sums compare entrywise.  The column partition
# (1,..,1) is the unique minimum and the row partition (N) the maximum.
print("\ndominance relations among partitions of 4:")
for a in parts:
    below = [b.parts for b in parts if b != a and dominance_leq(b, a)]
    print(f"  {a.parts} covers-or-dominates: {below}")

# (3,1,1,1) and (2,2,2) are the classic incomparable pair at N = 6.
a, b = Partition((3, 1, 1, 1)), Partition((2, 2, 2))
print("\nincomparable at N=6:", not dominance_leq(a, b),
      "and", not dominance_leq(b, a))

# alpha_mu: the length-2N vector (2,...,2,0,...,0) minus the partition
# padded into the first N slots.
for mu in (Partition((2, 1)), Partition((1, 1)), Partition((4,))):
    print(f"\nmu = {mu.parts} (N = {mu.N})")
    print("  alpha_mu       :", alpha_mu(mu, mu.N))
    q = mv_quiver(mu)
    print("  mv quiver      : dimV =", q.dimV, " dimW =", q.dimW)
    q2 = equiv_quiver(mu)
    print("  equiv quiver   : dimV =", q2.dimV, " dimW =", q2.dimW)

# The mv table stores ascending tail sums of the parts: dimV entry i is
# the total of the i smallest parts, capped by the framing dimW = N at
# the last node.  The equivariant table appends the staircase N..1 and
# drops the framing.
mu = Partition((4, 3, 1, 1))
print("\nmu =", mu.parts, "-> mv dimV =", mv_quiver(mu).dimV,
      "(0, 1, 1+1, 1+1+3)")
