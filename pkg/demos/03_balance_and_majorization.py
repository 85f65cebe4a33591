"""Why optimal designs are balanced: majorization in action.

Among designs with the same number of batches, cost only improves as
sizes even out.  The order behind that statement is majorization:
design A is majorized by design B when A's largest batches are never
ahead of B's in cumulative size.  The cost sum of q**-n is Schur
convex, so majorized (more balanced) designs never cost more, and the
fully balanced split is the floor of its batch count.
"""

import math

import numpy as np

from pooldesign import balanced_partition, expected_waiting_time, is_majorized_by


def main():
    q = 0.95
    demand, groups = 60, 4

    print(f"N = {demand} in {groups} batches at q = {q}: evening out only helps")
    chain = [(15, 15, 15, 15), (12, 14, 16, 18), (10, 12, 18, 20), (3, 9, 18, 30)]
    for sizes in chain:
        cost = expected_waiting_time(sizes, q)
        print(f"  {str(sizes):<22} expected tests {cost:9.4f}")

    print("\nMajorization certifies the ordering pairwise:")
    for a, b in zip(chain, chain[1:]):
        print(f"  {a} below {b}: {is_majorized_by(a, b)}")

    balanced = balanced_partition(demand, groups)
    print(f"\nbalanced_partition({demand}, {groups}) = {balanced.sizes}")

    # random same-count designs never undercut the balanced one
    rng = np.random.default_rng(7)
    best_random = math.inf
    for _ in range(2000):
        extra = rng.multinomial(demand - groups, np.full(groups, 1.0 / groups))
        sizes = tuple(int(x) + 1 for x in extra)
        best_random = min(best_random, expected_waiting_time(sizes, q))
    balanced_cost = expected_waiting_time(balanced, q)
    print(f"balanced cost {balanced_cost:.4f} vs best of 2000 random: {best_random:.4f}")

    # a clean floor for any batch count: I * q^(-N/I), reached only
    # when N/I is an integer
    print(f"\nPer-count floor I * q^(-N/I) for N = {demand}:")
    print(f"{'I':>3} {'floor':>10} {'balanced':>10}")
    for count in (1, 2, 3, 4, 5, 6, 7, 8, 10):
        floor = count * math.pow(q, -demand / count)
        cost = expected_waiting_time(balanced_partition(demand, count), q)
        gap = "  = floor" if abs(cost - floor) < 1e-9 else ""
        print(f"{count:>3} {floor:>10.4f} {cost:>10.4f}{gap}")
    print("(the floor is attained exactly when I divides N)")


if __name__ == "__main__":
    main()
