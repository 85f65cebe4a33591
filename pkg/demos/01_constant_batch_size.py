"""How large should a batch be when every batch has the same size?

An unlimited stream of items is screened in batches of n: one test
clears the whole batch with probability q**n, and a failed batch is
replaced by a fresh one.  Throughput is mu(n, q) = n * q**n accepted
items per test, so the best constant size balances two pressures:
bigger batches accept more items per clean test, but pass less often.
"""

from pooldesign import mu, optimal_constant_size, per_item_cost


def show_throughput_curve(q):
    pick = optimal_constant_size(q)
    print(f"\nq = {q}: throughput n * q^n around the optimum")
    lo = max(1, pick.n_star_low - 2)
    for n in range(lo, pick.n_star_low + 3):
        marker = " <- optimal" if n in (pick.n_star_low, pick.n_star_high) else ""
        print(f"  n = {n:3d}  mu = {mu(n, q):.6f}  tests/item = {per_item_cost(n, q):.4f}{marker}")


def main():
    print("Optimal constant batch size as quality improves")
    print(f"{'q':>6} {'best n':>8} {'items/test':>12} {'tests/item':>12}")
    for q in (0.3, 0.5, 0.6, 0.75, 0.9, 0.95, 0.99, 0.999):
        pick = optimal_constant_size(q)
        label = str(pick.n_star_low)
        if pick.n_star_high is not None:
            label += f" or {pick.n_star_high}"
        print(
            f"{q:>6} {label:>8} {pick.items_per_test:>12.4f}"
            f" {1 / pick.items_per_test:>12.4f}"
        )

    print("\nBelow q = 1/2 pooling never helps: one bad item spoils batches")
    print("faster than shared tests save work, so items are tested alone.")
    print("At exactly q = 1/2 singletons and pairs yield the same rate:")
    print(f"  mu(1, 0.5) = {mu(1, 0.5)}   mu(2, 0.5) = {mu(2, 0.5)}")

    # ties also appear at high quality whenever q = n / (n + 1)
    show_throughput_curve(0.9)
    show_throughput_curve(0.99)
    print("\nq = 0.99 is exactly 99/100, so sizes 99 and 100 tie to the bit:")
    print(f"  mu(99, 0.99) == mu(100, 0.99) -> {mu(99, 0.99) == mu(100, 0.99)}")


if __name__ == "__main__":
    main()
