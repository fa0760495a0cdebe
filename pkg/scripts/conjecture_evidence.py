"""Numbers n with two distinct prime factors and n | sigma_3(n), up to a bound."""

import argparse
import time

from sigmalucas import sigma3


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pq-bound", type=int, default=10**7, help="bound for the p * q^alpha scan")
    ap.add_argument("--bound", type=int, default=10**6, help="bound for the unrestricted two-prime scan")
    ap.add_argument("--no-restrict-q", action="store_true")
    args = ap.parse_args()

    t0 = time.perf_counter()
    hits = sigma3.scan_pq_alpha(args.pq_bound, restrict_q=not args.no_restrict_q)
    print(f"p*q^alpha <= {args.pq_bound}: {time.perf_counter() - t0:.2f}s")
    for h in hits:
        print(f"  n={h.n} p={h.p} q={h.q} alpha={h.alpha} even_perfect={h.even_perfect}")

    t0 = time.perf_counter()
    found = sigma3.conjecture_scan(args.bound)
    print(f"omega(n) = 2, n <= {args.bound}: {time.perf_counter() - t0:.2f}s")
    for n, perfect in found:
        print(f"  n={n} even_perfect={perfect}")
    odd = [n for n, perfect in found if not perfect]
    print("counterexamples:", odd if odd else "none")


if __name__ == "__main__":
    main()
