"""Time a sigma_2 sweep of [1, N] and check it against sum_d d^2 floor(N/d)."""

import argparse
import time

from sigmalucas import arith


def sum_sigma2(N: int) -> int:
    sq = lambda n: n * (n + 1) * (2 * n + 1) // 6  # noqa: E731
    total, d = 0, 1
    while d <= N:
        q = N // d
        e = N // q
        total += q * (sq(e) - sq(d - 1))
        d = e + 1
    return total


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=10**7)
    ap.add_argument("--block-size", type=int, default=None)
    args = ap.parse_args()
    size = args.block_size or arith.default_block_size()
    t0 = time.perf_counter()
    total = 0
    for lo, hi in arith.block_ranges(1, args.n + 1, size):
        total += sum(arith.sigma2_segment(lo, hi, block_size=size))
    elapsed = time.perf_counter() - t0
    ok = total == sum_sigma2(args.n)
    print(f"N={args.n} block={size} time={elapsed:.2f}s checksum={'ok' if ok else 'MISMATCH'}")


if __name__ == "__main__":
    main()
