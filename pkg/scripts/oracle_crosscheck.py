"""Compare sieve solutions of sigma_2(n) - n^2 = An + B with family and semiprime output.

For every (A, B) coming from a theorem shape with P <= --p-max and m <= --m-max,
prints hit counts and whether the two-prime hits equal family | semiprime.
"""

import argparse
import time

from sigmalucas import oracle, solver


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=10**7)
    ap.add_argument("--p-max", type=int, default=3)
    ap.add_argument("--m-max", type=int, default=3)
    args = ap.parse_args()
    N = args.n
    t0 = time.perf_counter()
    excess = oracle.sigma2_minus_square(N)
    print(f"sieve to {N}: {time.perf_counter() - t0:.2f}s")
    by_instance: dict[tuple[int, int], list] = {}
    for pat in oracle.small_patterns(args.p_max, args.m_max):
        by_instance.setdefault(pat.coefficients(), []).append(pat)
    print("A\tB\tpatterns\thits\ttwo_prime\tfamily\tsemiprime\tbound\tagree")
    bad = 0
    for (A, B), pats in sorted(by_instance.items()):
        inst = solver.EquationInstance(A, B)
        labels = ",".join(p.label() for p in pats)
        if inst.excluded:
            print(f"{A}\t{B}\t{labels}\texcluded")
            continue
        hits = oracle.scan_solutions(excess, inst)
        two_prime = {n for n in hits if oracle.distinct_prime_pair(n)}
        fam = set()
        for pat in pats:
            fam |= {f.n for f in solver.family_solutions(pat, 10**6, n_max=N)}
        semis = {p * q for p, q in solver.semiprime_search(inst, N // 2) if p * q <= N}
        agree = two_prime == fam | semis
        bad += not agree
        print(f"{A}\t{B}\t{labels}\t{len(hits)}\t{len(two_prime)}\t{len(fam)}\t{len(semis)}\t{inst.sporadic_bound}\t{agree}")
    print(f"total {time.perf_counter() - t0:.2f}s, {bad} disagreements")


if __name__ == "__main__":
    main()
