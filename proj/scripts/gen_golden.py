#!/usr/bin/env python3
"""Regenerates the golden census fixtures under tests/data/.

Counts are produced by a literal brute-force implementation that shares no
code with the C++ library: borders are found by direct prefix/suffix
comparison, occurrences by direct scanning, and privilege by the recursive
definition over all borders.  Run from the repository root:

    python3 scripts/gen_golden.py
"""

import math
import sys
from functools import lru_cache
from itertools import product
from pathlib import Path


def border_lengths(u):
    return [k for k in range(1, len(u)) if u[:k] == u[-k:]]


def occurrences(w, u):
    m = len(w)
    return sum(1 for i in range(len(u) - m + 1) if u[i:i + m] == w)


@lru_cache(maxsize=None)
def is_privileged(u):
    if len(u) <= 1:
        return True
    return any(occurrences(u[:k], u) == 2 and is_privileged(u[:k])
               for k in border_lengths(u))


def is_closed(u):
    return len(u) >= 2 and any(occurrences(u[:k], u) == 2
                               for k in border_lengths(u))


def census(q, n):
    """Returns (B, C, {m: priv(n, m)}) by full enumeration."""
    b = c = 0
    by_border = {}
    for u in product(range(q), repeat=n):
        if is_closed(u):
            c += 1
        if is_privileged(u):
            b += 1
            if n >= 2:
                m = max(border_lengths(u))
                by_border[m] = by_border.get(m, 0) + 1
    return b, c, by_border


def write_golden(path, q, max_n):
    cols = ["n", "q", "B", "C"] + [f"m{m}" for m in range(1, max_n)]
    lines = [",".join(cols)]
    for n in range(1, max_n + 1):
        b, c, by_border = census(q, n)
        row = [n, q, b, c] + [by_border.get(m, 0) for m in range(1, max_n)]
        lines.append(",".join(str(x) for x in row))
        print(f"q={q} n={n:2d} B={b} C={c} {by_border}")
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path}")


def count_avoiding_brute(q, w, n):
    m = len(w)
    total = 0
    for u in product(range(q), repeat=n):
        if all(u[i:i + m] != w for i in range(n - m + 1)):
            total += 1
    return total


def mu_brute(q, n, m):
    best, wit = -1, None
    for w in product(range(q), repeat=m):
        a = count_avoiding_brute(q, w, n)
        if a > best:
            best, wit = a, w
    return best, wit


def iter_ln(j, x):
    for _ in range(j):
        x = math.log(x)
    return x


def sigma(j, n):
    if j == 1:
        return math.sqrt(math.log(n))
    val = iter_ln(j, n)
    for i in range(2, j):
        val *= math.sqrt(iter_ln(i, n))
    return val


def rho(j, n):
    return sigma(j, n) * math.sqrt(math.log(n)) / math.sqrt(n)


def omega(n, q):
    return (math.log(n) - math.log(math.log(n))) / math.log(q)


def hbar(n, q, kappa):
    return max(1, math.floor(omega(n, q) / kappa))


def bound_family_report(q=2, kappa=2.0):
    print("\n-- up-property-2 crossovers on [N_j, 64] --")
    for j, nj in ((1, 2), (2, 3)):
        ok_from = None
        for start in range(nj, 65):
            if all(rho(j, n) >= rho(j, n + 1) for n in range(start, 65)):
                ok_from = start
                break
        print(f"rho[{j}]: non-increasing from n = {ok_from}")
    print("\n-- up-property-3 first n where q^n rho(n) <= q^(n+1) rho(n+1) fails --")
    for j, nj in ((1, 2), (2, 3)):
        bad = [n for n in range(nj, 65)
               if q ** n * rho(j, n) > q ** (n + 1) * rho(j, n + 1)]
        print(f"rho[{j}]: violations in [N_j,64]: {bad}")
    print("\n-- limit diagnostics, grid 1e6..1e15 --")
    grid = [10 ** 6, 10 ** 9, 10 ** 12, 10 ** 15]
    for j in (1, 2, 3):
        ys = []
        for n in grid:
            hb = hbar(n, q, kappa)
            y = sigma(j, hb) * math.sqrt(math.log(hb)) / sigma(j + 1, n)
            ys.append(y)
        dev = [abs(y - 1) for y in ys]
        mono = all(dev[i] > dev[i + 1] for i in range(len(dev) - 1))
        print(f"j={j}: y={['%.6f' % y for y in ys]} |y-1| decreasing: {mono}")
    n = 10 ** 15
    tech = math.sqrt(math.log(n)) / math.sqrt(hbar(n, q, kappa))
    lim = math.sqrt(kappa * math.log(q))
    print(f"tech ratio at 1e15: {tech:.6f} limit {lim:.6f} "
          f"rel dev {abs(tech - lim) / lim:.4f}")


def main():
    root = Path(__file__).resolve().parent.parent
    data = root / "tests" / "data"
    data.mkdir(parents=True, exist_ok=True)
    write_golden(data / "golden_census_q2.csv", q=2, max_n=14)
    write_golden(data / "golden_census_q3.csv", q=3, max_n=9)

    print("\n-- avoidance spot values --")
    print("A_aa(4) q2 =", count_avoiding_brute(2, (0, 0), 4))
    print("A_ab(4) q2 =", count_avoiding_brute(2, (0, 1), 4))
    print("mu(4,2) q2 =", mu_brute(2, 4, 2))
    print("mu(12,3) q2 =", mu_brute(2, 12, 3))

    print("\n-- empirical alpha on census range --")
    for j, lo in ((1, 2), (2, 3)):
        best = 0.0
        for n in range(lo, 17):
            b, _, _ = census(2, n)
            best = max(best, b / (rho(j, n) * 2 ** n))
        print(f"alpha_hat[{j}] over [{lo},16] = {best:.12g}")

    bound_family_report()


if __name__ == "__main__":
    main()
