#!/usr/bin/env python3
"""Brute force against closed form: scan every matrix and recount.

The oracle enumerates all p^(n*n) matrices over a small prime field and
tests the defining conditions directly, sharing nothing with the formulas.
This script crosschecks both spectrum counts on small fields and then
verifies the orbit-stabilizer picture behind the class-size formula.
"""

import itertools

from eigencount import class_size_poly, count_e_poly, count_m_poly, gl_order_poly, oracle

print("=== formula vs exhaustive scan ===")
for n, p in [(2, 2), (2, 3), (3, 2)]:
    field = oracle.PrimeField(p)
    for size in range(1, min(n + 1, p) + 1):
        for alphas in itertools.combinations(range(p), size):
            m_scan = oracle.count_m(n, field, alphas)
            e_scan = oracle.count_e(n, field, alphas)
            m_formula = count_m_poly(n, size)(p)
            e_formula = count_e_poly(n, size)(p)
            tag = "ok" if (m_scan.count, e_scan.count) == (m_formula, e_formula) else "MISMATCH"
            print(
                f"n={n} p={p} spectrum={set(alphas)}: "
                f"inside {m_scan.count}={m_formula}, exact {e_scan.count}={e_formula} [{tag}]"
            )

print()
print("=== why the class size is a ratio of group orders ===")
F3 = oracle.PrimeField(3)
for parts in [(2,), (1, 1), (1, 2), (1, 1, 1)]:
    n = sum(parts)
    orbit = oracle.orbit_size(parts, F3)
    stab = oracle.centralizer_size(parts, F3)
    gl = gl_order_poly(n)(3)
    print(
        f"multiplicities {parts}: orbit {orbit} x centralizer {stab} = {orbit * stab} "
        f"= |GL_{n}(F_3)| = {gl}; formula {class_size_poly(parts)(3)}"
    )

print()
print("=== the six rank-one idempotents of M_2(F_2) ===")
F2 = oracle.PrimeField(2)
rep = oracle.block_diag_rep((1, 1), F2)  # diag(0, 1)
seen = set()
for index in range(2**4):
    g = oracle.FqMatrix.from_index(F2, 2, index)
    try:
        inv = g.inverse()
    except ZeroDivisionError:
        continue
    seen.add(g @ rep @ inv)
for m in sorted(seen, key=lambda m: m.entries):
    print(" ", m.rows())
print("orbit size:", len(seen))
