"""Evaluate fractional logistic growth curves and compare orders.

All curves start at w(0) = 1/2 and saturate toward the carrying capacity;
lowering the order beta gives a faster initial rise (the t^beta cusp) and a
heavier memory of the early growth. At beta = 1 the series reproduces the
classical closed form 1/(1 + exp(-t/m)) to near machine precision inside
its disk.
"""

import math

import numpy as np

from felog import SeriesSolution, compare_classical

orders = (0.5, 0.7, 1.0)
solutions = {beta: SeriesSolution.build(beta, m=1.0, n_terms=64) for beta in orders}

t = np.linspace(0.0, 1.6, 9)
header = "  t   " + "".join(f"   w(beta={b})" for b in orders)
print(header)
for ti in t:
    row = f"{ti:5.2f} "
    for beta in orders:
        row += f"{solutions[beta](float(ti)):13.8f}"
    print(row)

# every evaluation also reports a truncation-tail estimate and whether the
# point is inside the trusted domain
res = solutions[0.7].evaluate(np.array([0.5, 2.0, 5.0]))
print("\nt = [0.5, 2.0, 5.0] at beta=0.7:")
print("  w          =", np.round(res.w, 8))
print("  tail bound =", res.tail_bound)
print("  in domain  =", res.in_domain)
print("  (the empirical radius here is {:.4f})".format(solutions[0.7].domain_edge))

# classical degeneration: max deviation from the closed form over [0, 2]
for m in (1.0, 2.0):
    dev = compare_classical(m, np.linspace(0.0, 2.0, 41))
    closed = 1.0 / (1.0 + math.exp(-2.0 / m))
    print(f"\nbeta=1, m={m}: max |series - closed| on [0,2] = {dev:.2e} "
          f"(closed form at t=2 is {closed:.8f})")
