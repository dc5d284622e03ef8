"""
Pell's equation from f(1), g(1) and f(i), g(i)
==============================================

Evaluating 4 m_p = f^2 - p* g^2 at x = 1 gives 4p = f(1)^2 - p* g(1)^2,
which becomes a solution of a^2 - p b^2 = 1 after a little parity work
(p = 1 mod 4). For p = 3 mod 4 we evaluate at x = i instead.

The continued-fraction solver is used to check that each answer is a
power of the fundamental solution.
"""

from sympy import primerange

from cyclopell import classify, solve_cf, solve_dirichlet

print(f"{'p':>4} {'case':>6} {'f(1)':>6} {'g(1)':>6} {'a':>14} {'b':>12}  power")
for p in primerange(5, 110):
    sol, trace = solve_dirichlet(int(p))
    n = classify(sol, solve_cf(int(p)))
    print(f"{p:>4} {trace.case:>6} {trace.f1:>6} {trace.g1:>6} {sol.a:>14} {sol.b:>12}  {n}")

# The two routes give the same group, but not always the same generator:
for p in (37, 79, 101):
    sol, _ = solve_dirichlet(p)
    fund = solve_cf(p)
    print(f"p={p}: cyclotomic {sol.as_tuple()} = fundamental {fund.as_tuple()} ^ {classify(sol, fund)}")
