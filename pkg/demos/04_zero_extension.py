"""
Minimum 0-extension with a factor-2 guarantee
=============================================

Place facilities on vertices, paying for distances to fixed clients and
between facilities. On swm graphs, solving the relaxed problem on G* and
rounding each chosen set to its gate from an anchor costs at most twice the
optimum.
"""
import random
from fractions import Fraction

from wmgraphs import ZeroExtInstance, approx2, solve_exact
from wmgraphs import generators as gen

# The triangle: three facilities each pulled towards a different corner and
# towards each other. The relaxation puts all of them at the centre of the
# star G*, a point the graph itself does not have.
k3 = gen.complete(3)
inst = ZeroExtInstance(3, {(i, i): 1 for i in range(3)}, {(0, 1): 1, (0, 2): 1, (1, 2): 1})
exact = solve_exact(k3, inst)
approx = approx2(k3, inst)
print("exact", exact.cost, exact.assignment)
print("approx", approx.cost, approx.assignment, "lower bound", approx.bound)

# A batch of random instances.
rng = random.Random(0)
ratios = []
for seed in range(60):
    g = gen.random_swm(seed, 12)
    n = rng.randint(2, 3)
    b = {(i, rng.randrange(g.n)): Fraction(rng.randint(1, 5), rng.randint(1, 3))
         for i in range(n) for _ in range(3)}
    c = {(i, j): Fraction(rng.randint(0, 9), 2) for i in range(n) for j in range(i + 1, n)}
    inst = ZeroExtInstance(n, b, c)
    nu = solve_exact(g, inst).cost
    sol = approx2(g, inst)
    assert sol.bound <= nu <= sol.cost <= 2 * sol.bound
    if nu:
        ratios.append(sol.cost / nu)
print(f"{len(ratios)} instances, worst ratio {float(max(ratios)):.3f}, "
      f"exact in {sum(r == 1 for r in ratios)} of them")
