"""Degenerating a structure step by step with the six elementary moves.

Closure inclusion has a second, purely combinatorial characterization: M
lies in the closure of the orbit of L exactly when the block multiset of
L is obtainable from that of M by a sequence of six kinds of elementary
moves.  Each move strictly lowers the codimension, so breadth-first
search with that bound decides reachability.
"""

from kcforbits import (
    applicable_instances,
    apply_rule,
    codimension,
    describe_instance,
    finite,
    parse_structure,
    reachable,
    reachable_structures,
)
from kcforbits.core import INFINITY

# All moves available from one structure.
K = parse_structure("J(1;e1) + L(0) + LT(0)")
pool = [finite(1), finite(2), finite(3), INFINITY]
print(f"moves applicable to {K}:")
for inst in applicable_instances(K, pool):
    after = apply_rule(K, inst)
    print(f"  {describe_instance(inst)}")
    print(f"      {K} (codim {codimension(K)}) -> {after} (codim {codimension(after)})")
print()

# A multi-step path found by the search.
M = parse_structure("L(0) + L(0) + LT(0) + LT(0)")  # the zero 2x2 pencil
L = parse_structure("J(2;e1)")
path = reachable(M, L)
print(f"path from {M} (codim {codimension(M)}) to {L} (codim {codimension(L)}):")
state = M
for step, inst in enumerate(path, start=1):
    state = apply_rule(state, inst)
    print(f"  step {step}: {describe_instance(inst)}")
    print(f"      now at {state} (codim {codimension(state)})")
print()

# Reversing the direction is impossible: codimension only decreases.
print("reverse direction reachable?", reachable(L, M) is not None)
print()

# Everything reachable from the zero 1x2 pencil.
Z = parse_structure("L(0) + L(0) + LT(0)")
reached, stats = reachable_structures(Z)
print(f"all structures reachable from {Z} "
      f"({stats['visited']} found in {stats['expansions']} expansions):")
for K in sorted(reached, key=codimension):
    print(f"  codim {codimension(K):2d}  {K}")
