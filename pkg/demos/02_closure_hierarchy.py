"""The orbit-closure order and its Hasse diagram.

Whether one orbit lies in the closure of another is decided by three
weak majorizations between the Weyr characteristics of the structures,
shifted by the rank drop h.  Building the full order over all canonical
structures of one size gives the stratification hierarchy of the pencil
space.
"""

from kcforbits import (
    build_closure_graph,
    codimension,
    degenerates_to,
    enumerate_structures,
    majorization_report,
    parse_structure,
)

# A single decision, with its partial-sum witnesses.
L = parse_structure("L(1) + L(1)")
M = parse_structure("L(0) + L(2)")
report = majorization_report(L, M)
print(f"does {M} lie in the closure of the orbit of {L}?")
print(f"  h = {report['h']}")
for cond in report["conditions"]:
    sums = ", ".join(f"j={row['j']}: {row['lhs']}<={row['rhs']}" for row in cond["partial_sums"])
    print(f"  {cond['condition']}: lower={cond['lower']} upper={cond['upper']} -> "
          f"{'ok' if cond['ok'] else 'FAILS'} {sums}")
print(f"  answer: {report['in_closure']}")
print(f"  reversed: {degenerates_to(M, L)}")
print()

# The whole hierarchy for 2x2 pencils, as covering edges.
nodes = enumerate_structures(2, 2)
graph = build_closure_graph(nodes)
print(f"closure order on all {len(nodes)} canonical 2x2 structures:")
for i, j in graph.edges:
    a, b = graph.nodes[i], graph.nodes[j]
    print(f"  {a} (codim {codimension(a)})  -->  {b} (codim {codimension(b)})")
print()
print("same hierarchy in DOT form (feed to graphviz):")
print(graph.to_dot())
