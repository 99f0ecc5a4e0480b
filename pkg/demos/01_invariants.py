"""Eigenstructure invariants of a Kronecker structure.

A structure is a multiset of canonical blocks: Jordan blocks J(k;mu) at
finite or infinite eigenvalues, right singular blocks L(k) of size
k x (k+1), and left singular blocks LT(k) of size (k+1) x k.  From the
block data alone we get the pencil size, the rank, the Weyr
characteristics, and the codimension of the orbit of any pencil that has
this structure.
"""

from kcforbits import (
    codimension,
    eigenvalues,
    orbit_dimension,
    parse_structure,
    rank_of,
    size_of,
    weyr_jordan,
    weyr_singular,
)

samples = [
    "L(0) + LT(0)",            # the 1x1 zero pencil
    "J(1;e1)",                 # one simple finite eigenvalue
    "L(1)",                    # generic 1x2 pencil: a dense orbit
    "J(3;e1)",                 # a single 3x3 Jordan block
    "J(2;e1) + J(1;e1)",       # same eigenvalue, more blocks: smaller orbit
    "J(2;e1) + J(1;inf) + L(2) + LT(0)",
]

for text in samples:
    K = parse_structure(text)
    m, n = size_of(K)
    print(f"{text}")
    print(f"  size  = {m}x{n}, rank = {rank_of(K)}")
    print(f"  r     = {weyr_singular(K, 'right')}   (right singular Weyr data)")
    print(f"  l     = {weyr_singular(K, 'left')}   (left singular Weyr data)")
    for mu in eigenvalues(K):
        print(f"  W({mu}) = {weyr_jordan(K, mu)}")
    print(f"  codim = {codimension(K)}, orbit dimension = {orbit_dimension(K)} "
          f"of {2 * m * n} ambient")
    print()

# The three Jordan structures of total size 3 at one eigenvalue form a
# chain: splitting blocks makes the orbit smaller.
chain = ["J(3;e1)", "J(2;e1) + J(1;e1)", "J(1;e1) + J(1;e1) + J(1;e1)"]
print("codimension chain:", " < ".join(str(codimension(parse_structure(t))) for t in chain))
