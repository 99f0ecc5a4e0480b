"""Exhaustive verification of the codimension monotonicity.

Closure inclusion can only lower the orbit dimension: if M is in the
closure of the orbit of L then codim(L) <= codim(M), with equality
exactly when the orbits coincide.  At desk scale this is checkable
outright: enumerate every canonical structure of a size, embed all
eigenvalue-coincidence patterns into a shared label pool, and test every
ordered pair three ways (majorizations, rewrite-rule reachability, and
the exact tangent-space oracle).
"""

from kcforbits import (
    cross_validate_characterizations,
    verify_codimension_monotonicity,
    verify_formula_identities,
)

for m, n in [(2, 2), (2, 3), (3, 3)]:
    print(f"== size {m}x{n} ==")
    for name, suite in (
        ("monotonicity", verify_codimension_monotonicity),
        ("rule cross-validation", cross_validate_characterizations),
        ("formula identities", verify_formula_identities),
    ):
        report = suite(m, n)
        print(f"-- {name} --")
        print(report.summary_text())
    print()
print("Anything above desk scale is guarded: the suites raise rather than truncate.")
