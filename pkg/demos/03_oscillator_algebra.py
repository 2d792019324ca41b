#!/usr/bin/env python3
"""The deformed oscillator algebra on a finite number basis.

Ladder matrices carry sqrt({n}_q) amplitudes.  The defining relation
lowering@raising - q raising@lowering = 1 closes on the full m-dimensional
space at a root of unity (because {m}_q = 0) and on all but the top state for
real q, where truncation of the infinite space costs one transition.
"""

import numpy as np

from qdeform import RealQ, RootOfUnity, build_ladder, verify_relations

np.set_printoptions(precision=4, suppress=True, linewidth=120)

print("Undeformed limit q = 1, dimension 4:")
raising, lowering = build_ladder(RealQ(1.0), 4)
print(raising.real)
print()

print("Fundamental root of order 6 -- note the zero amplitude out of state 5:")
raising, lowering = build_ladder(RootOfUnity(6, 1), 6)
print(np.abs(raising))
print()

print("Non-primitive root (6, 2) -- amplitudes also vanish out of state 2:")
raising, _ = build_ladder(RootOfUnity(6, 2), 6)
print(np.abs(raising))
print()


def show(param, dim):
    print(f"Relation residuals for {param}, dim {dim}:")
    for record in verify_relations(param, dim):
        window = record.checked_subspace
        print(
            f"  {record.relation:<34} {record.max_abs_residual:.2e}"
            f"   (checked states {window.start}..{window.stop - 1})"
        )
    print()


show(RootOfUnity(6, 1), 6)   # includes the Biedenharn-MacFarlane pair
show(RootOfUnity(6, 2), 6)
show(RealQ(0.5), 12)         # includes the real-q adjoint commutators
show(RealQ(2.5), 30)         # residuals scaled: entries reach ~1e11 here
