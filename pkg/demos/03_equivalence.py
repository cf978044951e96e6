"""Deciding LOCC and SLOCC equivalence, with witnesses and certificates.

Two symmetric states are SLOCC-equivalent exactly when a Moebius map carries
one point multiset onto the other, and LOCC-equivalent when that map is a
sphere rotation.  The degeneracy configuration (multiplicity partition of
coinciding points) is the coarsest of the three classifications.
"""

import math

from majsphere import (
    RootMultiset,
    SymmetricState,
    apply_symmetric,
    cocircularity_witness,
    degeneracy_configuration,
    dicke,
    fidelity,
    locc_equivalent,
    majorana_roots,
    slocc_equivalent,
    state_from_roots,
)
from majsphere.canonical import OMEGA

ghz = SymmetricState([1, 0, 0, 1])

print("== GHZ vs a rotated triangle ==")
rotated = SymmetricState([1.0, 0.0, math.sqrt(3.0), 0.0])
witness = locc_equivalent(ghz, rotated)
print(f"LOCC witness found: {witness is not None} (kind {witness.kind})")
moved = apply_symmetric(witness.map, ghz)
print(f"witness reproduces the target with overlap {fidelity(moved, rotated):.12f}\n")

print("== GHZ vs an unbalanced cousin ==")
unbalanced = SymmetricState([1, 0, 0, 2])
print(f"LOCC: {locc_equivalent(ghz, unbalanced)}")
print(f"SLOCC witness found: {slocc_equivalent(ghz, unbalanced) is not None}")
print("(stretching the ring needs a non-unitary operation)\n")

print("== GHZ vs W: different degeneracy configurations ==")
for name, s in (("GHZ", ghz), ("W", dicke(3, 1))):
    dc, _ = degeneracy_configuration(majorana_roots(s))
    print(f"  {name}: partition {dc.partition}, diversity {dc.diversity}")
print(f"SLOCC verdict: {slocc_equivalent(ghz, dicke(3, 1))}\n")

print("== Circle census certificate for five-point geometries ==")
pyramid = RootMultiset(5, (1 + 0j, 1j, -1 + 0j, -1j), 1)  # apex + square ring
bipyramid = RootMultiset(5, (0j, 1 + 0j, OMEGA, OMEGA**2), 1)  # poles + triangle
pair = cocircularity_witness(pyramid, bipyramid)
sig1, sig2 = pair
print(f"square pyramid on-circle counts:     {sig1.on_circle_counts()}")
print(f"trigonal bipyramid on-circle counts: {sig2.on_circle_counts()}")
print("the pyramid has a circle through 4 points, the bipyramid does not,")
print("so no Moebius map can relate them (circles map to circles)")
verdict = slocc_equivalent(state_from_roots(pyramid), state_from_roots(bipyramid))
print(f"exhaustive decider agrees: {verdict}")
