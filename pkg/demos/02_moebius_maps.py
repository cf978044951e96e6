"""Moebius maps: evaluation, interpolation, classification, factorization.

Every invertible single-qubit operation applied identically to all qubits
moves the state's sphere points by a Moebius transformation.  The maps that
are not rotations factor uniquely into a rotation and an affine stretch
z -> A*z + B, which reads as a rigid translation of the sphere over the
plane: A scales the north-pole height, B displaces it horizontally.
"""

import numpy as np

from majsphere import (
    INFINITY,
    AffineMap,
    MoebiusMap,
    classify_map,
    cross_ratio,
    decompose_affine,
    from_three_points,
    translation_view,
)

print("== The halving map z -> z/2 ==")
halving = MoebiusMap(1.0, 0.0, 0.0, 2.0)
print(f"f(1) = {halving(1).value}")
mc = classify_map(halving)
print(f"classification: {mc.kind}, fixed points {mc.fixed_points}")
print("(the poles attract and repel; every other point slides south)\n")

print("== Interpolation through three points ==")
m = from_three_points(0, 1, INFINITY, 2, 3, 4)
for v, w in ((0, 2), (1, 3), (INFINITY, 4)):
    print(f"  {v} -> {m(v).value:.6f} (target {w})")
print()

print("== Cross-ratio: the Moebius invariant of four points ==")
pts = (0.3 + 0.1j, 1.5, -2j, 4 + 1j)
before = cross_ratio(*pts).value
g = MoebiusMap(1.2, 0.3 - 1j, 0.5j, 0.8)
after = cross_ratio(*(g(p) for p in pts)).value
print(f"before {before:.12f}")
print(f"after  {after:.12f}\n")

print("== Factorization into rotation x affine ==")
rng = np.random.default_rng(0)
mat = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
m = MoebiusMap(*mat.flatten())
dec = decompose_affine(m)
print(f"A = {dec.affine.A:.6f}, B = {dec.affine.B:.6f}, lambda = {dec.lam:.6f}")
aff = np.array([[dec.affine.A, dec.affine.B], [0, 1]], dtype=complex)
err = np.max(np.abs(dec.rotation.matrix @ aff - dec.lam * m.matrix))
print(f"reconstruction error: {err:.2e}\n")

print("== Sphere-translation reading ==")
print("a sphere with north pole 2 above the plane, lifted to height 5:")
aff = AffineMap.from_translation(2.0, 5.0, 0.0)
print(f"  (A, B) = ({aff.A}, {aff.B})")
print("the same lift displaced horizontally by 5 - 5i:")
aff = AffineMap.from_translation(2.0, 5.0, 5.0 - 5.0j)
h2, disp = translation_view(aff, 2.0)
print(f"  (A, B) = ({aff.A}, {aff.B}); new height {h2}, displacement {disp}")
