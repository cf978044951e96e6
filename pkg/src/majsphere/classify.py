"""Degeneracy configurations and the LOCC/SLOCC equivalence deciders.

Two symmetric states are SLOCC-equivalent exactly when some Moebius map
carries the sphere points of one onto the other (multiplicities included);
they are LOCC-equivalent when that map can be chosen as a sphere rotation.
Since a Moebius map is fixed by its action on three points, the deciders
enumerate candidate maps built from triples of distinct point sites and
verify them against the full clustered multiset, which makes the decision
exhaustive.  The degeneracy configuration (the sorted multiplicity
partition) is invariant under all of these operations and provides the
cheap first filter.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .moebius import (
    MoebiusMap,
    from_three_points,
    is_projective_unitary,
)
from .plane import (
    INFINITY,
    TAU,
    ExtendedComplex,
    chordal_distance,
    point_xyz,
    single_linkage,
    sphere_from_xyz,
    from_sphere,
)
from .symstate import RootMultiset, SymmetricState, majorana_roots

#: default chordal tolerance for clustering and multiset matching
DEFAULT_TOL = 1e-7


@dataclass(frozen=True)
class DegeneracyConfiguration:
    """Sorted multiplicity partition of coinciding sphere points."""

    partition: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.partition)
        if len(parts) < 1 or any(p < 1 for p in parts):
            raise DomainError("partition entries must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError("partition must be sorted in descending order")
        object.__setattr__(self, "partition", parts)

    @property
    def diversity(self) -> int:
        return len(self.partition)

    @property
    def n(self) -> int:
        return sum(self.partition)


@dataclass(frozen=True)
class ClusteredRoots:
    """Distinct point sites of a root multiset with their multiplicities."""

    sites: tuple[tuple[ExtendedComplex, int], ...]

    @property
    def n(self) -> int:
        return sum(mult for _, mult in self.sites)

    def points(self) -> tuple[ExtendedComplex, ...]:
        return tuple(site for site, _ in self.sites)

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(mult for _, mult in self.sites)


@dataclass(frozen=True)
class EquivalenceWitness:
    """A Moebius map carrying one state's points onto another's; ``kind`` is
    "locc" when the map is a sphere rotation, else "slocc"."""

    map: MoebiusMap
    kind: str


def _site_sort_key(site: ExtendedComplex):
    if site.is_infinite:
        return (1, 0.0, 0.0)
    return (0, abs(site.value), cmath.phase(site.value) % TAU)


def _cluster_representative(members: list[ExtendedComplex]) -> ExtendedComplex:
    if any(p.is_infinite for p in members):
        return INFINITY
    first = members[0]
    if all(p == first for p in members):
        return first
    xs = [point_xyz(p) for p in members]
    cx = sum(v[0] for v in xs) / len(xs)
    cy = sum(v[1] for v in xs) / len(xs)
    cz = sum(v[2] for v in xs) / len(xs)
    if math.sqrt(cx * cx + cy * cy + cz * cz) < 1e-9:
        return first
    return from_sphere(sphere_from_xyz(cx, cy, cz))


def degeneracy_configuration(
    r: RootMultiset, tol: float = DEFAULT_TOL
) -> tuple[DegeneracyConfiguration, ClusteredRoots]:
    """Cluster the root multiset into distinct sites (single linkage in the
    chordal metric) and read off the multiplicity partition."""
    if not (tol > 0.0):
        raise DomainError("clustering tolerance must be positive")
    points = list(r.points())
    groups = single_linkage(
        len(points), lambda i, j: chordal_distance(points[i], points[j]), tol
    )
    sites = []
    for group in groups:
        members = [points[i] for i in group]
        sites.append((_cluster_representative(members), len(group)))
    sites.sort(key=lambda pair: _site_sort_key(pair[0]))
    partition = tuple(sorted((mult for _, mult in sites), reverse=True))
    return DegeneracyConfiguration(partition), ClusteredRoots(tuple(sites))


# --- witness construction helpers -------------------------------------------


def _rotation_to_north(p: ExtendedComplex) -> MoebiusMap:
    """A sphere rotation taking the given point to infinity (the north pole)."""
    if p.is_infinite:
        return MoebiusMap.identity()
    z = p.value
    beta = 1.0 / math.hypot(1.0, abs(z))
    alpha = -beta * z.conjugate()
    return MoebiusMap(alpha, -beta, beta, alpha.conjugate())


def _rotation_between(p: ExtendedComplex, q: ExtendedComplex) -> MoebiusMap:
    return _rotation_to_north(q).inverse().compose(_rotation_to_north(p))


def _standard_position(
    anchor: ExtendedComplex, other: ExtendedComplex
) -> tuple[MoebiusMap, float]:
    """Rotation sending anchor to the north pole and the other site onto the
    nonnegative real half-plane; returns it with the other site's radius."""
    north = _rotation_to_north(anchor)
    image = north(other)
    if image.is_infinite:
        raise DomainError("coincident sites cannot be separated")
    w = image.value
    if abs(w) == 0.0:
        return north, 0.0
    phase = cmath.exp(-1j * cmath.phase(w))
    spin = MoebiusMap(phase, 0.0, 0.0, 1.0)
    return spin.compose(north), abs(w)


def _two_site_map(anchor: ExtendedComplex, other: ExtendedComplex) -> MoebiusMap:
    """Any Moebius map sending anchor to infinity and the other site to 0."""
    if anchor.is_infinite:
        return MoebiusMap.translation(-other.value)
    if other.is_infinite:
        return MoebiusMap(0.0, 1.0, 1.0, -anchor.value)
    return MoebiusMap(1.0, -other.value, 1.0, -anchor.value)


def _maps_multiset(
    m: MoebiusMap, sites1: ClusteredRoots, sites2: ClusteredRoots, tol: float
) -> bool:
    """Greedy nearest-neighbor check that m carries sites1 bijectively onto
    sites2 with matching multiplicities."""
    used = [False] * len(sites2.sites)
    for site, mult in sites1.sites:
        image = m(site)
        best = -1
        best_dist = math.inf
        for j, (target, _) in enumerate(sites2.sites):
            if used[j]:
                continue
            d = chordal_distance(image, target)
            if d < best_dist:
                best, best_dist = j, d
        if best < 0 or best_dist > tol or sites2.sites[best][1] != mult:
            return False
        used[best] = True
    return True


def _candidate_maps(sites1: ClusteredRoots, sites2: ClusteredRoots):
    """All maps built from multiplicity-compatible ordered site triples, in
    serialized site order (which makes the accepted witness deterministic)."""
    idx1 = range(len(sites1.sites))
    idx2 = range(len(sites2.sites))
    for t1 in itertools.permutations(idx1, 3):
        mults1 = tuple(sites1.sites[i][1] for i in t1)
        source = tuple(sites1.sites[i][0] for i in t1)
        for t2 in itertools.permutations(idx2, 3):
            if tuple(sites2.sites[j][1] for j in t2) != mults1:
                continue
            target = tuple(sites2.sites[j][0] for j in t2)
            try:
                yield from_three_points(*source, *target)
            except DomainError:
                continue


def _low_diversity_witness(
    sites1: ClusteredRoots, sites2: ClusteredRoots, tol: float, unitary: bool
) -> Optional[MoebiusMap]:
    d = len(sites1.sites)
    if d == 1:
        return _rotation_between(sites1.sites[0][0], sites2.sites[0][0])
    # d == 2: anchor the higher-multiplicity site on both sides
    def ordered(sites: ClusteredRoots):
        pairs = sorted(sites.sites, key=lambda p: -p[1])
        return pairs[0][0], pairs[1][0]

    a1, o1 = ordered(sites1)
    a2, o2 = ordered(sites2)
    if unitary:
        # rotations exist exactly when the site separations agree; the
        # standard position fixes the residual spin about the anchor axis
        m1, r1 = _standard_position(a1, o1)
        m2, r2 = _standard_position(a2, o2)
        if chordal_distance(ExtendedComplex(r1), ExtendedComplex(r2)) > tol:
            return None
        return m2.inverse().compose(m1)
    m1 = _two_site_map(a1, o1)
    m2 = _two_site_map(a2, o2)
    return m2.inverse().compose(m1)


def _decide(
    s1: SymmetricState, s2: SymmetricState, tol: float, unitary: bool
) -> Optional[EquivalenceWitness]:
    if s1.n != s2.n:
        raise DomainError("states must have the same qubit count")
    kind = "locc" if unitary else "slocc"
    dc1, sites1 = degeneracy_configuration(majorana_roots(s1), tol)
    dc2, sites2 = degeneracy_configuration(majorana_roots(s2), tol)
    if dc1.partition != dc2.partition:
        return None
    d = dc1.diversity
    if d <= 2:
        witness = _low_diversity_witness(sites1, sites2, tol, unitary)
        return None if witness is None else EquivalenceWitness(witness, kind)
    if d == 3 and not unitary:
        # a single class: any multiplicity-respecting site assignment works
        for candidate in _candidate_maps(sites1, sites2):
            return EquivalenceWitness(candidate, kind)
        return None
    for candidate in _candidate_maps(sites1, sites2):
        if unitary and is_projective_unitary(candidate, tol) is None:
            continue
        if _maps_multiset(candidate, sites1, sites2, tol):
            return EquivalenceWitness(candidate, kind)
    return None


def slocc_equivalent(
    s1: SymmetricState, s2: SymmetricState, tol: float = DEFAULT_TOL
) -> Optional[EquivalenceWitness]:
    """Moebius witness that s1 and s2 lie in the same SLOCC class, or None.

    Diversity up to three is a single class per partition, so a witness is
    built directly; beyond that all ordered site triples are enumerated
    against all multiplicity-compatible target triples and the first map
    carrying the whole multiset is accepted.
    """
    return _decide(s1, s2, tol, unitary=False)


def locc_equivalent(
    s1: SymmetricState, s2: SymmetricState, tol: float = DEFAULT_TOL
) -> Optional[EquivalenceWitness]:
    """Rotation witness that s1 and s2 are LOCC-equivalent, or None.

    Same enumeration as :func:`slocc_equivalent` but candidates must pass the
    projective-unitarity test; one- and two-site configurations are handled
    by an explicit rotation construction.
    """
    return _decide(s1, s2, tol, unitary=True)


# --- cross-ratio and circle certificates -------------------------------------


def cross_ratio_fingerprint(
    r: RootMultiset, tol: float = DEFAULT_TOL
) -> tuple[complex, ...]:
    """Cross-ratios of the four distinct sites over all 24 orderings.

    Defined for diversity exactly four; the multiset is returned sorted by
    (real, imaginary) part.  Two diversity-four states can be
    SLOCC-equivalent only if their fingerprints intersect.
    """
    from .moebius import cross_ratio

    _, clustered = degeneracy_configuration(r, tol)
    if len(clustered.sites) != 4:
        raise DomainError("cross-ratio fingerprint needs exactly 4 distinct sites")
    sites = clustered.points()
    values = []
    for perm in itertools.permutations(range(4)):
        value = cross_ratio(*(sites[i] for i in perm))
        if value.is_infinite:
            raise DomainError("degenerate site configuration")
        values.append(value.value)
    return tuple(sorted(values, key=lambda z: (z.real, z.imag)))


def fingerprints_intersect(
    f1: tuple[complex, ...], f2: tuple[complex, ...], tol: float = 1e-7
) -> bool:
    return any(abs(a - b) <= tol * (1.0 + abs(a)) for a in f1 for b in f2)


@dataclass(frozen=True)
class CircleSignature:
    """Census of circles through site triples: for every triple the number
    of sites on its circle and the population of the smaller spherical cap."""

    circles: tuple[tuple[tuple[ExtendedComplex, ExtendedComplex, ExtendedComplex], int, int], ...]

    def on_circle_counts(self) -> tuple[int, ...]:
        return tuple(sorted(count for _, count, _ in self.circles))


def circle_signature(r: RootMultiset, tol: float = DEFAULT_TOL) -> CircleSignature:
    """Circle census of a root multiset's distinct sites.

    Each site triple spans a plane; its circle is the plane's intersection
    with the sphere.  Sites within ``tol`` of the plane count as on the
    circle, the rest populate the two caps.
    """
    _, clustered = degeneracy_configuration(r, tol)
    sites = clustered.points()
    xyz = [point_xyz(p) for p in sites]
    records = []
    for (i, j, k) in itertools.combinations(range(len(sites)), 3):
        p1, p2, p3 = xyz[i], xyz[j], xyz[k]
        u = tuple(p2[t] - p1[t] for t in range(3))
        v = tuple(p3[t] - p1[t] for t in range(3))
        normal = (
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        )
        length = math.sqrt(sum(c * c for c in normal))
        if length == 0.0:
            continue
        normal = tuple(c / length for c in normal)
        offset = sum(normal[t] * p1[t] for t in range(3))
        on_count = 0
        above = 0
        below = 0
        for x in xyz:
            gap = sum(normal[t] * x[t] for t in range(3)) - offset
            if abs(gap) <= tol:
                on_count += 1
            elif gap > 0:
                above += 1
            else:
                below += 1
        records.append(((sites[i], sites[j], sites[k]), on_count, min(above, below)))
    return CircleSignature(tuple(records))


def cocircularity_witness(
    r1: RootMultiset, r2: RootMultiset, tol: float = DEFAULT_TOL
) -> Optional[tuple[CircleSignature, CircleSignature]]:
    """Pair of circle censuses certifying SLOCC-inequivalence, or None.

    Moebius maps carry circles to circles and sites to sites, so the multiset
    of on-circle counts over all site triples is an invariant; the pair of
    signatures is returned exactly when those multisets differ.  A match is
    inconclusive.
    """
    if r1.n != r2.n:
        raise DomainError("root multisets must have the same total multiplicity")
    sig1 = circle_signature(r1, tol)
    sig2 = circle_signature(r2, tol)
    if sig1.on_circle_counts() != sig2.on_circle_counts():
        return sig1, sig2
    return None
