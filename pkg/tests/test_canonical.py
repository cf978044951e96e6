import cmath
import math

import numpy as np
import pytest

from majsphere import (
    DomainError,
    RootMultiset,
    SymmetricState,
    apply_symmetric,
    canonical_4,
    canonical_4_all_triples,
    canonical_5_degenerate,
    canonicalize,
    dicke,
    family_state_4,
    family_state_5,
    family_state_5_generic,
    fidelity,
    form_to_doc,
    majorana_polynomial,
    majorana_roots,
    param_to_t,
    representative_5_generic,
    representative_small,
    slocc_equivalent,
    state_from_roots,
    triangle_frame,
)
from majsphere.classify import DegeneracyConfiguration
from helpers import OMEGA, random_moebius

HALF_PI = math.pi / 2
THIRD = 2 * math.pi / 3


def poly_prod(*factors):
    """Expand a product of polynomials given as ascending coefficient lists."""
    out = np.ones(1, dtype=complex)
    for f in factors:
        out = np.convolve(out, np.array(f, dtype=complex))
    return out


class TestTriangleFrame:
    def test_fold_group_permutes_vertices(self):
        frame = triangle_frame()
        verts = frame.vertices
        for g in frame.fold_group:
            images = [complex(g(v)) for v in verts]
            for img in images:
                assert min(abs(img - v) for v in verts) < 1e-12
            # injectivity of the map makes this a permutation
            assert min(
                abs(a - b) for i, a in enumerate(images) for b in images[:i]
            ) > 0.5

    def test_fold_group_closed_under_composition(self):
        from majsphere import proj_equal

        frame = triangle_frame()
        for g in frame.fold_group:
            for h in frame.fold_group:
                gh = g.compose(h)
                assert any(proj_equal(gh, k, 1e-12) for k in frame.fold_group)

    def test_fold_maps_realize_rotations_through_the_tensor_oracle(self):
        # z -> exp(-i psi) z is the polar-axis rotation by psi and z -> 1/z
        # the half turn through the z = 1 vertex; check both on dense vectors
        from majsphere import MoebiusMap, apply_tensor, equal_up_to_scale, expand_full
        from helpers import random_state

        rng = np.random.default_rng(46)
        for psi in (2 * math.pi / 3, 1.234):
            spin = MoebiusMap(cmath.exp(-1j * psi / 2), 0.0, 0.0, cmath.exp(1j * psi / 2))
            assert abs(complex(spin(1.0)) - cmath.exp(-1j * psi)) <= 1e-12
            half_turn = MoebiusMap(0.0, -1j, -1j, 0.0)
            assert abs(complex(half_turn(2.0)) - 0.5) <= 1e-12
            for m in (spin, half_turn):
                s = random_state(rng, 4)
                dense = apply_tensor(m, expand_full(s))
                via_roots = expand_full(apply_symmetric(m, s))
                assert equal_up_to_scale(dense, via_roots, 1e-10)


class TestFamilyPolynomials:
    """The family amplitudes must factor exactly as the advertised products."""

    def test_family_4_factorization(self):
        rng = np.random.default_rng(30)
        for _ in range(50):
            t = complex(rng.standard_normal(), rng.standard_normal())
            c = majorana_polynomial(family_state_4(t)).as_array()
            expected = poly_prod([-1.0, t], [-1.0, 0.0, 0.0, 1.0])  # (tz-1)(z^3-1)
            scale = c[np.argmax(np.abs(expected))] / expected[np.argmax(np.abs(expected))]
            assert np.max(np.abs(c - scale * expected)) <= 1e-12 * max(1.0, np.max(np.abs(scale * expected)))

    def test_family_5_factorization(self):
        rng = np.random.default_rng(31)
        for _ in range(50):
            t = complex(rng.standard_normal(), rng.standard_normal())
            c = majorana_polynomial(family_state_5(t)).as_array()
            expected = poly_prod([-1.0, 1.0], [-1.0, t], [-1.0, 0.0, 0.0, 1.0])
            scale = c[np.argmax(np.abs(expected))] / expected[np.argmax(np.abs(expected))]
            assert np.max(np.abs(c - scale * expected)) <= 1e-12 * max(1.0, np.max(np.abs(scale * expected)))

    def test_family_5_generic_factorization(self):
        rng = np.random.default_rng(32)
        for _ in range(50):
            t1 = complex(rng.standard_normal(), rng.standard_normal())
            t2 = complex(rng.standard_normal(), rng.standard_normal())
            c = majorana_polynomial(family_state_5_generic(t1, t2)).as_array()
            expected = poly_prod([-1.0, t1], [-1.0, t2], [-1.0, 0.0, 0.0, 1.0])
            scale = c[np.argmax(np.abs(expected))] / expected[np.argmax(np.abs(expected))]
            assert np.max(np.abs(c - scale * expected)) <= 1e-12 * max(1.0, np.max(np.abs(scale * expected)))

    def test_generic_family_reduces_to_degenerate(self):
        t = param_to_t(0.7, 1.3)
        assert fidelity(family_state_5_generic(1.0, t), family_state_5(t)) >= 1 - 1e-12

    def test_moving_point_of_factored_family_lands_at_parameters(self):
        # factoring the family state must put the non-vertex root at (theta, phi)
        from majsphere import to_sphere

        frame = triangle_frame()
        rng = np.random.default_rng(29)
        for _ in range(20):
            theta = rng.uniform(0.1, math.pi / 2 - 0.1)
            phi = rng.uniform(0.1, 2 * math.pi - 0.1)
            roots = majorana_roots(family_state_4(param_to_t(theta, phi)))
            moving = [
                z
                for z in roots.finite_roots
                if min(abs(z - v) for v in frame.vertices) > 1e-6
            ]
            assert len(moving) == 1
            sp = to_sphere(moving[0])
            assert abs(sp.theta - theta) <= 1e-9
            assert abs(sp.phi - phi) <= 1e-9


class TestRepresentativeSmall:
    def test_two_qubits(self):
        assert fidelity(representative_small(2, DegeneracyConfiguration((2,))), dicke(2, 0)) == 1.0
        rep = representative_small(2, DegeneracyConfiguration((1, 1)))
        assert fidelity(rep, dicke(2, 1)) == 1.0
        r = majorana_roots(rep)
        assert r.finite_roots == (0j,) and r.infinity_count == 1

    def test_three_qubits(self):
        assert fidelity(representative_small(3, DegeneracyConfiguration((3,))), dicke(3, 0)) == 1.0
        assert fidelity(representative_small(3, DegeneracyConfiguration((2, 1))), dicke(3, 1)) == 1.0
        ghz = SymmetricState([1.0, 0.0, 0.0, 1.0])
        assert fidelity(representative_small(3, (1, 1, 1)), ghz) >= 1 - 1e-12

    def test_invalid_inputs(self):
        with pytest.raises(DomainError):
            representative_small(4, DegeneracyConfiguration((4,)))
        with pytest.raises(DomainError):
            representative_small(3, DegeneracyConfiguration((2, 2)))


class TestCanonical4:
    def test_fixed_partitions(self):
        assert canonical_4(dicke(4, 0)).partition == (4,)
        assert canonical_4(dicke(4, 1)).partition == (3, 1)
        form = canonical_4(dicke(4, 2))
        assert form.partition == (2, 2) and form.params == ()

    def test_doubled_vertex_partition(self):
        s = family_state_4(1.0)
        form = canonical_4(s)
        assert form.partition == (2, 1, 1)
        assert form.params == (HALF_PI, 0.0)
        assert fidelity(form.state, s) >= 1 - 1e-12

    def test_already_canonical_configuration(self):
        s = state_from_roots(RootMultiset(4, (1 + 0j, OMEGA, OMEGA**2, 2 + 0j), 0))
        form = canonical_4(s)
        assert form.partition == (1, 1, 1, 1)
        assert form.params[0] == pytest.approx(2 * math.atan(0.5), abs=1e-12)
        assert form.params[1] == pytest.approx(0.0, abs=1e-12)

    def test_construct_and_recover(self):
        rng = np.random.default_rng(33)
        for _ in range(50):
            theta = rng.uniform(0.05, HALF_PI - 0.05)
            phi = rng.uniform(0.02, THIRD - 0.02)
            state = family_state_4(param_to_t(theta, phi))
            image = apply_symmetric(random_moebius(rng), state)
            form = canonical_4(image)
            assert form.partition == (1, 1, 1, 1)
            assert abs(form.params[0] - theta) <= 1e-6
            assert abs(form.params[1] - phi) <= 1e-6

    def test_idempotence(self):
        rng = np.random.default_rng(34)
        for _ in range(20):
            theta = rng.uniform(0.05, HALF_PI - 0.05)
            phi = rng.uniform(0.02, THIRD - 0.02)
            form = canonical_4(family_state_4(param_to_t(theta, phi)))
            again = canonical_4(form.state)
            assert form.partition == again.partition
            assert max(abs(a - b) for a, b in zip(form.params, again.params)) <= 1e-9

    def test_representative_is_slocc_equivalent_to_input(self):
        rng = np.random.default_rng(44)
        for _ in range(10):
            theta = rng.uniform(0.05, HALF_PI - 0.05)
            phi = rng.uniform(0.02, THIRD - 0.02)
            s = apply_symmetric(random_moebius(rng), family_state_4(param_to_t(theta, phi)))
            form = canonical_4(s)
            assert slocc_equivalent(s, form.state) is not None

    def test_equator_domain_edge(self):
        for phi in (0.2, 1.0):
            state = family_state_4(param_to_t(HALF_PI, phi))
            form = canonical_4(state)
            assert form.params[0] == pytest.approx(HALF_PI, abs=1e-9)
            assert form.params[1] == pytest.approx(phi, abs=1e-9)

    def test_near_vertex_relabels(self):
        s = state_from_roots(
            RootMultiset(4, (1 + 1e-9j, OMEGA, OMEGA**2, 3 + 0j), 0)
        )
        # the fourth point is fine but one anchored site nearly doubles after
        # mapping a configuration whose folded image grazes a vertex
        u = 1.0 + 1e-9 * 1j
        t = state_from_roots(RootMultiset(4, (complex(u), OMEGA, OMEGA**2, 1 + 0j), 0))
        form = canonical_4(t)
        assert form.partition == (2, 1, 1)

    def test_all_triples_agree(self):
        rng = np.random.default_rng(35)
        for _ in range(10):
            theta = rng.uniform(0.1, HALF_PI - 0.1)
            phi = rng.uniform(0.05, THIRD - 0.05)
            state = apply_symmetric(
                random_moebius(rng), family_state_4(param_to_t(theta, phi))
            )
            params = canonical_4_all_triples(state)
            assert len(params) == 24
            spread_theta = max(p[0] for p in params) - min(p[0] for p in params)
            spread_phi = max(p[1] for p in params) - min(p[1] for p in params)
            assert spread_theta <= 1e-8 and spread_phi <= 1e-8

    def test_injectivity_of_parameters(self):
        rng = np.random.default_rng(36)
        for _ in range(15):
            p1 = (rng.uniform(0.1, HALF_PI - 0.1), rng.uniform(0.05, THIRD - 0.05))
            p2 = (rng.uniform(0.1, HALF_PI - 0.1), rng.uniform(0.05, THIRD - 0.05))
            if abs(param_to_t(*p1) - param_to_t(*p2)) < 5e-2:
                continue
            assert slocc_equivalent(family_state_4(param_to_t(*p1)),
                                    family_state_4(param_to_t(*p2))) is None

    def test_wrong_qubit_count(self):
        with pytest.raises(DomainError):
            canonical_4(dicke(3, 0))


class TestCanonical5Degenerate:
    def test_fixed_partitions(self):
        assert canonical_5_degenerate(dicke(5, 0)).partition == (5,)
        assert canonical_5_degenerate(dicke(5, 1)).partition == (4, 1)
        assert canonical_5_degenerate(dicke(5, 2)).partition == (3, 2)

    def test_triple_vertex_point(self):
        s = state_from_roots(RootMultiset(5, (1 + 0j, 1 + 0j, 1 + 0j, OMEGA, OMEGA**2), 0))
        form = canonical_5_degenerate(s)
        assert form.partition == (3, 1, 1)
        assert form.params == (HALF_PI, 0.0)
        assert fidelity(form.state, s) >= 1 - 1e-10

    def test_double_double_point(self):
        s = state_from_roots(
            RootMultiset(5, (1 + 0j, 1 + 0j, OMEGA, OMEGA**2, OMEGA**2), 0)
        )
        form = canonical_5_degenerate(s)
        assert form.partition == (2, 2, 1)
        assert form.params == (HALF_PI, THIRD)
        assert fidelity(form.state, s) >= 1 - 1e-10

    def test_construct_and_recover(self):
        rng = np.random.default_rng(37)
        for _ in range(40):
            theta = rng.uniform(0.05, HALF_PI - 0.05)
            phi = rng.uniform(0.02, THIRD - 0.02)
            state = family_state_5(param_to_t(theta, phi))
            image = apply_symmetric(random_moebius(rng), state)
            form = canonical_5_degenerate(image)
            assert form.partition == (2, 1, 1, 1)
            assert abs(form.params[0] - theta) <= 1e-6
            assert abs(form.params[1] - phi) <= 1e-6

    def test_example_recovery_at_08_20(self):
        state = family_state_5(param_to_t(0.8, 2.0))
        image = apply_symmetric(random_moebius(np.random.default_rng(38)), state)
        form = canonical_5_degenerate(image)
        assert abs(form.params[0] - 0.8) <= 1e-6
        assert abs(form.params[1] - 2.0) <= 1e-6

    def test_uniqueness_of_parameters(self):
        rng = np.random.default_rng(39)
        for _ in range(15):
            p1 = (rng.uniform(0.1, HALF_PI - 0.1), rng.uniform(0.05, THIRD - 0.05))
            p2 = (rng.uniform(0.1, HALF_PI - 0.1), rng.uniform(0.05, THIRD - 0.05))
            if abs(param_to_t(*p1) - param_to_t(*p2)) < 5e-2:
                continue
            assert slocc_equivalent(family_state_5(param_to_t(*p1)),
                                    family_state_5(param_to_t(*p2))) is None

    def test_azimuth_period_is_one_third_turn(self):
        # the two family states differing by a cube-root-of-unity factor in t
        # are the same SLOCC class; canonicalization folds them together
        t = param_to_t(0.6, 0.5)
        s1 = family_state_5(t)
        s2 = family_state_5(t * OMEGA)
        witness = slocc_equivalent(s1, s2)
        assert witness is not None
        form1 = canonical_5_degenerate(s1)
        form2 = canonical_5_degenerate(s2)
        assert max(abs(a - b) for a, b in zip(form1.params, form2.params)) <= 1e-9

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            canonical_5_degenerate(dicke(4, 0))
        generic = state_from_roots(
            RootMultiset(5, (1 + 0j, OMEGA, OMEGA**2, 2 + 0j, 0.5j), 0)
        )
        with pytest.raises(DomainError):
            canonical_5_degenerate(generic)

    def test_idempotence(self):
        form = canonical_5_degenerate(family_state_5(param_to_t(0.9, 1.7)))
        again = canonical_5_degenerate(form.state)
        assert max(abs(a - b) for a, b in zip(form.params, again.params)) <= 1e-9

    def test_representative_is_slocc_equivalent_to_input(self):
        rng = np.random.default_rng(45)
        for _ in range(10):
            theta = rng.uniform(0.05, HALF_PI - 0.05)
            phi = rng.uniform(0.02, THIRD - 0.02)
            s = apply_symmetric(random_moebius(rng), family_state_5(param_to_t(theta, phi)))
            form = canonical_5_degenerate(s)
            assert slocc_equivalent(s, form.state) is not None


class TestRepresentative5Generic:
    def test_reading_off_canonical_configuration(self):
        roots = RootMultiset(
            5,
            (1 + 0j, OMEGA, OMEGA**2, 2 + 0j, complex(3 * cmath.exp(-1j))),
            0,
        )
        form = representative_5_generic(state_from_roots(roots))
        assert not form.unique
        assert form.params[0] == pytest.approx(2 * math.atan(0.5), abs=1e-9)
        assert form.params[1] == pytest.approx(0.0, abs=1e-9)
        assert form.params[2] == pytest.approx(2 * math.atan(1.0 / 3.0), abs=1e-9)
        assert form.params[3] == pytest.approx(1.0, abs=1e-9)

    def test_representative_is_slocc_equivalent(self):
        rng = np.random.default_rng(40)
        for _ in range(15):
            from helpers import separated_root_multiset

            s = state_from_roots(separated_root_multiset(rng, 5, 0.15))
            form = representative_5_generic(s)
            assert form.partition == (1, 1, 1, 1, 1)
            assert slocc_equivalent(s, form.state) is not None
            # azimuth of the fifth point folded into [0, 2pi/3)
            assert 0.0 <= form.params[3] < THIRD + 1e-9

    def test_alternative_triples_still_equivalent(self):
        # over-complete parameterization: different anchorings may disagree in
        # parameters but every returned representative is equivalent
        rng = np.random.default_rng(41)
        from helpers import separated_root_multiset

        s = state_from_roots(separated_root_multiset(rng, 5, 0.2))
        form = representative_5_generic(s)
        image = apply_symmetric(random_moebius(rng), s)
        form2 = representative_5_generic(image)
        assert slocc_equivalent(form.state, form2.state) is not None

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            representative_5_generic(dicke(5, 1))
        with pytest.raises(DomainError):
            representative_5_generic(dicke(4, 0))


class TestCanonicalizeDispatch:
    def test_small_n(self):
        assert canonicalize(dicke(1, 1)).partition == (1,)
        assert canonicalize(dicke(2, 1)).partition == (1, 1)
        assert canonicalize(SymmetricState([1, 0, 0, 1])).partition == (1, 1, 1)

    def test_dispatch_to_families(self):
        assert canonicalize(family_state_4(param_to_t(0.5, 0.3))).partition == (1, 1, 1, 1)
        assert canonicalize(family_state_5(param_to_t(0.5, 0.3))).partition == (2, 1, 1, 1)
        from helpers import separated_root_multiset

        s = state_from_roots(separated_root_multiset(np.random.default_rng(42), 5, 0.15))
        assert canonicalize(s).partition == (1, 1, 1, 1, 1)

    def test_too_many_qubits(self):
        with pytest.raises(DomainError):
            canonicalize(dicke(6, 0))

    def test_form_document(self):
        form = canonicalize(family_state_4(param_to_t(0.5, 0.3)))
        doc = form_to_doc(form)
        assert list(doc) == ["n", "partition", "params", "state"]
        assert doc["partition"] == [1, 1, 1, 1]
        assert len(doc["params"]) == 2
