from itertools import product

import pytest

from affclass import monoid
from affclass.errors import DimensionMismatch, MissingComaximalData, NonLocalBase
from affclass.hyperbola import (
    HyperbolaDatum,
    acl_vanishes_nonlocal,
    affine_class_group_local,
    class_group,
    coaffine_shift,
    is_affine_trivial,
    is_coaffine,
    is_strongly_coaffine,
    principal_multiple,
    toric_model,
    torsion_order,
)
from affclass.lattice import FGAbelianGroup
from affclass.oracles import oracle_hyperbola_strong

import brute

DATA = [(3, 3), (1, 1), (5,), (2, 3), (1, 2), (2, 2, 3), (1, 1, 1), (4, 6), (2, 4, 6)]


def coaffine_by_search(d, n, kmax=20):
    """Principal, or some shift k puts every entry strictly between 0 and d."""
    if any(all(x == k * y for x, y in zip(n, d)) for k in range(-kmax, kmax + 1)):
        return True
    return any(all(0 < x - k * y < y for x, y in zip(n, d)) for k in range(-kmax, kmax + 1))


def nonlocal_datum(d, cm):
    return HyperbolaDatum(d, base_is_local=False, comaximal=cm)


class TestClassGroup:
    def test_examples(self):
        assert class_group(HyperbolaDatum((3, 3))) == FGAbelianGroup(1, (3,))
        assert class_group(HyperbolaDatum((1, 1))) == FGAbelianGroup(1)
        assert class_group(HyperbolaDatum((5,))) == FGAbelianGroup(0, (5,))

    @pytest.mark.parametrize("d", DATA)
    def test_closed_form(self, d):
        from math import gcd
        from functools import reduce
        g = reduce(gcd, d)
        assert class_group(HyperbolaDatum(d)) == FGAbelianGroup(len(d) - 1, (g,) if g > 1 else ())
        assert brute.determinantal_divisors_factors([[x] for x in d], 1) == [g]

    def test_acl(self):
        assert affine_class_group_local(HyperbolaDatum((3, 3))) == FGAbelianGroup(1)
        assert affine_class_group_local(HyperbolaDatum((5,))).is_trivial
        assert affine_class_group_local(HyperbolaDatum((1, 1, 1))) == FGAbelianGroup(2)

    @pytest.mark.parametrize("d", DATA)
    def test_acl_rank(self, d):
        g = affine_class_group_local(HyperbolaDatum(d))
        assert g.free_rank == len(d) - 1 and g.is_torsion_free


class TestValidation:
    def test_positive_exponents(self):
        with pytest.raises(ValueError):
            HyperbolaDatum((0, 1))
        with pytest.raises(ValueError):
            HyperbolaDatum(())

    def test_comaximal_shape(self):
        with pytest.raises(DimensionMismatch):
            nonlocal_datum((1, 1), ((True,),))
        with pytest.raises(ValueError):
            nonlocal_datum((1, 1, 1), ((0, 1, 0), (0, 0, 1), (0, 1, 0)))
        with pytest.raises(ValueError):
            HyperbolaDatum((1, 1), True, ((0, 1), (1, 0)))

    def test_local_only_operations(self):
        h = HyperbolaDatum((3, 3), base_is_local=False)
        for f in (is_coaffine, is_affine_trivial, is_strongly_coaffine):
            with pytest.raises(NonLocalBase):
                f(h, (1, 1))
        with pytest.raises(NonLocalBase):
            affine_class_group_local(h)

    def test_divisor_length(self, hyp33):
        with pytest.raises(DimensionMismatch):
            is_coaffine(hyp33, (1, 2, 3))


class TestHyp33Verdicts:
    def test_verdicts(self, hyp33):
        assert is_affine_trivial(hyp33, (1, 1))
        assert is_coaffine(hyp33, (1, 1))
        assert is_coaffine(hyp33, (1, 2))
        assert not is_coaffine(hyp33, (2, 3))
        assert not is_coaffine(hyp33, (-1, 0))
        assert is_coaffine(hyp33, (3, 3))

    def test_strong_is_stricter(self, hyp33):
        assert is_strongly_coaffine(hyp33, (1, 1))
        assert not is_strongly_coaffine(hyp33, (1, 2))
        assert not is_affine_trivial(hyp33, (1, 2))
        assert is_strongly_coaffine(hyp33, (0, 0))

    def test_strong_oracle(self, hyp33):
        assert oracle_hyperbola_strong(hyp33, (1, 1), 6)
        assert not oracle_hyperbola_strong(hyp33, (1, 2), 6)
        assert not is_coaffine(hyp33, (2, 4))
        assert oracle_hyperbola_strong(hyp33, (0, 0), 6)

    def test_witnesses(self, hyp33):
        assert coaffine_shift(hyp33, (4, 5)) == 1
        assert principal_multiple(hyp33, (6, 6)) == 2
        assert principal_multiple(hyp33, (1, 1)) is None
        assert torsion_order(hyp33, (1, 1)) == 3
        assert torsion_order(hyp33, (1, 2)) is None


class TestProperties:
    @pytest.mark.parametrize("d", DATA)
    def test_coaffine_matches_shift_search(self, d):
        h = HyperbolaDatum(d)
        for n in product(range(-6, 7), repeat=len(d)):
            assert is_coaffine(h, n) == coaffine_by_search(d, n)

    @pytest.mark.parametrize("d", DATA)
    def test_class_invariance(self, d):
        h = HyperbolaDatum(d)
        for n in product(range(-3, 4), repeat=len(d)):
            c, t = is_coaffine(h, n), is_affine_trivial(h, n)
            for k in range(-4, 5):
                m = tuple(x + k * y for x, y in zip(n, d))
                assert is_coaffine(h, m) == c
                assert is_affine_trivial(h, m) == t

    @pytest.mark.parametrize("d", [x for x in DATA if len(x) <= 3])
    def test_strong_matches_quantified_definition(self, d):
        h = HyperbolaDatum(d)
        bound = 6 if len(d) < 3 else 3
        for n in product(range(-bound, bound + 1), repeat=len(d)):
            strong = is_strongly_coaffine(h, n)
            assert strong == oracle_hyperbola_strong(h, n, 6), n
            if is_affine_trivial(h, n):
                assert all(is_coaffine(h, tuple(k * x for x in n)) for k in range(-6, 7))

    @pytest.mark.parametrize("d", DATA)
    def test_subgroup(self, d):
        h = HyperbolaDatum(d)
        trivial = [n for n in product(range(-3, 4), repeat=len(d)) if is_affine_trivial(h, n)]
        for a in trivial:
            assert is_affine_trivial(h, tuple(-x for x in a))
            for b in trivial:
                assert is_affine_trivial(h, tuple(x + y for x, y in zip(a, b)))

    @pytest.mark.parametrize("d", DATA)
    def test_multiples(self, d):
        h = HyperbolaDatum(d)
        for n in product(range(-3, 4), repeat=len(d)):
            t = is_affine_trivial(h, n)
            for k in (-3, -2, -1, 2, 3):
                assert is_affine_trivial(h, tuple(k * x for x in n)) == t
            if any(is_coaffine(h, tuple(k * x for x in n)) for k in range(1, 5)):
                assert is_coaffine(h, n)

    def test_coaffine_not_a_subgroup(self, hyp33):
        assert is_coaffine(hyp33, (1, 1)) and is_coaffine(hyp33, (1, 2))
        assert not is_coaffine(hyp33, (2, 3))


class TestNonLocal:
    def test_single_prime(self):
        assert acl_vanishes_nonlocal(nonlocal_datum((2,), ((False,),)))

    def test_all_comaximal(self):
        cm = ((False, True, True), (True, False, True), (True, True, False))
        assert acl_vanishes_nonlocal(nonlocal_datum((1, 2, 3), cm))

    def test_some_pair_not_comaximal(self):
        cm = ((False, True, False), (True, False, True), (False, True, False))
        assert not acl_vanishes_nonlocal(nonlocal_datum((1, 2, 3), cm))

    def test_missing_data(self):
        with pytest.raises(MissingComaximalData):
            acl_vanishes_nonlocal(HyperbolaDatum((1, 1), base_is_local=False))


class TestToricModel:
    def test_d1(self):
        t = toric_model(HyperbolaDatum((1,)))
        assert t.ring.num_facets == 2
        assert set(t.ring.cone.generators) == {(0, 1), (1, -1)}
        assert monoid.class_group(t.ring).is_trivial

    def test_d2_is_a1(self):
        t = toric_model(HyperbolaDatum((2,)))
        assert monoid.class_group(t.ring) == class_group(HyperbolaDatum((2,))) == FGAbelianGroup(0, (2,))

    def test_d11_quadric(self):
        t = toric_model(HyperbolaDatum((1, 1)))
        assert monoid.class_group(t.ring) == FGAbelianGroup(1)
        assert t.ring.num_facets == 4

    @pytest.mark.parametrize("d", DATA)
    def test_facets_match_valuations(self, d):
        t = toric_model(HyperbolaDatum(d))
        r = len(d)
        assert t.ring.num_facets == 2 * r
        assert sorted(t.p_facet + t.q_facet) == list(range(2 * r))
        y = tuple(d) + (-1,)
        for i in range(r):
            p = t.ring.nu.row(t.p_facet[i])
            q = t.ring.nu.row(t.q_facet[i])
            assert p[r] == d[i] and sum(a * b for a, b in zip(p, y)) == 0
            assert q[r] == 0 and sum(a * b for a, b in zip(q, y)) == d[i]

    @pytest.mark.parametrize("d", [(2,), (1, 1), (3, 3), (2, 3), (1, 2)])
    def test_agreement(self, d):
        h = HyperbolaDatum(d)
        t = toric_model(h)
        assert monoid.class_group(t.ring) == class_group(h)
        assert monoid.affine_class_group(t.ring) == affine_class_group_local(h)
        for n in product(*(range(2 * x + 1) for x in d)):
            assert monoid.is_coaffine(t.ring, t.translate(n)) == is_coaffine(h, n), n
            assert monoid.is_affine_trivial(t.ring, t.translate(n)) == is_affine_trivial(h, n)

    def test_q_equals_minus_p(self):
        h = HyperbolaDatum((3, 3))
        t = toric_model(h)
        for i in range(2):
            div = [0] * 4
            div[t.p_facet[i]] += 1
            div[t.q_facet[i]] += 1
            # p_i + q_i is the divisor of U_i
            assert monoid.principal_witness(t.ring, div) is not None
