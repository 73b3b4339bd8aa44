"""
Усечённые ряды, группы G^p, G^c, их полупрямое произведение и коциклы
"""
from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, strategies as st

from enums import RingKind, SuiteName
from models.ring import MatrixRing, ScalarRing, make_ring
from models.series import GcElement, GpElement, TruncatedSeries
from services.checks.laws import CheckContext, build_laws, series_sample
from services.series import group
from services.series.sampling import random_gc, random_gp
from utils import DomainError, RingError


ORDER = 4
seeds = st.integers(min_value=0, max_value=10 ** 6)


def test_series_arithmetic():
    f = TruncatedSeries([1, 1], 3)
    assert f * f == TruncatedSeries([1, 2, 1, 0])
    assert f.inverse() == TruncatedSeries([1, -1, 1, -1])
    assert f.power(3) == TruncatedSeries([1, 3, 3, 1])
    assert (f - f) == TruncatedSeries.zero(3)
    assert f.scale(Fraction(1, 2))[1] == Fraction(1, 2)


def test_mixed_orders_truncate():
    f, g = TruncatedSeries([1, 1, 1], 2), TruncatedSeries([1, 1, 1, 1], 3)
    assert (f + g).order == 2
    assert f == g


def test_composition():
    # 1 / (1 - x) в x = alpha + alpha^2
    geometric = TruncatedSeries([1, 1, 1, 1, 1])
    phi = TruncatedSeries([0, 1, 1], 4)
    assert geometric.compose(phi) == TruncatedSeries([1, 1, 2, 3, 5])
    with pytest.raises(DomainError):
        geometric.compose(TruncatedSeries([1, 1], 4))


def test_divide_by_alpha():
    phi = TruncatedSeries([0, 2, 3], 2)
    assert phi.divide_by_alpha() == TruncatedSeries([2, 3], 1)
    with pytest.raises(DomainError):
        TruncatedSeries([1, 1]).divide_by_alpha()


def test_group_membership():
    with pytest.raises(RingError):
        GpElement([0, 1], 1)
    with pytest.raises(RingError):
        GcElement([1, 1], 1)
    with pytest.raises(RingError):
        GcElement([0, 0, 1], 2)
    with pytest.raises(RingError):
        GpElement([[[1, 0], [0, 0]]], 0, MatrixRing(2))


@given(seed=seeds, kind=st.sampled_from(list(RingKind)))
def test_propagator_group(seed, kind):
    rng, ring = Random(seed), make_ring(kind, 2)
    f, g, h = (random_gp(rng, ORDER, ring) for _ in range(3))
    assert group.gp_multiply(group.gp_multiply(f, g), h) == group.gp_multiply(f, group.gp_multiply(g, h))
    assert group.gp_multiply(f, group.series_inverse(f)) == group.gp_one(ORDER, ring)
    assert group.gp_multiply(group.series_inverse(f), f) == group.gp_one(ORDER, ring)


@given(seed=seeds)
def test_coupling_group(seed):
    rng = Random(seed)
    phi, psi, chi = (random_gc(rng, ORDER) for _ in range(3))
    identity = group.gc_identity(ORDER)
    assert group.gc_compose(group.gc_compose(phi, psi), chi) == group.gc_compose(phi, group.gc_compose(psi, chi))
    assert group.gc_compose(identity, phi) == phi == group.gc_compose(phi, identity)
    inverse = group.gc_inverse(phi)
    assert group.gc_compose(phi, inverse) == identity == group.gc_compose(inverse, phi)


@given(seed=seeds, kind=st.sampled_from(list(RingKind)))
def test_right_action(seed, kind):
    s = series_sample(seed, kind, 2, ORDER)
    f, g, phi, psi = s['f'], s['g'], s['phi'], s['psi']
    assert group.gp_action(f, group.gc_compose(phi, psi)) == group.gp_action(group.gp_action(f, phi), psi)
    assert group.gp_action(group.gp_multiply(f, g), phi) == \
        group.gp_multiply(group.gp_action(f, phi), group.gp_action(g, phi))


@given(seed=seeds, kind=st.sampled_from(list(RingKind)))
def test_semidirect_group(seed, kind):
    s = series_sample(seed, kind, 2, ORDER)
    a, b, c = (s['phi'], s['f']), (s['psi'], s['g']), (s['chi'], s['h'])
    assert group.semidirect_multiply(group.semidirect_multiply(a, b), c) == \
        group.semidirect_multiply(a, group.semidirect_multiply(b, c))
    unit = (group.gc_identity(ORDER), group.gp_one(ORDER, s['f'].ring))
    inverse = group.semidirect_inverse(a)
    assert group.semidirect_multiply(a, inverse) == unit == group.semidirect_multiply(inverse, a)


def test_matrix_substitution_breaks_multiplicativity():
    ring = MatrixRing(2)
    b = ring.coerce([[0, 0], [1, 0]])
    c = ring.coerce([[1, 1], [0, 1]])
    f = GpElement([ring.one(), ring.one()], 2, ring)
    g = GpElement([ring.one(), b], 2, ring)
    phi = GcElement([ring.zero(), c], 2, ring)
    lhs = group.gp_action(group.gp_multiply(f, g), phi)
    rhs = group.gp_multiply(group.gp_action(f, phi), group.gp_action(g, phi))
    assert lhs != rhs
    assert lhs.first_difference(rhs)[0] == 2


def test_matrix_substitution_is_not_associative():
    ring = MatrixRing(2)
    violations = 0
    for seed in range(5):
        rng = Random(seed)
        phi, psi, chi = (random_gc(rng, ORDER, ring) for _ in range(3))
        lhs = group.gc_compose(group.gc_compose(phi, psi), chi)
        violations += lhs != group.gc_compose(phi, group.gc_compose(psi, chi))
    assert violations


def test_matrix_gc_laws_are_reported(registry):
    laws = {law.name: law for law in build_laws(CheckContext(registry, 2), SuiteName.SERIES)}
    for name in ('gc-group[matrix]', 'actions-matrix-gc[matrix]'):
        law = laws[name]
        assert law.expected_failure
        outcomes = [law.check(seed) for seed in range(5)]
        assert any(outcomes), name
    assert not laws['gc-group[scalar]'].expected_failure
    assert all(laws['gc-group[scalar]'].check(seed) is None for seed in range(5))


def test_matrix_sample_draws_matrix_gc():
    sample = series_sample(0, RingKind.MATRIX, 2, ORDER)
    assert sample['matrix_phi'].ring.dim == 2
    assert sample['phi'].ring.dim == 1
    assert 'matrix_phi' not in series_sample(0, RingKind.SCALAR, 2, ORDER)


@given(seed=seeds)
def test_cocycles(seed):
    rng = Random(seed)
    phi, psi = random_gc(rng, ORDER), random_gc(rng, ORDER)
    assert group.cocycle_check(group.trivial_cocycle, phi, psi)
    assert group.cocycle_check(group.divide_by_alpha, phi, psi)
    assert not group.cocycle_check(group.perturbed_cocycle, phi, psi)


@given(seed=seeds, kind=st.sampled_from(list(RingKind)))
def test_twisted_action(seed, kind):
    s = series_sample(seed, kind, 2, ORDER)
    f, phi, psi = s['f'], s['phi'], s['psi']
    s_of = group.divide_by_alpha
    assert group.sigma_action(group.sigma_action(f, phi, s_of), psi, s_of) == \
        group.sigma_action(f, group.gc_compose(phi, psi), s_of)


def test_cocycle_requires_positive_order():
    phi = GcElement([0, 1], 1)
    with pytest.raises(DomainError):
        group.cocycle_check(group.trivial_cocycle, TruncatedSeries([0], 0), phi)


def test_scalar_embeds_into_matrices():
    scalar = TruncatedSeries([1, 2], 1, ScalarRing())
    matrix = TruncatedSeries([MatrixRing(2).one(), MatrixRing(2).one() * 2], 1, MatrixRing(2))
    assert scalar == matrix
