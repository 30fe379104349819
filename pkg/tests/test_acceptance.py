"""Acceptance suite: one test per criterion, every check exact."""

import random
from fractions import Fraction

from hhquiver import corpus
from hhquiver.algebra import compute_basis
from hhquiver.classify import TYPE_ATILDE, gentle_tilted_type
from hhquiver.equivalence import (classify_binomials, equivalence_classes, phi_preimage,
                                  verify_theorem)
from hhquiver.hochschild import (DiagonalDerivation, apply_derivation, der0_basis,
                                 diagonal_as_derivation, diagonal_constraints, extend_derivation,
                                 hh1_oracle, hh1_schurian, is_diagonal_derivation, make_derivation,
                                 project_new_components)
from hhquiver.linalg import kernel_basis
from hhquiver.monomial import epsilon_report, hh1_monomial, parallel_data
from hhquiver.relext import auto_relext_gentle, validate_pair

from .conftest import merging_pair

N_TREES = 120
N_ATILDE = 100


def _trees():
    out = []
    for s in range(N_TREES):
        rng = random.Random(s)
        out.append(corpus.random_gentle_tree(rng.randint(2, 8), rng))
    return out


def test_criterion_1_kronecker():
    b = compute_basis(corpus.kronecker())
    assert hh1_oracle(b).hh1_dim == 3
    assert hh1_monomial(b) == 3
    assert epsilon_report(b, 0).epsilon == 2


def test_criterion_2_triangle_with_bypass():
    b = compute_basis(corpus.triangle_bypass())
    assert hh1_oracle(b).hh1_dim == 2
    assert hh1_monomial(b) == 2
    assert epsilon_report(b, 0).epsilon == 1


def test_criterion_3_tilde_a_pair():
    pair = corpus.tilde_a_example_b()
    bb = compute_basis(pair.b_presentation)
    assert hh1_oracle(bb).hh1_dim == 3
    assert hh1_schurian(bb).hh1_dim == 3
    assert hh1_monomial(bb) == 3
    r = verify_theorem(pair)
    assert r.n_bc == 2 and r.hh1_c == 1
    assert r.hh1_dim == r.hh1_c + r.n_bc == 3 and r.identity_theorem31
    e = epsilon_report(bb, pair.relation_count)
    assert pair.relation_count == 2 and e.epsilon == 0
    assert r.hh1_dim == pair.relation_count + 1
    assert r.ok


def test_criterion_4_cd_family():
    for d in range(1, 7):
        pair = auto_relext_gentle(corpus.zigzag(d))
        bb = compute_basis(pair.b_presentation)
        assert hh1_oracle(bb).hh1_dim == d
        assert hh1_schurian(bb).hh1_dim == d
        assert hh1_monomial(bb) == d
        r = verify_theorem(pair, assert_rep_finite=True)
        assert r.hh1_c == 0 and r.identity_theorem31
        assert r.n_bc == pair.relation_count - r.n_prime_bc == d and r.n_prime_bc == 0
        assert r.ok


def test_criterion_5_random_gentle_trees():
    trees = _trees()
    assert len(trees) >= 100 and all(len(c.quiver.vertices) <= 8 for c in trees)
    relation_free = 0
    for c in trees:
        pair = auto_relext_gentle(c)
        bb = compute_basis(pair.b_presentation)
        o = hh1_oracle(bb).hh1_dim
        assert o == hh1_schurian(bb).hh1_dim == hh1_monomial(bb)
        assert validate_pair(pair) == []
        if not c.relations:
            relation_free += 1
        assert (o == 0) == (not c.relations)
        r = verify_theorem(pair)
        assert r.identity_theorem31 and r.ok
    assert relation_free > 0


def test_criterion_6_epsilon_bounds():
    inputs = [(corpus.kronecker(), 0), (corpus.triangle_bypass(), 0)]
    tilde = corpus.tilde_a_example_b()
    inputs.append((tilde.b_presentation, tilde.relation_count))
    for s in range(N_ATILDE):
        rng = random.Random(s)
        c = corpus.random_gentle_atilde(rng.randint(2, 8), rng)
        assert gentle_tilted_type(c) == TYPE_ATILDE
        pair = auto_relext_gentle(c)
        inputs.append((pair.b_presentation, pair.relation_count))
    for p, n_rel in inputs:
        e = epsilon_report(compute_basis(p), n_rel, assert_type_atilde=True)
        assert 0 <= e.epsilon <= e.epsilon_prime <= 2
        assert e.hh1_dim == 1 + n_rel + e.epsilon
        assert not e.violation


def _leibniz(b, delta, rng, n=50):
    pairs = [(i, j) for i, u in enumerate(b.basis_paths) for j, v in enumerate(b.basis_paths)
             if u.target == v.source]
    for i, j in rng.choices(pairs, k=n):
        lhs = apply_derivation(b, delta, b.product(i, j))
        left = b.multiply(apply_derivation(b, delta, {i: Fraction(1)}), {j: Fraction(1)})
        right = b.multiply({i: Fraction(1)}, apply_derivation(b, delta, {j: Fraction(1)}))
        rhs = {k: left.get(k, 0) + right.get(k, 0) for k in set(left) | set(right)}
        if lhs != {k: x for k, x in rhs.items() if x != 0}:
            return False
    return True


def test_criterion_7_derivation_level():
    rng = random.Random(0)
    pairs = [corpus.tilde_a_example_b()] + [auto_relext_gentle(corpus.zigzag(d)) for d in (1, 2, 3)]
    pairs += [auto_relext_gentle(c) for c in _trees()[:15]]
    for pair in pairs + [merging_pair()]:
        cb = compute_basis(pair.c_presentation)
        bb = compute_basis(pair.b_presentation)
        for b in (cb, bb):
            for delta in der0_basis(b):
                assert _leibniz(b, delta, rng)
        eq = equivalence_classes(pair, classify_binomials(pair, bb, cb))
        reps = eq.representatives
        arrows = [a.name for a in cb.quiver.arrows]
        genuine = pair in pairs
        for v in kernel_basis(diagonal_constraints(cb), len(arrows)) if genuine else ():
            ext = extend_derivation(pair, DiagonalDerivation(dict(zip(arrows, v))))
            # zeta lands in the derivations of B
            make_derivation(bb, diagonal_as_derivation(bb, ext).assignment)
            assert is_diagonal_derivation(bb, ext)
            assert all(x == 0 for x in project_new_components(pair, ext, reps))
        for k, members in enumerate(eq.classes):
            pre = phi_preimage(pair, members)
            assert is_diagonal_derivation(bb, pre)
            unit = [Fraction(int(i == k)) for i in range(len(reps))]
            assert project_new_components(pair, pre, reps) == unit


def _cardinalities(p, max_len):
    b = compute_basis(p, max_len)
    out = {"basis": b.basis_paths, "hh1": hh1_oracle(b).hh1_dim}
    if all(r.is_monomial for r in p.relations):
        d = parallel_data(b)
        out["sets"] = tuple(len(getattr(d, f)) for f in ("N", "q0N", "q1N", "q1N_g", "q1N_a", "q1N_e", "RN"))
    return out


def test_criterion_8_max_len_robustness():
    pairs = [corpus.tilde_a_example_b()] + [auto_relext_gentle(corpus.zigzag(d)) for d in (1, 3, 6)]
    pairs += [auto_relext_gentle(c) for c in _trees()[:10]]
    singles = [corpus.kronecker(), corpus.triangle_bypass()]
    for p in singles + [x for pair in pairs for x in (pair.c_presentation, pair.b_presentation)]:
        deg = compute_basis(p).nilpotency_degree
        assert _cardinalities(p, deg) == _cardinalities(p, deg + 10)
    for pair in pairs:
        deg = max(compute_basis(pair.c_presentation).nilpotency_degree,
                  compute_basis(pair.b_presentation).nilpotency_degree)
        low, high = verify_theorem(pair, max_len=deg), verify_theorem(pair, max_len=deg + 10)
        assert low.to_json() == high.to_json()
