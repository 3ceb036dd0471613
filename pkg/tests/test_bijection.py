"""The main bijection: frozen hand-traces, degree behavior, and round
trips on grids small enough to enumerate inline (census covers the
rest)."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import GF2, GF3, GF4, GF5, all_matrices, all_vectors
from nilbij import (
    DimensionMismatch,
    FieldMismatch,
    Matrix,
    NilpotentPair,
    NonSquare,
    NotNilpotent,
    SchemaError,
    Vector,
    degree,
    fitting_decompose,
    forward,
    inverse,
    is_nilpotent,
)


def nilpotents(spec, n):
    return [t for t in all_matrices(spec, n, n) if is_nilpotent(t)]


# degree

def test_degree_frozen_examples():
    t = Matrix.from_rows(GF2, [(0, 0), (1, 0)])
    assert degree(t, Vector(GF2, (0, 0))) == 0
    assert degree(t, Vector(GF2, (1, 0))) == 2
    assert degree(t, Vector(GF2, (0, 1))) == 1
    zero = Matrix.zero(GF3, 2, 2)
    for v in all_vectors(GF3, 2):
        assert degree(zero, v) == (0 if v.is_zero() else 1)


def test_degree_rejects_non_nilpotent():
    with pytest.raises(NotNilpotent):
        degree(Matrix.identity(GF2, 2), Vector(GF2, (1, 0)))


def test_degree_bounded_by_dimension():
    for t in nilpotents(GF2, 3):
        for v in all_vectors(GF2, 3):
            k = degree(t, v)
            assert 0 <= k <= 3
            assert (k == 0) == v.is_zero()


# forward, frozen

def test_forward_zero_pair_gives_zero():
    assert forward(Matrix.zero(GF2, 2, 2), Vector(GF2, (0, 0))) == \
        Matrix.zero(GF2, 2, 2)


def test_forward_dim_one_hand_trace():
    assert forward(Matrix.zero(GF2, 1, 1), Vector(GF2, (1,))) == \
        Matrix.identity(GF2, 1)


def test_forward_cyclic_hand_trace():
    t = Matrix.from_rows(GF2, [(0, 0), (1, 0)])
    assert forward(t, Vector(GF2, (1, 0))) == Matrix.identity(GF2, 2)


def test_forward_rejects_bad_input():
    with pytest.raises(NotNilpotent):
        forward(Matrix.identity(GF2, 2), Vector(GF2, (1, 0)))
    with pytest.raises(FieldMismatch):
        forward(Matrix.zero(GF2, 2, 2), Vector(GF3, (0, 0)))
    with pytest.raises(DimensionMismatch):
        forward(Matrix.zero(GF2, 2, 2), Vector(GF2, (0, 0, 0)))
    with pytest.raises(NonSquare):
        forward(Matrix.zero(GF2, 2, 3), Vector(GF2, (0, 0, 0)))


# inverse, frozen

def test_inverse_dim_one_hand_trace():
    t, v = inverse(Matrix.identity(GF2, 1))
    assert t == Matrix.zero(GF2, 1, 1)
    assert v == Vector(GF2, (1,))


def test_inverse_identity_hand_trace():
    t, v = inverse(Matrix.identity(GF2, 2))
    assert t == Matrix.from_rows(GF2, [(0, 0), (1, 0)])
    assert v == Vector(GF2, (1, 0))


def test_inverse_of_nilpotent_is_pair_with_zero_vector():
    for q in nilpotents(GF2, 2) + nilpotents(GF3, 2):
        t, v = inverse(q)
        assert t == q
        assert v.is_zero()


def test_inverse_rejects_non_square():
    with pytest.raises(NonSquare):
        inverse(Matrix.zero(GF2, 2, 3))


def test_zero_dimensional_roundtrip():
    q = Matrix(GF2, 0, 0, ())
    t, v = inverse(q)
    assert t == q and v.n == 0
    assert forward(t, v) == q


# round trips on inline grids

@pytest.mark.parametrize("spec,n", [(GF2, 1), (GF2, 2), (GF3, 1), (GF4, 1)], ids=str)
def test_roundtrips_exhaustive(spec, n):
    seen = set()
    for t in nilpotents(spec, n):
        for v in all_vectors(spec, n):
            q = forward(t, v)
            assert inverse(q) == (t, v)
            seen.add(q)
    assert len(seen) == spec.q ** (n * n)
    for q in all_matrices(spec, n, n):
        t, v = inverse(q)
        assert is_nilpotent(t)
        assert forward(t, v) == q


def test_degree_equals_automorphism_dimension():
    for t in nilpotents(GF2, 2):
        for v in all_vectors(GF2, 2):
            q = forward(t, v)
            assert fitting_decompose(q).V.dim == degree(t, v)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_roundtrip_sampled_gf5_dim3(data):
    # strictly lower triangular -> nilpotent; beyond the exhaustive grids
    entries = {}
    for i in range(3):
        for j in range(3):
            entries[(i, j)] = (
                data.draw(st.integers(0, 4)) if i > j else 0
            )
    t = Matrix(GF5, 3, 3, tuple(
        tuple(entries[(i, j)] for j in range(3)) for i in range(3)))
    v = Vector(GF5, tuple(data.draw(st.integers(0, 4)) for _ in range(3)))
    assert inverse(forward(t, v)) == (t, v)


# pair payloads

def test_pair_json_roundtrip():
    pair = NilpotentPair(
        Matrix.from_rows(GF4, [(0, 2), (0, 0)]), Vector(GF4, (1, 3)))
    assert NilpotentPair.from_json(pair.to_json()) == pair


def test_pair_json_validation():
    with pytest.raises(SchemaError):
        NilpotentPair.from_json({"T": Matrix.zero(GF2, 1, 1).to_json()})
    with pytest.raises(SchemaError):
        NilpotentPair.from_json([1, 2])
    with pytest.raises(FieldMismatch):
        NilpotentPair(Matrix.zero(GF2, 1, 1), Vector(GF3, (0,)))
