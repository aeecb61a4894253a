import json

import pytest
from hypothesis import given, strategies as st

import corpus
from graphcoh import (AlgebraSpecError, Endomorphism, GradedAlgebra, IntPolynomial,
                      RingParams, builtin, load_algebra, ring_invariant,
                      rings_isomorphic, unit_complement, verify_algebra,
                      verify_endomorphism)

BUILTIN_NAMES = ["z", "zx2", "zx3", "zxn:4", "zxn:1", "rank2:0,0", "rank2:5,-2",
                 "rank2:-1,1", "zx-nilpotent"]


# ---------------------------------------------------------------------------
# builtins and validation

@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_every_builtin_validates(name):
    report = verify_algebra(builtin(name))
    assert report.ok, str(report)


def test_unknown_builtin():
    with pytest.raises(AlgebraSpecError):
        builtin("zx")
    with pytest.raises(AlgebraSpecError):
        builtin("rank2:1")
    with pytest.raises(AlgebraSpecError):
        builtin("zxn:0")


def test_commutativity_violation_carries_witness():
    # x*y = z but y*x = 0 in degree-0 space
    mult = [[[0, 0, 0] for _ in range(3)] for _ in range(3)]
    mult[1][2][0] = 1
    A = GradedAlgebra((0, 0, 0), mult)
    report = verify_algebra(A)
    assert not report.ok
    assert any(v.axiom == "commutativity" and v.witness == (1, 2) for v in report.violations)


def test_degree_violation_detected():
    # b1 * b1 = b0 but deg b1 + deg b1 = 2 != 0
    mult = [[[0, 0], [0, 0]], [[0, 0], [1, 0]]]
    A = GradedAlgebra((0, 1), mult)
    report = verify_algebra(A)
    assert any(v.axiom == "degree" for v in report.violations)


def test_unit_violation_detected():
    # claim (0, 1) is the unit of zx2; it is not
    base = builtin("zx2")
    A = GradedAlgebra(base.degrees, base.mult, (0, 1))
    report = verify_algebra(A)
    assert any(v.axiom == "unit" for v in report.violations)


def test_shape_errors_raise():
    with pytest.raises(AlgebraSpecError):
        GradedAlgebra((0,), [[[1, 0]]])  # inner row too long
    with pytest.raises(AlgebraSpecError):
        GradedAlgebra((), [])
    with pytest.raises(AlgebraSpecError):
        GradedAlgebra((0, 0), builtin("zx2").mult, unit=(1,))


# ---------------------------------------------------------------------------
# multiplication and graded dimension

def test_multiply_in_truncated_polynomials():
    A = builtin("zx3")  # basis 1, x, x^2
    x = (0, 1, 0)
    x2 = (0, 0, 1)
    assert A.multiply(x, x) == x2
    assert A.multiply(x2, x) == (0, 0, 0)  # x^3 = 0
    assert A.multiply((1, 0, 0), x2) == x2


def test_multiply_in_rank2():
    for a, b in [(0, 0), (5, -2), (-1, 1)]:
        A = builtin(f"rank2:{a},{b}")
        assert A.multiply((0, 1), (0, 1)) == (a, b)


def test_multiply_length_mismatch():
    with pytest.raises(AlgebraSpecError):
        builtin("zx2").multiply((1,), (1, 0))


def test_q_dim():
    assert builtin("zx3").q_dim() == IntPolynomial((1, 1, 1))
    assert builtin("rank2:3,4").q_dim() == IntPolynomial((2,))
    assert builtin("z").q_dim() == IntPolynomial((1,))
    assert builtin("zx-nilpotent").q_dim() == IntPolynomial((0, 1))


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_q_dim_at_one_counts_basis(name):
    A = builtin(name)
    assert A.q_dim()(1) == A.dim


# ---------------------------------------------------------------------------
# unit complement

def test_unit_complement_of_truncated_polynomials():
    got = unit_complement(builtin("zx3"))
    assert got.columns[0] == (1, 0, 0)
    assert got.complement_degrees == (1, 2)
    assert abs(corpus.det_bareiss([[col[r] for col in got.columns] for r in range(3)])) == 1


def test_unit_complement_of_rank2():
    got = unit_complement(builtin("rank2:2,3"))
    assert got.columns[0] == (1, 0)
    assert got.complement_degrees == (0,)


def test_unit_complement_with_spread_unit():
    # unit = (1, 1) in a basis where b0 = 1 - x, b1 = x over rank2:0,0
    # b0*b0 = b0 - ... build directly: change of basis of rank2:0,0
    # simpler: algebra Z x Z with unit (1, 1)
    mult = [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]
    A = GradedAlgebra((0, 0), mult, unit=(1, 1))
    assert verify_algebra(A).ok
    got = unit_complement(A)
    assert got.columns[0] == (1, 1)
    cols = got.columns
    assert abs(corpus.det_bareiss([[col[r] for col in cols] for r in range(2)])) == 1


def test_unit_complement_errors():
    base = builtin("zx2")
    corrupted = GradedAlgebra(base.degrees, base.mult, (2, 0))
    with pytest.raises(AlgebraSpecError):
        unit_complement(corrupted)
    with pytest.raises(AlgebraSpecError):
        unit_complement(builtin("zx-nilpotent"))


# ---------------------------------------------------------------------------
# endomorphisms

def test_identity_and_zero_endomorphisms_pass():
    for name in BUILTIN_NAMES:
        A = builtin(name)
        assert verify_endomorphism(A, Endomorphism.identity(A.dim)).ok
        assert verify_endomorphism(A, Endomorphism.zero(A.dim)).ok


def test_scaling_x_in_zx2_is_multiplicative():
    # f(1) = 1, f(x) = 2x: f(x*x) = 0 = 4x^2, so multiplicativity holds
    A = builtin("zx2")
    F = Endomorphism([[1, 0], [0, 2]])
    assert verify_endomorphism(A, F).ok


def test_doubling_unit_fails_multiplicativity():
    A = builtin("zx2")
    F = Endomorphism([[2, 0], [0, 1]])
    report = verify_endomorphism(A, F)
    assert not report.ok
    assert any(v.axiom == "multiplicative" and v.witness == (0, 0) for v in report.violations)


def test_degree_mixing_fails():
    A = builtin("zx2")
    F = Endomorphism([[0, 1], [1, 0]])  # swaps degrees 0 and 1
    report = verify_endomorphism(A, F)
    assert any(v.axiom == "degree" for v in report.violations)


def test_wrong_shape_reported():
    report = verify_endomorphism(builtin("zx3"), Endomorphism.identity(2))
    assert not report.ok
    assert report.violations[0].axiom == "shape"


# ---------------------------------------------------------------------------
# JSON spec files

def test_load_algebra_from_json(tmp_path):
    doc = builtin("zx2").to_json_dict()
    doc["twist"] = [[1, 0], [0, 1]]
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(doc))
    A, twist = load_algebra(str(path))
    assert A == builtin("zx2")
    assert twist is not None and twist.is_identity()


def test_load_algebra_accepts_builtin_names():
    A, twist = load_algebra("zx3")
    assert A == builtin("zx3")
    assert twist is None


def test_load_algebra_bad_inputs(tmp_path):
    with pytest.raises(AlgebraSpecError):
        load_algebra("no-such-algebra")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(AlgebraSpecError):
        load_algebra(str(bad))
    missing = tmp_path / "missing.json"
    missing.write_text(json.dumps({"dim": 2, "degrees": [0, 0]}))
    with pytest.raises(AlgebraSpecError):
        load_algebra(str(missing))


# ---------------------------------------------------------------------------
# rank-2 ring classification

@pytest.mark.parametrize("a,b,expected", [
    (0, 0, (0, 0)),
    (-1, 1, (-3, 1)),
    (1, 2, (8, 0)),
])
def test_ring_invariant(a, b, expected):
    assert ring_invariant(RingParams(a, b)) == expected


@pytest.mark.parametrize("p1,p2,expected", [
    ((0, 0), (-1, 2), True),
    ((0, 0), (0, 1), False),
    ((1, 0), (0, 2), True),
])
def test_rings_isomorphic(p1, p2, expected):
    assert rings_isomorphic(RingParams(*p1), RingParams(*p2)) is expected


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_classification_matches_bruteforce_search(a, b, a2, b2):
    claimed = rings_isomorphic(RingParams(a, b), RingParams(a2, b2))
    assert claimed == corpus.ring_iso_bruteforce(a, b, a2, b2)


@given(st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
       st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
       st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_isomorphism_is_an_equivalence(p, q, r):
    p, q, r = RingParams(*p), RingParams(*q), RingParams(*r)
    assert rings_isomorphic(p, p)
    assert rings_isomorphic(p, q) == rings_isomorphic(q, p)
    if rings_isomorphic(p, q) and rings_isomorphic(q, r):
        assert rings_isomorphic(p, r)
