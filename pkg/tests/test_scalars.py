import cmath

from hypothesis import given, strategies as st

from ksparity.scalars import ONE, ZERO, ExactScalar

small = st.integers(-6, 6)
gauss = st.builds(complex, small, small)
elems = st.builds(lambda a, b: ExactScalar.of(a) + ExactScalar.of(b) * ExactScalar.sqrt2(), gauss, gauss)


def close(a: ExactScalar, z: complex) -> bool:
    return cmath.isclose(a.to_complex(), z, abs_tol=1e-9)


@given(elems, elems)
def test_ring_ops_match_floats(a, b):
    assert close(a + b, a.to_complex() + b.to_complex())
    assert close(a - b, a.to_complex() - b.to_complex())
    assert close(a * b, a.to_complex() * b.to_complex())


@given(elems)
def test_inverse(a):
    if a.is_zero():
        return
    assert a * a.inverse() == ONE


@given(elems)
def test_conjugate_and_abs2(a):
    assert close(a.conjugate(), a.to_complex().conjugate())
    assert close(a.abs2(), abs(a.to_complex()) ** 2)


def test_sqrt2_squares_to_two():
    s = ExactScalar.sqrt2()
    assert s * s == ExactScalar.of(2)
    assert not s.is_gaussian_integer()


def test_i_squares_to_minus_one():
    assert ExactScalar.i() * ExactScalar.i() == ExactScalar.of(-1)
    assert ZERO.is_zero()
