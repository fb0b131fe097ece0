import math

import pytest

from cylinder_knots.braid import parse_braid
from cylinder_knots.errors import ParameterError
from cylinder_knots.invariants import invariant_set
from cylinder_knots.rosette import (
    RosetteParams,
    factor_block_identity_check,
    factor_braid_long,
    generalized_rosette,
    rosette_as_cylinder,
    rosette_braid,
    search_realization,
    verify_rosette,
)

REMARK_LIST = [(2, 3), (2, 5), (2, 7), (2, 9), (3, 2), (3, 4), (3, 5), (4, 3)]


def test_rosette_braid():
    assert rosette_braid(RosetteParams(2, 3)) == parse_braid("s1 s1 s1")
    assert rosette_braid(RosetteParams(3, 2)) == parse_braid("s1 s2^-1 s1 s2^-1")
    assert rosette_braid(RosetteParams(4, 3)) == parse_braid("s1 s2^-1 s3 s1 s2^-1 s3 s1 s2^-1 s3")
    assert rosette_braid(RosetteParams(3, 3)).components() == 3
    assert not RosetteParams(3, 3).is_knot
    with pytest.raises(ParameterError):
        RosetteParams(3, 2, (1,))


def test_rosette_as_cylinder():
    p = rosette_as_cylinder(3, 2)
    assert (p.s, p.n, p.m) == (3, 8, 2)
    p = rosette_as_cylinder(2, 5)
    assert (p.s, p.n, p.m) == (2, 15, 5)
    p = rosette_as_cylinder(4, 3)
    assert (p.s, p.n, p.m) == (4, 15, 3)
    with pytest.raises(ParameterError):
        rosette_as_cylinder(3, 3)
    with pytest.raises(ParameterError):
        rosette_as_cylinder(3, 1)


@pytest.mark.parametrize("s,k", REMARK_LIST)
def test_verify_rosette(s, k):
    r = verify_rosette(s, k)
    assert r["pass"]
    assert set(r) == {"s", "k", "cylinder_params", "invariants_lhs", "invariants_rhs", "pass"}


def test_rosette_values():
    assert verify_rosette(3, 2)["invariants_lhs"]["alexander"] == "-1 3 -1 @ -1"
    assert verify_rosette(3, 4)["invariants_rhs"]["det"] == 45


def test_odd_rosettes_have_zero_signature():
    for s, k in [(3, 5), (3, 7), (5, 3), (5, 2 + 1), (7, 3)]:
        if math.gcd(s, k) == 1:
            assert invariant_set(rosette_braid(RosetteParams(s, k))).signature == 0


@pytest.mark.parametrize("s", range(2, 10))
def test_factor_block_identity(s):
    r = factor_block_identity_check(s)
    assert r["pass"] and r["invariants_agree"]
    assert r["burau_charpoly_agree"]


def test_factor_block_long_forms():
    assert factor_braid_long(3) == parse_braid("s1 s2 s1 s2 s1^-1 s2^-1 s1^-1 s2^-1")
    assert factor_braid_long(4) == parse_braid("s1 s3 s2 s1 s3 s2 s1 s3 s2^-1 s1^-1 s3^-1 s2^-1 s1^-1 s3^-1 s2^-1")
    with pytest.raises(ParameterError):
        factor_block_identity_check(10)


def test_generalized_rosette_realisation():
    w = generalized_rosette(3, 2, (1, 1))
    assert w == parse_braid("s1 s2 s1 s2")
    # (s1 s2)^7 is the torus knot T(3,7), realised by Z(3,7,7)
    hits = search_realization(generalized_rosette(3, 7, (1, 1)), n_max=8, m_max=8)
    assert any((p.n, p.m) == (7, 7) for p in hits)
