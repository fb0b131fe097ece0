import pytest
from hypothesis import given, settings

from cylinder_knots.braid import BraidWord, parse_braid, torus_braid
from cylinder_knots.errors import MultiComponentError, ParameterError
from cylinder_knots.invariants import (
    InvariantSet,
    alexander,
    arf,
    burau_charpoly,
    burau_matrix,
    determinant,
    fox_milnor_search,
    invariant_set,
    is_square,
    jones,
    kauffman_bracket,
    laurent_det,
    seifert_matrix,
    signature,
)
from cylinder_knots.laurent import ONE, LaurentPoly
from oracles import alexander_wirtinger, bracket_bruteforce, torus_alexander_formula, signature_numeric
from strategies import knot_words

L = LaurentPoly.from_text
TREFOIL = L("1 -1 1 @ -1")
FIG8 = L("-1 3 -1 @ -1")


def seifert_alexander(V):
    n = len(V)
    if n == 0:
        return ONE
    M = [[LaurentPoly([V[r][c]]) - LaurentPoly([V[c][r]], 1) for c in range(n)] for r in range(n)]
    p = laurent_det(M).symmetrized()
    return -p if p(1) < 0 else p


def test_alexander_examples():
    assert alexander(parse_braid("s1 s1 s1")) == TREFOIL
    assert alexander(BraidWord(1)) == ONE
    assert alexander(parse_braid("s1 s2^-1 s1 s2^-1")) == FIG8
    assert alexander(parse_braid("s1 s1 s1 s2 s1^-1 s2")) == L("2 -3 2 @ -1")
    with pytest.raises(MultiComponentError):
        alexander(parse_braid("s1 s1"))


def test_determinant_and_arf():
    assert determinant(TREFOIL) == 3
    assert determinant(FIG8) == 5
    assert determinant(L("2 -3 2 @ -1")) == 7
    assert [arf(9), arf(5), arf(7), arf(3)] == [0, 1, 0, 1]
    with pytest.raises(ParameterError):
        arf(4)


def test_is_square():
    assert is_square(9) and is_square(0) and is_square(1)
    assert not is_square(27) and not is_square(-4)


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (3, 7), (3, 8), (4, 5), (4, 7)])
def test_torus_alexander(p, q):
    assert alexander(torus_braid(p, q)) == torus_alexander_formula(p, q)


@settings(max_examples=150)
@given(knot_words(max_strands=5, max_len=16))
def test_burau_matches_wirtinger(w):
    assert alexander(w) == alexander_wirtinger(w.letters, w.strands)


@settings(max_examples=150)
@given(knot_words(max_strands=5, max_len=14))
def test_seifert_matrix_presents_alexander(w):
    V = seifert_matrix(w)
    assert len(V) == len(w) - w.strands + 1
    assert seifert_alexander(V) == alexander(w)


@given(knot_words(max_strands=4, max_len=12))
def test_signature_exact_matches_numeric(w):
    V = seifert_matrix(w)
    assert signature(V) == signature_numeric(V)


@settings(max_examples=60)
@given(knot_words(max_strands=4, max_len=10))
def test_bracket_matches_state_sum(w):
    assert kauffman_bracket(w) == bracket_bruteforce(w.letters, w.strands)


@given(knot_words(max_strands=4, max_len=14))
def test_mirror_relations(w):
    m = w.mirror()
    assert alexander(m) == alexander(w)
    assert signature(seifert_matrix(m)) == -signature(seifert_matrix(w))
    assert jones(m) == jones(w).reflect()


@given(knot_words(max_strands=4, max_len=14))
def test_parities(w):
    inv = invariant_set(w)
    assert inv.det % 2 == 1
    assert inv.signature % 2 == 0
    assert inv.alexander.is_symmetric() and inv.alexander(1) == 1
    assert inv.jones(1) == 1


def test_seifert_examples():
    V = seifert_matrix(parse_braid("s1 s1 s1"))
    assert len(V) == 2
    assert signature(V) == 2
    assert seifert_matrix(BraidWord(1)) == []
    assert signature([]) == 0
    V = seifert_matrix(parse_braid("s1 s2^-1 s1 s2^-1"))
    assert len(V) == 2 and signature(V) == 0
    assert abs(signature(seifert_matrix(torus_braid(2, 5)))) == 4


def test_connected_sum():
    a = parse_braid("s1 s1 s1", 3)
    b = BraidWord(3, ((2, -1),) * 3)
    ab = a * b
    assert alexander(ab) == TREFOIL * TREFOIL
    sig = lambda w: signature(seifert_matrix(w))
    assert sig(ab) == sig(BraidWord(2, a.letters)) + sig(BraidWord(2, ((1, -1),) * 3)) == 0


def test_jones_examples():
    assert jones(BraidWord(1)) == ONE
    # -t^-4 + t^-3 + t^-1 in units of t^(1/2)
    assert jones(parse_braid("s1 s1 s1")) == LaurentPoly.from_dict({-8: -1, -6: 1, -2: 1})
    assert jones(parse_braid("s1 s2^-1 s1 s2^-1")) == LaurentPoly.from_dict({-4: 1, -2: -1, 0: 1, 2: -1, 4: 1})
    assert jones(BraidWord(2, ((1, 1),) * 31)) is None
    assert jones(BraidWord(2, ((1, 1),) * 31), cap=40) is not None


def test_fox_milnor():
    assert fox_milnor_search(TREFOIL * TREFOIL) == L("1 -1 1 @ 0")
    assert fox_milnor_search(ONE) == ONE
    assert fox_milnor_search(L("2 -3 2 @ -1")) is None
    w = fox_milnor_search(L("-2 5 -2 @ -1"))
    assert w is not None and (w * w.reflect()).symmetrized() == L("-2 5 -2 @ -1")
    assert fox_milnor_search(L("1 -3 6 -7 6 -3 1 @ -3")) is None


def test_burau_charpoly():
    # sigma_1^3 on 2 strands: B = (-t)^3
    cp = burau_charpoly(parse_braid("s1 s1 s1"))
    assert cp == [L("1 @ 3"), ONE]
    B = burau_matrix(parse_braid("s1 s2^-1", 3))
    assert len(B) == 2


def test_invariant_set_json():
    inv = invariant_set(parse_braid("s1 s2^-1 s1 s2^-1"))
    assert InvariantSet.from_json(inv.to_json()) == inv
    assert inv.to_json()["alexander"] == "-1 3 -1 @ -1"
    assert inv.agrees_up_to_mirror(invariant_set(parse_braid("s1^-1 s2 s1^-1 s2")))
    assert not inv.agrees_up_to_mirror(invariant_set(parse_braid("s1 s1 s1")))
