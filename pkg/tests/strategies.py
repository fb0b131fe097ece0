from hypothesis import strategies as st

from cylinder_knots.braid import BraidWord


@st.composite
def braid_words(draw, min_strands=2, max_strands=4, min_len=0, max_len=12):
    s = draw(st.integers(min_strands, max_strands))
    letters = draw(
        st.lists(st.tuples(st.integers(1, s - 1), st.sampled_from([1, -1])), min_size=min_len, max_size=max_len)
    )
    return BraidWord(s, tuple(letters))


def knot_words(**kw):
    return braid_words(**kw).filter(lambda w: w.is_knot())


laurent_coeffs = st.lists(st.integers(-20, 20), max_size=7)
