from hypothesis import strategies as st

bipolar = st.sampled_from([1, -1])


@st.composite
def memory_sets(draw, max_n=8, max_m=6, min_n=1):
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(1, max_m))
    return [tuple(draw(st.lists(bipolar, min_size=n, max_size=n))) for _ in range(m)]
