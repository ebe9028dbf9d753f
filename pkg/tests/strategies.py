from hypothesis import strategies as st

from fanoplanes.partitions import Partition


@st.composite
def partitions(draw, max_weight=8, max_rows=None):
    n = draw(st.integers(0, max_weight))
    parts = []
    bound = n
    while n:
        if max_rows is not None and len(parts) == max_rows:
            break
        x = draw(st.integers(1, min(n, bound)))
        parts.append(x)
        n -= x
        bound = x
    return Partition(parts)
