import os
import sys
from pathlib import Path

import hypothesis
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from krstrata.weyl import ExtAffineElement, FrobeniusTuple  # noqa: E402

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


@st.composite
def elements(draw, m=None, max_rank=8, lo=-3, hi=3):
    if m is None:
        m = draw(st.integers(1, max_rank))
    w = draw(st.permutations(range(1, m + 1)))
    lam = draw(st.lists(st.integers(lo, hi), min_size=m, max_size=m))
    return ExtAffineElement(tuple(w), tuple(lam))


@st.composite
def element_pairs(draw, count=2, max_rank=8):
    m = draw(st.integers(1, max_rank))
    return tuple(draw(elements(m=m)) for _ in range(count))


@st.composite
def newton_tuples(draw, max_rank=5, max_f=3, hi=3):
    """Tuples satisfying lam >= 0 and (lam(i) = 0 => w(i) <= i)."""
    m = draw(st.integers(1, max_rank))
    f = draw(st.integers(1, max_f))
    comps = []
    for _ in range(f):
        w = draw(st.permutations(range(1, m + 1)))
        lam = tuple(draw(st.integers(0 if w[i] <= i + 1 else 1, hi)) for i in range(m))
        comps.append(ExtAffineElement(tuple(w), lam))
    return FrobeniusTuple(comps)
