import pytest
from hypothesis import settings
from hypothesis import strategies as st

from dyckalg.dyck import DyckPath

# exhaustive checks inside examples make per-example timing noisy
settings.register_profile("default", deadline=None)
settings.load_profile("default")

# Worked example paths: red ~> blue = green_imp, ~black = green_neg.
RED = "uduuuudduddudduududd"
BLUE = "uuduudududdduuududdd"
GREEN_IMP = "uuuudduudddduuuudddd"
BLACK = "uuuddudduuduuuuddduuddddududuudd"
GREEN_NEG = "udududuuddududududududuuuuddddud"


@pytest.fixture
def red():
    return DyckPath(RED)


@pytest.fixture
def blue():
    return DyckPath(BLUE)


@pytest.fixture
def black():
    return DyckPath(BLACK)


@st.composite
def dyck_paths(draw, min_n=1, max_n=12, n=None):
    """Random Dyck path built step by step from drawn coin flips."""
    if n is None:
        n = draw(st.integers(min_n, max_n))
    word, ups, downs = [], 0, 0
    while ups + downs < 2 * n:
        can_up, can_down = ups < n, downs < ups
        if can_up and (not can_down or draw(st.booleans())):
            word.append("u")
            ups += 1
        else:
            word.append("d")
            downs += 1
    return DyckPath("".join(word))


@st.composite
def path_pairs(draw, max_n=12, k=2):
    n = draw(st.integers(1, max_n))
    return tuple(draw(dyck_paths(n=n)) for _ in range(k))
