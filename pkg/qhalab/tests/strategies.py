import numpy as np
from hypothesis import strategies as st

from qhalab.models import GroupParams
from qhalab.utils.rng import generator

ODD_MODULI = st.sampled_from([3, 5, 7, 9, 11])
SEEDS = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def params_and_rng(draw) -> tuple[GroupParams, np.random.Generator]:
    return GroupParams(N=draw(ODD_MODULI)), generator(draw(SEEDS))
