import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from garside.braid import braid_structure, random_simple
from garside.core import normalize


@pytest.fixture
def rng():
    return random.Random(20260811)


def random_element(rng, n, max_len=4, min_len=0, min_power=-2, max_power=2):
    st = braid_structure(n)
    word = [random_simple(rng, n) for _ in range(rng.randint(min_len, max_len))]
    return normalize(st, rng.randint(min_power, max_power), word)
