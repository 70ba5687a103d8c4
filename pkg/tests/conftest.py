import random

import pytest

from preorder_bca import GroundSet, Preorder, Relation, validate_preorder


def random_preorder(rng: random.Random, n: int, density: float = 0.3) -> Preorder:
    """Closure of a random pair set; any closure is a preorder."""
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < density:
                rows[i] |= 1 << j
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rows[k]
    ground = GroundSet(tuple(f"x{t}" for t in range(1, n + 1)))
    return validate_preorder(Relation(ground, tuple(rows)))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(1729)
