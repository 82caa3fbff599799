import random
from fractions import Fraction as F

import pytest

import fdhscale as f


def make_staircase() -> f.Dataset:
    """Four single-input single-output units along a staircase frontier."""
    return f.validate_dataset(
        ["A", "B", "C", "D"],
        [[F(1)], [F(3)], [F(5)], [F(6)]],
        [[F(2)], [F(4)], [F(5)], [F(13)]],
    )


def with_dominated(extra_name="E", x=(4,), y=(4,)) -> f.Dataset:
    d = make_staircase()
    return f.validate_dataset(
        list(d.names) + [extra_name],
        [list(r) for r in d.inputs] + [[F(v) for v in x]],
        [list(r) for r in d.outputs] + [[F(v) for v in y]],
    )


@pytest.fixture
def stair() -> f.Dataset:
    return make_staircase()


@pytest.fixture
def stair_float() -> f.Dataset:
    return make_staircase().as_float()


@pytest.fixture
def stair_csv(tmp_path):
    path = tmp_path / "stair.csv"
    path.write_text(
        "dmu,in_labor,out_widgets\nA,1,2\nB,3,4\nC,5,5\nD,6,13\n", encoding="utf-8"
    )
    return path


@pytest.fixture(scope="session")
def random_batch() -> list:
    """The seeded random datasets shared by the acceptance criteria."""
    out = []
    for t in range(1000):
        rng = random.Random(f"acceptance:{t}")
        out.append(
            f.random_dataset(t, rng.randint(1, 8), rng.randint(1, 3), rng.randint(1, 3))
        )
    return out
