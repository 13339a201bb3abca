import math
import random

import pytest

from adjquot.curves import FAMILIES, emit_curve, orthogonality_defects


@pytest.mark.parametrize("family", FAMILIES)
def test_every_family_validates(family):
    c = emit_curve(family, {}, 30)
    assert len(c.points) == 30 and all(c.valid)
    assert c.to_csv().splitlines()[0] == ",".join(c.columns)


def test_ellipse_degenerates_to_segment():
    c = emit_curve("ellipse", {"t": 0}, 50)
    assert c.degenerate == "double segment [-2, 2]"
    assert all(abs(y) < 1e-12 and -2 - 1e-12 <= x <= 2 + 1e-12 for _, x, y in c.points)


def test_hyperbola_degenerates_to_ray():
    c = emit_curve("hyperbola", {"phi": 0}, 50)
    assert c.degenerate == "double ray from 2"
    assert all(abs(y) < 1e-12 and x >= 2 - 1e-12 for _, x, y in c.points)
    assert emit_curve("hyperbola", {"phi": math.pi}, 5).degenerate == "double ray from -2"


def test_deltoid_hundred_points_exact():
    c = emit_curve("deltoid", {}, 100)
    assert all(c.valid) and len(set(c.points)) == 100


def test_bad_arguments():
    with pytest.raises(ValueError):
        emit_curve("spiral")
    with pytest.raises(ValueError):
        emit_curve("ellipse", {}, 1)


def test_foliations_are_orthogonal():
    rng = random.Random(1)
    pts = [(rng.uniform(0.2, 2) * rng.choice((-1, 1)), rng.uniform(0.1, 3.0)) for _ in range(50)]
    assert max(orthogonality_defects(pts)) < 1e-8


def test_json_round_trip():
    import json

    d = json.loads(emit_curve("canoe", {}, 5).to_json())
    assert d["family"] == "canoe" and d["all_valid"] and len(d["points"]) == 5
