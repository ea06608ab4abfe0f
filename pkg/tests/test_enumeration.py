import random

import pytest

from vknot.diagram import parse_gauss_code
from vknot.enumeration import (
    connecting_chords,
    enumerate_diagrams,
    random_knot_diagram,
    random_link_diagram,
    raw_diagram_count,
    rotation_canonical_key,
)


@pytest.mark.parametrize("k,count", [(0, 1), (1, 4), (2, 48), (3, 960)])
def test_raw_counts(k, count):
    assert raw_diagram_count(k) == count
    assert sum(1 for _ in enumerate_diagrams(k)) == count


def test_enumerate_validates_input():
    with pytest.raises(ValueError):
        list(enumerate_diagrams(-1))


def test_canonical_dedup():
    # one-chord diagrams: the two token orders are rotations of each other
    assert sum(1 for _ in enumerate_diagrams(1, canonical=True)) == 2
    raw = sum(1 for _ in enumerate_diagrams(2))
    canon = sum(1 for _ in enumerate_diagrams(2, canonical=True))
    assert canon < raw


def test_rotation_canonical_key_identifies_rotations():
    a = parse_gauss_code("O1+U1+")
    b = parse_gauss_code("U1+O1+")
    assert rotation_canonical_key(a) == rotation_canonical_key(b)
    assert a != b


def test_random_generators_are_seeded():
    a = random_knot_diagram(5, random.Random(1))
    b = random_knot_diagram(5, random.Random(1))
    assert a == b
    assert a.num_chords == 5 and a.num_circles == 1

    link = random_link_diagram(4, random.Random(2))
    assert link.num_circles == 2
    assert connecting_chords(link)
    with pytest.raises(ValueError):
        random_link_diagram(0, random.Random(0))
