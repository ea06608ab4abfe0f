import pytest

from vknot.diagram import (
    alexander_numbering,
    basepoint_positions,
    crossing_change,
    index,
    is_mod_p_numberable,
    numbering_is_valid,
    parse_gauss_code,
    serialize_gauss_code,
    shift_basepoint,
    smooth,
    warping_degree,
)
from vknot.enumeration import enumerate_all_diagrams
from vknot.errors import GaussCodeError, PreconditionError, UnknownChordError

TREFOIL = "O1+U2+O3+U1+O2+U3+"
VIRTUAL_TREFOIL = "O1+O2+U1+U2+"


def test_parse_basic_structure():
    G = parse_gauss_code(VIRTUAL_TREFOIL)
    assert G.num_circles == 1
    assert G.num_chords == 2
    assert G.sign(1) == G.sign(2) == 1
    # both chords interleave: tail, tail, head, head
    assert [h for _, h in G.circles[0]] == [False, False, True, True]


def test_parse_trefoil_positions():
    G = parse_gauss_code(TREFOIL)
    assert G.num_chords == 3
    assert G.tail(1) == (0, 0) and G.head(1) == (0, 3)
    assert G.tail(2) == (0, 4) and G.head(2) == (0, 1)
    assert G.tail(3) == (0, 2) and G.head(3) == (0, 5)


@pytest.mark.parametrize(
    "bad",
    [
        "O1+U1-",            # sign mismatch
        "O1+O1+U1+",         # duplicate O token
        "O1+",               # missing partner
        "O1+U2+",            # two orphans
        "Q1+U1+",            # bad letter
        "O1+*U1+*O2+U2+",    # two basepoint markers in a circle
    ],
)
def test_parse_errors(bad):
    with pytest.raises(GaussCodeError):
        parse_gauss_code(bad)


def test_parse_whitespace_and_star():
    assert parse_gauss_code(" O1+ U1+ ") == parse_gauss_code("O1+U1+")
    # a basepoint marker rotates the circle so the marked gap comes first
    assert parse_gauss_code("O1+*U1+") == parse_gauss_code("U1+O1+")
    assert parse_gauss_code("O1+U1+*") == parse_gauss_code("O1+U1+")


def test_parse_multi_circle_and_empty():
    G = parse_gauss_code("O1+;U1+")
    assert G.num_circles == 2
    unknot = parse_gauss_code("")
    assert unknot.num_circles == 1 and unknot.num_chords == 0
    two = parse_gauss_code(";")
    assert two.num_circles == 2


def test_round_trip_on_enumerated_diagrams():
    for G in enumerate_all_diagrams(3):
        assert parse_gauss_code(serialize_gauss_code(G)) == G


def test_index_examples():
    G = parse_gauss_code(TREFOIL)
    assert [index(G, c) for c in G.chord_ids()] == [0, 0, 0]
    VT = parse_gauss_code(VIRTUAL_TREFOIL)
    assert sorted(index(VT, c) for c in VT.chord_ids()) == [-1, 1]
    kink = parse_gauss_code("O1+U1+O2+U2+")
    assert index(kink, 1) == index(kink, 2) == 0
    assert index(VT, 1, flip=True) == -index(VT, 1)
    with pytest.raises(UnknownChordError):
        index(G, 99)


def test_index_gauss_parity():
    # every chord of a realizable code interleaves evenly many chords, so
    # index vanishing on the trefoil is not an accident of signs
    G = parse_gauss_code("O1-U2-O3-U1-O2-U3-")
    assert [index(G, c) for c in G.chord_ids()] == [0, 0, 0]


def test_index_basepoint_invariance():
    for G in enumerate_all_diagrams(3):
        base = {c: index(G, c) for c in G.chord_ids()}
        for moved in basepoint_positions(G):
            assert {c: index(moved, c) for c in moved.chord_ids()} == base


def test_numberability_examples():
    G = parse_gauss_code(TREFOIL)
    assert is_mod_p_numberable(G, 2)
    assert is_mod_p_numberable(G, 0)
    VT = parse_gauss_code(VIRTUAL_TREFOIL)
    assert not is_mod_p_numberable(VT, 2)
    assert is_mod_p_numberable(VT, 1)
    with pytest.raises(ValueError):
        is_mod_p_numberable(G, -1)


def test_numbering_matches_numberability():
    # the constructive labeling succeeds exactly when the index test says so
    for G in enumerate_all_diagrams(4):
        for p in (0, 2, 3, 4):
            numbering = alexander_numbering(G, p)
            assert (numbering is not None) == is_mod_p_numberable(G, p)
            if numbering is not None:
                assert numbering_is_valid(G, numbering)


def test_numbering_unknot_and_failure():
    n = alexander_numbering(parse_gauss_code(""), 5)
    assert n.labels == ((0,),)
    assert alexander_numbering(parse_gauss_code(VIRTUAL_TREFOIL), 2) is None


def test_numbering_two_circles():
    # a chord from one circle to another forces the walk closure condition
    G = parse_gauss_code("O1+;U1+")
    assert alexander_numbering(G, 2) is None
    assert alexander_numbering(G, 1) is not None
    H = parse_gauss_code("O1+U2+;O2+U1+")
    n = alexander_numbering(H, 0)
    assert n is not None and numbering_is_valid(H, n)


def test_warping_degree():
    assert warping_degree(parse_gauss_code("O1+U1+")) == 0
    assert warping_degree(parse_gauss_code("U1+O1+")) == 1
    assert warping_degree(parse_gauss_code(TREFOIL)) == 1
    with pytest.raises(PreconditionError):
        warping_degree(parse_gauss_code("O1+;U1+"))


def test_smooth_splits_single_kink():
    S = smooth(parse_gauss_code("O1+U1+"), 1)
    assert S.num_circles == 2
    assert all(len(c) == 0 for c in S.circles)


def test_smooth_interleaved_chord_connects_circles():
    VT = parse_gauss_code(VIRTUAL_TREFOIL)
    S = smooth(VT, 1)
    assert S.num_circles == 2
    assert S.tail(2)[0] != S.head(2)[0]
    back = smooth(S, 2)
    assert back.num_circles == 1


def test_smooth_counts():
    for G in enumerate_all_diagrams(3):
        for c in G.chord_ids():
            S = smooth(G, c)
            assert abs(S.num_circles - G.num_circles) == 1
            assert sum(len(w) for w in S.circles) == sum(len(w) for w in G.circles) - 2
            assert smooth(crossing_change(G, c), c) == S


def test_crossing_change():
    G = parse_gauss_code("O1+U1+")
    assert serialize_gauss_code(crossing_change(G, 1)) == "U1-O1-"
    for G in enumerate_all_diagrams(3):
        for c in G.chord_ids():
            assert crossing_change(crossing_change(G, c), c) == G


def test_crossing_change_flips_warping_degree():
    for G in enumerate_all_diagrams(4):
        for c in G.chord_ids():
            assert abs(warping_degree(crossing_change(G, c)) - warping_degree(G)) == 1


def test_shift_basepoint_round_trip():
    G = parse_gauss_code(TREFOIL)
    assert shift_basepoint(shift_basepoint(G, 0, True), 0, False) == G
    assert len(basepoint_positions(G)) == 6
