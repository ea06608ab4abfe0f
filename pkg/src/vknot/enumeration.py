"""Exhaustive and randomized generation of based Gauss diagrams."""

from __future__ import annotations

import itertools

from .arrows import _matchings
from .diagram import BasedGaussDiagram, make_diagram


def raw_diagram_count(k):
    """(2k-1)!! * 4^k, the unreduced one-circle census size."""
    total = 4**k
    for odd in range(1, 2 * k, 2):
        total *= odd
    return total


def enumerate_diagrams(k, canonical=False):
    """All one-circle based diagrams with exactly ``k`` chords.

    Yields every combination of endpoint pairing, chord orientation and
    signs; with ``canonical=True`` diagrams equal up to rotation (basepoint
    placement) are emitted once.
    """
    if k < 0:
        raise ValueError("chord count must be >= 0")
    seen = set()
    for matching in _matchings(tuple(range(2 * k))):
        for heads in itertools.product((False, True), repeat=k):
            slots = [None] * (2 * k)
            for chord, ((a, b), head_at_a) in enumerate(zip(matching, heads), start=1):
                slots[a] = (chord, head_at_a)
                slots[b] = (chord, not head_at_a)
            for signs in itertools.product((1, -1), repeat=k):
                diagram = make_diagram(
                    [slots], {c: s for c, s in zip(range(1, k + 1), signs)}
                )
                if canonical:
                    key = rotation_canonical_key(diagram)
                    if key in seen:
                        continue
                    seen.add(key)
                yield diagram


def enumerate_all_diagrams(max_chords, canonical=False):
    for k in range(max_chords + 1):
        yield from enumerate_diagrams(k, canonical=canonical)


def rotation_canonical_key(diagram):
    """Minimal canonical key over basepoint rotations of a one-circle diagram."""
    word = diagram.circles[0]
    if not word:
        return ((),)
    keys = []
    for r in range(len(word)):
        rotated = BasedGaussDiagram((word[r:] + word[:r],), diagram.signs)
        keys.append(rotated.canonical_key())
    return min(keys)


def random_knot_diagram(k, rng):
    """Uniform-ish random one-circle diagram with ``k`` chords."""
    order = list(range(2 * k))
    rng.shuffle(order)
    slots = [None] * (2 * k)
    signs = {}
    for chord in range(1, k + 1):
        a, b = order[2 * chord - 2], order[2 * chord - 1]
        head_at_a = rng.random() < 0.5
        slots[a] = (chord, head_at_a)
        slots[b] = (chord, not head_at_a)
        signs[chord] = rng.choice((1, -1))
    return make_diagram([slots], signs)


def random_link_diagram(k, rng, require_connecting=True):
    """Random two-circle diagram with ``k`` chords.

    With ``require_connecting`` at least one chord joins the circles, so the
    diagram has a crossing whose smoothing merges the components.
    """
    if k < 1:
        raise ValueError("a two-circle diagram needs at least one chord")
    while True:
        order = list(range(2 * k))
        rng.shuffle(order)
        slots = [None] * (2 * k)
        signs = {}
        for chord in range(1, k + 1):
            a, b = order[2 * chord - 2], order[2 * chord - 1]
            head_at_a = rng.random() < 0.5
            slots[a] = (chord, head_at_a)
            slots[b] = (chord, not head_at_a)
            signs[chord] = rng.choice((1, -1))
        split = rng.randint(0, 2 * k)
        diagram = make_diagram([slots[:split], slots[split:]], signs)
        if not require_connecting or connecting_chords(diagram):
            return diagram


def connecting_chords(diagram):
    """Chords whose endpoints lie on two different circles."""
    return [
        c
        for c, _ in diagram.signs
        if diagram.tail(c)[0] != diagram.head(c)[0]
    ]
