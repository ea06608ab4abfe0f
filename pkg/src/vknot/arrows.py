"""Arrow diagrams, jump traversal, and the ascending/descending polynomials.

An arrow diagram is a based chord diagram with directed, unsigned chords
(arrows).  Pairing an arrow diagram against a based Gauss diagram counts the
order- and direction-preserving embeddings of its arrows onto chords, each
weighted by the product of the chord signs hit.

The traversal that defines *one-component*, *ascending* and *descending*
starts at the first circle's basepoint and travels along the orientation;
whenever an endpoint is reached by travel, the walk jumps to the other end
of that arrow and resumes from there, stopping on return to the start.  An
arrow is classified by which of its endpoints the travel reaches first:
heads-first everywhere is ascending, tails-first everywhere descending.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .diagram import basepoint_positions
from .errors import GaussCodeError, PreconditionError

_ARROW_TOKEN = re.compile(r"([OU])(\d+)")


@dataclass(frozen=True)
class ArrowDiagram:
    """Based circles with directed unsigned chords; tails are ``O`` slots."""

    circles: tuple

    def __post_init__(self):
        seen = {}
        for circle in self.circles:
            for chord, is_head in circle:
                key = (chord, is_head)
                if key in seen:
                    raise GaussCodeError("arrow %r has two %s endpoints" % (chord, "head" if is_head else "tail"))
                seen[key] = True
        for chord, is_head in list(seen):
            if (chord, not is_head) not in seen:
                raise GaussCodeError("arrow %r is missing an endpoint" % chord)

    @property
    def num_circles(self):
        return len(self.circles)

    @property
    def num_arrows(self):
        return sum(len(c) for c in self.circles) // 2

    def canonical_key(self):
        relabel = {}
        out = []
        for circle in self.circles:
            word = []
            for chord, is_head in circle:
                if chord not in relabel:
                    relabel[chord] = len(relabel)
                word.append((relabel[chord], is_head))
            out.append(tuple(word))
        return tuple(out)

    def __str__(self):
        return serialize_arrow_code(self)


def parse_arrow_code(text):
    """Parse the unsigned variant of the Gauss code grammar (``"U1O2O1U2"``)."""
    circles = []
    for chunk in text.split(";"):
        chunk = "".join(chunk.split())
        word = []
        pos = 0
        while pos < len(chunk):
            m = _ARROW_TOKEN.match(chunk, pos)
            if not m:
                raise GaussCodeError("bad token at %r" % chunk[pos : pos + 8])
            ou, label = m.groups()
            word.append((int(label), ou == "U"))
            pos = m.end()
        circles.append(tuple(word))
    return ArrowDiagram(tuple(circles))


def serialize_arrow_code(arrow_diagram):
    return ";".join(
        "".join("%s%d" % ("U" if is_head else "O", chord) for chord, is_head in circle)
        for circle in arrow_diagram.circles
    )


# -- jump traversal ---------------------------------------------------------


def _walk(words):
    """Run the jump traversal over filtered endpoint words.

    Returns (reached endpoints in travel order as (circle, pos),
    visited gap count, first-reached role per chord).
    """
    positions = {}
    total_gaps = 0
    for ci, word in enumerate(words):
        total_gaps += max(1, len(word))
        for pos, (chord, is_head) in enumerate(word):
            positions[(chord, is_head)] = (ci, pos)
    reached = []
    first = {}
    cur = (0, 0)
    visited = 0
    for _ in range(total_gaps + 1):
        visited += 1
        ci, g = cur
        word = words[ci]
        if not word:
            break
        chord, is_head = word[g]
        reached.append((ci, g))
        if chord not in first:
            first[chord] = is_head
        cj, pj = positions[(chord, not is_head)]
        cur = (cj, (pj + 1) % len(words[cj]))
        if cur == (0, 0):
            break
    else:
        raise AssertionError("jump traversal failed to close up")
    return reached, visited, total_gaps, first


def jump_traversal(diagram):
    """Travel-reached endpoints in order, plus the set of visited gaps.

    Accepts either an :class:`ArrowDiagram` or a
    :class:`~vknot.diagram.BasedGaussDiagram`.  Gap ``(ci, g)`` is the arc
    before endpoint ``g`` of circle ``ci``; the primary basepoint sits in gap
    ``(0, 0)``.
    """
    reached, _, _, _ = _walk(diagram.circles)
    visited_gaps = {(0, 0)}
    visited_gaps.update(reached)
    return tuple(reached), frozenset(visited_gaps)


def _classify(words):
    """(one_component, ascending, descending) for endpoint words."""
    _, visited, total, first = _walk(words)
    one = visited == total
    asc = all(first.values())
    des = not any(first.values())
    return one, asc, des


def is_one_component(diagram):
    """True iff the jump traversal visits every arc of every circle."""
    one, _, _ = _classify(diagram.circles)
    return one


def is_ascending(diagram):
    """True iff every arrow is first reached by travel at its head."""
    _, asc, _ = _classify(diagram.circles)
    return asc


def is_descending(diagram):
    """True iff every arrow is first reached by travel at its tail."""
    _, _, des = _classify(diagram.circles)
    return des


# -- Conway combinations ------------------------------------------------------


@dataclass(frozen=True)
class ConwaySet:
    """All one-component ascending (or descending) diagrams of one degree."""

    degree: int
    circles: int
    variant: str
    members: tuple

    def __len__(self):
        return len(self.members)


def _matchings(items):
    if not items:
        yield ()
        return
    first = items[0]
    for i in range(1, len(items)):
        pair = (first, items[i])
        rest = items[1:i] + items[i + 1 :]
        for sub in _matchings(rest):
            yield (pair,) + sub


def _variant_name(variant):
    v = variant.lower()
    if v in ("asc", "ascending"):
        return "ascending"
    if v in ("des", "desc", "descending"):
        return "descending"
    raise ValueError("variant must be 'ascending' or 'descending'")


def conway_set(degree, circles, variant):
    """Enumerate the one-component ascending/descending arrow diagrams.

    Even degrees live on one circle, odd degrees on two; anything else is a
    parity mismatch.  Members are deduplicated up to based isomorphism
    (relabeling of arrows).
    """
    variant = _variant_name(variant)
    if degree < 0 or circles not in (1, 2):
        raise ValueError("degree must be >= 0 and circles 1 or 2")
    if (degree % 2 == 0) != (circles == 1):
        raise ValueError("degree %d cannot live on %d circle(s)" % (degree, circles))
    n = 2 * degree
    splits = [n] if circles == 1 else list(range(n + 1))
    want_asc = variant == "ascending"
    seen = {}
    for m1 in splits:
        for matching in _matchings(tuple(range(n))):
            for dirs in itertools.product((False, True), repeat=degree):
                slots = [None] * n
                for arrow, ((a, b), tail_first) in enumerate(zip(matching, dirs), start=1):
                    slots[a] = (arrow, not tail_first)
                    slots[b] = (arrow, tail_first)
                if circles == 1:
                    words = (tuple(slots),)
                else:
                    words = (tuple(slots[:m1]), tuple(slots[m1:]))
                one, asc, des = _classify(words)
                if not one or not (asc if want_asc else des):
                    continue
                cand = ArrowDiagram(words)
                seen.setdefault(cand.canonical_key(), cand)
    members = tuple(seen[k] for k in sorted(seen))
    return ConwaySet(degree, circles, variant, members)


# -- pairings ---------------------------------------------------------------


def _subset_words(circles, subset):
    return tuple(
        tuple((c, ih) for c, ih in circle if c in subset) for circle in circles
    )


def subset_pattern(diagram, chords):
    """The based arrow diagram induced by a subset of a Gauss diagram's chords."""
    return ArrowDiagram(_subset_words(diagram.circles, frozenset(chords)))


def pairing(arrow_diagram, diagram):
    """Signed count of embeddings of ``arrow_diagram`` into ``diagram``.

    Circle counts must match; circle ``i`` maps onto circle ``i`` with
    basepoints preserved, so an embedding is just a choice of chords whose
    induced pattern is isomorphic to ``arrow_diagram``.
    """
    if arrow_diagram.num_circles != diagram.num_circles:
        raise PreconditionError(
            "cannot pair a %d-circle arrow diagram with a %d-circle diagram"
            % (arrow_diagram.num_circles, diagram.num_circles)
        )
    target = arrow_diagram.canonical_key()
    k = arrow_diagram.num_arrows
    sign = dict(diagram.signs)
    total = 0
    for subset in itertools.combinations(diagram.chord_ids(), k):
        if subset_pattern(diagram, subset).canonical_key() == target:
            prod = 1
            for c in subset:
                prod *= sign[c]
            total += prod
    return total


def conway_pairing(diagram, degree, variant):
    """Pairing of the full degree-``degree`` Conway combination with ``diagram``.

    Equals the sum of :func:`pairing` over every member of
    ``conway_set(degree, ...)`` but runs directly over chord subsets of the
    diagram, classifying each induced pattern by jump traversal.
    """
    want_asc = _variant_name(variant) == "ascending"
    sign = dict(diagram.signs)
    total = 0
    for subset in itertools.combinations(diagram.chord_ids(), degree):
        words = _subset_words(diagram.circles, frozenset(subset))
        one, asc, des = _classify(words)
        if one and (asc if want_asc else des):
            prod = 1
            for c in subset:
                prod *= sign[c]
            total += prod
    return total


def conway_pairing_table(diagram, required_chord=None):
    """All Conway pairings of a diagram at once.

    Returns ``{size: (ascending_sum, descending_sum)}`` over chord-subset
    sizes.  With ``required_chord`` set, only subsets containing that chord
    are counted (sums over the remaining subsets cancel in skein
    differences).
    """
    sign = dict(diagram.signs)
    chords = diagram.chord_ids()
    base = ()
    if required_chord is not None:
        base = (required_chord,)
        chords = tuple(c for c in chords if c != required_chord)
    table = {}
    for r in range(len(chords) + 1):
        for rest in itertools.combinations(chords, r):
            subset = base + rest
            words = _subset_words(diagram.circles, frozenset(subset))
            one, asc, des = _classify(words)
            if not one:
                continue
            prod = 1
            for c in subset:
                prod *= sign[c]
            entry = table.setdefault(len(subset), [0, 0])
            if asc:
                entry[0] += prod
            if des:
                entry[1] += prod
    return {size: (a, d) for size, (a, d) in table.items()}


# -- polynomials -------------------------------------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in one variable, stored as sorted (degree, coeff)."""

    coeffs: tuple

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def coefficient(self, degree):
        for d, c in self.coeffs:
            if d == degree:
                return c
        return 0

    @property
    def degree(self):
        return self.coeffs[-1][0] if self.coeffs else 0

    def __call__(self, x):
        return sum(c * x**d for d, c in self.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for d, c in other.coeffs:
            out[d] = out.get(d, 0) + c
        return IntPolynomial.from_dict(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for d, c in other.coeffs:
            out[d] = out.get(d, 0) - c
        return IntPolynomial.from_dict(out)

    def scaled(self, factor, shift=0):
        """``factor * z**shift * self``."""
        return IntPolynomial.from_dict({d + shift: c * factor for d, c in self.coeffs})

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in self.coeffs:
            mag = abs(c)
            term = "z" if d == 1 else "z^%d" % d
            if d == 0:
                body = str(mag)
            elif mag == 1:
                body = term
            else:
                body = "%d %s" % (mag, term)
            parts.append(("- " if c < 0 else "+ " if parts else "") + body)
        return " ".join(parts) if parts[0][0] != "-" else "-" + " ".join(parts)[2:]


ZERO = IntPolynomial(())
ONE = IntPolynomial(((0, 1),))


def _poly_from_table(diagram, table, column, max_degree):
    if diagram.num_circles != 1:
        raise PreconditionError("ascending/descending polynomials are defined for knots")
    if max_degree is None:
        max_degree = diagram.num_chords
    coeffs = {}
    for size, sums in table.items():
        if size <= max_degree:
            coeffs[size] = sums[column]
    return IntPolynomial.from_dict(coeffs)


def ascending_polynomial(diagram, max_degree=None):
    """Sum over even degrees of the ascending Conway pairings times z^degree."""
    return _poly_from_table(diagram, conway_pairing_table(diagram), 0, max_degree)


def descending_polynomial(diagram, max_degree=None):
    return _poly_from_table(diagram, conway_pairing_table(diagram), 1, max_degree)


def v2(diagram, p=2, certify=False):
    """Coefficient of z^2 of the ascending polynomial, reduced mod ``p``.

    With ``certify=True`` the value is recomputed for every basepoint
    position and for the descending variant; all of them must agree mod
    ``p``, which requires the diagram to be mod ``p`` numberable.
    """
    from .diagram import is_mod_p_numberable

    base = conway_pairing(diagram, 2, "ascending")
    if certify:
        if not is_mod_p_numberable(diagram, p):
            raise PreconditionError("certified v2 needs a mod %d numberable diagram" % p)
        for moved in basepoint_positions(diagram):
            for variant in ("ascending", "descending"):
                val = conway_pairing(moved, 2, variant)
                agree = (val - base) % p == 0 if p else val == base
                if not agree:
                    raise PreconditionError(
                        "v2 certification failed on %s (%s, got %d vs %d)"
                        % (moved, variant, val, base)
                    )
    return base % p if p else base
