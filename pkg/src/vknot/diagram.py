"""Based Gauss diagrams of virtual knots and links.

A diagram is one or more oriented circles carrying the endpoints of signed,
directed chords.  Every chord records one crossing of the underlying virtual
link diagram: the tail of the chord sits on the over-passage (an ``O`` token
in the Gauss code) and the head on the under-passage (a ``U`` token).  Each
circle carries a basepoint; internally every circle is stored so that its
endpoint sequence starts immediately after the basepoint, which makes the
basepoint the gap *before* endpoint 0.

Values are immutable; every operation returns a new diagram.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import GaussCodeError, PreconditionError, UnknownChordError

# An endpoint slot holds (chord id, is_head); is_head is True on the
# under-passage side of the chord.
Endpoint = tuple  # (int, bool)

_TOKEN = re.compile(r"(\*?)([OU])(\d+)([+-])")


@dataclass(frozen=True)
class BasedGaussDiagram:
    """Circles of endpoint slots plus chord signs.

    ``circles[i]`` lists the endpoints of circle ``i`` in traversal order
    starting just after that circle's basepoint.  ``signs`` is a sorted
    tuple of ``(chord_id, sign)`` pairs.
    """

    circles: tuple
    signs: tuple

    _sign_map: dict = field(init=False, repr=False, compare=False, default=None)
    _positions: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_sign_map", dict(self.signs))
        positions = {}
        for ci, circle in enumerate(self.circles):
            for pos, (chord, is_head) in enumerate(circle):
                key = (chord, is_head)
                if key in positions:
                    raise GaussCodeError(
                        "chord %r has two %s endpoints" % (chord, "head" if is_head else "tail")
                    )
                positions[key] = (ci, pos)
        for chord, sign in self.signs:
            if sign not in (1, -1):
                raise GaussCodeError("chord %r has sign %r, expected +1 or -1" % (chord, sign))
            if (chord, False) not in positions or (chord, True) not in positions:
                raise GaussCodeError("chord %r is missing an endpoint" % chord)
        if len(positions) != 2 * len(self.signs):
            extra = {c for c, _ in positions} - {c for c, _ in self.signs}
            raise GaussCodeError("endpoints found for unknown chord ids %s" % sorted(extra))
        object.__setattr__(self, "_positions", positions)

    # -- basic accessors -------------------------------------------------

    @property
    def num_circles(self):
        return len(self.circles)

    @property
    def num_chords(self):
        return len(self.signs)

    def chord_ids(self):
        return tuple(c for c, _ in self.signs)

    def sign(self, chord):
        try:
            return self._sign_map[chord]
        except KeyError:
            raise UnknownChordError(chord) from None

    def tail(self, chord):
        """(circle, position) of the over-passage endpoint."""
        self.sign(chord)
        return self._positions[(chord, False)]

    def head(self, chord):
        """(circle, position) of the under-passage endpoint."""
        self.sign(chord)
        return self._positions[(chord, True)]

    def endpoint_at(self, circle, pos):
        return self.circles[circle][pos]

    def canonical_key(self):
        """Structural key with chords relabeled by first occurrence."""
        relabel = {}
        out = []
        for circle in self.circles:
            word = []
            for chord, is_head in circle:
                if chord not in relabel:
                    relabel[chord] = len(relabel)
                word.append((relabel[chord], is_head, self._sign_map[chord]))
            out.append(tuple(word))
        return tuple(out)

    def __str__(self):
        return serialize_gauss_code(self)


def make_diagram(circles, signs):
    """Build a diagram from per-circle endpoint lists and a chord->sign map."""
    return BasedGaussDiagram(
        tuple(tuple(c) for c in circles),
        tuple(sorted(signs.items() if isinstance(signs, dict) else signs)),
    )


# -- signed Gauss codes ---------------------------------------------------


def parse_gauss_code(text):
    """Parse a signed Gauss code such as ``"O1+U2+O3+U1+O2+U3+"``.

    Circles are separated by ``;``.  A ``*`` before a token moves that
    circle's basepoint to the gap preceding the token (default: before the
    first token).  Whitespace is ignored.
    """
    circles = []
    chord_sign = {}
    seen = set()
    for chunk in text.split(";"):
        chunk = "".join(chunk.split())
        word = []
        star_at = None
        pos = 0
        while pos < len(chunk):
            if chunk[pos] == "*" and pos == len(chunk) - 1:
                # trailing star: gap after the last token, i.e. the default gap
                if star_at is not None:
                    raise GaussCodeError("circle has more than one basepoint marker")
                star_at = 0
                pos += 1
                continue
            m = _TOKEN.match(chunk, pos)
            if not m:
                raise GaussCodeError("bad token at %r" % chunk[pos : pos + 8])
            star, ou, label, sgn = m.groups()
            if star:
                if star_at is not None:
                    raise GaussCodeError("circle has more than one basepoint marker")
                star_at = len(word)
            chord = int(label)
            is_head = ou == "U"
            sign = 1 if sgn == "+" else -1
            if (chord, is_head) in seen:
                raise GaussCodeError("duplicate %s token for label %d" % (ou, chord))
            seen.add((chord, is_head))
            if chord in chord_sign and chord_sign[chord] != sign:
                raise GaussCodeError("sign mismatch between O and U tokens of label %d" % chord)
            chord_sign[chord] = sign
            word.append((chord, is_head))
            pos = m.end()
        if star_at:
            word = word[star_at:] + word[:star_at]
        circles.append(tuple(word))
    for chord in chord_sign:
        if (chord, False) not in seen or (chord, True) not in seen:
            raise GaussCodeError("label %d is missing its partner token" % chord)
    return make_diagram(circles, chord_sign)


def serialize_gauss_code(diagram):
    """Inverse of :func:`parse_gauss_code` (basepoints are always default)."""
    words = []
    for circle in diagram.circles:
        words.append(
            "".join(
                "%s%d%s" % ("U" if is_head else "O", chord, "+" if diagram.sign(chord) > 0 else "-")
                for chord, is_head in circle
            )
        )
    return ";".join(words)


# -- invariants of chords and arcs ----------------------------------------


def _require_knot(diagram, what):
    if diagram.num_circles != 1:
        raise PreconditionError("%s is defined for one-circle diagrams only" % what)


def _in_open_arc(pos, start, end, m):
    """True if ``pos`` lies strictly between ``start`` and ``end`` cyclically."""
    return (pos - start) % m < (end - start) % m and pos != start


def index(diagram, chord, flip=False):
    """Signed count of chords interleaved with ``chord``.

    A chord ``d`` crossing ``chord`` counts with weight ``+sign(d)`` when its
    tail lies on the arc running from the head of ``chord`` to its tail, and
    ``-sign(d)`` otherwise; the total is multiplied by ``sign(chord)``.
    ``flip`` swaps the left/right convention, negating the result; every
    predicate downstream only uses the value modulo p, which is unaffected.
    """
    _require_knot(diagram, "index")
    eps = diagram.sign(chord)
    _, t = diagram.tail(chord)
    _, h = diagram.head(chord)
    m = len(diagram.circles[0])
    total = 0
    for other, s in diagram.signs:
        if other == chord:
            continue
        _, td = diagram.tail(other)
        _, hd = diagram.head(other)
        if _in_open_arc(td, t, h, m) == _in_open_arc(hd, t, h, m):
            continue
        total += s if _in_open_arc(td, h, t, m) else -s
    value = eps * total
    return -value if flip else value


def _congruent(a, b, p):
    if p == 0:
        return a == b
    return (a - b) % p == 0


def is_mod_p_numberable(diagram, p):
    """True iff the diagram admits a mod ``p`` Alexander numbering.

    For knots this is the index criterion: every chord must have index
    congruent to 0 mod ``p`` (``p = 0`` meaning exactly zero, ``p = 2``
    checkerboard colorability).  Multi-circle diagrams fall back to solving
    the arc-labeling constraints directly.
    """
    if p < 0:
        raise ValueError("modulus must be >= 0")
    if diagram.num_circles == 1:
        return all(_congruent(index(diagram, c), 0, p) for c in diagram.chord_ids())
    return alexander_numbering(diagram, p) is not None


@dataclass(frozen=True)
class Numbering:
    """Labels on short arcs satisfying the crossing constraints mod ``p``.

    ``labels[ci][g]`` is the label of the gap before endpoint ``g`` of circle
    ``ci`` (a circle without endpoints has the single gap 0).
    """

    labels: tuple
    modulus: int

    def label(self, circle, gap):
        return self.labels[circle][gap]


def _walk_increments(diagram):
    """Per-circle prefix labels from the basepoint, over the integers.

    Crossing a tail lowers the running label by the chord sign; crossing a
    head raises it.  Returns (prefix lists, per-circle closing totals).
    """
    prefixes = []
    closures = []
    for circle in diagram.circles:
        w = [0]
        for chord, is_head in circle:
            d = diagram.sign(chord)
            w.append(w[-1] + (d if is_head else -d))
        closures.append(w[-1])
        prefixes.append(w[:-1] if circle else [0])
    return prefixes, closures


def alexander_numbering(diagram, p):
    """A mod ``p`` Alexander numbering of the short arcs, or None.

    Succeeds exactly when :func:`is_mod_p_numberable` does.  Labels are
    produced by walking each circle from its basepoint and then fixing the
    per-circle offsets against the over/under linkage constraint at every
    chord (the label after the tail must match the label before the head).
    """
    if p < 0:
        raise ValueError("modulus must be >= 0")
    w, closures = _walk_increments(diagram)
    if not all(_congruent(c, 0, p) for c in closures):
        return None
    ncirc = diagram.num_circles
    # offset[ci] - offset[cj] must equal each linkage discrepancy mod p
    constraints = []
    for chord, _ in diagram.signs:
        ci, it = diagram.tail(chord)
        cj, jh = diagram.head(chord)
        after_tail = w[ci][(it + 1) % len(diagram.circles[ci])]
        before_head = w[cj][jh]
        constraints.append((ci, cj, before_head - after_tail))
    offset = [None] * ncirc
    adj = [[] for _ in range(ncirc)]
    for ci, cj, diff in constraints:
        if ci == cj:
            if not _congruent(diff, 0, p):
                return None
        else:
            adj[ci].append((cj, diff))
            adj[cj].append((ci, -diff))
    for start in range(ncirc):
        if offset[start] is not None:
            continue
        offset[start] = 0
        queue = [start]
        while queue:
            ci = queue.pop()
            for cj, diff in adj[ci]:
                want = offset[ci] + diff
                if offset[cj] is None:
                    offset[cj] = want
                    queue.append(cj)
                elif not _congruent(offset[cj], want, p):
                    return None
    labels = tuple(
        tuple((offset[ci] + v) % p if p else offset[ci] + v for v in w[ci])
        for ci in range(ncirc)
    )
    return Numbering(labels, p)


def numbering_is_valid(diagram, numbering):
    """Check the four-arc constraints of ``numbering`` at every chord.

    At a positive chord the label drops by one along the over strand, rises
    by one along the under strand, and the outgoing over arc agrees with the
    incoming under arc; at a negative chord the shifts reverse.
    """
    p = numbering.modulus
    lab = numbering.label

    def gaps(ci, pos):
        m = len(diagram.circles[ci])
        return lab(ci, pos), lab(ci, (pos + 1) % m)

    for chord, eps in diagram.signs:
        ci, it = diagram.tail(chord)
        cj, jh = diagram.head(chord)
        over_in, over_out = gaps(ci, it)
        under_in, under_out = gaps(cj, jh)
        if not (
            _congruent(over_out, over_in - eps, p)
            and _congruent(under_out, under_in + eps, p)
            and _congruent(over_out, under_in, p)
        ):
            return False
    return True


def warping_degree(diagram):
    """Number of chords met head-first when traveling from the basepoint."""
    _require_knot(diagram, "warping degree")
    count = 0
    for chord, _ in diagram.signs:
        _, t = diagram.tail(chord)
        _, h = diagram.head(chord)
        if h < t:
            count += 1
    return count


# -- local moves -----------------------------------------------------------


def crossing_change(diagram, chord):
    """Exchange over and under passages of ``chord`` and negate its sign."""
    diagram.sign(chord)
    circles = tuple(
        tuple((c, not ih) if c == chord else (c, ih) for c, ih in circle)
        for circle in diagram.circles
    )
    signs = tuple((c, -s if c == chord else s) for c, s in diagram.signs)
    return BasedGaussDiagram(circles, signs)


def smooth(diagram, chord):
    """Oriented smoothing along ``chord``.

    The chord's endpoints are removed and the strands reconnected so that the
    arc entering the over-passage continues out of the under-passage and vice
    versa.  Smoothing a chord with both endpoints on one circle splits it:
    the part containing that circle's basepoint keeps it and stays first in
    the circle order, while the split-off circle is inserted right after it
    with a fresh basepoint just past the reconnection site.  Smoothing a
    chord joining two circles merges them onto the earlier circle, keeping
    its basepoint.
    """
    diagram.sign(chord)
    ct, it = diagram.tail(chord)
    ch, ih = diagram.head(chord)
    circles = list(diagram.circles)
    if ct == ch:
        circle = circles[ct]
        a, b = sorted((it, ih))
        keep = circle[:a] + circle[b + 1 :]
        split = circle[a + 1 : b]
        circles[ct] = keep
        circles.insert(ct + 1, split)
    else:
        k, l = (ct, ch) if ct < ch else (ch, ct)
        ki = it if ct == k else ih
        lj = ih if ct == k else it
        k_list, l_list = circles[k], circles[l]
        circles[k] = k_list[:ki] + l_list[lj + 1 :] + l_list[:lj] + k_list[ki + 1 :]
        del circles[l]
    signs = tuple((c, s) for c, s in diagram.signs if c != chord)
    return BasedGaussDiagram(tuple(circles), signs)


def shift_basepoint(diagram, circle=0, forward=True):
    """Move the basepoint of one circle across the adjacent endpoint."""
    word = diagram.circles[circle]
    if not word:
        return diagram
    moved = word[1:] + word[:1] if forward else word[-1:] + word[:-1]
    circles = list(diagram.circles)
    circles[circle] = moved
    return BasedGaussDiagram(tuple(circles), diagram.signs)


def basepoint_positions(diagram):
    """All diagrams obtained by placing the primary basepoint in each gap."""
    word = diagram.circles[0]
    out = []
    for r in range(max(1, len(word))):
        circles = (word[r:] + word[:r],) + diagram.circles[1:]
        out.append(BasedGaussDiagram(circles, diagram.signs))
    return out
