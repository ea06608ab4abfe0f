"""Sweep checks for the determinant/ascending-polynomial relations.

Each check walks a population of diagrams (exhaustive up to a chord bound,
or seeded random) and applies a pure per-diagram verdict.  Failures never
abort a sweep: the offending Gauss codes are collected, because a failure
almost certainly pins down a convention bug and the codes are the debugging
artifact.  Rerunning a verdict on a recorded code reproduces its failure.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .arrows import ascending_polynomial, conway_pairing, conway_pairing_table
from .determinant import determinant
from .diagram import (
    basepoint_positions,
    crossing_change,
    is_mod_p_numberable,
    parse_gauss_code,
    serialize_gauss_code,
    smooth,
    warping_degree,
    index,
)
from .enumeration import (
    connecting_chords,
    enumerate_all_diagrams,
    random_knot_diagram,
    random_link_diagram,
)


@dataclass(frozen=True)
class SweepConfig:
    """Knobs shared by all checks; two runs with equal config agree exactly."""

    max_chords: int = 4
    modulus: int = 2
    moduli: tuple = (2, 3)
    samples: int = 1000
    random_max_chords: int = 8
    seed: int = 0
    workers: int = 1
    canonical: bool = False


@dataclass(frozen=True)
class CheckReport:
    check: str
    population: int
    passes: int
    failures: int
    counterexamples: tuple
    seed: int
    elapsed_ms: int

    def to_dict(self):
        return {
            "check": self.check,
            "population": self.population,
            "passes": self.passes,
            "failures": self.failures,
            "counterexamples": list(self.counterexamples),
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_text(self):
        lines = [
            "check: %s" % self.check,
            "population: %d" % self.population,
            "passes: %d" % self.passes,
            "failures: %d" % self.failures,
            "elapsed_ms: %d" % self.elapsed_ms,
        ]
        for code in self.counterexamples:
            lines.append("counterexample: %s" % code)
        return "\n".join(lines)


def reports_to_json(reports):
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True)


# -- populations --------------------------------------------------------------


def _population_colorable(config):
    for diagram in enumerate_all_diagrams(config.max_chords, config.canonical):
        if is_mod_p_numberable(diagram, 2):
            yield diagram


def _population_numberable_any(config):
    for diagram in enumerate_all_diagrams(config.max_chords, config.canonical):
        if any(is_mod_p_numberable(diagram, p) for p in config.moduli):
            yield diagram


def _population_all(config):
    yield from enumerate_all_diagrams(config.max_chords, config.canonical)


def _population_random_skein(config):
    rng = random.Random(config.seed)
    for i in range(config.samples):
        k = rng.randint(1, config.random_max_chords)
        if i % 2 == 0:
            yield random_knot_diagram(k, rng)
        else:
            yield random_link_diagram(k, rng)


# -- verdicts ------------------------------------------------------------------


def corollary_verdict(diagram, config):
    """det == +-(1 + 4 v2) mod 8 on a checkerboard colorable knot diagram."""
    det = determinant(diagram)
    vv = conway_pairing(diagram, 2, "ascending") % 2
    allowed = {1, 7} if vv == 0 else {3, 5}
    return det % 8 in allowed


def det_vs_ascending_verdict(diagram, config):
    """det == +-(ascending polynomial at 2) mod 8, full evaluation."""
    det = determinant(diagram)
    value = ascending_polynomial(diagram)(2)
    return (det - value) % 8 == 0 or (det + value) % 8 == 0


def main_theorem_verdict(diagram, config):
    """z^2 pairings mod p agree across basepoints and both variants."""
    for p in config.moduli:
        if not is_mod_p_numberable(diagram, p):
            continue
        values = set()
        for moved in basepoint_positions(diagram):
            values.add(conway_pairing(moved, 2, "ascending") % p)
            values.add(conway_pairing(moved, 2, "descending") % p)
        if len(values) > 1:
            return False
    return True


def skein_verdict(diagram, config):
    """Exact skein identities at every resolvable crossing.

    For a knot every chord is resolved; for a two-circle diagram only chords
    joining the circles (smoothing a self-chord leaves the one- or two-circle
    pairing domain).
    """
    if diagram.num_circles == 1:
        chords = diagram.chord_ids()
    else:
        chords = connecting_chords(diagram)
    for chord in chords:
        eps = diagram.sign(chord)
        switched = crossing_change(diagram, chord)
        plus, minus = (diagram, switched) if eps > 0 else (switched, diagram)
        zero = smooth(diagram, chord)
        t_plus = conway_pairing_table(plus, required_chord=chord)
        t_minus = conway_pairing_table(minus, required_chord=chord)
        t_zero = conway_pairing_table(zero)
        sizes = set(t_plus) | set(t_minus) | {s + 1 for s in t_zero}
        for n in sizes:
            if n < 1:
                continue
            for column in (0, 1):
                lhs = t_plus.get(n, (0, 0))[column] - t_minus.get(n, (0, 0))[column]
                rhs = t_zero.get(n - 1, (0, 0))[column]
                if lhs != rhs:
                    return False
    return True


def _smoothing_candidates(diagram):
    """Chords whose interleaving chords all have tails on the basepoint arc."""
    m = 2 * diagram.num_chords
    if diagram.num_circles != 1 or m == 0:
        return

    def in_arc(pos, start, end):
        return (pos - start) % m < (end - start) % m and pos != start

    for alpha in diagram.chord_ids():
        _, t = diagram.tail(alpha)
        _, h = diagram.head(alpha)
        gap_in_th = in_arc(0, t, h) or h == 0
        ok = True
        for other in diagram.chord_ids():
            if other == alpha:
                continue
            _, td = diagram.tail(other)
            _, hd = diagram.head(other)
            if in_arc(td, t, h) == in_arc(hd, t, h):
                continue
            if in_arc(td, t, h) != gap_in_th:
                ok = False
                break
        if ok:
            yield alpha


def warp_and_smoothing_verdict(diagram, config):
    """Vanishing pairings on descending diagrams plus the smoothing lemma.

    Warping degree 0 forces every positive-degree Conway pairing to vanish
    and, on a colorable diagram, determinant 1.  Smoothing a chord whose
    interleaving tails all sit on the basepoint arc of a mod p numberable
    diagram kills the degree-1 ascending pairing exactly, the descending one
    mod p, and all higher odd ascending pairings exactly.
    """
    if diagram.num_circles != 1:
        return True
    if warping_degree(diagram) == 0:
        for degree in range(2, diagram.num_chords + 1, 2):
            if conway_pairing(diagram, degree, "ascending") != 0:
                return False
            if conway_pairing(diagram, degree, "descending") != 0:
                return False
        if is_mod_p_numberable(diagram, 2) and determinant(diagram) != 1:
            return False
    for p in config.moduli:
        if not is_mod_p_numberable(diagram, p):
            continue
        for alpha in _smoothing_candidates(diagram):
            smoothed = smooth(diagram, alpha)
            if conway_pairing(smoothed, 1, "ascending") != 0:
                return False
            if conway_pairing(smoothed, 1, "descending") % p != 0:
                return False
            for degree in range(3, smoothed.num_chords + 1, 2):
                if conway_pairing(smoothed, degree, "ascending") != 0:
                    return False
    return True


def smoothing_index_observations(config):
    """Exploratory: how often the degree-1 pairing gap equals +-index.

    Not asserted anywhere; returns (agreeing, total) over all smoothing-lemma
    instances in the sweep population.
    """
    agree = total = 0
    for diagram in _population_all(config):
        if diagram.num_circles != 1:
            continue
        if not is_mod_p_numberable(diagram, config.modulus):
            continue
        for alpha in _smoothing_candidates(diagram):
            smoothed = smooth(diagram, alpha)
            gap = conway_pairing(smoothed, 1, "ascending") - conway_pairing(
                smoothed, 1, "descending"
            )
            total += 1
            if gap in (index(diagram, alpha), -index(diagram, alpha)):
                agree += 1
    return agree, total


# -- the check registry --------------------------------------------------------


CHECKS = {
    "cor-det": (_population_colorable, corollary_verdict),
    "det-asc": (_population_colorable, det_vs_ascending_verdict),
    "main-theorem": (_population_numberable_any, main_theorem_verdict),
    "skein": (_population_random_skein, skein_verdict),
    "warp-smooth": (_population_all, warp_and_smoothing_verdict),
}


def _run_shard(args):
    name, config, shard, num_shards = args
    population_fn, verdict_fn = CHECKS[name]
    passes = failures = 0
    counterexamples = []
    for i, diagram in enumerate(population_fn(config)):
        if i % num_shards != shard:
            continue
        if verdict_fn(diagram, config):
            passes += 1
        else:
            failures += 1
            counterexamples.append(serialize_gauss_code(diagram))
    return passes, failures, counterexamples


def run_check(name, config=None):
    if name not in CHECKS:
        raise KeyError("unknown check %r; expected one of %s" % (name, sorted(CHECKS)))
    if config is None:
        config = SweepConfig()
    start = time.monotonic()
    if config.workers > 1:
        shards = [(name, config, s, config.workers) for s in range(config.workers)]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            parts = list(pool.map(_run_shard, shards))
    else:
        parts = [_run_shard((name, config, 0, 1))]
    passes = sum(p for p, _, _ in parts)
    failures = sum(f for _, f, _ in parts)
    counterexamples = tuple(itertools.chain.from_iterable(c for _, _, c in parts))
    elapsed = int((time.monotonic() - start) * 1000)
    return CheckReport(
        check=name,
        population=passes + failures,
        passes=passes,
        failures=failures,
        counterexamples=counterexamples,
        seed=config.seed,
        elapsed_ms=elapsed,
    )


def run_checks(config=None, names=None):
    if names is None:
        names = sorted(CHECKS)
    return [run_check(name, config) for name in names]


def recheck(name, code, config=None):
    """Re-run one check's verdict on a recorded counterexample code."""
    if config is None:
        config = SweepConfig()
    _, verdict_fn = CHECKS[name]
    return verdict_fn(parse_gauss_code(code), config)


def check_corollary_det(config=None):
    return run_check("cor-det", config)


def check_det_vs_ascending(config=None):
    return run_check("det-asc", config)


def check_main_theorem(config=None):
    return run_check("main-theorem", config)


def check_skein_lemmas(config=None):
    return run_check("skein", config)


def check_warp_and_smoothing(config=None):
    return run_check("warp-smooth", config)
