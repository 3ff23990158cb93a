"""Distortion sampling, lower-envelope exponent fits, and bound calculators.

The empirical side measures how the assembled embedding distorts word
lengths: one endpoint is pinned at the identity, the other is a seeded
random generator word whose exact length comes from the closed formula.
Compression is a worst-pair notion, so the exponent estimate regresses the
log-log *lower envelope* (minimum embedded distance per length bucket)
rather than the cloud.

The analytic side evaluates the exact lower-bound formulas for the
compression of the wreath product in terms of the base group's compression,
together with the 3/4 upper reference for integer shifts.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .basegroups import GroupSpec
from .embeddings import (
    TreeMode,
    identity_distance_squared,
    injectivity_gap,
    lipschitz_constants,
)
from .wreath import WreathElement


@dataclass(frozen=True)
class DistortionSample:
    """One (exact word length, embedded distance) measurement."""

    word_length: int
    embedded_dist: float
    tree_mode: str
    h_mode: str


def _random_word(spec: GroupSpec, rng: random.Random, length: int) -> WreathElement:
    lamp_values = spec.generator_values()
    moves = len(lamp_values) + 2
    lamps: dict[int, int] = {}
    n = 0
    for _ in range(length):
        g = rng.randrange(moves)
        if g == 0:
            n += 1
        elif g == 1:
            n -= 1
        else:
            v = spec.mul(lamps.get(n, 0), lamp_values[g - 2])
            if v:
                lamps[n] = v
            else:
                del lamps[n]
    return WreathElement(spec, tuple(sorted(lamps.items())), n)


def sample_pairs(
    spec: GroupSpec,
    tree_mode: TreeMode,
    h_mode: str,
    scale: int,
    count: int,
    seed: int,
) -> list[DistortionSample]:
    """Measure `count` seeded samples against the identity.

    Each sample draws a generator word of uniform length in [0, scale],
    recomputes its exact word length from the closed formula, and takes the
    embedded distance through the component norms.  Per-index string seeding
    keeps the output bit-identical for a fixed seed regardless of evaluation
    order.
    """
    if count < 1:
        raise ValueError("need at least one sample")
    out = []
    tm, hm = str(tree_mode), h_mode
    for i in range(count):
        rng = random.Random(f"{seed}/{i}")
        y = _random_word(spec, rng, rng.randrange(scale + 1))
        dist = math.sqrt(identity_distance_squared(y, tree_mode, h_mode))
        out.append(DistortionSample(y.word_length(), dist, tm, hm))
    return out


def audit_lipschitz(
    samples: Sequence[DistortionSample], spec: GroupSpec, tree_mode: TreeMode, h_mode: str
) -> list[DistortionSample]:
    """Samples violating the upper line dist <= (C+ + C- + C) * word length."""
    c = sum(lipschitz_constants(spec, tree_mode, h_mode))
    return [s for s in samples if s.embedded_dist > c * s.word_length]


def audit_injectivity_gap(
    samples: Sequence[DistortionSample], spec: GroupSpec, tree_mode: TreeMode, h_mode: str
) -> list[DistortionSample]:
    """Samples violating the uniform separation of distinct elements."""
    gap = injectivity_gap(spec, tree_mode, h_mode)
    return [s for s in samples if s.word_length >= 1 and s.embedded_dist < gap]


@dataclass(frozen=True)
class EnvelopeFit:
    """Log-log least-squares fit through the lower envelope."""

    exponent: float
    lower_constant: float
    sample_count: int
    length_range: tuple[int, int]
    method: str


def fit_envelope(samples: Sequence[DistortionSample], buckets: int = 0) -> EnvelopeFit:
    """Fit dist ~ D * length^alpha through the envelope minima.

    With buckets == 0 every distinct word length is its own bucket;
    otherwise lengths are merged into that many geometric bins.  The
    exponent is the least-squares slope in log-log coordinates, clamped to
    [0, 1]; the representative abscissa of a bin is the length of its
    minimal sample.
    """
    usable = [s for s in samples if s.word_length >= 1 and s.embedded_dist > 0]
    if not usable:
        raise ValueError("no nonzero samples to fit")
    max_len = max(s.word_length for s in usable)
    envelope: dict[int, tuple[float, int]] = {}
    for s in usable:
        if buckets > 0:
            key = min(
                buckets - 1,
                int(buckets * math.log(s.word_length) / math.log(max_len + 1)),
            )
        else:
            key = s.word_length
        cand = (s.embedded_dist, s.word_length)
        if key not in envelope or cand < envelope[key]:
            envelope[key] = cand
    points = sorted({(wl, d) for d, wl in envelope.values()})
    xs = [math.log(wl) for wl, _ in points]
    ys = [math.log(d) for _, d in points]
    if len(points) < 2 or max(xs) == min(xs):
        raise ValueError(f"degenerate envelope: {len(points)} usable bucket(s)")
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    slope = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys)) / sum(
        (x - xbar) ** 2 for x in xs
    )
    alpha = min(1.0, max(0.0, slope))
    lower = math.exp(ybar - slope * xbar)
    method = "log-log least squares on the lower envelope, " + (
        f"{buckets} geometric bins" if buckets > 0 else "one bucket per length"
    )
    return EnvelopeFit(
        exponent=alpha,
        lower_constant=lower,
        sample_count=len(usable),
        length_range=(min(s.word_length for s in usable), max_len),
        method=method,
    )


UPPER_REFERENCE = Fraction(3, 4)
EQUIVARIANT_CROSSOVER = (1 + math.sqrt(5)) / 4


@dataclass(frozen=True)
class BoundSet:
    """Derived compression bounds for the wreath product, from the base
    group's compression exponent."""

    base_compression: Fraction
    non_equivariant_lower: Fraction
    equivariant_lower: Fraction
    upper_reference: Fraction
    crossover: float


def bounds(r_h) -> BoundSet:
    """Exact bound formulas: t/(t+1) for the plain compression and
    max(t - 1/2, t/(2t+1)) for the equivariant one; the two equivariant
    branches trade places exactly at (1 + sqrt 5)/4."""
    t = Fraction(r_h)
    if not 0 <= t <= 1:
        raise ValueError(f"compression exponents live in [0, 1], got {t}")
    return BoundSet(
        base_compression=t,
        non_equivariant_lower=t / (t + 1),
        equivariant_lower=max(t - Fraction(1, 2), t / (2 * t + 1)),
        upper_reference=UPPER_REFERENCE,
        crossover=EQUIVARIANT_CROSSOVER,
    )
