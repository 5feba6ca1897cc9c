"""Carathéodory support reduction for information policies."""

import logging
from collections.abc import Sequence
from fractions import Fraction

from pypersuade.game.errors import PolicyError
from pypersuade.game.model import Belief, InformationPolicy
from pypersuade.geometry.linalg import nullspace, rank

logger = logging.getLogger(__name__)


def _lifted(points: Sequence[Belief]) -> list[list[Fraction]]:
    """Columns ``(mu, 1)`` as rows of the transposed system."""
    dimension = len(points[0])
    return [[p[i] for p in points] for i in range(dimension)] + [[Fraction(1)] * len(points)]


def is_affinely_independent(points: Sequence[Belief]) -> bool:
    """Whether the beliefs are affinely independent."""
    return rank(_lifted(points)) == len(points)


def reduce_support(
    policy: InformationPolicy, point_values: Sequence[Fraction]
) -> InformationPolicy:
    """Shrink a policy to an affinely independent support without losing value.

    Repeatedly finds an affine dependency ``alpha`` among the support points,
    orients it so that ``sum(alpha * value) >= 0`` and moves the weights along
    it until one weight reaches zero. The barycenter never changes.

    Args:
        policy: Finitely supported policy.
        point_values: One value per support point, in support order.

    Returns:
        A policy with at most ``|Theta|`` support points and
        ``sum(weight * value)`` at least that of ``policy``.

    Raises:
        PolicyError: If the number of values differs from the support size.
    """
    if len(point_values) != len(policy.support):
        raise PolicyError(
            f"{len(point_values)} values given for {len(policy.support)} support points"
        )
    points = list(policy.beliefs)
    weights = list(policy.weights)
    values = [Fraction(v) for v in point_values]
    pivots = 0
    while True:
        lifted = _lifted(points)
        basis = nullspace(lifted, len(points))
        if not basis:
            break
        alpha = basis[0]
        if sum((a * v for a, v in zip(alpha, values, strict=True)), Fraction(0)) < 0:
            alpha = [-a for a in alpha]
        step = min(w / -a for w, a in zip(weights, alpha, strict=True) if a < 0)
        weights = [w + step * a for w, a in zip(weights, alpha, strict=True)]
        keep = [i for i, w in enumerate(weights) if w > 0]
        points = [points[i] for i in keep]
        weights = [weights[i] for i in keep]
        values = [values[i] for i in keep]
        pivots += 1
    if pivots:
        logger.debug("Support reduced from %d to %d points", len(policy.support), len(points))
        return InformationPolicy.from_weights(zip(points, weights, strict=True))
    return policy
