"""
Classical-embedding solutions: player parameters for which X1 = Y1 = +1, X2 = Y2 = -1 and
every Z_ij vanishes, so the gamma = 0 game reproduces the classical bilinear payoffs.
"""

import math
from typing import Optional

from ..config.settings import config
from ..engine.directions import fguv_fns, x_fn
from ..engine.probabilities import DIRECTION_PAIRS, direction_terms
from ..models.game import (
    DirectionPair,
    EmbeddingClass,
    EmbeddingSolution,
    GameConfig,
    PayoffMatrix,
    PlayerEmbedding,
    PlayerParams,
)
from ..utils.errors import ConventionError, DomainError
from ..utils.logging import get_logger

logger = get_logger(__name__)


def embed_player(
    embedding_class: EmbeddingClass = EmbeddingClass.ALPHA3_FREE,
    first_free: float = 0.0,
    second_free: float = 0.0,
    flipped: bool = False,
) -> PlayerEmbedding:
    """
    One player's share of an embedding solution.

    Args:
        embedding_class: ALPHA3_FREE fixes e1 = 0 and directions (0, pi), leaving e2, e3
            free. ALPHA3_ZERO fixes e3 = 0 and directions (e1, e1 - pi), leaving e1, e2 free.
        first_free: e2 (ALPHA3_FREE) or e1 (ALPHA3_ZERO)
        second_free: e3 (ALPHA3_FREE) or e2 (ALPHA3_ZERO)
        flipped: ALPHA3_FREE only; use e1 = pi with directions (pi, 0)

    Returns:
        PlayerEmbedding with the free angles named
    """
    if embedding_class is EmbeddingClass.ALPHA3_FREE:
        e1 = math.pi if flipped else 0.0
        params = PlayerParams(e1=e1, e2=first_free, e3=second_free)
        directions = DirectionPair(k1=e1, k2=math.pi - e1)
        free = {"e2": float(first_free), "e3": float(second_free)}
    else:
        if flipped:
            raise DomainError("flipped applies to the alpha3-free class only")
        params = PlayerParams(e1=first_free, e2=second_free, e3=0.0)
        directions = DirectionPair(k1=first_free, k2=first_free - math.pi)
        free = {"e1": float(first_free), "e2": float(second_free)}
    return PlayerEmbedding(embedding_class=embedding_class, params=params, directions=directions, free_angles=free)


def embedding_residual(cfg: GameConfig) -> float:
    """Largest violation of the embedding constraints for a configuration."""
    deviations = []
    for i, j in DIRECTION_PAIRS:
        x, y, z = direction_terms(i, j, cfg)
        target = 1.0 if i == 1 else -1.0
        deviations.append(abs(x - target))
        deviations.append(abs(y - (1.0 if j == 1 else -1.0)))
        deviations.append(abs(z))
    return max(deviations)


def satisfies_embedding(cfg: GameConfig, tolerance: Optional[float] = None) -> bool:
    if tolerance is None:
        tolerance = config.tolerances.algebra
    return embedding_residual(cfg) <= tolerance


def check_embedding(solution: EmbeddingSolution, tolerance: Optional[float] = None) -> None:
    """
    Raise ConventionError unless X, F and U take their embedded values for both players.

    F = U = 0 at both directions is stronger than Z_ij = 0 and is what the solution
    families guarantee.
    """
    if tolerance is None:
        tolerance = config.tolerances.algebra
    for name, player in (("alice", solution.alice), ("bob", solution.bob)):
        for index, target in ((1, 1.0), (2, -1.0)):
            kappa = player.directions.angle(index)
            x = x_fn(kappa, player.params)
            f, u = fguv_fns(kappa, player.params)
            if abs(x - target) > tolerance or abs(f) > tolerance or abs(u) > tolerance:
                raise ConventionError(
                    f"{name} direction {index} breaks the embedding: X={x!r}, F={f!r}, U={u!r}"
                )


def embedding_solver(
    payoffs: Optional[PayoffMatrix] = None,
    alice: Optional[PlayerEmbedding] = None,
    bob: Optional[PlayerEmbedding] = None,
) -> EmbeddingSolution:
    """
    Embedding solution for a game; the constraints do not depend on the payoffs.

    Both players default to the canonical alpha3-free choice (angles 0, directions (0, pi)).
    """
    solution = EmbeddingSolution(
        payoffs=payoffs,
        alice=alice if alice is not None else embed_player(),
        bob=bob if bob is not None else embed_player(),
    )
    check_embedding(solution)
    logger.debug(f"Embedding solution verified: {solution.alice.free_angles} / {solution.bob.free_angles}")
    return solution
