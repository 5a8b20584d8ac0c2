# regime.py

"""
Module: regime
Purpose:
    Constants that delimit the asymptotic regimes of the (x, t) half plane. Their
    admissible values are not pinned down by the theory, so they are settings,
    and evaluators report whether a point lies inside its regime instead of
    refusing it.
"""
from dataclasses import dataclass

from det_common.errors import InvalidArgumentError


@dataclass(frozen=True)
class RegimeConfig:
    """
    :param delta: xt threshold between the small-xt and large-xt analyses.
    :param big_k: Smallest x for which the large-x expansions are trusted.
    :param big_m: Width, in units of t^{1/3}, of the Tracy-Widom window |x| <= M t^{1/3}.
    """

    delta: float = 0.25
    big_k: float = 8.0
    big_m: float = 4.0

    def __post_init__(self):
        for name in ("delta", "big_k", "big_m"):
            value = getattr(self, name)
            if not value > 0:
                raise InvalidArgumentError(f"regime constant {name} must be positive, got {value!r}")

    def small_xt(self, x: float, t: float) -> bool:
        return x >= self.big_k and x * t <= self.delta

    def large_xt(self, x: float, t: float) -> bool:
        return x >= self.big_k and x * t >= self.delta

    def overlap(self, x: float, t: float) -> bool:
        """Both analyses apply for delta/2 <= xt <= 2 delta."""
        return x >= self.big_k and self.delta / 2 <= x * t <= 2 * self.delta
