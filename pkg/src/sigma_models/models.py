# models.py

"""
Module: models
Purpose:
    Weights sigma(r) that deform the Airy kernel, written through F = 1/(1 - sigma).
    Admissible weights have an entire, log-convex F that tends to 1 at -infinity
    and grows like c'_+ e^{c_+ r} at +infinity.

    Key Features:
    - `make_kpz_model`: the Fermi factor 1/(1 + e^{-r}).
    - `make_laplace_model`: F(z) = 1 + sum of mass * e^{location * z} over a finite
      atom list, with closed-form log-derivatives (cumulants of the tilted atoms).
    - `make_cutoff_model`: the Heaviside weight, flagged non-admissible; only the
      Tracy-Widom path may use it.
    - `make_zero_model`: sigma = 0, for which every determinant equals 1.
    - `j_sigma` and `model_constants`: the model constant entering the
      large-gap expansions.

    Every callable is vectorized over numpy arrays and built from module-level
    functions, so models pickle cleanly for worker processes.
"""
import enum
import functools
import logging
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy.special import expit, logsumexp

from det_common.errors import InvalidArgumentError, ModelNotAdmissibleError
from quadrature_airy.gauss_legendre import gauss_legendre, map_rule

logger = logging.getLogger(__name__)

TAIL_EXPONENT = 40.0
J_SIGMA_ORDER = 512
# relative steps near eps^(1/(k+2)) for the k-th derivative
FD_RELATIVE_STEPS = {1: 1e-5, 2: 1e-4, 3: 1e-3}

RealFunction = Callable[[np.ndarray], np.ndarray]


class ModelKind(enum.Enum):
    SMOOTH = "smooth"
    CUTOFF = "cutoff"
    ZERO = "zero"


@dataclass(frozen=True, eq=False)
class SigmaModel:
    """
    A weight sigma together with log F and its first three derivatives.

    :param name: Identifier used in logs and output records.
    :param kind: `ModelKind.SMOOTH` for admissible weights.
    :param sigma: r -> sigma(r) in [0, 1).
    :param log_f: r -> log F(r); ``None`` for the cutoff weight.
    :param log_f_d1: First derivative of log F.
    :param log_f_d2: Second derivative of log F.
    :param log_f_d3: Third derivative of log F.
    :param log_f_excess: r -> log F(r) - c_plus * r, finite for large r.
    :param c_plus: Growth rate of F at +infinity.
    :param c_plus_prime: Prefactor of that growth.
    :param c_minus: Decay rate of F - 1 at -infinity.
    :param c_minus_prime: Prefactor of that decay.
    :param epsilon: Decay rate of the relative correction at +infinity.
    """

    name: str
    kind: ModelKind
    sigma: RealFunction
    log_f: Optional[RealFunction] = None
    log_f_d1: Optional[RealFunction] = None
    log_f_d2: Optional[RealFunction] = None
    log_f_d3: Optional[RealFunction] = None
    log_f_excess: Optional[RealFunction] = None
    c_plus: float = math.nan
    c_plus_prime: float = math.nan
    c_minus: float = math.nan
    c_minus_prime: float = math.nan
    epsilon: float = math.nan

    @property
    def admissible(self) -> bool:
        return self.kind is ModelKind.SMOOTH

    def require_admissible(self, operation: str) -> None:
        """Raise `ModelNotAdmissibleError` unless the model is admissible."""
        if not self.admissible:
            raise ModelNotAdmissibleError(f"{operation} requires an admissible model, got {self.name!r}")


@dataclass(frozen=True)
class LaplaceMeasureSpec:
    """
    Atoms (location, mass) of the measure whose Laplace transform is F - 1.

    Atoms at equal locations add up, so a single atom at c gives c_- = c_+ = c
    and c'_- = c'_+ = its mass.

    :param atoms: Ascending, positive locations with positive masses.
    """

    atoms: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        atoms = tuple((float(loc), float(mass)) for loc, mass in self.atoms)
        if not atoms:
            raise InvalidArgumentError("a Laplace model needs at least one atom so F grows at +infinity")
        for loc, mass in atoms:
            if not (math.isfinite(loc) and loc > 0):
                raise InvalidArgumentError(f"atom locations must be positive and finite, got {loc!r}")
            if not (math.isfinite(mass) and mass > 0):
                raise InvalidArgumentError(f"atom masses must be positive and finite, got {mass!r}")
        locations = [loc for loc, _ in atoms]
        if any(b < a for a, b in zip(locations, locations[1:])):
            raise InvalidArgumentError("atom locations must be ascending")
        object.__setattr__(self, "atoms", atoms)

    def merged(self) -> Tuple[np.ndarray, np.ndarray]:
        """Distinct locations and their total masses."""
        totals = {}
        for loc, mass in self.atoms:
            totals[loc] = totals.get(loc, 0.0) + mass
        locations = np.array(sorted(totals))
        return locations, np.array([totals[loc] for loc in locations])

    @property
    def c_minus(self) -> float:
        return self.atoms[0][0]

    @property
    def c_plus(self) -> float:
        return self.atoms[-1][0]

    @property
    def a_minus(self) -> float:
        return sum(m for loc, m in self.atoms if loc == self.c_minus)

    @property
    def a_plus(self) -> float:
        return sum(m for loc, m in self.atoms if loc == self.c_plus)


# -- sigma_KPZ ---------------------------------------------------------------

def _kpz_log_f(r):
    return np.logaddexp(0.0, r)


def _kpz_d2(r):
    return expit(r) * expit(-r)


def _kpz_d3(r):
    return expit(r) * expit(-r) * -np.tanh(0.5 * np.asarray(r, dtype=float))


def _kpz_excess(r):
    return np.logaddexp(0.0, -np.asarray(r, dtype=float))


def make_kpz_model() -> SigmaModel:
    """The logistic weight 1/(1 + e^{-r}), i.e. F(z) = 1 + e^z."""
    return SigmaModel(
        name="kpz",
        kind=ModelKind.SMOOTH,
        sigma=expit,
        log_f=_kpz_log_f,
        log_f_d1=expit,
        log_f_d2=_kpz_d2,
        log_f_d3=_kpz_d3,
        log_f_excess=_kpz_excess,
        c_plus=1.0,
        c_plus_prime=1.0,
        c_minus=1.0,
        c_minus_prime=1.0,
        epsilon=1.0,
    )


# -- Laplace class -----------------------------------------------------------

def _laplace_exponents(locations, log_masses, r):
    r = np.asarray(r, dtype=float)
    # the leading zero exponent is the "1" in F
    terms = log_masses + locations * r[..., None]
    return np.concatenate([np.zeros(r.shape + (1,)), terms], axis=-1)


def _laplace_log_f(locations, log_masses, r):
    return logsumexp(_laplace_exponents(locations, log_masses, r), axis=-1)


def _laplace_sigma(locations, log_masses, r):
    return -np.expm1(-_laplace_log_f(locations, log_masses, r))


def _laplace_cumulant(locations, log_masses, order, r):
    exponents = _laplace_exponents(locations, log_masses, r)
    weights = np.exp(exponents - np.asarray(logsumexp(exponents, axis=-1))[..., None])
    rates = np.concatenate([[0.0], locations])
    mean = np.asarray(weights @ rates)
    if order == 1:
        return mean
    centred = rates - mean[..., None]
    return np.sum(weights * centred ** order, axis=-1)


def _laplace_excess(locations, log_masses, c_plus, r):
    r = np.asarray(r, dtype=float)
    terms = log_masses + (locations - c_plus) * r[..., None]
    stacked = np.concatenate([(-c_plus * r)[..., None], terms], axis=-1)
    return logsumexp(stacked, axis=-1)


def make_laplace_model(spec: LaplaceMeasureSpec, name: str = "laplace") -> SigmaModel:
    """
    Weight with F(z) = 1 + sum(mass * exp(location * z)).

    :param spec: The atom list.
    :param name: Identifier for records.
    :return: An admissible `SigmaModel` with analytic derivatives.
    """
    locations, masses = spec.merged()
    log_masses = np.log(masses)
    c_plus = float(locations[-1])
    below = locations[locations < c_plus]
    epsilon = c_plus - (float(below[-1]) if below.size else 0.0)
    model = SigmaModel(
        name=name,
        kind=ModelKind.SMOOTH,
        sigma=functools.partial(_laplace_sigma, locations, log_masses),
        log_f=functools.partial(_laplace_log_f, locations, log_masses),
        log_f_d1=functools.partial(_laplace_cumulant, locations, log_masses, 1),
        log_f_d2=functools.partial(_laplace_cumulant, locations, log_masses, 2),
        log_f_d3=functools.partial(_laplace_cumulant, locations, log_masses, 3),
        log_f_excess=functools.partial(_laplace_excess, locations, log_masses, c_plus),
        c_plus=c_plus,
        c_plus_prime=float(masses[-1]),
        c_minus=float(locations[0]),
        c_minus_prime=float(masses[0]),
        epsilon=epsilon,
    )
    logger.debug("built Laplace model %s: c+=%g c'+=%g c-=%g eps=%g",
                 name, c_plus, model.c_plus_prime, model.c_minus, epsilon)
    return model


# -- special weights ---------------------------------------------------------

def _heaviside(r):
    return (np.asarray(r, dtype=float) > 0).astype(float)


def _zeros(r):
    return np.zeros_like(np.asarray(r, dtype=float))


def make_cutoff_model() -> SigmaModel:
    """The indicator of (0, infinity). Not admissible; used by the Tracy-Widom path only."""
    return SigmaModel(name="cutoff", kind=ModelKind.CUTOFF, sigma=_heaviside)


def make_zero_model() -> SigmaModel:
    """sigma = 0, so F = 1 and every determinant is 1."""
    return SigmaModel(
        name="zero",
        kind=ModelKind.ZERO,
        sigma=_zeros,
        log_f=_zeros,
        log_f_d1=_zeros,
        log_f_d2=_zeros,
        log_f_d3=_zeros,
        log_f_excess=_zeros,
        c_plus=0.0,
        c_plus_prime=1.0,
        c_minus=0.0,
        c_minus_prime=0.0,
        epsilon=0.0,
    )


# -- generic construction ----------------------------------------------------

def _centred_difference(func, order, r):
    r = np.asarray(r, dtype=float)
    h = FD_RELATIVE_STEPS[order] * np.maximum(1.0, np.abs(r))
    if order == 1:
        return (func(r + h) - func(r - h)) / (2.0 * h)
    if order == 2:
        return (func(r + h) - 2.0 * func(r) + func(r - h)) / (h * h)
    return (func(r + 2 * h) - 2.0 * func(r + h) + 2.0 * func(r - h) - func(r - 2 * h)) / (2.0 * h ** 3)


def build_model(
    name: str,
    sigma: RealFunction,
    log_f: RealFunction,
    c_plus: float,
    c_plus_prime: float,
    c_minus: float,
    c_minus_prime: float,
    epsilon: float,
    log_f_d1: Optional[RealFunction] = None,
    log_f_d2: Optional[RealFunction] = None,
    log_f_d3: Optional[RealFunction] = None,
    log_f_excess: Optional[RealFunction] = None,
) -> SigmaModel:
    """
    Assemble a smooth model; missing derivatives fall back to centred differences
    with steps 1e-5, 1e-4 and 1e-3 times max(1, |r|) for orders one to three.
    """
    d1 = log_f_d1 or functools.partial(_centred_difference, log_f, 1)
    d2 = log_f_d2 or functools.partial(_centred_difference, log_f, 2)
    d3 = log_f_d3 or functools.partial(_centred_difference, log_f, 3)
    if log_f_excess is None:
        log_f_excess = functools.partial(_linear_excess, log_f, c_plus)
    return SigmaModel(name, ModelKind.SMOOTH, sigma, log_f, d1, d2, d3, log_f_excess,
                      c_plus, c_plus_prime, c_minus, c_minus_prime, epsilon)


def _linear_excess(log_f, c_plus, r):
    r = np.asarray(r, dtype=float)
    return log_f(r) - c_plus * r


# -- model constants ---------------------------------------------------------

@functools.lru_cache(maxsize=32)
def j_sigma(model: SigmaModel) -> float:
    """
    (1/2pi) * integral of [log(1 - sigma(r)) + (c_+ r + log c'_+) 1_{r>0}] dr.

    Split at 0; each half uses an order-512 Gauss-Legendre rule on a range cut
    where the integrand is below e^{-40}.

    :raises ModelNotAdmissibleError: For the cutoff or zero weights.
    """
    model.require_admissible("j_sigma")
    base = gauss_legendre(J_SIGMA_ORDER)
    left = map_rule(base, -TAIL_EXPONENT / model.c_minus, 0.0)
    right = map_rule(base, 0.0, TAIL_EXPONENT / model.epsilon)
    left_part = left.integrate(model.log_f(left.nodes))
    right_part = right.integrate(model.log_f_excess(right.nodes) - math.log(model.c_plus_prime))
    return -(left_part + right_part) / (2.0 * math.pi)


class ModelConstants(NamedTuple):
    c_plus: float
    c_plus_prime: float
    j_sigma: float

    @property
    def log_c_prime(self) -> float:
        return math.log(self.c_plus_prime)

    @property
    def big_c(self) -> float:
        """Coefficient of -log t in the large-gap expansion of log Q."""
        return 2.0 * self.c_plus * self.j_sigma / math.pi + self.log_c_prime ** 2 / (2.0 * math.pi ** 2)


def model_constants(model: SigmaModel) -> ModelConstants:
    """(c_+, c'_+, j_sigma) of an admissible model."""
    return ModelConstants(model.c_plus, model.c_plus_prime, j_sigma(model))


def kpz_constants() -> ModelConstants:
    """Exact constants of the logistic weight: j = -pi/12."""
    return ModelConstants(1.0, 1.0, -math.pi / 12.0)


def laplace_from_pairs(pairs: Sequence[Tuple[float, float]], name: str = "laplace") -> SigmaModel:
    """Shorthand for ``make_laplace_model(LaplaceMeasureSpec(tuple(pairs)))``."""
    return make_laplace_model(LaplaceMeasureSpec(tuple(pairs)), name=name)
