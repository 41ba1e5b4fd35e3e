"""Fiber-cone growth data: analytic spread, generator-count series,
h-vectors, and the Freiman predicate.

For a quasi-equigenerated ideal the generator counts of powers are sizes
of iterated sumsets of the exponent-vector set, and the analytic spread
is one more than the affine-hull dimension of that set.  All series here
are exact integers.
"""

from dataclasses import dataclass
from math import comb

from .errors import ResourceCapError, effective_cap
from .ideals import MonomialIdeal, with_witness
from .lattice import affine_dim, generalized_lower_bound


@dataclass(frozen=True)
class FiberProfile:
    """Freiman verdict for one ideal, with the numbers that force it."""

    ell: int                 # analytic spread
    mu_series: tuple         # (1, mu(I), mu(I^2))
    h_partial: tuple         # (h_0, h_1, h_2)
    freiman: bool
    bound2: int              # ell*mu - C(ell, 2)
    h2: int                  # mu(I^2) - bound2


def analytic_spread(ideal: MonomialIdeal) -> int:
    """Krull dimension of the fiber cone: affine-hull dimension of the
    generator exponents plus one.  Requires quasi-equigeneration."""
    ideal = with_witness(ideal)
    return affine_dim(ideal.generators) + 1


def mu_series(ideal: MonomialIdeal, max_power: int, cap=None) -> list:
    """[1, mu(I), mu(I^2), ..., mu(I^max_power)] by incremental dilation.

    Raises ResourceCapError if an intermediate sumset would exceed `cap`
    points; a partial series is never returned silently.
    """
    if max_power < 1:
        raise ValueError("max_power must be >= 1")
    ideal = with_witness(ideal)
    cap = effective_cap(cap)
    gens = sorted(ideal.generators.points)
    series = [1, len(gens)]
    if max_power == 1:
        return series
    # doubling is symmetric, so only unordered pairs are formed
    out = set()
    add = out.add
    for i, a in enumerate(gens):
        for b in gens[i:]:
            add(tuple(map(int.__add__, a, b)))
        if len(out) > cap:
            raise ResourceCapError(f"sumset at power 2 exceeds {cap} points", cap)
    series.append(len(out))
    cur = out
    for k in range(3, max_power + 1):
        out = set()
        add = out.add
        for a in cur:
            for b in gens:
                add(tuple(map(int.__add__, a, b)))
            if len(out) > cap:
                raise ResourceCapError(
                    f"sumset at power {k} exceeds {cap} points", cap
                )
        series.append(len(out))
        cur = out
    return series


def h_vector(mu: list, ell: int) -> list:
    """h-vector entries h_0..h_K recovered from mu(I^k) for k <= K via

        h_k = mu[k] - sum_{i<k} C(ell+k-i-1, k-i) * h_i.

    Entries may be negative for non-Cohen-Macaulay fiber cones; only the
    returned prefix is determined by the given series.
    """
    if not mu or mu[0] != 1:
        raise ValueError("a generator-count series must start with mu(I^0) = 1")
    if ell < 1:
        raise ValueError("analytic spread must be >= 1")
    h = []
    for k in range(len(mu)):
        h.append(mu[k] - sum(comb(ell + k - i - 1, k - i) * h[i] for i in range(k)))
    return h


def mu_from_h(h: list, ell: int, max_power: int) -> list:
    """Inverse of h_vector: mu(I^k) = sum_i C(ell+k-i-1, k-i) * h_i,
    where h is treated as zero beyond its length."""
    return [
        sum(comb(ell + k - i - 1, k - i) * h[i] for i in range(min(k, len(h) - 1) + 1))
        for k in range(max_power + 1)
    ]


def is_freiman(ideal: MonomialIdeal, cap=None) -> FiberProfile:
    """Decide whether mu(I^2) meets the doubling lower bound with equality.

    The verdict is forced: h2 = mu(I^2) - (ell*mu - C(ell,2)) is always
    >= 0, and the ideal is Freiman exactly when h2 = 0.
    """
    ideal = with_witness(ideal)
    series = mu_series(ideal, 2, cap=cap)
    ell = affine_dim(ideal.generators) + 1
    bound2 = generalized_lower_bound(series[1], ell, 2)
    h2 = series[2] - bound2
    h = h_vector(series, ell)
    return FiberProfile(
        ell=ell,
        mu_series=tuple(series),
        h_partial=tuple(h),
        freiman=h2 == 0,
        bound2=bound2,
        h2=h2,
    )


@dataclass(frozen=True)
class GrowthRow:
    """Growth facts for one power k >= 2."""

    k: int
    mu_k: int
    lower_bound: int
    equality: bool
    partial_sum: int       # sum_{i=2}^{k} C(ell+k-i-1, k-i) h_i
    nonnegative: bool


@dataclass(frozen=True)
class GrowthReport:
    ell: int
    mu: tuple
    h: tuple
    rows: tuple  # GrowthRow per k in 2..K


def check_growth_identities(ideal: MonomialIdeal, max_power: int, cap=None) -> GrowthReport:
    """For each 2 <= k <= max_power, report whether mu(I^k) meets the
    generalized lower bound with equality, and the value and sign of the
    tail partial sum of h-entries that measures the excess."""
    if max_power < 2:
        raise ValueError("max_power must be >= 2")
    ideal = with_witness(ideal)
    mu = mu_series(ideal, max_power, cap=cap)
    ell = affine_dim(ideal.generators) + 1
    h = h_vector(mu, ell)
    rows = []
    for k in range(2, max_power + 1):
        bound = generalized_lower_bound(mu[1], ell, k)
        partial = sum(comb(ell + k - i - 1, k - i) * h[i] for i in range(2, k + 1))
        rows.append(
            GrowthRow(
                k=k,
                mu_k=mu[k],
                lower_bound=bound,
                equality=mu[k] == bound,
                partial_sum=partial,
                nonnegative=partial >= 0,
            )
        )
    return GrowthReport(ell=ell, mu=tuple(mu), h=tuple(h), rows=tuple(rows))
