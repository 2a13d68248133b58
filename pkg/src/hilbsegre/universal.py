"""The four-parameter Segre engine built on four universal series.

The top Segre numbers of tautological bundles depend on a surface with
a line bundle only through the four intersection numbers

    d = H^2,  pi = H.K,  kappa = K^2,  e = c2(S),

and additivity under disjoint unions forces the generating series into
the multiplicative shape

    s(z) = A(z)^d * B(z)^e * C(z)^pi * D(z)^kappa

for fixed unit series A, B, C, D.  A and B come from the two families
with pi = kappa = 0: the square root of the abelian series (d = 2 case)
and the 24th root of the genus-one K3 series (d = 0, e = 24 case).

C and D are determined order by order from the two vanishing families
on a blown-up K3, the tuples (7(k-1), k-1, -1, 25) and
(7(k-1)+1, k, -1, 25) where the k-th Segre number is zero.  The z^k
coefficient of the full product is affine-linear in the unknown pair
(C_k, D_k), with coefficients pi and kappa: the z^k coefficient of
log C is C_k plus a polynomial in the lower coefficients, and exp adds
only products of lower-order terms.  Probing both target tuples with
provisional zeros therefore yields two affine equations

    0 = (k-1) C_k - D_k + nu,      0 = k C_k - D_k + nu',

whose linear part has determinant 1, so C_k = nu - nu' and
D_k = (k-1) C_k + nu exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .k3 import determine_b_s1
from .series import ExactRational, TruncatedPowerSeries

__all__ = [
    "BlowupTarget",
    "SegreTable",
    "SurfaceInvariants",
    "UniversalSeriesSet",
    "blowup_targets",
    "determine_AB",
    "determine_CD",
    "segre_number",
    "segre_series",
    "universal_series_set",
]

ROUTES = ("closed", "engine", "lehn")


@dataclass(frozen=True)
class SurfaceInvariants:
    """The tuple (d, pi, kappa, e) of intersection numbers.

    Any integers are accepted; tuples that no actual surface realizes
    are treated as formal inputs and still produce exact values.
    """

    d: int
    pi: int
    kappa: int
    e: int

    def __post_init__(self):
        for name in ("d", "pi", "kappa", "e"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"invariant {name} must be an integer")

    def __add__(self, other: "SurfaceInvariants") -> "SurfaceInvariants":
        """Componentwise sum: the invariants of a disjoint union."""
        return SurfaceInvariants(
            self.d + other.d, self.pi + other.pi, self.kappa + other.kappa, self.e + other.e
        )

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.d, self.pi, self.kappa, self.e)


@dataclass(frozen=True)
class UniversalSeriesSet:
    """The determined unit series A, B, C, D at a common order."""

    A: TruncatedPowerSeries
    B: TruncatedPowerSeries
    C: TruncatedPowerSeries
    D: TruncatedPowerSeries

    def __post_init__(self):
        orders = {s.order for s in (self.A, self.B, self.C, self.D)}
        if len(orders) != 1:
            raise ValueError("A, B, C, D must share one truncation order")
        for name, series in zip("ABCD", (self.A, self.B, self.C, self.D)):
            if series[0] != 1:
                raise ValueError(f"{name} must have constant term 1")
        if self.order >= 1:
            for name, series, linear in zip(
                "ABCD", (self.A, self.B, self.C, self.D), (1, 0, 0, 0)
            ):
                if series[1] != linear:
                    raise ValueError(f"{name} must have linear coefficient {linear}")

    @property
    def order(self) -> int:
        return self.A.order


@dataclass(frozen=True)
class BlowupTarget:
    """A vanishing tuple on a K3 blown up at a point.

    The line bundle pulls back the degree-(2g - 2) polarization and
    twists down l times by the exceptional curve, so d = 2g - 2 - l^2
    and pi = l; the constraint g - l(l+1)/2 = 3k - 2 makes the k-th
    Segre number vanish for l = k - 1 and l = k.
    """

    invariants: SurfaceInvariants
    genus: int
    twist: int

    @property
    def section_count(self) -> int:
        """h^0 of the twisted bundle: g + 1 - l(l+1)/2, which equals 3k - 1."""
        return self.genus + 1 - self.twist * (self.twist + 1) // 2


def blowup_targets(k: int) -> tuple[BlowupTarget, BlowupTarget]:
    """The two tuples where the k-th Segre number is forced to vanish."""
    if k < 2:
        raise ValueError("targets defined for k >= 2 only")
    targets = []
    for twist in (k - 1, k):
        genus = 3 * k - 2 + twist * (twist + 1) // 2
        d = 2 * genus - 2 - twist * twist
        targets.append(
            BlowupTarget(SurfaceInvariants(d, twist, -1, 25), genus, twist)
        )
    return tuple(targets)


def determine_AB(N: int) -> tuple[TruncatedPowerSeries, TruncatedPowerSeries]:
    """A and B to order N from the two pi = kappa = 0 families."""
    if N < 0:
        raise ValueError("order must be non-negative")
    seqs = determine_b_s1(N)
    abelian = TruncatedPowerSeries(seqs.b)
    genus_one = TruncatedPowerSeries(seqs.s1)
    return abelian.pow(Fraction(1, 2)), genus_one.pow(Fraction(1, 24))


def _multiplicative_series(
    inv: SurfaceInvariants,
    A: TruncatedPowerSeries,
    B: TruncatedPowerSeries,
    C: TruncatedPowerSeries,
    D: TruncatedPowerSeries,
    N: int,
) -> TruncatedPowerSeries:
    return (
        A.truncate(N).pow(inv.d)
        * B.truncate(N).pow(inv.e)
        * C.truncate(N).pow(inv.pi)
        * D.truncate(N).pow(inv.kappa)
    )


def determine_CD(
    N: int, A: TruncatedPowerSeries, B: TruncatedPowerSeries
) -> tuple[TruncatedPowerSeries, TruncatedPowerSeries]:
    """C and D to order N by probe-and-solve against the blow-up targets."""
    if A.order < N or B.order < N:
        raise ValueError("A and B must be determined to order >= N")
    c = [Fraction(1)] + [Fraction(0)] * N
    d = [Fraction(1)] + [Fraction(0)] * N
    for k in range(2, N + 1):
        first, second = blowup_targets(k)
        c_prov = TruncatedPowerSeries(c[: k + 1])
        d_prov = TruncatedPowerSeries(d[: k + 1])
        nu = _multiplicative_series(first.invariants, A, B, c_prov, d_prov, k)[k]
        nu_prime = _multiplicative_series(second.invariants, A, B, c_prov, d_prov, k)[k]
        c[k] = nu - nu_prime
        d[k] = (k - 1) * c[k] + nu
    return TruncatedPowerSeries(c), TruncatedPowerSeries(d)


@lru_cache(maxsize=None)
def universal_series_set(N: int) -> UniversalSeriesSet:
    """Determine and cache the full series set at truncation order N."""
    A, B = determine_AB(N)
    C, D = determine_CD(N, A, B)
    return UniversalSeriesSet(A, B, C, D)


def segre_series(
    inv: SurfaceInvariants, N: int, U: UniversalSeriesSet
) -> TruncatedPowerSeries:
    """The generating series A^d B^e C^pi D^kappa truncated at order N."""
    if N > U.order:
        raise ValueError("insufficient truncation order")
    return _multiplicative_series(inv, U.A, U.B, U.C, U.D, N)


def segre_number(
    inv: SurfaceInvariants,
    k: int,
    U: UniversalSeriesSet,
    table: "SegreTable | None" = None,
) -> ExactRational:
    """The k-th Segre number for `inv`; optionally recorded with route "engine"."""
    if k > U.order:
        raise ValueError("insufficient truncation order")
    value = segre_series(inv, k, U)[k]
    if table is not None:
        table.record(inv, k, value, "engine")
    return value


class SegreTable:
    """Computed Segre numbers keyed by (invariants, k) with route labels.

    The table only stores what it is given; agreement between routes is
    checked by `discrepancies`, not enforced on insertion.
    """

    def __init__(self):
        self._entries: dict[tuple[SurfaceInvariants, int], dict[str, Fraction]] = {}

    def record(
        self, inv: SurfaceInvariants, k: int, value, route: str
    ) -> ExactRational:
        if route not in ROUTES:
            raise ValueError(f"unknown route {route!r}")
        exact = Fraction(value)
        self._entries.setdefault((inv, k), {})[route] = exact
        return exact

    def get(self, inv: SurfaceInvariants, k: int, route: str) -> ExactRational:
        return self._entries[(inv, k)][route]

    def routes(self, inv: SurfaceInvariants, k: int) -> dict[str, Fraction]:
        return dict(self._entries.get((inv, k), {}))

    def discrepancies(
        self,
    ) -> list[tuple[SurfaceInvariants, int, dict[str, Fraction]]]:
        """Keys whose recorded routes disagree, in insertion order."""
        found = []
        for (inv, k), values in self._entries.items():
            if len(set(values.values())) > 1:
                found.append((inv, k, dict(values)))
        return found

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries.items())
