"""Motion-planning complexity bounds for one signature, reconciled exactly.

The lower bound comes from an actual nonzero product of zero-divisors (one
more than the number of factors), not from a closed formula.  Two upper
bounds face it: the constructive one counts the planner's continuity
domains (n+1), and the dimension one is 2*dim + 1 for the product space,
whose dimension is (r-1) + 1.  The reconciled value is the minimum of the
upper bounds and must equal the lower bound; any gap raises BoundMismatch.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .algebra import AlgebraSignature, LowerBoundCertificate, lower_bound_certificate


class BoundMismatch(RuntimeError):
    """Raised when the certified lower bound fails to meet the upper bounds."""


@dataclass(frozen=True)
class TcBounds:
    """All bounds for one signature, plus the reconciled value."""

    n: int
    r: int
    lower: int
    upper_constructive: int
    upper_dimension: int
    tc: int

    @property
    def constructive_tight(self) -> bool:
        return self.upper_constructive == self.tc

    def to_jsonable(self) -> dict:
        out = asdict(self)
        out["constructive_tight"] = self.constructive_tight
        return out


def compute_bounds(n: int, r: int) -> TcBounds:
    """Reconciled complexity bounds for signature (n, r).

    The lower bound is certificate-backed: a verified nonzero product of
    min(n, 2r-1) zero-divisors forces at least one more planner domain than
    it has factors.  Raises BoundMismatch when that value fails to meet
    min(n+1, 2r), the smaller of the two upper bounds.
    """
    sig = AlgebraSignature(n, r)
    cert = lower_bound_certificate(sig)
    lower = cert.factor_count + 1
    upper_constructive = n + 1
    product_dimension = (r - 1) + 1
    upper_dimension = 2 * product_dimension
    tc = min(upper_constructive, upper_dimension)
    if lower != tc:
        raise BoundMismatch(
            f"lower bound {lower} does not meet upper bounds "
            f"min({upper_constructive}, {upper_dimension}) for n={n}, r={r}"
        )
    return TcBounds(
        n=n,
        r=r,
        lower=lower,
        upper_constructive=upper_constructive,
        upper_dimension=upper_dimension,
        tc=tc,
    )


def certificate_for(n: int, r: int, index_set=None) -> LowerBoundCertificate:
    """Convenience wrapper building the signature and its certificate."""
    return lower_bound_certificate(AlgebraSignature(n, r), index_set)
