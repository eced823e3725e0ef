"""Certification of the Tverberg property from either sufficient condition.

Both routes need r to be a prime power and set n = d(r-1) - 1:

* ``complementary``: X is (r-1)-complementary n-acyclic;
* ``deleted_product``: Conf_r(X) is n-acyclic.

A failed hypothesis only makes the verdict inconclusive, never negative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .complementary import ComplementaryReport, check_complementary_acyclic
from .complex_core import RegularCwComplex, SimplicialComplex, as_cw
from .deleted_product import deleted_product
from .homology import HomologyProfile, reduced_homology

__all__ = ["PrimePowerWitness", "TverbergCertificate", "is_prime_power", "certify_tverberg", "METHODS"]

METHODS = ("complementary", "deleted_product", "both")

CERTIFIED = "certified"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class PrimePowerWitness:
    r: int
    p: int
    k: int

    def __str__(self):
        return f"{self.r} = {self.p}^{self.k}"


def is_prime_power(r: int) -> PrimePowerWitness | None:
    if r <= 1:
        return None
    p = 2
    while p * p <= r and r % p:
        p += 1
    if r % p:
        p = r  # no factor up to sqrt(r): r is prime
    m, k = r, 0
    while m % p == 0:
        m //= p
        k += 1
    return PrimePowerWitness(r, p, k) if m == 1 else None


@dataclass(frozen=True)
class ConfEvidence:
    census: tuple[int, ...]
    homology: HomologyProfile
    n: int

    def as_dict(self) -> dict:
        return {"census": list(self.census), "n": self.n, "homology": self.homology.as_dict(), "homology_text": str(self.homology)}


Evidence = Union[ComplementaryReport, ConfEvidence, None]


@dataclass
class TverbergCertificate:
    complex_id: str
    d: int
    r: int
    witness: PrimePowerWitness | None
    method: str
    verdict: str
    reason: str
    reason_code: str | None = None
    evidence: Evidence = None
    attempts: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    def as_dict(self) -> dict:
        ev = self.evidence.as_dict() if self.evidence is not None else None
        return {
            "complex": self.complex_id,
            "d": self.d,
            "r": self.r,
            "prime_power": None if self.witness is None else {"p": self.witness.p, "k": self.witness.k},
            "method": self.method,
            "verdict": self.verdict,
            "reason": self.reason,
            "reason_code": self.reason_code,
            "evidence": ev,
            "attempts": [{"method": m, "passed": ok, "detail": why} for m, ok, why in self.attempts],
        }


def _try_complementary(X, r, n, complex_id):
    rep = check_complementary_acyclic(X, r - 1, n, complex_id=complex_id)
    if rep.passed:
        why = f"X is {r - 1}-complementary {n}-acyclic ({rep.checked_count} tuples checked)"
    else:
        why = f"X is not {r - 1}-complementary {n}-acyclic: {rep.counterexample.describe()}"
    return rep.passed, why, rep


def _try_deleted_product(X, r, n, max_cells):
    conf = deleted_product(X, r, max_cells)
    census = tuple(conf.census())
    if conf.is_empty():
        prof = HomologyProfile(is_empty_complex=True)
        return False, f"Conf_{r}(X) is empty", ConfEvidence(census, prof, n)
    prof = reduced_homology(conf.underlying, max_degree=n)
    bad = prof.first_nonzero()
    ev = ConfEvidence(census, prof, n)
    if bad is None:
        return True, f"Conf_{r}(X) is {n}-acyclic ({prof})", ev
    return False, f"Conf_{r}(X) is not {n}-acyclic: H~{bad} = {HomologyProfile.group_name(*prof.at(bad))}", ev


def certify_tverberg(
    X: SimplicialComplex | RegularCwComplex,
    d: int,
    r: int,
    method: str = "both",
    *,
    max_cells: int | None = None,
    complex_id: str = "X",
) -> TverbergCertificate:
    """Try to certify that X is (d, r)-Tverberg.

    ``method="both"`` tries the complementary condition first and falls
    back to the deleted product. ``SizeLimitExceeded`` from the deleted
    product propagates.
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    if d < 1:
        raise ValueError("d must be at least 1")
    if r < 1:
        raise ValueError("r must be at least 1")
    if isinstance(X, SimplicialComplex):
        X = as_cw(X)
    cert = dict(complex_id=complex_id, d=d, r=r)

    if r == 1:
        if X.is_empty():
            return TverbergCertificate(**cert, witness=None, method="trivial", verdict=INCONCLUSIVE,
                                       reason="X is empty, so it has no face", reason_code="EmptyComplex")
        return TverbergCertificate(**cert, witness=None, method="trivial", verdict=CERTIFIED,
                                   reason="r = 1: any single face works")

    witness = is_prime_power(r)
    if witness is None:
        return TverbergCertificate(**cert, witness=None, method=method, verdict=INCONCLUSIVE,
                                   reason=f"NotPrimePower: r = {r} is not a prime power, neither criterion applies",
                                   reason_code="NotPrimePower")

    n = d * (r - 1) - 1
    attempts = []
    routes = ("complementary", "deleted_product") if method == "both" else (method,)
    for route in routes:
        if route == "complementary":
            ok, why, ev = _try_complementary(X, r, n, complex_id)
            code = "ComplementaryFailed"
        else:
            ok, why, ev = _try_deleted_product(X, r, n, max_cells)
            code = "ConfNotAcyclic"
        attempts.append((route, ok, why))
        if ok:
            return TverbergCertificate(**cert, witness=witness, method=route, verdict=CERTIFIED,
                                       reason=why, evidence=ev, attempts=attempts)
    reason = "; ".join(a[2] for a in attempts)
    return TverbergCertificate(**cert, witness=witness, method=routes[-1], verdict=INCONCLUSIVE,
                               reason=reason, reason_code=code, evidence=ev, attempts=attempts)
