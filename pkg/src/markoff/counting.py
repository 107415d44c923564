"""Closed-form counting of Markoff-triple signatures and solutions.

E(n) counts (1,0)-Euclid-tree triples with maximum n via a Moebius divisor
sum; C_beta(n) and C_A(n) count signatures of Markoff triples of height n;
the finite-field count gives the exact number of solutions of height n over
F_q[t] for non-constant A.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConstantANotSupported, NonConstantA
from .field import is_prime


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization (intended for n well below 2**32)."""
    if n < 1:
        raise ValueError("n must be positive")
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def mobius(n: int) -> int:
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors(n: int) -> list[int]:
    divs = [1]
    for prime, exp in factorize(n).items():
        divs = [d * prime**k for d in divs for k in range(exp + 1)]
    return sorted(divs)


def count_E(n: int) -> int:
    """Number of (1,0)-tree triples with maximum n (E(1) = 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(mobius(d) * (n // (2 * d) + 1) for d in divisors(n))


def count_C0(n: int) -> int:
    """Signature count for beta = 0: floor(n/2) + 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return n // 2 + 1


@dataclass(frozen=True)
class CountTerm:
    d: int
    e: int
    multiplier: int

    @property
    def contribution(self) -> int:
        return self.e * self.multiplier

    def to_json(self) -> dict:
        return {"d": self.d, "E": self.e, "multiplier": self.multiplier}


@dataclass(frozen=True)
class CountReport:
    """A divisor-sum value together with its per-divisor contributions."""

    value: int
    terms: tuple[CountTerm, ...]
    empty_field: bool = field(default=False)

    def to_json(self) -> dict:
        obj = {"value": self.value, "terms": [t.to_json() for t in self.terms]}
        if self.empty_field:
            obj["empty_field"] = True
        return obj


def _admissible_divisors(beta: int, n: int) -> list[int]:
    # d | (n + beta) with beta * d < n + beta
    return [d for d in divisors(n + beta) if beta * d < n + beta]


def count_C_beta(beta: int, n: int) -> CountReport:
    """Signatures of non-fundamental triples of height n, plus one:
    sum of E(d) over d | (n+beta) with beta*d < n+beta."""
    if beta < 0:
        raise ValueError("beta must be non-negative")
    if n < 1:
        raise ValueError("n must be positive")
    terms = tuple(CountTerm(d, count_E(d), 1) for d in _admissible_divisors(beta, n))
    return CountReport(value=sum(t.contribution for t in terms), terms=terms)


def count_C_A(beta: int, n: int) -> int:
    """Signatures of Markoff triples of height exactly n; depends only on
    beta = deg A.  For constant A the two fundamental shapes add one more."""
    base = count_C_beta(beta, n).value
    return base + 1 if beta == 0 else base


@dataclass(frozen=True)
class CumulativeReport:
    total: int
    lower: Fraction
    upper: Fraction

    def to_json(self) -> dict:
        return {"total": self.total, "lower": str(self.lower), "upper": str(self.upper)}


def cumulative_signatures(H: int, beta: int = 0) -> CumulativeReport:
    """Sum of C_A(n) for n <= H with the exact sandwich bounds
    (H^2+5H)/4 < total <= (H^2+9H)/4.  Only defined for constant A."""
    if beta != 0:
        raise NonConstantA("cumulative sandwich bounds require constant A")
    if H < 1:
        raise ValueError("H must be positive")
    total = sum(n // 2 + 2 for n in range(1, H + 1))
    return CumulativeReport(
        total=total,
        lower=Fraction(H * H + 5 * H, 4),
        upper=Fraction(H * H + 9 * H, 4),
    )


def count_finite_field(q: int, beta: int, n: int) -> CountReport:
    """Exact number of solutions of height n over F_q[t], deg A = beta >= 1:

        4*(q-1) * sum over d | (n+beta), beta*d < n+beta of
                  q^((n+beta)/d - beta) * E(d)

    For q = 3 (mod 4) the solution set is empty; the report carries value 0
    with an explicit flag rather than a vacuous formula evaluation.
    """
    if beta < 1:
        raise ConstantANotSupported(
            "no closed-form finite-field count for constant A; "
            "use the brute-force census instead"
        )
    if n < 1:
        raise ValueError("n must be positive")
    if not is_prime(q) or q == 2:
        raise ValueError(f"q must be an odd prime, got {q}")
    if q % 4 == 3:
        return CountReport(value=0, terms=(), empty_field=True)
    terms = tuple(
        CountTerm(d, count_E(d), 4 * (q - 1) * q ** ((n + beta) // d - beta))
        for d in _admissible_divisors(beta, n)
    )
    return CountReport(value=sum(t.contribution for t in terms), terms=terms)
