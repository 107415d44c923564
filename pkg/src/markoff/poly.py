"""Dense univariate polynomials over F_p.

Coefficients are stored as a tuple of canonical integers in ascending power
order with no trailing zeros; the zero polynomial has an empty tuple and
degree NEG_INF.  A small expression parser and a deterministic renderer
(plain residues, or minimal-magnitude forms using i = sqrt(-1)) round-trip
polynomials through text.
"""

from __future__ import annotations

from .errors import IUnavailable, ModulusMismatch, ParseError
from .field import FieldElement, PrimeModulus, _sqrt_int, sqrt_minus_one

# Degree of the zero polynomial.  Orders below every integer and absorbs
# under addition, exactly what signature comparisons need.
NEG_INF = float("-inf")

ExtDegree = int | float


class Polynomial:
    """Immutable dense polynomial over F_p."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: PrimeModulus, coeffs=()):
        p = modulus.p
        c = [int(a) % p for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def _make(cls, modulus, coeffs):
        # internal fast path: coeffs already reduced, stripped, tuple
        self = object.__new__(cls)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", coeffs)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, modulus: PrimeModulus) -> "Polynomial":
        return cls._make(modulus, ())

    @classmethod
    def constant(cls, modulus: PrimeModulus, value: int) -> "Polynomial":
        v = value % modulus.p
        return cls._make(modulus, (v,) if v else ())

    @classmethod
    def t(cls, modulus: PrimeModulus) -> "Polynomial":
        return cls._make(modulus, (0, 1))

    @classmethod
    def monomial(cls, modulus: PrimeModulus, degree: int, coeff: int = 1) -> "Polynomial":
        c = coeff % modulus.p
        if c == 0:
            return cls.zero(modulus)
        return cls._make(modulus, (0,) * degree + (c,))

    # ------------------------------------------------------------------
    # structure

    @property
    def degree(self) -> ExtDegree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading_coeff(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return FieldElement(self.coeffs[-1], self.modulus)

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _check(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ModulusMismatch(
                f"cannot combine polynomials mod {self.modulus.p} and mod {other.modulus.p}"
            )
        return other

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other):
        other = self._check(other)
        p = self.modulus.p
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for k, bk in enumerate(b):
            c[k] = (c[k] + bk) % p
        while c and c[-1] == 0:
            c.pop()
        return Polynomial._make(self.modulus, tuple(c))

    def __sub__(self, other):
        other = self._check(other)
        p = self.modulus.p
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        c = [0] * n
        for k in range(n):
            ak = a[k] if k < len(a) else 0
            bk = b[k] if k < len(b) else 0
            c[k] = (ak - bk) % p
        while c and c[-1] == 0:
            c.pop()
        return Polynomial._make(self.modulus, tuple(c))

    def __neg__(self):
        p = self.modulus.p
        return Polynomial._make(self.modulus, tuple(p - a if a else 0 for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scalar_mul(other)
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch("scalar from a different field")
            return self.scalar_mul(other.value)
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(self.modulus)
        p = self.modulus.p
        c = [0] * (len(a) + len(b) - 1)
        for k, ak in enumerate(a):
            if ak:
                for j, bj in enumerate(b):
                    c[k + j] += ak * bj
        return Polynomial._make(self.modulus, tuple(v % p for v in c))

    __rmul__ = __mul__

    def scalar_mul(self, scalar: int) -> "Polynomial":
        p = self.modulus.p
        s = scalar % p
        if s == 0:
            return Polynomial.zero(self.modulus)
        if s == 1:
            return self
        return Polynomial._make(self.modulus, tuple(a * s % p for a in self.coeffs))

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.modulus, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        """Long division: returns (q, r) with self = q*other + r, deg r < deg other."""
        other = self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.modulus.p
        a, b = list(self.coeffs), other.coeffs
        n = len(b)
        if len(a) < n:
            return Polynomial.zero(self.modulus), self
        lead_inv = pow(b[-1], p - 2, p)
        q = [0] * (len(a) - n + 1)
        for k in range(len(a) - n, -1, -1):
            if len(a) >= k + n and a[-1]:
                qk = a[-1] * lead_inv % p
                q[k] = qk
                for j in range(n):
                    a[k + j] = (a[k + j] - qk * b[j]) % p
            while a and a[-1] == 0:
                a.pop()
        while q and q[-1] == 0:
            q.pop()
        return Polynomial._make(self.modulus, tuple(q)), Polynomial._make(self.modulus, tuple(a))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.modulus == other.modulus
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.modulus.p, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Polynomial(p={self.modulus.p}, {render_poly(self)!r})"

    # ------------------------------------------------------------------
    # serialization

    def to_json(self) -> dict:
        return {"p": self.modulus.p, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "Polynomial":
        return cls(PrimeModulus(obj["p"]), obj["coeffs"])


def poly_sqrt(f: Polynomial) -> Polynomial | None:
    """Square root of f in F_p[t], or None if f is not a square.

    The leading coefficient of the result is the canonical field square root
    of f's leading coefficient (so the result is deterministic among +-g).
    """
    coeffs = _sqrt_coeffs(f.coeffs, f.modulus.p)
    if coeffs is None:
        return None
    return Polynomial._make(f.modulus, coeffs)


def _sqrt_coeffs(f, p):
    """Raw coefficient-tuple square root; shared with the search oracle."""
    if not f:
        return ()
    deg = len(f) - 1
    if deg % 2:
        return None
    lead = _sqrt_int(f[-1], p)
    if lead is None:
        return None
    m = deg // 2
    g = [0] * (m + 1)
    g[m] = lead
    inv2lead = pow(2 * lead, p - 2, p)
    # match coefficients of t^(m+k) for k = m-1 .. 0
    for k in range(m - 1, -1, -1):
        acc = 0
        for a in range(k + 1, m):
            b = m + k - a
            if b < a:
                break
            acc += g[a] * g[b] * (2 if a != b else 1)
        g[k] = (f[m + k] - acc) * inv2lead % p
    # verify the lower half, i.e. that g*g really equals f
    sq = [0] * (deg + 1)
    for a, ga in enumerate(g):
        if ga:
            for b, gb in enumerate(g):
                sq[a + b] += ga * gb
    if any(v % p != fk for v, fk in zip(sq, f)):
        return None
    return tuple(g)


# ----------------------------------------------------------------------
# expression parser: integers, t, i, + - * ^, parentheses


def parse_poly(text: str, modulus: PrimeModulus) -> Polynomial:
    """Evaluate a polynomial expression in F_p[t].

    Grammar: sums/differences of products of powers of atoms, where an atom
    is an integer literal, `t`, `i` (requires p = 1 mod 4), or a
    parenthesized expression.  `^` takes a non-negative integer literal.
    """
    return _Parser(text, modulus).run()


class _Parser:
    def __init__(self, text, modulus):
        self.text = text
        self.pos = 0
        self.modulus = modulus

    def run(self):
        value = self.expr()
        self.skip_ws()
        if self.pos < len(self.text):
            raise ParseError(f"unexpected character {self.text[self.pos]!r}", self.pos)
        return value

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self):
        ch = self.peek()
        negate = False
        if ch in "+-":
            self.pos += 1
            negate = ch == "-"
        value = self.term()
        if negate:
            value = -value
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                value = value + self.term()
            elif ch == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.power()
        while self.peek() == "*":
            self.pos += 1
            value = value * self.power()
        return value

    def power(self):
        value = self.atom()
        while self.peek() == "^":
            self.pos += 1
            value = value ** self.integer("exponent")
        return value

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return value
        if ch == "t":
            self.pos += 1
            return Polynomial.t(self.modulus)
        if ch == "i":
            at = self.pos
            self.pos += 1
            i = sqrt_minus_one(self.modulus)
            if i is None:
                raise IUnavailable(
                    f"'i' at position {at}: -1 has no square root mod {self.modulus.p}"
                )
            return Polynomial.constant(self.modulus, i.value)
        if ch.isdigit():
            return Polynomial.constant(self.modulus, self.integer("integer"))
        raise ParseError("expected integer, 't', 'i' or '('", self.pos)

    def integer(self, what):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(f"expected {what}", start)
        return int(self.text[start : self.pos])


# ----------------------------------------------------------------------
# renderer


def render_poly(f: Polynomial, style: str = "plain") -> str:
    """Deterministic text form of f; parse_poly(render_poly(f)) == f.

    plain:  every coefficient as its canonical residue in [0, p).
    with_i: each coefficient as the single-term form among
            {c, -c', c''*i, -c''*i} with the smallest printed magnitude,
            ties preferring real over imaginary and positive over negative.
    """
    if style not in ("plain", "with_i"):
        raise ValueError(f"unknown style {style!r}")
    if f.is_zero():
        return "0"
    p = f.modulus.p
    inv_i = None
    if style == "with_i":
        i = sqrt_minus_one(f.modulus)
        if i is None:
            raise IUnavailable(f"with_i rendering needs p = 1 (mod 4), got p = {p}")
        inv_i = pow(i.value, p - 2, p)
    parts = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        if style == "plain":
            mag, neg, imag = c, False, False
        else:
            # (magnitude, imag?, negative?) compares in exactly the
            # preference order: small, then real, then positive
            v = c * inv_i % p
            mag, imag, neg = min(
                (c, False, False),
                (p - c, False, True),
                (v, True, False),
                (p - v, True, True),
            )
        factors = []
        if mag != 1 or (not imag and k == 0):
            factors.append(str(mag))
        if imag:
            factors.append("i")
        if k >= 1:
            factors.append("t" if k == 1 else f"t^{k}")
        text = "*".join(factors)
        if not parts:
            parts.append(f"-{text}" if neg else text)
        else:
            parts.append(f"-{text}" if neg else f"+{text}")
    return "".join(parts)
