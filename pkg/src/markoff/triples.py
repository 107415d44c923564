"""Markoff triples over F_p[t]: the surface x^2 + y^2 + z^2 = A*x*y*z,
its automorphisms, descent to fundamental triples, and tree generation.

Conventions: a triple is *sorted* when deg x <= deg y <= deg z; sorting is
stable on equal degrees.  Group words record generators in the order they
were applied; since every generator is an involution, replaying a word in
reverse inverts it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AllConstant,
    BudgetExceeded,
    ConstantFormNeedsConstantA,
    IsFundamental,
    IUnavailable,
    ModulusMismatch,
    NotFundamental,
    NotSolution,
    UnclassifiableInput,
)
from .field import PrimeModulus, sqrt_minus_one
from .poly import NEG_INF, Polynomial, render_poly

DEFAULT_TREE_DEPTH_BUDGET = 12


# ----------------------------------------------------------------------
# generators of the automorphism group


@dataclass(frozen=True)
class Swap:
    """Transposition of coordinates i and j (1-based)."""

    i: int
    j: int

    def __str__(self):
        return f"swap({self.i},{self.j})"


@dataclass(frozen=True)
class DoubleNeg:
    """Negation of coordinates i and j (1-based)."""

    i: int
    j: int

    def __str__(self):
        return f"dneg({self.i},{self.j})"


@dataclass(frozen=True)
class Rho:
    """The Vieta move (x, y, z) -> (x, y, A*x*y - z)."""

    def __str__(self):
        return "rho"


RHO = Rho()

Generator = Swap | DoubleNeg | Rho
GroupWord = tuple


@dataclass(frozen=True)
class MarkoffTriple:
    """Ordered triple of polynomials over a common F_p."""

    x: Polynomial
    y: Polynomial
    z: Polynomial

    def __post_init__(self):
        if not (self.x.modulus == self.y.modulus == self.z.modulus):
            raise ModulusMismatch("triple coordinates use different moduli")

    @property
    def coords(self):
        return (self.x, self.y, self.z)

    def signature(self):
        return (self.x.degree, self.y.degree, self.z.degree)

    def height(self):
        return max(self.signature())

    def is_sorted(self) -> bool:
        dx, dy, dz = self.signature()
        return dx <= dy <= dz

    def canonical_key(self):
        """Order-independent identity: coordinates sorted by (degree, coeffs)."""
        return tuple(sorted((c.degree, c.coeffs) for c in self.coords))

    def to_json(self) -> dict:
        return {"x": self.x.to_json(), "y": self.y.to_json(), "z": self.z.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "MarkoffTriple":
        return cls(
            Polynomial.from_json(obj["x"]),
            Polynomial.from_json(obj["y"]),
            Polynomial.from_json(obj["z"]),
        )

    def render(self, style: str = "plain") -> str:
        return "(" + ", ".join(render_poly(c, style) for c in self.coords) + ")"


# ----------------------------------------------------------------------
# fundamental forms


@dataclass(frozen=True)
class ZeroForm:
    """Fundamental triple (0, sign*i*f, f) with f non-constant."""

    f: Polynomial
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.f.is_constant():
            raise ValueError("f must be non-constant")


@dataclass(frozen=True)
class ConstantForm:
    """Fundamental triple (2a/A, a*f + sign*2ai/A, f); only for constant A."""

    f: Polynomial
    a: int
    sign: int

    def __post_init__(self):
        if self.a not in (1, -1) or self.sign not in (1, -1):
            raise ValueError("a and sign must be +1 or -1")
        if self.f.is_constant():
            raise ValueError("f must be non-constant")


FundamentalForm = ZeroForm | ConstantForm


# ----------------------------------------------------------------------
# free-standing triple helpers (no A required)


def sort_triple(triple: MarkoffTriple) -> tuple[MarkoffTriple, GroupWord]:
    """Stable degree-sort; returns the sorted triple and the Swap word applied."""
    if triple.height() <= 0:
        raise AllConstant("all coordinates are constant")
    coords = list(triple.coords)
    word = []
    # bubble sort, strict comparison: stable on equal degrees
    for i, j in ((0, 1), (1, 2), (0, 1)):
        if coords[i].degree > coords[j].degree:
            coords[i], coords[j] = coords[j], coords[i]
            word.append(Swap(i + 1, j + 1))
    return MarkoffTriple(*coords), tuple(word)


def is_fundamental(triple: MarkoffTriple) -> bool:
    """True iff deg y = deg z.  The triple must already be sorted."""
    if not triple.is_sorted():
        raise NotFundamental("triple must be degree-sorted first")
    return triple.y.degree == triple.z.degree


# ----------------------------------------------------------------------
# context


@dataclass(frozen=True)
class MarkoffContext:
    """A fixed prime field and a fixed nonzero parameter A."""

    p: PrimeModulus
    A: Polynomial

    def __post_init__(self):
        if self.A.modulus != self.p:
            raise ModulusMismatch("A is not a polynomial over the given field")
        if self.A.is_zero():
            raise ValueError("A must be nonzero")

    @property
    def beta(self) -> int:
        return len(self.A.coeffs) - 1

    def i(self) -> Polynomial:
        root = sqrt_minus_one(self.p)
        if root is None:
            raise IUnavailable(f"-1 has no square root mod {self.p.p}")
        return Polynomial.constant(self.p, root.value)

    # ------------------------------------------------------------------

    def is_solution(self, triple: MarkoffTriple) -> bool:
        x, y, z = triple.coords
        if x.modulus != self.p:
            raise ModulusMismatch("triple and context use different moduli")
        lhs = x * x + y * y + z * z
        return lhs == self.A * x * y * z

    def require_solution(self, triple: MarkoffTriple):
        if not self.is_solution(triple):
            raise NotSolution(f"{triple.render()} does not satisfy the equation")

    def apply_generator(self, triple: MarkoffTriple, gen: Generator) -> MarkoffTriple:
        coords = list(triple.coords)
        if isinstance(gen, Swap):
            i, j = gen.i - 1, gen.j - 1
            coords[i], coords[j] = coords[j], coords[i]
        elif isinstance(gen, DoubleNeg):
            i, j = gen.i - 1, gen.j - 1
            coords[i], coords[j] = -coords[i], -coords[j]
        elif isinstance(gen, Rho):
            coords[2] = self.A * coords[0] * coords[1] - coords[2]
        else:
            raise TypeError(f"unknown generator {gen!r}")
        return MarkoffTriple(*coords)

    def apply_word(self, triple: MarkoffTriple, word: GroupWord) -> MarkoffTriple:
        for gen in word:
            triple = self.apply_generator(triple, gen)
        return triple

    def replay_word(self, triple: MarkoffTriple, word: GroupWord) -> MarkoffTriple:
        """Invert a recorded word: replay right-to-left (every generator is
        an involution)."""
        for gen in reversed(word):
            triple = self.apply_generator(triple, gen)
        return triple

    def apply_sigma(self, triple: MarkoffTriple, branch: int) -> MarkoffTriple:
        """Branching moves: 1 -> (A*z*y - x, y, z), 2 -> (x, A*x*z - y, z)."""
        x, y, z = triple.coords
        if branch == 1:
            return MarkoffTriple(self.A * z * y - x, y, z)
        if branch == 2:
            return MarkoffTriple(x, self.A * x * z - y, z)
        raise ValueError("branch must be 1 or 2")

    # ------------------------------------------------------------------
    # descent

    def predecessor(self, triple: MarkoffTriple) -> tuple[MarkoffTriple, GroupWord]:
        """One descent step on a sorted non-fundamental solution: apply rho,
        re-sort, and return the new triple with the word applied."""
        if not triple.is_sorted():
            raise ValueError("predecessor needs a degree-sorted triple")
        self.require_solution(triple)
        if is_fundamental(triple):
            raise IsFundamental("fundamental triples have no predecessor")
        stepped = self.apply_generator(triple, RHO)
        sorted_triple, sort_word = sort_triple(stepped)
        return sorted_triple, (RHO,) + sort_word

    def descend(self, triple: MarkoffTriple) -> "DescentResult":
        """Reduce a positive-height solution to a sorted fundamental triple.

        The returned word lists the generators applied, in order, to reach
        the fundamental triple; replay_word(fundamental, word) reproduces
        the input exactly.

        Raises AllConstant for solutions in the orbit of a constant solution
        (possible only for non-constant A, e.g. (1, 2, 2t) = rho(1, 2, 0)
        over F_5 with A = t): their descent chain bottoms out on a constant
        triple, which has no fundamental form.
        """
        self.require_solution(triple)
        if triple.height() <= 0:
            raise AllConstant("descent needs a triple of positive height")
        # solutions are closed under the moves, so validate once at entry
        # and step with rho + sort directly
        current, word = sort_triple(triple)
        parts = list(word)
        while not is_fundamental(current):
            stepped = self.apply_generator(current, RHO)
            current, sort_word = sort_triple(stepped)
            parts.append(RHO)
            parts.extend(sort_word)
        return DescentResult(fundamental=current, word=tuple(parts))

    # ------------------------------------------------------------------
    # fundamental triples

    def classify_fundamental(self, triple: MarkoffTriple) -> FundamentalForm:
        """Match a sorted fundamental solution against its closed form."""
        self.require_solution(triple)
        if not triple.is_sorted() or triple.height() <= 0 or not is_fundamental(triple):
            raise NotFundamental(f"{triple.render()} is not a sorted fundamental triple")
        x, y, z = triple.coords
        i = self.i()
        if x.is_zero():
            iz = i * z
            if y == iz:
                return ZeroForm(f=z, sign=1)
            if y == -iz:
                return ZeroForm(f=z, sign=-1)
            raise UnclassifiableInput(f"{triple.render()}: y is not +-i*z")
        if self.beta != 0 or not x.is_constant():
            raise UnclassifiableInput(f"{triple.render()}: nonzero x with non-constant A")
        a_elem = self.A * x * Polynomial.constant(self.p, pow(2, self.p.p - 2, self.p.p))
        one = Polynomial.constant(self.p, 1)
        if a_elem == one:
            a = 1
        elif a_elem == -one:
            a = -1
        else:
            raise UnclassifiableInput(f"{triple.render()}: x is not +-2/A")
        # remainder of y divided by z, and the identities it must satisfy
        b = y - z.scalar_mul(a)
        if a_elem * a_elem + one != self.A * a_elem * x:
            raise UnclassifiableInput(f"{triple.render()}: a^2 + 1 != A*a*x")
        if b == i * x:
            sign = 1
        elif b == -(i * x):
            sign = -1
        else:
            raise UnclassifiableInput(f"{triple.render()}: remainder is not +-i*x")
        return ConstantForm(f=z, a=a, sign=sign)

    def make_fundamental(self, form: FundamentalForm) -> MarkoffTriple:
        """Build the sorted fundamental triple described by a form."""
        i = self.i()
        if isinstance(form, ZeroForm):
            zero = Polynomial.zero(self.p)
            return MarkoffTriple(zero, (i * form.f).scalar_mul(form.sign), form.f)
        if isinstance(form, ConstantForm):
            x, y = self._constant_family_xy(form.f, form.a, form.sign, i)
            return MarkoffTriple(x, y, form.f)
        raise TypeError(f"unknown form {form!r}")

    def _constant_family_xy(self, f, a, sign, i):
        if self.beta != 0:
            raise ConstantFormNeedsConstantA(
                f"constant family needs deg A = 0, got deg A = {self.beta}"
            )
        inv_A = pow(self.A.coeffs[0], self.p.p - 2, self.p.p)
        two_a_over_A = Polynomial.constant(self.p, 2 * a * inv_A)
        x = two_a_over_A
        y = f.scalar_mul(a) + (i * two_a_over_A).scalar_mul(sign)
        return x, y

    def make_root(self, f: Polynomial, a: int, sign: int = 1, family: str = "zero") -> MarkoffTriple:
        """Smallest-height non-fundamental triple of a Markoff tree.

        zero family:     (f, i*a*f, i*a*A*f^2)
        constant family: (f, a*f + sign*2ai/A, A*a*f^2 + sign*2aif - 2a/A)
        """
        if a not in (1, -1) or sign not in (1, -1):
            raise ValueError("a and sign must be +1 or -1")
        if f.is_constant():
            raise ValueError("f must be non-constant")
        i = self.i()
        if family == "zero":
            iaf = (i * f).scalar_mul(a)
            return MarkoffTriple(f, iaf, self.A * iaf * f)
        if family == "constant":
            x, y = self._constant_family_xy(f, a, sign, i)
            return MarkoffTriple(f, y, self.A * f * y - x)
        raise ValueError(f"unknown family {family!r}")

    # ------------------------------------------------------------------
    # trees

    def generate_tree(
        self,
        root: MarkoffTriple,
        depth: int,
        budget: int = DEFAULT_TREE_DEPTH_BUDGET,
    ) -> "TreeNode":
        """Full binary tree of sorted triples under the two branching moves."""
        self.require_solution(root)
        if depth < 0:
            raise ValueError("depth must be non-negative")
        if depth > budget:
            raise BudgetExceeded(f"tree depth {depth} exceeds budget {budget}")
        sorted_root, _ = sort_triple(root)
        return self._grow(sorted_root, None, depth)

    def _grow(self, triple, branch, depth):
        if depth == 0:
            return TreeNode(triple, branch, ())
        children = tuple(
            self._grow(sort_triple(self.apply_sigma(triple, b))[0], b, depth - 1)
            for b in (1, 2)
        )
        return TreeNode(triple, branch, children)


@dataclass(frozen=True)
class DescentResult:
    fundamental: MarkoffTriple
    word: GroupWord


@dataclass(frozen=True)
class TreeNode:
    """Node of a generated Markoff tree; `branch` is the sigma move (1 or 2)
    that produced it from its parent, None for the root."""

    triple: MarkoffTriple
    branch: int | None
    children: tuple

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def to_json(self) -> dict:
        return {
            "triple": self.triple.to_json(),
            "children": [child.to_json() for child in self.children],
        }

    def to_dot(self, style: str = "plain") -> str:
        lines = ["digraph markoff_tree {", '  node [shape=box, fontname="monospace"];']
        counter = [0]

        def emit(node):
            idx = counter[0]
            counter[0] += 1
            label = node.triple.render(style).replace('"', '\\"')
            lines.append(f'  n{idx} [label="{label}"];')
            for child in node.children:
                cidx = emit(child)
                lines.append(f'  n{idx} -> n{cidx} [label="s{child.branch}"];')
            return idx

        emit(self)
        lines.append("}")
        return "\n".join(lines)
