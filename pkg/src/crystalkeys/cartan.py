"""Cartan data and weights for finite types A, C and affine type A.

A weight is stored through its pairings with the simple coroots plus, in
affine type, its pairing with the scaling element (the "degree").  Weights
are sparse mappings so the same type serves the finite families, the cyclic
affine family and the infinite-rank family used by the abacus models.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction  # noqa: F401  (kept out; integer arithmetic only)


@dataclass(frozen=True)
class Weight:
    """Integral weight: pairings with coroots h_i plus an affine degree."""

    pairs: tuple[tuple[int, int], ...]  # sorted (node, value), zero values dropped
    degree: int = 0

    @staticmethod
    def of(mapping, degree: int = 0) -> "Weight":
        items = tuple(sorted((i, v) for i, v in dict(mapping).items() if v != 0))
        return Weight(items, degree)

    def pairing(self, i: int) -> int:
        for j, v in self.pairs:
            if j == i:
                return v
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.pairs)

    def is_zero(self) -> bool:
        return not self.pairs and self.degree == 0

    def is_dominant(self) -> bool:
        return all(v >= 0 for _, v in self.pairs)

    def __add__(self, other: "Weight") -> "Weight":
        d = self.as_dict()
        for i, v in other.pairs:
            d[i] = d.get(i, 0) + v
        return Weight.of(d, self.degree + other.degree)

    def __sub__(self, other: "Weight") -> "Weight":
        return self + other.scale(-1)

    def scale(self, c: int) -> "Weight":
        return Weight.of({i: c * v for i, v in self.pairs}, c * self.degree)

    def to_jsonable(self):
        return {"pairings": [[i, v] for i, v in self.pairs], "degree": self.degree}

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        body = " ".join(f"{i}:{v}" for i, v in self.pairs)
        if self.degree:
            body += f" d:{self.degree}"
        return f"({body})"


ZERO_WEIGHT = Weight((), 0)


class CartanDatum:
    """Generalized Cartan datum restricted to the families this library supports.

    ``a(i, j)`` is the pairing ``alpha_i(h_j)``; rows of the matrix are the
    pairing vectors of the simple roots.
    """

    kind: str
    nodes: tuple[int, ...] | None  # None when the index set is all of Z

    def contains(self, i: int) -> bool:
        raise NotImplementedError

    def a(self, i: int, j: int) -> int:
        raise NotImplementedError

    def alpha_support(self, i: int) -> tuple[int, ...]:
        """Nodes j with alpha_i(h_j) possibly nonzero."""
        raise NotImplementedError

    def alpha_degree(self, i: int) -> int:
        return 0

    # -- weights -----------------------------------------------------------

    def check_node(self, i: int) -> None:
        if not self.contains(i):
            raise ValueError(f"unknown node {i!r} for {self.kind}")

    def alpha(self, i: int) -> Weight:
        self.check_node(i)
        return Weight.of({j: self.a(i, j) for j in self.alpha_support(i)},
                         self.alpha_degree(i))

    def omega(self, i: int) -> Weight:
        self.check_node(i)
        return Weight.of({i: 1})

    def weight(self, mapping, degree: int = 0) -> Weight:
        w = Weight.of(mapping, degree)
        for i in w.support():
            self.check_node(i)
        return w

    def reflect(self, i: int, gamma: Weight) -> Weight:
        """Simple reflection s_i(gamma) = gamma - <gamma, h_i> alpha_i."""
        k = gamma.pairing(i)
        if k == 0:
            return gamma
        return gamma - self.alpha(i).scale(k)

    def dominant_conjugate(self, gamma: Weight, max_steps: int = 10 ** 6) -> Weight:
        """The dominant chamber representative of W·gamma.

        Terminates for the weights met here (finite type, or affine/infinite
        weights of vertices in highest weight crystals).
        """
        g = gamma
        for _ in range(max_steps):
            neg = [i for i, v in g.pairs if v < 0]
            if not neg:
                return g
            g = self.reflect(neg[0], g)
        raise RuntimeError("dominant conjugation did not terminate")


class FiniteTypeA(CartanDatum):
    """Type A_n, nodes 1..n."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("rank must be >= 1")
        self.n = n
        self.kind = f"A:{n}"
        self.nodes = tuple(range(1, n + 1))

    def contains(self, i: int) -> bool:
        return 1 <= i <= self.n

    def a(self, i: int, j: int) -> int:
        if i == j:
            return 2
        if abs(i - j) == 1:
            return -1
        return 0

    def alpha_support(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in (i - 1, i, i + 1) if self.contains(j))


class FiniteTypeC(CartanDatum):
    """Type C_n, nodes 1..n, long root at node n (alpha_n(h_{n-1}) = -2)."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("rank must be >= 2")
        self.n = n
        self.kind = f"C:{n}"
        self.nodes = tuple(range(1, n + 1))

    def contains(self, i: int) -> bool:
        return 1 <= i <= self.n

    def a(self, i: int, j: int) -> int:
        if i == j:
            return 2
        if i == self.n and j == self.n - 1:
            return -2
        if abs(i - j) == 1:
            return -1
        return 0

    def alpha_support(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in (i - 1, i, i + 1) if self.contains(j))


class AffineTypeA(CartanDatum):
    """Type A_{e-1}^(1), nodes 0..e-1 on a cycle; degree tracks the scaling element."""

    def __init__(self, e: int):
        if e < 2:
            raise ValueError("affine type A needs e >= 2")
        self.e = e
        self.kind = f"A~:{e}"
        self.nodes = tuple(range(e))

    def contains(self, i: int) -> bool:
        return 0 <= i < self.e

    def a(self, i: int, j: int) -> int:
        if i == j:
            return 2
        if self.e == 2:
            return -2
        d = (i - j) % self.e
        if d == 1 or d == self.e - 1:
            return -1
        return 0

    def alpha_support(self, i: int) -> tuple[int, ...]:
        return tuple(sorted({(i - 1) % self.e, i, (i + 1) % self.e}))

    def alpha_degree(self, i: int) -> int:
        return 1 if i == 0 else 0


class InfinityTypeA(CartanDatum):
    """Type A_inf: nodes are all of Z, used by the e = infinity abacus models."""

    def __init__(self):
        self.kind = "A~:inf"
        self.nodes = None

    def contains(self, i: int) -> bool:
        return isinstance(i, int)

    def a(self, i: int, j: int) -> int:
        if i == j:
            return 2
        if abs(i - j) == 1:
            return -1
        return 0

    def alpha_support(self, i: int) -> tuple[int, ...]:
        return (i - 1, i, i + 1)


def cartan_datum(tag: str) -> CartanDatum:
    """Build a datum from a string tag: "A:n", "C:n", "A~:e" or "A~:inf"."""
    try:
        family, _, param = tag.partition(":")
        if family == "A":
            return FiniteTypeA(int(param))
        if family == "C":
            return FiniteTypeC(int(param))
        if family == "A~":
            if param == "inf":
                return InfinityTypeA()
            return AffineTypeA(int(param))
    except ValueError as exc:
        raise ValueError(f"bad Cartan datum tag {tag!r}") from exc
    raise ValueError(f"bad Cartan datum tag {tag!r}")


def simple_reflection_apply(datum: CartanDatum, i: int, gamma: Weight) -> Weight:
    """Apply s_i to a weight; involutive."""
    datum.check_node(i)
    return datum.reflect(i, gamma)
