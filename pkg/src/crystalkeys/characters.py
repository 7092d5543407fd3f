"""Formal weight polynomials and Demazure operators.

Elements of the group ring Z[P] are finitely supported maps Weight -> Z.
The divided difference D_i acts monomial by monomial through the closed
form of the geometric sum, so everything stays in exact integer arithmetic.
"""

from __future__ import annotations

from .cartan import CartanDatum, Weight


class WeightPolynomial:
    """Finitely supported integer combination of formal exponentials e^beta."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs: dict[Weight, int] = {}
        if coeffs:
            for w, c in dict(coeffs).items():
                if c != 0:
                    self.coeffs[w] = c

    @staticmethod
    def monomial(w: Weight, c: int = 1) -> "WeightPolynomial":
        return WeightPolynomial({w: c})

    def add_term(self, w: Weight, c: int) -> None:
        new = self.coeffs.get(w, 0) + c
        if new:
            self.coeffs[w] = new
        else:
            self.coeffs.pop(w, None)

    def __add__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        out = WeightPolynomial(self.coeffs)
        for w, c in other.coeffs.items():
            out.add_term(w, c)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def coefficient(self, w: Weight) -> int:
        return self.coeffs.get(w, 0)

    def total(self) -> int:
        """Sum of coefficients (the dimension when this is a character)."""
        return sum(self.coeffs.values())

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0].pairs, kv[0].degree))

    def to_jsonable(self):
        return [[w.to_jsonable(), c] for w, c in self.items()]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*e^{w}" for w, c in self.items())


def demazure_step(datum: CartanDatum, i: int, poly: WeightPolynomial) -> WeightPolynomial:
    """The isobaric divided difference D_i applied to a polynomial.

    On a monomial e^mu with k = <mu, h_i>:
      k >= 0  ->  e^mu + e^{mu-alpha_i} + ... + e^{s_i mu}
      k = -1  ->  0
      k <= -2 ->  -(e^{mu+alpha_i} + ... + e^{s_i mu - alpha_i})
    """
    alpha = datum.alpha(i)
    out = WeightPolynomial()
    for mu, c in poly.coeffs.items():
        k = mu.pairing(i)
        if k >= 0:
            term = mu
            for _ in range(k + 1):
                out.add_term(term, c)
                term = term - alpha
        elif k <= -2:
            term = mu + alpha
            for _ in range(-k - 1):
                out.add_term(term, -c)
                term = term + alpha
    return out


def demazure_character(datum: CartanDatum, lam: Weight, word) -> WeightPolynomial:
    """D_w(e^lambda) for a reduced word w = (i_1, ..., i_l)."""
    if not lam.is_dominant():
        raise ValueError("highest weight must be dominant")
    poly = WeightPolynomial.monomial(lam)
    for i in reversed(tuple(word)):
        poly = demazure_step(datum, i, poly)
    return poly


def character_of(crystal, vertices) -> WeightPolynomial:
    """Sum of e^{wt(b)} over a finite set of vertices."""
    out = WeightPolynomial()
    for b in vertices:
        out.add_term(crystal.weight(b), 1)
    return out
