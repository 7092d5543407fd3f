"""Realization-independent crystal machinery.

Everything here works through a small vertex-level protocol (``Crystal``):
raising/lowering operators, string lengths and a weight function.  Tensor
products follow the convention

    f(u (x) v) = f(u) (x) v   if phi(v) <= eps(u),   else  u (x) f(v)
    e(u (x) v) = u (x) e(v)   if eps(u) <= phi(v),   else  e(u) (x) v

which is the one every realization in this package is calibrated against
(the highest weight tableau/symbol must be the unique source).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cartan import CartanDatum, Weight
from . import weyl

KEY_SCHEDULE = (1, 2, 6, 12, 24, 60, 120, 720)


class KeySweepError(RuntimeError):
    """The dilatation sweep ran out of schedule without extremal factors."""


class NotInPrincipalComponent(ValueError):
    """Path transport was asked about a vertex outside the principal component."""


class Crystal:
    """Vertex-level interface of one crystal realization.

    Vertices are hashable immutable values.  ``f``/``e`` return ``None`` when
    the operator vanishes.
    """

    datum: CartanDatum

    def f(self, i, b):
        raise NotImplementedError

    def e(self, i, b):
        raise NotImplementedError

    def eps(self, i, b) -> int:
        n, x = 0, b
        while (x := self.e(i, x)) is not None:
            n += 1
        return n

    def phi(self, i, b) -> int:
        n, x = 0, b
        while (x := self.f(i, x)) is not None:
            n += 1
        return n

    def weight(self, b) -> Weight:
        raise NotImplementedError

    def indices(self, b):
        """Node indices that can possibly act on b (all nodes by default)."""
        if self.datum.nodes is None:
            raise NotImplementedError("infinite index set needs explicit indices()")
        return self.datum.nodes

    def label(self, b) -> str:
        return str(b)

    def to_jsonable(self, b):
        return self.label(b)


class TensorCrystal(Crystal):
    """Tensor product of crystals; vertices are tuples, one entry per factor."""

    def __init__(self, components):
        self.components = tuple(components)
        if not self.components:
            raise ValueError("empty tensor product")
        self.datum = self.components[0].datum

    def _prefix_eps(self, i, b):
        """eps of the prefixes b[0..k] under the tensor rule."""
        out = []
        cur = 0
        for c, x in zip(self.components, b):
            cur = c.eps(i, x) + max(0, cur - c.phi(i, x))
            out.append(cur)
        return out

    def eps(self, i, b) -> int:
        return self._prefix_eps(i, b)[-1]

    def phi(self, i, b) -> int:
        cur_eps = 0
        cur_phi = 0
        for c, x in zip(self.components, b):
            e_x, p_x = c.eps(i, x), c.phi(i, x)
            cur_phi = cur_phi + max(0, p_x - cur_eps)
            cur_eps = e_x + max(0, cur_eps - p_x)
        return cur_phi

    def f(self, i, b):
        eps = self._prefix_eps(i, b)
        k = len(b) - 1
        while k > 0 and self.components[k].phi(i, b[k]) <= eps[k - 1]:
            k -= 1
        new = self.components[k].f(i, b[k])
        if new is None:
            return None
        return b[:k] + (new,) + b[k + 1:]

    def e(self, i, b):
        eps = self._prefix_eps(i, b)
        k = len(b) - 1
        while k > 0 and eps[k - 1] > self.components[k].phi(i, b[k]):
            k -= 1
        new = self.components[k].e(i, b[k])
        if new is None:
            return None
        return b[:k] + (new,) + b[k + 1:]

    def weight(self, b) -> Weight:
        w = self.components[0].weight(b[0])
        for c, x in zip(self.components[1:], b[1:]):
            w = w + c.weight(x)
        return w

    def indices(self, b):
        if self.datum.nodes is not None:
            return self.datum.nodes
        seen = []
        for c, x in zip(self.components, b):
            for i in c.indices(x):
                if i not in seen:
                    seen.append(i)
        return sorted(seen)

    def label(self, b) -> str:
        return " (x) ".join(c.label(x) for c, x in zip(self.components, b))

    def to_jsonable(self, b):
        return [c.to_jsonable(x) for c, x in zip(self.components, b)]


# -- elementary moves --------------------------------------------------------

def tensor_f(crystal: TensorCrystal, i, b):
    return crystal.f(i, b)


def tensor_e(crystal: TensorCrystal, i, b):
    return crystal.e(i, b)


def apply_f_power(crystal: Crystal, i, b, k: int):
    for _ in range(k):
        b = crystal.f(i, b)
        if b is None:
            raise ValueError("lowering operator vanished mid-string")
    return b


def weyl_act(crystal: Crystal, i, b):
    """Reflect b across the center of its i-string."""
    d = crystal.phi(i, b) - crystal.eps(i, b)
    if d > 0:
        return apply_f_power(crystal, i, b, d)
    for _ in range(-d):
        b = crystal.e(i, b)
    return b


def weyl_act_word(crystal: Crystal, word, b):
    """w . b, the rightmost letter of the word acting first."""
    for i in reversed(tuple(word)):
        b = weyl_act(crystal, i, b)
    return b


def to_highest(crystal: Crystal, b):
    """The source of b's component plus the raise letters.

    Returns ``(hw, letters)`` with ``b = f_{letters[0]} ... f_{letters[-1]}
    applied to hw composed outermost-first`` (i.e. replay with ``f`` over
    ``reversed(letters)`` starting from ``hw``).
    """
    letters = []
    while True:
        for i in crystal.indices(b):
            up = crystal.e(i, b)
            if up is not None:
                letters.append(i)
                b = up
                break
        else:
            return b, letters


def replay_down(crystal: Crystal, hw, letters, power: int = 1):
    x = hw
    for i in reversed(letters):
        x = apply_f_power(crystal, i, x, power)
    return x


# -- orbits ------------------------------------------------------------------

def orbit(crystal: Crystal, hw, keep=None):
    """BFS of the W-orbit of hw: list of (reduced word, vertex).

    Words are minimal-length coset representatives; ``keep`` prunes vertices
    (used as a rank bound in affine type, where ranks only grow downward).
    """
    found = {hw: ()}
    out = [((), hw)]
    frontier = [(hw, ())]
    while frontier:
        nxt = []
        for b, word in frontier:
            for i in crystal.indices(b):
                if crystal.eps(i, b) != 0:
                    continue
                k = crystal.phi(i, b)
                if k == 0:
                    continue
                child = apply_f_power(crystal, i, b, k)
                if keep is not None and not keep(child):
                    continue
                if child not in found:
                    w2 = (i,) + word
                    found[child] = w2
                    out.append((w2, child))
                    nxt.append((child, w2))
        frontier = nxt
    return out


def orbit_edges(crystal: Crystal, hw, keep=None):
    """Orbit BFS, emitting also the Hasse arrows (word, vertex, i, child)."""
    found = {hw: ()}
    edges = []
    frontier = [(hw, ())]
    while frontier:
        nxt = []
        for b, word in frontier:
            for i in crystal.indices(b):
                if crystal.eps(i, b) != 0:
                    continue
                k = crystal.phi(i, b)
                if k == 0:
                    continue
                child = apply_f_power(crystal, i, b, k)
                if keep is not None and not keep(child):
                    continue
                edges.append((b, i, child))
                if child not in found:
                    w2 = (i,) + word
                    found[child] = w2
                    nxt.append((child, w2))
        frontier = nxt
    return found, edges


def orbit_word_of(crystal: Crystal, hw, target, keep=None):
    """The minimal coset word w with target = b_{w lambda}."""
    for word, b in orbit(crystal, hw, keep=keep):
        if b == target:
            return word
    raise ValueError("target vertex is not in the orbit of the source")


# -- dilatation and keys -----------------------------------------------------

def dilatation(crystal: Crystal, b, m: int, letters=None):
    """K_m(b): the m factors of the dilated vertex in crystal^{(x) m}.

    ``letters`` may supply an alternative raise path (as from ``to_highest``);
    the result must not depend on it, which the test suite checks.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if letters is None:
        hw, letters = to_highest(crystal, b)
    else:
        hw = b
        for i in letters:
            hw = crystal.e(i, hw)
            if hw is None:
                raise ValueError("invalid raise path")
    power = TensorCrystal([crystal] * m)
    return replay_down(power, (hw,) * m, letters, power=m)


def is_extremal(crystal: Crystal, b, lam: Weight) -> bool:
    """Whether wt(b) lies in W.lam (multiplicity-one test via dominant conjugation)."""
    return crystal.datum.dominant_conjugate(crystal.weight(b)) == lam


def dilatation_factors(crystal: Crystal, b, schedule=KEY_SCHEDULE):
    """First schedule entry m for which all K_m factors are extremal."""
    hw, letters = to_highest(crystal, b)
    lam = crystal.weight(hw)
    for m in schedule:
        factors = dilatation(crystal, b, m)
        if all(is_extremal(crystal, c, lam) for c in factors):
            return m, factors
    raise KeySweepError(f"no extremal factorization up to m = {schedule[-1]}")


def key_right(crystal: Crystal, b, schedule=KEY_SCHEDULE):
    _, factors = dilatation_factors(crystal, b, schedule)
    return factors[-1]


def key_left(crystal: Crystal, b, schedule=KEY_SCHEDULE):
    _, factors = dilatation_factors(crystal, b, schedule)
    return factors[0]


# -- combinatorial R-matrices ------------------------------------------------

def transport(src: Crystal, src_hw, dst: Crystal, dst_hw, b):
    """Image of b under the unique isomorphism matching the two sources."""
    top, letters = to_highest(src, b)
    if top != src_hw:
        raise NotInPrincipalComponent(
            "vertex does not raise to the designated source")
    return replay_down(dst, dst_hw, letters)


def rmatrix_path_transport(left: Crystal, left_hw, right: Crystal, right_hw, pair):
    """R : B(b_lam (x) b_mu) -> B(b_mu (x) b_lam) by path transport."""
    src = TensorCrystal([left, right])
    dst = TensorCrystal([right, left])
    return transport(src, (left_hw, right_hw), dst, (right_hw, left_hw), pair)


def _default_pair_r(left, left_hw, right, right_hw, pair):
    return rmatrix_path_transport(left, left_hw, right, right_hw, pair)


def key_right_reduced(components, hws, b, fundamental_key, pair_r=None):
    """Right Key of a vertex of a tensor of fundamental crystals.

    For each slot k the factor is carried to the rightmost position by
    adjacent R-matrices and the fundamental key of the exposed factor becomes
    the k-th component of the Key.
    """
    pair_r = pair_r or _default_pair_r
    comps, hws = list(components), list(hws)
    l = len(comps)
    out = []
    for k in range(l):
        cs, hs, vs = list(comps), list(hws), list(b)
        for j in range(k, l - 1):
            vs[j], vs[j + 1] = pair_r(cs[j], hs[j], cs[j + 1], hs[j + 1],
                                      (vs[j], vs[j + 1]))
            cs[j], cs[j + 1] = cs[j + 1], cs[j]
            hs[j], hs[j + 1] = hs[j + 1], hs[j]
        out.append(fundamental_key(cs[l - 1], vs[l - 1]))
    return tuple(out)


def key_left_reduced(components, hws, b, fundamental_key, pair_r=None):
    pair_r = pair_r or _default_pair_r
    comps, hws = list(components), list(hws)
    l = len(comps)
    out = []
    for k in range(l):
        cs, hs, vs = list(comps), list(hws), list(b)
        for j in range(k, 0, -1):
            vs[j - 1], vs[j] = pair_r(cs[j - 1], hs[j - 1], cs[j], hs[j],
                                      (vs[j - 1], vs[j]))
            cs[j - 1], cs[j] = cs[j], cs[j - 1]
            hs[j - 1], hs[j] = hs[j], hs[j - 1]
        out.append(fundamental_key(cs[0], vs[0]))
    return tuple(out)


# -- Demazure crystals -------------------------------------------------------

def demazure_enumerate(crystal: Crystal, hw, word) -> set:
    """B_w(lambda) as the iterated string closure along a reduced word."""
    out = {hw}
    for i in reversed(tuple(word)):
        extra = set()
        for b in out:
            x = b
            while (x := crystal.f(i, x)) is not None:
                extra.add(x)
        out |= extra
    return out


def demazure_membership(crystal: Crystal, hw, b, word, datum: CartanDatum,
                        key_fn=None, orbit_keep=None) -> bool:
    """Key-based membership test: K^R(b) = b_{w' lambda} and w' <= w (Bruhat)."""
    key = key_fn(b) if key_fn is not None else key_right(crystal, b)
    w_of_key = orbit_word_of(crystal, hw, key, keep=orbit_keep)
    word = weyl.word_reduce(word, datum)
    return weyl.bruhat_leq(w_of_key, word, datum)


# -- crystal graphs and exports ----------------------------------------------

@dataclass
class CrystalGraph:
    """Finite chunk of a crystal: BFS vertices plus colored arrows."""

    crystal: Crystal
    source: object
    vertices: list = field(default_factory=list)
    arrows: list = field(default_factory=list)  # (src_index, i, dst_index)

    def index_of(self, b) -> int:
        return self._index[b]

    def to_dot(self) -> str:
        lines = ["digraph crystal {", '  rankdir=TB;']
        for k, b in enumerate(self.vertices):
            shape = "doublecircle" if b == self.source else "ellipse"
            lines.append(f'  v{k} [label="{self.crystal.label(b)}", shape={shape}];')
        for src, i, dst in self.arrows:
            lines.append(f'  v{src} -> v{dst} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_jsonable(self):
        return {
            "schema": "crystalkeys/graph/1",
            "source": 0,
            "vertices": [self.crystal.to_jsonable(b) for b in self.vertices],
            "arrows": [[src, i, dst] for src, i, dst in self.arrows],
        }


def crystal_graph(crystal: Crystal, source, keep=None, max_vertices=200000):
    """BFS the crystal below ``source``; ``keep`` prunes (rank bounds)."""
    graph = CrystalGraph(crystal, source)
    graph.vertices.append(source)
    graph._index = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for b in frontier:
            for i in crystal.indices(b):
                child = crystal.f(i, b)
                if child is None:
                    continue
                if keep is not None and not keep(child):
                    continue
                if child not in graph._index:
                    if len(graph.vertices) >= max_vertices:
                        raise RuntimeError("crystal graph exceeded vertex budget")
                    graph._index[child] = len(graph.vertices)
                    graph.vertices.append(child)
                    nxt.append(child)
                graph.arrows.append((graph._index[b], i, graph._index[child]))
        frontier = nxt
    return graph
