"""Affine type A realizations on abaci: level-1 symbols, Uglov and Kleshchev
multipartition crystals, e-cores and (e,s)-cores, Key algorithms, charge
isomorphisms and the level-2 fundamental R-matrix.

``e=None`` selects the infinite-rank (A_inf) structure everywhere: words are
built per integer position without modular wrap-around.
"""

from __future__ import annotations

from . import engine
from .abacus import (MultiSymbol, Partition, Symbol, as_partition,
                     contains_diagram, hook_lengths, multiplicities_below,
                     rank, transpose)
from .cartan import AffineTypeA, InfinityTypeA, Weight

Event = tuple[int, int, str]  # (position, component, "A"|"R")


# -- {A,R}-words ---------------------------------------------------------------

def node_events(charges, parts, i: int, e: int | None) -> list[Event]:
    """All addable/removable i-events, scanned right to left by node value.

    An addable event at bead position x is the node of value x (mod e); a
    removable one at bead x is the node of value x-1.  The word lists node
    values in decreasing order; at equal values the lower components come
    first, the unique tie rule under which translating the first runner by e
    and rotating it to the top is a crystal isomorphism.
    """
    out = []
    for comp, (s, lam) in enumerate(zip(charges, parts), start=1):
        for x, kind in Symbol(s, lam).events():
            node = x if kind == "A" else x - 1
            if e is None:
                if node == i:
                    out.append((node, x, comp, kind))
            elif node % e == i % e:
                out.append((node, x, comp, kind))
    out.sort(key=lambda ev: (-ev[0], ev[2]))
    return [(x, comp, kind) for _, x, comp, kind in out]


def reduce_word(events: list[Event]) -> list[Event]:
    """Recursively delete RA factors; survivors form an A-block then R-block."""
    stack: list[Event] = []
    for ev in events:
        if ev[2] == "A" and stack and stack[-1][2] == "R":
            stack.pop()
        else:
            stack.append(ev)
    return stack


def _surviving(charges, parts, i, e):
    return reduce_word(node_events(charges, parts, i, e))


def _apply_down(charges, parts, ev: Event):
    x, comp, _ = ev
    lam = Symbol(charges[comp - 1], parts[comp - 1]).shift_bead_up(x)
    out = list(parts)
    out[comp - 1] = lam.parts
    return tuple(out)


def _apply_up(charges, parts, ev: Event):
    x, comp, _ = ev
    lam = Symbol(charges[comp - 1], parts[comp - 1]).shift_bead_down(x)
    out = list(parts)
    out[comp - 1] = lam.parts
    return tuple(out)


def word_f(charges, parts, i, e):
    """f_i: bump the last surviving addable (the A adjacent to the R block)."""
    word = _surviving(charges, parts, i, e)
    adds = [ev for ev in word if ev[2] == "A"]
    if not adds:
        return None
    return _apply_down(charges, parts, adds[-1])


def word_e(charges, parts, i, e):
    """e_i: retract the first surviving removable (dual to word_f)."""
    word = _surviving(charges, parts, i, e)
    rems = [ev for ev in word if ev[2] == "R"]
    if not rems:
        return None
    return _apply_up(charges, parts, rems[0])


def word_counts(charges, parts, i, e) -> tuple[int, int]:
    """(eps, phi) read off the reduced word."""
    word = _surviving(charges, parts, i, e)
    a = sum(1 for ev in word if ev[2] == "A")
    return len(word) - a, a


# -- crystal objects -----------------------------------------------------------

class UglovCrystal(engine.Crystal):
    """Level-l crystal on multipartitions for a multicharge (e finite or None)."""

    def __init__(self, e: int | None, charges):
        self.modulus = e
        self.charges = tuple(int(c) for c in charges)
        self.datum = InfinityTypeA() if e is None else AffineTypeA(e)
        self.hw = ((),) * len(self.charges)

    def f(self, i, b):
        return word_f(self.charges, b, i, self.modulus)

    def e(self, i, b):
        return word_e(self.charges, b, i, self.modulus)

    def eps(self, i, b) -> int:
        return word_counts(self.charges, b, i, self.modulus)[0]

    def phi(self, i, b) -> int:
        return word_counts(self.charges, b, i, self.modulus)[1]

    def _node(self, x: int) -> int:
        return x if self.modulus is None else x % self.modulus

    def weight(self, b) -> Weight:
        w = Weight.of({})
        for s in self.charges:
            w = w + self.datum.omega(self._node(s))
        for s, lam in zip(self.charges, b):
            for u, lam_u in enumerate(lam, start=1):
                for v in range(1, lam_u + 1):
                    w = w - self.datum.alpha(self._node(v - u + s))
        return w

    def indices(self, b):
        if self.modulus is not None:
            return self.datum.nodes
        nodes = set()
        for s, lam in zip(self.charges, b):
            for x, kind in Symbol(s, lam).events():
                nodes.add(x if kind == "A" else x - 1)
        return sorted(nodes)

    def rank(self, b) -> int:
        return sum(rank(p) for p in b)

    def label(self, b) -> str:
        return str(MultiSymbol(self.charges, b))

    def to_jsonable(self, b):
        return [list(p) for p in b]


class LevelOneCrystal(engine.Crystal):
    """Level-1 crystal on partitions with a single charge."""

    def __init__(self, e: int | None, charge: int):
        self.modulus = e
        self.charge = charge
        self._inner = UglovCrystal(e, (charge,))
        self.datum = self._inner.datum
        self.hw = ()

    def f(self, i, b):
        out = self._inner.f(i, (b,))
        return None if out is None else out[0]

    def e(self, i, b):
        out = self._inner.e(i, (b,))
        return None if out is None else out[0]

    def eps(self, i, b) -> int:
        return self._inner.eps(i, (b,))

    def phi(self, i, b) -> int:
        return self._inner.phi(i, (b,))

    def weight(self, b) -> Weight:
        return self._inner.weight((b,))

    def indices(self, b):
        return self._inner.indices((b,))

    def rank(self, b) -> int:
        return rank(b)

    def label(self, b) -> str:
        return str(Symbol(self.charge, b))

    def to_jsonable(self, b):
        return list(b)


def level1_f(i: int, sym: Symbol, e: int | None) -> Symbol | None:
    out = word_f((sym.charge,), (sym.parts,), i, e)
    return None if out is None else Symbol(sym.charge, out[0])


def level1_e(i: int, sym: Symbol, e: int | None) -> Symbol | None:
    out = word_e((sym.charge,), (sym.parts,), i, e)
    return None if out is None else Symbol(sym.charge, out[0])


def uglov_f(i: int, ms: MultiSymbol, e: int | None) -> MultiSymbol | None:
    out = word_f(ms.charges, ms.parts, i, e)
    return None if out is None else MultiSymbol(ms.charges, out)


def uglov_e(i: int, ms: MultiSymbol, e: int | None) -> MultiSymbol | None:
    out = word_e(ms.charges, ms.parts, i, e)
    return None if out is None else MultiSymbol(ms.charges, out)


def is_e_regular(parts: Partition, e: int) -> bool:
    """No part repeated e times or more."""
    return multiplicities_below(parts, e)


def is_e_restricted(parts: Partition, e: int) -> bool:
    """All successive part differences below e; the level-1 component's vertex set."""
    parts = as_partition(parts)
    padded = parts + (0,)
    return all(padded[i] - padded[i + 1] < e for i in range(len(parts)))


# -- e-cores --------------------------------------------------------------------

def is_e_core(parts: Partition, e: int, mode: str = "all") -> bool:
    """Four equivalent characterizations; "all" asserts their agreement."""
    parts = as_partition(parts)

    def by_hook():
        return all(h != e for h in hook_lengths(parts))

    def by_word():
        for i in range(e):
            kinds = {ev[2] for ev in node_events((0,), (parts,), i, e)}
            if len(kinds) > 1:
                return False
        return True

    def by_beta_shift():
        sym = Symbol(e, parts)
        return all(sym.contains(x - e) for x in sym.finite_betas())

    def by_inclusion():
        return Symbol(0, parts).included_in(Symbol(e, parts))

    table = {"hook": by_hook, "AR-word": by_word,
             "beta-shift": by_beta_shift, "abacus-inclusion": by_inclusion}
    if mode != "all":
        return table[mode]()
    answers = {name: fn() for name, fn in table.items()}
    assert len(set(answers.values())) == 1, f"core tests disagree: {answers}"
    return answers["hook"]


def level1_key_right(sym: Symbol, e: int) -> Symbol:
    """Right Key of an e-regular level-1 vertex by bead promotion.

    Repeatedly: take the highest bead p with p-e empty, move it to the least
    empty position q > p with q-e occupied and q, p in different classes
    mod e; stop when the bead set is shift-stable (an e-core).
    """
    if not is_e_restricted(sym.parts, e):
        raise ValueError("input partition is not a vertex of the component")
    cur = sym
    budget = max(1, rank(sym.parts)) * e + 2
    for _ in range(budget):
        unstable = [x for x in cur.finite_betas() if not cur.contains(x - e)]
        if not unstable:
            return cur
        p = max(unstable)
        q = None
        for cand in range(p + 1, cur.max_bead() + e + 2):
            if (not cur.contains(cand)) and cur.contains(cand - e) \
                    and (cand - p) % e != 0:
                q = cand
                break
        if q is None:
            raise RuntimeError("no promotion target; input was not a crystal vertex")
        cur = cur.replace_bead(p, q)
    raise RuntimeError("key iteration exceeded its bound")


# -- (e,s)-cores -----------------------------------------------------------------

def is_es_core(parts, e: int | None, charges) -> bool:
    """Nested-runner characterization of the orbit of the empty multipartition."""
    parts = tuple(as_partition(p) for p in parts)
    charges = tuple(charges)
    l = len(parts)
    if l == 1:
        if e is None:
            return True
        return Symbol(0, parts[0]).included_in(Symbol(e, parts[0]))
    for a in range(l):
        for b in range(a + 1, l):
            if e is None:
                sa = Symbol(charges[a], parts[a])
                sb = Symbol(charges[b], parts[b])
                if not sa.included_in(sb):
                    return False
            else:
                d = (charges[b] - charges[a]) % e
                sa = Symbol(0, parts[a])
                sb = Symbol(d, parts[b])
                if not (sa.included_in(sb) and sb.included_in(sa.translate(e))):
                    return False
    return True


def orbit_check(ms: MultiSymbol, e: int | None) -> bool:
    return is_es_core(ms.parts, e, ms.charges)


def transpose_core(parts, e: int | None, charges):
    """((lambda^l)^t, ..., (lambda^1)^t) at charges (-s_l, ..., -s_1)."""
    parts = tuple(as_partition(p) for p in parts)
    out_parts = tuple(transpose(p) for p in reversed(parts))
    out_charges = tuple(-c for c in reversed(tuple(charges)))
    return out_parts, out_charges


def b_statistics(parts, e: int, charges):
    """Residue-wise maximal beta numbers b_{i,j} plus the gamma flag.

    The flag is true when for each residue i all the b_{i,j} lie in a window
    {gamma_i, gamma_i + e}.
    """
    parts = tuple(as_partition(p) for p in parts)
    tilde = [s % e for s in charges]
    table: dict[int, list[int]] = {i: [] for i in range(e)}
    for s, lam in zip(tilde, parts):
        sym = Symbol(s, lam)
        for i in range(e):
            best = None
            for x in sym.finite_betas():
                if x % e == i and (best is None or x > best):
                    best = x
            solid = sym.solid_below
            solid_best = solid - ((solid - i) % e)
            best = solid_best if best is None else max(best, solid_best)
            table[i].append(best)
    flag = all(max(v) - min(v) in (0, e) for v in table.values())
    return table, flag


def multipartition_bruhat(lam, mu) -> bool:
    """Componentwise Young-diagram inclusion (Bruhat order on the orbit)."""
    lam = tuple(as_partition(p) for p in lam)
    mu = tuple(as_partition(p) for p in mu)
    if len(lam) != len(mu):
        raise ValueError("levels differ")
    return all(contains_diagram(a, b) for a, b in zip(lam, mu))


# -- Kleshchev window ------------------------------------------------------------

def spread_charges(charges, e: int, window: int) -> tuple[int, ...]:
    """Charges congruent to s mod e with gaps >= window + e between components."""
    out = [charges[0] % e]
    for s in charges[1:]:
        base = s % e
        lo = out[-1] + window + e
        k = -((base - lo) // e)
        out.append(base + max(k, 0) * e)
    return tuple(out)


class KleshchevCrystal(UglovCrystal):
    """Tensor-product realization on a bounded-rank window via spread charges."""

    def __init__(self, e: int, charges, window: int):
        self.base_charges = tuple(charges)
        self.window = window
        super().__init__(e, spread_charges(charges, e, window))

    def f(self, i, b):
        if self.rank(b) >= self.window:
            raise ValueError("rank window exceeded")
        return super().f(i, b)


def kleshchev_f(i, parts, charges, e: int, window: int):
    parts = tuple(as_partition(p) for p in parts)
    if sum(rank(p) for p in parts) >= window:
        raise ValueError("rank window exceeded")
    return word_f(spread_charges(charges, e, window), parts, i, e)


def kleshchev_e(i, parts, charges, e: int, window: int):
    parts = tuple(as_partition(p) for p in parts)
    if sum(rank(p) for p in parts) > window:
        raise ValueError("rank window exceeded")
    return word_e(spread_charges(charges, e, window), parts, i, e)


# -- charge isomorphisms and the fundamental R-matrix ----------------------------

def tau_rotate(parts, charges):
    """Component rotation: data part of Phi_{s -> tau.s}; caller shifts the charge."""
    parts = tuple(parts)
    charges = tuple(charges)
    return parts[1:] + parts[:1], charges[1:] + (charges[0],)


def uglov_swap_iso(parts, charges, e: int | None, k: int):
    """Adjacent charge swap (k, k+1) as the unique crystal isomorphism.

    Raises the vertex to the empty multipartition in the source realization
    and replays the path in the swapped-charge realization.
    """
    charges = tuple(charges)
    swapped = list(charges)
    swapped[k - 1], swapped[k] = swapped[k], swapped[k - 1]
    src = UglovCrystal(e, charges)
    dst = UglovCrystal(e, tuple(swapped))
    image = engine.transport(src, src.hw, dst, dst.hw, tuple(parts))
    return image, tuple(swapped)


def fundamental_rmatrix(bipartition, charges, e: int, window: int):
    """Level-2 combinatorial R-matrix in the Kleshchev realization.

    Alternates the component rotation with the adjacent charge swap through
    intermediate Uglov realizations, ending on a spread multicharge where the
    identification with the swapped Kleshchev realization is trivial.
    """
    parts = tuple(as_partition(p) for p in bipartition)
    if len(parts) != 2:
        raise ValueError("fundamental R-matrix acts on bipartitions")
    if sum(rank(p) for p in parts) > window:
        raise ValueError("rank window exceeded")
    s1, s2 = charges
    v1, v2 = s1 % e, s2 % e
    k = 1
    while k * e <= window + e or v2 + k * e - v1 < window + e:
        k += 1
    cur_parts = parts
    cur_charges = (v1, v2 + k * e)
    for _ in range(2 * k):
        # rotation: components swap, the charge leaving the front gains e
        cur_parts, _ = tau_rotate(cur_parts, cur_charges)
        cur_charges = (cur_charges[1], cur_charges[0] + e)
        # adjacent swap restores component order as a crystal isomorphism
        cur_parts, cur_charges = uglov_swap_iso(cur_parts, cur_charges, e, 1)
    cur_parts, _ = tau_rotate(cur_parts, cur_charges)
    cur_charges = (cur_charges[1], cur_charges[0] + e)
    return cur_parts


def higher_level_key_right(parts, charges, e: int, window: int | None = None):
    """Right Key of a Kleshchev vertex via R-matrix reduction to level 1.

    In the Kleshchev tensor product the component with the largest index is
    the leftmost factor, so exposing a factor on the rightmost tensor slot
    means carrying the component down to position 1 by adjacent fundamental
    R-matrices.  The level-1 Key algorithm applied to the exposed factor
    yields component k of the Key; the output is an (e,s)-core.
    """
    parts = tuple(as_partition(p) for p in parts)
    charges = tuple(charges)
    l = len(parts)
    if window is None:
        window = sum(rank(p) for p in parts) + 1
    keys = []
    for k in range(l):
        cur = list(parts)
        cur_charges = list(charges)
        for j in range(k, 0, -1):
            pair = fundamental_rmatrix((cur[j - 1], cur[j]),
                                       (cur_charges[j - 1], cur_charges[j]),
                                       e, window)
            cur[j - 1], cur[j] = pair
            cur_charges[j - 1], cur_charges[j] = cur_charges[j], cur_charges[j - 1]
        exposed = Symbol(cur_charges[0] % e, cur[0])
        keys.append(level1_key_right(exposed, e).parts)
    return tuple(keys)


# -- generalized Young lattices ---------------------------------------------------

def core_lattice(e: int | None, charges, rank_bound: int):
    """Orbit Hasse graph on (e,s)-cores up to a rank bound.

    Returns (nodes, edges): nodes are multipartitions, edges (src, i, dst)
    with dst obtained by adding every addable i-node at once.
    """
    crystal = UglovCrystal(e, charges)
    found, edges = engine.orbit_edges(
        crystal, crystal.hw, keep=lambda b: crystal.rank(b) <= rank_bound)
    return list(found), edges
