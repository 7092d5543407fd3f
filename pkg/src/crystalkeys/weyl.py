"""Weyl group elements as reduced words, Bruhat orders, coset projections.

Group elements are only ever handled through reduced words.  Length
bookkeeping goes through the positivity of ``w^{-1}(alpha_i)`` expanded on
the simple-root basis, which works uniformly for the finite, affine and
infinite-rank data.
"""

from __future__ import annotations

from functools import lru_cache

from .cartan import CartanDatum, Weight

Word = tuple[int, ...]


def _root_unit(i: int) -> dict[int, int]:
    return {i: 1}


def _reflect_root(datum: CartanDatum, i: int, coeffs: dict[int, int]) -> dict[int, int]:
    """s_i acting on a root written on the simple-root basis."""
    pairing = sum(c * datum.a(j, i) for j, c in coeffs.items())
    if pairing == 0:
        return coeffs
    out = dict(coeffs)
    out[i] = out.get(i, 0) - pairing
    if out[i] == 0:
        del out[i]
    return out


def _is_unit(coeffs: dict[int, int], i: int) -> bool:
    return coeffs == {i: 1}


def word_apply_to_root(datum: CartanDatum, word: Word, i: int) -> dict[int, int]:
    """w(alpha_i) on the simple-root basis (rightmost letter acts first)."""
    coeffs = _root_unit(i)
    for letter in reversed(word):
        coeffs = _reflect_root(datum, letter, coeffs)
    return coeffs


def _prepend(datum: CartanDatum, i: int, word: Word) -> Word:
    """Reduced word for s_i * w given reduced w."""
    coeffs = _root_unit(i)
    for t, letter in enumerate(word):
        if _is_unit(coeffs, letter):
            return word[:t] + word[t + 1:]
        coeffs = _reflect_root(datum, letter, coeffs)
    return (i,) + word


def _append(datum: CartanDatum, word: Word, i: int) -> Word:
    """Reduced word for w * s_i given reduced w."""
    coeffs = _root_unit(i)
    for t in range(len(word) - 1, -1, -1):
        letter = word[t]
        if _is_unit(coeffs, letter):
            return word[:t] + word[t + 1:]
        coeffs = _reflect_root(datum, letter, coeffs)
    return word + (i,)


def word_reduce(word, datum: CartanDatum) -> Word:
    """A reduced word for the same group element."""
    word = tuple(word)
    for letter in word:
        datum.check_node(letter)
    out: Word = ()
    for letter in reversed(word):
        out = _prepend(datum, letter, out)
    return out


def length(word, datum: CartanDatum) -> int:
    return len(word_reduce(word, datum))


def word_inverse(word: Word) -> Word:
    return tuple(reversed(word))


def word_mult(u: Word, v: Word, datum: CartanDatum) -> Word:
    return word_reduce(tuple(u) + tuple(v), datum)


def apply_word(datum: CartanDatum, word: Word, gamma: Weight) -> Weight:
    """w(gamma); the rightmost letter acts first."""
    for letter in reversed(word):
        gamma = datum.reflect(letter, gamma)
    return gamma


def _test_weight(datum: CartanDatum, words: tuple[Word, ...]) -> Weight:
    if datum.nodes is not None:
        return Weight.of({i: 1 for i in datum.nodes})
    support = {i for w in words for i in w}
    if not support:
        return Weight.of({0: 1})
    lo, hi = min(support) - 1, max(support) + 1
    return Weight.of({i: 1 for i in range(lo, hi + 1)})


def words_equal(u: Word, v: Word, datum: CartanDatum) -> bool:
    """Whether two words represent the same group element."""
    u, v = word_reduce(u, datum), word_reduce(v, datum)
    if len(u) != len(v):
        return False
    rho = _test_weight(datum, (u, v))
    return apply_word(datum, u, rho) == apply_word(datum, v, rho)


def left_descents(word: Word, datum: CartanDatum) -> list[int]:
    """Nodes i with l(s_i w) < l(w); reduced input expected."""
    out = []
    for i in sorted(set(word)):
        if len(_prepend(datum, i, word)) < len(word):
            out.append(i)
    return out


def bruhat_leq(u, v, datum: CartanDatum) -> bool:
    """Strong Bruhat order via the descent recursion."""
    u = word_reduce(u, datum)
    v = word_reduce(v, datum)

    @lru_cache(maxsize=None)
    def rec(a: Word, b: Word) -> bool:
        if not a:
            return True
        if len(a) > len(b):
            return False
        i = b[0]
        sb = _prepend(datum, i, b)
        sa = _prepend(datum, i, a)
        if len(sa) < len(a):
            return rec(sa, sb)
        return rec(a, sb)

    return rec(u, v)


def weak_leq(u, v, datum: CartanDatum) -> bool:
    """Left weak order: u is a suffix of v, i.e. l(v u^{-1}) + l(u) = l(v)."""
    u = word_reduce(u, datum)
    v = word_reduce(v, datum)
    quotient = word_mult(v, word_inverse(u), datum)
    return len(quotient) + len(u) == len(v)


def stabilizer_nodes(lam: Weight, datum: CartanDatum) -> frozenset[int]:
    """J_lambda = {i : s_i(lambda) = lambda} for dominant lambda."""
    if datum.nodes is not None:
        return frozenset(i for i in datum.nodes if lam.pairing(i) == 0)
    # Infinite rank: only callers with explicit J use this; expose the support
    # complement lazily through project_coset instead.
    raise ValueError("stabilizer_nodes needs a finite index set")


def project_coset(w, J, datum: CartanDatum) -> Word:
    """Minimal-length representative of the coset w W_J."""
    word = word_reduce(w, datum)
    J = frozenset(J)
    while True:
        for j in J:
            shorter = _append(datum, word, j)
            if len(shorter) < len(word):
                word = shorter
                break
        else:
            return word


def project_to_weight(w, lam: Weight, datum: CartanDatum) -> Word:
    """p_lambda(w) for a dominant weight lambda."""
    return project_coset(w, stabilizer_nodes(lam, datum), datum)


def coset_bruhat_split(w, w2, lam: Weight, mu: Weight, datum: CartanDatum) -> bool:
    """Bruhat comparison through the parabolic projections p_lambda and p_mu.

    Inputs must be minimal in their (lambda+mu)-cosets; the direct comparison
    and the split one are both computed and must agree.
    """
    w = word_reduce(w, datum)
    w2 = word_reduce(w2, datum)
    J_sum = stabilizer_nodes(lam + mu, datum)
    for x in (w, w2):
        if project_coset(x, J_sum, datum) != x:
            raise ValueError("input word is not minimal in its coset")
    split = (bruhat_leq(project_to_weight(w, lam, datum),
                        project_to_weight(w2, lam, datum), datum)
             and bruhat_leq(project_to_weight(w, mu, datum),
                            project_to_weight(w2, mu, datum), datum))
    direct = bruhat_leq(w, w2, datum)
    assert split == direct, "coset split disagrees with direct Bruhat comparison"
    return split


def all_reduced_words(word: Word, datum: CartanDatum) -> list[Word]:
    """Every reduced word of the element represented by ``word``."""
    word = word_reduce(word, datum)

    @lru_cache(maxsize=None)
    def rec(w: Word) -> tuple[Word, ...]:
        if not w:
            return ((),)
        out = []
        for i in left_descents(w, datum):
            for rest in rec(_prepend(datum, i, w)):
                out.append((i,) + rest)
        return tuple(out)

    return list(rec(word))


def elements_up_to_length(datum: CartanDatum, max_len: int,
                          nodes=None) -> list[Word]:
    """All group elements of length <= max_len, as reduced words (BFS order)."""
    if nodes is None:
        if datum.nodes is None:
            raise ValueError("node set required for infinite-rank enumeration")
        nodes = datum.nodes
    seen = {(): None}
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for i in nodes:
                longer = _prepend(datum, i, w)
                if len(longer) > len(w) and longer not in seen:
                    seen[longer] = None
                    nxt.append(longer)
        frontier = nxt
    return list(seen)
