"""Multisegments, aperiodicity, the row-reading embedding of charged
multipartitions and orbit/Demazure membership procedures.

A segment [a;b] is the interval of integers from a to b; a multisegment is a
multiset of segments kept in the canonical order (right end, then left end).
"""

from __future__ import annotations

from itertools import groupby

from . import affine, engine, weyl
from .abacus import MultiSymbol, as_partition, rank
from .cartan import AffineTypeA, InfinityTypeA, Weight

Segment = tuple[int, int]
Multisegment = tuple[Segment, ...]


class NotInOrbit(Exception):
    """The multisegment is not the image of an orbit vertex."""


def as_multisegment(segments) -> Multisegment:
    out = []
    for seg in segments:
        a, b = int(seg[0]), int(seg[1])
        if a > b:
            raise ValueError(f"segment [{a};{b}] has a > b")
        out.append((a, b))
    return tuple(sorted(out, key=lambda s: (s[1], s[0])))


def pretty(m: Multisegment) -> str:
    if not m:
        return "0"
    return "+".join(f"[{a};{b}]" for a, b in m)


def seg_length(seg: Segment) -> int:
    return seg[1] - seg[0] + 1


def in_finite_class(m: Multisegment, e: int) -> bool:
    """Membership in the finite-type class: all segments inside [1, e-1]."""
    return all(1 <= a and b <= e - 1 for a, b in m)


def is_aperiodic(m: Multisegment, e: int) -> bool:
    """No length l realizes every residue class of right ends mod e."""
    m = as_multisegment(m)
    by_len: dict[int, set[int]] = {}
    for a, b in m:
        by_len.setdefault(b - a + 1, set()).add(b % e)
    return all(len(res) < e for res in by_len.values())


def pi_embed(parts, charges) -> Multisegment:
    """Row reading: row i of component k becomes [1-i+s_k ; lambda_i-i+s_k]."""
    parts = tuple(as_partition(p) for p in parts)
    charges = tuple(charges)
    segs = []
    for s, lam in zip(charges, parts):
        for i, lam_i in enumerate(lam, start=1):
            segs.append((1 - i + s, lam_i - i + s))
    return as_multisegment(segs)


# -- sequence assembly -----------------------------------------------------------

def _groups_desc(m: Multisegment):
    """Segments grouped by right end, largest right end first, a ascending."""
    m = sorted(m, key=lambda s: (-s[1], s[0]))
    return [(b, [seg for seg in grp])
            for b, grp in ((key, list(grp)) for key, grp in
                           groupby(m, key=lambda s: s[1]))]


def _canonical_assembly(m: Multisegment, level: int):
    """The rigid top-pushed assembly; returns the l sequences or None.

    Group j's k-th smallest segment is prepended to sequence l - r_j + k,
    subject to: the target is empty, or its first segment [a, b] satisfies
    a = a_j^k + 1 and b > b_j.
    """
    lists: list[list[Segment]] = [[] for _ in range(level)]
    for b, grp in _groups_desc(m):
        r = len(grp)
        if r > level:
            return None
        for k, seg in enumerate(grp, start=1):
            target = lists[level - r + k - 1]
            if target:
                head = target[0]
                if not (head[0] == seg[0] + 1 and head[1] > seg[1]):
                    return None
            target.insert(0, seg)
    return lists


def _anchored_assembly(m: Multisegment, charges, record=None):
    """Charge-aware assembly: a component's first (row-1) segment must anchor
    at a = s_k; later prepends follow the printed condition.  Backtracks over
    the small assignment choices."""
    charges = tuple(charges)
    level = len(charges)
    groups = _groups_desc(m)

    def rec(gi: int, lists):
        if gi == len(groups):
            return lists
        b, grp = groups[gi]
        if len(grp) > level:
            return None

        def place(si: int, cur):
            if si == len(grp):
                if record is not None:
                    record.append([list(seq) for seq in cur])
                done = rec(gi + 1, cur)
                if done is not None:
                    return done
                if record is not None:
                    record.pop()
                return None
            seg = grp[si]
            used = set()
            for k in range(level):
                if k in used:
                    continue
                target = cur[k]
                if target:
                    head = target[0]
                    ok = head[0] == seg[0] + 1 and head[1] > seg[1]
                else:
                    ok = seg[0] == charges[k]
                if not ok:
                    continue
                nxt = [list(seq) for seq in cur]
                nxt[k].insert(0, seg)
                done = place(si + 1, nxt)
                if done is not None:
                    return done
            return None

        # a segment placed by this group never lands where a sibling just did:
        # heads created in this group have equal b, and the prepend condition
        # needs head.b > seg.b strictly.
        return place(0, lists)

    return rec(0, [[] for _ in range(level)])


def _lists_to_parts(lists):
    """Row lengths, deepest row first inside each list."""
    parts = []
    for seq in lists:
        lens = [seg_length(s) for s in reversed(seq)]
        parts.append(as_partition(lens))
    return tuple(parts)


def orbit_membership(m, e: int | None, charges):
    """Orbit vertex with pi_embed(vertex, charges) = m, up to a global shift.

    Returns the multipartition; raises NotInOrbit otherwise.  An exact-charge
    assembly is attempted first; the fallback shifts all charges by a common
    d read off the top segment group (the printed worked example needs d != 0).
    """
    m = as_multisegment(m)
    charges = tuple(charges)
    if not m:
        return ((),) * len(charges)
    top_as = {seg[0] for seg in _groups_desc(m)[0][1]}
    shifts = [0] + sorted({a - s for a in top_as for s in charges} - {0})
    for d in shifts:
        shifted = tuple(s + d for s in charges)
        lists = _anchored_assembly(m, shifted)
        if lists is None:
            continue
        parts = _lists_to_parts(lists)
        if pi_embed(parts, shifted) != m:
            continue
        if not affine.is_es_core(parts, e, shifted):
            continue
        return parts
    raise NotInOrbit(pretty(m))


def orbit_membership_any_charge(m, e: int | None, level: int):
    """The rigid assembly plus the read-off multicharge (normalized to s_1 = 0).

    Returns (charges, multipartition); raises NotInOrbit when the assembly
    stops or the reconstruction fails the orbit conditions.
    """
    m = as_multisegment(m)
    if not m:
        return (0,) * level, ((),) * level
    lists = _canonical_assembly(m, level)
    if lists is None:
        raise NotInOrbit(pretty(m))
    parts = []
    anchors = []
    for seq in lists:
        try:
            parts.append(as_partition([seg_length(s) for s in reversed(seq)]))
        except ValueError as exc:
            raise NotInOrbit(pretty(m)) from exc
        anchors.append(seq[-1][0] if seq else None)
    parts = tuple(parts)
    lengths = [len(seq) for seq in lists]
    known = [(anc - p) for anc, p in zip(anchors, lengths) if anc is not None]
    base = known[0] if known else 0
    charges = tuple((anc if anc is not None else base + p)
                    for anc, p in zip(anchors, lengths))
    norm = tuple(c - charges[0] for c in charges)
    if pi_embed(parts, charges) != m:
        raise NotInOrbit(pretty(m))
    if not affine.is_es_core(parts, e, charges):
        raise NotInOrbit(pretty(m))
    return norm, parts


def assembly_stages(m, charges):
    """Snapshots of the anchored assembly after each right-end group."""
    record: list = []
    if _anchored_assembly(as_multisegment(m), charges, record=record) is None:
        raise NotInOrbit(pretty(m))
    return record


# -- restricted Demazure membership ------------------------------------------------

def _row_reading_inverse(m: Multisegment, charges):
    """Invert the row reading for a general vertex (no core condition)."""
    lists = _anchored_assembly(as_multisegment(m), charges)
    if lists is None:
        return None
    try:
        parts = _lists_to_parts(lists)
    except ValueError:
        return None
    if pi_embed(parts, charges) != m:
        return None
    return parts


def binfty_demazure_membership(m, word, charges, e: int | None) -> bool:
    """Whether the vertex encoded by m lies in the Demazure subset for word.

    Restricted mode: the caller fixes the dominant weight through ``charges``
    (m must lie in the image of the corresponding embedding).  For finite e
    only images of orbit vertices are recovered; with e=None any image vertex
    is inverted by row reading.
    """
    m = as_multisegment(m)
    charges = tuple(charges)
    if not m:
        return True
    if e is None:
        parts = _row_reading_inverse(m, charges)
        if parts is None:
            raise ValueError("multisegment is outside the supplied embedding image")
        crystal = affine.UglovCrystal(None, charges)
        datum: InfinityTypeA | AffineTypeA = crystal.datum
    else:
        try:
            parts = orbit_membership(m, e, charges)
        except NotInOrbit as exc:
            raise ValueError(
                "multisegment is outside the recoverable embedding image") from exc
        crystal = affine.UglovCrystal(e, charges)
        datum = crystal.datum
    top, _ = engine.to_highest(crystal, parts)
    if top != crystal.hw:
        raise ValueError("multisegment is outside the supplied embedding image")
    lam = crystal.weight(crystal.hw)
    if datum.nodes is not None:
        word = weyl.project_coset(word, weyl.stabilizer_nodes(lam, datum), datum)
    else:
        fixed = {i for i in set(word) if lam.pairing(i) == 0}
        word = weyl.project_coset(word, fixed, datum)
    bound = crystal.rank(parts)
    key = engine.key_right(crystal, parts)
    w_of_key = engine.orbit_word_of(crystal, crystal.hw, key,
                                    keep=lambda b: crystal.rank(b) <= max(
                                        bound, crystal.rank(key)))
    return weyl.bruhat_leq(w_of_key, word, datum)
