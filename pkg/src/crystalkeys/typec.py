"""Type C_n realization: admissible symplectic columns, the split procedure,
column Keys and tableau validity.

Letters are encoded as integers: k stands for k, -k for k-bar, ordered
1 < ... < n < n-bar < ... < 1-bar.  Crystal operators use the signature rule
on the column reading word (columns right to left, top to bottom), matching
the tensor convention of the engine.
"""

from __future__ import annotations

from . import engine
from .cartan import FiniteTypeC, Weight

Letter = int
Column = tuple[Letter, ...]
Tableau = tuple[Column, ...]


class InadmissibleColumn(ValueError):
    """The column admits no split; it is not a crystal vertex."""


def letter_key(x: Letter, n: int) -> int:
    """Position of the letter in 1 < ... < n < n-bar < ... < 1-bar."""
    if 1 <= x <= n:
        return x
    if -n <= x <= -1:
        return 2 * n + 1 + x
    raise ValueError(f"letter {x} out of range for C_{n}")


def as_column(seq, n: int) -> Column:
    col = tuple(int(x) for x in seq)
    keys = [letter_key(x, n) for x in col]
    if any(keys[i] >= keys[i + 1] for i in range(len(keys) - 1)):
        raise ValueError("column letters must strictly increase")
    return col


def as_tableau(columns, n: int) -> Tableau:
    cols = tuple(as_column(c, n) for c in columns)
    if any(len(cols[i]) < len(cols[i + 1]) for i in range(len(cols) - 1)):
        raise ValueError("column heights must weakly decrease")
    return cols


# -- split procedure -----------------------------------------------------------

def split_column(col: Column, n: int) -> tuple[Column, Column]:
    """(lC, rC) per the greedy symplectic split; raises when inadmissible."""
    col = as_column(col, n)
    present = set(col)
    doubled = sorted((z for z in range(1, n + 1)
                      if z in present and -z in present), reverse=True)
    chosen: list[int] = []
    upper = n + 1
    for z in doubled:
        limit = min(upper, z)
        t = None
        for cand in range(limit - 1, 0, -1):
            if cand not in present and -cand not in present and cand not in chosen:
                t = cand
                break
        if t is None:
            raise InadmissibleColumn(f"column {col} admits no split")
        chosen.append(t)
        upper = t
    swap_r = {-z: -t for z, t in zip(doubled, chosen)}
    swap_l = {z: t for z, t in zip(doubled, chosen)}
    right = sorted((swap_r.get(x, x) for x in col), key=lambda x: letter_key(x, n))
    left = sorted((swap_l.get(x, x) for x in col), key=lambda x: letter_key(x, n))
    return tuple(left), tuple(right)


def is_admissible(col: Column, n: int) -> bool:
    try:
        split_column(col, n)
    except InadmissibleColumn:
        return False
    return True


def column_keys(col: Column, n: int) -> tuple[Column, Column]:
    """(left Key, right Key) of a fundamental-crystal column: (lC, rC)."""
    return split_column(col, n)


def split_form(tableau: Tableau, n: int) -> Tableau:
    out = []
    for col in tableau:
        left, right = split_column(col, n)
        out.extend([left, right])
    return tuple(out)


def _rows_weakly_increase(cols: Tableau, n: int) -> bool:
    for k in range(len(cols) - 1):
        a, b = cols[k], cols[k + 1]
        if len(a) < len(b):
            return False
        if any(letter_key(a[r], n) > letter_key(b[r], n) for r in range(len(b))):
            return False
    return True


def is_type_c_tableau(tableau: Tableau, n: int) -> bool:
    """Every column admissible and the split form semistandard."""
    try:
        tableau = as_tableau(tableau, n)
        spl = split_form(tableau, n)
    except (ValueError, InadmissibleColumn):
        return False
    return _rows_weakly_increase(spl, n)


# -- signature rule --------------------------------------------------------------

def _letter_sign(x: Letter, i: int, n: int) -> int:
    if i == n:
        if x == n:
            return 1
        if x == -n:
            return -1
        return 0
    if x == i or x == -(i + 1):
        return 1
    if x == i + 1 or x == -i:
        return -1
    return 0


_F_MAP = {}  # (n, i, letter) -> image


def _f_letter(x: Letter, i: int, n: int) -> Letter:
    if i == n:
        return -n
    return i + 1 if x == i else -i


def _e_letter(x: Letter, i: int, n: int) -> Letter:
    if i == n:
        return n
    return i if x == i + 1 else -(i + 1)


def _signs(tableau: Tableau, i: int, n: int):
    for k in range(len(tableau) - 1, -1, -1):
        for r in range(len(tableau[k])):
            s = _letter_sign(tableau[k][r], i, n)
            if s:
                yield (k, r), s


def _signature_act(signed, which: str):
    plus_stack: list = []
    minus: list = []
    for pos, sign in signed:
        if sign > 0:
            plus_stack.append(pos)
        elif plus_stack:
            plus_stack.pop()
        else:
            minus.append(pos)
    if which == "f":
        return plus_stack[0] if plus_stack else None
    if which == "e":
        return minus[-1] if minus else None
    return len(plus_stack), len(minus)


def _resort(col: Column, n: int) -> Column:
    return tuple(sorted(col, key=lambda x: letter_key(x, n)))


def tableau_f(i: int, tableau: Tableau, n: int) -> Tableau | None:
    pos = _signature_act(_signs(tableau, i, n), "f")
    if pos is None:
        return None
    k, r = pos
    col = list(tableau[k])
    col[r] = _f_letter(col[r], i, n)
    return tableau[:k] + (_resort(tuple(col), n),) + tableau[k + 1:]


def tableau_e(i: int, tableau: Tableau, n: int) -> Tableau | None:
    pos = _signature_act(_signs(tableau, i, n), "e")
    if pos is None:
        return None
    k, r = pos
    col = list(tableau[k])
    col[r] = _e_letter(col[r], i, n)
    return tableau[:k] + (_resort(tuple(col), n),) + tableau[k + 1:]


def tableau_counts(i: int, tableau: Tableau, n: int) -> tuple[int, int]:
    return _signature_act(_signs(tableau, i, n), "counts")


def content_weight(tableau: Tableau, n: int) -> Weight:
    counts: dict[int, int] = {}
    for col in tableau:
        for x in col:
            k = abs(x)
            counts[k] = counts.get(k, 0) + (1 if x > 0 else -1)
    pairs = {}
    for i in range(1, n):
        pairs[i] = counts.get(i, 0) - counts.get(i + 1, 0)
    pairs[n] = counts.get(n, 0)
    return Weight.of(pairs)


# -- crystal objects --------------------------------------------------------------

class SymplecticColumnCrystal(engine.Crystal):
    """B(omega_h) on admissible columns of height h."""

    def __init__(self, n: int, height: int):
        if not 1 <= height <= n:
            raise ValueError("bad column height")
        self.n = n
        self.height = height
        self.datum = FiniteTypeC(n)
        self.hw = tuple(range(1, height + 1))

    def f(self, i, b):
        out = tableau_f(i, (b,), self.n)
        return None if out is None else out[0]

    def e(self, i, b):
        out = tableau_e(i, (b,), self.n)
        return None if out is None else out[0]

    def phi(self, i, b):
        return tableau_counts(i, (b,), self.n)[0]

    def eps(self, i, b):
        return tableau_counts(i, (b,), self.n)[1]

    def weight(self, b) -> Weight:
        return content_weight((b,), self.n)

    def label(self, b) -> str:
        return "".join(str(x) if x > 0 else f"{-x}̄" for x in b)

    def to_jsonable(self, b):
        return list(b)


class SymplecticTableauCrystal(engine.Crystal):
    """B(lambda) on type C tableaux of a fixed column-height profile."""

    def __init__(self, n: int, heights):
        self.n = n
        self.heights = tuple(heights)
        self.datum = FiniteTypeC(n)
        self.hw = tuple(tuple(range(1, h + 1)) for h in self.heights)

    def f(self, i, b):
        return tableau_f(i, b, self.n)

    def e(self, i, b):
        return tableau_e(i, b, self.n)

    def phi(self, i, b):
        return tableau_counts(i, b, self.n)[0]

    def eps(self, i, b):
        return tableau_counts(i, b, self.n)[1]

    def weight(self, b) -> Weight:
        return content_weight(b, self.n)

    def column_crystals(self) -> list[SymplecticColumnCrystal]:
        return [SymplecticColumnCrystal(self.n, h) for h in self.heights]

    def label(self, b) -> str:
        return "/".join("".join(str(x) if x > 0 else f"{-x}̄" for x in col)
                        for col in b)

    def to_jsonable(self, b):
        return [list(col) for col in b]


# -- Keys and Bruhat ----------------------------------------------------------------

def _pair_r(n: int):
    def provider(left_col, right_col, pair):
        lc = SymplecticColumnCrystal(n, len(pair[0]))
        rc = SymplecticColumnCrystal(n, len(pair[1]))
        return engine.rmatrix_path_transport(lc, lc.hw, rc, rc.hw, pair)
    return provider


def key_right(tableau: Tableau, n: int) -> Tableau:
    """Right Key: expose each factor on the right, then take its column rC."""
    provider = _pair_r(n)
    l = len(tableau)
    out = []
    for k in range(l):
        cols = list(tableau)
        for j in range(k, l - 1):
            cols[j], cols[j + 1] = provider(None, None, (cols[j], cols[j + 1]))
        out.append(split_column(cols[l - 1], n)[1])
    return tuple(out)


def key_left(tableau: Tableau, n: int) -> Tableau:
    provider = _pair_r(n)
    l = len(tableau)
    out = []
    for k in range(l):
        cols = list(tableau)
        for j in range(k, 0, -1):
            cols[j - 1], cols[j] = provider(None, None, (cols[j - 1], cols[j]))
        out.append(split_column(cols[0], n)[0])
    return tuple(out)


def orbit_test(tableau: Tableau, n: int) -> bool:
    """Nested pair-free columns characterize the orbit vertices."""
    for col in tableau:
        if any(-x in col for x in col):
            return False
    return all(set(tableau[k + 1]) <= set(tableau[k])
               for k in range(len(tableau) - 1))


def tableau_bruhat(t1: Tableau, t2: Tableau, n: int) -> bool:
    """Juxtaposition criterion: C_k C'_k semistandard for every k."""
    if tuple(map(len, t1)) != tuple(map(len, t2)):
        raise ValueError("shapes differ")
    return all(letter_key(a, n) <= letter_key(b, n)
               for c1, c2 in zip(t1, t2) for a, b in zip(c1, c2))


def pretty(tableau: Tableau, n: int) -> str:
    height = len(tableau[0]) if tableau else 0
    rows = []
    for r in range(height):
        cells = [str(c[r]) if c[r] > 0 else f"{-c[r]}̄"
                 for c in tableau if len(c) > r]
        rows.append(" ".join(cells))
    return "\n".join(rows)
