"""Type A_n realization: columns, semistandard tableaux, jeu de taquin
R-matrices and Lascoux-Schutzenberger Keys.

A tableau is a tuple of columns, leftmost first, each column a strictly
increasing tuple over {1, ..., n+1}.  Crystal operators use the signature
rule on the column reading word (columns right to left, each top to bottom),
which is the letterwise expansion of the tensor-product convention.
"""

from __future__ import annotations

from . import engine
from .cartan import FiniteTypeA, Weight

Column = tuple[int, ...]
Tableau = tuple[Column, ...]


def as_column(seq, n: int) -> Column:
    col = tuple(int(x) for x in seq)
    if any(not 1 <= x <= n + 1 for x in col):
        raise ValueError(f"letters must lie in 1..{n + 1}")
    if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
        raise ValueError("column entries must strictly increase")
    return col


def as_tableau(columns, n: int) -> Tableau:
    cols = tuple(as_column(c, n) for c in columns)
    if any(len(cols[i]) < len(cols[i + 1]) for i in range(len(cols) - 1)):
        raise ValueError("column heights must weakly decrease")
    return cols


def rows_of(tableau: Tableau) -> list[list[int]]:
    height = len(tableau[0]) if tableau else 0
    return [[col[r] for col in tableau if len(col) > r] for r in range(height)]


def from_rows(rows, n: int) -> Tableau:
    widths = [len(r) for r in rows]
    if any(widths[i] < widths[i + 1] for i in range(len(widths) - 1)):
        raise ValueError("row lengths must weakly decrease")
    ncols = widths[0] if widths else 0
    cols = [[row[k] for row in rows if len(row) > k] for k in range(ncols)]
    return as_tableau(cols, n)


def is_semistandard(tableau: Tableau) -> bool:
    for k in range(len(tableau) - 1):
        left, right = tableau[k], tableau[k + 1]
        if len(left) < len(right):
            return False
        if any(left[r] > right[r] for r in range(len(right))):
            return False
    return True


def highest_tableau(heights, n: int) -> Tableau:
    return as_tableau([tuple(range(1, h + 1)) for h in heights], n)


def shape(tableau: Tableau) -> tuple[int, ...]:
    """Row lengths of the underlying diagram."""
    return tuple(len(r) for r in rows_of(tableau))


# -- signature rule ----------------------------------------------------------

def _reading_positions(tableau: Tableau):
    """(column, row) pairs in reading order: columns right to left, top down."""
    for k in range(len(tableau) - 1, -1, -1):
        for r in range(len(tableau[k])):
            yield k, r


def _signature_act(signed, which: str):
    """Bracket-match +1/-1 signs; return the acting position.

    ``signed`` lists (position, sign) in reading order.  For ``f`` the result
    is the leftmost unmatched +, for ``e`` the rightmost unmatched -.
    """
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
    return len(plus_stack), len(minus)  # (phi, eps)


def _signs(tableau: Tableau, i: int):
    for k, r in _reading_positions(tableau):
        x = tableau[k][r]
        if x == i:
            yield (k, r), 1
        elif x == i + 1:
            yield (k, r), -1


def _replace(tableau: Tableau, k: int, r: int, value: int) -> Tableau:
    col = tableau[k][:r] + (value,) + tableau[k][r + 1:]
    return tableau[:k] + (col,) + tableau[k + 1:]


def tableau_f(i: int, tableau: Tableau) -> Tableau | None:
    pos = _signature_act(_signs(tableau, i), "f")
    if pos is None:
        return None
    k, r = pos
    return _replace(tableau, k, r, i + 1)


def tableau_e(i: int, tableau: Tableau) -> Tableau | None:
    pos = _signature_act(_signs(tableau, i), "e")
    if pos is None:
        return None
    k, r = pos
    return _replace(tableau, k, r, i)


def tableau_counts(i: int, tableau: Tableau) -> tuple[int, int]:
    """(phi, eps) for color i."""
    return _signature_act(_signs(tableau, i), "counts")


def content_weight(tableau: Tableau, n: int) -> Weight:
    counts: dict[int, int] = {}
    for col in tableau:
        for x in col:
            counts[x] = counts.get(x, 0) + 1
    pairs = {i: counts.get(i, 0) - counts.get(i + 1, 0) for i in range(1, n + 1)}
    return Weight.of(pairs)


# -- crystal objects ----------------------------------------------------------

class ColumnCrystal(engine.Crystal):
    """B(omega_h) realized on columns of height h."""

    def __init__(self, n: int, height: int):
        if not 1 <= height <= n + 1:
            raise ValueError("bad column height")
        self.n = n
        self.height = height
        self.datum = FiniteTypeA(n)
        self.hw = tuple(range(1, height + 1))

    def f(self, i, b):
        out = tableau_f(i, (b,))
        return None if out is None else out[0]

    def e(self, i, b):
        out = tableau_e(i, (b,))
        return None if out is None else out[0]

    def phi(self, i, b):
        return 1 if (i in b and i + 1 not in b) else 0

    def eps(self, i, b):
        return 1 if (i + 1 in b and i not in b) else 0

    def weight(self, b) -> Weight:
        return content_weight((b,), self.n)

    def label(self, b) -> str:
        return "".join(map(str, b))

    def to_jsonable(self, b):
        return list(b)


class TableauCrystal(engine.Crystal):
    """B(lambda) on semistandard tableaux of a fixed column-height profile."""

    def __init__(self, n: int, heights):
        self.n = n
        self.heights = tuple(heights)
        self.datum = FiniteTypeA(n)
        self.hw = highest_tableau(self.heights, n)

    def f(self, i, b):
        return tableau_f(i, b)

    def e(self, i, b):
        return tableau_e(i, b)

    def phi(self, i, b):
        return tableau_counts(i, b)[0]

    def eps(self, i, b):
        return tableau_counts(i, b)[1]

    def weight(self, b) -> Weight:
        return content_weight(b, self.n)

    def column_crystals(self) -> list[ColumnCrystal]:
        return [ColumnCrystal(self.n, h) for h in self.heights]

    def label(self, b) -> str:
        return "/".join("".join(map(str, col)) for col in b)

    def to_jsonable(self, b):
        return rows_of(b)


# -- jeu de taquin R-matrix ----------------------------------------------------

def _slide_once(col1: list, col2: list) -> None:
    """Move one cell from the taller column into the shorter one, in place."""
    if len(col1) > len(col2):
        tall, short, short_is_right = col1, col2, True
    else:
        tall, short, short_is_right = col2, col1, False
    hole = len(short)
    pushed: list = short + [None]
    while True:
        above = pushed[hole - 1] if hole >= 1 else None
        side = tall[hole]
        if above is not None and above >= side:
            pushed[hole] = above
            pushed[hole - 1] = None
            hole -= 1
        else:
            pushed[hole] = side
            del tall[hole]
            break
    short[:] = pushed
    if short_is_right:
        col1[:], col2[:] = tall, short
    else:
        col1[:], col2[:] = short, tall


def jdt_rmatrix(left: Column, right: Column) -> tuple[Column, Column]:
    """Two-column combinatorial R-matrix by jeu de taquin slides.

    Exchanges the column heights; on the principal component it agrees with
    path transport (checked by the test suite).
    """
    col1, col2 = list(left), list(right)
    target = (len(right), len(left))
    while (len(col1), len(col2)) != target:
        _slide_once(col1, col2)
    return tuple(col1), tuple(col2)


# -- Keys and Bruhat ------------------------------------------------------------

def ls_key_right(tableau: Tableau) -> Tableau:
    """Right Key: carry each factor to the last slot by jeu de taquin."""
    l = len(tableau)
    out = []
    for k in range(l):
        cols = list(tableau)
        for j in range(k, l - 1):
            cols[j], cols[j + 1] = jdt_rmatrix(cols[j], cols[j + 1])
        out.append(cols[l - 1])
    return tuple(out)


def ls_key_left(tableau: Tableau) -> Tableau:
    """Left Key: carry each factor to the first slot by jeu de taquin."""
    l = len(tableau)
    out = []
    for k in range(l):
        cols = list(tableau)
        for j in range(k, 0, -1):
            cols[j - 1], cols[j] = jdt_rmatrix(cols[j - 1], cols[j])
        out.append(cols[0])
    return tuple(out)


def is_key_tableau(tableau: Tableau) -> bool:
    """Each column contained (as a set) in every taller-or-equal column."""
    return all(set(tableau[k + 1]) <= set(tableau[k])
               for k in range(len(tableau) - 1))


def orbit_test(tableau: Tableau) -> bool:
    """Orbit vertices are the tableaux with nested columns."""
    return is_key_tableau(tableau)


def tableau_bruhat(t1: Tableau, t2: Tableau) -> bool:
    """Bruhat comparison of two orbit tableaux of the same shape.

    True iff every juxtaposition C_k C'_k is semistandard, i.e. entrywise
    C_k <= C'_k.
    """
    if tuple(map(len, t1)) != tuple(map(len, t2)):
        raise ValueError("shapes differ")
    return all(a <= b for c1, c2 in zip(t1, t2) for a, b in zip(c1, c2))


def pretty(tableau: Tableau) -> str:
    return "\n".join(" ".join(f"{x}" for x in row) for row in rows_of(tableau))
