"""Partitions, beta numbers, abaci and multisymbols.

A symbol stores a charge and a partition; the bead set it represents is the
cofinite set of shifted beta numbers ``{lambda_u - u + 1 + s : u >= 1}``.
Every position query widens lazily: all positions at or below
``charge - len(parts)`` are beads, everything above the largest beta is
empty, and the finite stretch in between is explicit.
"""

from __future__ import annotations

from dataclasses import dataclass

Partition = tuple[int, ...]


def as_partition(seq) -> Partition:
    parts = tuple(int(p) for p in seq if int(p) != 0)
    if any(p < 0 for p in parts):
        raise ValueError("negative part in partition")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {seq!r}")
    return parts


def rank(parts: Partition) -> int:
    return sum(parts)


def transpose(parts: Partition) -> Partition:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= c) for c in range(1, parts[0] + 1))


def hook_lengths(parts: Partition) -> list[int]:
    cols = transpose(parts)
    out = []
    for u, lam_u in enumerate(parts, start=1):
        for v in range(1, lam_u + 1):
            out.append(lam_u - v + cols[v - 1] - u + 1)
    return out


def contains_diagram(inner: Partition, outer: Partition) -> bool:
    """Young diagram inclusion."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def multiplicities_below(parts: Partition, bound: int) -> bool:
    """No part repeated ``bound`` times or more (e-regularity with bound=e)."""
    run = 0
    prev = None
    for p in parts:
        run = run + 1 if p == prev else 1
        prev = p
        if run >= bound:
            return False
    return True


@dataclass(frozen=True)
class Symbol:
    """Charged beta set of a partition (one abacus runner)."""

    charge: int
    parts: Partition

    @staticmethod
    def of(charge: int, parts) -> "Symbol":
        return Symbol(charge, as_partition(parts))

    @property
    def solid_below(self) -> int:
        """Largest position below which every position is a bead."""
        return self.charge - len(self.parts)

    def beta(self, u: int) -> int:
        """u-th beta number (1-indexed, descending)."""
        lam = self.parts[u - 1] if u <= len(self.parts) else 0
        return lam - u + 1 + self.charge

    def finite_betas(self) -> list[int]:
        return [self.beta(u) for u in range(1, len(self.parts) + 1)]

    def max_bead(self) -> int:
        return self.beta(1) if self.parts else self.charge

    def contains(self, x: int) -> bool:
        if x <= self.solid_below:
            return True
        return x in self._finite_set()

    def _finite_set(self) -> frozenset:
        return frozenset(self.finite_betas())

    def beads_in(self, lo: int, hi: int) -> list[int]:
        return [x for x in range(lo, hi + 1) if self.contains(x)]

    def row_of_bead(self, x: int) -> int:
        """Row index u with beta_u = x; raises when x is not a bead."""
        if x > self.solid_below:
            for u, b in enumerate(self.finite_betas(), start=1):
                if b == x:
                    return u
            raise ValueError(f"{x} is not a bead")
        return self.charge + 1 - x

    def shift_bead_up(self, x: int) -> "Symbol":
        """Move the bead at x to x+1 (adds one box)."""
        if not self.contains(x) or self.contains(x + 1):
            raise ValueError(f"cannot move bead {x} up")
        u = self.row_of_bead(x)
        parts = list(self.parts) + [0] * (u - len(self.parts))
        parts[u - 1] += 1
        return Symbol(self.charge, as_partition(parts))

    def shift_bead_down(self, x: int) -> "Symbol":
        """Move the bead at x to x-1 (removes one box)."""
        if not self.contains(x) or self.contains(x - 1):
            raise ValueError(f"cannot move bead {x} down")
        u = self.row_of_bead(x)
        parts = list(self.parts)
        parts[u - 1] -= 1
        return Symbol(self.charge, as_partition(parts))

    def replace_bead(self, p: int, q: int) -> "Symbol":
        """Symbol of the bead set with p removed and q added (both above solid)."""
        betas = self.finite_betas()
        if p not in betas or q in betas or q <= self.solid_below:
            raise ValueError("invalid bead replacement")
        betas.remove(p)
        betas.append(q)
        betas.sort(reverse=True)
        parts = []
        for u, b in enumerate(betas, start=1):
            lam = b + u - 1 - self.charge
            if lam <= 0:
                break
            parts.append(lam)
        return Symbol(self.charge, as_partition(parts))

    def events(self) -> list[tuple[int, str]]:
        """Addable/removable bead moves as (position, "A"|"R"), ascending.

        An addable node is a bead with empty space at its right; a removable
        node is a bead with empty space at its left.  The position recorded
        is the bead position itself.
        """
        out = []
        for x in range(self.solid_below, self.max_bead() + 1):
            if not self.contains(x):
                continue
            if not self.contains(x + 1):
                out.append((x, "A"))
            if not self.contains(x - 1):
                out.append((x, "R"))
        return out

    def included_in(self, other: "Symbol") -> bool:
        """Bead-set inclusion of runners."""
        if self.solid_below > other.solid_below:
            for x in range(other.solid_below + 1, self.solid_below + 1):
                if not other.contains(x):
                    return False
        for x in self.finite_betas():
            if not other.contains(x):
                return False
        return True

    def translate(self, k: int) -> "Symbol":
        return Symbol(self.charge + k, self.parts)

    def transpose(self) -> "Symbol":
        """The runner of the transposed partition at the negated charge."""
        return Symbol(-self.charge, transpose(self.parts))

    def mirror_positions(self) -> "Symbol":
        """Color-swapped mirror around the origin marker: beads {1-x : x empty}.

        Equals ``self.transpose()``; kept separate so tests can compare the
        two constructions.
        """
        hi = self.max_bead() + 1
        lo = self.solid_below - 1
        empties = [x for x in range(lo, hi + 2) if not self.contains(x)]
        mirrored = sorted((1 - x for x in empties), reverse=True)
        # mirrored positions are the betas of some symbol at charge -charge
        parts = []
        for u, b in enumerate(mirrored, start=1):
            lam = b - 1 + u - (-self.charge)
            if lam <= 0:
                break
            parts.append(lam)
        return Symbol(-self.charge, as_partition(parts))

    def ascii_art(self, lo: int | None = None, hi: int | None = None) -> str:
        lo = self.solid_below - 2 if lo is None else lo
        hi = max(self.max_bead() + 2, 2) if hi is None else hi
        cells = []
        for x in range(lo, hi + 1):
            cells.append("●" if self.contains(x) else "○")
            if x == 0:
                cells.append("¦")
        return "".join(cells)

    def to_jsonable(self):
        lo = self.solid_below
        hi = self.max_bead()
        return {
            "charge": self.charge,
            "window": [lo, hi],
            "beads": self.beads_in(lo, hi),
        }

    def __str__(self) -> str:
        shown = self.finite_betas()[::-1]
        return f"S_{self.charge}(... {' '.join(map(str, shown))})"


@dataclass(frozen=True)
class MultiSymbol:
    """Multicharge plus one runner per component (component 1 first)."""

    charges: tuple[int, ...]
    parts: tuple[Partition, ...]

    @staticmethod
    def of(charges, parts) -> "MultiSymbol":
        charges = tuple(int(c) for c in charges)
        parts = tuple(as_partition(p) for p in parts)
        if len(charges) != len(parts) or not charges:
            raise ValueError("need one charge per component")
        return MultiSymbol(charges, parts)

    @property
    def level(self) -> int:
        return len(self.charges)

    def runner(self, k: int) -> Symbol:
        """Runner of component k (1-indexed)."""
        return Symbol(self.charges[k - 1], self.parts[k - 1])

    def rank(self) -> int:
        return sum(rank(p) for p in self.parts)

    def replace(self, k: int, sym: Symbol) -> "MultiSymbol":
        parts = list(self.parts)
        parts[k - 1] = sym.parts
        return MultiSymbol(self.charges, tuple(parts))

    def ascii_art(self) -> str:
        lo = min(self.runner(k).solid_below for k in range(1, self.level + 1)) - 2
        hi = max(max(self.runner(k).max_bead() for k in range(1, self.level + 1)) + 2, 2)
        rows = []
        for k in range(self.level, 0, -1):  # component l printed on top
            rows.append(self.runner(k).ascii_art(lo, hi))
        return "\n".join(rows)

    def to_jsonable(self):
        return {
            "charges": list(self.charges),
            "partitions": [list(p) for p in self.parts],
            "runners": [self.runner(k).to_jsonable()
                        for k in range(1, self.level + 1)],
        }

    def __str__(self) -> str:
        body = ", ".join("." .join(map(str, p)) if p else "0" for p in self.parts)
        return f"({body}|{','.join(map(str, self.charges))})"
