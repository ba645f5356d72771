"""Abacus displays: beta-numbers, bead moves, cores, quotients and pyramids.

Positions are 1-based, numbered row-major: position m sits on runner
``(m-1) % p + 1`` in row ``(m-1) // p + 1``.  A display with r beads encodes
the partition with beta-numbers ``beta_i = la_i + r - i + 1``, so the minimum
beta-number is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .partitions import (
    Node,
    Partition,
    is_p_regular,
    is_p_restricted,
    partition,
)


def default_bead_count(la: Partition, p: int) -> int:
    """Least multiple of p that accommodates the parts of ``la`` (at least p)."""
    return p * max(1, -(-len(la) // p))


def _decode_betas(betas, r: int) -> Partition:
    ordered = sorted(betas, reverse=True)
    return partition(b - r + i for i, b in enumerate(ordered))


@dataclass(frozen=True)
class AbacusDisplay:
    """An immutable set of r occupied positions on p runners."""

    p: int
    r: int
    occupied: frozenset[int]

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("p must be at least 2")
        if len(self.occupied) != self.r:
            raise ValueError(f"expected {self.r} beads, got {len(self.occupied)}")
        if self.occupied and min(self.occupied) < 1:
            raise ValueError("positions are 1-based")

    @classmethod
    def from_partition(cls, la: Partition, p: int, r: int) -> "AbacusDisplay":
        if r < len(la):
            raise ValueError(f"need at least {len(la)} beads for {la}, got {r}")
        padded = la + (0,) * (r - len(la))
        return cls(p, r, frozenset(padded[i - 1] + r - i + 1 for i in range(1, r + 1)))

    def to_partition(self) -> Partition:
        return _decode_betas(self.occupied, self.r)

    def runner(self, pos: int) -> int:
        return (pos - 1) % self.p + 1

    def row(self, pos: int) -> int:
        return (pos - 1) // self.p + 1

    def beads_on_runner(self, i: int) -> list[int]:
        return sorted(m for m in self.occupied if self.runner(m) == i)

    # -- bead moves (each returns a new display) -----------------------------

    def _move(self, src: int, dst: int) -> "AbacusDisplay":
        if src not in self.occupied:
            raise ValueError(f"no bead at position {src}")
        if dst < 1 or dst in self.occupied:
            raise ValueError(f"cannot move bead to position {dst}")
        return AbacusDisplay(self.p, self.r, self.occupied - {src} | {dst})

    def push_left(self, pos: int) -> "AbacusDisplay":
        """Move a bead to the empty position before it (removes a node)."""
        return self._move(pos, pos - 1)

    def push_right(self, pos: int) -> "AbacusDisplay":
        """Move a bead to the empty position after it (adds a node)."""
        return self._move(pos, pos + 1)

    def push_up(self, pos: int) -> "AbacusDisplay":
        """Move a bead one row up its runner (removes a rim p-hook)."""
        return self._move(pos, pos - self.p)

    def push_down(self, pos: int) -> "AbacusDisplay":
        """Move a bead one row down its runner (adds a rim p-hook)."""
        return self._move(pos, pos + self.p)

    # -- bead classification --------------------------------------------------

    def removable_beads(self) -> list[int]:
        return sorted(m for m in self.occupied if m > 1 and m - 1 not in self.occupied)

    def addable_beads(self) -> list[int]:
        return sorted(m for m in self.occupied if m + 1 not in self.occupied)

    def rim_hook_beads(self) -> list[int]:
        """Beads movable one row up; one per removable rim p-hook."""
        return sorted(m for m in self.occupied
                      if m - self.p >= 1 and m - self.p not in self.occupied)

    def _count(self, runner: int, row_lo: int, row_hi: int) -> int:
        if row_hi < row_lo:
            return 0
        return sum(1 for row in range(row_lo, row_hi + 1)
                   if (row - 1) * self.p + runner in self.occupied)

    def normal_beads(self) -> list[int]:
        """Removable beads passing the runner-count criterion.

        A removable bead in row t of runner i >= 2 is normal when, for every
        j >= 1, runner i carries at least as many beads in rows t+1..t+j as
        runner i-1 does.  On runner 1 the comparison is against runner p with
        the window shifted up one row (rows t..t+j-1).
        """
        if not self.occupied:
            return []
        max_row = self.row(max(self.occupied))
        normals = []
        for m in self.removable_beads():
            i, t = self.runner(m), self.row(m)
            if i >= 2:
                ok = all(self._count(i, t + 1, t + j) >= self._count(i - 1, t + 1, t + j)
                         for j in range(1, max_row - t + 2))
            else:
                ok = all(self._count(1, t + 1, t + j) >= self._count(self.p, t, t + j - 1)
                         for j in range(1, max_row - t + 3))
            if ok:
                normals.append(m)
        return normals

    def bead_node(self, pos: int) -> Node:
        """The node of the decoded partition carried by the bead at ``pos``."""
        if pos not in self.occupied:
            raise ValueError(f"no bead at position {pos}")
        i = sorted(self.occupied, reverse=True).index(pos) + 1
        return (i, pos - self.r + i - 1)

    # -- rendering -------------------------------------------------------------

    def render(self, labels=None) -> str:
        """Text grid in the style of an abacus figure: runner header, then rows."""
        labels = labels or list(range(1, self.p + 1))
        rows = self.row(max(self.occupied)) + 1 if self.occupied else 2
        lines = [" ".join(str(lab) for lab in labels), "-" * (2 * self.p - 1)]
        for t in range(1, rows + 1):
            cells = ["●" if (t - 1) * self.p + j in self.occupied else "○"
                     for j in range(1, self.p + 1)]
            lines.append(" ".join(cells))
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {"p": self.p, "r": self.r, "occupied": sorted(self.occupied)}


@dataclass(frozen=True)
class PQuotient:
    """A p-tuple of partitions recording how far each runner's beads sit below their rest position."""

    components: tuple[Partition, ...]
    numbering: str  # "left-to-right" or "reordered"

    def total(self) -> int:
        return sum(sum(c) for c in self.components)


@dataclass(frozen=True)
class Pyramid:
    """First-empty positions of the pushed-up display, with the runner relabelling.

    ``q`` is ascending; ``sigma[j-1]`` is the left-to-right runner carrying
    reordered label j.
    """

    p: int
    q: tuple[int, ...]
    sigma: tuple[int, ...]

    def entry(self, k: int, ell: int) -> int:
        if not 1 <= k < ell <= self.p:
            raise ValueError(f"need 1 <= k < ell <= p, got ({k}, {ell})")
        return (self.q[ell - 1] - self.q[k - 1]) // self.p

    def nonzero_entries(self) -> dict[tuple[int, int], int]:
        out = {}
        for k in range(1, self.p):
            for ell in range(k + 1, self.p + 1):
                b = self.entry(k, ell)
                if b:
                    out[(k, ell)] = b
        return out

    def runner_labels(self) -> tuple[int, ...]:
        """Label shown above each left-to-right runner after reordering."""
        labels = [0] * self.p
        for j, runner in enumerate(self.sigma, start=1):
            labels[runner - 1] = j
        return tuple(labels)


def _runner_components(display: AbacusDisplay) -> tuple[Partition, ...]:
    """Bead weights per runner, bottom bead first (no constraint on the bead count)."""
    comps = []
    for j in range(1, display.p + 1):
        rows = [display.row(m) for m in display.beads_on_runner(j)]
        weights = [row - 1 - s for s, row in enumerate(rows)]
        comps.append(partition(sorted(weights, reverse=True)))
    return tuple(comps)


def push_all_up(display: AbacusDisplay) -> AbacusDisplay:
    """The display of the p-core: every runner's beads packed into the top rows."""
    occupied = set()
    for j in range(1, display.p + 1):
        count = len(display.beads_on_runner(j))
        occupied.update((t - 1) * display.p + j for t in range(1, count + 1))
    return AbacusDisplay(display.p, display.r, frozenset(occupied))


def p_core(la: Partition, p: int) -> Partition:
    display = AbacusDisplay.from_partition(la, p, default_bead_count(la, p))
    return push_all_up(display).to_partition()


def p_weight(la: Partition, p: int) -> int:
    return (sum(la) - sum(p_core(la, p))) // p


def rim_hook_removals(la: Partition, p: int) -> list[tuple[Partition, int]]:
    """One (smaller partition, leg length) pair per removable rim p-hook.

    Entries are ordered by the hook's hand, topmost hand first.  The leg
    length is the number of beta-numbers strictly between beta - p and beta.
    """
    r = default_bead_count(la, p)
    display = AbacusDisplay.from_partition(la, p, r)
    out = []
    for m in sorted(display.rim_hook_beads(), reverse=True):
        leg = sum(1 for b in display.occupied if m - p < b < m)
        out.append((display.push_up(m).to_partition(), leg))
    return out


def p_quotient(la: Partition, p: int, r: int | None = None) -> PQuotient:
    """Left-to-right p-quotient; the bead count must be a multiple of p."""
    if r is None:
        r = default_bead_count(la, p)
    if r % p != 0:
        raise ValueError(f"bead count {r} is not a multiple of {p}")
    display = AbacusDisplay.from_partition(la, p, r)
    return PQuotient(_runner_components(display), "left-to-right")


def reordered_quotient(la: Partition, p: int, r: int | None = None) -> tuple[PQuotient, Pyramid]:
    """The quotient in the non left-to-right numbering, with its pyramid.

    The runners are relabelled so that the first empty positions of the
    pushed-up display come in ascending order; component j of the reordered
    quotient is the left-to-right component of the runner with label j.
    """
    if r is None:
        r = default_bead_count(la, p)
    if r % p != 0:
        raise ValueError(f"bead count {r} is not a multiple of {p}")
    display = AbacusDisplay.from_partition(la, p, r)
    core_display = push_all_up(display)
    first_empty = []
    for j in range(1, p + 1):
        count = len(core_display.beads_on_runner(j))
        first_empty.append((count * p + j, j))
    first_empty.sort()
    q = tuple(pos for pos, _ in first_empty)
    sigma = tuple(runner for _, runner in first_empty)
    ltr = _runner_components(display)
    reordered = PQuotient(tuple(ltr[runner - 1] for runner in sigma), "reordered")
    return reordered, Pyramid(p, q, sigma)


@cache
def is_jm_fayers(la: Partition, p: int) -> bool:
    """Quotient/pyramid irreducibility test on the reordered display.

    With reordered quotient [mu_1, ..., mu_p] and pyramid B, the partition
    passes iff the interior components vanish, mu_1 is restricted and mu_p
    regular (both recursively passing), and the first row of mu_k plus the
    first column of mu_ell never exceeds B(k, ell) + 1.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError("the test needs an odd prime p")
    if p_weight(la, p) == 0:
        return True
    quotient, pyramid = reordered_quotient(la, p)
    mu = quotient.components
    if any(mu[i] for i in range(1, p - 1)):
        return False
    if not (is_p_restricted(mu[0], p) and is_jm_fayers(mu[0], p)):
        return False
    if not (is_p_regular(mu[-1], p) and is_jm_fayers(mu[-1], p)):
        return False
    for k in range(1, p):
        for ell in range(k + 1, p + 1):
            first_row = mu[k - 1][0] if mu[k - 1] else 0
            first_col = len(mu[ell - 1])
            if first_row + first_col > pyramid.entry(k, ell) + 1:
                return False
    return True
