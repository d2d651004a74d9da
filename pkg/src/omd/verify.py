"""Construction-agnostic checking of designs, transversals, and holes.

Everything here recomputes from raw cell contents: coverage accounting,
host edge enumeration, and cell counts share no logic with the
constructors, so agreement between the two is evidence rather than
tautology. Reports carry one entry per condition with the first
counterexample found.

brute_force_exists settles existence for small parameters by exhaustive
backtracking and is the independent ground truth the constructors are
compared against in the tests.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from . import core
from .core import Block, DesignArray, Hole, Transversal


@dataclass(frozen=True)
class Check:
    """Outcome of a single verification condition."""

    name: str
    passed: bool
    detail: str | None = None


@dataclass(frozen=True)
class VerificationReport:
    """Per-condition outcomes plus derived cell counts."""

    passed: bool
    checks: tuple[Check, ...]
    total_blocks: int = 0
    row_blocks: tuple[int, ...] = ()
    col_blocks: tuple[int, ...] = ()

    def failure(self) -> str | None:
        """First failing check as 'name: detail', or None if all passed."""
        for check in self.checks:
            if not check.passed:
                detail = check.detail or "failed"
                return f"{check.name}: {detail}"
        return None

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
            "total_blocks": self.total_blocks,
            "row_blocks": list(self.row_blocks),
            "col_blocks": list(self.col_blocks),
        }


def expected_side(host: core.HostGraph) -> int | None:
    """Side a design over this host must have, or None if none can exist.

    Each block uses exactly one edge at every point it covers and each row
    covers every point once, so the side equals the replication number,
    which for a regular host is its degree. Irregular hosts admit no
    design at all.
    """
    if isinstance(host, core.Complete):
        return host.n - 1
    if isinstance(host, core.CompleteBipartite):
        return host.a if host.a == host.b else None
    if isinstance(host, core.LexMatching):
        return host.s
    if isinstance(host, core.LexMatchingComplete):
        return 2 * host.s - 1
    if isinstance(host, core.CompleteMultipartite):
        sizes = set(host.parts)
        if len(sizes) != 1:
            return None
        return (len(host.parts) - 1) * host.parts[0]
    raise TypeError(f"unknown host graph {host!r}")


def verify(arr: DesignArray) -> VerificationReport:
    """Check the three design conditions against the host graph.

    Conditions: every cell empty or a k-matching, every row and column a
    resolution class, every host edge covered exactly once and nothing
    else. All checks run even after a failure so the report is complete.
    """
    n, side, k = arr.n, arr.side, arr.k
    checks = []

    want_side = expected_side(arr.host)
    if arr.host.vertex_count() != n:
        shape = Check(
            "host-shape",
            False,
            f"array says n={n} but host has {arr.host.vertex_count()} points",
        )
    elif want_side is None:
        shape = Check("host-shape", False, "irregular host admits no design")
    elif side != want_side:
        shape = Check(
            "host-shape", False, f"side is {side}, host requires {want_side}"
        )
    else:
        shape = Check("host-shape", True)
    checks.append(shape)

    block_detail = None
    for (r, c), block in arr.occupied():
        endpoints = [p for e in block.edges for p in e]
        if len(block.edges) != k:
            block_detail = f"cell ({r}, {c}) holds {len(block.edges)} edges, expected {k}"
        elif len(set(endpoints)) != 2 * k:
            block_detail = f"cell ({r}, {c}) repeats an endpoint"
        elif any(p < 0 or p >= n for p in endpoints):
            block_detail = f"cell ({r}, {c}) uses a point outside 0..{n - 1}"
        elif any(u >= v for u, v in block.edges):
            block_detail = f"cell ({r}, {c}) has a non-canonical edge"
        if block_detail:
            break
    checks.append(Check("block-shape", block_detail is None, block_detail))

    row_cover = [Counter() for _ in range(side)]
    col_cover = [Counter() for _ in range(side)]
    row_blocks = [0] * side
    col_blocks = [0] * side
    for (r, c), block in arr.cells.items():
        row_blocks[r] += 1
        col_blocks[c] += 1
        for u, v in block.edges:
            row_cover[r][u] += 1
            row_cover[r][v] += 1
            col_cover[c][u] += 1
            col_cover[c][v] += 1

    def resolution_detail(cover, label):
        for i in range(side):
            for p in range(n):
                count = cover[i][p]
                if count != 1:
                    return f"{label} {i} covers point {p} {count} times"
        return None

    row_detail = resolution_detail(row_cover, "row")
    checks.append(Check("row-resolution", row_detail is None, row_detail))
    col_detail = resolution_detail(col_cover, "column")
    checks.append(Check("column-resolution", col_detail is None, col_detail))

    host_edges = set(arr.host.edges())
    placed = Counter()
    pair_detail = None
    for (r, c), block in arr.occupied():
        for edge in block.edges:
            placed[edge] += 1
    for edge in sorted(placed):
        if edge not in host_edges:
            pair_detail = f"pair {edge} is not a host edge"
            break
        if placed[edge] > 1:
            pair_detail = f"pair {edge} covered {placed[edge]} times"
            break
    if pair_detail is None:
        for edge in sorted(host_edges):
            if edge not in placed:
                pair_detail = f"host edge {edge} is uncovered"
                break
    checks.append(Check("pair-coverage", pair_detail is None, pair_detail))

    return VerificationReport(
        passed=all(c.passed for c in checks),
        checks=tuple(checks),
        total_blocks=len(arr.cells),
        row_blocks=tuple(row_blocks),
        col_blocks=tuple(col_blocks),
    )


def verify_transversal(arr: DesignArray, transversal: Transversal) -> VerificationReport:
    """Check one-cell-per-row/column and exact point coverage."""
    checks = []
    cells = transversal.cells

    rows = [r for r, _ in cells]
    cols = [c for _, c in cells]
    perm_detail = None
    if sorted(rows) != list(range(arr.side)):
        perm_detail = f"rows {sorted(rows)} are not a permutation of 0..{arr.side - 1}"
    elif sorted(cols) != list(range(arr.side)):
        perm_detail = f"columns {sorted(cols)} are not a permutation of 0..{arr.side - 1}"
    checks.append(Check("one-per-row-and-column", perm_detail is None, perm_detail))

    cover = Counter()
    chosen_blocks = 0
    for r, c in cells:
        block = arr.block_at(r, c)
        if block is None:
            continue
        chosen_blocks += 1
        for u, v in block.edges:
            cover[u] += 1
            cover[v] += 1
    cover_detail = None
    for p in range(arr.n):
        if cover[p] != 1:
            cover_detail = f"point {p} appears {cover[p]} times in the chosen cells"
            break
    checks.append(Check("exact-point-coverage", cover_detail is None, cover_detail))

    return VerificationReport(
        passed=all(c.passed for c in checks),
        checks=tuple(checks),
        total_blocks=chosen_blocks,
    )


def verify_hole(arr: DesignArray, hole: Hole) -> VerificationReport:
    """Check that every cell of rows x cols is inside the array and empty."""
    checks = []

    range_detail = None
    for label, indices in (("row", hole.rows), ("column", hole.cols)):
        for i in indices:
            if i < 0 or i >= arr.side:
                range_detail = f"hole {label} {i} outside side-{arr.side} array"
                break
        if range_detail:
            break
    checks.append(Check("indices-in-range", range_detail is None, range_detail))

    empty_detail = None
    if range_detail is None:
        for r in hole.rows:
            for c in hole.cols:
                if (r, c) in arr.cells:
                    empty_detail = f"cell ({r}, {c}) inside the hole holds a block"
                    break
            if empty_detail:
                break
    checks.append(Check("hole-cells-empty", empty_detail is None, empty_detail))

    return VerificationReport(
        passed=all(c.passed for c in checks),
        checks=tuple(checks),
    )


class Existence(enum.Enum):
    EXISTS = "exists"
    NOT_EXISTS = "not_exists"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class BruteForceResult:
    status: Existence
    design: DesignArray | None = None
    nodes: int = 0


class _BudgetExceeded(Exception):
    pass


def brute_force_exists(n: int, k: int, budget: int = 10_000_000) -> BruteForceResult:
    """Exhaustively decide whether any design of order n exists.

    Backtracking over a side n-1 array on the complete graph: repeatedly
    extend the emptiest incomplete row at its smallest uncovered point,
    trying every k-matching through that point and every feasible column.
    Working on the emptiest row spreads placements round-robin, which keeps
    the per-point structure coherent and finds witnesses orders of
    magnitude faster than completing one row at a time. The only shortcut
    is symmetry breaking: any design can be relabeled and column-permuted
    so that row 0 reads {0-1, 2-3, ...} | {2k..} | ... in the leftmost
    columns, so the whole first row is pinned to that form (just the first
    block when 2k does not divide n), which preserves the existence
    verdict.

    Returns EXISTS with a witness, NOT_EXISTS after exhausting the tree, or
    EXHAUSTED once budget nodes have been tried.
    """
    if n < 2 or k < 1:
        raise ValueError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    side = n - 1
    host = core.Complete(n)

    grid: dict[core.Cell, tuple] = {}
    row_pts = [0] * side
    col_pts = [0] * side
    full = (1 << n) - 1
    pair_used = set()
    nodes = 0

    def place(row, col, pairs, mask):
        grid[(row, col)] = pairs
        row_pts[row] |= mask
        col_pts[col] |= mask
        pair_used.update(pairs)

    def unplace(row, col, pairs, mask):
        del grid[(row, col)]
        row_pts[row] &= ~mask
        col_pts[col] &= ~mask
        pair_used.difference_update(pairs)

    if 2 * k <= n:
        pinned = n // (2 * k) if n % (2 * k) == 0 else 1
        for t in range(pinned):
            block = tuple(
                (2 * k * t + 2 * i, 2 * k * t + 2 * i + 1) for i in range(k)
            )
            mask = ((1 << (2 * k)) - 1) << (2 * k * t)
            place(0, t, block, mask)

    def blocks_through(lowest, avail):
        """All k-matchings on avail containing lowest, pair minima increasing."""
        found = []
        chosen = []

        def extend(from_points, last_min):
            if len(chosen) == k:
                found.append(tuple(chosen))
                return
            if len(chosen) == 0:
                first_options = [lowest]
            else:
                first_options = [p for p in from_points if p > last_min]
            for a in first_options:
                rest = [p for p in from_points if p != a]
                for b in rest:
                    if b < a:
                        continue
                    pair = (a, b)
                    if pair in pair_used:
                        continue
                    chosen.append(pair)
                    extend([p for p in rest if p != b], a)
                    chosen.pop()

        extend(sorted(avail), -1)
        return found

    def solve() -> bool:
        nonlocal nodes
        row = None
        best_filled = None
        for i in range(side):
            if row_pts[i] != full:
                filled = row_pts[i].bit_count()
                if best_filled is None or filled < best_filled:
                    row, best_filled = i, filled
        if row is None:
            return True
        missing = [p for p in range(n) if not (row_pts[row] >> p) & 1]
        # each placement covers exactly 2k of the row's missing points, so
        # a row whose deficit is not a multiple of 2k can never complete
        if len(missing) % (2 * k) != 0:
            return False
        lowest = missing[0]
        for pairs in blocks_through(lowest, missing):
            mask = 0
            for u, v in pairs:
                mask |= (1 << u) | (1 << v)
            for col in range(side):
                if (row, col) in grid or col_pts[col] & mask:
                    continue
                nodes += 1
                if nodes > budget:
                    raise _BudgetExceeded
                place(row, col, pairs, mask)
                if solve():
                    return True
                unplace(row, col, pairs, mask)
        return False

    try:
        found = solve()
    except _BudgetExceeded:
        return BruteForceResult(Existence.EXHAUSTED, nodes=nodes)

    if not found:
        return BruteForceResult(Existence.NOT_EXISTS, nodes=nodes)

    arr = DesignArray.empty(side, n, k, host)
    for (r, c), pairs in sorted(grid.items()):
        arr = arr.place(r, c, Block(pairs))
    return BruteForceResult(Existence.EXISTS, design=arr, nodes=nodes)
