"""Room squares: single-edge designs of even order n on a side n-1 array.

The fast path builds the square from a strong starter on Z_r, r = n-1:
pairs {x_i, y_i} partitioning Z_r \\ {0} whose differences cover every
nonzero residue and whose sums are distinct and nonzero. With the adder
a_i = (x_i + y_i) mod r, placing the translate {x_i + j, y_i + j} at cell
(j, (j + a_i) mod r) and {inf, j} at (j, j) yields a valid square: row j
holds the translates by j, and column c holds the pairs
(starter_i - a_i) + c = {-y_i, -x_i} + c, which again partition away
from c. The point at infinity is flattened to r, everything else is its
residue.

Strong starters exist for every odd r >= 7 except r = 9, where
room_search, a direct backtracking over the array, takes over. Both
paths certify a transversal before returning.
"""

from __future__ import annotations

import itertools
import random
import sys
from dataclasses import dataclass
from functools import lru_cache

from .core import Block, Complete, DesignArray, Transversal
from .errors import InvalidStarter, NonExistent, SearchExhausted
from .verify import verify_transversal

DEFAULT_BUDGET = 10_000_000


def _ensure_recursion_room(frames: int) -> None:
    # search depth scales with the array, not the input text
    needed = frames + 200
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)


@dataclass(frozen=True)
class StarterAdder:
    """Starter pairs on Z_r \\ {0} with their translation offsets."""

    r: int
    pairs: tuple[tuple[int, int], ...]
    adder: tuple[int, ...]


def validate_starter_adder(sa: StarterAdder) -> None:
    """Raise InvalidStarter unless sa satisfies all defining conditions."""
    r = sa.r
    if r < 3 or r % 2 == 0:
        raise InvalidStarter(f"modulus must be odd and at least 3, got {r}")
    half = (r - 1) // 2
    if len(sa.pairs) != half or len(sa.adder) != half:
        raise InvalidStarter(f"need {half} pairs and adders for modulus {r}")

    elements = [p for pair in sa.pairs for p in pair]
    if sorted(elements) != list(range(1, r)):
        raise InvalidStarter("pairs do not partition 1..r-1")

    diffs = set()
    for x, y in sa.pairs:
        diffs.add((x - y) % r)
        diffs.add((y - x) % r)
    if len(diffs) != r - 1:
        raise InvalidStarter("pair differences do not cover all nonzero residues")

    if len(set(sa.adder)) != half or any(a % r == 0 for a in sa.adder):
        raise InvalidStarter("adder entries must be distinct and nonzero")

    translated = [((x - a) % r, (y - a) % r) for (x, y), a in zip(sa.pairs, sa.adder)]
    shifted = [p for pair in translated for p in pair]
    if sorted(shifted) != list(range(1, r)):
        raise InvalidStarter("translated pairs do not partition 1..r-1")


def _strong_starters(r: int, budget: int, seed: int = 0):
    """Yield strong starter-adders on Z_r, randomized depth-first.

    Runs restart slices: each slice pairs the smallest unused element first
    with partner order reshuffled, so a thrashing prefix is abandoned
    rather than ground through. The fixed seed keeps the stream identical
    across runs. A slice that explores its whole tree without hitting the
    slice cap ends the stream for good (that is how r = 9 comes up empty);
    otherwise the stream stops quietly once budget nodes are spent.
    """
    half = (r - 1) // 2
    rng = random.Random(seed)
    spent = 0
    while spent < budget:
        cap = min(max(50_000, budget // 64), budget - spent)
        unused = set(range(1, r))
        used_diffs = [False] * (half + 1)
        used_sums = set()
        pairs: list[tuple[int, int]] = []
        nodes = 0
        truncated = False

        def rec():
            nonlocal nodes, truncated
            if not unused:
                snapshot = tuple(pairs)
                yield StarterAdder(
                    r, snapshot, tuple((x + y) % r for x, y in snapshot)
                )
                return
            u = min(unused)
            candidates = []
            for d in range(1, half + 1):
                if used_diffs[d]:
                    continue
                for v in ((u + d) % r, (u - d) % r):
                    if v == 0 or v not in unused or v == u:
                        continue
                    s = (u + v) % r
                    if s == 0 or s in used_sums:
                        continue
                    candidates.append((v, d, s))
            rng.shuffle(candidates)
            for v, d, s in candidates:
                nodes += 1
                if nodes > cap:
                    truncated = True
                    return
                unused.discard(u)
                unused.discard(v)
                used_diffs[d] = True
                used_sums.add(s)
                pairs.append((u, v) if u < v else (v, u))
                yield from rec()
                pairs.pop()
                used_sums.discard(s)
                used_diffs[d] = False
                unused.add(u)
                unused.add(v)
                if truncated:
                    return

        yield from rec()
        spent += nodes
        if not truncated:
            return


def strong_starter_search(r: int, budget: int = DEFAULT_BUDGET) -> StarterAdder | None:
    """First strong starter on Z_r in search order, or None.

    None covers both a spent budget and exhaustion of the whole space
    (r = 9 genuinely has none). Results are re-validated before return.
    """
    if r < 7 or r % 2 == 0:
        raise ValueError(f"strong starters need odd r >= 7, got {r}")
    for sa in _strong_starters(r, budget):
        validate_starter_adder(sa)
        return sa
    return None


def _starter_array(sa: StarterAdder) -> DesignArray:
    r = sa.r
    arr = DesignArray.empty(r, r + 1, 1, Complete(r + 1))
    for j in range(r):
        arr = arr.place(j, j, Block(((r, j),)))
    for (x, y), a in zip(sa.pairs, sa.adder):
        for j in range(r):
            arr = arr.place(j, (j + a) % r, Block((((x + j) % r, (y + j) % r),)))
    return arr


def room_from_starter(
    sa: StarterAdder, *, seed: int = 0, budget: int = DEFAULT_BUDGET
) -> tuple[DesignArray, Transversal]:
    """Build the side-r square from a validated starter-adder."""
    validate_starter_adder(sa)
    arr = _starter_array(sa)
    transversal = find_transversal(arr, seed=seed, budget=budget)
    if transversal is None:
        raise SearchExhausted(
            f"no transversal found for the side-{sa.r} starter square within budget"
        )
    return arr, transversal


class _BudgetExceeded(Exception):
    pass


class _SquareFound(Exception):
    def __init__(self, grid):
        self.grid = grid


def _square_attempt(r: int, rng, budget: int) -> bool:
    """One randomized depth-first pass; True means the tree was exhausted.

    Raises _SquareFound with the completed grid on success. Always extends
    the most-filled incomplete row at its uncovered point with the fewest
    (partner, column) options; scanning every uncovered point of that row
    also detects stuck points early. Row 0 is pinned to the canonical form
    {0-1} | {2-3} | ... in the leftmost columns, which any square can be
    brought to by permuting columns and relabeling points, so existence
    verdicts are unaffected while the tree shrinks enormously.
    """
    n = r + 1
    grid: dict[tuple[int, int], tuple[int, int]] = {}
    row_pts = [0] * r
    col_pts = [0] * r
    pair_used = set()
    nodes = 0

    for t in range(n // 2):
        pair = (2 * t, 2 * t + 1)
        grid[(0, t)] = pair
        row_pts[0] |= (1 << pair[0]) | (1 << pair[1])
        col_pts[t] |= (1 << pair[0]) | (1 << pair[1])
        pair_used.add(pair)

    def rec() -> None:
        nonlocal nodes
        row, best_missing = -1, n + 1
        for i in range(r):
            missing = n - (row_pts[i]).bit_count()
            if 0 < missing < best_missing:
                row, best_missing = i, missing
        if row == -1:
            raise _SquareFound(dict(grid))
        missing_pts = [p for p in range(n) if not (row_pts[row] >> p) & 1]
        best = None
        for u in missing_pts:
            options = []
            for v in missing_pts:
                if v == u:
                    continue
                pair = (u, v) if u < v else (v, u)
                if pair in pair_used:
                    continue
                vmask = (1 << u) | (1 << v)
                cols = [
                    c
                    for c in range(r)
                    if (row, c) not in grid and not col_pts[c] & vmask
                ]
                if cols:
                    options.append((pair, vmask, cols))
            width = sum(len(cols) for _, _, cols in options)
            if width == 0:
                return
            if best is None or width < best[0]:
                best = (width, options)
                if width == 1:
                    break
        candidates = [
            (pair, vmask, c) for pair, vmask, cols in best[1] for c in cols
        ]
        rng.shuffle(candidates)
        for pair, vmask, c in candidates:
            nodes += 1
            if nodes > budget:
                raise _BudgetExceeded
            grid[(row, c)] = pair
            row_pts[row] |= vmask
            col_pts[c] |= vmask
            pair_used.add(pair)
            rec()
            del grid[(row, c)]
            row_pts[row] &= ~vmask
            col_pts[c] &= ~vmask
            pair_used.discard(pair)

    try:
        rec()
    except _BudgetExceeded:
        return False
    return True


def _random_one_factorization(n: int, rng) -> list[list[tuple[int, int]]] | None:
    """Partition the edges of the complete graph on n points into perfect
    matchings, choosing partners at random. One pass; None if it dead-ends.
    """
    adj = [((1 << n) - 1) & ~(1 << u) for u in range(n)]
    factors = []
    for _ in range(n - 1):
        covered = 0
        chosen: list[tuple[int, int]] = []

        def rec() -> bool:
            nonlocal covered
            if len(chosen) == n // 2:
                return True
            u = (~covered & ((1 << n) - 1)).bit_length() - 1
            # bit_length - 1 is the highest free point; any fixed rule works
            partners = [
                v for v in range(n) if (adj[u] >> v) & 1 and not (covered >> v) & 1
            ]
            rng.shuffle(partners)
            for v in partners:
                chosen.append((u, v))
                covered |= (1 << u) | (1 << v)
                if rec():
                    return True
                chosen.pop()
                covered &= ~((1 << u) | (1 << v))
            return False

        if not rec():
            return None
        for u, v in chosen:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        factors.append([(u, v) if u < v else (v, u) for u, v in chosen])
    return factors


def _mate_attempt(
    factors: list[list[tuple[int, int]]], rng, cap: int
) -> tuple[dict[tuple[int, int], tuple[int, int]] | None, int]:
    """Assign every edge of a matching partition to a column.

    Row i holds the edges of factor i; columns must stay point-disjoint and
    each row uses each column at most once. Factor 0 is pinned to the
    leftmost columns in sorted order, which any solution can be brought to
    by permuting columns. Branches on the unassigned edge with the fewest
    feasible columns over the whole array; the scan doubles as a forward
    check. Returns (grid, nodes) with grid None when the cap ran out or no
    assignment was reached.
    """
    r = len(factors)
    half = len(factors[0])
    rows = [sorted(f) for f in factors]
    rowmask = [[(1 << u) | (1 << v) for u, v in row] for row in rows]
    col_pts = [0] * r
    row_cols = [0] * r
    grid: dict[tuple[int, int], tuple[int, int]] = {}
    for t, (u, v) in enumerate(rows[0]):
        grid[(0, t)] = (u, v)
        col_pts[t] |= (1 << u) | (1 << v)
    row_cols[0] = (1 << half) - 1
    assigned = [[False] * half for _ in range(r)]
    assigned[0] = [True] * half
    remaining = [(i, e) for i in range(1, r) for e in range(half)]
    nodes = 0

    def rec(count: int) -> bool:
        nonlocal nodes
        if count == 0:
            return True
        best = None
        for i, e in remaining:
            if assigned[i][e]:
                continue
            vmask = rowmask[i][e]
            cols = [
                c
                for c in range(r)
                if not (row_cols[i] >> c) & 1 and not col_pts[c] & vmask
            ]
            if not cols:
                return False
            if best is None or len(cols) < len(best[3]):
                best = (i, e, vmask, cols)
                if len(cols) == 1:
                    break
        i, e, vmask, cols = best
        rng.shuffle(cols)
        for c in cols:
            nodes += 1
            if nodes > cap:
                raise _BudgetExceeded
            col_pts[c] |= vmask
            row_cols[i] |= 1 << c
            assigned[i][e] = True
            if rec(count - 1):
                grid[(i, c)] = rows[i][e]
                return True
            col_pts[c] &= ~vmask
            row_cols[i] &= ~(1 << c)
            assigned[i][e] = False
        return False

    try:
        found = rec(len(remaining)) if r > 1 else True
    except _BudgetExceeded:
        return None, nodes
    return (grid if found else None), nodes


def room_search(
    r: int, seed: int = 0, budget: int = DEFAULT_BUDGET
) -> tuple[DesignArray, Transversal]:
    """Backtracking search for a side-r square, no starter required.

    Small sides (r <= 5) get a full exhaustive pass, which is how r = 3 and
    r = 5 are refuted with NonExistent. Larger sides run a randomized loop:
    draw a random partition of the complete graph's edges into perfect
    matchings (the future rows), then backtrack over column assignments;
    a failed draw costs at most a fixed node slice and the next one
    reshuffles. Equal seeds reproduce equal squares. Raises SearchExhausted
    when the node budget runs out first; sides 15 and up tend to need more
    than the default budget, though the package itself only ever calls this
    for sides 9 and below (starters cover the rest).
    """
    if r < 1 or r % 2 == 0:
        raise ValueError(f"side must be odd and positive, got {r}")
    n = r + 1
    rng = random.Random(seed)
    # depth is one frame per placed edge, about r*n/2 of them
    _ensure_recursion_room(r * n)

    grid = None
    if r <= 5:
        try:
            if _square_attempt(r, rng, budget):
                raise NonExistent(
                    f"no design of order {n} with single-edge blocks: "
                    f"exhaustive search refuted every side-{r} array"
                )
        except _SquareFound as found:
            grid = found.grid
    else:
        spent = 0
        while spent < budget:
            factors = _random_one_factorization(n, rng)
            spent += n
            if factors is None:
                continue
            grid, used = _mate_attempt(factors, rng, min(100_000, budget - spent))
            spent += used
            if grid is not None:
                break
    if grid is None:
        raise SearchExhausted(f"side-{r} square search spent its {budget}-node budget")

    arr = DesignArray.empty(r, n, 1, Complete(n))
    for (i, c), (u, v) in sorted(grid.items()):
        arr = arr.place(i, c, Block(((u, v),)))
    transversal = find_transversal(arr, seed=seed, budget=budget)
    if transversal is None:
        raise SearchExhausted(
            f"found a side-{r} square but no transversal within budget"
        )
    return arr, transversal


def find_transversal(
    arr: DesignArray, *, seed: int = 0, budget: int = DEFAULT_BUDGET
) -> Transversal | None:
    """Search for a certified transversal of a design array.

    Depth-first over the uncovered point with the fewest usable occupied
    cells; once every point is covered, the leftover rows and columns must
    pair up through empty cells, which is a bipartite matching. The first
    attempt runs in deterministic order and, if it exhausts the tree
    within budget, the absence verdict is final. Later attempts reshuffle
    candidate order from seed until budget is spent. Every returned
    transversal is re-checked by the verifier.
    """
    n, side = arr.n, arr.side
    per_block = 2 * arr.k
    occupied = arr.occupied()
    cell_row = [r for (r, _), _ in occupied]
    cell_col = [c for (_, c), _ in occupied]
    cell_mask = []
    by_point: list[list[int]] = [[] for _ in range(n)]
    for idx, ((r, c), block) in enumerate(occupied):
        mask = 0
        for p in block.points:
            mask |= 1 << p
            by_point[p].append(idx)
        cell_mask.append(mask)

    full = (1 << n) - 1
    all_rows = (1 << side) - 1

    def match_empty(used_rows: int, used_cols: int) -> list[tuple[int, int]] | None:
        free_rows = [i for i in range(side) if not (used_rows >> i) & 1]
        free_cols = [c for c in range(side) if not (used_cols >> c) & 1]
        match_of_col: dict[int, int] = {}

        def assign(i: int, visited: set[int]) -> bool:
            for c in free_cols:
                if c in visited or (i, c) in arr.cells:
                    continue
                visited.add(c)
                if c not in match_of_col or assign(match_of_col[c], visited):
                    match_of_col[c] = i
                    return True
            return False

        for i in free_rows:
            if not assign(i, set()):
                return None
        return sorted((i, c) for c, i in match_of_col.items())

    class _Done(Exception):
        def __init__(self, cells):
            self.cells = cells

    def attempt(order_rng, node_budget: int) -> tuple[bool, int]:
        """Returns (tree fully explored, nodes used); raises _Done on success."""
        nodes = 0

        def rec(covered: int, used_rows: int, used_cols: int, chosen) -> bool:
            """True while the subtree was fully explored."""
            nonlocal nodes
            if covered == full:
                completion = match_empty(used_cols=used_cols, used_rows=used_rows)
                if completion is not None:
                    raise _Done(chosen + completion)
                return True
            need = (n - covered.bit_count()) // per_block
            free = side - used_rows.bit_count()
            if need > free:
                return True
            best = None
            for p in range(n):
                if (covered >> p) & 1:
                    continue
                cands = [
                    idx
                    for idx in by_point[p]
                    if not (used_rows >> cell_row[idx]) & 1
                    and not (used_cols >> cell_col[idx]) & 1
                    and not cell_mask[idx] & covered
                ]
                if not cands:
                    return True
                if best is None or len(cands) < len(best):
                    best = cands
                    if len(cands) == 1:
                        break
            if order_rng is not None:
                order_rng.shuffle(best)
            complete = True
            for idx in best:
                nodes += 1
                if nodes > node_budget:
                    raise _BudgetExceeded
                finished = rec(
                    covered | cell_mask[idx],
                    used_rows | (1 << cell_row[idx]),
                    used_cols | (1 << cell_col[idx]),
                    chosen + [(cell_row[idx], cell_col[idx])],
                )
                complete = complete and finished
            return complete

        try:
            explored = rec(0, 0, 0, [])
        except _BudgetExceeded:
            return False, nodes
        return explored, nodes

    if side == 0:
        return None

    remaining = budget
    rng = random.Random(seed)
    first = True
    while remaining > 0:
        slice_budget = min(remaining, max(4000, budget // 64))
        try:
            explored, used = attempt(None if first else rng, slice_budget)
        except _Done as done:
            transversal = Transversal(tuple(sorted(done.cells)))
            report = verify_transversal(arr, transversal)
            if not report.passed:
                raise AssertionError(
                    f"internal: transversal search produced an invalid result: "
                    f"{report.failure()}"
                )
            return transversal
        if explored:
            return None
        remaining -= max(used, 1)
        first = False
    return None


def build_room(
    n: int, *, seed: int = 0, budget: int = DEFAULT_BUDGET
) -> tuple[DesignArray, Transversal]:
    """Single-edge design of even order n with a certified transversal.

    Orders 4 and 6 are the two genuine exclusions. Order 2 is the one-cell
    array. Otherwise strong starters are tried first (several, in case a
    starter square yields no transversal) and the direct array search is
    the fallback, which is what order 10 uses since Z_9 has no strong
    starter.
    """
    if n < 2 or n % 2:
        raise ValueError(f"single-edge designs need even n >= 2, got {n}")
    if n in (4, 6):
        raise NonExistent(
            f"no design of order {n} with single-edge blocks: "
            "orders 4 and 6 are the two exclusions"
        )
    return _cached_room(n, seed, budget)


@lru_cache(maxsize=64)
def _cached_room(n: int, seed: int, budget: int) -> tuple[DesignArray, Transversal]:
    if n == 2:
        arr = DesignArray.empty(1, 2, 1, Complete(2)).place(0, 0, Block(((0, 1),)))
        return arr, Transversal(((0, 0),))

    r = n - 1
    transversal_failures = 0
    if r >= 7:
        for sa in itertools.islice(_strong_starters(r, budget), 4):
            arr = _starter_array(sa)
            transversal = find_transversal(arr, seed=seed, budget=budget)
            if transversal is not None:
                return arr, transversal
            transversal_failures += 1

    try:
        return room_search(r, seed=seed, budget=budget)
    except SearchExhausted:
        if transversal_failures:
            raise SearchExhausted(
                f"order {n}: {transversal_failures} starter squares had no "
                f"transversal within budget and the direct search also gave up"
            ) from None
        raise
