"""Recursive product: expand each cell of a small design into a subarray.

Given a design with single- or multi-edge blocks on n points, every point
is split into s copies. Each outer cell grows into an s x s block, and
s - 1 extra rows and columns are appended, for a side of s(n-1) + s - 1
= sn - 1. Cells on the outer transversal receive a copy of the larger
ingredient (on the matching-of-cliques host) with its hole permuted onto
the extra rows and columns; all other filled cells receive a copy of the
smaller ingredient (on the matching-blowup host). The copies tile the new
edge set exactly once, which the verifier confirms on every output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Block,
    Complete,
    CompleteBipartite,
    DesignArray,
    Hole,
    LexMatching,
    LexMatchingComplete,
    Transversal,
)
from .errors import (
    EmbeddingCollision,
    IncoherentIngredients,
    NonExistent,
    OccupiedCell,
    VerificationFailed,
)
from .room import DEFAULT_BUDGET, build_room, find_transversal
from .bases import build_2k, build_4k, build_6k, build_m1k
from .verify import (
    VerificationReport,
    verify,
    verify_hole,
    verify_transversal,
)

# the output transversal hunt is best-effort; keep it from eating the
# whole construction budget
TRANSVERSAL_SEARCH_CAP = 2_000_000


@dataclass(frozen=True)
class IngredientSet:
    """Everything the product construction consumes.

    outer: design whose cells get expanded, with a certified transversal.
    cell_ingredient: design on the matching blowup M_l[s], side s.
    transversal_ingredient: design on the clique blowup M_l[K_s], side
    2s - 1, with a certified transversal and a hole of size s - 1.
    """

    outer: DesignArray
    outer_transversal: Transversal
    cell_ingredient: DesignArray
    transversal_ingredient: DesignArray
    ingredient_transversal: Transversal
    ingredient_hole: Hole


def _matching_blowup_params(host) -> tuple[int, int] | None:
    """(l, s) when host is M_l[s] up to isomorphism, else None."""
    if isinstance(host, LexMatching):
        return host.l, host.s
    if isinstance(host, CompleteBipartite) and host.a == host.b:
        return 1, host.a
    return None


def _clique_blowup_params(host) -> tuple[int, int] | None:
    """(l, s) when host is M_l[K_s] up to isomorphism, else None."""
    if isinstance(host, LexMatchingComplete):
        return host.l, host.s
    if isinstance(host, Complete) and host.n % 2 == 0:
        return 1, host.n // 2
    return None


def check_ingredients(ing: IngredientSet) -> tuple[int, int, int]:
    """Validate parameter coherence; return (l, s, k) on success."""
    outer = ing.outer
    if not isinstance(outer.host, Complete):
        raise IncoherentIngredients(
            f"outer design must live on a complete graph, got {outer.host!r}"
        )
    l = outer.k

    cell_params = _matching_blowup_params(ing.cell_ingredient.host)
    if cell_params is None:
        raise IncoherentIngredients(
            "cell ingredient must live on a matching blowup M_l[s], "
            f"got {ing.cell_ingredient.host!r}"
        )
    if cell_params[0] != l:
        raise IncoherentIngredients(
            f"cell ingredient is built for {cell_params[0]}-edge outer "
            f"blocks but the outer design has {l}-edge blocks"
        )
    s = cell_params[1]

    trans_params = _clique_blowup_params(ing.transversal_ingredient.host)
    if trans_params is None:
        raise IncoherentIngredients(
            "transversal ingredient must live on a clique blowup M_l[K_s], "
            f"got {ing.transversal_ingredient.host!r}"
        )
    if trans_params != (l, s):
        raise IncoherentIngredients(
            f"transversal ingredient parameters {trans_params} do not match "
            f"(l, s) = {(l, s)}"
        )

    k = ing.cell_ingredient.k
    if ing.transversal_ingredient.k != k:
        raise IncoherentIngredients(
            f"ingredients disagree on block size: "
            f"{k} vs {ing.transversal_ingredient.k}"
        )
    if ing.cell_ingredient.side != s:
        raise IncoherentIngredients(
            f"cell ingredient side must be s = {s}, "
            f"got {ing.cell_ingredient.side}"
        )
    if ing.transversal_ingredient.side != 2 * s - 1:
        raise IncoherentIngredients(
            f"transversal ingredient side must be 2s - 1 = {2 * s - 1}, "
            f"got {ing.transversal_ingredient.side}"
        )
    if ing.ingredient_hole.size != s - 1:
        raise IncoherentIngredients(
            f"hole must have size s - 1 = {s - 1}, "
            f"got {ing.ingredient_hole.size}"
        )

    for name, arr in (
        ("outer", outer),
        ("cell ingredient", ing.cell_ingredient),
        ("transversal ingredient", ing.transversal_ingredient),
    ):
        report = verify(arr)
        if not report.passed:
            raise IncoherentIngredients(
                f"{name} fails verification: {report.failure()}"
            )
    report = verify_transversal(outer, ing.outer_transversal)
    if not report.passed:
        raise IncoherentIngredients(
            f"outer transversal fails certification: {report.failure()}"
        )
    report = verify_transversal(
        ing.transversal_ingredient, ing.ingredient_transversal
    )
    if not report.passed:
        raise IncoherentIngredients(
            f"ingredient transversal fails certification: {report.failure()}"
        )
    report = verify_hole(ing.transversal_ingredient, ing.ingredient_hole)
    if not report.passed:
        raise IncoherentIngredients(
            f"ingredient hole fails certification: {report.failure()}"
        )
    return l, s, k


def _block_point_map(block: Block, l: int, s: int) -> dict[int, int]:
    """Map blowup-host points x*s + z to new points phi(x)*s + z.

    Group 2t of the blowup host corresponds to the lower endpoint of the
    t-th edge of the block (in canonical order), group 2t + 1 to the upper.
    """
    phi: dict[int, int] = {}
    for t, (u, v) in enumerate(block.edges):
        phi[2 * t] = u
        phi[2 * t + 1] = v
    return {
        x * s + z: phi[x] * s + z for x in range(2 * l) for z in range(s)
    }


def compose(
    ing: IngredientSet,
    *,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
) -> tuple[DesignArray, Transversal | None]:
    """Blow up ing.outer by s; returns the design and a best-effort
    transversal for it (None when the bounded search comes up empty --
    the design itself is verified either way)."""
    l, s, k = check_ingredients(ing)
    outer = ing.outer
    n = outer.n
    side = s * outer.side + s - 1
    out = DesignArray.empty(side, s * n, k, Complete(s * n))

    extra_rows = [s * outer.side + t for t in range(s - 1)]
    extra_cols = list(extra_rows)
    hole_rows = set(ing.ingredient_hole.rows)
    hole_cols = set(ing.ingredient_hole.cols)
    ti_side = ing.transversal_ingredient.side
    body_rows = [r for r in range(ti_side) if r not in hole_rows]
    body_cols = [c for c in range(ti_side) if c not in hole_cols]
    on_transversal = set(ing.outer_transversal.cells)

    for (i, j), block in outer.occupied():
        pmap = _block_point_map(block, l, s)
        try:
            if (i, j) in on_transversal:
                row_map = {rr: i * s + t for t, rr in enumerate(body_rows)}
                row_map.update(
                    {rr: extra_rows[t] for t, rr in enumerate(sorted(hole_rows))}
                )
                col_map = {cc: j * s + t for t, cc in enumerate(body_cols)}
                col_map.update(
                    {cc: extra_cols[t] for t, cc in enumerate(sorted(hole_cols))}
                )
                out = out.embed(
                    ing.transversal_ingredient, row_map, col_map, pmap
                )
            else:
                row_map = {t: i * s + t for t in range(s)}
                col_map = {t: j * s + t for t in range(s)}
                out = out.embed(ing.cell_ingredient, row_map, col_map, pmap)
        except OccupiedCell as exc:
            raise EmbeddingCollision(
                f"expansion of outer cell ({i}, {j}) collided: {exc}"
            ) from exc

    report = verify(out)
    if not report.passed:
        raise VerificationFailed(
            f"composed design failed verification: {report.failure()}"
        )
    transversal = find_transversal(
        out, seed=seed, budget=min(budget, TRANSVERSAL_SEARCH_CAP)
    )
    return out, transversal


@dataclass(frozen=True)
class ConstructionResult:
    """A verified design plus its certificates.

    transversal is best-effort: present when the construction path yields
    one or the bounded search finds one, else None. transversal_report is
    its certification when present.
    """

    design: DesignArray
    report: VerificationReport
    path: str
    transversal: Transversal | None
    transversal_report: VerificationReport | None


def _certify(
    design: DesignArray,
    path: str,
    transversal: Transversal | None,
    *,
    seed: int,
    budget: int,
    search: bool = True,
) -> ConstructionResult:
    report = verify(design)
    if not report.passed:
        raise VerificationFailed(
            f"{path} construction failed verification: {report.failure()}"
        )
    if transversal is None and search:
        transversal = find_transversal(
            design, seed=seed, budget=min(budget, TRANSVERSAL_SEARCH_CAP)
        )
    t_report = None
    if transversal is not None:
        t_report = verify_transversal(design, transversal)
        if not t_report.passed:
            raise VerificationFailed(
                f"{path} construction produced a bad transversal: "
                f"{t_report.failure()}"
            )
    return ConstructionResult(design, report, path, transversal, t_report)


def construct(
    n: int,
    k: int,
    *,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
) -> ConstructionResult:
    """Build a verified design for any admissible (n, k).

    Dispatch: order not divisible by 2k is impossible; k = 1 goes to the
    square builders (orders 4 and 6 impossible); n = 2k, 4k, 6k use the
    direct constructions; everything from 8k up expands a single-edge
    design of order n/k by s = k. Every returned design has passed the
    verifier; NonExistent names the violated condition.
    """
    if n < 2 or k < 1:
        raise ValueError(f"need n >= 2 and k >= 1, got ({n}, {k})")
    if n % (2 * k) != 0:
        raise NonExistent(
            f"no design of order {n} with {k}-edge blocks: "
            f"the order must be a multiple of 2k = {2 * k}"
        )
    if k == 1:
        design, transversal = build_room(n, seed=seed, budget=budget)
        return _certify(design, "room", transversal, seed=seed, budget=budget)
    if n == 2 * k:
        design, transversal, _hole = build_2k(k)
        return _certify(
            design, "diagonal", transversal, seed=seed, budget=budget
        )
    if n == 4 * k:
        return _certify(
            build_4k(k), "quad-split", None, seed=seed, budget=budget
        )
    if n == 6 * k:
        return _certify(
            build_6k(k), "hex-split", None, seed=seed, budget=budget
        )

    m = n // k
    outer, outer_transversal = build_room(m, seed=seed, budget=budget)
    t_design, t_transversal, t_hole = build_2k(k)
    ing = IngredientSet(
        outer=outer,
        outer_transversal=outer_transversal,
        cell_ingredient=build_m1k(k),
        transversal_ingredient=t_design,
        ingredient_transversal=t_transversal,
        ingredient_hole=t_hole,
    )
    design, transversal = compose(ing, seed=seed, budget=budget)
    return _certify(
        design,
        f"product(room({m}), s={k})",
        transversal,
        seed=seed,
        budget=budget,
        search=False,
    )
