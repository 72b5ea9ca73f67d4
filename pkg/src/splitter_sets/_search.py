"""Bitmask backtracking for exact covers and near-covers.

Cells are numbered 0..U-1 and every candidate block is a bitmask. A state is
the set of decided cells (covered, or deliberately left empty) plus the
remaining waste budget. The search branches on the undecided cell with the
fewest compatible blocks, ties going to the smallest cell; candidate blocks
are tried in the order given, then leaving the cell empty if the budget
allows. Cells no block can reach any more are charged to the budget up
front. The choice is a function of the state alone, so results are
deterministic and failed states can be memoized.
"""
from __future__ import annotations

from typing import Iterator, Sequence


class SearchBoundError(ValueError):
    """Input exceeds the configured brute-force bound."""


def covers(n_cells: int, blocks: Sequence[int], by_cell: Sequence[Sequence[int]],
           waste: int = 0, start_mask: int = 0) -> Iterator[list[int]]:
    """Yield lists of block indices that decide every cell.

    ``by_cell[x]`` lists the indices of blocks containing cell x. Each yielded
    solution covers every cell at most once and leaves at most ``waste`` cells
    outside ``start_mask`` uncovered.
    """
    full = (1 << n_cells) - 1
    failed: set[tuple[int, int]] = set()

    def expand(mask: int, w: int):
        """Force dead cells empty, then list the branches at the best cell."""
        best, best_opts = None, None
        dead = 0
        for x in range(n_cells):
            if mask >> x & 1:
                continue
            opts = [r for r in by_cell[x] if blocks[r] & mask == 0]
            if not opts:
                dead |= 1 << x
                continue
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = x, opts
        n_dead = bin(dead).count("1")
        if n_dead > w:
            return mask, w, []
        mask, w = mask | dead, w - n_dead
        if best_opts is None:
            return mask, w, [(None, mask, w)]
        branches = [(r, mask | blocks[r], w) for r in best_opts]
        if w > 0:
            branches.append((None, mask | (1 << best), w - 1))
        return mask, w, branches

    root_mask, root_w, root_branches = expand(start_mask, waste)
    if root_mask == full:
        yield []
        return
    # frame: [pre-expansion key, post-expansion key, branch iterator, found-flag]
    root_key = (root_mask, root_w)
    stack = [[(start_mask, waste), root_key, iter(root_branches), False]]
    chosen: list[int | None] = []
    while stack:
        frame = stack[-1]
        step = next(frame[2], None)
        if step is None:
            stack.pop()
            if not frame[3]:
                failed.add(frame[0])
                failed.add(frame[1])
            if chosen:
                chosen.pop()
            continue
        r, mask, w = step
        pre = (mask, w)
        if mask != full:
            if pre in failed:
                continue
            mask, w, branches = expand(mask, w)
            if (mask, w) in failed:
                failed.add(pre)
                continue
        if mask == full:
            for f in stack:
                f[3] = True
            yield [c for c in chosen if c is not None] + ([r] if r is not None else [])
            continue
        chosen.append(r)
        stack.append([pre, (mask, w), iter(branches), False])


def first_cover(n_cells, blocks, by_cell, waste=0, start_mask=0) -> list[int] | None:
    return next(covers(n_cells, blocks, by_cell, waste, start_mask), None)
