"""Sorting algorithms instrumented with operation counters.

Every evaluation of an element comparison ``b < a`` counts once, including
the probes that end a pass without swapping. Inputs are never mutated.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Sequence

__all__ = [
    "SortTally",
    "bubble_restart",
    "bubble_textbook",
    "merge_sort",
    "radix_sort_binary",
    "worst_case_input",
    "inversion_count",
    "worst_case_scan",
    "ALGORITHMS",
    "COMPARISON_SORTS",
    "SCAN_LIMIT",
]

SCAN_LIMIT = 8


@dataclass
class SortTally:
    comparisons: int = 0
    swaps: int = 0
    moves: int = 0
    radix_passes: int = 0

    @property
    def total_ops(self) -> int:
        return self.comparisons + self.swaps

    @property
    def paper_ops(self) -> int:
        """Swaps plus the comparisons that did not lead to a swap.

        For adjacent-swap sorts every swap follows exactly one comparison, so
        this equals ``comparisons``. It is the operation model under which a
        descending input of length n is claimed to cost n*n - n.
        """
        return self.swaps + (self.comparisons - self.swaps)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["total_ops"] = self.total_ops
        d["paper_ops"] = self.paper_ops
        return d


def bubble_restart(array: Sequence[int]) -> tuple[list[int], SortTally]:
    """Adjacent-swap sort that rescans from the start after every swap."""
    a = list(array)
    tally = SortTally()
    index = 1
    while index < len(a):
        x, y = a[index - 1], a[index]
        tally.comparisons += 1
        if y < x:
            a[index - 1], a[index] = y, x
            tally.swaps += 1
            index = 1
        else:
            index += 1
    return a, tally


def bubble_textbook(array: Sequence[int]) -> tuple[list[int], SortTally]:
    """Pass-based bubble sort: each pass is one shorter, stop after a clean pass."""
    a = list(array)
    tally = SortTally()
    for end in range(len(a) - 1, 0, -1):
        swapped = False
        for i in range(end):
            tally.comparisons += 1
            if a[i + 1] < a[i]:
                a[i], a[i + 1] = a[i + 1], a[i]
                tally.swaps += 1
                swapped = True
        if not swapped:
            break
    return a, tally


def merge_sort(array: Sequence[int]) -> tuple[list[int], SortTally]:
    """Stable top-down merge sort; the left half takes ceil(n/2) elements."""
    tally = SortTally()

    def sort(xs: list[int]) -> list[int]:
        if len(xs) <= 1:
            return xs
        mid = (len(xs) + 1) // 2
        left, right = sort(xs[:mid]), sort(xs[mid:])
        out: list[int] = []
        i = j = 0
        while i < len(left) and j < len(right):
            tally.comparisons += 1
            if right[j] < left[i]:
                out.append(right[j])
                j += 1
            else:
                out.append(left[i])
                i += 1
        out.extend(left[i:])
        out.extend(right[j:])
        tally.moves += len(out)
        return out

    return sort(list(array)), tally


def radix_sort_binary(array: Sequence[int], w: int | None = None) -> tuple[list[int], SortTally]:
    """LSD radix sort, one stable counting pass per bit.

    ``w`` defaults to the bit length of the largest element.
    """
    a = [int(x) for x in array]
    if any(x < 0 for x in a):
        raise ValueError("radix sort needs nonnegative elements")
    if w is None:
        w = max(a, default=0).bit_length()
    if w < 0:
        raise ValueError("bit width must be nonnegative")
    too_big = [x for x in a if x >= 1 << w]
    if too_big:
        raise ValueError(f"element {too_big[0]} does not fit in {w} bits")
    tally = SortTally()
    for bit in range(w):
        zeros = sum(1 for x in a if not x >> bit & 1)
        out = [0] * len(a)
        lo, hi = 0, zeros
        for x in a:
            if x >> bit & 1:
                out[hi] = x
                hi += 1
            else:
                out[lo] = x
                lo += 1
            tally.moves += 1
        a = out
        tally.radix_passes += 1
    return a, tally


def worst_case_input(n: int) -> list[int]:
    """Descending ``[n, n-1, ..., 1]``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(range(n, 0, -1))


def inversion_count(array: Sequence[int]) -> int:
    """Pairs ``i < j`` with ``array[i] > array[j]``, by direct double loop."""
    count = 0
    for i in range(len(array)):
        for j in range(i + 1, len(array)):
            if array[i] > array[j]:
                count += 1
    return count


ALGORITHMS: dict[str, Callable[[Sequence[int]], tuple[list[int], SortTally]]] = {
    "bubble-restart": bubble_restart,
    "bubble": bubble_textbook,
    "merge": merge_sort,
    "radix": radix_sort_binary,
}
COMPARISON_SORTS = ("bubble-restart", "bubble", "merge")


def _resolve(algorithm: str | Callable) -> Callable:
    if callable(algorithm):
        return algorithm
    try:
        return ALGORITHMS[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {sorted(ALGORITHMS)}") from None


def _scan_prefix(args: tuple) -> tuple[int, tuple[int, ...] | None]:
    algorithm, n, first = args
    sort = _resolve(algorithm)
    rest = [x for x in range(1, n + 1) if x != first]
    best, witness = -1, None
    for tail in itertools.permutations(rest):
        perm = (first,) + tail
        c = sort(perm)[1].comparisons
        if c > best:
            best, witness = c, perm
    return best, witness


def worst_case_scan(algorithm: str | Callable, n: int, workers: int = 1) -> tuple[int, list[int]]:
    """Maximum comparisons over all permutations of ``1..n``, with the
    lexicographically first permutation attaining it.

    With ``workers > 1`` the permutations are split by leading element; the
    algorithm must then be given by name.
    """
    if n > SCAN_LIMIT:
        raise ValueError(f"n={n} exceeds the permutation scan limit of {SCAN_LIMIT}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return _resolve(algorithm)([])[1].comparisons, []
    jobs = [(algorithm, n, first) for first in range(1, n + 1)]
    if workers > 1:
        if callable(algorithm):
            raise ValueError("parallel scans need the algorithm name, not a callable")
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_prefix, jobs))
    else:
        results = [_scan_prefix(job) for job in jobs]
    best, witness = -1, None
    # results are in lexicographic prefix order, so strict > keeps the first witness
    for c, w in results:
        if c > best:
            best, witness = c, w
    return best, list(witness)
