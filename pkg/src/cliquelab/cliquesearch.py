"""Exhaustive clique search by counted subnetwork comparison.

A candidate clique on node set ``Q`` is the network whose only off-diagonal
ones form a complete block on ``Q``. It is contained in ``N`` exactly when
``flatten(N) & flatten(Q) == flatten(Q)``. The searches here visit
candidates in lexicographic order of their member lists and charge every
comparison and word operation to a :class:`ComparisonTally`.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .bitgraph import (
    DEFAULT_WORD_WIDTH,
    FlatBits,
    Network,
    WordCounter,
    and_flat,
    equals_flat,
    flatten,
    words_for,
    _words_inspected,
)
from .bounds import binomial

__all__ = [
    "RNG_NAME",
    "NodeSet",
    "ComparisonTally",
    "PlantSpec",
    "clique_matrix",
    "subnetwork_compare",
    "enumerate_subsets",
    "rank_subset",
    "unrank_subset",
    "search_all",
    "search_first",
    "max_clique",
    "plant_clique",
    "random_network",
    "naive_cliques",
    "findings_dict",
]

RNG_NAME = "numpy.random.PCG64"


@dataclass(frozen=True, order=True)
class NodeSet:
    """Strictly increasing 1-based node indices within a network of ``order`` nodes."""

    members: tuple[int, ...]
    order: int

    def __post_init__(self) -> None:
        members = tuple(int(m) for m in self.members)
        object.__setattr__(self, "members", members)
        if not 1 <= len(members) <= self.order:
            raise ValueError(f"clique size {len(members)} outside [1, {self.order}]")
        for a, b in zip(members, members[1:]):
            if b <= a:
                raise ValueError(f"members must be strictly increasing, got {list(members)}")
        if members[0] < 1 or members[-1] > self.order:
            bad = members[0] if members[0] < 1 else members[-1]
            raise ValueError(f"node {bad} out of range [1, {self.order}]")

    @classmethod
    def of(cls, members: Iterable[int], order: int) -> "NodeSet":
        """Build from any iterable, sorting it first."""
        return cls(tuple(sorted(members)), order)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, node: object) -> bool:
        return node in self.members


@dataclass
class ComparisonTally:
    subnetwork_comparisons: int = 0
    candidates_enumerated: int = 0
    words: WordCounter = field(default_factory=WordCounter)

    @property
    def word_ops(self) -> int:
        return self.words.word_ops

    def merge(self, other: "ComparisonTally") -> "ComparisonTally":
        return ComparisonTally(
            self.subnetwork_comparisons + other.subnetwork_comparisons,
            self.candidates_enumerated + other.candidates_enumerated,
            self.words.merge(other.words),
        )

    __add__ = merge

    def to_dict(self) -> dict:
        return {
            "subnetwork_comparisons": self.subnetwork_comparisons,
            "word_ops": self.word_ops,
            "candidates_enumerated": self.candidates_enumerated,
        }


@dataclass(frozen=True)
class PlantSpec:
    order: int
    members: NodeSet
    density: float = 0.0
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density {self.density} outside [0, 1]")
        if self.members.order != self.order:
            raise ValueError("clique members belong to a network of a different order")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def _as_nodeset(members: NodeSet | Iterable[int], order: int) -> NodeSet:
    if isinstance(members, NodeSet):
        if members.order != order:
            raise ValueError(f"node set is for order {members.order}, not {order}")
        return members
    return NodeSet.of(members, order)


class _CliqueBits:
    """Precomputed masks for building clique bit strings of one order."""

    def __init__(self, n: int):
        self.n = n
        self.length = n * n
        self.column = [0] + [1 << (n - j) for j in range(1, n + 1)]
        self.shift = [0] + [(n - i) * n for i in range(1, n + 1)]
        self.diagonal = 0
        for i in range(1, n + 1):
            self.diagonal |= self.column[i] << self.shift[i]

    def __call__(self, members: Sequence[int]) -> int:
        column, shift = self.column, self.shift
        row = 0
        for j in members:
            row |= column[j]
        value = self.diagonal
        for i in members:
            value |= row << shift[i]
        return value


def clique_matrix(n: int, members: NodeSet | Iterable[int]) -> Network:
    """The order-``n`` network whose off-diagonal ones are exactly the pairs within ``members``."""
    nodes = _as_nodeset(members, n)
    return Network(n, FlatBits(n * n, _CliqueBits(n)(nodes.members)))


def subnetwork_compare(q_net: Network, n_net: Network, tally: ComparisonTally) -> bool:
    """Is ``q_net`` contained in ``n_net``? One AND pass plus one equality test."""
    if q_net.order != n_net.order:
        raise ValueError(f"order mismatch: {q_net.order} vs {n_net.order}")
    q_bits = flatten(q_net)
    c_bits = and_flat(flatten(n_net), q_bits, tally.words)
    # a caller-supplied candidate still counts as enumerated
    tally.candidates_enumerated += 1
    tally.subnetwork_comparisons += 1
    return equals_flat(c_bits, q_bits, tally.words)


# -- candidate enumeration -----------------------------------------------------

def _check_q(n: int, q: int) -> None:
    if not 1 <= q <= n:
        raise ValueError(f"clique size q={q} outside [1, {n}]")


def rank_subset(members: Sequence[int], n: int) -> int:
    """Lexicographic rank (0-based) of a sorted ``q``-subset of ``[1, n]``."""
    q = len(members)
    rank, prev = 0, 0
    for pos, m in enumerate(members):
        for x in range(prev + 1, m):
            rank += binomial(n - x, q - pos - 1)
        prev = m
    return rank


def unrank_subset(n: int, q: int, rank: int) -> tuple[int, ...]:
    """Inverse of :func:`rank_subset`."""
    total = binomial(n, q)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} outside [0, {total})")
    members: list[int] = []
    x = 1
    for pos in range(q):
        while True:
            block = binomial(n - x, q - pos - 1)
            if rank < block:
                members.append(x)
                x += 1
                break
            rank -= block
            x += 1
    return tuple(members)


def _successor(members: list[int], n: int) -> bool:
    q = len(members)
    i = q - 1
    while i >= 0 and members[i] == n - q + i + 1:
        i -= 1
    if i < 0:
        return False
    members[i] += 1
    for k in range(i + 1, q):
        members[k] = members[k - 1] + 1
    return True


def _member_tuples(n: int, q: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    if lo >= hi:
        return
    current = list(unrank_subset(n, q, lo))
    for _ in range(hi - lo):
        yield tuple(current)
        if not _successor(current, n):
            return


def _rank_range(n: int, q: int, lo: int, hi: int | None) -> tuple[int, int]:
    total = binomial(n, q)
    hi = total if hi is None else min(hi, total)
    lo = max(lo, 0)
    return lo, max(lo, hi)


def enumerate_subsets(n: int, q: int, lo: int = 0, hi: int | None = None) -> Iterator[NodeSet]:
    """All ``q``-subsets of ``[1, n]`` in lexicographic order, restricted to ranks ``[lo, hi)``.

    Each call returns a fresh iterator, so the stream can be restarted by
    calling again.
    """
    _check_q(n, q)
    lo, hi = _rank_range(n, q, lo, hi)
    for members in _member_tuples(n, q, lo, hi):
        yield NodeSet(members, n)


# -- searches ------------------------------------------------------------------

def _new_tally(word_width: int, strict: bool) -> ComparisonTally:
    return ComparisonTally(words=WordCounter(word_width=word_width, strict=strict))


def _scan(net_value: int, n: int, q: int, lo: int, hi: int, tally: ComparisonTally,
          first_only: bool) -> list[tuple[int, ...]]:
    # Inlined and_flat + equals_flat over raw ints; charges the same word counts.
    build = _CliqueBits(n)
    length = n * n
    counter = tally.words
    and_cost = words_for(length, counter.word_width)
    found: list[tuple[int, ...]] = []
    for members in _member_tuples(n, q, lo, hi):
        tally.candidates_enumerated += 1
        q_value = build(members)
        c_value = net_value & q_value
        counter.word_ops += and_cost
        tally.subnetwork_comparisons += 1
        counter.word_ops += _words_inspected(length, c_value, q_value, counter)
        if c_value == q_value:
            found.append(members)
            if first_only:
                break
    return found


def _scan_worker(args: tuple) -> tuple[list[tuple[int, ...]], int, int, int]:
    net_value, n, q, lo, hi, word_width, strict = args
    tally = _new_tally(word_width, strict)
    found = _scan(net_value, n, q, lo, hi, tally, first_only=False)
    return found, tally.subnetwork_comparisons, tally.candidates_enumerated, tally.word_ops


def search_all(n_net: Network, q: int, *, word_width: int = DEFAULT_WORD_WIDTH,
               strict: bool = False, workers: int = 1,
               lo: int = 0, hi: int | None = None) -> tuple[list[NodeSet], ComparisonTally]:
    """Every ``q``-clique of ``n_net``, by one comparison per candidate.

    No candidate is skipped, so over the full rank range the tally reports
    exactly ``C(n, q)`` comparisons. ``workers > 1`` splits the rank range
    across processes; results and tallies do not depend on the worker count.
    """
    n = n_net.order
    _check_q(n, q)
    if workers < 1:
        raise ValueError("workers must be at least 1")
    lo, hi = _rank_range(n, q, lo, hi)
    net_value = n_net.bits.value
    tally = _new_tally(word_width, strict)
    if workers == 1 or hi - lo < 2:
        found = _scan(net_value, n, q, lo, hi, tally, first_only=False)
    else:
        bounds = np.linspace(lo, hi, workers + 1).round().astype(int).tolist()
        jobs = [(net_value, n, q, a, b, word_width, strict) for a, b in zip(bounds, bounds[1:]) if b > a]
        found = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part, comparisons, enumerated, word_ops in pool.map(_scan_worker, jobs):
                found.extend(part)
                tally.subnetwork_comparisons += comparisons
                tally.candidates_enumerated += enumerated
                tally.words.word_ops += word_ops
        found.sort()
    return [NodeSet(m, n) for m in found], tally


def search_first(n_net: Network, q: int, *, word_width: int = DEFAULT_WORD_WIDTH,
                 strict: bool = False) -> tuple[NodeSet | None, ComparisonTally]:
    """The lexicographically first ``q``-clique, stopping as soon as it is found."""
    n = n_net.order
    _check_q(n, q)
    tally = _new_tally(word_width, strict)
    found = _scan(n_net.bits.value, n, q, 0, binomial(n, q), tally, first_only=True)
    return (NodeSet(found[0], n) if found else None), tally


def max_clique(n_net: Network, *, word_width: int = DEFAULT_WORD_WIDTH,
               strict: bool = False) -> tuple[int, NodeSet, ComparisonTally]:
    """Largest clique size with its first witness, trying ``q = n, n-1, ..., 1``."""
    total = _new_tally(word_width, strict)
    for q in range(n_net.order, 0, -1):
        witness, tally = search_first(n_net, q, word_width=word_width, strict=strict)
        total = total.merge(tally)
        if witness is not None:
            return q, witness, total
    raise AssertionError("unreachable: every node is a 1-clique")


# -- instance generation -------------------------------------------------------

def _background(n: int, density: float, seed: int) -> np.ndarray:
    """Symmetric boolean matrix with one uniform draw per upper-triangle cell, row-major."""
    rng = np.random.Generator(np.random.PCG64(seed))
    upper = np.triu_indices(n, k=1)
    draws = rng.random(len(upper[0])) < density
    m = np.eye(n, dtype=bool)
    m[upper] = draws
    m.T[upper] = draws
    return m


def _network_from_matrix(m: np.ndarray) -> Network:
    n = m.shape[0]
    bits = "".join("1" if v else "0" for v in m.ravel().tolist())
    return Network(n, FlatBits.from_string(bits))


def plant_clique(spec: PlantSpec) -> Network:
    """Seeded random network with every pair inside ``spec.members`` forced adjacent."""
    m = _background(spec.order, spec.density, spec.seed)
    idx = np.array(spec.members.members) - 1
    m[np.ix_(idx, idx)] = True
    return _network_from_matrix(m)


def random_network(n: int, density: float, seed: int) -> Network:
    """Seeded random network with no planted structure."""
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density {density} outside [0, 1]")
    return _network_from_matrix(_background(n, density, seed))


# -- oracle --------------------------------------------------------------------

def naive_cliques(adjacency: Sequence[Sequence[int]], q: int) -> list[tuple[int, ...]]:
    """Reference clique finder: checks every pair of every candidate directly.

    Works on a plain nested-list adjacency matrix and never touches bit
    strings. Returns 1-based member tuples in lexicographic order.
    """
    n = len(adjacency)
    result = []
    for candidate in itertools.combinations(range(n), q):
        ok = True
        for a in range(len(candidate)):
            for b in range(a + 1, len(candidate)):
                if not adjacency[candidate[a]][candidate[b]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            result.append(tuple(i + 1 for i in candidate))
    return result


def findings_dict(order: int, q: int, found: Iterable[NodeSet], tally: ComparisonTally) -> dict:
    """The JSON-ready findings record."""
    return {
        "order": order,
        "q": q,
        "found": [list(s.members) for s in found],
        "tally": tally.to_dict(),
        "strict_mode": tally.words.strict,
        "word_width": tally.words.word_width,
    }
