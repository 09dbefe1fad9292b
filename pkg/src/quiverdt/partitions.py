"""Torus-fixed-point enumerators: partitions, tuples, nested chains, plane
partitions (plain, cyclically colored, pit-constrained), conifold pyramid
configurations, and the blowup lattice sum.

All series are produced by explicit enumeration of the counted objects and
returned as exact integer :class:`~quiverdt.qseries.QSeries`.  Counts are
unsigned; fixed-point signs belong to the closed-form side and enter only
through variable substitutions (see quiverdt.checks).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .qseries import QSeries


class OrderTooLarge(ValueError):
    pass


PLANE_PARTITION_MAX_ORDER = 14
PYRAMID_MAX_ORDER = 12


# -- linear partitions -------------------------------------------------------


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n with parts bounded by max_part, largest part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    return sum(1 for _ in partitions_of(n))


def partition_series(order: int) -> QSeries:
    """Coefficient of q^n counts partitions of n."""
    coeffs = {(n,): partition_count(n) for n in range(order + 1)}
    return QSeries(("q",), order, coeffs)


def tuple_series(r: int, order: int) -> QSeries:
    """r-tuples of partitions graded by total size (r-fold convolution)."""
    if r < 0:
        raise ValueError("rank must be non-negative")
    counts = [partition_count(n) for n in range(order + 1)]
    out = [1] + [0] * order
    for _ in range(r):
        out = [
            sum(out[k] * counts[n - k] for k in range(n + 1)) for n in range(order + 1)
        ]
    return QSeries(("q",), order, {(n,): out[n] for n in range(order + 1)})


def _contained_partitions(outer: tuple[int, ...], budget: int) -> Iterator[tuple[int, ...]]:
    """Partitions fitting inside ``outer`` (componentwise) with size <= budget."""

    def rec(i: int, prev: int, left: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if i >= len(outer):
            return
        cap = min(outer[i], prev, left)
        for part in range(cap, 0, -1):
            for rest in rec(i + 1, part, left - part):
                yield (part,) + rest

    yield from rec(0, outer[0] if outer else 0, budget)


def nested_chains(r: int, order: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Chains lambda^1 contains ... contains lambda^r with total size <= order."""

    def rec(level: int, outer: tuple[int, ...], left: int):
        if level == r:
            yield ()
            return
        if level == 0:
            candidates: list[tuple[int, ...]] = []
            for n in range(left + 1):
                candidates.extend(partitions_of(n))
        else:
            candidates = list(_contained_partitions(outer, left))
        for lam in candidates:
            size = sum(lam)
            for rest in rec(level + 1, lam, left - size):
                yield (lam,) + rest

    yield from rec(0, (), order)


def nested_series(r: int, order: int) -> QSeries:
    """Containment chains of r partitions graded by total size."""
    if r < 1:
        raise ValueError("rank must be positive")
    coeffs: dict[tuple[int], int] = {}
    for chain in nested_chains(r, order):
        n = sum(sum(lam) for lam in chain)
        coeffs[(n,)] = coeffs.get((n,), 0) + 1
    return QSeries(("q",), order, coeffs)


# -- plane partitions ---------------------------------------------------------


def plane_partitions_upto(
    order: int, pit: tuple[int, int] | None = None
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All plane partitions of total size <= order, as tuples of rows.

    A pit at (M, N) forces entry (i, j) to vanish whenever i > M and j > N
    (1-indexed); (M, 0) therefore means at most M rows.
    """

    def row_bound(i: int) -> int | None:  # max number of parts in row i (1-indexed)
        if pit is None:
            return None
        m, n = pit
        if i > m:
            return n
        return None

    def rec(i: int, outer: tuple[int, ...], left: int):
        yield ()
        if left == 0:
            return
        if i == 1:
            candidates: list[tuple[int, ...]] = []
            for n in range(1, left + 1):
                candidates.extend(partitions_of(n))
        else:
            candidates = [
                lam for lam in _contained_partitions(outer, left) if lam
            ]
        bound = row_bound(i)
        for lam in candidates:
            if bound is not None and len(lam) > bound:
                continue
            size = sum(lam)
            for rest in rec(i + 1, lam, left - size):
                yield (lam,) + rest

    if pit is not None:
        m, n = pit
        if m < 0 or n < 0 or (m == 0 and n == 0):
            raise ValueError("pit coordinates must be positive, or one of them zero")
        if m == 0:
            # symmetric convention: at most n columns; transpose of (n, 0)
            for pp in plane_partitions_upto(order, (n, 0)):
                yield _transpose(pp)
            return
    yield from rec(1, (), order)


def _transpose(rows: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    if not rows:
        return ()
    width = len(rows[0])
    out = []
    for j in range(width):
        col = tuple(row[j] for row in rows if len(row) > j)
        out.append(col)
    return tuple(out)


def plane_partition_series(
    order: int, colors: int | None = None, pit: tuple[int, int] | None = None
) -> QSeries:
    """Plane partitions of total size <= order.

    Uncolored: a series in q.  Colored with modulus m: a series in
    q_0..q_{m-1} where the stack at (i, j) contributes its height to the
    color (i - j) mod m.
    """
    if order > PLANE_PARTITION_MAX_ORDER:
        raise OrderTooLarge(
            f"order {order} exceeds the supported envelope {PLANE_PARTITION_MAX_ORDER}"
        )
    if colors is None:
        coeffs: dict[tuple[int, ...], int] = {}
        for pp in plane_partitions_upto(order, pit):
            n = sum(sum(row) for row in pp)
            coeffs[(n,)] = coeffs.get((n,), 0) + 1
        return QSeries(("q",), order, coeffs)
    m = colors
    if m < 1:
        raise ValueError("color modulus must be positive")
    vars = tuple(f"q{c}" for c in range(m))
    coeffs = {}
    for pp in plane_partitions_upto(order, pit):
        weight = [0] * m
        for i, row in enumerate(pp, start=1):
            for j, height in enumerate(row, start=1):
                weight[(i - j) % m] += height
        key = tuple(weight)
        coeffs[key] = coeffs.get(key, 0) + 1
    return QSeries(vars, order, coeffs)


# -- conifold pyramid configurations -------------------------------------------


def _pyramid_atoms(layers: int):
    """Atom poset of the two-colored pyramid arrangement.

    Layer k (k = 0 is the apex, color k mod 2) holds a grid of atoms that
    alternately splits in the two horizontal directions; every atom lists
    the atoms of the previous layer that must be present before it can be
    added (interior atoms have two, edge atoms one).  Atoms are listed
    layer-major, so supports always precede their atom.
    """
    positions: list[list[tuple[int, int]]] = [[(0, 0)]]
    for k in range(1, layers):
        nxt: set[tuple[int, int]] = set()
        for (x, y) in positions[-1]:
            if k % 2 == 1:  # split along x
                nxt.add((x - 1, y))
                nxt.add((x + 1, y))
            else:  # split along y
                nxt.add((x, y - 1))
                nxt.add((x, y + 1))
        positions.append(sorted(nxt))
    atoms: list[tuple[int, tuple[int, int]]] = []
    index: dict[tuple[int, tuple[int, int]], int] = {}
    supports: list[list[int]] = []
    for k, layer in enumerate(positions):
        prev_set = set(positions[k - 1]) if k else set()
        for pos in layer:
            index[(k, pos)] = len(atoms)
            atoms.append((k, pos))
            if k == 0:
                supports.append([])
                continue
            x, y = pos
            cand = [(x - 1, y), (x + 1, y)] if k % 2 == 1 else [(x, y - 1), (x, y + 1)]
            supports.append([index[(k - 1, c)] for c in cand if c in prev_set])
    return atoms, supports


def pyramid_configurations(order: int) -> Iterator[tuple[int, int]]:
    """Yields (color-0 count, color-1 count) over all downward-closed stone
    configurations with at most ``order`` stones.

    An atom at layer k needs a chain of k supporting atoms above it, so
    layers beyond order-1 can never be reached within the stone budget.
    """
    atoms, supports = _pyramid_atoms(max(order, 1))
    n = len(atoms)
    chosen = [False] * n

    def rec(i: int, used: int, n0: int, n1: int):
        if i == n or used == order:
            yield (n0, n1)
            return
        yield from rec(i + 1, used, n0, n1)
        if all(chosen[s] for s in supports[i]):
            chosen[i] = True
            if atoms[i][0] % 2 == 0:
                yield from rec(i + 1, used + 1, n0 + 1, n1)
            else:
                yield from rec(i + 1, used + 1, n0, n1 + 1)
            chosen[i] = False

    yield from rec(0, 0, 0, 0)


def pyramid_series(order: int) -> QSeries:
    """Two-colored pyramid configurations weighted q0^(color-0) q1^(color-1)."""
    if order > PYRAMID_MAX_ORDER:
        raise OrderTooLarge(f"order {order} exceeds the supported envelope {PYRAMID_MAX_ORDER}")
    coeffs: dict[tuple[int, int], int] = {}
    for n0, n1 in pyramid_configurations(order):
        key = (n0, n1)
        coeffs[key] = coeffs.get(key, 0) + 1
    return QSeries(("q0", "q1"), order, coeffs)


# -- blowup lattice sum ---------------------------------------------------------


def blowup_series(order: int, k_max: int | None = None) -> QSeries:
    """Sum over an integer k and a pair of partitions, weighted
    q^(k^2/2 + |lambda_0| + |lambda_1|).

    The lattice ranges over |k| <= k_max (by default every k whose q^(k^2/2)
    weight fits the order).  Returned in the doubled variable qh with
    qh^2 = q, so exponents stay integral; grade bound is 2*order in qh.
    """
    coeffs: dict[tuple[int], int] = {}
    k = 0
    while k * k <= 2 * order and (k_max is None or k <= k_max):
        multiplicity = 1 if k == 0 else 2  # k and -k
        pair_budget = (2 * order - k * k) // 2
        for n0 in range(pair_budget + 1):
            for n1 in range(pair_budget - n0 + 1):
                weight = k * k + 2 * (n0 + n1)  # exponent of qh
                count = partition_count(n0) * partition_count(n1) * multiplicity
                coeffs[(weight,)] = coeffs.get((weight,), 0) + count
        k += 1
    return QSeries(("qh",), 2 * order, coeffs)
