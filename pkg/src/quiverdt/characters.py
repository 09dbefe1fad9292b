"""Vacuum characters of W-algebras from shift matrices and pyramids.

A shift matrix with non-negative subdiagonal entries determines, for each
family index t, a right-aligned pyramid: m even rows then n odd rows whose
lengths are t plus the cumulative shifts.  Every ordered pair of rows
contributes strong generators whose conformal weights are read off from
column positions (weight = half the column-difference grading plus one),
and the character is the usual product over generators: a geometric factor
per even generator, a (1 + q^w)-type factor per odd one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qseries import QSeries, binomial_factor

EVEN, ODD = 0, 1


class CharacterError(ValueError):
    pass


class NonPositiveWeight(CharacterError):
    pass


@dataclass(frozen=True)
class PyramidRow:
    parity: int  # EVEN or ODD
    left: int  # leftmost column index
    length: int

    @property
    def right(self) -> int:
        return self.left + self.length - 1


@dataclass(frozen=True)
class Pyramid:
    rows: tuple[PyramidRow, ...]

    def __post_init__(self):
        for r in self.rows:
            if r.length < 1:
                raise CharacterError("rows must have positive length")
            if r.parity not in (EVEN, ODD):
                raise CharacterError("row parity must be 0 (even) or 1 (odd)")


def single_row_pyramid(length: int, parity: int = EVEN) -> Pyramid:
    return Pyramid((PyramidRow(parity, 1, length),))


def pyramid_from_shift(shift, t: int) -> Pyramid:
    """Right-aligned pyramid for a shift matrix at family index t >= 0.

    Row i (1-indexed) has length t plus the cumulative subdiagonal shift
    below it; the first m rows are even, the last n odd.  Rows of length
    zero (possible only at t = 0) are dropped.

    Mixed even/odd pyramids whose blocks are not rectangles exercise an
    ordering convention between the blocks that only the rectangular case
    pins down, so they are flagged with a warning.
    """
    if t < 0:
        raise CharacterError("family index must be non-negative")
    if shift.m >= 1 and shift.n >= 1 and any(s != 0 for s in shift.sub):
        import warnings

        warnings.warn(
            "mixed even/odd pyramid with non-rectangular blocks: the "
            "inter-block ordering convention is untested",
            stacklevel=2,
        )
    total = shift.m + shift.n
    lengths = []
    for i in range(1, total + 1):
        lengths.append(t + sum(shift.sub[i - 1 :]))
    right = max(lengths, default=0)
    rows = []
    for i, ell in enumerate(lengths):
        if ell == 0:
            continue
        parity = EVEN if i < shift.m else ODD
        rows.append(PyramidRow(parity, right - ell + 1, ell))
    return Pyramid(tuple(rows))


WeightMultiset = dict[tuple[int, int], int]  # (conformal weight, parity) -> multiplicity


def generator_weights(p: Pyramid) -> WeightMultiset:
    """Row-pair rule: the ordered pair (i, j) contributes min(len_i, len_j)
    generators of weights right_j - left_i - u + 2 for u = 1..min, with
    parity the XOR of the row parities."""
    out: WeightMultiset = {}
    for ri in p.rows:
        for rj in p.rows:
            parity = ri.parity ^ rj.parity
            for u in range(1, min(ri.length, rj.length) + 1):
                w = rj.right - ri.left - u + 2
                if w < 1:
                    raise NonPositiveWeight(
                        f"rows at columns [{ri.left},{ri.right}] and "
                        f"[{rj.left},{rj.right}] produce weight {w}"
                    )
                key = (w, parity)
                out[key] = out.get(key, 0) + 1
    return out


def generator_count(ws: WeightMultiset) -> int:
    return sum(ws.values())


def character(ws: WeightMultiset, order: int) -> QSeries:
    """Vacuum character of a strong-generator weight multiset: each even
    generator of weight w contributes prod_{k>=0} (1 - q^(w+k))^-1, each odd
    one prod_{k>=0} (1 + q^(w+k))."""
    result = QSeries.one(("q",), order)
    for (w, parity), mult in sorted(ws.items()):
        k = 0
        while w + k <= order:
            if parity == EVEN:
                result = result * binomial_factor(("q",), order, (w + k,), 1, -mult)
            else:
                result = result * binomial_factor(("q",), order, (w + k,), -1, mult)
            k += 1
    return result


def character_from_shift(shift, t: int, order: int) -> QSeries:
    return character(generator_weights(pyramid_from_shift(shift, t)), order)


# -- closed forms of the displayed character figures -------------------------


def figure_series(kind: str, r: int, order: int) -> QSeries:
    """The displayed vacuum-character product formulas, with factors that do
    not depend on the inner product index read globally.

    kind: "glr-principal", "gl2-s0", "gl2-s1", "gl2-s2", "glrr".
    """
    q = ("q",)
    one = QSeries.one(q, order)

    def pochhammer(w: int, power: int, sign: int = 1) -> QSeries:
        # prod_{k>=1} (1 - sign*q^(k + w - 1))**power
        out = one
        k = 1
        while k + w - 1 <= order:
            out = out * binomial_factor(q, order, (k + w - 1,), sign, power)
            k += 1
        return out

    if kind == "glr-principal":
        out = one
        for j in range(r):
            out = out * pochhammer(j + 1, -1)
        return out
    if kind == "gl2-s0":
        out = one
        for j in range(r):
            out = out * pochhammer(j + 1, -4)
        return out
    if kind == "gl2-s1":
        out = pochhammer(1, 1) * pochhammer(r, 2)
        for j in range(r):
            out = out * pochhammer(j + 1, -4)
        return out
    if kind == "gl2-s2":
        out = pochhammer(1, 1) * pochhammer(2, 1) * pochhammer(r, 2) * pochhammer(r + 1, -2)
        for j in range(r):
            out = out * pochhammer(j + 1, -4)
        return out
    if kind == "glrr":
        out = one
        for j in range(r):
            out = out * pochhammer(j + 1, -2) * pochhammer(j + 1, 2, sign=-1)
        return out
    raise CharacterError(f"unknown figure kind {kind!r}")


def figure_pyramid(kind: str, r: int):
    """Pyramid whose row data matches the figure annotations for rank r."""
    if kind == "glr-principal":
        return single_row_pyramid(r)
    if kind == "gl2-s0":
        return Pyramid((PyramidRow(EVEN, 1, r), PyramidRow(EVEN, 1, r)))
    if kind == "gl2-s1":  # rows (r, r-1), offset 1
        rows = [PyramidRow(EVEN, 1, r)]
        if r - 1 >= 1:
            rows.append(PyramidRow(EVEN, 2, r - 1))
        return Pyramid(tuple(rows))
    if kind == "gl2-s2":  # rows (r+1, r-1), offset 2
        rows = [PyramidRow(EVEN, 1, r + 1)]
        if r - 1 >= 1:
            rows.append(PyramidRow(EVEN, 3, r - 1))
        return Pyramid(tuple(rows))
    if kind == "glrr":
        return Pyramid((PyramidRow(EVEN, 1, r), PyramidRow(ODD, 1, r)))
    raise CharacterError(f"unknown figure kind {kind!r}")


# -- stable large-rank limits -------------------------------------------------


def limit_series(m: int, n: int, sub: tuple[int, ...], order: int) -> QSeries:
    """Closed-form large-rank limit of the vacuum characters for the
    supported shift data: gl2 with subdiagonal (0), (1), (2), and gl(1|1)
    with subdiagonal (0)."""
    q = ("q",)
    if (m, n) == (2, 0) and sub in ((0,), (1,), (2,)):
        out = macmahon_power(order, 4)
        s = sub[0]
        for w in range(1, s + 1):
            k = 1
            while k + w - 1 <= order:
                out = out * binomial_factor(q, order, (k + w - 1,), 1, 1)
                k += 1
        return out
    if (m, n) == (1, 1) and sub == (0,):
        # prod_k (1 + q^k)^(2k) (1 - q^k)^(-2k)
        out = QSeries.one(q, order)
        for k in range(1, order + 1):
            out = out * binomial_factor(q, order, (k,), -1, 2 * k)
            out = out * binomial_factor(q, order, (k,), 1, -2 * k)
        return out
    raise CharacterError(f"no stored closed-form limit for m={m}, n={n}, sub={sub}")


def macmahon_power(order: int, power: int) -> QSeries:
    """prod_k (1 - q^k)^(-power*k) as a series in q."""
    out = QSeries.one(("q",), order)
    for k in range(1, order + 1):
        out = out * binomial_factor(("q",), order, (k,), 1, -power * k)
    return out


@dataclass
class LimitReport:
    order: int
    t_used: int
    equal: bool
    mismatch: tuple | None


def limit_check(shift, order: int, t_max: int) -> LimitReport:
    """Compare the character at a large family index against the stored
    closed-form limit.  Weight stabilization needs t_max at least the order
    plus the total shift."""
    total_shift = sum(shift.sub)
    if t_max < order + total_shift:
        raise CharacterError(
            f"t_max={t_max} too small for stabilization (need >= {order + total_shift})"
        )
    got = character_from_shift(shift, t_max, order)
    want = limit_series(shift.m, shift.n, shift.sub, order)
    from .qseries import compare

    mismatch = compare(got, want, order)
    return LimitReport(order=order, t_used=t_max, equal=mismatch is None, mismatch=mismatch)
