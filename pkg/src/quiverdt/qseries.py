"""Exact truncated multivariate power series with integer coefficients.

A :class:`QSeries` stores the coefficients of a series truncated by a
grading vector: a monomial ``prod(v_i ** e_i)`` has grade ``sum(w_i * e_i)``
and is kept only when ``0 <= grade <= order``.  Individual exponents may be
negative (Laurent directions such as ``x**-1`` in MacMahon factors) as long
as the grade stays non-negative, which is what makes truncated products
well defined.

Half-integer exponents are handled by the caller through a doubled
variable (``q = qh**2``); :func:`format_terms` knows how to print it back.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping


class QSeriesError(ValueError):
    pass


class NonUnitConstantTerm(QSeriesError):
    """Inversion requested for a series whose constant term is not +-1."""


class ConeViolation(QSeriesError):
    """A monomial or substitution leaves the truncation cone."""


class Mono:
    """A signed monomial ``sign * prod(vars[i] ** exps[i])``."""

    __slots__ = ("sign", "exps")

    def __init__(self, sign: int, exps: tuple[int, ...]):
        if sign not in (1, -1):
            raise QSeriesError("monomial sign must be +1 or -1")
        self.sign = sign
        self.exps = tuple(exps)

    def __repr__(self) -> str:
        return f"Mono({self.sign}, {self.exps})"


def _add_exps(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


class QSeries:
    """Truncated multivariate integer power series."""

    __slots__ = ("vars", "order", "grading", "coeffs")

    def __init__(
        self,
        vars: tuple[str, ...],
        order: int,
        coeffs: Mapping[tuple[int, ...], int] | None = None,
        grading: tuple[int, ...] | None = None,
    ):
        self.vars = tuple(vars)
        if order < 0:
            raise QSeriesError("order must be non-negative")
        self.order = order
        self.grading = tuple(grading) if grading is not None else (1,) * len(self.vars)
        if len(self.grading) != len(self.vars):
            raise QSeriesError("grading length must match variable count")
        clean: dict[tuple[int, ...], int] = {}
        for exps, c in (coeffs or {}).items():
            if c == 0:
                continue
            if not isinstance(c, int):
                raise QSeriesError(f"coefficient {c!r} is not an integer")
            exps = tuple(exps)
            if len(exps) != len(self.vars):
                raise QSeriesError("exponent vector length mismatch")
            g = self.grade(exps)
            if g < 0:
                raise ConeViolation(f"monomial {exps} has negative grade {g}")
            if g <= order:
                clean[exps] = c
        self.coeffs = clean

    # -- basics ---------------------------------------------------------

    def grade(self, exps: tuple[int, ...]) -> int:
        return sum(w * e for w, e in zip(self.grading, exps))

    def _like(self, coeffs: Mapping[tuple[int, ...], int]) -> "QSeries":
        return QSeries(self.vars, self.order, coeffs, self.grading)

    def _check_compatible(self, other: "QSeries") -> None:
        if self.vars != other.vars or self.grading != other.grading:
            raise QSeriesError("series have incompatible variables or grading")

    def coefficient(self, exps: tuple[int, ...]) -> int:
        return self.coeffs.get(tuple(exps), 0)

    def constant_term(self) -> int:
        return self.coeffs.get((0,) * len(self.vars), 0)

    def truncate(self, order: int) -> "QSeries":
        return QSeries(self.vars, min(order, self.order), self.coeffs, self.grading)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.vars == other.vars
            and self.grading == other.grading
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        raise TypeError("QSeries is not hashable")

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QSeries(self.vars, min(self.order, other.order), out, self.grading)

    def __neg__(self) -> "QSeries":
        return self._like({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other: "QSeries") -> "QSeries":
        self._check_compatible(other)
        order = min(self.order, other.order)
        out: dict[tuple[int, ...], int] = {}
        # bucket right factor by grade so products prune early
        by_grade: dict[int, list[tuple[tuple[int, ...], int]]] = {}
        for e, c in other.coeffs.items():
            by_grade.setdefault(other.grade(e), []).append((e, c))
        for e1, c1 in self.coeffs.items():
            g1 = self.grade(e1)
            for g2, terms in by_grade.items():
                if g1 + g2 > order:
                    continue
                for e2, c2 in terms:
                    e = _add_exps(e1, e2)
                    out[e] = out.get(e, 0) + c1 * c2
        return QSeries(self.vars, order, out, self.grading)

    def scale(self, k: int) -> "QSeries":
        return self._like({e: k * c for e, c in self.coeffs.items()})

    def inverse(self) -> "QSeries":
        """Multiplicative inverse, grade by grade; needs unit constant term
        and no non-constant monomials of grade zero (otherwise the grade
        filtration cannot drive the recursion)."""
        c0 = self.constant_term()
        if c0 not in (1, -1):
            raise NonUnitConstantTerm(f"constant term {c0} is not a unit in Z")
        zero_exps = (0,) * len(self.vars)
        for e in self.coeffs:
            if e != zero_exps and self.grade(e) == 0:
                raise ConeViolation(
                    f"cannot invert: non-constant monomial {e} has grade 0; "
                    "use a grading vector that weights it positively"
                )
        by_grade: dict[int, dict[tuple[int, ...], int]] = {}
        for e, c in self.coeffs.items():
            by_grade.setdefault(self.grade(e), {})[e] = c
        zero = (0,) * len(self.vars)
        inv: dict[tuple[int, ...], int] = {zero: c0}
        inv_by_grade: dict[int, dict[tuple[int, ...], int]] = {0: {zero: c0}}
        for g in range(1, self.order + 1):
            level: dict[tuple[int, ...], int] = {}
            for h in range(1, g + 1):
                for ea, ca in by_grade.get(h, {}).items():
                    for eb, cb in inv_by_grade.get(g - h, {}).items():
                        e = _add_exps(ea, eb)
                        level[e] = level.get(e, 0) - c0 * ca * cb
            level = {e: c for e, c in level.items() if c}
            if level:
                inv_by_grade[g] = level
                inv.update(level)
        return self._like(inv)

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result = QSeries.one(self.vars, self.order, self.grading)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(vars: tuple[str, ...], order: int, grading=None) -> "QSeries":
        return QSeries(vars, order, {}, grading)

    @staticmethod
    def one(vars: tuple[str, ...], order: int, grading=None) -> "QSeries":
        return QSeries(vars, order, {(0,) * len(vars): 1}, grading)

    @staticmethod
    def monomial(vars, order, exps, coeff=1, grading=None) -> "QSeries":
        return QSeries(vars, order, {tuple(exps): coeff}, grading)

    # -- io ---------------------------------------------------------------

    def to_json(self) -> dict:
        coeffs = [
            {"exp": list(e), "c": str(c)}
            for e, c in sorted(self.coeffs.items(), key=lambda ec: (self.grade(ec[0]), ec[0]))
        ]
        return {
            "vars": list(self.vars),
            "order": self.order,
            "grading": list(self.grading),
            "coeffs": coeffs,
        }

    @staticmethod
    def from_json(data: dict) -> "QSeries":
        coeffs = {tuple(item["exp"]): int(item["c"]) for item in data["coeffs"]}
        return QSeries(
            tuple(data["vars"]), int(data["order"]), coeffs, tuple(data["grading"])
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def __repr__(self) -> str:
        n = len(self.coeffs)
        return f"QSeries(vars={self.vars}, order={self.order}, {n} terms)"


# -- factor helpers ------------------------------------------------------


def binomial_factor(vars, order, exps, sign=1, power=1, grading=None) -> QSeries:
    """``(1 - sign*m)**power`` for a single monomial ``m`` and any integer
    power, expanded directly (geometric series for negative powers)."""
    one = QSeries.one(vars, order, grading)
    weights = one.grading
    g = sum(w * e for w, e in zip(weights, exps))
    if g < 0:
        raise ConeViolation(f"monomial {exps} has negative grade")
    if power >= 0:
        return (one - QSeries.monomial(vars, order, exps, sign, weights)) ** power
    if g == 0:
        raise ConeViolation(
            f"cannot invert (1 - m) for grade-0 monomial {exps}; "
            "choose a grading that weights it positively"
        )
    coeffs: dict[tuple[int, ...], int] = {}
    j = 0
    while j * g <= order:
        coeffs[tuple(j * e for e in exps)] = sign ** j
        j += 1
    geo = QSeries(vars, order, coeffs, weights)
    return geo ** (-power)


def macmahon(x: Mono | None, order: int, vars=("x", "q"), q: Mono | None = None,
             grading=None, power: int = 1) -> QSeries:
    """MacMahon-type product ``prod_{k>=1} (1 - X*Q**k)**(-k*power)``.

    ``X`` defaults to 1 (when ``x`` is None); ``Q`` defaults to the last
    variable.  Factors with grade beyond the truncation order are dropped.
    With a Laurent ``X`` the grading must weight every factor positively,
    e.g. grading (1, 2) on (x, q) for M(x**-1, q).
    """
    vars = tuple(vars)
    n = len(vars)
    if q is None:
        q = Mono(1, tuple(0 if i < n - 1 else 1 for i in range(n)))
    if x is None:
        x = Mono(1, (0,) * n)
    result = QSeries.one(vars, order, grading)
    weights = result.grading
    gq = sum(w * e for w, e in zip(weights, q.exps))
    gx = sum(w * e for w, e in zip(weights, x.exps))
    if gq <= 0:
        raise ConeViolation("q-monomial must have positive grade")
    k = 1
    while True:
        exps = tuple(xe + k * qe for xe, qe in zip(x.exps, q.exps))
        g = gx + k * gq
        if g < 0:
            raise ConeViolation(f"factor k={k} leaves the truncation cone")
        if g > order:
            break
        sign = x.sign * (q.sign ** k)
        result = result * binomial_factor(vars, order, exps, sign, -k * power, weights)
        k += 1
    return result


def euler_factor(vars, order, q: Mono | None = None, grading=None, power: int = 1) -> QSeries:
    """``prod_{k>=1} (1 - Q**k)**power`` (so ``power=-1`` is the partition series)."""
    vars = tuple(vars)
    n = len(vars)
    if q is None:
        q = Mono(1, tuple(0 if i < n - 1 else 1 for i in range(n)))
    result = QSeries.one(vars, order, grading)
    weights = result.grading
    gq = sum(w * e for w, e in zip(weights, q.exps))
    if gq <= 0:
        raise ConeViolation("q-monomial must have positive grade")
    k = 1
    while k * gq <= order:
        exps = tuple(k * e for e in q.exps)
        result = result * binomial_factor(vars, order, exps, q.sign ** k, power, weights)
        k += 1
    return result


# -- substitution --------------------------------------------------------


class Substitution:
    """Variable -> signed monomial map between series rings.

    The image of each source variable must have target grade at least the
    source weight; a source variable that ever occurs with a negative
    exponent must map to a monomial of grade exactly its weight.  Together
    these guarantee that the image of any source monomial has grade at
    least the source grade, so truncation at the source order stays sound.
    """

    def __init__(self, source_vars, target_vars, images: Mapping[str, Mono],
                 target_grading=None):
        self.source_vars = tuple(source_vars)
        self.target_vars = tuple(target_vars)
        self.target_grading = (
            tuple(target_grading) if target_grading is not None else (1,) * len(self.target_vars)
        )
        self.images = dict(images)
        for v in self.source_vars:
            if v not in self.images:
                raise QSeriesError(f"no image for variable {v!r}")

    def image_grade(self, var: str) -> int:
        m = self.images[var]
        return sum(w * e for w, e in zip(self.target_grading, m.exps))


def substitute(sub: Substitution, a: QSeries) -> QSeries:
    if a.vars != sub.source_vars:
        raise QSeriesError("substitution source variables do not match series")
    grades = {v: sub.image_grade(v) for v in a.vars}
    for i, (v, w) in enumerate(zip(a.vars, a.grading)):
        if grades[v] < w:
            raise ConeViolation(f"image of {v!r} has grade {grades[v]} < weight {w}")
        if grades[v] > w and any(e[i] < 0 for e in a.coeffs):
            raise ConeViolation(
                f"{v!r} occurs with negative exponents but maps to grade {grades[v]} > {w}"
            )
    nt = len(sub.target_vars)
    out: dict[tuple[int, ...], int] = {}
    for exps, c in a.coeffs.items():
        image = [0] * nt
        sign = 1
        for e, v in zip(exps, a.vars):
            if e == 0:
                continue
            m = sub.images[v]
            if m.sign < 0 and e % 2:
                sign = -sign
            for i, me in enumerate(m.exps):
                image[i] += e * me
        key = tuple(image)
        g = sum(w * e for w, e in zip(sub.target_grading, key))
        if g < 0:
            raise ConeViolation(f"image of {exps} has negative grade")
        if g <= a.order:
            out[key] = out.get(key, 0) + sign * c
    return QSeries(sub.target_vars, a.order, out, sub.target_grading)


# -- comparison and printing ---------------------------------------------


def compare(a: QSeries, b: QSeries, order: int | None = None):
    """Coefficientwise comparison; returns None on equality, else the first
    mismatch ``(exps, coeff_a, coeff_b)`` in (grade, lex) order."""
    if a.vars != b.vars:
        raise QSeriesError("cannot compare series in different variables")
    if order is None:
        order = min(a.order, b.order)
    order = min(order, a.order, b.order)
    keys = set(a.coeffs) | set(b.coeffs)
    for e in sorted(keys, key=lambda e: (a.grade(e), e)):
        if a.grade(e) > order:
            continue
        ca, cb = a.coeffs.get(e, 0), b.coeffs.get(e, 0)
        if ca != cb:
            return (e, ca, cb)
    return None


def format_terms(a: QSeries, half_vars: Iterable[str] = ()) -> str:
    """Aligned text table of coefficients, sorted by grade then lex.

    Variables named in ``half_vars`` are printed at half their stored
    exponent (the doubled-variable encoding of half-integer powers).
    """
    half = set(half_vars)
    lines = []
    for e in sorted(a.coeffs, key=lambda e: (a.grade(e), e)):
        parts = []
        for v, k in zip(a.vars, e):
            if k == 0:
                continue
            if v in half:
                shown = Fraction(k, 2)
                parts.append(f"{v}^{shown}" if shown != 1 else v)
            else:
                parts.append(f"{v}^{k}" if k != 1 else v)
        mono = "*".join(parts) if parts else "1"
        lines.append(f"{mono:>24}  {a.coeffs[e]}")
    return "\n".join(lines) if lines else "(zero series)"


def coefficients_in_single_var(a: QSeries) -> list[int]:
    """Dense coefficient list [c_0, ..., c_order] for a one-variable series."""
    if len(a.vars) != 1:
        raise QSeriesError("series is not univariate")
    out = [0] * (a.order + 1)
    for (e,), c in a.coeffs.items():
        if 0 <= e <= a.order:
            out[e] = c
    return out
