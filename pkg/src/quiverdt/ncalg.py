"""Path-algebra arithmetic: quivers, potentials, cyclic derivatives, relation
ideals, bounded-degree ideal membership, and the Euler form.

Word convention
---------------
A path is stored as the sequence of arrows in traversal order: in a word
``(a, b)`` the arrow ``a`` is traversed first, so composability means
``target(a) == source(b)``, and a numeric representation evaluates the word
as ``M(b) @ M(a)``.  Potentials are formal sums of cyclic words (closed
paths up to rotation); the canonical representative of a cyclic word is its
lexicographically least rotation in the quiver's declared arrow order.

All coefficients are exact rationals; there is no floating point anywhere
in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg


class NCAlgError(ValueError):
    pass


class UnknownArrow(NCAlgError):
    pass


class BoundTooSmall(NCAlgError):
    pass


class ShapeMismatch(NCAlgError):
    pass


# -- quiver ----------------------------------------------------------------


@dataclass(frozen=True)
class Arrow:
    name: str
    src: str
    tgt: str
    marked: bool = False


@dataclass(frozen=True)
class Quiver:
    """Vertices and arrows; both orders are part of the value (they fix the
    canonical ordering of paths and cyclic words)."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise NCAlgError("duplicate vertex ids")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise NCAlgError("duplicate arrow names")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.src not in vs or a.tgt not in vs:
                raise NCAlgError(f"arrow {a.name} has endpoint outside the vertex set")

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise UnknownArrow(name)

    def has_arrow(self, name: str) -> bool:
        return any(a.name == name for a in self.arrows)

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise UnknownArrow(name)

    def vertex_index(self, v: str) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise NCAlgError(f"unknown vertex {v!r}") from None

    def unmarked_arrows(self) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if not a.marked)

    def arrows_from(self, v: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.src == v)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [
                {"name": a.name, "src": a.src, "tgt": a.tgt, "marked": a.marked}
                for a in self.arrows
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "Quiver":
        return Quiver(
            tuple(data["vertices"]),
            tuple(
                Arrow(d["name"], d["src"], d["tgt"], bool(d.get("marked", False)))
                for d in data["arrows"]
            ),
        )

    def to_dot(self) -> str:
        lines = ["digraph quiver {"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for a in self.arrows:
            style = ' [label="%s", style=dashed]' % a.name if a.marked else f' [label="{a.name}"]'
            lines.append(f'  "{a.src}" -> "{a.tgt}"{style};')
        lines.append("}")
        return "\n".join(lines)


# -- paths and noncommutative polynomials -----------------------------------


@dataclass(frozen=True)
class Path:
    """A word of arrows in traversal order, or a trivial path at a vertex."""

    arrows: tuple[str, ...]
    base: str | None = None  # vertex of a length-zero path

    def __post_init__(self):
        if len(self.arrows) == 0 and self.base is None:
            raise NCAlgError("length-zero path needs a base vertex")
        if len(self.arrows) > 0 and self.base is not None:
            raise NCAlgError("nontrivial path must not carry a base vertex")

    def __len__(self) -> int:
        return len(self.arrows)

    def source(self, q: Quiver) -> str:
        return self.base if self.base is not None else q.arrow(self.arrows[0]).src

    def target(self, q: Quiver) -> str:
        return self.base if self.base is not None else q.arrow(self.arrows[-1]).tgt

    def validate(self, q: Quiver) -> None:
        if self.base is not None:
            q.vertex_index(self.base)
            return
        for cur, nxt in zip(self.arrows, self.arrows[1:]):
            if q.arrow(cur).tgt != q.arrow(nxt).src:
                raise NCAlgError(f"word {self.arrows} is not composable at {cur}->{nxt}")

    def sort_key(self, q: Quiver):
        if self.base is not None:
            return (0, (q.vertex_index(self.base),))
        return (len(self.arrows), tuple(q.arrow_index(a) for a in self.arrows))

    def __str__(self) -> str:
        if self.base is not None:
            return f"e_{self.base}"
        return "*".join(self.arrows)


def trivial_path(v: str) -> Path:
    return Path((), v)


def word(*names: str) -> Path:
    return Path(tuple(names))


class NCPoly:
    """Formal rational linear combination of paths."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Path, Fraction] | None = None):
        clean: dict[Path, Fraction] = {}
        for p, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                clean[p] = c
        self.terms = clean

    @staticmethod
    def zero() -> "NCPoly":
        return NCPoly()

    @staticmethod
    def from_path(p: Path, coeff=1) -> "NCPoly":
        return NCPoly({p: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, Fraction(0)) + c
        return NCPoly(out)

    def __neg__(self) -> "NCPoly":
        return NCPoly({p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def scale(self, k) -> "NCPoly":
        k = Fraction(k)
        return NCPoly({p: k * c for p, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        raise TypeError("NCPoly is not hashable")

    def max_length(self) -> int:
        return max((len(p) for p in self.terms), default=0)

    def render(self, q: Quiver | None = None) -> str:
        if not self.terms:
            return "0"
        items = self.terms.items()
        if q is not None:
            items = sorted(items, key=lambda pc: pc[0].sort_key(q))
        parts = []
        for p, c in items:
            if c == 1:
                parts.append(str(p))
            elif c == -1:
                parts.append(f"-{p}")
            else:
                parts.append(f"{c}*{p}")
        out = parts[0]
        for piece in parts[1:]:
            out += " - " + piece[1:] if piece.startswith("-") else " + " + piece
        return out

    def __repr__(self) -> str:
        return f"NCPoly({self.render()})"


def compose(q: Quiver, a: Path, b: Path) -> Path | None:
    """Concatenation ``a`` then ``b``; None when the endpoints do not match
    (the product is zero in the path algebra)."""
    if a.target(q) != b.source(q):
        return None
    if a.base is not None:
        return b
    if b.base is not None:
        return a
    return Path(a.arrows + b.arrows)


def nc_mul(q: Quiver, a: NCPoly, b: NCPoly) -> NCPoly:
    out: dict[Path, Fraction] = {}
    for pa, ca in a.terms.items():
        for pb, cb in b.terms.items():
            p = compose(q, pa, pb)
            if p is None:
                continue
            out[p] = out.get(p, Fraction(0)) + ca * cb
    return NCPoly(out)


# -- potentials --------------------------------------------------------------


def _canonical_rotation(q: Quiver, names: tuple[str, ...]) -> tuple[str, ...]:
    keys = [tuple(q.arrow_index(a) for a in names[i:] + names[:i]) for i in range(len(names))]
    best = min(range(len(names)), key=lambda i: keys[i])
    return names[best:] + names[:best]


@dataclass(frozen=True)
class CyclicWord:
    """Closed path up to rotation; stored as the canonical rotation."""

    names: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.names)

    def __str__(self) -> str:
        return "*".join(self.names)


class Potential:
    """Rational combination of cyclic words on a quiver."""

    __slots__ = ("quiver", "terms")

    def __init__(self, quiver: Quiver, terms: Mapping[CyclicWord, Fraction]):
        self.quiver = quiver
        clean: dict[CyclicWord, Fraction] = {}
        for w, c in terms.items():
            c = Fraction(c)
            if c != 0:
                clean[w] = c
        self.terms = clean

    @staticmethod
    def from_words(quiver: Quiver, terms: Iterable[tuple[object, Sequence[str]]]) -> "Potential":
        """Build from ``(coefficient, arrow-name sequence)`` pairs.

        Each word must be a closed composable path in traversal order.
        """
        acc: dict[CyclicWord, Fraction] = {}
        for coeff, names in terms:
            names = tuple(names)
            if not names:
                raise NCAlgError("empty cyclic word")
            p = Path(names)
            p.validate(quiver)
            if p.source(quiver) != p.target(quiver):
                raise NCAlgError(f"word {names} is not closed")
            w = CyclicWord(_canonical_rotation(quiver, names))
            acc[w] = acc.get(w, Fraction(0)) + Fraction(coeff)
        return Potential(quiver, acc)

    @staticmethod
    def zero(quiver: Quiver) -> "Potential":
        return Potential(quiver, {})

    def __add__(self, other: "Potential") -> "Potential":
        if other.quiver.arrows != self.quiver.arrows:
            # allow adding a potential written on a subquiver of the same arrows
            pass
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return Potential(self.quiver, out)

    def scale(self, k) -> "Potential":
        return Potential(self.quiver, {w: Fraction(k) * c for w, c in self.terms.items()})

    def restrict_to(self, quiver: Quiver) -> "Potential":
        """Drop cyclic words using arrows outside ``quiver`` (setting framing
        arrows to zero), re-canonicalized on the target quiver."""
        kept = [
            (c, w.names)
            for w, c in self.terms.items()
            if all(quiver.has_arrow(a) for a in w.names)
        ]
        return Potential.from_words(quiver, kept)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Potential):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        raise TypeError("Potential is not hashable")

    def to_json(self) -> dict:
        return {
            "terms": [
                {"word": list(w.names), "coeff": str(c)}
                for w, c in sorted(
                    self.terms.items(),
                    key=lambda wc: tuple(self.quiver.arrow_index(a) for a in wc[0].names),
                )
            ]
        }

    @staticmethod
    def from_json(quiver: Quiver, data: dict) -> "Potential":
        return Potential.from_words(
            quiver, [(Fraction(t["coeff"]), tuple(t["word"])) for t in data["terms"]]
        )

    def render(self) -> str:
        if not self.terms:
            return "0"
        poly = NCPoly({Path(w.names): c for w, c in self.terms.items()})
        return poly.render(self.quiver)


def cyclic_derivative(W: Potential, arrow_name: str) -> NCPoly:
    """Sum over occurrences of the arrow of the cyclic word read starting
    just after that occurrence.  Linear in the potential."""
    q = W.quiver
    if not q.has_arrow(arrow_name):
        raise UnknownArrow(arrow_name)
    out = NCPoly.zero()
    a = q.arrow(arrow_name)
    for w, c in W.terms.items():
        names = w.names
        n = len(names)
        for i, x in enumerate(names):
            if x != arrow_name:
                continue
            rest = names[i + 1 :] + names[:i]
            p = Path(rest) if rest else trivial_path(a.tgt)
            out = out + NCPoly.from_path(p, c)
    return out


# -- relation sets -----------------------------------------------------------


@dataclass(frozen=True)
class Relation:
    """Sum of paths with a common source and target, tagged by the arrow it
    was derived from (empty tag for ad-hoc relations)."""

    src: str
    tgt: str
    poly: NCPoly
    arrow: str = ""


class RelationSet:
    __slots__ = ("quiver", "relations")

    def __init__(self, quiver: Quiver, relations: Sequence[Relation]):
        self.quiver = quiver
        seen = []
        for r in relations:
            for p in r.poly.terms:
                if p.source(quiver) != r.src or p.target(quiver) != r.tgt:
                    raise NCAlgError(
                        f"relation term {p} does not run {r.src} -> {r.tgt}"
                    )
            if not any(
                r.src == s.src and r.tgt == s.tgt and r.arrow == s.arrow and r.poly == s.poly
                for s in seen
            ):
                seen.append(r)
        self.relations = tuple(seen)

    def __len__(self) -> int:
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def nonzero(self) -> tuple[Relation, ...]:
        return tuple(r for r in self.relations if not r.poly.is_zero())


def relations_from_potential(q: Quiver, W: Potential) -> RelationSet:
    """One relation per unmarked arrow: the cyclic derivative, running from
    the arrow's target back to its source."""
    rels = []
    for a in q.unmarked_arrows():
        rels.append(Relation(a.tgt, a.src, cyclic_derivative(W, a.name), a.name))
    return RelationSet(q, rels)


# -- bounded-degree ideal membership ------------------------------------------


@dataclass
class MembershipCertificate:
    """Expresses the query as ``sum(coeff * u * r * v)`` over listed triples."""

    parts: list[tuple[Fraction, Path, int, Path]]  # (coeff, u, relation index, v)

    def expand(self, q: Quiver, relations: RelationSet) -> NCPoly:
        total = NCPoly.zero()
        for coeff, u, ridx, v in self.parts:
            r = relations.relations[ridx]
            total = total + nc_mul(q, nc_mul(q, NCPoly.from_path(u), r.poly), NCPoly.from_path(v)).scale(coeff)
        return total


@dataclass
class MembershipResult:
    success: bool
    certificate: MembershipCertificate | None
    residual: NCPoly | None


def _paths_up_to(q: Quiver, bound: int) -> list[Path]:
    out: list[Path] = [trivial_path(v) for v in q.vertices]
    frontier = list(out)
    for _ in range(bound):
        nxt = []
        for p in frontier:
            for a in q.arrows_from(p.target(q)):
                nxt.append(Path(p.arrows + (a.name,)) if p.arrows else Path((a.name,)))
        out.extend(nxt)
        frontier = nxt
    return out


def ideal_membership(
    q: Quiver, p: NCPoly, relations: RelationSet, word_length_bound: int
) -> MembershipResult:
    """Decide membership of ``p`` in the two-sided ideal generated by the
    relations, allowing path coefficients ``u, v`` of length at most the
    bound.  Solves one rational linear system over the finite word basis.

    Raises :class:`BoundTooSmall` when no product ``u*r*v`` under the bound
    can reach the longest word of ``p`` (a retry with a larger bound may
    still succeed); plain non-membership at an adequate bound is reported
    in the result, not raised.
    """
    if word_length_bound < 0:
        raise BoundTooSmall("negative word length bound")
    rels = [r for r in relations.nonzero()]
    if p.is_zero():
        return MembershipResult(True, MembershipCertificate([]), None)
    if rels:
        min_rel = min(r.poly.max_length() for r in rels)
        reach = 2 * word_length_bound + max(r.poly.max_length() for r in rels)
        if p.max_length() > reach:
            raise BoundTooSmall(
                f"bound {word_length_bound} cannot reach words of length {p.max_length()}"
            )
        del min_rel
    words = _paths_up_to(q, word_length_bound)
    columns: list[tuple[Fraction, Path, int, Path]] = []
    column_vecs: list[dict[Path, Fraction]] = []
    for ridx, r in enumerate(rels):
        for u in words:
            if u.target(q) != r.src:
                continue
            ur = nc_mul(q, NCPoly.from_path(u), r.poly)
            for v in words:
                if v.source(q) != r.tgt:
                    continue
                urv = nc_mul(q, ur, NCPoly.from_path(v))
                if urv.is_zero():
                    continue
                columns.append((Fraction(1), u, ridx, v))
                column_vecs.append(urv.terms)
    basis: list[Path] = sorted(
        {w for vec in column_vecs for w in vec} | set(p.terms),
        key=lambda w: w.sort_key(q),
    )
    index = {w: i for i, w in enumerate(basis)}
    a_rows = [[Fraction(0)] * len(columns) for _ in basis]
    for j, vec in enumerate(column_vecs):
        for w, c in vec.items():
            a_rows[index[w]][j] = c
    b = [p.terms.get(w, Fraction(0)) for w in basis]
    sol = linalg.solve(linalg.mat(a_rows), b) if columns else None
    if sol is None and columns:
        pass
    if sol is not None:
        parts = [
            (coeff, u, ridx, v)
            for coeff, (one, u, ridx, v) in zip(sol, columns)
            if coeff != 0
        ]
        cert = MembershipCertificate(parts)
        return MembershipResult(True, cert, None)
    # residual: project p onto the orthogonal complement of the column span
    # by re-solving for the best representable part; with exact arithmetic
    # the simplest faithful residual is p minus any least-squares-free
    # partial combination, so report p reduced by the span via elimination.
    residual = _residual_after_projection(q, p, basis, column_vecs)
    return MembershipResult(False, None, residual)


def _residual_after_projection(q, p, basis, column_vecs) -> NCPoly:
    """Reduce p by the column span via Gaussian elimination and return what
    is left (zero would mean membership, so here it is always nonzero)."""
    index = {w: i for i, w in enumerate(basis)}
    rows = []
    for vec in column_vecs:
        dense = [Fraction(0)] * len(basis)
        for w, c in vec.items():
            dense[index[w]] = c
        rows.append(dense)
    target = [p.terms.get(w, Fraction(0)) for w in basis]
    pivots: dict[int, list[Fraction]] = {}
    for row in rows:
        row = list(row)
        for col, pivot in pivots.items():
            if row[col] != 0:
                f = row[col]
                row = [x - f * y for x, y in zip(row, pivot)]
        lead = next((i for i, x in enumerate(row) if x != 0), None)
        if lead is not None:
            pv = row[lead]
            pivots[lead] = [x / pv for x in row]
    for col, pivot in pivots.items():
        if target[col] != 0:
            f = target[col]
            target = [x - f * y for x, y in zip(target, pivot)]
    return NCPoly({w: c for w, c in zip(basis, target) if c != 0})


# -- Euler form and block dimensions -----------------------------------------

DimVector = Mapping[str, int]


def chi_form(q: Quiver, a: DimVector, b: DimVector, exclude: frozenset[str] = frozenset()) -> int:
    """Euler pairing: vertex products minus arrow products; marked arrows and
    excluded (framing) vertices do not contribute."""
    total = 0
    for v in q.vertices:
        if v in exclude:
            continue
        total += a.get(v, 0) * b.get(v, 0)
    for e in q.arrows:
        if e.marked or e.src in exclude or e.tgt in exclude:
            continue
        total -= a.get(e.src, 0) * b.get(e.tgt, 0)
    return total


def block_dims(q: Quiver, a: DimVector, b: DimVector, exclude: frozenset[str] = frozenset()):
    """Dimensions (X_ab, G_ab, X_(a+b), G_(a+b), X_a, G_a, X_b, G_b) of the
    arrow and gauge spaces for the pair, the sum, and each summand."""

    def xdim(d: DimVector) -> int:
        return sum(
            d.get(e.src, 0) * d.get(e.tgt, 0)
            for e in q.arrows
            if not e.marked and e.src not in exclude and e.tgt not in exclude
        )

    def gdim(d: DimVector) -> int:
        return sum(d.get(v, 0) ** 2 for v in q.vertices if v not in exclude)

    def pair_x() -> int:
        total = 0
        for e in q.arrows:
            if e.marked or e.src in exclude or e.tgt in exclude:
                continue
            s, t = e.src, e.tgt
            total += (
                a.get(s, 0) * a.get(t, 0)
                + a.get(s, 0) * b.get(t, 0)
                + b.get(s, 0) * b.get(t, 0)
            )
        return total

    def pair_g() -> int:
        total = 0
        for v in q.vertices:
            if v in exclude:
                continue
            total += a.get(v, 0) ** 2 + a.get(v, 0) * b.get(v, 0) + b.get(v, 0) ** 2
        return total

    ab = {v: a.get(v, 0) + b.get(v, 0) for v in q.vertices}
    return (
        pair_x(),
        pair_g(),
        xdim(ab),
        gdim(ab),
        xdim(a),
        gdim(a),
        xdim(b),
        gdim(b),
    )


# -- numeric evaluation -------------------------------------------------------


def path_matrix(q: Quiver, p: Path, rep: Mapping[str, linalg.Matrix], dims: DimVector) -> linalg.Matrix:
    """Evaluate a word on a representation: the word ``(a, b)`` becomes
    ``M(b) @ M(a)``; a trivial path is the identity at its vertex."""
    if p.base is not None:
        return linalg.identity(dims.get(p.base, 0))
    m = rep[p.arrows[0]]
    for name in p.arrows[1:]:
        m = linalg.matmul(rep[name], m)
    return m


def _check_rep_shapes(q: Quiver, rep: Mapping[str, linalg.Matrix], dims: DimVector) -> None:
    for name, m in rep.items():
        a = q.arrow(name)
        rows, cols = linalg.shape(m)
        want = (dims.get(a.tgt, 0), dims.get(a.src, 0))
        if 0 in want:
            # empty matrices cannot carry their free dimension; any entryless
            # matrix represents a map to or from the zero space
            if not any(row for row in m):
                continue
            raise ShapeMismatch(f"arrow {name}: expected an empty matrix")
        if (rows, cols) != want:
            raise ShapeMismatch(f"arrow {name}: matrix is {rows}x{cols}, expected {want[0]}x{want[1]}")


def numeric_relation_residual(
    q: Quiver, relations: RelationSet, rep: Mapping[str, linalg.Matrix], dims: DimVector
) -> list[Fraction]:
    """Largest absolute matrix entry of each relation evaluated on ``rep``."""
    _check_rep_shapes(q, rep, dims)
    out = []
    for r in relations:
        rows, cols = dims.get(r.tgt, 0), dims.get(r.src, 0)
        if rows == 0 or cols == 0:
            out.append(Fraction(0))
            continue
        total = linalg.zeros(rows, cols)
        for p, c in r.poly.terms.items():
            if any(dims.get(q.arrow(name).src, 0) == 0 for name in p.arrows):
                continue  # the path factors through the zero space
            total = linalg.add(total, linalg.scale(path_matrix(q, p, rep, dims), c))
        out.append(linalg.max_abs(total))
    return out
