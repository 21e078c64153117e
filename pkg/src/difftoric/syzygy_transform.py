"""Kernels of Z[x] matrices and the parametric <-> implicit conversions.

Syzygies come from the completion trace: every S-polynomial of the computed
basis reduces to zero, and the bookkeeping of that reduction is a kernel
element; together with the tautological relations of the inputs these
generate the whole kernel.  Orthogonal complements and lattice intersections
are kernels of derived matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .poly_core import IntPoly
from .zx_lattice import (
    LatticeVector,
    ZxLattice,
    buchberger,
    grem,
    leading_term,
    rank,
    s_polynomial_parts,
)


def matvec(columns: list[LatticeVector], nrows: int, f: LatticeVector) -> LatticeVector:
    """A*f for the matrix with the given columns."""
    acc = LatticeVector.zero(nrows)
    for coeff, col in zip(f.entries, columns):
        if not coeff.is_zero():
            acc = acc + col.scale(coeff)
    return acc


def syzygy_basis(columns: list[LatticeVector], nrows: int) -> list[LatticeVector]:
    """Generators of {f in Z[x]^m : A*f = 0} for the m given columns of A.

    Returned in canonical reduced-basis form; every generator satisfies
    A*f = 0 exactly (asserted).
    """
    m = len(columns)
    if m == 0:
        return []
    for c in columns:
        if c.dim != nrows:
            raise PreconditionError("column dimension does not match row count")
    if all(c.is_zero() for c in columns):
        return [LatticeVector.unit(m, i) for i in range(m)]

    basis, reps = buchberger(columns, track=True)
    vectors = list(basis.columns)

    raw: list[LatticeVector] = []

    def emit(candidate: LatticeVector):
        if candidate.is_zero():
            return
        if not matvec(columns, nrows, candidate).is_zero():
            raise AssertionError("emitted syzygy does not annihilate the matrix")
        raw.append(candidate)

    # Relations from S-polynomial reductions of the completed basis.
    for i in range(len(vectors)):
        for j in range(i):
            parts = s_polynomial_parts(vectors[i], vectors[j])
            if parts is None:
                continue
            s, ci, cj = parts
            nf, quot = grem(s, vectors, track=True)
            if not nf.is_zero():
                raise AssertionError("S-polynomial of a completed basis did not vanish")
            rel = reps[i].scale(ci) + reps[j].scale(cj)
            for q, rep in zip(quot, reps):
                if not q.is_zero():
                    rel = rel - rep.scale(q)
            emit(rel)

    # Tautological relations: each input minus its standard representation.
    for idx, col in enumerate(columns):
        nf, quot = grem(col, vectors, track=True)
        if not nf.is_zero():
            raise AssertionError("input column does not reduce to zero by its own basis")
        rel = LatticeVector.unit(m, idx)
        for q, rep in zip(quot, reps):
            if not q.is_zero():
                rel = rel - rep.scale(q)
        emit(rel)

    if not raw:
        return []
    # Small generators first: the canonical basis is unique, but feeding the
    # completion in ascending size keeps intermediate coefficients tame.
    raw.sort(key=lambda v: (leading_term(v).key(), tuple(e.coeffs for e in v.entries)))
    return list(buchberger(raw).columns)


def orth_complement(L: ZxLattice) -> ZxLattice:
    """L^C = {f : <f, g> = 0 for all g in L}, the kernel of the transpose."""
    gens = [g for g in L.generators if not g.is_zero()]
    m = L.dim
    if not gens:
        return ZxLattice([LatticeVector.unit(m, i) for i in range(m)], m)
    s = len(gens)
    transpose_cols = [
        LatticeVector([g.entries[r] for g in gens]) for r in range(m)
    ]
    return ZxLattice(syzygy_basis(transpose_cols, s), m)


def lattice_intersection(L1: ZxLattice, L2: ZxLattice) -> ZxLattice:
    if L1.dim != L2.dim:
        raise PreconditionError("lattice intersection needs equal ambient dimensions")
    g1 = [g for g in L1.generators if not g.is_zero()]
    g2 = [g for g in L2.generators if not g.is_zero()]
    if not g1 or not g2:
        return ZxLattice([], L1.dim)
    block = g1 + [-g for g in g2]
    out = []
    for s in syzygy_basis(block, L1.dim):
        head = LatticeVector(s.entries[: len(g1)])
        vec = matvec(g1, L1.dim, head)
        if not vec.is_zero():
            out.append(vec)
    if not out:
        return ZxLattice([], L1.dim)
    return ZxLattice(list(buchberger(out).columns), L1.dim)


@dataclass(frozen=True)
class BinomialGen:
    """Difference binomial Y^plus - Y^minus with plus - minus = source."""

    plus: LatticeVector
    minus: LatticeVector
    source: LatticeVector

    def display(self) -> str:
        left = format_sigma_monomial(self.plus, "y")
        right = format_sigma_monomial(self.minus, "y")
        return f"{left} - {right}"


def split_pos_neg(f: LatticeVector) -> BinomialGen:
    """Componentwise positive/negative part split; supports stay disjoint."""
    plus = []
    minus = []
    for e in f.entries:
        plus.append(IntPoly(tuple(max(c, 0) for c in e.coeffs)))
        minus.append(IntPoly(tuple(max(-c, 0) for c in e.coeffs)))
    return BinomialGen(LatticeVector(plus), LatticeVector(minus), f)


def display_sign_normalize(f: LatticeVector) -> LatticeVector:
    """Flip sign so the lowest-degree coefficient of the first nonzero
    coordinate is positive (display convention for binomials)."""
    for e in f.entries:
        if not e.is_zero():
            return -f if e.coeff(e.lowdeg()) < 0 else f
    return f


def format_sigma_monomial(v: LatticeVector, letter: str) -> str:
    """Render Y^v as e.g. 'y1*y2^2', 'y1^x', 'y2^{x^2+1}'; '1' when v = 0."""
    from .poly_core import format_poly

    parts = []
    for i, e in enumerate(v.entries):
        if e.is_zero():
            continue
        if e == IntPoly.one():
            parts.append(f"{letter}{i + 1}")
            continue
        exp = format_poly(e)
        if any(ch in exp for ch in "+-*^"):
            exp = "{" + exp + "}"
        parts.append(f"{letter}{i + 1}^{exp}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialMap:
    """Exponent vectors u_i of Laurent monomials T^{u_i}; u_i is column i."""

    columns: tuple[LatticeVector, ...]

    def __post_init__(self):
        if not self.columns:
            raise PreconditionError("a monomial map needs at least one exponent vector")
        dims = {c.dim for c in self.columns}
        if len(dims) != 1:
            raise PreconditionError("exponent vectors have mixed dimensions")

    @property
    def dim(self) -> int:
        return self.columns[0].dim

    def rows(self) -> list[LatticeVector]:
        return [
            LatticeVector([c.entries[r] for c in self.columns])
            for r in range(self.dim)
        ]


@dataclass(frozen=True)
class ImplicitResult:
    lattice: ZxLattice
    binomials: tuple[BinomialGen, ...]
    dimension: int


def implicitize(U: MonomialMap) -> ImplicitResult:
    """Support lattice (kernel of the exponent matrix) and its binomials."""
    syz = syzygy_basis(list(U.columns), U.dim)
    if not syz:
        lattice = ZxLattice([], len(U.columns))
        basis_cols: tuple[LatticeVector, ...] = ()
    else:
        basis = buchberger(syz)
        lattice = ZxLattice.from_ghnf(basis)
        basis_cols = basis.columns
    binomials = tuple(
        split_pos_neg(display_sign_normalize(col)) for col in basis_cols
    )
    return ImplicitResult(lattice, binomials, rank(ZxLattice(list(U.columns))))


class NotToricError(PreconditionError):
    def __init__(self, verdict):
        super().__init__("the lattice is not toric; parametrization needs a toric lattice")
        self.verdict = verdict


@dataclass(frozen=True)
class ParametrizeResult:
    map: MonomialMap
    complement: ZxLattice
    saturated: bool  # True when the input had to be saturated first


def parametrize(F: list[LatticeVector], saturate_first: bool = False) -> ParametrizeResult:
    """Monomial map whose syzygy lattice is (F); requires a toric lattice.

    Non-toric input raises NotToricError unless saturate_first is set, in
    which case the saturation is parametrized instead.
    """
    from .saturation import is_toric

    if not F:
        raise PreconditionError("parametrize needs at least one generator")
    verdict = is_toric(F)
    saturated = False
    if verdict.is_toric:
        lattice = ZxLattice(list(F))
    elif saturate_first:
        lattice = verdict.saturated_lattice
        saturated = True
    else:
        raise NotToricError(verdict)

    comp = orth_complement(lattice)
    r = len(comp.generators)
    if r == 0:
        # Complement of the full lattice: the zero map on one coordinate.
        rows = [LatticeVector.zero(1) for _ in range(lattice.dim)]
        return ParametrizeResult(MonomialMap(tuple(rows)), comp, saturated)
    rows = [
        LatticeVector([g.entries[i] for g in comp.generators])
        for i in range(lattice.dim)
    ]
    return ParametrizeResult(MonomialMap(tuple(rows)), comp, saturated)
