"""Z[x]-lattices: monomial order, reduction, and Groebner bases.

A monomial is a*x^k*e_i (nonzero integer a, natural k, coordinate i).  The
order compares coordinate index first, then x-degree, then |a|; vectors are
reduced by cancelling the largest reducible monomial first, which makes every
normal form unique and every run reproducible.  Completed bases are stored in
the pivot-block matrix shape with positive pivot leading coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Iterable, NamedTuple, Optional

from .errors import PreconditionError, ResourceExhausted
from .poly_core import IntPoly, gcd_bezout_int

DEFAULT_MAX_REDUCTIONS = 10**6


class Monomial(NamedTuple):
    coeff: int
    xdeg: int
    index: int  # 0-based coordinate

    def key(self):
        return (self.index, self.xdeg, abs(self.coeff))


def cmp_monomials(m1: Monomial, m2: Monomial) -> int:
    """-1, 0, or 1; equal-|coeff| monomials of equal index/degree tie."""
    k1, k2 = m1.key(), m2.key()
    return -1 if k1 < k2 else (1 if k1 > k2 else 0)


class LatticeVector:
    """An element of Z[x]^n, entries stored canonically."""

    __slots__ = ("entries", "_lt")

    def __init__(self, entries: Iterable):
        vals = tuple(e if isinstance(e, IntPoly) else IntPoly(e) for e in entries)
        object.__setattr__(self, "entries", vals)
        object.__setattr__(self, "_lt", None)

    def __setattr__(self, name, value):
        raise AttributeError("LatticeVector is immutable")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @staticmethod
    def _make(entries: tuple) -> "LatticeVector":
        v = object.__new__(LatticeVector)
        object.__setattr__(v, "entries", entries)
        object.__setattr__(v, "_lt", None)
        return v

    @staticmethod
    def zero(dim: int) -> "LatticeVector":
        return LatticeVector([IntPoly.zero()] * dim)

    @staticmethod
    def unit(dim: int, index: int, poly: IntPoly = None) -> "LatticeVector":
        entries = [IntPoly.zero()] * dim
        entries[index] = IntPoly.one() if poly is None else poly
        return LatticeVector(entries)

    def is_zero(self) -> bool:
        return not any(e.coeffs for e in self.entries)

    def __add__(self, other):
        return LatticeVector._make(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        return LatticeVector._make(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return LatticeVector._make(tuple(-a for a in self.entries))

    def scale(self, p) -> "LatticeVector":
        """Multiply by a Z[x] scalar."""
        if isinstance(p, int):
            p = IntPoly(p)
        return LatticeVector._make(tuple(p * a for a in self.entries))

    def dot(self, other) -> IntPoly:
        acc = IntPoly.zero()
        for a, b in zip(self.entries, other.entries):
            acc = acc + a * b
        return acc

    def content(self) -> int:
        from math import gcd

        c = 0
        for e in self.entries:
            c = gcd(c, e.content())
        return c

    def primitive_part(self) -> "LatticeVector":
        c = self.content()
        if c <= 1:
            return self
        return LatticeVector(IntPoly(tuple(a // c for a in e.coeffs)) for e in self.entries)

    def monomials(self):
        for i, e in enumerate(self.entries):
            for k, c in enumerate(e.coeffs):
                if c != 0:
                    yield Monomial(c, k, i)

    def __eq__(self, other):
        return isinstance(other, LatticeVector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        from .poly_core import format_poly

        return "LatticeVector(" + ", ".join(format_poly(e) for e in self.entries) + ")"


def leading_term(f: LatticeVector) -> Monomial:
    """Order-maximal monomial of a nonzero vector (cached)."""
    if f._lt is not None:
        return f._lt
    best = None
    for m in f.monomials():
        if best is None or m.key() > best.key():
            best = m
    if best is None:
        raise PreconditionError("the zero vector has no leading term")
    object.__setattr__(f, "_lt", best)
    return best


def is_reduced_monomial(m: Monomial, w: Monomial) -> bool:
    """The three-clause reducedness predicate of the monomial order."""
    if m.index != w.index:
        return True
    if m.xdeg < w.xdeg:
        return True
    return 0 <= m.coeff < abs(w.coeff)


def s_polynomial_parts(
    f: LatticeVector, g: LatticeVector
) -> Optional[tuple[LatticeVector, IntPoly, IntPoly]]:
    """S-polynomial with its combination: returns (S, cf, cg) with S = cf*f + cg*g.

    None when the leading indices differ (S = 0).
    """
    ltf, ltg = leading_term(f), leading_term(g)
    if ltf.index != ltg.index:
        return None
    swapped = False
    if ltf.xdeg < ltg.xdeg:
        f, g, ltf, ltg = g, f, ltg, ltf
        swapped = True
    a, b = ltf.coeff, ltg.coeff
    delta = ltf.xdeg - ltg.xdeg
    if a % b == 0:
        cf, cg = IntPoly.one(), IntPoly.monomial(-(a // b), delta)
    elif b % a == 0:
        cf, cg = IntPoly(b // a), IntPoly.monomial(-1, delta)
    else:
        _, u, v = gcd_bezout_int(a, b)
        cf, cg = IntPoly(u), IntPoly.monomial(v, delta)
    s = f.scale(cf) + g.scale(cg)
    if swapped:
        cf, cg = cg, cf
    return s, cf, cg


def s_polynomial(f: LatticeVector, g: LatticeVector) -> LatticeVector:
    parts = s_polynomial_parts(f, g)
    if parts is None:
        return LatticeVector.zero(f.dim)
    return parts[0]


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n):
        self.left = n

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise ResourceExhausted("reduction budget exhausted; raise max_reductions")


def _axpy_sub(f: LatticeVector, coeff: int, shift: int, g: LatticeVector) -> LatticeVector:
    """f - coeff * x^shift * g without intermediate vectors."""
    entries = list(f.entries)
    for c, ge in enumerate(g.entries):
        gc = ge.coeffs
        if not gc:
            continue
        fc = entries[c].coeffs
        out = list(fc) + [0] * max(0, shift + len(gc) - len(fc))
        for idx, a in enumerate(gc):
            out[shift + idx] -= coeff * a
        entries[c] = IntPoly._raw(out)
    return LatticeVector._make(tuple(entries))


def grem(
    f: LatticeVector,
    basis: list[LatticeVector],
    budget: _Budget = None,
    track: bool = False,
    heads_only: bool = False,
):
    """Normal form of f modulo basis; largest reducible monomial first.

    With track=True also returns quotients q with f = sum(q_k * basis_k) + nf.
    With heads_only=True only the current leading term is rewritten; the
    result is zero exactly when the full normal form is zero, which is what
    completion needs, at a fraction of the tail-arithmetic cost.
    """
    keep = [(gi, g) for gi, g in enumerate(basis) if not g.is_zero()]
    quot = [IntPoly.zero() for _ in basis] if track else None
    if not keep:
        return (f, quot) if track else f
    if budget is None:
        budget = _Budget(DEFAULT_MAX_REDUCTIONS)
    # Reducers grouped by pivot coordinate; smallest pivot coefficient first
    # (then nearest degree) to curb coefficient growth.
    by_index: dict[int, list] = {}
    for gi, g in keep:
        lt = leading_term(g)
        by_index.setdefault(lt.index, []).append(
            (lt.xdeg, abs(lt.coeff), 1 if lt.coeff > 0 else -1, gi, g)
        )
    for group in by_index.values():
        group.sort(key=lambda e: (e[1], -e[0], e[3]))
    while True:
        hit = None
        entries = f.entries
        for i in range(len(entries) - 1, -1, -1):
            group = by_index.get(i)
            cs = entries[i].coeffs
            if group is None:
                if heads_only and cs:
                    break  # leading term sits here and is irreducible
                continue
            for k in range(len(cs) - 1, -1, -1):
                c = cs[k]
                if c == 0:
                    continue
                for beta, babs, bsign, gi, g in group:
                    if beta <= k and not 0 <= c < babs:
                        hit = (k, c, beta, babs, bsign, gi, g)
                        break
                if hit or heads_only:
                    break
            if hit is not None or (heads_only and cs):
                break
        if hit is None:
            return (f, quot) if track else f
        budget.spend()
        k, c, beta, babs, bsign, gi, g = hit
        coeff = (c // babs) * bsign
        shift = k - beta
        f = _axpy_sub(f, coeff, shift, g)
        if track:
            quot[gi] = quot[gi] + IntPoly.monomial(coeff, shift)


@dataclass(frozen=True)
class GHNFBasis:
    """Reduced Groebner basis in the pivot-block matrix shape."""

    columns: tuple[LatticeVector, ...]
    dim: int

    def __iter__(self):
        return iter(self.columns)

    def __len__(self):
        return len(self.columns)

    def is_empty(self) -> bool:
        return not self.columns

    def blocks(self) -> list[tuple[int, list[int]]]:
        """Maximal runs of columns sharing a pivot row: [(row, [col idx])]."""
        out: list[tuple[int, list[int]]] = []
        for idx, col in enumerate(self.columns):
            row = leading_term(col).index
            if out and out[-1][0] == row:
                out[-1][1].append(idx)
            else:
                out.append((row, [idx]))
        return out

    def first_block_columns(self) -> list[LatticeVector]:
        """The first column of each pivot block (the c_{r_i,1})."""
        return [self.columns[idxs[0]] for _, idxs in self.blocks()]

    def corner(self, col: int) -> IntPoly:
        """Pivot-row entry of a column."""
        c = self.columns[col]
        return c.entries[leading_term(c).index]

    def matrix(self) -> list[list[IntPoly]]:
        return [list(c.entries) for c in self.columns]


def _precondition(pairs, dim, track):
    """Integer column echelon over the x-shift family of the generators.

    Unimodular integer operations on {x^k * g} preserve the generated
    lattice while stripping the cross-generator redundancy that makes naive
    completion swell; the output is a small echelon generating set (with
    traced representations when track is set).
    """
    maxdeg = 0
    for vec, _ in pairs:
        for e in vec.entries:
            if e.coeffs:
                maxdeg = max(maxdeg, len(e.coeffs) - 1)
    headroom = maxdeg + dim + 2
    shifted = []
    for vec, rep in pairs:
        top = max(
            (len(e.coeffs) - 1 for e in vec.entries if e.coeffs), default=0
        )
        for k in range(headroom - top + 1):
            if k == 0:
                shifted.append((vec, rep))
            else:
                xk = IntPoly.monomial(1, k)
                shifted.append(
                    (vec.scale(xk), rep.scale(xk) if track else None)
                )

    def fused(ca, a, cb, b):
        # ca*a + cb*b entrywise, no intermediate vectors
        ea, eb = a.entries, b.entries
        out = []
        for pa, pb in zip(ea, eb):
            ac, bc = pa.coeffs, pb.coeffs
            if not bc and ca == 1:
                out.append(pa)
                continue
            if not ac and cb == 1:
                out.append(pb)
                continue
            n = max(len(ac), len(bc))
            cs = [0] * n
            if ca == 1:
                for t, c in enumerate(ac):
                    cs[t] = c
            elif ca:
                for t, c in enumerate(ac):
                    cs[t] = ca * c
            if cb == 1:
                for t, c in enumerate(bc):
                    cs[t] += c
            elif cb:
                for t, c in enumerate(bc):
                    cs[t] += cb * c
            out.append(IntPoly._raw(cs))
        return LatticeVector._make(tuple(out))

    def combine(a, b, ca, cb):
        vec = fused(ca, a[0], cb, b[0])
        rep = fused(ca, a[1], cb, b[1]) if track else None
        return (vec, rep)

    result = []
    active = shifted
    for i in range(dim - 1, -1, -1):
        for k in range(headroom, -1, -1):
            pivot = None
            rest = []
            for item in active:
                val = item[0].entries[i].coeff(k)
                if val == 0:
                    rest.append(item)
                    continue
                if pivot is None:
                    pivot = item
                    continue
                pval = pivot[0].entries[i].coeff(k)
                q, r = divmod(val, pval)
                if r == 0:
                    cleared = combine(item, pivot, 1, -q)
                else:
                    g, u, v = gcd_bezout_int(pval, val)
                    pa, pb = pval // g, val // g
                    new_pivot = combine(pivot, item, u, v)
                    cleared = combine(pivot, item, -pb, pa)
                    pivot = new_pivot
                if not cleared[0].is_zero():
                    rest.append(cleared)
            if pivot is None:
                continue
            if pivot[0].entries[i].coeff(k) < 0:
                pivot = (
                    -pivot[0],
                    -pivot[1] if track else None,
                )
            pv = pivot[0].entries[i].coeff(k)
            # Keep earlier echelon columns reduced at this pivot slot.
            for idx, item in enumerate(result):
                val = item[0].entries[i].coeff(k)
                q = val // pv
                if q:
                    result[idx] = combine(item, pivot, 1, -q)
            result.append(pivot)
            active = rest
    return list(reversed(result))


def buchberger(
    U: list[LatticeVector],
    max_reductions: int = DEFAULT_MAX_REDUCTIONS,
    track: bool = False,
):
    """Reduced Groebner basis of the lattice generated by U.

    With track=True returns (basis, reps) where reps[k] expresses basis
    column k as a Z[x]-combination of the inputs (a vector in Z[x]^len(U)).
    """
    if not U:
        raise PreconditionError("buchberger needs at least one generator")
    dim = U[0].dim
    for u in U:
        if u.dim != dim:
            raise PreconditionError("generators have mixed ambient dimensions")
    m = len(U)
    budget = _Budget(max_reductions)

    def normalized(vec, rep):
        # Stored elements always carry a positive pivot coefficient so that
        # inter-reduction converges to the canonical representative.
        if leading_term(vec).coeff < 0:
            return -vec, (-rep if track else rep)
        return vec, rep

    def reduce_tracked(vec, rep, pool, heads=False):
        if not track:
            return grem(vec, [w[0] for w in pool], budget, heads_only=heads), None
        nf, quot = grem(vec, [w[0] for w in pool], budget, track=True, heads_only=heads)
        for q, (_, r) in zip(quot, pool):
            if not q.is_zero():
                rep = rep - r.scale(q)
        return nf, rep

    inputs = []
    seen = set()
    for i, u in enumerate(U):
        if u.is_zero() or u in seen:
            continue
        seen.add(u)
        inputs.append((u, LatticeVector.unit(m, i) if track else None))
    if not inputs:
        basis = GHNFBasis((), dim)
        return (basis, []) if track else basis

    work: list[tuple[LatticeVector, LatticeVector]] = []  # (vector, rep)
    for vec, rep in _precondition(inputs, dim, track):
        nf, rep = reduce_tracked(vec, rep, work, heads=True)
        if nf.is_zero():
            continue
        work.append(normalized(nf, rep))
    if not work:
        basis = GHNFBasis((), dim)
        return (basis, []) if track else basis

    def interreduce(heads=False):
        # Repeated single passes; each pass reduces every element against the
        # others in place until a whole pass is a no-op.
        changed = True
        while changed:
            changed = False
            work.sort(key=lambda wr: leading_term(wr[0]).key())
            idx = 0
            while idx < len(work):
                vec, rep = work[idx]
                others = work[:idx] + work[idx + 1:]
                if not others:
                    idx += 1
                    continue
                nf, nrep = reduce_tracked(vec, rep, others, heads=heads)
                if nf.is_zero():
                    work.pop(idx)
                    changed = True
                    continue
                if nf != vec:
                    work[idx] = normalized(nf, nrep)
                    changed = True
                idx += 1

    def pair_entry(i, j):
        hi, lo = (i, j) if i > j else (j, i)
        return (
            leading_term(work[hi][0]).key(),
            leading_term(work[lo][0]).key(),
            i,
            j,
        )

    def all_pairs():
        heap = [pair_entry(i, j) for i in range(len(work)) for j in range(i)]
        heapify(heap)
        return heap

    pending = all_pairs()
    while True:
        additions = 0
        while pending:
            _, _, i, j = heappop(pending)
            parts = s_polynomial_parts(work[i][0], work[j][0])
            if parts is None:
                continue
            s, cf, cg = parts
            if s.is_zero():
                continue
            rep = (work[i][1].scale(cf) + work[j][1].scale(cg)) if track else None
            nf, rep = reduce_tracked(s, rep, work, heads=True)
            if nf.is_zero():
                continue
            work.append(normalized(nf, rep))
            additions += 1
            if additions >= 8:
                # Compact the basis before it balloons, then reprocess: the
                # final criterion check below keeps this surgery sound.
                interreduce(heads=True)
                pending = all_pairs()
                additions = 0
            else:
                new = len(work) - 1
                for k in range(new):
                    heappush(pending, pair_entry(new, k))

        interreduce(heads=True)
        interreduce()
        work.sort(key=lambda wr: leading_term(wr[0]).key())

        # Self-check the Groebner criterion; resume completion if it fails.
        # Head reduction stalls exactly on nonzero normal forms, so the
        # zero-vs-nonzero verdict matches the full reduction.
        vectors = [w[0] for w in work]
        retry = False
        for i in range(len(work)):
            for j in range(i):
                s = s_polynomial(vectors[i], vectors[j])
                if s.is_zero():
                    continue
                if not grem(s, vectors, budget, heads_only=True).is_zero():
                    retry = True
                    break
            if retry:
                break
        if not retry:
            break
        pending = all_pairs()

    basis = GHNFBasis(tuple(w[0] for w in work), dim)
    if track:
        return basis, [w[1] for w in work]
    return basis


def is_ghnf(columns: list[LatticeVector]) -> tuple[bool, list[str]]:
    """Check the four normal-form conditions; returns (ok, violations)."""
    violations = []
    cols = list(columns)
    if any(c.is_zero() for c in cols):
        return False, ["shape: zero column"]
    if not cols:
        return True, []
    dims = {c.dim for c in cols}
    if len(dims) != 1:
        return False, ["shape: mixed column dimensions"]

    pivot_rows = [leading_term(c).index for c in cols]
    for a, b in zip(pivot_rows, pivot_rows[1:]):
        if b < a:
            violations.append("shape: columns not sorted by pivot row")
            break

    blocks: list[tuple[int, list[int]]] = []
    for idx, row in enumerate(pivot_rows):
        if blocks and blocks[-1][0] == row:
            blocks[-1][1].append(idx)
        else:
            blocks.append((row, [idx]))

    for row, idxs in blocks:
        corners = [cols[i].entries[row] for i in idxs]
        degs = [c.deg() for c in corners]
        for d1, d2 in zip(degs, degs[1:]):
            if not d1 < d2:
                violations.append(f"condition 1: corner degrees not strictly increasing in block row {row + 1}")
                break
        lcs = [c.lc() for c in corners]
        for j in range(len(lcs) - 1, 0, -1):
            if lcs[j] == 0 or lcs[j - 1] % lcs[j] != 0:
                violations.append(f"condition 2: leading coefficients do not divide in chain in block row {row + 1}")
                break
        for j2 in range(1, len(idxs)):
            for j1 in range(j2):
                s = s_polynomial(cols[idxs[j1]], cols[idxs[j2]])
                if not s.is_zero() and not grem(s, cols).is_zero():
                    violations.append(
                        f"condition 3: in-block S-polynomial of columns {idxs[j1] + 1},{idxs[j2] + 1} does not reduce to zero"
                    )

    for i, c in enumerate(cols):
        other_lts = [leading_term(cols[j]) for j in range(len(cols)) if j != i]
        for mn in c.monomials():
            if any(not is_reduced_monomial(mn, lt) for lt in other_lts):
                violations.append(f"condition 4: column {i + 1} not reduced w.r.t. the other columns")
                break

    return not violations, violations


class ZxLattice:
    """A Z[x]-lattice given by generators, with a write-once GHNF cache."""

    def __init__(self, generators: Iterable[LatticeVector], dim: int = None):
        gens = tuple(generators)
        if dim is None:
            if not gens:
                raise PreconditionError("empty generator list needs an explicit dimension")
            dim = gens[0].dim
        for g in gens:
            if g.dim != dim:
                raise PreconditionError("generators have mixed ambient dimensions")
        self.generators = gens
        self.dim = dim
        self._ghnf: Optional[GHNFBasis] = None

    @property
    def ghnf(self) -> GHNFBasis:
        if self._ghnf is None:
            nonzero = [g for g in self.generators if not g.is_zero()]
            if not nonzero:
                basis = GHNFBasis((), self.dim)
            else:
                basis = buchberger(nonzero)
            self._ghnf = basis
        return self._ghnf

    @staticmethod
    def from_ghnf(basis: GHNFBasis) -> "ZxLattice":
        lat = ZxLattice(basis.columns, basis.dim)
        lat._ghnf = basis
        return lat

    def __repr__(self):
        return f"ZxLattice(dim={self.dim}, generators={len(self.generators)})"


def member(f: LatticeVector, L) -> bool:
    """Membership via the unique normal form: grem(f, GHNF) == 0."""
    basis = L.ghnf if isinstance(L, ZxLattice) else L
    if basis.is_empty():
        return f.is_zero()
    return grem(f, list(basis.columns)).is_zero()


def lattices_equal(L1: ZxLattice, L2: ZxLattice) -> bool:
    """Mutual membership of generators."""
    return all(member(g, L2) for g in L1.generators) and all(
        member(g, L1) for g in L2.generators
    )


def rank(L) -> int:
    """Rank of the generator matrix over the fraction field Q(x)."""
    if isinstance(L, ZxLattice):
        cols = [g for g in L.generators if not g.is_zero()]
        dim = L.dim
    else:
        cols = [g for g in L if not g.is_zero()]
        if not cols:
            return 0
        dim = cols[0].dim
    if not cols:
        return 0
    rows = [[c.entries[r] for c in cols] for r in range(dim)]
    rk = 0
    used = [False] * dim
    for col in range(len(cols)):
        pivot = None
        for r in range(dim):
            if not used[r] and not rows[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        used[pivot] = True
        rk += 1
        pv = rows[pivot][col]
        for r in range(dim):
            if r == pivot or rows[r][col].is_zero():
                continue
            factor = rows[r][col]
            rows[r] = [pv * a - factor * b for a, b in zip(rows[r], rows[pivot])]
    return rk
