"""Saturation of Z[x]-lattices and the toric decision.

Z-saturation is checked prime by prime through colon lattices (L : p)
computed as syzygy projections; Q[x]-saturation through kernels of the
block-leading columns over the residue fields Q[x]/(p(x)).  Every witness is
machine-checked on construction: p*h lies in the lattice, h does not.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as int_gcd

from .errors import PreconditionError, ResourceExhausted
from .factorization import DEFAULT_TRIAL_BOUND, factor_int, factor_poly
from .poly_core import IntPoly, RatPoly, ResidueElem
from .syzygy_transform import syzygy_basis
from .zx_lattice import (
    GHNFBasis,
    LatticeVector,
    ZxLattice,
    buchberger,
    grem,
    leading_term,
    member,
)

DEFAULT_MAX_ROUNDS = 1000


@dataclass(frozen=True)
class SaturationWitness:
    """A vector h outside L with p*h inside L."""

    vector: LatticeVector
    multiplier: IntPoly

    @staticmethod
    def checked(h: LatticeVector, p: IntPoly, basis: GHNFBasis) -> "SaturationWitness":
        if not member(h.scale(p), basis):
            raise AssertionError("witness rejected: p*h is not in the lattice")
        if member(h, basis):
            raise AssertionError("witness rejected: h already lies in the lattice")
        return SaturationWitness(h, p)


def _vector_key(v: LatticeVector):
    return (leading_term(v).key(), tuple(e.coeffs for e in v.entries))


def _pivot_sign_normalize(v: LatticeVector) -> LatticeVector:
    return -v if leading_term(v).coeff < 0 else v


def _candidate_primes(basis: GHNFBasis, trial_bound: int) -> list[int]:
    primes = set()
    for col in basis.columns:
        lc = abs(leading_term(col).coeff)
        if lc > 1:
            primes.update(factor_int(lc, trial_bound)[1])
    return sorted(primes)


def _colon_generators(basis: GHNFBasis, q: int) -> list[LatticeVector]:
    """Generators of (L : q) = {f : q*f in L}."""
    cols = list(basis.columns)
    n = basis.dim
    augmented = cols + [LatticeVector.unit(n, r, IntPoly(q)) for r in range(n)]
    out = []
    for s in syzygy_basis(augmented, n):
        tail = LatticeVector(s.entries[len(cols):])
        if not tail.is_zero():
            out.append(tail)
    return out


def z_factor(basis: GHNFBasis, trial_bound: int = DEFAULT_TRIAL_BOUND) -> list[SaturationWitness]:
    """Empty iff L is Z-saturated; otherwise witnesses with prime multipliers."""
    if basis.is_empty():
        return []
    cols = list(basis.columns)
    found: dict = {}
    for q in _candidate_primes(basis, trial_bound):
        for w in _colon_generators(basis, q):
            nf = grem(w, cols)
            if nf.is_zero():
                continue
            h = _pivot_sign_normalize(nf)
            if h not in found:
                found[h] = SaturationWitness.checked(h, IntPoly(q), basis)
    return [found[k] for k in sorted(found, key=_vector_key)]


def _residue_kernel(cols: list[LatticeVector], p: IntPoly) -> list[tuple[RatPoly, ...]]:
    """Kernel basis of the column matrix over K = Q[x]/(p).

    Pivots are chosen from the last column backwards, so free variables sit
    at the leading block positions; this pins the canonical witness choice.
    """
    t = len(cols)
    n = cols[0].dim
    rev = [cols[t - 1 - c] for c in range(t)]
    rows = [
        [ResidueElem(rev[c].entries[r].to_rat(), p) for c in range(t)]
        for r in range(n)
    ]
    pivots: dict[int, int] = {}
    rank_ = 0
    for col in range(t):
        sel = None
        for r in range(rank_, n):
            if not rows[r][col].is_zero():
                sel = r
                break
        if sel is None:
            continue
        rows[rank_], rows[sel] = rows[sel], rows[rank_]
        inv = rows[rank_][col].inverse()
        rows[rank_] = [x * inv for x in rows[rank_]]
        for r in range(n):
            if r != rank_ and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank_])]
        pivots[col] = rank_
        rank_ += 1
    basis = []
    zero = RatPoly.zero()
    for col in range(t):
        if col in pivots:
            continue
        vec_rev = [zero] * t
        vec_rev[col] = RatPoly.one()
        for pc, pr in pivots.items():
            vec_rev[pc] = -rows[pr][col].rep
        basis.append(tuple(vec_rev[t - 1 - c] for c in range(t)))
    return basis


def _lift_witness(
    first_cols: list[LatticeVector], p: IntPoly, b: tuple[RatPoly, ...], basis: GHNFBasis
) -> SaturationWitness:
    """Turn a kernel vector into the primitive integral witness g with
    M*b = p(x) * g / m (denominators cleared, positive pivot sign)."""
    n = first_cols[0].dim
    acc = [RatPoly.zero() for _ in range(n)]
    for coeff, col in zip(b, first_cols):
        if coeff.is_zero():
            continue
        for r in range(n):
            acc[r] = acc[r] + coeff * col.entries[r].to_rat()
    prat = p.to_rat()
    quotient = []
    for r in range(n):
        qr, rem = acc[r].divrem(prat)
        if not rem.is_zero():
            raise AssertionError("kernel lift is not divisible by the modulus")
        quotient.append(qr)
    den = 1
    for qr in quotient:
        d = qr.denominator_lcm()
        den = den * d // int_gcd(den, d)
    integral = LatticeVector([(qr * den).to_int() for qr in quotient])
    primitive = _pivot_sign_normalize(integral.primitive_part())
    try:
        return SaturationWitness.checked(primitive, p, basis)
    except AssertionError:
        # Only reachable if the lattice was not Z-saturated after all; the
        # unscaled integral vector is always a valid witness.
        return SaturationWitness.checked(_pivot_sign_normalize(integral), p, basis)


def _nonconstant_irreducible_factors(
    product: IntPoly, trial_bound: int
) -> list[IntPoly]:
    if product.is_zero():
        raise AssertionError("pivot corner product cannot be zero")
    _, factors = factor_poly(product, trial_bound)
    out = [q for q, _ in factors if q.deg() >= 1]
    return sorted(set(out), key=lambda q: (q.deg(), q.coeffs))


def _zx_step2(basis: GHNFBasis, trial_bound: int) -> list[SaturationWitness]:
    """Polynomial-multiplier witnesses; assumes L is already Z-saturated."""
    if basis.is_empty():
        return []
    first_cols = basis.first_block_columns()
    product = IntPoly.one()
    for col in first_cols:
        product = product * col.entries[leading_term(col).index]
    found: dict = {}
    for p in _nonconstant_irreducible_factors(product, trial_bound):
        for b in _residue_kernel(first_cols, p):
            w = _lift_witness(first_cols, p, b, basis)
            if w.vector not in found:
                found[w.vector] = w
    return [found[k] for k in sorted(found, key=_vector_key)]


def zx_factor(basis: GHNFBasis, trial_bound: int = DEFAULT_TRIAL_BOUND) -> list[SaturationWitness]:
    """Empty iff L is Z[x]-saturated (Z-saturation first, then Q[x] via kernels)."""
    zs = z_factor(basis, trial_bound)
    if zs:
        return zs
    return _zx_step2(basis, trial_bound)


def is_qx_saturated(basis: GHNFBasis, trial_bound: int = DEFAULT_TRIAL_BOUND) -> bool:
    """Linear independence of the block-leading columns over every residue field."""
    if basis.is_empty():
        return True
    first_cols = basis.first_block_columns()
    product = IntPoly.one()
    for col in first_cols:
        product = product * col.entries[leading_term(col).index]
    for p in _nonconstant_irreducible_factors(product, trial_bound):
        if _residue_kernel(first_cols, p):
            return False
    return True


@dataclass(frozen=True)
class SaturationRound:
    kind: str  # "z" or "zx"
    witnesses: tuple[SaturationWitness, ...]


@dataclass(frozen=True)
class SaturationResult:
    lattice: ZxLattice
    rounds: tuple[SaturationRound, ...]
    multiplier: IntPoly  # q with q * sat(L) contained in L

    @property
    def growth_rounds(self) -> int:
        return len(self.rounds)


def sat_zx(
    U: list[LatticeVector],
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
) -> SaturationResult:
    """Generators of sat_{Z[x]}((U)) with the per-round witness trace."""
    if not U:
        raise PreconditionError("sat_zx needs at least one generator")
    dim = U[0].dim
    gens = [u for u in U if not u.is_zero()]
    rounds: list[SaturationRound] = []
    multiplier = IntPoly.one()
    for _ in range(max_rounds):
        basis = buchberger(gens) if gens else GHNFBasis((), dim)
        witnesses = z_factor(basis, trial_bound)
        kind = "z"
        if not witnesses:
            witnesses = _zx_step2(basis, trial_bound)
            kind = "zx"
        if not witnesses:
            return SaturationResult(ZxLattice.from_ghnf(basis), tuple(rounds), multiplier)
        rounds.append(SaturationRound(kind, tuple(witnesses)))
        for w in witnesses:
            multiplier = multiplier * w.multiplier
        gens = list(basis.columns) + [w.vector for w in witnesses]
    raise ResourceExhausted(
        f"saturation did not stabilize within {max_rounds} rounds"
    )


@dataclass(frozen=True)
class ToricVerdict:
    is_toric: bool
    witnesses: tuple[SaturationWitness, ...]
    saturated_lattice: ZxLattice


def is_toric(
    U: list[LatticeVector],
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
) -> ToricVerdict:
    """A lattice is toric iff it equals its own Z[x]-saturation."""
    if not U:
        raise PreconditionError("is_toric needs at least one generator")
    dim = U[0].dim
    gens = [u for u in U if not u.is_zero()]
    basis = buchberger(gens) if gens else GHNFBasis((), dim)
    witnesses = tuple(zx_factor(basis, trial_bound))
    result = sat_zx(U, max_rounds, trial_bound)
    return ToricVerdict(not witnesses, witnesses, result.lattice)
