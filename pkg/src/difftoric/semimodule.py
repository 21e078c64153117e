"""Affine N[x]-semimodules: membership search, faces, pointedness.

Membership of v in N[x](u_1, ..., u_m) is decided for certificates of
bounded x-degree: the problem flattens to nonnegative-integer feasibility of
an exact linear system, searched breadth-first with the classic inner-product
pruning rule.  Within the degree bound the answer is exact; past a node or
height cap the answer is reported as unknown, never guessed.  Face checks run
the membership search over a finite test set of semimodule elements.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError, ResourceExhausted
from .poly_core import IntPoly
from .zx_lattice import LatticeVector, ZxLattice, member


@dataclass(frozen=True)
class Bounds:
    """Search bounds threaded through membership and face checking."""

    degree: int | None = None  # absolute certificate-degree cap; None = derived
    slack: int = 2  # added to deg(v) + max deg(u_i) when degree is None
    height: int | None = None  # per-coefficient cap on certificates
    nodes: int = 200_000
    subset_cap: int = 12
    power_k: int = 3  # x^k multipliers used in the face test set


DEFAULT_BOUNDS = Bounds()


@dataclass(frozen=True)
class Semimodule:
    generators: tuple[LatticeVector, ...]

    def __post_init__(self):
        dims = {g.dim for g in self.generators}
        if len(dims) > 1:
            raise PreconditionError("semimodule generators have mixed dimensions")

    @property
    def dim(self) -> int:
        if not self.generators:
            raise PreconditionError("empty semimodule has no fixed dimension")
        return self.generators[0].dim


@dataclass(frozen=True)
class MembershipAnswer:
    status: str  # "yes" | "no" | "unknown"
    certificate: tuple[IntPoly, ...] | None
    degree_bound: int
    height_bound: int | None
    certificate_degree: int | None

    def __bool__(self):
        return self.status == "yes"


def _poly_deg0(p: IntPoly) -> int:
    d = p.deg()
    return int(d) if p.coeffs else 0


def ss_member(v: LatticeVector, S: Semimodule, bounds: Bounds = DEFAULT_BOUNDS) -> MembershipAnswer:
    """Does v = sum g_i u_i for some g_i in N[x] of bounded degree?

    Yes-answers carry a certificate that is re-verified by expansion before
    being returned.
    """
    if S.generators and v.dim != S.generators[0].dim:
        raise PreconditionError("vector and semimodule dimensions differ")
    gens = [g for g in S.generators if not g.is_zero()]
    dmax = max((_poly_deg0(e) for g in gens for e in g.entries), default=0)
    e = max((_poly_deg0(x) for x in v.entries), default=0)
    cap = bounds.degree if bounds.degree is not None else e + dmax + bounds.slack

    if v.is_zero():
        return MembershipAnswer("yes", tuple(IntPoly.zero() for _ in S.generators), cap, bounds.height, 0)
    if not gens:
        return MembershipAnswer("no", None, cap, bounds.height, None)

    nrows = v.dim * (cap + dmax + 1)

    def flatten(vec: LatticeVector, shift: int = 0) -> tuple[int, ...]:
        out = [0] * nrows
        for c, entry in enumerate(vec.entries):
            for k, coeff in enumerate(entry.coeffs):
                if coeff:
                    out[c * (cap + dmax + 1) + k + shift] = coeff
        return tuple(out)

    cols = []  # (generator index, x-power, flattened column)
    for gi, g in enumerate(gens):
        for k in range(cap + 1):
            cols.append((gi, k, flatten(g, k)))
    target = flatten(v)

    found, capped = _cd_search(cols, target, bounds)
    if found is None:
        status = "unknown" if capped else "no"
        return MembershipAnswer(status, None, cap, bounds.height, None)

    per_gen = [[0] * (cap + 1) for _ in gens]
    for (gi, k, _), count in zip(cols, found):
        per_gen[gi][k] = count
    cert_nonzero = [IntPoly(cs) for cs in per_gen]
    # Re-verify by expansion; a false yes is never returned.
    acc = LatticeVector.zero(v.dim)
    for g, c in zip(gens, cert_nonzero):
        acc = acc + g.scale(c)
    if acc != v:
        raise AssertionError("membership certificate failed re-verification")
    cert = []
    it = iter(cert_nonzero)
    for g in S.generators:
        cert.append(next(it) if not g.is_zero() else IntPoly.zero())
    cdeg = max((_poly_deg0(c) for c in cert_nonzero), default=0)
    return MembershipAnswer("yes", tuple(cert), cap, bounds.height, cdeg)


def _cd_search(cols, target, bounds: Bounds):
    """Breadth-first nonnegative solve of sum y_j col_j = target.

    Homogeneous slack formulation: an extra variable carries the column
    -target and must equal 1 in a solution.  A node grows in direction j only
    when the residual moves strictly toward zero along column j, and nodes
    dominating an already-found solution are pruned; together these make the
    search complete and finite.  Returns (solution | None, capped_flag).
    """
    q = len(cols)
    columns = [c[2] for c in cols]
    columns.append(tuple(-t for t in target))
    tvar = q
    minimals: list[tuple[int, ...]] = []
    seen = set()
    queue = deque()
    budget = bounds.nodes
    capped = False
    for j in range(q + 1):
        y = tuple(1 if i == j else 0 for i in range(q + 1))
        seen.add(y)
        queue.append((y, columns[j]))
    while queue:
        y, res = queue.popleft()
        if not any(res):
            if y[tvar] == 1:
                return y[:q], capped
            minimals.append(y)
            continue
        if any(all(a >= b for a, b in zip(y, m)) for m in minimals):
            continue
        for j in range(q + 1):
            if j == tvar and y[tvar] >= 1:
                continue
            col = columns[j]
            dot = 0
            for a, b in zip(res, col):
                if a and b:
                    dot += a * b
            if dot >= 0:
                continue
            if bounds.height is not None and j != tvar and y[j] + 1 > bounds.height:
                capped = True
                continue
            y2 = y[:j] + (y[j] + 1,) + y[j + 1:]
            if y2 in seen:
                continue
            seen.add(y2)
            budget -= 1
            if budget < 0:
                return None, True
            queue.append((y2, tuple(a + b for a, b in zip(res, col))))
    return None, capped


@dataclass(frozen=True)
class Face:
    parent: Semimodule
    indices: frozenset[int]
    confirmed: bool = True

    def generators(self) -> list[LatticeVector]:
        return [self.parent.generators[i] for i in sorted(self.indices)]

    def sub_semimodule(self) -> Semimodule:
        return Semimodule(tuple(self.generators()))


def _test_elements(S: Semimodule, bounds: Bounds):
    """Finite probe set: x^a u_i + x^b u_j for a, b <= K, plus the x^a u_i."""
    singles = []
    for i, u in enumerate(S.generators):
        for a in range(bounds.power_k + 1):
            singles.append(u.scale(IntPoly.x(a)) if a else u)
    pairs = []
    m = len(S.generators)
    for i in range(m):
        for j in range(i, m):
            for a in range(bounds.power_k + 1):
                for b in range(bounds.power_k + 1):
                    ui = S.generators[i].scale(IntPoly.x(a)) if a else S.generators[i]
                    uj = S.generators[j].scale(IntPoly.x(b)) if b else S.generators[j]
                    pairs.append((ui, uj, ui + uj))
    return singles, pairs


def _face_passes(S: Semimodule, subset: tuple[int, ...], bounds: Bounds, singles, pairs):
    """Both face axioms over the test set; returns (is_face, confirmed)."""
    fgens = Semimodule(tuple(S.generators[i] for i in subset))
    memo: dict[LatticeVector, str] = {}

    def mem(w: LatticeVector) -> str:
        if w not in memo:
            memo[w] = ss_member(w, fgens, bounds).status
        return memo[w]

    confirmed = True
    # Axiom 1: a sum landing in F pulls both summands in.
    for ui, uj, s in pairs:
        st = mem(s)
        if st == "unknown":
            confirmed = False
            continue
        if st == "yes":
            for part in (ui, uj):
                stp = mem(part)
                if stp == "no":
                    return False, confirmed
                if stp == "unknown":
                    confirmed = False
    # Axiom 2: x*t in F pulls t in.
    x = IntPoly.x()
    probes = singles + [s for _, _, s in pairs]
    for t in probes:
        st = mem(t.scale(x))
        if st == "unknown":
            confirmed = False
            continue
        if st == "yes":
            stt = mem(t)
            if stt == "no":
                return False, confirmed
            if stt == "unknown":
                confirmed = False
    return True, confirmed


def enumerate_faces(S: Semimodule, bounds: Bounds = DEFAULT_BOUNDS) -> list[Face]:
    """All generator subsets passing both face axioms on the test set.

    The whole semimodule always qualifies; {0} is the empty index set.
    Subsets that hit unknown memberships are flagged unconfirmed, not dropped.
    """
    m = len(S.generators)
    if m > bounds.subset_cap:
        raise ResourceExhausted(
            f"{m} generators exceed the face-enumeration cap {bounds.subset_cap}"
        )
    singles, pairs = _test_elements(S, bounds)
    faces = []
    for size in range(m + 1):
        for subset in combinations(range(m), size):
            ok, confirmed = _face_passes(S, subset, bounds, singles, pairs)
            if ok:
                faces.append(Face(S, frozenset(subset), confirmed))
    return faces


def is_pointed(S: Semimodule, bounds: Bounds = DEFAULT_BOUNDS):
    """True / False / None(unknown): does S meet -S only in 0?"""
    singles, pairs = _test_elements(S, bounds)
    saw_unknown = False
    for t in singles + [s for _, _, s in pairs]:
        if t.is_zero():
            continue
        st = ss_member(-t, S, bounds).status
        if st == "yes":
            return False
        if st == "unknown":
            saw_unknown = True
    return None if saw_unknown else True


@dataclass(frozen=True)
class FaceSaturationReport:
    holds: bool
    violations: tuple[LatticeVector, ...]

    def __bool__(self):
        return self.holds


def face_saturated_necessary(S: Semimodule, F: Face) -> FaceSaturationReport:
    """Necessary condition: sat((F)) meets (S) inside (F), checked exactly
    at the lattice level (no bounded search)."""
    from .saturation import sat_zx
    from .syzygy_transform import lattice_intersection

    fgens = F.generators()
    dim = S.dim
    if not fgens or all(g.is_zero() for g in fgens):
        return FaceSaturationReport(True, ())
    f_lat = ZxLattice(fgens, dim)
    s_lat = ZxLattice(list(S.generators), dim)
    saturated = sat_zx(fgens).lattice
    meet = lattice_intersection(saturated, s_lat)
    violations = tuple(g for g in meet.generators if not member(g, f_lat))
    return FaceSaturationReport(not violations, violations)
