"""Integer and Z[x] factorization at desk scale.

Integers: trial division up to a configurable bound, loud failure beyond it.
Polynomials: content/primitive split, squarefree radical via Q[x] gcd,
rational-root extraction, then small-prime Berlekamp + Hensel lifting with
subset recombination for what remains.  Every result is re-multiplied and
checked before it is returned.
"""

from __future__ import annotations

from math import gcd as int_gcd, isqrt

from .errors import ResourceExhausted
from .poly_core import IntPoly, gcd_qx

DEFAULT_TRIAL_BOUND = 10**6


def factor_int(n: int, bound: int = DEFAULT_TRIAL_BOUND) -> tuple[int, list[int]]:
    """Factor n as sign * product(primes); primes returned sorted.

    Raises ResourceExhausted if a prime factor beyond bound**2 cannot be
    certified by trial division alone.
    """
    if n == 0:
        raise ZeroDivisionError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    primes = []
    for p in _trial_candidates(bound):
        if p * p > n:
            break
        while n % p == 0:
            primes.append(p)
            n //= p
    if n > 1:
        # All remaining prime factors exceed the bound, so a cofactor within
        # bound**2 is prime; certify slightly beyond that, then give up loudly.
        if n <= bound * bound:
            primes.append(n)
        elif isqrt(n) <= max(bound, 10**6) and _is_certain_prime(n):
            primes.append(n)
        else:
            raise ResourceExhausted(
                f"trial division bound {bound} exceeded with cofactor {n}"
            )
    return sign, primes


def _trial_candidates(bound):
    yield 2
    yield 3
    p = 5
    while p <= bound:
        yield p
        yield p + 2
        p += 6


def _is_certain_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _trial_candidates(isqrt(n) + 1):
        if p * p > n:
            return True
        if n % p == 0:
            return False
    return True


def factor_poly(p: IntPoly, trial_bound: int = DEFAULT_TRIAL_BOUND) -> tuple[int, list[tuple[IntPoly, int]]]:
    """Factor a nonzero p as content * product(q_i^m_i).

    Returns (content, [(q, multiplicity), ...]) where each q is irreducible
    over Q, primitive with positive leading coefficient.  Factors are sorted
    by (degree, coefficients) for determinism.
    """
    if p.is_zero():
        raise ZeroDivisionError("cannot factor the zero polynomial")
    content = p.content()
    if p.lc() < 0:
        content = -content
    prim = IntPoly(tuple(c // content for c in p.coeffs))
    if prim.deg() == 0:
        return content, []

    radical = _radical(prim)
    factors = []
    for q in _factor_squarefree(radical):
        mult = 0
        rem = prim
        while q.divides(rem):
            rem = rem.exact_div(q)
            mult += 1
        factors.append((q, mult))
    factors.sort(key=lambda fm: (fm[0].deg(), fm[0].coeffs))

    check = IntPoly((content,))
    for q, m in factors:
        for _ in range(m):
            check = check * q
    if check != p:
        raise AssertionError(f"factorization self-check failed for {p!r}")
    return content, factors


def _radical(prim: IntPoly) -> IntPoly:
    """Squarefree part of a primitive polynomial, positive leading coefficient."""
    d = prim.derivative()
    if d.is_zero():
        return _positive_primitive(prim)
    g = gcd_qx(prim.to_rat(), d.to_rat())
    if g.deg() == 0:
        return _positive_primitive(prim)
    rad = prim.to_rat().divrem(g)[0]
    den = rad.denominator_lcm()
    return _positive_primitive((rad * den).to_int())


def _positive_primitive(p: IntPoly) -> IntPoly:
    prim = p.primitive_part()
    return -prim if prim.lc() < 0 else prim


def _factor_squarefree(f: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree f with positive lc."""
    out = []
    if f.lowdeg() > 0:
        out.append(IntPoly.x())
        f = IntPoly(f.coeffs[f.lowdeg():])
    f = _extract_rational_roots(f, out)
    d = f.deg()
    if d <= 0:
        return out
    if d <= 3:
        # No rational root: degree 2 and 3 are irreducible over Q.
        out.append(f)
        return out
    out.extend(_zassenhaus(f))
    return out


def _extract_rational_roots(f: IntPoly, out: list[IntPoly]) -> IntPoly:
    while f.deg() >= 1:
        root = _find_rational_root(f)
        if root is None:
            return f
        a, b = root  # root a/b, factor b*x - a
        lin = IntPoly((-a, b))
        out.append(lin)
        f = f.exact_div(lin)
    return f


def _find_rational_root(f: IntPoly):
    trailing = f.coeff(f.lowdeg())
    lead = f.lc()
    for b in _positive_divisors(abs(lead)):
        for a in _positive_divisors(abs(trailing)):
            for aa in (a, -a):
                if int_gcd(aa, b) != 1:
                    continue
                from fractions import Fraction

                if f.evaluate(Fraction(aa, b)) == 0:
                    return aa, b
    return None


def _positive_divisors(n: int) -> list[int]:
    divs = set()
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            divs.add(d)
            divs.add(n // d)
    return sorted(divs)


# ---------------------------------------------------------------------------
# Zassenhaus for primitive squarefree f, deg >= 4.  Work on the monic
# associate F(x) = lc^(deg-1) * f(x/lc) so Hensel lifting never has to track
# leading coefficients, then map factors back through x -> lc*x.

def _zassenhaus(f: IntPoly) -> list[IntPoly]:
    lc = f.lc()
    n = f.deg()
    F = IntPoly(tuple(c * lc ** (n - 1 - k) for k, c in enumerate(f.coeffs)))
    assert F.lc() == 1

    p = _pick_prime(F)
    modular = _berlekamp(tuple(c % p for c in F.coeffs), p)
    if len(modular) == 1:
        return [f]

    bound = _mignotte_bound(F)
    exp = 1
    modulus = p
    while modulus <= 2 * bound:
        modulus *= p
        exp += 1
    lifted = _lift_tree(F.coeffs, modular, p, modulus)

    raw = _recombine(F, lifted, modulus)
    out = []
    for H in raw:
        back = _positive_primitive(IntPoly(tuple(c * lc**k for k, c in enumerate(H.coeffs))))
        out.append(back)
    check = IntPoly((1,))
    for q in out:
        check = check * q
    if check != f:
        raise AssertionError(f"zassenhaus self-check failed for {f!r}")
    return out


def _pick_prime(F: IntPoly) -> int:
    for p in _trial_candidates(10**4):
        if p < 3 or F.lc() % p == 0:
            continue
        fp = tuple(c % p for c in F.coeffs)
        dp = _fp_derivative(fp, p)
        if not any(dp):
            continue
        if _fp_deg(_fp_gcd(fp, dp, p)) == 0:
            return p
    raise ResourceExhausted("no suitable small prime for modular factoring")


def _mignotte_bound(F: IntPoly) -> int:
    norm2 = isqrt(sum(c * c for c in F.coeffs)) + 1
    return (2 ** F.deg()) * norm2


# --- F_p[x] helpers: dense int tuples, constant term first -----------------

def _fp_trim(a):
    end = len(a)
    while end > 0 and a[end - 1] == 0:
        end -= 1
    return tuple(a[:end])


def _fp_deg(a):
    return len(a) - 1


def _fp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _fp_trim(out)


def _fp_sub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return _fp_trim(out)


def _fp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    inv = pow(b[-1], -1, p)
    rem = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(rem) >= len(b):
        if rem[-1] == 0:
            rem.pop()
            continue
        k = len(rem) - len(b)
        c = rem[-1] * inv % p
        q[k] = c
        for i, y in enumerate(b):
            rem[k + i] = (rem[k + i] - c * y) % p
        rem.pop()
    return _fp_trim(q), _fp_trim(rem)


def _fp_gcd(a, b, p):
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = tuple(c * inv % p for c in a)
    return a


def _fp_derivative(a, p):
    return _fp_trim([k * c % p for k, c in enumerate(a)][1:])


def _fp_powmod(base, e, mod, p):
    result = (1,)
    base = _fp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _fp_divmod(_fp_mul(result, base, p), mod, p)[1]
        base = _fp_divmod(_fp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _berlekamp(fbar, p):
    """Monic irreducible factors of a squarefree monic fbar over F_p."""
    inv = pow(fbar[-1], -1, p)
    fbar = tuple(c * inv % p for c in fbar)
    n = _fp_deg(fbar)
    if n <= 1:
        return [fbar]

    # Berlekamp Q-matrix: rows are x^(i*p) mod fbar.
    rows = []
    xp = _fp_powmod((0, 1), p, fbar, p)
    cur = (1,)
    for i in range(n):
        rows.append(list(cur) + [0] * (n - len(cur)))
        cur = _fp_divmod(_fp_mul(cur, xp, p), fbar, p)[1]
    # Kernel of (Q - I)^T acting on coefficient vectors.
    mat = [[(rows[i][j] - (1 if i == j else 0)) % p for i in range(n)] for j in range(n)]
    kernel = _fp_kernel(mat, p)
    r = len(kernel)
    if r == 1:
        return [fbar]

    factors = [fbar]
    for v in kernel[1:]:
        if len(factors) == r:
            break
        vpoly = _fp_trim(v)
        next_factors = []
        for g in factors:
            if _fp_deg(g) <= 1:
                next_factors.append(g)
                continue
            pieces = []
            rem = g
            for c in range(p):
                if _fp_deg(rem) < 1:
                    break
                h = _fp_gcd(rem, _fp_sub(vpoly, (c,), p), p)
                if 0 < _fp_deg(h) <= _fp_deg(rem):
                    pieces.append(h)
                    rem = _fp_divmod(rem, h, p)[0]
            if _fp_deg(rem) > 0:
                pieces.append(rem)
            next_factors.extend(pieces if pieces else [g])
        factors = next_factors
    return sorted(factors)


def _fp_kernel(mat, p):
    """Basis of the kernel of a square matrix over F_p (list of rows)."""
    n = len(mat)
    m = [row[:] for row in mat]
    pivots = {}
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, n):
            if m[r][col] % p != 0:
                sel = r
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = pow(m[row][col], -1, p)
        m[row] = [c * inv % p for c in m[row]]
        for r in range(n):
            if r != row and m[r][col] % p != 0:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[row])]
        pivots[col] = row
        row += 1
    basis = []
    for col in range(n):
        if col in pivots:
            continue
        v = [0] * n
        v[col] = 1
        for pc, pr in pivots.items():
            v[pc] = (-m[pr][col]) % p
        basis.append(v)
    return basis


# --- Hensel lifting (all factors monic) ------------------------------------

def _mod_coeffs(a, m):
    return _fp_trim([c % m for c in a])


def _z_mul(a, b, m):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % m
    return _fp_trim(out)


def _z_sub(a, b, m):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % m
    return _fp_trim(out)


def _z_add(a, b, m):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = (out[i] + y) % m
    return _fp_trim(out)


def _z_divmod_monic(a, b, m):
    """Division by monic b, coefficients in Z/m."""
    assert b and b[-1] == 1
    rem = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(rem) >= len(b):
        if rem[-1] % m == 0:
            rem.pop()
            continue
        k = len(rem) - len(b)
        c = rem[-1] % m
        q[k] = c
        for i, y in enumerate(b):
            rem[k + i] = (rem[k + i] - c * y) % m
        rem.pop()
    return _fp_trim(q), _fp_trim(rem)


def _hensel_step(f, g, h, s, t, p_a):
    """One quadratic lift: from modulus p_a to p_a**2."""
    m2 = p_a * p_a
    e = _z_sub(_mod_coeffs(f, m2), _z_mul(g, h, m2), m2)
    q, r = _z_divmod_monic(_z_mul(s, e, m2), h, m2)
    g1 = _z_add(_z_add(g, _z_mul(t, e, m2), m2), _z_mul(q, g, m2), m2)
    h1 = _z_add(h, r, m2)
    b = _z_sub(_z_add(_z_mul(s, g1, m2), _z_mul(t, h1, m2), m2), (1,), m2)
    c, d = _z_divmod_monic(_z_mul(s, b, m2), h1, m2)
    s1 = _z_sub(s, d, m2)
    t1 = _z_sub(_z_sub(t, _z_mul(t, b, m2), m2), _z_mul(c, g1, m2), m2)
    return g1, h1, s1, t1


def _lift_pair(f, g0, h0, p, modulus):
    """Lift f = g0*h0 (mod p) to f = g*h (mod modulus); g0, h0 monic coprime."""
    g_, s_, t_ = _fp_bezout(g0, h0, p)
    assert _fp_deg(g_) == 0
    inv = pow(g_[0], -1, p)
    s = tuple(c * inv % p for c in s_)
    t = tuple(c * inv % p for c in t_)
    g, h = g0, h0
    cur = p
    while cur < modulus:
        g, h, s, t = _hensel_step(f, g, h, s, t, cur)
        cur *= cur
    return _mod_coeffs(g, modulus), _mod_coeffs(h, modulus)


def _fp_bezout(a, b, p):
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = _fp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _fp_sub(s0, _fp_mul(q, s1, p), p)
        t0, t1 = t1, _fp_sub(t0, _fp_mul(q, t1, p), p)
    return r0, s0, t0


def _lift_tree(f_coeffs, factors, p, modulus):
    """Lift monic factors of a monic f from mod p to mod modulus."""
    if len(factors) == 1:
        return [_mod_coeffs(f_coeffs, modulus)]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g0 = (1,)
    for fac in left:
        g0 = _fp_mul(g0, fac, p)
    h0 = (1,)
    for fac in right:
        h0 = _fp_mul(h0, fac, p)
    g, h = _lift_pair(f_coeffs, g0, h0, p, modulus)
    return _lift_tree(g, left, p, modulus) + _lift_tree(h, right, p, modulus)


def _symmetric(c, m):
    c %= m
    return c - m if c > m // 2 else c


def _recombine(F: IntPoly, lifted, modulus) -> list[IntPoly]:
    """Subset recombination of lifted monic factors into true factors of F."""
    from itertools import combinations

    pool = list(lifted)
    rem = F
    out = []
    size = 1
    while 2 * size <= len(pool):
        found = False
        for subset in combinations(range(len(pool)), size):
            prod = (1,)
            for i in subset:
                prod = _z_mul(prod, pool[i], modulus)
            cand = IntPoly(tuple(_symmetric(c, modulus) for c in prod))
            if cand.deg() >= 1 and cand.divides(rem):
                out.append(cand)
                rem = rem.exact_div(cand)
                pool = [f for i, f in enumerate(pool) if i not in subset]
                found = True
                break
        if not found:
            size += 1
    if rem.deg() >= 1:
        out.append(rem)
    return sorted(out, key=lambda q: (q.deg(), q.coeffs))
