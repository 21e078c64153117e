"""Exact univariate arithmetic: Z[x], Q[x], and residue fields Q[x]/(p(x)).

Polynomials are immutable dense coefficient tuples, constant term first,
trailing zeros trimmed.  deg(0) is -infinity and lowdeg(0) is 0; every other
module consumes these conventions and must not redefine them.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd as int_gcd

NEG_INF = float("-inf")


def gcd_bezout_int(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, u, v) with u*a + v*b = g = gcd(a, b) > 0."""
    if a == 0 and b == 0:
        raise ZeroDivisionError("gcd_bezout_int(0, 0) is undefined")
    r0, r1 = a, b
    u0, u1 = 1, 0
    v0, v1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0 < 0:
        r0, u0, v0 = -r0, -u0, -v0
    return r0, u0, v0


def _trim(coeffs):
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class IntPoly:
    """A polynomial over arbitrary-precision integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, IntPoly):
            object.__setattr__(self, "coeffs", coeffs.coeffs)
            return
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        cs = _trim([int(c) for c in coeffs])
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @staticmethod
    def _raw(coeffs: tuple) -> "IntPoly":
        # Fast path for internal arithmetic: coeffs already integers.
        p = object.__new__(IntPoly)
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(p, "coeffs", tuple(coeffs[:end]))
        return p

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly(())

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly((1,))

    @staticmethod
    def x(k: int = 1) -> "IntPoly":
        """The monomial x^k."""
        return IntPoly((0,) * k + (1,))

    @staticmethod
    def monomial(coeff: int, k: int) -> "IntPoly":
        return IntPoly((0,) * k + (coeff,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def deg(self):
        """Degree; -infinity for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def lowdeg(self) -> int:
        """Least k with a nonzero x^k coefficient; 0 for the zero polynomial."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return 0

    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def content(self) -> int:
        """Nonnegative gcd of the coefficients."""
        return reduce(int_gcd, (abs(c) for c in self.coeffs), 0)

    def primitive_part(self) -> "IntPoly":
        """self divided by its content, sign kept; 0 for 0."""
        c = self.content()
        if c <= 1:
            return self
        return IntPoly(tuple(a // c for a in self.coeffs))

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if self.is_zero() or k == 0:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def evaluate(self, v: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a:
            return other
        if not b:
            return self
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly._raw(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        if not other.coeffs:
            return self
        out = list(self.coeffs) + [0] * (len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPoly._raw(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly._raw(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly._raw(tuple(other * c for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly._raw(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self):
        return f"IntPoly({format_poly(self)!r})"

    def to_rat(self) -> "RatPoly":
        return RatPoly(tuple(Fraction(c) for c in self.coeffs))

    def divides(self, other: "IntPoly") -> bool:
        """Exact divisibility in Z[x]."""
        if self.is_zero():
            return other.is_zero()
        q, r = other.to_rat().divrem(self.to_rat())
        return r.is_zero() and q.is_integral()

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        q, r = self.to_rat().divrem(other.to_rat())
        if not r.is_zero() or not q.is_integral():
            raise ValueError(f"{self!r} is not divisible by {other!r}")
        return q.to_int()


class RatPoly:
    """A polynomial over exact rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, RatPoly):
            object.__setattr__(self, "coeffs", coeffs.coeffs)
            return
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        cs = _trim([Fraction(c) for c in coeffs])
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @staticmethod
    def zero() -> "RatPoly":
        return RatPoly(())

    @staticmethod
    def one() -> "RatPoly":
        return RatPoly((Fraction(1),))

    def is_zero(self) -> bool:
        return not self.coeffs

    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        out = list(self.coeffs) + [Fraction(0)] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return RatPoly(out)

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return RatPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("RatPoly", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self):
        inner = "+".join(f"{c}*x^{k}" for k, c in enumerate(self.coeffs)) or "0"
        return f"RatPoly({inner})"

    def divrem(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        """Return (q, r) with self = q*other + r and deg r < deg other."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        q = [Fraction(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        rem = list(self.coeffs)
        dlc = other.lc()
        dd = len(other.coeffs) - 1
        while len(rem) - 1 >= dd and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dd or not rem:
                break
            k = len(rem) - 1 - dd
            f = rem[-1] / dlc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
        return RatPoly(q), RatPoly(rem)

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        lc = self.lc()
        if lc == 1:
            return self
        return RatPoly(tuple(c / lc for c in self.coeffs))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_int(self) -> IntPoly:
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return IntPoly(tuple(int(c) for c in self.coeffs))

    def denominator_lcm(self) -> int:
        out = 1
        for c in self.coeffs:
            out = out * c.denominator // int_gcd(out, c.denominator)
        return out


def divrem_qx(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly]:
    return a.divrem(b)


def gcd_qx(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd in Q[x]."""
    if a.is_zero() and b.is_zero():
        raise ZeroDivisionError("gcd_qx(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a.divrem(b)[1]
    return a.monic()


def bezout_qx(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly, RatPoly]:
    """Return (g, u, v) with u*a + v*b = g = monic gcd(a, b)."""
    if a.is_zero() and b.is_zero():
        raise ZeroDivisionError("bezout_qx(0, 0) is undefined")
    r0, r1 = a, b
    u0, u1 = RatPoly.one(), RatPoly.zero()
    v0, v1 = RatPoly.zero(), RatPoly.one()
    while not r1.is_zero():
        q, r = r0.divrem(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    lc = r0.lc()
    inv = Fraction(1) / lc
    return r0 * inv, u0 * inv, v0 * inv


class ResidueElem:
    """An element of the field Q[x]/(p(x)) for irreducible p."""

    __slots__ = ("rep", "modulus")

    def __init__(self, rep: RatPoly, modulus: IntPoly):
        if isinstance(rep, IntPoly):
            rep = rep.to_rat()
        rep = rep.divrem(modulus.to_rat())[1]
        object.__setattr__(self, "rep", rep)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("ResidueElem is immutable")

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def _check(self, other: "ResidueElem"):
        if self.modulus != other.modulus:
            raise ValueError("residue elements have different moduli")

    def __add__(self, other):
        self._check(other)
        return ResidueElem(self.rep + other.rep, self.modulus)

    def __sub__(self, other):
        self._check(other)
        return ResidueElem(self.rep - other.rep, self.modulus)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ResidueElem(self.rep * other, self.modulus)
        self._check(other)
        return ResidueElem(self.rep * other.rep, self.modulus)

    def __neg__(self):
        return ResidueElem(-self.rep, self.modulus)

    def __eq__(self, other):
        return (
            isinstance(other, ResidueElem)
            and self.modulus == other.modulus
            and self.rep == other.rep
        )

    def __hash__(self):
        return hash(("ResidueElem", self.rep, self.modulus))

    def __repr__(self):
        return f"ResidueElem({self.rep!r} mod {format_poly(self.modulus)})"

    def inverse(self) -> "ResidueElem":
        return residue_inverse(self)


def residue_inverse(e: ResidueElem) -> ResidueElem:
    """Inverse in Q[x]/(p); requires e != 0 and p irreducible."""
    if e.is_zero():
        raise ZeroDivisionError("zero has no inverse in the residue field")
    g, u, _ = bezout_qx(e.rep, e.modulus.to_rat())
    if g.deg() != 0:
        raise ValueError("modulus is not irreducible: nontrivial gcd found")
    return ResidueElem(u, e.modulus)


# ---------------------------------------------------------------------------
# Text grammar:
#   poly := term (('+'|'-') term)* ; term := coeff | coeff '*' mono | mono
#   mono := 'x' ('^' nat)? ; coeff := '-'? digits
# A leading sign on the first term is accepted.

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<x>x)|(?P<op>[-+*^]))")


class PolyParseError(ValueError):
    pass


def parse_poly(text: str) -> IntPoly:
    """Parse the CLI polynomial grammar, e.g. '2*x^2+1', 'x-1', '0'."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise PolyParseError(f"unexpected character at {pos!r} in {text!r}")
            break
        tokens.append((m.lastgroup, m.group(m.lastgroup)))
        pos = m.end()
    if not tokens:
        raise PolyParseError("empty polynomial")

    coeffs: dict[int, int] = {}
    i = 0
    sign = 1
    if tokens[0] == ("op", "-"):
        sign = -1
        i = 1
    elif tokens[0] == ("op", "+"):
        i = 1
    while True:
        coeff, power, i = _parse_term(tokens, i, text)
        coeffs[power] = coeffs.get(power, 0) + sign * coeff
        if i == len(tokens):
            break
        kind, val = tokens[i]
        if kind != "op" or val not in "+-":
            raise PolyParseError(f"expected '+' or '-' in {text!r}")
        sign = 1 if val == "+" else -1
        i += 1
    if not coeffs:
        return IntPoly(())
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return IntPoly(out)


def _parse_term(tokens, i, text):
    if i >= len(tokens):
        raise PolyParseError(f"dangling operator in {text!r}")
    kind, val = tokens[i]
    if kind == "num":
        coeff = int(val)
        i += 1
        if i < len(tokens) and tokens[i] == ("op", "*"):
            i += 1
            if i >= len(tokens) or tokens[i][0] != "x":
                raise PolyParseError(f"expected monomial after '*' in {text!r}")
            power, i = _parse_mono(tokens, i, text)
            return coeff, power, i
        return coeff, 0, i
    if kind == "x":
        power, i = _parse_mono(tokens, i, text)
        return 1, power, i
    raise PolyParseError(f"expected a term in {text!r}")


def _parse_mono(tokens, i, text):
    i += 1  # past 'x'
    if i < len(tokens) and tokens[i] == ("op", "^"):
        i += 1
        if i >= len(tokens) or tokens[i][0] != "num":
            raise PolyParseError(f"expected exponent after '^' in {text!r}")
        return int(tokens[i][1]), i + 1
    return 1, i


def format_poly(p: IntPoly) -> str:
    """Canonical writer for the grammar: descending powers, e.g. '2*x^2+1'."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "x" if k == 1 else f"x^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append(sign + body)
    return "".join(parts)
