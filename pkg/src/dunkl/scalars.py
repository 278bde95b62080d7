"""Exact arithmetic in the coefficient field Q(i, sqrt2)(s, c_1..c_m).

The ground ring is Q[i, r] / (i^2 + 1, r^2 - 2), a degree-4 field over Q.
On top of it we build sparse multivariate polynomials in the deformation
variables (s first, then the orbit parameters c_1..c_m) and reduced
fractions thereof.  The conventions t = s^2/2 and sqrt(2t) = s make every
square root needed downstream exact.

Scalars are immutable; equal field elements are structurally identical
(reduced fraction, denominator monic w.r.t. graded-lex order).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

_F0 = Fraction(0)
_F1 = Fraction(1)


class Coeff:
    """Element a + b*i + c*r + d*i*r of Q(i, sqrt2), with r = sqrt2."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)

    def __eq__(self, other):
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def is_zero(self):
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self):
        return not (self.b or self.c or self.d)

    def __add__(self, o):
        return Coeff(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o):
        return Coeff(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self):
        return Coeff(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, o):
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = o.a, o.b, o.c, o.d
        return Coeff(
            a * e - b * f + 2 * (c * g - d * h),
            a * f + b * e + 2 * (c * h + d * g),
            a * g + c * e - b * h - d * f,
            a * h + d * e + b * g + c * f,
        )

    def conj_i(self):
        return Coeff(self.a, -self.b, self.c, -self.d)

    def conj_r(self):
        return Coeff(self.a, self.b, -self.c, -self.d)

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(i, sqrt2)")
        z1 = self.conj_i()
        z2 = self.conj_r()
        z3 = z1.conj_r()
        num = z1 * z2 * z3
        norm = self * num  # rational by Galois theory
        assert norm.is_rational() and norm.a != 0
        inv_n = 1 / norm.a
        return Coeff(num.a * inv_n, num.b * inv_n, num.c * inv_n, num.d * inv_n)

    def __str__(self):
        parts = []
        for val, tag in ((self.a, ""), (self.b, "i"), (self.c, "r"), (self.d, "i*r")):
            if val:
                if tag:
                    parts.append(f"{val}*{tag}")
                else:
                    parts.append(f"{val}")
        if not parts:
            return "0"
        return "+".join(parts).replace("+-", "-")

    __repr__ = __str__


C_ZERO = Coeff()
C_ONE = Coeff(1)
C_I = Coeff(0, 1)
C_R = Coeff(0, 0, 1)


def _i_power(n):
    """i**n as a Coeff."""
    return (C_ONE, C_I, Coeff(-1), Coeff(0, -1))[n % 4]


# ---------------------------------------------------------------------------
# sparse polynomials: dict {exponent tuple: Coeff}, no zero values stored
# ---------------------------------------------------------------------------

def poly_add(p, q):
    out = dict(p)
    for e, v in q.items():
        w = out.get(e)
        if w is None:
            out[e] = v
        else:
            w = w + v
            if w.is_zero():
                del out[e]
            else:
                out[e] = w
    return out


def poly_neg(p):
    return {e: -v for e, v in p.items()}

def poly_sub(p, q):
    return poly_add(p, poly_neg(q))


def poly_mul(p, q):
    if len(p) == 1 and len(q) == 1:
        (e1, v1), = p.items()
        (e2, v2), = q.items()
        v = v1 * v2
        if v.is_zero():
            return {}
        return {tuple(a + b for a, b in zip(e1, e2)): v}
    out = {}
    for e1, v1 in p.items():
        for e2, v2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = v1 * v2
            w = out.get(e)
            if w is None:
                if not v.is_zero():
                    out[e] = v
            else:
                w = w + v
                if w.is_zero():
                    del out[e]
                else:
                    out[e] = w
    return out


def poly_scale(p, cf):
    if cf.is_zero():
        return {}
    return {e: v * cf for e, v in p.items()}


def _grlex_key(e):
    return (sum(e), e)


def poly_leading(p):
    """Leading (exponent, coeff) in graded-lex order."""
    e = max(p, key=_grlex_key)
    return e, p[e]


def poly_divexact(p, q):
    """Exact division p / q; raises ValueError if the remainder is nonzero."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if not p:
        return {}
    qe, qc = poly_leading(q)
    qc_inv = qc.inv()
    rem = dict(p)
    quo = {}
    while rem:
        re, rc = poly_leading(rem)
        de = tuple(a - b for a, b in zip(re, qe))
        if any(x < 0 for x in de):
            raise ValueError("inexact polynomial division")
        f = rc * qc_inv
        quo[de] = f
        rem = poly_sub(rem, poly_mul({de: f}, q))
    return quo


def _poly_try_div(p, q):
    try:
        return poly_divexact(p, q)
    except ValueError:
        return None


def poly_is_unit(p):
    return len(p) == 1 and not any(next(iter(p)))


def _monomial_content(p):
    """Componentwise min exponent over the support."""
    it = iter(p)
    m = list(next(it))
    for e in it:
        for k, x in enumerate(e):
            if x < m[k]:
                m[k] = x
    return tuple(m)


def poly_gcd(p, q):
    """gcd over the coefficient field, monic, via primitive PRS recursion."""
    if not p:
        return _monic(q)
    if not q:
        return _monic(p)
    if poly_is_unit(p) or poly_is_unit(q):
        nv = len(next(iter(p)))
        return {(0,) * nv: C_ONE}
    # common monomial factor first
    mp = _monomial_content(p)
    mq = _monomial_content(q)
    mg = tuple(min(a, b) for a, b in zip(mp, mq))
    if any(mg):
        shift = {tuple(-x for x in mg): C_ONE}
        # divide out, recurse, multiply back
        g = poly_gcd(poly_mul(p, shift), poly_mul(q, shift))
        return _monic(poly_mul(g, {mg: C_ONE}))
    nv = len(next(iter(p)))
    var = max(k for e in list(p) + list(q) for k in range(nv) if e[k])
    fu = _to_univ(p, var)
    gu = _to_univ(q, var)
    if max(fu) == 0 and max(gu) == 0:
        return _monic(poly_gcd(fu[0], gu[0]))
    cf = _univ_content(fu)
    cg = _univ_content(gu)
    cont = poly_gcd(cf, cg)
    fu = {k: poly_divexact(v, cf) for k, v in fu.items()}
    gu = {k: poly_divexact(v, cg) for k, v in gu.items()}
    # primitive Euclidean loop with pseudo-division
    while gu:
        ru = _pseudo_rem(fu, gu, var)
        fu, gu = gu, ru
        if gu:
            cg2 = _univ_content(gu)
            gu = {k: poly_divexact(v, cg2) for k, v in gu.items()}
    prim = _from_univ(fu, var)
    return _monic(poly_mul(cont, prim))


def _monic(p):
    if not p:
        return p
    _, lc = poly_leading(p)
    if lc == C_ONE:
        return p
    return poly_scale(p, lc.inv())


def _to_univ(p, var):
    """Split off `var`: {deg: poly in the remaining vars (exponent var zeroed)}."""
    out = {}
    for e, v in p.items():
        k = e[var]
        e0 = e[:var] + (0,) + e[var + 1:]
        out.setdefault(k, {})[e0] = v
    return out


def _from_univ(u, var):
    out = {}
    for k, p in u.items():
        for e, v in p.items():
            out[e[:var] + (k,) + e[var + 1:]] = v
    return out


def _univ_content(u):
    g = {}
    for p in u.values():
        g = poly_gcd(g, p)
        if poly_is_unit(g):
            return g
    return g


def _pseudo_rem(fu, gu, var):
    """Pseudo-remainder of univariate polys with polynomial coefficients."""
    df = max(fu)
    dg = max(gu)
    if df < dg:
        return fu
    lg = gu[dg]
    r = fu
    while r and max(r) >= dg:
        dr = max(r)
        lr = r[dr]
        # lg * r - lr * x^(dr-dg) * gu
        r2 = {}
        for k, p in r.items():
            r2[k] = poly_mul(p, lg)
        for k, p in gu.items():
            kk = k + dr - dg
            r2[kk] = poly_sub(r2.get(kk, {}), poly_mul(p, lr))
        r = {k: p for k, p in r2.items() if p}
    return r


# ---------------------------------------------------------------------------
# Scalar: reduced fraction of polynomials
# ---------------------------------------------------------------------------

class Scalar:
    """Element of Q(i, sqrt2)(s, c_1..c_m), canonical reduced form.

    nvars = 1 + number of orbit parameters; exponent slot 0 is s.
    """

    __slots__ = ("num", "den", "nvars", "_hash")

    def __init__(self, num, den, nvars, _normalized=False):
        if not _normalized:
            num, den = _reduce(num, den, nvars)
        self.num = num
        self.den = den
        self.nvars = nvars
        self._hash = None

    # -- constructors -------------------------------------------------------
    @staticmethod
    def from_coeff(cf, nvars):
        z = (0,) * nvars
        num = {} if cf.is_zero() else {z: cf}
        return Scalar(num, {z: C_ONE}, nvars, _normalized=True)

    @staticmethod
    def rational(q, nvars):
        return Scalar.from_coeff(Coeff(Fraction(q)), nvars)

    @staticmethod
    def i_unit(nvars):
        return Scalar.from_coeff(C_I, nvars)

    @staticmethod
    def sqrt2(nvars):
        return Scalar.from_coeff(C_R, nvars)

    @staticmethod
    def s_var(nvars):
        z = (0,) * nvars
        e = (1,) + (0,) * (nvars - 1)
        return Scalar({e: C_ONE}, {z: C_ONE}, nvars, _normalized=True)

    @staticmethod
    def c_var(k, nvars):
        """Orbit parameter c_{k+1} (0-based index k)."""
        if not 0 <= k < nvars - 1:
            raise IndexError(f"orbit parameter index {k} out of range")
        z = (0,) * nvars
        e = tuple(1 if j == k + 1 else 0 for j in range(nvars))
        return Scalar({e: C_ONE}, {z: C_ONE}, nvars, _normalized=True)

    # -- predicates ---------------------------------------------------------
    def is_zero(self):
        return not self.num

    def is_one(self):
        z = (0,) * self.nvars
        return self.den == {z: C_ONE} and self.num == {z: C_ONE}

    def is_constant(self):
        z = (0,) * self.nvars
        return set(self.num) <= {z} and set(self.den) <= {z}

    def constant_value(self):
        z = (0,) * self.nvars
        if not self.is_constant():
            raise ValueError("not a constant scalar")
        n = self.num.get(z, C_ZERO)
        return n * self.den[z].inv()

    # -- arithmetic ---------------------------------------------------------
    def _chk(self, o):
        if self.nvars != o.nvars:
            raise ValueError("scalar variable-count mismatch")

    def __add__(self, o):
        self._chk(o)
        if not self.num:
            return o
        if not o.num:
            return self
        if self.den == o.den:
            return Scalar(poly_add(self.num, o.num), self.den, self.nvars)
        num = poly_add(poly_mul(self.num, o.den), poly_mul(o.num, self.den))
        return Scalar(num, poly_mul(self.den, o.den), self.nvars)

    def __sub__(self, o):
        return self + (-o)

    def __neg__(self):
        return Scalar(poly_neg(self.num), self.den, self.nvars, _normalized=True)

    def __mul__(self, o):
        self._chk(o)
        if not self.num or not o.num:
            return Scalar({}, {(0,) * self.nvars: C_ONE}, self.nvars, _normalized=True)
        return Scalar(poly_mul(self.num, o.num), poly_mul(self.den, o.den), self.nvars)

    def __truediv__(self, o):
        self._chk(o)
        if not o.num:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar(poly_mul(self.num, o.den), poly_mul(self.den, o.num), self.nvars)

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar(dict(self.den), dict(self.num), self.nvars)

    def conjugate(self):
        """Field automorphism i -> -i; fixes r, s and the c_k."""
        num = {e: v.conj_i() for e, v in self.num.items()}
        den = {e: v.conj_i() for e, v in self.den.items()}
        return Scalar(num, den, self.nvars)

    def substitute(self, values):
        """Evaluate at rational points: values = (s, c_1, .., c_m) Fractions.

        Returns a constant Scalar (same nvars).
        """
        if len(values) != self.nvars:
            raise ValueError("substitution arity mismatch")
        vals = [Fraction(v) for v in values]

        def ev(p):
            acc = C_ZERO
            for e, v in p.items():
                f = _F1
                for x, k in zip(vals, e):
                    f *= x ** k
                acc = acc + Coeff(v.a * f, v.b * f, v.c * f, v.d * f)
            return acc

        d = ev(self.den)
        if d.is_zero():
            raise ZeroDivisionError("denominator vanishes at substitution point")
        return Scalar.from_coeff(ev(self.num) * d.inv(), self.nvars)

    def substitute_s(self, cf):
        """Replace s by the constant Coeff `cf`, keeping the c_k symbolic."""
        def sub(p):
            out = {}
            pw = {0: C_ONE}
            for e, v in p.items():
                k = e[0]
                if k not in pw:
                    acc = pw[max(pw)]
                    for _ in range(max(pw), k):
                        acc = acc * cf
                        pw[max(pw) + 1] = acc
                vv = v * pw[k]
                e2 = (0,) + e[1:]
                w = out.get(e2)
                w = vv if w is None else w + vv
                if w.is_zero():
                    out.pop(e2, None)
                else:
                    out[e2] = w
            return out
        return Scalar(sub(self.num), sub(self.den), self.nvars)

    # -- canonical form / identity -----------------------------------------
    def _key(self):
        return (
            tuple(sorted(self.num.items(), key=lambda t: _grlex_key(t[0]))),
            tuple(sorted(self.den.items(), key=lambda t: _grlex_key(t[0]))),
        )

    def __eq__(self, o):
        if not isinstance(o, Scalar):
            return NotImplemented
        return self.nvars == o.nvars and self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __str__(self):
        ns = _poly_str(self.num, self.nvars)
        z = (0,) * self.nvars
        if self.den == {z: C_ONE}:
            return ns
        return f"({ns})/({_poly_str(self.den, self.nvars)})"

    __repr__ = __str__


def _poly_str(p, nvars):
    if not p:
        return "0"
    names = ["s"] + [f"c{k}" for k in range(1, nvars)]
    terms = []
    for e in sorted(p, key=_grlex_key, reverse=True):
        mono = "*".join(
            f"{names[k]}^{x}" if x > 1 else names[k]
            for k, x in enumerate(e) if x
        )
        cs = str(p[e])
        if mono:
            terms.append(f"({cs})*{mono}")
        else:
            terms.append(f"({cs})")
    return " + ".join(terms)


def _reduce(num, den, nvars):
    num = {e: v for e, v in num.items() if not v.is_zero()}
    den = {e: v for e, v in den.items() if not v.is_zero()}
    z = (0,) * nvars
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return {}, {z: C_ONE}
    # cancel shared monomial factor
    mn = _monomial_content(num)
    md = _monomial_content(den)
    mg = tuple(min(a, b) for a, b in zip(mn, md))
    if any(mg):
        shift = {tuple(-x for x in mg): C_ONE}
        num = poly_mul(num, shift)
        den = poly_mul(den, shift)
    if len(den) > 1 or any(next(iter(den))):
        if not poly_is_unit(den):
            g = poly_gcd(num, den)
            if not poly_is_unit(g):
                num = poly_divexact(num, g)
                den = poly_divexact(den, g)
    # make denominator monic w.r.t. graded-lex leading coefficient
    _, lc = poly_leading(den)
    if lc != C_ONE:
        inv = lc.inv()
        num = poly_scale(num, inv)
        den = poly_scale(den, inv)
    return num, den


class ScalarField:
    """Convenience handle fixing nvars: one s plus m orbit parameters."""

    def __init__(self, num_orbits):
        self.m = num_orbits
        self.nvars = 1 + num_orbits
        self.zero = Scalar.rational(0, self.nvars)
        self.one = Scalar.rational(1, self.nvars)
        self.i = Scalar.i_unit(self.nvars)
        self.r = Scalar.sqrt2(self.nvars)
        self.s = Scalar.s_var(self.nvars)
        self.t = self.s * self.s / Scalar.rational(2, self.nvars)
        self.cs = [Scalar.c_var(k, self.nvars) for k in range(num_orbits)]

    def rational(self, q):
        return Scalar.rational(q, self.nvars)

    def i_power(self, n):
        return Scalar.from_coeff(_i_power(n), self.nvars)
