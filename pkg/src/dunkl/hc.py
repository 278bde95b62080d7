"""Tensor product of the Cherednik algebra with the Clifford algebra.

Elements are Scalar-weighted sums of PBW monomials x^a y^b w tensored
with Clifford basis elements e_A; the two factors commute.  The Z2-grading
used by the graded bracket is the Clifford parity |A| mod 2.

The conjugate-linear anti-involution `bullet` acts as the Cherednik star
(w -> w^{-1}, x_i <-> y_i) on the first factor and as
e_A -> (-1)^{|A|} reversed(e_A) on the second.
"""

from __future__ import annotations

from .scalars import Scalar, Coeff
from .clifford import basis_sign, mask_str
from .cherednik import HAlgebra
from .pin import PinCover


class HCAlgebra:
    """Context object: Cherednik algebra, Clifford dimension, pin cover."""

    def __init__(self, rd, specialize=None):
        self.rd = rd
        self.dim = rd.dim
        self.h = HAlgebra(rd, specialize=specialize)
        self.field = self.h.field
        self.pin = PinCover(rd)
        z = self.h.zero_exp
        self._unit_key = (z, z, self.h.id_idx, 0)

    # -- constructors --------------------------------------------------------
    def zero(self):
        return HCElement(self, {})

    def one(self):
        return HCElement(self, {self._unit_key: self.field.one})

    def scalar(self, sc):
        if not isinstance(sc, Scalar):
            sc = self.field.rational(sc)
        return HCElement(self, {self._unit_key: sc})

    def from_h(self, helem):
        return HCElement(self, {(a, b, g, 0): v
                                for (a, b, g), v in helem.terms.items()})

    def x(self, j):
        return self.from_h(self.h.x(j))

    def y(self, j):
        return self.from_h(self.h.y(j))

    def group(self, g_idx):
        return self.from_h(self.h.group(g_idx))

    def e(self, j):
        """Clifford generator e_j, 1-based."""
        if not 1 <= j <= self.dim:
            raise IndexError(f"Clifford generator index {j} out of range")
        z = self.h.zero_exp
        return HCElement(self, {(z, z, self.h.id_idx, 1 << (j - 1)): self.field.one})

    def e_set(self, idxs):
        """Product e_A for a set of 1-based indices (given in increasing order)."""
        mask = 0
        for j in idxs:
            mask |= 1 << (j - 1)
        z = self.h.zero_exp
        return HCElement(self, {(z, z, self.h.id_idx, mask): self.field.one})

    def clifford_unit(self, unit):
        """Embed a {mask: Coeff} Clifford unit."""
        z = self.h.zero_exp
        return HCElement(self, {
            (z, z, self.h.id_idx, m): Scalar.from_coeff(cf, self.field.nvars)
            for m, cf in unit.items()})

    def rho(self, pair):
        """Diagonal embedding of a cover element (g, eps): eps * g (x) u(g)."""
        g, eps = pair
        unit = self.pin.lift(g)
        z = self.h.zero_exp
        out = {}
        for m, cf in unit.items():
            if eps < 0:
                cf = -cf
            out[(z, z, g, m)] = Scalar.from_coeff(cf, self.field.nvars)
        return HCElement(self, out)

    def rho_reflection(self, r_idx):
        """rho of the canonical lift of the reflection at positive root r_idx."""
        return self.rho((self.rd.reflection_index(r_idx), 1))


class HCElement:
    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    def _chk(self, o):
        if self.alg is not o.alg:
            raise ValueError("elements from different algebra contexts")

    def __add__(self, o):
        self._chk(o)
        out = dict(self.terms)
        for k, v in o.terms.items():
            w = out.get(k)
            w = v if w is None else w + v
            if w.is_zero():
                out.pop(k, None)
            else:
                out[k] = w
        return HCElement(self.alg, out)

    def __neg__(self):
        return HCElement(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        self._chk(o)
        h = self.alg.h
        out = {}
        for (a1, b1, g1, m1), v1 in self.terms.items():
            for (a2, b2, g2, m2), v2 in o.terms.items():
                v12 = v1 * v2
                m = m1 ^ m2
                if basis_sign(m1, m2) < 0:
                    v12 = -v12
                for (xk, yk, gk), cf in h.term_mul((a1, b1, g1), (a2, b2, g2)):
                    k = (xk, yk, gk, m)
                    w = out.get(k)
                    w = v12 * cf if w is None else w + v12 * cf
                    if w.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = w
        return HCElement(self.alg, out)

    def scale(self, sc):
        if not isinstance(sc, Scalar):
            sc = self.alg.field.rational(sc)
        return HCElement(self.alg, {k: v * sc for k, v in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, o):
        return self.alg is o.alg and self.terms == o.terms

    # -- grading -------------------------------------------------------------
    def parity(self):
        """Clifford Z2-degree if homogeneous, else None (0 for zero)."""
        ps = {bin(m).count("1") % 2 for (_a, _b, _g, m) in self.terms}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def even_part(self):
        return HCElement(self.alg, {k: v for k, v in self.terms.items()
                                    if bin(k[3]).count("1") % 2 == 0})

    def odd_part(self):
        return HCElement(self.alg, {k: v for k, v in self.terms.items()
                                    if bin(k[3]).count("1") % 2 == 1})

    # -- brackets ------------------------------------------------------------
    def commutator(self, o):
        return self * o - o * self

    def anticommutator(self, o):
        return self * o + o * self

    def gbracket(self, o):
        """Graded bracket: anticommutator on odd*odd, commutator otherwise."""
        out = self.alg.zero()
        for p1, a in ((0, self.even_part()), (1, self.odd_part())):
            if a.is_zero():
                continue
            for p2, b in ((0, o.even_part()), (1, o.odd_part())):
                if b.is_zero():
                    continue
                out = out + (a.anticommutator(b) if p1 and p2
                             else a.commutator(b))
        return out

    # -- anti-involution -----------------------------------------------------
    def bullet(self):
        alg = self.alg
        h = alg.h
        out = {}
        for (a, b, g, m), v in self.terms.items():
            gi = h._inv[g]
            ge = h._elems[gi]
            a2, sg1 = ge.apply_exp(b)
            b2, sg2 = ge.apply_exp(a)
            kcount = bin(m).count("1")
            sgn = sg1 * sg2
            if (kcount * (kcount + 1) // 2) % 2:
                sgn = -sgn
            vv = v.conjugate()
            if sgn < 0:
                vv = -vv
            k = (a2, b2, gi, m)
            w = out.get(k)
            w = vv if w is None else w + vv
            if w.is_zero():
                out.pop(k, None)
            else:
                out[k] = w
        return HCElement(alg, out)

    def map_scalars(self, f):
        return HCElement(self.alg, {k: f(v) for k, v in self.terms.items()})

    def poly_degree(self):
        if not self.terms:
            return -1
        return max(sum(a) + sum(b) for (a, b, _g, _m) in self.terms)

    def terms_sorted(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (kv[0][3], kv[0][2], kv[0][0], kv[0][1]))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, b, g, m), v in self.terms_sorted():
            bits.append(f"({v}) x^{a} y^{b} [w{g}] {mask_str(m)}")
        return " + ".join(bits)

    __repr__ = __str__
