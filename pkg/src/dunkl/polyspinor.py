"""Degree-truncated polynomial-spinor representation of H_{t,c} (x) C(V).

The module X = C[V] (x) S carries: x_i by multiplication, y_i by the Dunkl
operator, w by (signed) substitution, and e_j by exact spinor matrices of
size 2^{floor(d/2)} built from the standard tensor-product construction
(two anticommuting real involutions and their i-scaled product; odd d adds
the i^k-scaled product of all even-dimension generators).

Matrices are stored dense as lists of lists of Scalar (symbolic runs) or
Coeff (rational specialisations), row-major, acting on column vectors
indexed by (monomial, spinor) pairs with monomials in graded-lex order.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .scalars import Scalar, Coeff, C_ONE, C_ZERO, C_I, _i_power
from .hc import HCAlgebra, HCElement

_X = ((C_ZERO, C_ONE), (C_ONE, C_ZERO))
_Y = ((C_ZERO, -C_I), (C_I, C_ZERO))
_Z = ((C_ONE, C_ZERO), (C_ZERO, -C_ONE))
_I2 = ((C_ONE, C_ZERO), (C_ZERO, C_ONE))


def _kron(a, b):
    na, nb = len(a), len(b)
    return tuple(
        tuple(a[i // nb][j // nb] * b[i % nb][j % nb]
              for j in range(na * nb))
        for i in range(na * nb)
    )


def _mat_mul_coeff(a, b):
    n = len(a)
    return tuple(
        tuple(_sum_c(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _sum_c(it):
    acc = C_ZERO
    for v in it:
        acc = acc + v
    return acc


def spinor_matrices(d):
    """Exact matrices for e_1..e_d of size 2^{floor(d/2)} over Q(i)."""
    k = d // 2
    size_factors = [_I2] * k
    mats = []
    for i in range(k):
        for pauli in (_X, _Y):
            fac = [_Z] * i + [pauli] + [_I2] * (k - i - 1)
            m = fac[0]
            for f in fac[1:]:
                m = _kron(m, f)
            mats.append(m)
    if d % 2 == 1:
        if k == 0:
            mats.append(((C_ONE,),))
        else:
            prod = mats[0]
            for m in mats[1:]:
                prod = _mat_mul_coeff(prod, m)
            phase = _i_power(k)
            mats.append(tuple(tuple(phase * v for v in row) for row in prod))
    return mats


def monomial_basis(d, degree):
    """Exponent tuples of total degree `degree`, graded-lex descending."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for k in range(remaining, -1, -1):
            rec(prefix + [k], remaining - k, slots - 1)

    rec([], degree, d)
    return out


class SpinorRep:
    """Representation context for one HCAlgebra."""

    def __init__(self, alg: HCAlgebra):
        self.alg = alg
        self.d = alg.dim
        self.spin = spinor_matrices(self.d)
        self.spin_dim = 1 << (self.d // 2)
        self._bases = {}

    def basis(self, degree):
        b = self._bases.get(degree)
        if b is None:
            b = monomial_basis(self.d, degree)
            self._bases[degree] = b
        return b

    def dim(self, degree):
        return len(self.basis(degree)) * self.spin_dim

    def _spin_matrix_of_mask(self, mask):
        m = None
        for j in range(self.d):
            if mask & (1 << j):
                m = self.spin[j] if m is None else _mat_mul_coeff(m, self.spin[j])
        if m is None:
            n = self.spin_dim
            return tuple(tuple(C_ONE if i == j else C_ZERO for j in range(n))
                         for i in range(n))
        return m

    def _apply_poly_part(self, xexp, yexp, g_idx, mono):
        """Action of x^a y^b w on the monomial x^mono.

        Returns {result_monomial: Scalar}; w substitutes, y^b applies Dunkl
        operators right-to-left, x^a multiplies.
        """
        alg = self.alg
        h = alg.h
        ge = h._elems[g_idx]
        img, sgn = ge.apply_exp(mono)
        F = alg.field
        polys = {img: F.rational(sgn)}
        # Dunkl operators: y_i acts as T_i; y^b applies each variable's power
        for i in range(self.d):
            for _ in range(yexp[i]):
                nxt = {}
                for e, v in polys.items():
                    for (e2, _g), u in h.ycomm(i, e).items():
                        # T_i(x^e) = sum over group terms applied to 1
                        w = nxt.get(e2)
                        w = v * u if w is None else w + v * u
                        if w.is_zero():
                            nxt.pop(e2, None)
                        else:
                            nxt[e2] = w
                polys = nxt
                if not polys:
                    return {}
        if any(xexp):
            polys = {tuple(a + b for a, b in zip(e, xexp)): v
                     for e, v in polys.items()}
        return polys

    def matrix_of(self, elem: HCElement, degree):
        """Matrix of `elem` from C[V]_degree (x) S to the shifted degree.

        All terms must shift the polynomial degree by the same amount;
        raises ValueError otherwise.  Returns (matrix, out_degree).
        """
        shifts = {sum(a) - sum(b) for (a, b, _g, _m) in elem.terms}
        if len(shifts) > 1:
            raise ValueError(f"degree-inhomogeneous element: shifts {sorted(shifts)}")
        shift = shifts.pop() if shifts else 0
        out_degree = degree + shift
        if out_degree < 0:
            out_degree = 0
        src = self.basis(degree)
        dst = self.basis(out_degree)
        dst_index = {m: i for i, m in enumerate(dst)}
        F = self.alg.field
        nrows = len(dst) * self.spin_dim
        ncols = len(src) * self.spin_dim
        mat = [[F.zero] * ncols for _ in range(nrows)]
        for (a, b, g, mask), coeff in elem.terms.items():
            spin_m = self._spin_matrix_of_mask(mask)
            for ci, mono in enumerate(src):
                polys = self._apply_poly_part(a, b, g, mono)
                for e, v in polys.items():
                    ri = dst_index.get(e)
                    if ri is None:
                        raise AssertionError("degree bookkeeping failure")
                    cv = coeff * v
                    for si in range(self.spin_dim):
                        for sj in range(self.spin_dim):
                            sc = spin_m[si][sj]
                            if sc.is_zero():
                                continue
                            mat[ri * self.spin_dim + si][ci * self.spin_dim + sj] = (
                                mat[ri * self.spin_dim + si][ci * self.spin_dim + sj]
                                + cv * Scalar.from_coeff(sc, F.nvars))
        return mat, out_degree

    def matrix_of_coeff(self, elem, degree):
        """matrix_of with all entries constant, converted to Coeff."""
        mat, out_degree = self.matrix_of(elem, degree)
        return ([[v.constant_value() for v in row] for row in mat], out_degree)


# -- exact linear algebra over Coeff ----------------------------------------

def rank_coeff(rows):
    """Rank of a list-of-lists Coeff matrix (destructive on a copy)."""
    if not rows:
        return 0
    m = [list(r) for r in rows]
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if not m[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col].inv()
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and not m[r][col].is_zero():
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def kernel_basis_coeff(mat):
    """Basis of the right kernel of a Coeff matrix (rows x cols)."""
    if not mat:
        return []
    nrows, ncols = len(mat), len(mat[0])
    m = [list(r) for r in mat]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if not m[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col].inv()
        m[rank] = [v * inv for v in m[rank]]
        for r in range(nrows):
            if r != rank and not m[r][col].is_zero():
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [C_ZERO] * ncols
        vec[fc] = C_ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -m[r][fc]
        basis.append(vec)
    return basis


def image_basis_coeff(mat):
    """Basis of the column space (as vectors)."""
    if not mat:
        return []
    cols = list(map(list, zip(*mat)))
    # row-reduce the transpose and keep nonzero rows
    r = _rref(cols)
    return [row for row in r if any(not v.is_zero() for v in row)]


def _rref(rows):
    m = [list(r) for r in rows]
    if not m:
        return m
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if not m[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col].inv()
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and not m[r][col].is_zero():
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return m


def intersection_dim(basis_a, basis_b):
    """dim(span A intersect span B) over Q(i, sqrt2)."""
    if not basis_a or not basis_b:
        return 0
    ra = rank_coeff(basis_a)
    rb = rank_coeff(basis_b)
    rab = rank_coeff(basis_a + basis_b)
    return ra + rb - rab


def cohomology_dims(rep: SpinorRep, d_omega: HCElement, degrees):
    """Per-degree (dim X_k, dim ker, dim ker∩im, dim H) for D_omega.

    Requires a rational specialisation (constant matrix entries); D_omega
    must preserve each degree.
    """
    out = []
    for k in degrees:
        mat, out_deg = rep.matrix_of_coeff(d_omega, k)
        if out_deg != k:
            raise ValueError("operator does not preserve the degree")
        ker = kernel_basis_coeff(mat)
        im = image_basis_coeff(mat)
        both = intersection_dim([list(v) for v in ker], [list(v) for v in im])
        out.append({
            "degree": k,
            "dim": rep.dim(k),
            "ker": len(ker),
            "ker_cap_im": both,
            "cohomology": len(ker) - both,
        })
    return out


# -- bullet-Hermitian form ---------------------------------------------------

class HermitianForm:
    """Fischer-type pairing on C[V] tensored with a spinor form.

    <x^a, x^b> is the constant term of the Dunkl operator word y^a applied
    to x^b (zero unless a = b at c = 0; generally supported on equal
    degrees).  The spinor factor is the identity for odd d and the
    chirality matrix Z^{(x)k} for even d = 2k, which makes every e_j
    exactly skew-adjoint; for odd d no such matrix exists and the e_j
    checks are reported as failing.
    """

    def __init__(self, rep: SpinorRep):
        self.rep = rep
        d = rep.d
        if d % 2 == 0 and d > 0:
            fac = [_Z] * (d // 2)
            m = fac[0] if fac else ((C_ONE,),)
            for f in fac[1:]:
                m = _kron(m, f)
            self.spin_form = m
        else:
            n = rep.spin_dim
            self.spin_form = tuple(
                tuple(C_ONE if i == j else C_ZERO for j in range(n))
                for i in range(n))
        self._gram = {}

    def gram(self, degree):
        """Gram matrix on C[V]_degree (x) S over Scalar entries."""
        g = self._gram.get(degree)
        if g is not None:
            return g
        rep = self.rep
        alg = rep.alg
        F = alg.field
        basis = rep.basis(degree)
        n = len(basis)
        poly_g = [[F.zero] * n for _ in range(n)]
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                poly_g[i][j] = self._pair(a, b)
        sd = rep.spin_dim
        out = [[F.zero] * (n * sd) for _ in range(n * sd)]
        for i in range(n):
            for j in range(n):
                v = poly_g[i][j]
                if v.is_zero():
                    continue
                for si in range(sd):
                    for sj in range(sd):
                        sf = self.spin_form[si][sj]
                        if sf.is_zero():
                            continue
                        out[i * sd + si][j * sd + sj] = (
                            v * Scalar.from_coeff(sf, F.nvars))
        self._gram[degree] = out
        return out

    def _pair(self, aexp, bexp):
        """Constant term of the Dunkl word y^a applied to x^b."""
        rep = self.rep
        h = rep.alg.h
        F = rep.alg.field
        polys = {tuple(bexp): F.one}
        for i in range(rep.d):
            for _ in range(aexp[i]):
                nxt = {}
                for e, v in polys.items():
                    for (e2, _g), u in h.ycomm(i, e).items():
                        w = nxt.get(e2)
                        w = v * u if w is None else w + v * u
                        if w.is_zero():
                            nxt.pop(e2, None)
                        else:
                            nxt[e2] = w
                polys = nxt
                if not polys:
                    return F.zero
        return polys.get((0,) * rep.d, F.zero)

    def adjointness_check(self, degree):
        """Per-generator report of G pi(eta) = pi(eta_bullet)^{conj T} G.

        Degree-shifting generators x_i, y_i are checked between degrees
        `degree` and `degree`+1.
        """
        rep = self.rep
        alg = rep.alg
        F = alg.field
        res = {}

        def conj_t(mat):
            if not mat:
                return []
            return [[mat[j][i].conjugate() for j in range(len(mat))]
                    for i in range(len(mat[0]))]

        def mm(a, b):
            if not a or not b:
                return []
            return [[_ssum(a[i][k] * b[k][j] for k in range(len(b)))
                     for j in range(len(b[0]))] for i in range(len(a))]

        def _ssum(it):
            acc = F.zero
            for v in it:
                acc = acc + v
            return acc

        def eq(a, b):
            return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))

        Gk = self.gram(degree)
        Gk1 = self.gram(degree + 1)
        # Hermitianity of the Gram matrix itself (makes the y_i condition
        # the conjugate transpose of the x_i condition)
        res["gram_hermitian"] = eq(conj_t(Gk), Gk) and eq(conj_t(Gk1), Gk1)
        for i in range(1, rep.d + 1):
            Px, _ = rep.matrix_of(alg.x(i), degree)
            Py, _ = rep.matrix_of(alg.y(i), degree + 1)
            # <x_i u, v> = <u, y_i v>: conj(Px)^T G_{k+1} = G_k Py
            lhs = mm(conj_t(Px), Gk1)
            rhs = mm(Gk, Py)
            res[f"x{i}"] = eq(lhs, rhs)
        for r_idx in range(len(alg.rd.positive_roots)):
            g = alg.group(alg.rd.reflection_index(r_idx))
            Pg, _ = rep.matrix_of(g, degree)
            lhs = mm(conj_t(Pg), Gk)
            rhs = mm(Gk, Pg)     # s_alpha bullet = s_alpha^{-1} = s_alpha
            res[f"s_{r_idx}"] = eq(lhs, rhs)
        for j in range(1, rep.d + 1):
            Pe, _ = rep.matrix_of(alg.e(j), degree)
            lhs = mm(conj_t(Pe), Gk)
            rhs = mm(Gk, [[-v for v in row] for row in Pe])  # e_j bullet = -e_j
            res[f"e{j}"] = eq(lhs, rhs)
        return res

    def leading_minor_signs(self, degree, s_value, c_values):
        """Signs of leading principal minors of G at a specialisation point.

        `s_value` is a Coeff (e.g. sqrt2, giving t = 1) and `c_values` the
        rational orbit parameters.  Gram entries depend on s only through
        t = s^2/2, so the result must be rational; a non-rational entry
        raises.
        """
        G = self.gram(degree)
        n = len(G)
        nv = self.rep.alg.field.nvars
        point = (Fraction(0),) + tuple(Fraction(v) for v in c_values)
        if len(point) != nv:
            raise ValueError("wrong number of orbit parameters")
        num = []
        for row in G:
            rr = []
            for v in row:
                cv = v.substitute_s(s_value).substitute(point).constant_value()
                if not (cv.b == 0 and cv.c == 0 and cv.d == 0):
                    raise ValueError("non-rational Gram entry at this point")
                rr.append(cv.a)
            num.append(rr)
        signs = []
        for k in range(1, n + 1):
            det = _det_fraction([r[:k] for r in num[:k]])
            signs.append(0 if det == 0 else (1 if det > 0 else -1))
        return signs


def _det_fraction(m):
    """Exact determinant of a Fraction matrix by fraction-free elimination."""
    n = len(m)
    a = [[Fraction(v) for v in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det
