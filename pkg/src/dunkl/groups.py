"""Root data and finite reflection groups in orthonormal coordinates.

Supported families: A (S_{rank+1} permuting coordinates of C^ambient),
B_n, D_n and products A1^d of sign flips.  All reflection matrices are
signed permutation matrices with integer entries, which keeps the whole
group action monomial-to-monomial.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

DEFAULT_GROUP_BOUND = 100_000


class UnsupportedFamilyError(ValueError):
    pass


class GroupBoundExceededError(RuntimeError):
    pass


def mat_identity(d):
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def mat_mul(a, b):
    d = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(d)) for j in range(d))
        for i in range(d)
    )


def mat_transpose(a):
    return tuple(zip(*a))


def mat_neg(a):
    return tuple(tuple(-x for x in row) for row in a)


class GroupElement:
    """Orthogonal d x d matrix (signed permutation for supported families).

    Column j encodes w(y_j) = sign_j * y_{perm_j}; the same data acts on
    the x-coordinates since the matrices are orthogonal and the bases dual.
    """

    __slots__ = ("mat", "perm", "sign", "det")

    def __init__(self, mat):
        self.mat = mat
        d = len(mat)
        perm = []
        sign = []
        for j in range(d):
            col = [mat[i][j] for i in range(d)]
            nz = [i for i in range(d) if col[i]]
            if len(nz) != 1 or col[nz[0]] not in (1, -1):
                raise ValueError("not a signed permutation matrix")
            perm.append(nz[0])
            sign.append(col[nz[0]])
        self.perm = tuple(perm)
        self.sign = tuple(sign)
        det = 1
        for s in sign:
            det *= s
        # parity of the permutation
        seen = [False] * d
        for j in range(d):
            if seen[j]:
                continue
            ln = 0
            k = j
            while not seen[k]:
                seen[k] = True
                k = self.perm[k]
                ln += 1
            if ln % 2 == 0:
                det = -det
        self.det = det

    def __eq__(self, o):
        return self.mat == o.mat

    def __hash__(self):
        return hash(self.mat)

    def __mul__(self, o):
        return GroupElement(mat_mul(self.mat, o.mat))

    def inverse(self):
        return GroupElement(mat_transpose(self.mat))

    def apply_exp(self, exps):
        """Image of the monomial with exponent vector `exps`: (new_exps, sign).

        Works for both x- and y-monomials (signed permutation action).
        """
        d = len(self.perm)
        out = [0] * d
        sgn = 1
        for j, k in enumerate(exps):
            if k:
                out[self.perm[j]] = k
                if self.sign[j] < 0 and k % 2:
                    sgn = -sgn
        return tuple(out), sgn

    def apply_vector(self, v):
        """Matrix-vector action on a coordinate vector."""
        d = len(self.perm)
        out = [0] * d
        for j, x in enumerate(v):
            if x:
                out[self.perm[j]] += self.sign[j] * x
        return tuple(out)

    def is_identity(self):
        return all(s == 1 for s in self.sign) and self.perm == tuple(range(len(self.perm)))

    def __repr__(self):
        return f"GroupElement(perm={self.perm}, sign={self.sign})"


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def reflection_matrix(alpha, coroot):
    """s_alpha = I - coroot * alpha^T in the orthonormal coordinates."""
    d = len(alpha)
    return tuple(
        tuple((1 if i == j else 0) - coroot[i] * alpha[j] for j in range(d))
        for i in range(d)
    )


class RootDatum:
    """Positive roots, coroots, reflections and orbit labels for W in O(d)."""

    def __init__(self, family, rank, ambient_dim, single_c=False,
                 group_bound=DEFAULT_GROUP_BOUND):
        family = family.upper()
        if family.startswith("A1"):
            family = "A1"
        if family not in ("A", "B", "D", "A1"):
            raise UnsupportedFamilyError(f"unsupported family {family!r}")
        d = ambient_dim
        if family == "A":
            if d < rank + 1:
                raise UnsupportedFamilyError("type A needs ambient_dim >= rank+1")
            pos = [self._e(i, d, 1, j, -1) for i, j in combinations(range(rank + 1), 2)]
            labels = [0] * len(pos)
            order = _factorial(rank + 1)
        elif family == "B":
            if d < rank:
                raise UnsupportedFamilyError("type B needs ambient_dim >= rank")
            long_roots = [self._e(i, d, 1, j, -1) for i, j in combinations(range(rank), 2)]
            long_roots += [self._e(i, d, 1, j, 1) for i, j in combinations(range(rank), 2)]
            short_roots = [self._e(i, d, 1) for i in range(rank)]
            pos = long_roots + short_roots
            labels = [0] * len(long_roots) + [1] * len(short_roots)
            order = 2 ** rank * _factorial(rank)
        elif family == "D":
            if d < rank:
                raise UnsupportedFamilyError("type D needs ambient_dim >= rank")
            pos = [self._e(i, d, 1, j, -1) for i, j in combinations(range(rank), 2)]
            pos += [self._e(i, d, 1, j, 1) for i, j in combinations(range(rank), 2)]
            labels = [0] * len(pos)
            order = 2 ** (rank - 1) * _factorial(rank)
        else:  # A1^rank
            if d < rank:
                raise UnsupportedFamilyError("A1 product needs ambient_dim >= rank")
            pos = [self._e(i, d, 1) for i in range(rank)]
            labels = list(range(rank))
            order = 2 ** rank
        self.family = family
        self.rank = rank
        self.dim = d
        self.positive_roots = [tuple(r) for r in pos]
        self.coroots = []
        self.root_norms_sq = []
        for alpha in self.positive_roots:
            n2 = _dot(alpha, alpha)
            self.root_norms_sq.append(n2)
            self.coroots.append(tuple(Fraction(2 * a, n2) for a in alpha))
        if single_c:
            labels = [0] * len(labels)
        self.orbit_labels = list(labels)
        self.num_orbits = (max(labels) + 1) if labels else 0
        self.reflections = [
            GroupElement(reflection_matrix(a, cr))
            for a, cr in zip(self.positive_roots, self.coroots)
        ]
        self.expected_order = order
        self.group_bound = group_bound
        self._elements = None
        self._index = None
        self._mul_table = None
        self._inv_table = None
        self._classes = None
        self.flagged_low_dim = d < 3

    @staticmethod
    def _e(i, d, si, j=None, sj=None):
        v = [0] * d
        v[i] = si
        if j is not None:
            v[j] = sj
        return tuple(v)

    # -- group enumeration ---------------------------------------------------
    @property
    def elements(self):
        if self._elements is None:
            self._enumerate()
        return self._elements

    def _enumerate(self):
        gens = self.reflections
        ident = GroupElement(mat_identity(self.dim))
        seen = {ident: 0}
        order = [ident]
        frontier = [ident]
        while frontier:
            new = []
            for g in frontier:
                for s in gens:
                    h = g * s
                    if h not in seen:
                        if len(seen) >= self.group_bound:
                            raise GroupBoundExceededError(
                                f"group order exceeds bound {self.group_bound}")
                        seen[h] = len(order)
                        order.append(h)
                        new.append(h)
            frontier = new
        if len(order) != self.expected_order:
            raise AssertionError(
                f"enumerated {len(order)} elements, expected {self.expected_order}")
        self._elements = order
        self._index = seen

    def index_of(self, g):
        if self._index is None:
            self._enumerate()
        return self._index[g]

    @property
    def mul_table(self):
        if self._mul_table is None:
            els = self.elements
            n = len(els)
            idx = self._index
            self._mul_table = [
                [idx[els[i] * els[j]] for j in range(n)] for i in range(n)
            ]
            self._inv_table = [idx[g.inverse()] for g in els]
        return self._mul_table

    @property
    def inv_table(self):
        self.mul_table
        return self._inv_table

    @property
    def identity_index(self):
        return self.index_of(GroupElement(mat_identity(self.dim)))

    def reflection_index(self, root_idx):
        return self.index_of(self.reflections[root_idx])

    # -- structure ----------------------------------------------------------
    def conjugacy_classes(self):
        """Partition of element indices into conjugacy classes (sorted)."""
        if self._classes is None:
            tbl = self.mul_table
            inv = self.inv_table
            n = len(self.elements)
            assigned = [None] * n
            classes = []
            for g in range(n):
                if assigned[g] is not None:
                    continue
                cls = sorted({tbl[tbl[inv[w]][g]][w] for w in range(n)})
                for h in cls:
                    assigned[h] = len(classes)
                classes.append(cls)
            self._classes = classes
        return self._classes

    def contains_minus_identity(self):
        """(found, element) with element = -I when present."""
        minus = GroupElement(mat_neg(mat_identity(self.dim)))
        if self._index is None:
            self._enumerate()
        if minus in self._index:
            return True, minus
        return False, None

    def cycle_type_label(self, g):
        """Signed-cycle-type string of a group element, for reports."""
        d = self.dim
        seen = [False] * d
        cycles = []
        for j in range(d):
            if seen[j]:
                continue
            ln, sgn, k = 0, 1, j
            while not seen[k]:
                seen[k] = True
                sgn *= g.sign[k]
                k = g.perm[k]
                ln += 1
            cycles.append((ln, sgn))
        cycles.sort(key=lambda t: (-t[0], -t[1]))
        return ",".join(f"{ln}{'-' if sgn < 0 else ''}" for ln, sgn in cycles)


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def parse_family(spec):
    """Parse CLI family strings: "A", "B", "D" or "A1^d"."""
    s = spec.strip().upper()
    if "^" in s:
        head, _, tail = s.partition("^")
        if head != "A1":
            raise UnsupportedFamilyError(f"unsupported family {spec!r}")
        try:
            rank = int(tail)
        except ValueError:
            raise UnsupportedFamilyError(f"bad A1 product rank in {spec!r}")
        return "A1", rank
    if s in ("A", "B", "D", "A1"):
        return s, None
    raise UnsupportedFamilyError(f"unsupported family {spec!r}")
