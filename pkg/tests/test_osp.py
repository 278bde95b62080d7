from fractions import Fraction

from dunkl.groups import RootDatum
from dunkl.hc import HCAlgebra
from dunkl.osp import OspRealisation


def test_bracket_table_a13(a13):
    assert all(a13.osp.bracket_table_check().values())


def test_bracket_table_s3(s3):
    assert all(s3.osp.bracket_table_check().values())


def test_scasimir_square(a13):
    osp = a13.osp
    alg = a13.alg
    quarter = alg.scalar(alg.field.rational(Fraction(1, 4)))
    assert (osp.scasimir * osp.scasimir - osp.Omega_osp - quarter).is_zero()


def test_scasimir_anticommutes_with_odd_part(a13):
    # the Scasimir graded-commutes with the realisation: anticommutes with
    # F+- and commutes with E+-, H
    osp = a13.osp
    S = osp.scasimir
    assert (S * osp.F_plus + osp.F_plus * S).is_zero()
    assert (S * osp.F_minus + osp.F_minus * S).is_zero()
    assert (S * osp.E_plus - osp.E_plus * S).is_zero()
    assert (S * osp.H - osp.H * S).is_zero()


def test_projection_is_idempotent_on_samples(a13):
    osp = a13.osp
    alg = a13.alg
    for elem in (alg.e(1), osp.scasimir, alg.e_set((1, 2))):
        p = osp.project(elem)
        assert osp.project(p) == p


def test_projection_lands_in_graded_centraliser(a13):
    osp = a13.osp
    alg = a13.alg
    for elem in (alg.e(1), alg.e_set((1, 2)), alg.e_set((1, 2, 3))):
        p = osp.project(elem)
        assert p.gbracket(osp.F_plus).is_zero()
        assert p.gbracket(osp.F_minus).is_zero()


def test_projection_identities(a13):
    osp = a13.osp
    alg = a13.alg
    F = alg.field
    quarter = alg.scalar(F.rational(Fraction(1, 4)))
    lhs = osp.project(osp.scasimir)
    assert (lhs + (osp.Omega_osp + quarter).scale(F.rational(2))).is_zero()
    lhs2 = osp.project(osp.Omega_sl2)
    assert (lhs2 - osp.Omega_osp.scale(F.rational(3))).is_zero()


def test_omega_c_is_w_invariant(s3):
    osp = s3.osp
    alg = s3.alg
    for r_idx in range(len(alg.rd.positive_roots)):
        g = alg.group(alg.rd.reflection_index(r_idx))
        assert osp.Omega_c * g == g * osp.Omega_c
