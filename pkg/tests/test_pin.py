from dunkl.groups import RootDatum
from dunkl.pin import PinCover, cunit_mul, unit_ratio_sign
from dunkl.scalars import C_ONE


def test_lift_units_square_to_plus_minus_one():
    rd = RootDatum("B", 2, 2)
    pc = PinCover(rd)
    for g in range(len(rd.elements)):
        u = pc.lift(g)
        sq = cunit_mul(u, u)
        gg = rd.mul_table[g][g]
        assert unit_ratio_sign(sq, pc.lift(gg)) in (1, -1)


def test_cocycle_identity():
    # sigma(g,h) sigma(gh,k) = sigma(h,k) sigma(g,hk)  (2-cocycle condition)
    rd = RootDatum("A", 2, 3)
    pc = PinCover(rd)
    n = len(rd.elements)
    tbl = rd.mul_table
    for g in range(n):
        for h in range(n):
            for k in range(n):
                lhs = pc.sigma(g, h) * pc.sigma(tbl[g][h], k)
                rhs = pc.sigma(h, k) * pc.sigma(g, tbl[h][k])
                assert lhs == rhs


def test_cover_group_axioms_on_pairs():
    rd = RootDatum("A1", 3, 3)
    pc = PinCover(rd)
    els = pc.elements()
    assert len(els) == 16
    for a in els:
        assert pc.mul(a, pc.inv(a)) == pc.identity
        assert pc.mul(pc.identity, a) == a
        assert pc.mul(pc.theta, pc.theta) == pc.identity


def test_parity_matches_determinant():
    rd = RootDatum("B", 3, 3)
    pc = PinCover(rd)
    for g, ge in enumerate(rd.elements):
        assert pc.parity(g) == (0 if ge.det == 1 else 1)


def test_conj_sign_matches_direct_unit_conjugation():
    rd = RootDatum("B", 2, 2)
    pc = PinCover(rd)
    tbl, inv = rd.mul_table, rd.inv_table
    for w in range(len(rd.elements)):
        for g in range(len(rd.elements)):
            prod = cunit_mul(cunit_mul(pc.lift(w), pc.lift(g)),
                             pc.lift(inv[w]))
            extra = pc.sigma(w, inv[w])
            target = pc.lift(tbl[tbl[w][g]][inv[w]])
            direct = unit_ratio_sign(prod, target) * extra
            assert direct == pc.conj_sign(w, g)


def test_s4_split_classes():
    # frozen oracle: for the 4-element symmetric group on 4 coordinates the
    # split classes are the identity type, the 3+1 type and the 4-cycles
    rd = RootDatum("A", 3, 4)
    pc = PinCover(rd)
    split = {r["label"] for r in pc.split_class_report() if r["splits"]}
    assert split == {"1,1,1,1", "3,1", "4"}


def test_a13_split_classes():
    # sign-flip cube: only the identity and the full flip split
    rd = RootDatum("A1", 3, 3)
    pc = PinCover(rd)
    split = {r["label"] for r in pc.split_class_report() if r["splits"]}
    assert split == {"1,1,1", "1-,1-,1-"}


def test_cover_class_count_consistency():
    rd = RootDatum("A", 3, 4)
    pc = PinCover(rd)
    classes = pc.cover_classes()
    assert sum(len(c) for c in classes) == 2 * len(rd.elements)
    n_split = sum(1 for r in pc.split_class_report() if r["splits"])
    n_w = len(rd.conjugacy_classes())
    assert len(classes) == n_w + n_split
