from pasep.bijections import (
    L2,
    bicolor_mark_counts,
    bicolor_to_dyck_pair,
    combine_paths,
    decompose_path,
    decompose_scan,
    enumerate_bicolor,
    foata_zeilberger,
    foata_zeilberger_inverse,
    francon_viennot,
    francon_viennot_inverse,
    fv_step_types,
    fz_step_types,
)
from pasep.paths import (
    DOWN,
    LEVEL,
    UP,
    enumerate_B_star,
    enumerate_PN,
    enumerate_R_star,
    history_weight,
    is_valid_family_path,
    is_valid_history,
    path_weight,
    returns,
)
from pasep.perms import enumerate_permutations, inverse, stats
from pasep.polyring import monomial

FIG1_PERM = (6, 7, 2, 5, 8, 1, 4, 9, 3)
FIG1_HISTORY = (
    (UP, 1, 0), (UP, 1, 1), (LEVEL, 0, 0), (UP, 1, 0), (LEVEL, 1, 3),
    (DOWN, 0, 2), (DOWN, 0, 0), (LEVEL, 1, 1), (DOWN, 0, 0),
)
FIG3_PERM = (4, 3, 7, 1, 2, 6, 5)
FIG3_HISTORY = (
    (UP, 1, 0), (LEVEL, 1, 1), (UP, 1, 0), (DOWN, 0, 0), (UP, 1, 1),
    (DOWN, 0, 1), (DOWN, 0, 0),
)
FIG4_PERM = (8, 1, 2, 5, 6, 3, 9, 7, 4)


def test_fz_reproduces_crossing_figure():
    assert foata_zeilberger(FIG1_PERM) == FIG1_HISTORY
    assert foata_zeilberger_inverse(FIG1_HISTORY) == FIG1_PERM


def test_fz_identity_permutation():
    n = 5
    ident = tuple(range(1, n + 1))
    hist = foata_zeilberger(ident)
    assert hist == tuple((LEVEL, 1, 0) for _ in range(n))
    assert foata_zeilberger_inverse(hist) == ident


def test_fz_round_trip_exhaustive():
    for n in range(7):
        for sigma in enumerate_permutations(n):
            h = foata_zeilberger(sigma)
            assert is_valid_history(h)
            assert foata_zeilberger_inverse(h) == sigma


def test_fz_weight_law():
    for n in range(7):
        for sigma in enumerate_permutations(n):
            st = stats(sigma)
            assert history_weight(foata_zeilberger(sigma)) == monomial(1, ey=st.wex, eq=st.cr)


def test_fz_step_type_lemmas():
    for n in range(7):
        for sigma in enumerate_permutations(n):
            for info in fz_step_types(sigma):
                assert info.lr_max == info.type1
                if not info.fixed_point:
                    assert info.rl_min == info.type2


def test_fv_reproduces_pattern_figure():
    assert francon_viennot(FIG3_PERM) == FIG3_HISTORY
    assert francon_viennot_inverse(FIG3_HISTORY) == FIG3_PERM


def test_fv_large_figure():
    h = francon_viennot(FIG4_PERM)
    st = stats(FIG4_PERM)
    assert history_weight(h) == monomial(1, ey=5, eq=7)
    assert (st.s, st.t, st.asc, st.p31_2) == (3, 4, 5, 7)
    flags = fv_step_types(FIG4_PERM)
    assert sum(1 for f in flags if f.type1) == 4
    assert sum(1 for f in flags if f.type2 and f.type1_all_left) == 2
    assert francon_viennot_inverse(h) == FIG4_PERM


def test_fv_identity_from_level_steps():
    n = 5
    hist = tuple((LEVEL, 1, 0) for _ in range(n))
    assert francon_viennot_inverse(hist) == tuple(range(1, n + 1))


def test_fv_round_trip_exhaustive():
    for n in range(7):
        for sigma in enumerate_permutations(n):
            h = francon_viennot(sigma)
            assert is_valid_history(h)
            assert francon_viennot_inverse(h) == sigma


def test_fv_weight_law_and_lemmas():
    for n in range(7):
        for sigma in enumerate_permutations(n):
            st = stats(sigma)
            h = francon_viennot(sigma)
            assert history_weight(h) == monomial(1, ey=st.asc, eq=st.p31_2)
            inv = inverse(sigma)
            for i, info in enumerate(fv_step_types(sigma), start=1):
                assert info.rl_min == info.type1
                if inv[i - 1] < n:
                    assert info.rl_max == (info.type2 and info.type1_all_left)


FIG5_H1 = (
    (UP, ("frac", 0)), (LEVEL, ("qpow",)), (UP, ("frac", 1)), (LEVEL, ("qpow",)),
    (LEVEL, ("qpow",)), (UP, ("frac", 0)), (DOWN, ("y",)), (DOWN, ("y",)),
    (LEVEL, ("qpow",)), (DOWN, ("y",)), (LEVEL, ("qpow",)),
)
FIG5_H2 = (
    (UP, ("frac", 0)), (LEVEL, ("ab",)), (UP, ("frac", 0)),
    (DOWN, ("negab",)), (DOWN, ("negab",)),
)
FIG5_COMBINED = (
    (UP, ("frac", 0)), (UP, ("frac", 1)), (UP, ("frac", 1)), (LEVEL, ("ab",)),
    (UP, ("frac", 2)), (UP, ("frac", 0)), (DOWN, ("y",)), (DOWN, ("y",)),
    (DOWN, ("negab",)), (DOWN, ("y",)), (DOWN, ("negab",)),
)


def test_combine_reproduces_figure():
    assert combine_paths(FIG5_H1, FIG5_H2) == FIG5_COMBINED
    assert decompose_path(FIG5_COMBINED) == (FIG5_H1, FIG5_H2)


def test_combine_empty_and_single_level():
    assert combine_paths((), ()) == ()
    p = ((LEVEL, ("oney",)),)
    assert decompose_path(p) == (p, ())


def test_decompose_scan_on_suffix():
    suffix = (
        (UP, ("frac", 1)), (DOWN, ("negab",)), (LEVEL, ("ab",)),
        (DOWN, ("y",)), (DOWN, ("negab",)),
    )
    h1, h2, h1h, h2h = decompose_scan(suffix)
    assert h1 == (
        (LEVEL, ("qpow",)), (LEVEL, ("qpow",)), (LEVEL, ("qpow",)),
        (DOWN, ("y",)), (LEVEL, ("qpow",)),
    )
    assert h2 == ((UP, ("frac", 0)), (DOWN, ("negab",)), (LEVEL, ("ab",)), (DOWN, ("negab",)))
    assert (h1h, h2h) == (1, 1)


def test_combine_decompose_round_trip():
    for N in range(4):
        for n in range(N + 1):
            b_paths = list(enumerate_B_star(n))
            for h1 in enumerate_R_star(N, n):
                w1 = path_weight(h1)
                for h2 in b_paths:
                    p = combine_paths(h1, h2)
                    assert is_valid_family_path(p, "P")
                    assert path_weight(p) == w1 * path_weight(h2)
                    assert decompose_path(p) == (h1, h2)
        for p in enumerate_PN(N):
            h1, h2 = decompose_path(p)
            assert combine_paths(h1, h2) == p


FIG2_BICOLOR = (UP, L2, DOWN, LEVEL, UP, LEVEL, UP, DOWN, L2, DOWN)
FIG2_D1 = (UP, UP, DOWN, UP, DOWN, DOWN, UP, DOWN)
FIG2_D2 = (UP, UP, DOWN, UP, UP, DOWN, DOWN, DOWN, UP, DOWN)


def test_bicolor_figure():
    d1, d2 = bicolor_to_dyck_pair(FIG2_BICOLOR)
    assert d1 == FIG2_D1
    assert d2 == FIG2_D2
    nbeta, nalpha = bicolor_mark_counts(FIG2_BICOLOR)
    assert nbeta == returns(d1) + 1
    assert nalpha == returns(d2)


def test_bicolor_empty():
    assert bicolor_to_dyck_pair(()) == ((), ())


def test_bicolor_mark_preservation():
    for m in range(7):
        for steps in enumerate_bicolor(m):
            d1, d2 = bicolor_to_dyck_pair(steps)
            if steps:
                assert len(d1) + len(d2) == 2 * len(steps) - 2
            nbeta, nalpha = bicolor_mark_counts(steps)
            if steps:
                assert nbeta == returns(d1) + 1
                assert nalpha == returns(d2)
