from fractions import Fraction

import permlocal as pl


def test_permutation_basics():
    s = pl.Permutation("1532467")
    assert len(s) == 7
    assert s(2) == 5
    assert pl.c_occ("321", s) == 1
    assert pl.c_occ_proportion([2, 1], [3, 2, 1]) == Fraction(2, 3)
    assert pl.avoids("123", "231")
    assert pl.inverse("752934861") == pl.Permutation("935628174")


def test_exact_limits():
    assert pl.p231("132985476") == Fraction(1, 2048)
    assert pl.p321("123") == Fraction(1, 2)
    poly = pl.symbolic_pat_j("4,1,3,2,6,5,7,10,8,9,11,12,16,13,15,14")
    assert poly["factored"] == "p^15*(1-p)^7"
    assert len(pl.enumerate_class("231", 8)) == 1430


def test_rooted_and_distance():
    r = pl.RootedPermutation("7,5,2,9,3,4,8,6,1@4")
    assert pl.restrict(r, 2) == pl.RootedPermutation("41523", 3)
    assert pl.local_distance("1@1", "2,1@1") == 1
    assert str(pl.restrict(r, 1)) == "1,3,2@2"  # values 2,9,3 around the root


def test_bijections_roundtrip():
    for s in pl.enumerate_class("231", 6):
        assert pl.btree_to_perm(pl.perm_to_btree(s)) == s
    for s in pl.enumerate_class("321", 6):
        assert pl.otree_to_perm(pl.perm_to_otree(s)) == s
    assert pl.perm_to_otree("21") == "UUDD"


def test_samplers_are_deterministic():
    assert pl.uniform_av231(40, seed=3) == pl.uniform_av231(40, seed=3)
    assert pl.avoids(pl.uniform_av321(40, seed=3, stream=2), "321")
    w = pl.limit231_window(2, seed=1)
    assert w.root == 3 and len(w.sigma) == 5


def test_experiment_and_verify():
    recs = pl.run_convergence("av321", n=200, samples=20, pattern_size=3, seed=5)
    assert len(recs) == 5
    ident = next(r for r in recs if r["pattern"] == "1,2,3")
    assert ident["theoretical"] == "1/2"
    assert all(r["ok"] for r in pl.verify_suite("enumeration", 8))
