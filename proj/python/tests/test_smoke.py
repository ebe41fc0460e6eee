import bourbakikit as bk


def test_differential_shape():
    d = bk.koszul_differential(4, 2)
    assert d["n"] == 4
    assert d["k"] == 2
    assert d["matrix"]["rows"] == 4
    assert d["matrix"]["cols"] == 6
    assert d["matrix"]["col_labels"][0] == [1, 2]


def test_poly_round_trip():
    p = bk.parse_poly("x2^2*x1 + 3/4*x3", 3)
    assert bk.poly_to_string(p) == "x1*x2^2 + 3/4*x3"
    assert bk.poly_gcd("x1^2 - x2^2", "x1^2 + 2*x1*x2 + x2^2", 2) == "x1 + x2"


def test_catalog_zn2():
    b = bk.catalog_zn2(5)
    assert b["certificate"]["verdict"] is True
    assert b["matches_expected"] is True
    assert b["witness_matches"] is True
    assert b["ideal"]["twist"] == 0
    assert len(b["ideal"]["gens"]) == 5


def test_catalog_ztop_and_z2():
    t = bk.catalog_ztop(5, 1, 2)
    assert t["ideal"]["twist"] == -3
    assert t["certificate"]["verdict"] is True
    z = bk.catalog_z2(3)
    assert z["matches_expected"] is True


def test_catalog_n6z3():
    b = bk.catalog_n6z3()
    assert b["certificate"]["verdict"] is True
    assert bk.poly_to_string(b["divisor"]) == "x1^4"
    bad = bk.catalog_n6z3_bad()
    assert bad["verdict"] is False


def test_twist_formulas():
    assert bk.koszul_bourbaki_number(6, 3) == 3
    assert bk.koszul_bourbaki_number(7, 6) == -5
    assert bk.bourbaki_number(5, 2, 8) == -3
    assert bk.cycle_rank(6, 3) == 10


def test_obstruction():
    assert bk.obstruction(5, 2) is False
    assert bk.obstruction(6, 3) is True


def test_check_and_extract():
    m = {
        "n": 2,
        "rows": 2,
        "cols": 1,
        "entries": [[bk.parse_poly("x1", 2)], [bk.parse_poly("x2", 2)]],
        "row_labels": [],
        "col_labels": [],
    }
    cert = bk.check_map(m)
    assert cert["verdict"] is True

    gens = ["x1*x2", "x2*x3", "x1*x3"]
    ideal = {"n": 3, "gens": [bk.parse_poly(g, 3) for g in gens]}
    out = bk.extract_from_monomials(ideal)
    assert bk.poly_to_string(out["divisor"]) == "1"
    got = sorted(bk.poly_to_string(g) for g in out["ideal"]["gens"])
    assert got == sorted(gens)

    bundle = bk.catalog_zn2(4)
    ex = bk.extract_ideal(bundle["presentation"])
    assert ex["ideal"]["gens"] == bundle["ideal"]["gens"]


def test_rees_checks():
    assert bk.rees_normality(3, t_max=2, box=6)["passed"] is True
    canon = bk.rees_canonical(3, t_max=3, box=9)
    assert canon["classification"] == "type_two"
    assert bk.rees_reduction(4, t_max=2, box=8)["passed"] is True
    assert bk.semigroup_membership([1, 1, 1, 1, 1], 4) is not None
    assert bk.semigroup_membership([1, 0, 0, 0, 1], 4) is None


def test_searches():
    res = bk.search_generic(4, 2, seed=0)
    assert res["found"] is True
    assert res["attempts_used"] <= 5
    rep = bk.search_multigraded(4, 2)
    assert rep["complete"] is True
    assert len(rep["passing_subsets"]) == 3
