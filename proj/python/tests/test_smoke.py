import pytest

import rcclab


def test_sg120_8_packaged_automorphism():
    inst = rcclab.construct("sg120-8")
    assert inst["verified"]
    report = rcclab.analyze(inst, records=False)
    packaged = report["packaged"]
    assert packaged["rcc"] is False
    assert packaged["order"] == 30
    assert packaged["zeta"] == {"1": 30, "6": 30, "10": 30, "15": 30}
    assert report["rcc_group"] is False


def test_cyclic6_is_rcc_group():
    report = rcclab.analyze("cyclic(6)")
    assert report["automorphisms"]["count"] == 2
    assert report["rcc_group"] is True
    assert all(sum(r["zeta"].values()) == 6 for r in report["automorphisms"]["records"])


def test_check_rcc_generator_images():
    verdict = rcclab.check_rcc("cyclic(9)", {"gens": [1], "images": [2]})
    assert verdict["rcc"] is True
    assert verdict["lambda"] == "2/3"
    assert verdict["witness"] == 1


def test_g_o_family():
    inst = rcclab.construct("g-o", primes=[2, 3, 5], exps=[1, 1, 1])
    assert inst["group"]["order"] == 240
    report = rcclab.analyze(inst, records=False)
    assert report["packaged"]["lengths"] == [1, 6, 10, 15]


def test_linear_algebra():
    assert rcclab.poly_order(2, [1, 1, 1])["order"] == 3
    assert rcclab.frobenius(3, [[0, 2], [1, 0]])["invariant_factors"] == [[1, 0, 1]]
    rb = rcclab.regular_basis(3, [[0, 2], [1, 0]])
    assert rb["cycle_lengths"] == [4, 4]
    assert rcclab.f_function(30) == 60


def test_errors_map_to_python_exceptions():
    with pytest.raises(rcclab.BoundExceeded):
        rcclab.construct("many-prime", order=210)
    with pytest.raises(rcclab.InvalidInput):
        rcclab.catalog("bogus(1)")
    with pytest.raises(ValueError):
        rcclab.poly_order(4, [1, 1])
