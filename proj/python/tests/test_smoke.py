"""Smoke tests for the _homlr extension module.

Documents are the same JSON the CLI reads; the corpus directory is passed
through HOMLR_CORPUS (set by ctest) or found relative to this file.
"""

import json
import os
import pathlib

import pytest

import _homlr as homlr


def corpus():
    env = os.environ.get("HOMLR_CORPUS")
    if env:
        return pathlib.Path(env)
    return pathlib.Path(__file__).resolve().parents[2] / "corpus"


def doc(name):
    return (corpus() / name).read_text()


def test_check_sl2():
    out = homlr.check(doc("sl2.json"))
    assert out["all_passed"]
    assert out["kind"] == "hom_lie"
    names = [c["name"] for c in out["checks"]]
    assert names == ["antisymmetry", "alpha_multiplicative", "hom_jacobi"]


def test_check_rejects_broken_alpha():
    d = json.loads(doc("sl2.json"))
    d["alpha"][1][1] = "2"
    out = homlr.check(json.dumps(d))
    assert not out["all_passed"]


def test_input_errors_raise():
    with pytest.raises(homlr.InputError):
        homlr.check('{"kind": "nonsense"}')


def test_cohomology_dims():
    base = doc("heisenberg_hlr.json")
    triv = doc("trivial_module_h3.json")
    assert homlr.cohomology_dim(base, triv, 1) == 2
    assert homlr.cohomology_dim(base, triv, 2) == 2
    assert homlr.cohomology_dim(base, triv, 3) == 1


def test_sign_convention_switch():
    base = doc("sl2_hlr.json")
    triv = doc("trivial_module_sl2.json")
    d1 = homlr.coboundary_matrix(base, triv, 1, "signed")
    p1 = homlr.coboundary_matrix(base, triv, 1, "printed")
    assert d1 != p1  # they differ already in degree 1


def test_center():
    z = homlr.center(doc("heisenberg_hlr.json"))
    assert len(z) == 1
    assert z[0][2] != "0"
    assert homlr.center(doc("sl2_hlr.json")) == []


def test_extension_roundtrip():
    out = homlr.extension_roundtrip(
        doc("heisenberg_hlr.json"), doc("trivial_module_h3.json"), doc("h3_cocycle.json")
    )
    assert out["roundtrip_exact"]
    assert out["total_rank"] == 4
    assert out["extension_checks"]["all_passed"]


def test_gerstenhaber_and_bv():
    g = homlr.gerstenhaber_check(doc("sl2_hlr.json"))
    assert g["all_passed"]
    assert g["dims"] == [1, 3, 3, 1]
    assert not homlr.gerstenhaber_check(doc("sl2_hlr.json"), 3, "printed")["all_passed"]
    assert homlr.bv_check(doc("sl2_lambda3.json"))["all_passed"]


def test_kaehler_dims():
    k = homlr.kaehler(doc("dual_numbers.json"))
    assert (k["dim_i"], k["dim_i2"], k["dim_differentials"]) == (2, 1, 1)
    assert homlr.kaehler(doc("qxq.json"))["dim_differentials"] == 0


def test_poisson_hom_lr():
    out = homlr.poisson_hom_lr(doc("poisson_planar_2x.json"))
    assert out["hom_lr_checks"]["all_passed"]
    assert out["rank"] == 3


def test_package_reexports():
    import homlr as pkg

    assert pkg.cohomology_dim is homlr.cohomology_dim
    assert pkg.check(doc("abelian2.json"))["all_passed"]
