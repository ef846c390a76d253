"""Smoke test for the posetdim_py extension module.

Build and install first:
    pip install --no-build-isolation -e crates/py
then run:
    python crates/py/python/smoke_test.py
"""

import json

import posetdim_py as pd


def main():
    s3 = pd.Poset.generate("standard", 3)
    assert len(s3) == 6 and s3.width() == 3 and s3.height() == 2
    assert pd.Poset.from_json(s3.to_json()) == s3

    cert = s3.dim()
    assert cert["value"] == 3, cert
    assert pd.verify_realizer(s3, cert["witness"]["ples"]) is None

    local = s3.ldim()
    rep = pd.verify_local_realizer_report(s3, local["witness"]["ples"])
    assert rep["valid"] and rep["mu"] == local["value"] == 3

    boolean = s3.bdim()
    w = boolean["witness"]
    assert boolean["value"] == 3
    assert pd.verify_boolean_realizer(s3, w["orders"], w["accepted"]) is None

    # A single extension fails and names the unreversed pair.
    bad = pd.verify_realizer(s3, [s3.dim()["witness"]["ples"][0]])
    assert bad is not None and "x" in bad and "y" in bad, bad

    chain = pd.Poset(4, [(0, 1), (1, 2), (2, 3)])
    ples, report = pd.ldim_from_pathwidth(chain)
    assert pd.verify_local_realizer_report(chain, ples)["valid"]
    assert report["t"] <= 1 and int(report["bound"]) >= 1

    assert s3.dual().is_isomorphic(s3)
    assert pd.Poset.random(7, 3, 6) == pd.Poset.random(7, 3, 6)
    assert "standard" in dict(pd.families())
    assert pd.poset_dot(chain).count("->") == 3

    try:
        pd.Poset.generate("chainproduct", 2, 20, budget=100)
    except pd.BudgetExceeded:
        pass
    else:
        raise AssertionError("budget not enforced")
    try:
        pd.Poset(2, [(0, 1), (1, 0)])
    except pd.PosetError:
        pass
    else:
        raise AssertionError("cycle accepted")

    print(json.dumps({"ok": True, "dim_s3": cert["value"], "ldim_s3": local["value"], "bdim_s3": boolean["value"]}))


if __name__ == "__main__":
    main()
