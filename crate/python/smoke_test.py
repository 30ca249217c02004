"""Smoke test for the pycodegree extension.

Build and install first:
    pip install --no-build-isolation -e crates/python
"""

import json

import pycodegree as cg


def main():
    g = cg.LieGroup("G2", 3)
    assert g.name == "G2(3)", g.name
    assert g.order() == 4245696
    assert g.factorization() == [(2, 6), (3, 6), (7, 1), (13, 1)]
    assert g.degree_bound(13) == 14

    value, exponent, trace = cg.LieGroup("E7", 3).sylow(2)
    assert (value, exponent) == (2**23, 23)
    assert "(q^2-1)_2^7" in trace

    assert cg.zsigmondy(2, 6) is None
    assert cg.zsigmondy(2, 5) == 31
    assert cg.factorize(2**64 + 1) == [(274177, 1), (67280421310721, 1)]
    assert cg.is_prime(2**61 - 1)

    a5 = "degree 5\ngen (1,2,3)\ngen (1,2,3,4,5)\n"
    assert cg.codegrees(a5) == [1, 12, 15, 20]
    try:
        cg.codegrees(a5, cap_order=10)
    except cg.CapError:
        pass
    else:
        raise AssertionError("cap not enforced")

    cert = cg.LieGroup("2B2", 8).verify()
    assert cert.verdict == "PASS"
    doc = json.loads(cert.json())
    assert doc["step1"][0]["witness"] == "40"
    assert [r for r, _ in cert.step2()] == [5, 7, 13]

    psp = cg.LieGroup("PSp", 3, n=4).verify(symbolic=False)
    assert psp.verdict == "PARTIAL-PER-PAPER"
    assert "Sp-weil" in psp.cited_keys()

    try:
        cg.LieGroup("PSL", 2, n=4)
    except ValueError:
        pass
    else:
        raise AssertionError("PSL_4(2) accepted")

    print("pycodegree", cg.__version__, "smoke test passed")


if __name__ == "__main__":
    main()
