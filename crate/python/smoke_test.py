"""Smoke test for the jkinv extension module.

Build and install first, e.g.

    pip install maturin
    maturin develop -m crates/python/Cargo.toml

then run ``python python/smoke_test.py``.
"""

import json
from fractions import Fraction

import jkinv


def check_pencil():
    # A 1x2 horizontal block: [1 0] + λ[0 1].
    p = jkinv.Pencil([[1, 0]], [[0, 1]])
    inv = p.invariants()
    assert p.shape == (1, 2)
    assert inv["eps"] == [1] and inv["eta"] == [] and inv["k_hor"] == 2, inv

    # A Jordan block of size 2 at eigenvalue 1/2.
    j = jkinv.Pencil([["1/2", 1], [0, Fraction(1, 2)]], [[1, 0], [0, 1]])
    entry = j.invariants()["jordan"][0]
    assert entry["eigenvalue"] == "1/2" and entry["sizes"] == [2], entry

    # Swapping A and B sends 1/2 to 2.
    swapped = j.recombine(0, 1, 1, 0).invariants()["jordan"][0]
    assert swapped["eigenvalue"] == "2", swapped

    # Empty rows need an explicit shape.
    z = jkinv.Pencil([], [], shape=(0, 3))
    assert z.invariants()["eps"] == [0, 0, 0]

    try:
        jkinv.Pencil([[1, 0]], [[1], [2]])
    except ValueError as e:
        assert "1x2" in str(e) and "2x1" in str(e)
    else:
        raise AssertionError("shape mismatch accepted")


def check_representations():
    assert jkinv.zoo_names() == ["abelian2", "aff1", "h3", "sl2", "so3", "sl2-std"], jkinv.zoo_names()

    sl2 = jkinv.Representation.zoo("sl2")
    report = sl2.analyze(seed=3)
    assert report["eps"] == [1] and report["eta"] == [1], report
    assert sl2.semiinvariant()["degree"] == 0

    h3 = jkinv.Representation.coadjoint(3, [(0, 1, 2, 1)])
    assert h3.analyze()["deg_D"] == 2
    assert h3.is_invariant([([0, 0, 1], 1)])
    assert not h3.is_invariant([([1, 0, 0], 1)])
    t = h3.trdeg([1, 2, 3], invariants=[[([0, 0, 1], 1)]])
    assert t["trdeg"] == 1 and t["k_vert"] == 1, t

    t = sl2.trdeg([1, 2, 3])
    assert t["trdeg"] == 2 and t["equality_holds"] is True, t

    try:
        # [e1, e2] = e3, [e2, e3] = e2 violates the Jacobi identity.
        jkinv.Representation.coadjoint(3, [(0, 1, 2, 1), (1, 2, 1, 1)])
    except ValueError as e:
        assert "jacobi" in str(e).lower(), e
    else:
        raise AssertionError("non-Lie brackets accepted")


def check_cli():
    code, out, err = jkinv.run_cli(["zoo", "list"])
    assert code == 0, err
    assert json.loads(out)["schema"] == "jk-report/1"
    code, _, err = jkinv.run_cli(["zoo", "show", "nope"])
    assert code == 2 and "nope" in err


if __name__ == "__main__":
    check_pencil()
    check_representations()
    check_cli()
    print("smoke test passed")
