"""Smoke test for the Python bindings.

Build first:  maturin develop -m crates/py/Cargo.toml  (or pip install ./crates/py)
"""

from fractions import Fraction

import cliffchar


def main():
    u = cliffchar.parse(5, 0, "e1 + e5 + e15")
    assert [int(c) for c in cliffchar.charpoly(u)] == [0, 4, 0, -6, 0, 4, 0, -1]
    for m in cliffchar.methods():
        assert cliffchar.charpoly(u, m) == cliffchar.charpoly(u)
    assert cliffchar.det(u) == 1

    v = cliffchar.Multivector(2, 0, "e1 + e2")
    inv = v.inverse()
    assert str(inv) == "1/2*e1 + 1/2*e2"
    assert v * inv == cliffchar.Multivector.identity(2, 0)
    assert inv.terms() == [([1], Fraction(1, 2)), ([2], Fraction(1, 2))]

    r = cliffchar.Multivector(2, 0, "3/5 + 4/5*e12")
    assert r.charpoly() == [Fraction(6, 5), Fraction(-1)]
    assert (r * r.tilde()).scalar_part() == 1

    try:
        cliffchar.inverse(cliffchar.parse(1, 1, "e1 + e2"))
    except cliffchar.SingularElementError:
        pass
    else:
        raise AssertionError("null vector was inverted")

    try:
        cliffchar.parse(4, 3, "1").charpoly("closed")
    except cliffchar.UnsupportedError:
        pass
    else:
        raise AssertionError("closed form accepted n = 7")

    try:
        cliffchar.parse(2, 0, "e3")
    except ValueError:
        pass
    else:
        raise AssertionError("e3 parsed in Cl(2,0)")

    print("smoke test passed")


if __name__ == "__main__":
    main()
