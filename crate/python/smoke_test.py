"""Smoke test for the ryser extension module.

Build first:  pip install --no-build-isolation -e crates/py
Then run:     python3 python/smoke_test.py
"""

from fractions import Fraction

import ryser


def main() -> None:
    f7 = ryser.Hypergraph.construct("f7")
    assert len(f7) == 17 and f7.r == 7
    k, cover = ryser.tau(f7)
    assert k == 6 and len(cover) == 6
    assert ryser.find_cover_leq(f7, 5) is None
    assert ryser.nu(f7)[0] == 1
    assert not f7.is_linear() and f7.is_intersecting()

    f6l = ryser.Hypergraph.construct("f6linear")
    assert ryser.tau(f6l)[0] == 5 and f6l.is_linear()

    tpp3 = ryser.Hypergraph.construct("tpp", 3)
    assert ryser.tau_star(tpp3) == ryser.nu_star(tpp3)
    assert ryser.tau_s(tpp3) == 1

    fano = ryser.projective_plane(2)
    assert len(fano) == 7 and all(len(line) == 3 for line in fano)

    edge = ryser.Hypergraph([1, 1, 1], [[0, 0, 0]])
    assert ryser.tau_star(edge) == Fraction(1, 1)

    biased = ryser.Hypergraph.construct("biased", 4)
    assert ryser.min_cover_avoiding(biased, 3)[0] == 4
    value, _ = ryser.min_biased_cover(biased, 3)
    assert value > 1

    assert ryser.lb_f(8) == 18 and ryser.lb_f_terms(8) == [1, 2, 2, 2, 3, 3, 5]
    assert ryser.extremal_search(4, 5, 3) is None
    assert ryser.tau(ryser.extremal_search(4, 6, 3))[0] == 3

    table = ryser.Hypergraph.from_table(tpp3.to_table())
    assert table == tpp3 and table.canonical_form() == tpp3.canonical_form()

    passed, reports = ryser.verify("paper-examples")
    assert passed and len(reports) == 2

    try:
        ryser.Hypergraph.from_digits("12 3", 2)
    except ValueError:
        pass
    else:
        raise AssertionError("malformed digit input accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
