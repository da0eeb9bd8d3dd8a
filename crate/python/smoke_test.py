"""Smoke test for the lionsweep Python module.

Build and install first, e.g. `pip install --no-build-isolation ./crates/py`.
"""

import lionsweep as ls


def main():
    r33 = ls.Graph.tri_lattice(3, 3)
    assert (r33.vertex_count, r33.edge_count) == (9, 16)
    assert ls.Graph.triangle(5).edge_count == 30
    assert ls.Graph.parse(r33.to_text()).edges() == r33.edges()
    assert r33.coord(0) == (1, 1) and r33.vertex_at(1, 1) == 0

    starts, moves = ls.row_sweep(3, 3)
    trace = ls.simulate(r33, starts, moves, model="polite")
    assert trace["swept_at"] == 6, trace["swept_at"]
    assert not trace["recontaminations"]

    starts, moves = ls.wall_sweep(4, 6)
    assert len(starts) == 6
    assert ls.simulate(ls.Graph.tri_lattice(4, 6), starts, moves, model="caffeinated")["swept_at"] is not None

    starts, moves = ls.naive_column_sweep(2, 4, 32)
    leaky = ls.simulate(ls.Graph.tri_lattice(2, 4), starts, moves, model="caffeinated")
    assert leaky["swept_at"] is None and leaky["recontaminations"]

    walk = ls.exact_length_walk(r33, 0, 8, 7)
    assert len(walk) == 8 and walk[0] == 0 and walk[-1] == 8
    try:
        ls.exact_length_walk(ls.Graph.square_grid(3), 0, 1, 2)
    except ls.InfeasibleWalkError:
        pass
    else:
        raise AssertionError("parity should make this walk impossible")

    assert ls.cheeger_constant(ls.Graph.complete(5))[:2] == (1, 1)
    assert ls.cheeger_constant(ls.Graph.circulant(6, 1)) == (2, 3, [0, 1, 2])
    assert ls.lion_bound(1, 1, 10) == 2 and ls.polite_lion_bound(1, 2, 16) == 2

    r2 = ls.Graph.tri_lattice(2)
    assert ls.can_clear(r2, 1)["verdict"] == "impossible"
    found = ls.can_clear(r2, 2)
    assert found["verdict"] == "cleared" and found["trace"]["swept_at"] is not None
    assert ls.min_lions(r2, 3) == 2
    assert ls.can_clear(ls.Graph.tri_lattice(4), 5, max_states=10)["verdict"] == "unknown"

    assert ls.fall_down(3, [4]) == [0]
    assert ls.falldown_check(3)["violations"] == 0
    assert ls.packing(6, "row", 13)[:2] == [6, 7]
    assert ls.triangular(6) == 21
    assert [p[1] for p in ls.iso_profile(r33, 4, 5)] == [3, 3]
    report = ls.conjecture_report(4)
    assert report.splitlines()[0] == "size,min_boundary,row_packing_boundary,icecream_boundary,conjecture_holds"
    try:
        ls.conjecture_report(6)
    except ls.ResourceLimitError:
        pass
    else:
        raise AssertionError("triangle of side 6 is over the enumeration limit")

    print("smoke test passed")


if __name__ == "__main__":
    main()
