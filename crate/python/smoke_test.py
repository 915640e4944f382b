"""Smoke test for the revlib_py extension module.

Build and install first:  pip install --no-build-isolation -e crates/py
"""

import revlib_py as r


def main():
    t3 = [g.semantics(3).cycles() for g in r.enumerate_gates("T3")]
    assert t3 == ["(7,8)", "(6,8)", "(4,8)"], t3

    r3 = r.Library("R3")
    assert r3.closure_size() == 40320 and r3.is_universal()
    subs = r3.sublibraries(list_minimal=True)
    assert subs["total_subsets"] == 64 and subs["min_universal_size"] == 2

    target = r.Permutation.from_cycles("(1,2)", 3)
    c = r.Library("NCT").synth(target)
    assert c.permutation() == target
    assert all(c.simulate(f"{x:03b}") == target.apply_bits(f"{x:03b}") for x in range(8))

    net, report = r.optimize(".n 3\nT3 1 2 3\nT3 1 2 3\n")
    assert report["after"] == 0, report

    assert r.simulate(".n 3\nT3 1 2 3", "110") == "111"
    assert r.table("3").splitlines()[0].startswith("length,NT,")

    try:
        r.Permutation([1, 1])
    except ValueError:
        pass
    else:
        raise AssertionError("non-bijection accepted")
    print("revlib_py smoke test passed")


if __name__ == "__main__":
    main()
