"""Smoke test for the wallforge_py extension.

Build first:  pip install --no-build-isolation -e crates/wallforge-py
"""

import sys

import wallforge_py as wf


def main() -> int:
    failures = []

    def check(name, got, want):
        if got != want:
            failures.append(f"{name}: got {got!r}, want {want!r}")

    check("core", wf.core_quotient([6, 5, 3, 1], 4)[0], [2, 1])
    check("frobenius", wf.frobenius([4, 2, 2, 1]), ([3, 1], [3, 0]))
    check("series", wf.string_coefficients("D1-diag", 3, 4), [1, 5, 20, 65, 190])

    a5 = wf.Model("A2odd", 3)
    wall = [8, "5ul", "5ul", 4, 1]
    check("valid", a5.is_valid(wall), True)
    beads = a5.to_beads(wall)
    check("beads round trip", a5.from_beads(beads), wall)

    d2 = wf.Model("D2", 2)
    for m in range(4):
        walls = d2.walls(m)
        check(f"D2 count m={m}", len(walls), len(d2.targets(m)))
        check(f"D2 series m={m}", str(len(walls)), d2.series_coeff(m))
        for w in walls:
            mm, t = d2.pi(w)
            check(f"D2 m of {w}", mm, m)
            check(f"D2 inverse of {w}", d2.pi_inverse(t), w)

    b3 = wf.Model("B1", 3, 3)
    w = b3.walls(2)[-1]
    reduced, moves = b3.reduce(w)
    check("reduced is valid", b3.is_valid(reduced), True)
    i = next(i for i in range(4) if b3.f(w, i) is not None)
    check("e inverts f", b3.e(b3.f(w, i), i), w)

    for name, ok, actual in wf.examples():
        if not ok:
            failures.append(f"example {name}: {actual}")

    for f in failures:
        print("FAIL", f)
    print("smoke test:", "ok" if not failures else f"{len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
