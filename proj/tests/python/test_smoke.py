"""Smoke test for the python bindings: closed forms and round trips."""

import math
import sys

try:
    import setrec
except ImportError:
    import _setrec as setrec

failures = []


def check(name, cond):
    if cond:
        print(f"ok {name}")
    else:
        failures.append(name)
        print(f"FAIL {name}")


lip = setrec.Modulus.power(1.0, 1.0)
one = setrec.Weight.constant_one()

check("modulus evaluates", abs(lip(0.25) - 0.25) < 1e-15)
check("weight evaluates", one(0.3) == 1.0)

knots = setrec.midpoint_knots(2)
check("midpoint knots", list(knots.knots) == [0.25, 0.75])
check("worst case error", abs(setrec.worst_case_error(lip, one, knots) - 0.125) < 1e-12)
check("uniform optimal error", abs(setrec.uniform_optimal_error(lip, 4) - 0.0625) < 1e-12)

weights = setrec.cell_weights(knots, one)
check("cell weights", all(abs(w - 0.5) < 1e-12 for w in weights))

best = setrec.optimize_knots(one, lip, 4)
check("optimizer error", abs(best["error"] - 1.0 / 16.0) < 1e-10)
check("optimizer start", best["start"] == "midpoints")

check(
    "noisy error value",
    abs(
        setrec.noisy_error_value(lip, setrec.midpoint_knots(4), [0.05] * 4, one)
        - 0.1125
    )
    < 1e-9,
)
check("active indices", setrec.active_indices(lip, setrec.KnotSet([0.5, 0.51]), [0.0, 1.0], one) == [0])

check("omega big", abs(setrec.omega_big(lip, 0.5) - 1.0 / 16.0) < 1e-12)
check("omega big inverse", abs(setrec.omega_big_inv(lip, 1.0 / 16.0) - 0.5) < 1e-12)

report = setrec.asymptotic_constant(setrec.Weight.polynomial([0.0, 1.0]), lip, [16, 64])
check("asymptotic constant", abs(report["b_values"][-1] - 2.0 / 3.0) < 1e-3)

square = [[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]]
check("hausdorff", abs(setrec.hausdorff(square, [[0.0, 0.0]]) - math.sqrt(2.0)) < 1e-12)

traj = setrec.SetTrajectory.constant(square)
result = setrec.integrate(traj, one, 1e-7)
check("integrate achieves tolerance", result["achieved_tolerance"] <= 1e-7)
check("integrate direction count", len(result["directions"]) == len(result["support"]))
# direction 0 is +e1; the unit square has support 1 there.
check("integrate support", abs(result["support"][0] - 1.0) < 1e-12)

rec = setrec.recover([square, square], setrec.midpoint_knots(2), one)
check("recover support", abs(rec["support"][0] - 1.0) < 1e-12)

selftest = setrec.run_selftest()
check("selftest clean", selftest["failed"] == 0)

if failures:
    print(f"{len(failures)} smoke checks failed")
    sys.exit(1)
print("all smoke checks passed")
