"""Smoke tests for the python module; pass the built-module directory as argv[1]."""

import sys

if len(sys.argv) > 1:
    sys.path.insert(0, sys.argv[1])

import _chowtrace as ct


def check(cond, what):
    if not cond:
        raise SystemExit(f"FAIL: {what}")
    print(f"ok: {what}")


def main():
    eta = ct.eta("Q3", 2)
    check(eta["eta_mod_p"] == 1, "eta_2(Q3) = 1")
    check(eta["paths_agree"], "eta paths agree")
    check(eta["eta_integer"] == -10, "pre-division integer of Q3 is -10")

    check(ct.eta("P2", 3)["eta_mod_p"] == 2, "eta_3(P2) = 2")
    check(ct.eta("P1xP1", 2)["eta_mod_p"] == 0, "eta_2(P1 x P1) = 0")

    check(ct.weyl_order("F4") == 1152, "|W(F4)| = 1152")
    check(ct.poincare("A2", 1) == [1, 1, 1], "poincare of P^2")

    check(ct.divisor_power_degree("B2", 1, 3) == 2, "deg H^3 on the quadric B2/P1")

    check(ct.phi("P2", 6, 3) == 2, "phi^{t^6}_3([P2]) = 2")
    check(ct.phi("P2", 3, 3) == 0, "phi vanishes off the grading")

    rep = ct.check_special("P1xP1", 2)
    check(rep["verdict"] != "candidate", "P1 x P1 is not a candidate")

    check(ct.euler_characteristic("Q5") == 6, "chi(Q5) = 6")

    try:
        ct.eta("P1", 3)
        raise SystemExit("FAIL: expected DimensionNotDivisible")
    except ct.DimensionNotDivisible:
        print("ok: dimension precondition enforced")

    try:
        ct.eta("NoSuchVariety", 2)
        raise SystemExit("FAIL: expected UnknownVariety")
    except ct.UnknownVariety:
        print("ok: unknown varieties rejected")

    print("python smoke: all checks passed")


if __name__ == "__main__":
    main()
