"""A short tour of the H-function engine on instances with known values.

H^{1,0}_{0,1}[z | (0,1)] is e^{-z}; H^{1,1}_{1,1}[z | (0,1);(0,1)] is
1/(1+z).  Both evaluators (residue series, Mellin-Barnes contour) are
run side by side, then the Mellin transform of each instance is checked
against direct quadrature.
"""

import math

from fracwell import HFoxParams, eval_contour, eval_series, mellin, mellin_numeric_check

EXP = HFoxParams(m=1, n=0, upper=(), lower=((0.0, 1.0),))
RAT = HFoxParams(m=1, n=1, upper=((0.0, 1.0),), lower=((0.0, 1.0),))


def main():
    print("exponential instance")
    print(f"{'z':>6} {'series':>20} {'contour':>20} {'e^-z':>20}")
    for z in (0.3, 1.0, 3.0):
        s = eval_series(EXP, z)
        c = eval_contour(EXP, z)
        print(f"{z:6.2f} {s.value:20.14f} {c.value:20.14f} {math.exp(-z):20.14f}")

    print("\nrational instance (series switches to the 1/z expansion past z=1;")
    print("a guard annulus around |z|=1 is refused and left to the contour)")
    print(f"{'z':>6} {'series':>20} {'1/(1+z)':>20} {'terms':>6}")
    for z in (0.3, 0.7, 1.26, 5.0):
        s = eval_series(RAT, z)
        print(f"{z:6.2f} {s.value:20.14f} {1 / (1 + z):20.14f} {s.terms:6d}")

    print("\nMellin transforms: gamma products vs direct quadrature")
    for params, name, pts in ((EXP, "exp", (0.5, 1.0, 2.5)),
                              (RAT, "rational", (0.25, 0.5, 0.75))):
        for s in pts:
            chk = mellin_numeric_check(params, s)
            print(f"  {name:8s} s={s:4.2f}: analytic={chk.analytic:.10f} "
                  f"numeric={chk.numeric:.10f} rel={chk.rel_err:.1e}")

    # a classic: the rational Mellin transform at s=1/2 is
    # Gamma(1/2)^2 = pi
    print(f"\nmellin(RAT, 1/2) = {mellin(RAT, 0.5)!r}  (pi = {math.pi!r})")


if __name__ == "__main__":
    main()
