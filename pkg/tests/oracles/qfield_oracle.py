"""Independent derivation of the rational-function values frozen into test_qfield.py.

Uses sympy (deliberately not the package under test) so the expected values
come from a second implementation.  Run:  python tests/oracles/qfield_oracle.py
"""

import sympy

s = sympy.Symbol("s")


def main():
    # sum of simple poles
    add = sympy.cancel(1 / (s - 1) + 1 / (s + 1))
    print("1/(s-1) + 1/(s+1) =", add)

    # specialization
    val = sympy.Rational(0)
    val = ((s + 1) / (s - 1)).subs(s, 2)
    print("(s+1)/(s-1) at s=2 =", val)

    # omega values used downstream (Z = int / half), b = 1, 2, 3: sanity for
    # pole-freedom at s=2.  Sign branch: omega_int(b) = (q^b+1)/(2(1-q^b)),
    # omega_half(b) = q^(b/2)/(1-q^b), the branch under which the quadratic
    # oscillator action satisfies the bracket relations (checked by hand on
    # [f_{12}(1,1), f_{21}(-1,1)] and [g_{12}(-1,2), h_{12}(1,-2)] in both
    # flavors; the opposite branch fails those commutators).
    q = s**2
    for b in (1, 2, 3):
        w_int = sympy.cancel(sympy.Rational(1, 2) * (q**b + 1) / (1 - q**b))
        w_half = sympy.cancel(q ** sympy.Rational(b, 2) / (1 - q**b))
        print(f"omega_int({b}) =", w_int, " at s=2:", w_int.subs(s, 2))
        print(f"omega_half({b}) =", w_half, " at s=2:", w_half.subs(s, 2))

    # a product exercising gcd cancellation
    prod = sympy.cancel((s**2 - 1) / (s - 1) * 1)
    print("(s^2-1)/(s-1) =", prod)


if __name__ == "__main__":
    main()
