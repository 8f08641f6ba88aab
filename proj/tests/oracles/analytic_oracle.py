"""High-precision analytic oracles with mpmath, independent of the C++ library.

L-values use the incomplete-gamma expansion of the completed L-function with a root number
of +1; hypergeometric values come from mpmath's own summation and continuation.
"""
from fractions import Fraction

import mpmath as mp

from exact_oracle import eta_product, legendre_count, primes

mp.mp.dps = 60


def l_value(coeffs, level, weight, s):
    """L(f, s) for a level-N newform with Fricke eigenvalue giving root number +1."""
    a = 2 * mp.pi / mp.sqrt(level)
    total = mp.mpf(0)
    for n, c in enumerate(coeffs, start=1):
        if c == 0:
            continue
        x = a * n
        total += c * (x ** (-s) * mp.gammainc(s, x) + x ** (s - weight) * mp.gammainc(weight - s, x))
    return total * a ** s / mp.gamma(s)


def weight2_coeffs(z, n_max):
    """a(n) of y^2 = x(1-x)(x-z), a(2) = 0, multiplicative extension (z with 2-power denominator)."""
    ap = {}
    for p in primes(2, n_max):
        ap[p] = 0 if p == 2 else p + 1 - legendre_count(z, p)
    a = [0] * (n_max + 1)
    a[1] = 1
    for n in range(2, n_max + 1):
        m, p = n, next(q for q in primes(2, n) if n % q == 0)
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if m > 1:
            a[n] = a[m] * a[n // m]
            continue
        if e == 1:
            a[n] = ap[p]
        else:
            a[n] = ap[p] * a[n // p] - (p if p != 2 else 0) * a[n // p ** 2]
    return a[1:]


def main():
    half = mp.mpf(1) / 2
    print("4F3(1/2;1|1)", mp.hyper([half] * 4, [1] * 3, 1))
    print("3F2(1/2;1|1)", mp.hyper([half] * 3, [1] * 2, 1))
    print("3F2(1/2;1|-1)", mp.hyper([half] * 3, [1] * 2, -1))
    print("3F2(1/2;1|4) ", mp.hyper([half] * 3, [1] * 2, 4))

    f84 = eta_product([(2, 4), (4, 4)], 400)
    for s in (1, 2, 3):
        print(f"L(8.4,{s})", l_value(f84, 8, 4, s))
    print("16 L(8.4,2)/pi^2", 16 * l_value(f84, 8, 4, 2) / mp.pi ** 2)

    g = mp.gamma(mp.mpf(1) / 3) ** 9
    print("G^9/(96 pi^4)       ", g / (96 * mp.pi ** 4))
    print("G^9/(144 sqrt3 pi^3)", g / (144 * mp.sqrt(3) * mp.pi ** 3))
    f93 = eta_product([(3, 8)], 400)
    for s in (2, 3):
        print(f"L(9.4,{s})", l_value(f93, 9, 4, s))

    long4 = mp.nsum(lambda k: (4 * k + 1) * (mp.rf(half, k) / mp.factorial(k)) ** 6, [0, mp.inf])
    print("sum (4k+1)(1/2)_k^6/k!^6", long4, " 32 L(8.4,1)/pi^2", 32 * l_value(f84, 8, 4, 1) / mp.pi ** 2)

    for x in (2, -3, 0.75, 5, -24):
        print(f"Re 2F1(1/3,2/3;1;{x})", mp.re(mp.hyp2f1(mp.mpf(1) / 3, mp.mpf(2) / 3, 1, x)))

    for z in ("-2", "-1", "-0.5", "0", "0.25", "0.5", "0.75"):
        zz = mp.mpf(z)
        quad = mp.quad(lambda t: 1 / mp.sqrt(t * (1 - t) * (1 - zz * t)), [0, 0.5, 1])
        print(f"period z={z}", quad, "pi*2F1", mp.pi * mp.hyp2f1(half, half, 1, zz))

    for z, n in ((-1, 32), (mp.mpf(1) / 2, 64)):
        c = weight2_coeffs(Fraction(-1) if z == -1 else Fraction(1, 2), 3000)
        lv = l_value(c, n, 2, 1)
        per = mp.pi * mp.re(mp.hyp2f1(half, half, 1, 1 - z))
        print(f"curve z={z} N={n}: L(E,1)={lv}  -L/period={-lv / per}")


if __name__ == "__main__":
    main()
