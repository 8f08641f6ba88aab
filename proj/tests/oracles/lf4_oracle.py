"""L(f,m)/F_m(1) for the fourteen weight-4 families, m = 1, 2, 3.

a(p) comes from the truncated sum mod p^3 lifted into the Weil window, with a(p) = 0 at primes
dividing the level. Where the window admits several lifts (p = 2 on odd levels, or any integer
in the window when a parameter is not p-integral), and for the root number, the choice is the one that makes the completed L-function independent of the split
point; the residual is printed as a consistency check.
"""
from fractions import Fraction

import mpmath as mp

from itertools import product

from exact_oracle import primes

mp.mp.dps = 32

FAMILIES = [
    ("1/2", "1/2", 8), ("1/2", "1/3", 36), ("1/2", "1/4", 16), ("1/2", "1/6", 72),
    ("1/3", "1/3", 27), ("1/3", "1/4", 9), ("1/3", "1/6", 108), ("1/4", "1/4", 32),
    ("1/4", "1/6", 144), ("1/6", "1/6", 216), ("1/5", "2/5", 25), ("1/8", "3/8", 128),
    ("1/10", "3/10", 200), ("1/12", "5/12", 864),
]


def truncated_mod(upper, p):
    m = p ** 3
    s, t = 0, 1
    for k in range(p):
        s = (s + t) % m
        if k == p - 1:
            break
        for a in upper:
            t = t * (a.numerator + k * a.denominator) * pow(a.denominator * (k + 1), -1, m) % m
    return s


def lifts(residue, p, modulus=None):
    m = p ** 3 if modulus is None else modulus
    bound = 2 * p ** 1.5
    return [x for x in range(-int(bound), int(bound) + 1) if (x - residue) % m == 0]


def coefficients(ap, n_max):
    a = [0] * (n_max + 1)
    a[1] = 1
    for n in range(2, n_max + 1):
        p = next(q for q in primes(2, n) if n % q == 0)
        m, e = n, 0
        while m % p == 0:
            m //= p
            e += 1
        if m > 1:
            a[n] = a[m] * a[n // m]
        elif e == 1:
            a[n] = ap[p]
        else:
            a[n] = ap[p] * a[n // p] - (0 if ap.get(("bad", p)) else p ** 3) * a[n // p ** 2]
    return a[1:]


def candidates(r, t, level, n_max):
    upper = [r, 1 - r, t, 1 - t]
    choices = {}
    for p in primes(2, n_max):
        if level % p == 0:
            choices[p] = [0]
        elif any(a.denominator % p == 0 for a in upper):
            choices[p] = lifts(0, p, modulus=1)
        else:
            choices[p] = lifts(truncated_mod(upper, p), p)
    ambiguous = [p for p, c in choices.items() if len(c) > 1]
    for pick in product(*(choices[p] for p in ambiguous)):
        ap = {p: c[0] for p, c in choices.items()}
        ap.update(dict(zip(ambiguous, pick)))
        ap.update({("bad", p): True for p in choices if level % p == 0})
        yield coefficients(ap, n_max)


def completed(coeffs, level, k, s, eps, c):
    x0 = 2 * mp.pi / mp.sqrt(level)
    tot = mp.mpf(0)
    for n, an in enumerate(coeffs, start=1):
        if an:
            x = x0 * n
            tot += an * (x ** (-s) * mp.gammainc(s, x * c) + eps * x ** (s - k) * mp.gammainc(k - s, x / c))
    return tot


def frobenius(upper, order, points=96):
    """Taylor coefficients in eps of sum_n prod Gamma(a+n+eps)/Gamma(a) / Gamma(1+n+eps)^4.

    Cauchy integral on |eps| = min(a)/2, inside the nearest pole at eps = -min(a).
    """
    g = [mp.gamma(a) for a in upper]
    rho = min(upper) / 2

    def f(e):
        return mp.nsum(lambda n: mp.fprod(mp.gamma(a + n + e) / ga for a, ga in zip(upper, g))
                       / mp.gamma(1 + n + e) ** 4, [0, mp.inf])

    samples = [(mp.expjpi(2 * mp.mpf(k) / points), None) for k in range(points)]
    samples = [(w, f(rho * w)) for w, _ in samples]
    return [mp.re(sum(v / w ** j for w, v in samples) / points) / rho ** j for j in range(order + 1)]


def main():
    for rs, ts, level in FAMILIES:
        r, t = Fraction(rs), Fraction(ts)
        n_max = int(15 * mp.sqrt(level)) + 20

        def resid(a, e):
            return abs(completed(a, level, 4, 2.5, e, 1) - completed(a, level, 4, 2.5, e, mp.mpf("1.2")))

        a, eps = min(((a, e) for a in candidates(r, t, level, n_max) for e in (1, -1)),
                     key=lambda ae: resid(*ae))
        res = resid(a, eps)
        fro = frobenius([mp.mpf(x.numerator) / x.denominator for x in (r, 1 - r, t, 1 - t)], 3)
        out = []
        for m in (1, 2, 3):
            lam = completed(a, level, 4, m, eps, 1)
            lv = lam * (2 * mp.pi / mp.sqrt(level)) ** m / mp.gamma(m)
            ratio = lv / fro[m]
            out.append(str(Fraction(str(mp.nstr(ratio, 25))).limit_denominator(100000)) if abs(lv) > 1e-20 else "0")
        print(f"({rs},{ts}) N={level} w={eps} fe_resid={mp.nstr(res, 3)} ratios={out}", flush=True)


if __name__ == "__main__":
    main()
