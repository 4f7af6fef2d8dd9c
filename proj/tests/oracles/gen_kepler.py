#!/usr/bin/env python3
"""Reference solutions of Kepler's equation E - e sin E = M by bisection.

Bisection is deliberately chosen as the independent route (the library uses
damped Newton). 40-digit arithmetic, interval [M - 1, M + 1] widened to
[0, 2pi] when needed.

Run:  python3 gen_kepler.py
"""

import mpmath as mp

mp.mp.dps = 40


def kepler_bisect(M, e):
    f = lambda E: E - e * mp.sin(E) - M
    lo, hi = M - 1, M + 1
    if f(lo) > 0 or f(hi) < 0:
        lo, hi = mp.mpf(0), 2 * mp.pi
    for _ in range(200):
        mid = (lo + hi) / 2
        if f(mid) <= 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def main():
    cases = [
        ("1.0", "0.5"),
        ("0.3", "0.9"),
        ("2.5", "0.2"),
        ("5.8", "0.7"),
        ("3.9", "0.99"),
    ]
    for Ms, es in cases:
        M, e = mp.mpf(Ms), mp.mpf(es)
        E = kepler_bisect(M, e)
        assert abs(E - e * mp.sin(E) - M) < mp.mpf("1e-35")
        print(f"{{{Ms}, {es}, {mp.nstr(E, 17)}}},")


if __name__ == "__main__":
    main()
