#!/usr/bin/env python3
"""Reference post-Newtonian quantities.

  mu = m0 m / (m0 + m),  beta = G (m0 + m),  upsilon = m0 m / (m0 + m)^2
  gamma1 = (1 - 3 upsilon)/8        gamma2 = beta (3 + upsilon)/2
  gamma3 = beta upsilon / 2         gamma4 = beta^2 / 2

Circular-orbit value of the c^-2 correction (|P| = mu n a, r.P = 0, |r| = a):
  h_pn = -(9 + upsilon)/8 * mu beta^2 / (c^2 a^2)

Apsidal precession rate of a two-body 1PN orbit:
  3 beta^{3/2} / (c^2 a^{5/2} (1 - e^2))   [rad/yr]

Run:  python3 gen_pn.py
"""

import mpmath as mp

mp.mp.dps = 40

G = 4 * mp.pi**2
C_LIGHT = mp.mpf("63241.0773")


def main():
    # coefficient set for m0 = 1, m = 1e-3
    m0, m = mp.mpf(1), mp.mpf("1e-3")
    mu = m0 * m / (m0 + m)
    beta = G * (m0 + m)
    ups = m0 * m / (m0 + m) ** 2
    g1 = (1 - 3 * ups) / 8
    g2 = beta * (3 + ups) / 2
    g3 = beta * ups / 2
    g4 = beta**2 / 2
    print("// pn_coefficients(m0=1, m=1e-3):")
    for nm, v in [("mu", mu), ("beta", beta), ("upsilon", ups),
                  ("gamma1", g1), ("gamma2", g2), ("gamma3", g3), ("gamma4", g4)]:
        print(f"//   {nm} = {mp.nstr(v, 17)}")

    # circular-orbit correction, a = 0.1 AU
    a = mp.mpf("0.1")
    hpn = -(9 + ups) / 8 * mu * beta**2 / (C_LIGHT**2 * a**2)
    print(f"// circular h_pn(a=0.1, m0=1, m=1e-3) = {mp.nstr(hpn, 17)}")

    # Mercury-like precession rate
    a = mp.mpf("0.387")
    e = mp.mpf("0.2056")
    mm = mp.mpf("1.66e-7")
    beta = G * (1 + mm)
    rate = 3 * beta ** mp.mpf(1.5) / (C_LIGHT**2 * a ** mp.mpf(2.5) * (1 - e**2))
    arcsec_cy = rate * 100 * 180 / mp.pi * 3600
    print(f"// mercury-like rate = {mp.nstr(rate, 17)} rad/yr = {mp.nstr(arcsec_cy, 10)} arcsec/century")

    # same with the planet mass sent to zero (test-particle reference)
    beta0 = G
    rate0 = 3 * beta0 ** mp.mpf(1.5) / (C_LIGHT**2 * a ** mp.mpf(2.5) * (1 - e**2))
    print(f"// test-particle rate = {mp.nstr(rate0, 17)} rad/yr = "
          f"{mp.nstr(rate0 * 100 * 180 / mp.pi * 3600, 10)} arcsec/century")


if __name__ == "__main__":
    main()
