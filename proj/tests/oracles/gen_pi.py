#!/usr/bin/env python3
"""Reference values of the relativistic-relevance indicator.

Pi_i = 4 G a2^3 m0 (m0 + m_i) / (c^2 a_i^2 a1^2 m_{3-i})

with G = 4 pi^2 (AU, yr, Msun) and c = 63241.0773 AU/yr.

Run:  python3 gen_pi.py
"""

import mpmath as mp

mp.mp.dps = 40

G = 4 * mp.pi**2
C_LIGHT = mp.mpf("63241.0773")
MJUP = mp.mpf("9.5458e-4")


def pi_pair(m0, m1, m2, a1, a2):
    out = []
    for i, (mi, mo, ai) in enumerate([(m1, m2, a1), (m2, m1, a2)]):
        out.append(4 * G * a2**3 * m0 * (m0 + mi) / (C_LIGHT**2 * ai**2 * a1**2 * mo))
    return out


def main():
    systems = [
        ("hd169830", mp.mpf("1.40"), mp.mpf("2.88") * MJUP, mp.mpf("4.04") * MJUP,
         mp.mpf("0.81"), mp.mpf("3.60")),
        ("hd11964", mp.mpf("1.125"), mp.mpf("0.0788") * MJUP, mp.mpf("0.622") * MJUP,
         mp.mpf("0.229"), mp.mpf("3.16")),
    ]
    for name, m0, m1, m2, a1, a2 in systems:
        p = pi_pair(m0, m1, m2, a1, a2)
        print(f"// {name}: Pi1 = {mp.nstr(p[0], 17)}  Pi2 = {mp.nstr(p[1], 17)}")
        print(f"//   7-digit: {mp.nstr(p[0], 8)}, {mp.nstr(p[1], 8)}")


if __name__ == "__main__":
    main()
