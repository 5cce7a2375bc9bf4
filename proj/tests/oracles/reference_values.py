"""Regenerates the frozen reference constants used by the C++ tests.

Run with: python3 tests/oracles/reference_values.py
Needs mpmath. Output is informational; the tests carry the values inline.
"""
import mpmath as mp

mp.mp.dps = 40


def fermi_mellin(s, k=0):
    f = lambda x: x ** (s - 1) * mp.log(x) ** k / (mp.e ** x + 1)
    return mp.quad(f, [0, 1, 10, 40, mp.inf])


def main():
    rows = {
        "eta(1/2)": mp.altzeta(0.5),
        "zeta(1/2)": mp.zeta(0.5),
        "M*(1/2)": fermi_mellin(mp.mpf(0.5)),
        "M*(0.75)": fermi_mellin(mp.mpf(0.75)),
        "M*(0.625)": fermi_mellin(mp.mpf(0.625)),
        "dM*(1/2)": fermi_mellin(mp.mpf(0.5), 1),
        "dM*(1)": fermi_mellin(mp.mpf(1), 1),
        "d2M*(1/2)": fermi_mellin(mp.mpf(0.5), 2),
        "d2M*(1)": fermi_mellin(mp.mpf(1), 2),
        "F(0.75+5i)": mp.gamma(mp.mpc(0.75, 5)) * mp.altzeta(mp.mpc(0.75, 5)),
        "F(0.75+10i)": mp.gamma(mp.mpc(0.75, 10)) * mp.altzeta(mp.mpc(0.75, 10)),
        "Gamma(0.5+14i)": mp.gamma(mp.mpc(0.5, 14)),
        "Gamma(0.3+100i)": mp.gamma(mp.mpc(0.3, 100)),
        "Gamma(1.7-50i)": mp.gamma(mp.mpc(1.7, -50)),
        "eta(0.4+100i)": mp.altzeta(mp.mpc(0.4, 100)),
        "2 pi / log 2": 2 * mp.pi / mp.log(2),
    }
    for t in (30, 40, 50):
        rows[f"N({t})"] = t / (2 * mp.pi) * mp.log(t / (2 * mp.pi * mp.e)) + mp.mpf(7) / 8
    for k in range(1, 11):
        rows[f"zero {k}"] = mp.zetazero(k).imag
    for name, value in rows.items():
        print(f"{name:16s} {mp.nstr(value, 15)}")


if __name__ == "__main__":
    main()
