#!/usr/bin/env python3
"""Freeze mpmath reference values into tests/unit/oracles.hpp.

Every value here is computed with mpmath only, independently of the C++
library. Rerun after changing the list:

    python3 tests/oracles/gen_oracles.py > tests/unit/oracles.hpp
"""
import pathlib

import mpmath as mp
from sympy import primerange, prime

mp.mp.dps = 80
DIGITS = 45
ROOT = pathlib.Path(__file__).resolve().parents[2]


def s(x):
    return mp.nstr(mp.mpf(x), DIGITS, strip_zeros=False, min_fixed=1, max_fixed=0)


def c(z):
    z = mp.mpc(z)
    return f'{{"{s(z.real)}", "{s(z.imag)}"}}'


def binomial_transform(f):
    out = []
    for k in range(len(f)):
        out.append(mp.fsum((-1) ** j * mp.binomial(k, j) * f[j] for j in range(k + 1)))
    return out


def poch(z, k):
    p = mp.mpf(1)
    for r in range(1, k + 1):
        p *= 1 - z / r
    return p


def eta_factor(x):
    return (1 - mp.power(2, 1 - x)) * mp.zeta(x)


def log_deriv(a):
    return 1 / (a - 1) + mp.zeta(a, derivative=1) / mp.zeta(a)


def zeros100():
    lines = (ROOT / "data" / "zeros_first100.txt").read_text().splitlines()
    return [mp.mpf(l) for l in lines if l.strip() and not l.startswith("#")]


def main():
    out = []
    emit = out.append
    emit("#pragma once")
    emit("")
    emit("// Generated by tests/oracles/gen_oracles.py from mpmath. Do not edit.")
    emit("")
    emit("#include <array>")
    emit("#include <utility>")
    emit("")
    emit("namespace oracles {")
    emit("")
    emit("struct C { const char* re; const char* im; };")
    emit("struct PointC { C s; C value; };")
    emit("struct PointR { const char* x; const char* value; };")
    emit("")

    def arr_c(name, items):
        emit(f"inline constexpr std::array<PointC, {len(items)}> {name}{{{{")
        for z, v in items:
            emit(f"    {{{c(z)}, {c(v)}}},")
        emit("}};")
        emit("")

    def arr_r(name, items):
        emit(f"inline constexpr std::array<PointR, {len(items)}> {name}{{{{")
        for x, v in items:
            emit(f'    {{"{s(x)}", "{s(v)}"}},')
        emit("}};")
        emit("")

    def list_c(name, values):
        emit(f"inline constexpr std::array<C, {len(values)}> {name}{{{{")
        for v in values:
            emit(f"    {c(v)},")
        emit("}};")
        emit("")

    t1 = mp.mpf("14.134725141734693790457251983562470270784257115699")
    zeta_pts = [mp.mpc(2), mp.mpc("0.3", 100), mp.mpc("0.5", t1), mp.mpc("-0.5", 3), mp.mpc(-3),
                mp.mpc("1.0000001"), mp.mpc("0.75", "-7.5"), mp.mpc(40, 1)]
    arr_c("kZeta", [(z, mp.zeta(z)) for z in zeta_pts])
    eta_pts = [mp.mpc(1), mp.mpc("0.5", 3), mp.mpc("0.1"), mp.mpc(2, -20)]
    arr_c("kEtaFactor", [(z, (1 - mp.power(2, 1 - z)) * mp.zeta(z) if z != 1 else mp.log(2)) for z in eta_pts])
    gamma_pts = [mp.mpc("0.5"), mp.mpc("-2.5", 1), mp.mpc(10, 3), mp.mpc("0.1", "-0.2"), mp.mpc(-7.5)]
    arr_c("kGamma", [(z, mp.gamma(z)) for z in gamma_pts])
    lg_pts = [mp.mpc("1e13"), mp.mpc(100, 50), mp.mpc(3, -4)]
    arr_c("kLogGamma", [(z, mp.loggamma(z)) for z in lg_pts])
    emit("// B(a, b) as {a, b, value}.")
    beta_pts = [(mp.mpc("0.25", "-7.067"), 1001), (mp.mpc("0.5"), 3), (mp.mpc("1.375"), mp.mpf("22026.4657948067")),
                (mp.mpc(2, 1), mp.mpf("3.5"))]
    emit(f"inline constexpr std::array<std::array<C, 3>, {len(beta_pts)}> kBeta{{{{")
    for a, b in beta_pts:
        emit(f"    {{{{{c(a)}, {c(b)}, {c(mp.beta(a, b))}}}}},")
    emit("}};")
    emit("")
    arr_r("kLogZetaDeriv", [(a, log_deriv(mp.mpf(a))) for a in ["4.5", "1.001", "12.5", "2", "1.25"]])

    emit("// P_k(s) as {s, k, value}.")
    poch_pts = [(mp.mpc("0.5", 14), 7), (mp.mpc(1, 2), 100), (mp.mpc("0.3", -5), 20000), (mp.mpc("-2.5", "0.5"), 3000)]
    emit(f"inline constexpr std::array<std::pair<PointC, int>, {len(poch_pts)}> kPochhammer{{{{")
    for z, k in poch_pts:
        emit(f"    {{{{{c(z)}, {c(poch(z, k))}}}, {k}}},")
    emit("}};")
    emit("")

    K = 12
    list_c("kB22", binomial_transform([eta_factor(2 + 2 * j) for j in range(K + 1)]))
    list_c("kA", binomial_transform([(2 * j + 1) * mp.zeta(2 * j + 2) for j in range(K + 1)]))
    list_c("kD22", binomial_transform([mp.log(eta_factor(2 + 2 * j)) for j in range(K + 1)]))
    a, b = mp.mpf("4.5"), mp.mpf(4)
    list_c("kDhat", binomial_transform([log_deriv(a + b * j) for j in range(K + 1)]))
    half, i = mp.mpf("0.5"), mp.mpc(0, 1)
    list_c("kBCritical", binomial_transform([(1 - mp.power(2, 1 - (half + i * j))) * mp.zeta(half + i * j)
                                             for j in range(K + 1)]))

    # LOG_ETA series, alpha = beta = 2, K = 40, at sigma: sum d_k P_k((s - 2)/2 + 1).
    mp.mp.dps = 120
    d = binomial_transform([mp.log(eta_factor(2 + 2 * j)) for j in range(41)])
    arr_r("kLogEtaSeries", [(x, mp.fsum(d[k] * poch((mp.mpf(x) - 2) / 2 + 1, k) for k in range(41)))
                            for x in ["0.5", "-1", "0.9"]])
    mp.mp.dps = 60

    # psi2 = k^((alpha - sigma)/beta) [s_k - sum_p ln p sum_q p^-alpha q (1 - p^-beta q)^k], k = e^x,
    # 5000 primes, q <= 50, s_k = (1/beta) B((alpha - 1)/beta, k + 1).
    primes = list(primerange(2, prime(5000) + 1))
    sigma = half
    rows = []
    for x in ["5", "15", "25"]:
        k = mp.exp(mp.mpf(x))
        sk = mp.beta((a - 1) / b, k + 1) / b
        tot = mp.mpf(0)
        for p in primes:
            lp = mp.log(p)
            for q in range(1, 51):
                u = mp.power(p, -b * q)
                if k * u > 300:
                    continue
                term = lp * mp.power(p, -a * q) * mp.power(1 - u, k)
                tot += term
                # Stop only past the suppressed regime, where later q only shrink.
                if k * u < 1 and term < mp.mpf(10) ** -70:
                    break
        rows.append((x, mp.exp(mp.mpf(x) * (a - sigma) / b) * (sk - tot)))
    arr_r("kPsi2", rows)

    # The beta -> infinity limit with alpha = 1, 100 bundled zeros, 1000 trivial terms.
    zs = zeros100()
    lim = mp.fsum(2 * mp.re(1 / ((half + i * t) * (1 - half - i * t))) for t in zs)
    lim -= mp.fsum(mp.mpf(1) / (2 * n * (1 + 2 * n)) for n in range(1, 1001))
    lim += mp.log(2 * mp.pi) - 1
    arr_r("kInfBetaLimit", [("100", abs(lim))])
    emit(f'inline constexpr const char* kEulerGamma = "{s(mp.euler)}";')
    emit(f'inline constexpr const char* kOneMinusLn2 = "{s(1 - mp.log(2))}";')
    emit("// sum over all nontrivial zeros of 1/(rho (1 - rho)).")
    emit(f'inline constexpr const char* kSumRho = "{s(2 + mp.euler - mp.log(4 * mp.pi))}";')
    emit("")

    emit("}  // namespace oracles")
    print("\n".join(out))


if __name__ == "__main__":
    main()
