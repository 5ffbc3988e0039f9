#!/usr/bin/env python3
"""Regenerate include/gkdv/golden_values.hpp.

Norms of the ground state Q(x) = ((k+2)/2)^(1/k) sech^(2/k)(k x / 2) by
adaptive quadrature over the real line (mpmath, 40 digits). The values are
frozen into a header so that library code never recomputes them.

    python3 tools/golden_values.py > include/gkdv/golden_values.hpp
"""

import mpmath as mp

mp.mp.dps = 40
K_MAX = 12


def q(k):
    amp = mp.power(mp.mpf(k + 2) / 2, mp.mpf(1) / k)
    return lambda x: amp * mp.power(mp.sech(k * x / 2), mp.mpf(2) / k)


def dq(k):
    amp = mp.power(mp.mpf(k + 2) / 2, mp.mpf(1) / k)
    # d/dx sech^p(bx) = -p b sech^p(bx) tanh(bx)
    p = mp.mpf(2) / k
    b = mp.mpf(k) / 2
    return lambda x: -amp * p * b * mp.power(mp.sech(b * x), p) * mp.tanh(b * x)


def integral(f):
    # even integrands: twice the half line
    return 2 * mp.quad(f, [0, 1, 4, 16, mp.inf], error=False)


def row(k):
    qk = q(k)
    dqk = dq(k)
    mass = integral(lambda x: qk(x) ** 2)
    grad_sq = integral(lambda x: dqk(x) ** 2)
    lkp2 = integral(lambda x: qk(x) ** (k + 2))
    energy = grad_sq / 2 - lkp2 / (k + 2)
    lam = mp.power(mp.mpf(4) / (k + 4), mp.mpf(1) / k)
    omega = mp.sqrt(mp.mpf(k) / (k + 4))
    psi_mass = mass * omega / lam ** 2
    return k, mass, grad_sq, lkp2, energy, psi_mass


def fmt(v):
    return mp.nstr(v, 20, min_fixed=-1, max_fixed=1)


def main():
    print("// Generated by tools/golden_values.py; do not edit by hand.")
    print("#pragma once")
    print()
    print("#include <array>")
    print()
    print("namespace gkdv::golden {")
    print()
    print("struct GroundStateNorms {")
    print("  int k;")
    print("  double mass;      // |Q|_2^2")
    print("  double grad_sq;   // |Q'|_2^2")
    print("  double lkp2;      // |Q|_{k+2}^{k+2}")
    print("  double energy;    // focusing energy E(Q)")
    print("  double psi_mass;  // |psi|_2^2")
    print("};")
    print()
    print(f"inline constexpr int kMaxPower = {K_MAX};")
    print()
    print(f"inline constexpr std::array<GroundStateNorms, {K_MAX}> kGroundState = {{{{")
    for k in range(1, K_MAX + 1):
        k, mass, grad_sq, lkp2, energy, psi_mass = row(k)
        print(f"    {{{k}, {fmt(mass)}, {fmt(grad_sq)}, {fmt(lkp2)}, {fmt(energy)}, {fmt(psi_mass)}}},")
    print("}};")
    print()
    print("}  // namespace gkdv::golden")


if __name__ == "__main__":
    main()
