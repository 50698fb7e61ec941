/// q-calculus primitives: Pochhammer symbols, q-binomials, terminating
/// basic hypergeometric sums and the xi / omega building blocks.
#pragma once

#include <vector>

#include "qracah/rational.hpp"

namespace qracah {

/// (a;q)_k = prod_{l=0}^{k-1} (1 - a q^l); equals 1 for k = 0.
Rational qpoch(const Rational& a, const Rational& q, int k);

/// q-binomial [N n]_q = (q;q)_N / ((q;q)_n (q;q)_{N-n}).
/// Vanishes for n < 0 or n > N. Throws DegenerateQ when a required
/// (q;q)_m factor in a denominator vanishes.
Rational qbinom(int N, int n, const Rational& q);

/// Terminating basic hypergeometric sum: the series r_phi_s evaluated from
/// k = 0 up to `truncation` inclusive, with the (-1)^{(1+s-r)k}
/// q^{(1+s-r) binom(k,2)} factor included (trivial in the balanced
/// r = s+1 case). The caller is responsible for choosing a truncation at
/// which the series genuinely terminates.
Rational phi_rs(const std::vector<Rational>& numerators,
                const std::vector<Rational>& denominators,
                const Rational& q, const Rational& z, int truncation);

/// xi_n(c1,c2) = (qc1;q)_n / (qc2;q)_n * (c2/c1)^{n/2}, with the half
/// power computed from the stored square roots. Requires n >= 0.
Rational xi_fn(int n, const Rational& sqrt_c1, const Rational& sqrt_c2,
               const Rational& q);

/// omega_n(c) = (-1)^n c^{n/2} q^{n(n+1)/2}. Defined for any integer n via
/// the same closed form (omega_{-1}(c) = -c^{-1/2}).
Rational omega_fn(long n, const Rational& sqrt_c, const Rational& q);

}  // namespace qracah
