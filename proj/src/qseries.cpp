#include "qracah/qseries.hpp"

namespace qracah {

Rational qpoch(const Rational& a, const Rational& q, int k) {
    Rational r(1);
    Rational aq = a;
    for (int l = 0; l < k; ++l) {
        r *= Rational(1) - aq;
        aq *= q;
    }
    return r;
}

Rational qbinom(int N, int n, const Rational& q) {
    if (n < 0 || n > N) return Rational(0);
    // Build (q;q)_m incrementally; reuse the prefix products.
    const int m = N;
    std::vector<Rational> qq(static_cast<size_t>(m) + 1);
    qq[0] = Rational(1);
    Rational qp = q;
    for (int l = 1; l <= m; ++l) {
        qq[static_cast<size_t>(l)] = qq[static_cast<size_t>(l - 1)] * (Rational(1) - qp);
        qp *= q;
    }
    const Rational& den1 = qq[static_cast<size_t>(n)];
    const Rational& den2 = qq[static_cast<size_t>(N - n)];
    if (den1.is_zero() || den2.is_zero())
        throw DegenerateQ("qbinom: (q;q)_m vanishes in a denominator");
    return qq[static_cast<size_t>(N)] / (den1 * den2);
}

Rational phi_rs(const std::vector<Rational>& numerators,
                const std::vector<Rational>& denominators,
                const Rational& q, const Rational& z, int truncation) {
    const long r = static_cast<long>(numerators.size());
    const long s = static_cast<long>(denominators.size());
    const long w = 1 + s - r;  // exponent of the (-1)^k q^{binom(k,2)} factor

    Rational sum(1);   // k = 0 term
    Rational term(1);
    Rational qk(1);    // q^{k-1} while stepping k-1 -> k
    for (int k = 1; k <= truncation; ++k) {
        // term picks up prod (1 - a_i q^{k-1}) / prod (1 - b_j q^{k-1}),
        // the 1/(1-q^k) factorial factor, z, and ((-1) q^{k-1})^w.
        for (const Rational& a : numerators) term *= Rational(1) - a * qk;
        for (const Rational& b : denominators) {
            Rational f = Rational(1) - b * qk;
            if (f.is_zero())
                throw DegenerateQ("phi_rs: denominator Pochhammer vanishes at k=" + std::to_string(k));
            term /= f;
        }
        if (w != 0) term *= pow_int(-qk, w);
        qk *= q;
        Rational fq = Rational(1) - qk;
        if (fq.is_zero()) throw DegenerateQ("phi_rs: (q;q)_k vanishes at k=" + std::to_string(k));
        term /= fq;
        term *= z;
        sum += term;
    }
    return sum;
}

Rational xi_fn(int n, const Rational& sqrt_c1, const Rational& sqrt_c2,
               const Rational& q) {
    if (n < 0) throw IndexOutOfRange("xi_fn: negative index");
    Rational den = qpoch(sqrt_c2 * sqrt_c2 * q, q, n);
    if (den.is_zero()) throw DegenerateQ("xi_fn: (qc2;q)_n vanishes");
    Rational num = qpoch(sqrt_c1 * sqrt_c1 * q, q, n);
    return num / den * pow_int(sqrt_c2 / sqrt_c1, n);
}

Rational omega_fn(long n, const Rational& sqrt_c, const Rational& q) {
    Rational r = pow_int(sqrt_c, n) * pow_int(q, n * (n + 1) / 2);
    return (n % 2 != 0) ? -r : r;
}

}  // namespace qracah
