#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qracah/qseries.hpp"
#include "qracah/sampling.hpp"

using namespace qracah;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }
}

TEST_CASE("qpoch basics") {
    CHECK(qpoch(R(7, 3), R(5, 2), 0) == R(1));           // empty product
    CHECK(qpoch(R(2), R(3), 2) == R(5));                 // (1-2)(1-6) = 5
    CHECK(qpoch(R(1), R(4, 7), 3) == R(0));              // first factor vanishes
    // direct product oracle for a longer run
    Rational a(3, 5), q(2, 7), prod(1), aq = a;
    for (int l = 0; l < 6; ++l) {
        prod *= R(1) - aq;
        aq *= q;
    }
    CHECK(qpoch(a, q, 6) == prod);
}

TEST_CASE("qbinom values and conventions") {
    CHECK(qbinom(5, 0, R(3, 2)) == R(1));
    CHECK(qbinom(5, 5, R(3, 2)) == R(1));
    CHECK(qbinom(2, 1, R(2)) == R(3));  // 1 + q at q = 2
    CHECK(qbinom(3, 4, R(2)) == R(0));  // n > N convention
    CHECK(qbinom(3, -1, R(2)) == R(0)); // n < 0 convention
    CHECK_THROWS_AS(qbinom(2, 1, R(1)), DegenerateQ);
    // Pascal-style recurrence as an independent oracle:
    // [N n]_q = q^n [N-1 n]_q + [N-1 n-1]_q
    Rational q(5, 3);
    for (int N = 1; N <= 6; ++N)
        for (int n = 0; n <= N; ++n)
            CHECK(qbinom(N, n, q) ==
                  pow_int(q, n) * qbinom(N - 1, n, q) + qbinom(N - 1, n - 1, q));
}

TEST_CASE("phi_rs termination and two-term sum") {
    // truncation 0 -> single k = 0 term
    CHECK(phi_rs({R(1, 2), R(3)}, {R(5)}, R(2, 3), R(7), 0) == R(1));
    // numerator equal to 1 kills every k >= 1 term
    CHECK(phi_rs({R(1), R(3), R(5), R(7)}, {R(2), R(4), R(9)}, R(2, 3), R(1, 2), 4) == R(1));
    // balanced 4phi3 with top q^{-1}: 1 + prod(1-a_i)/prod(1-b_j) * z/(1-q)
    Rational q(3, 2), z = q;
    Rational a1 = pow_int(q, -1), a2(2, 5), a3(7, 2), a4(1, 3);
    Rational b1(4, 9), b2(5, 2), b3(8, 3);
    Rational expect = R(1) + (R(1) - a1) * (R(1) - a2) * (R(1) - a3) * (R(1) - a4) /
                                ((R(1) - b1) * (R(1) - b2) * (R(1) - b3)) * z / (R(1) - q);
    CHECK(phi_rs({a1, a2, a3, a4}, {b1, b2, b3}, q, z, 1) == expect);
    // unbalanced case picks up the (-1)^k q^{binom(k,2)} factor: 1phi1 at k = 2
    Rational g = phi_rs({R(3)}, {R(5)}, q, z, 2);
    Rational k1 = (R(1) - R(3)) / (R(1) - R(5)) * (-R(1)) / (R(1) - q) * z;
    Rational k2 = qpoch(R(3), q, 2) / qpoch(R(5), q, 2) * q / (qpoch(q, q, 2)) * z * z;
    CHECK(g == R(1) + k1 + k2);
    CHECK_THROWS_AS(phi_rs({R(1, 2)}, {pow_int(q, -1)}, q, z, 2), DegenerateQ);
}

TEST_CASE("xi and omega closed forms") {
    // (1-q c1)/(1-q c2) * (s2/s1) with q=2, c1=4, c2=9
    CHECK(xi_fn(1, R(2), R(3), R(2)) == R(21, 34));
    CHECK(xi_fn(0, R(2), R(3), R(2)) == R(1));
    CHECK(omega_fn(0, R(5), R(3)) == R(1));
    CHECK(omega_fn(1, R(2), R(3)) == R(-6));
    CHECK(omega_fn(-1, R(2), R(3)) == R(-1, 2));  // -c^{-1/2}
    CHECK(omega_fn(2, R(2), R(3)) == R(4 * 27));  // c * q^3
    CHECK_THROWS_AS(xi_fn(-1, R(2), R(3), R(2)), IndexOutOfRange);
}

TEST_CASE("pochhammer inversion identity over samples") {
    Rng rng(42);
    for (int t = 0; t < 50; ++t) {
        Rational a = sample_root(rng, 9);
        if (rng.below(2)) a = -a;
        Rational q = sample_root(rng, 9);
        int n = static_cast<int>(rng.below(11));
        Rational lhs = qpoch(a.inverse(), q, n);
        Rational rhs = pow_int(-a.inverse(), n) * pow_int(q, 1L * n * (n - 1) / 2) *
                       qpoch(a * pow_int(q, -n + 1), q, n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("phi_rs permutation invariance") {
    Rng rng(7);
    for (int t = 0; t < 25; ++t) {
        Rational q = sample_root(rng, 9);
        int n = static_cast<int>(rng.below(7));
        Rational top = pow_int(q, -n);
        Rational a2 = sample_root(rng, 9), a3 = sample_root(rng, 9), a4 = sample_root(rng, 9);
        // keep denominators off the termination ladder
        Rational b1 = sample_root(rng, 9) + R(10), b2 = sample_root(rng, 9) + R(11),
                 b3 = sample_root(rng, 9) + R(12);
        Rational base = phi_rs({top, a2, a3, a4}, {b1, b2, b3}, q, q, n);
        CHECK(base == phi_rs({a2, top, a4, a3}, {b3, b2, b1}, q, q, n));
        CHECK(base == phi_rs({a4, a3, a2, top}, {b2, b1, b3}, q, q, n));
    }
}

TEST_CASE("rational scalar type") {
    CHECK(R(4, 6) == R(2, 3));
    CHECK((R(1, 3) + R(1, 6)) == R(1, 2));
    CHECK_THROWS_AS(R(1) / R(0), DegenerateQ);
    CHECK(pow_int(R(2, 3), -2) == R(9, 4));
    CHECK(pow_int(R(0), 0) == R(1));
    CHECK(Rational::parse("-22/7") == R(-22, 7));
    CHECK(R(-22, 7).str() == "-22/7");
    CHECK(R(5).str() == "5");
    CHECK(pow_half(R(3), HalfInt{3}) == R(27));  // c^{3/2} with sqrt(c) = 3
    HalfInt h = HalfInt::whole(2) - HalfInt::half(5);  // 2 - 5/2 = -1/2
    CHECK(h.twice == -1);
}
