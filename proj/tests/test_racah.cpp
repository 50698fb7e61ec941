#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qracah/faults.hpp"
#include "qracah/qseries.hpp"
#include "qracah/racah.hpp"
#include "qracah/sampling.hpp"

using namespace qracah;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }

RacahParams sampled(int N, unsigned tag = 0) {
    Rng rng = stream_for(2024 + tag, "test_racah", N, 0);
    return sample_racah(N, rng, 9);
}
}  // namespace

TEST_CASE("omega_norm base cases") {
    RacahParams p0{R(3, 2), R(2, 3), R(5, 2), R(4, 7), 0};
    CHECK(omega_norm(0, p0) == R(1));  // everything telescopes at N = 0

    // N = 1: evaluate the closed form independently, factor by factor.
    RacahParams p1 = p0.with_level(1);
    const Rational q = p1.q(), c1 = p1.c1(), c2 = p1.c2(), c3 = p1.c3();
    Rational expect = (R(1) - c2 * c3 * q) * (R(1) - q * c1) * (p1.sq * p1.s2) /
                      ((R(1) - c2 * c3 * q) * (R(1) - c2 * c3 * q * q));
    CHECK(omega_norm(0, p1) == expect);
    CHECK(omega_norm(2, p1) == R(0));   // n > N
    CHECK(omega_norm(-1, p1) == R(0));  // n < 0
}

TEST_CASE("racah_p conventions and small values") {
    RacahParams p = sampled(2);
    for (int x = 0; x <= p.N; ++x) CHECK(racah_p(0, x, p) == omega_norm(0, p));
    CHECK(racah_p(p.N + 1, 0, p) == R(0));
    CHECK(racah_p(-1, 0, p) == R(0));
    CHECK(racah_p(0, p.N + 1, p) == R(0));

    // n = x = 1: two-term series written out directly.
    const Rational q = p.q(), c1 = p.c1(), c2 = p.c2(), c3 = p.c3();
    Rational term1 = (R(1) - pow_int(q, -1)) * (R(1) - c2 * c3 * q * q) *
                     (R(1) - pow_int(q, -1)) * (R(1) - c1 * c2 * q * q) /
                     ((R(1) - q * c2) * (R(1) - c1 * c2 * c3 * pow_int(q, p.N + 2)) *
                      (R(1) - pow_int(q, -p.N)) * (R(1) - q)) *
                     q;
    CHECK(racah_p(1, 1, p) == omega_norm(1, p) * (R(1) + term1));
}

TEST_CASE("lambda_eig") {
    CHECK(lambda_eig(0, R(7, 3), R(5, 2)) == R(0));
    // x=1, q=2, c=4: -(1 - 1/2)(1 - 16) = 15/2
    CHECK(lambda_eig(1, R(2), R(2)) == R(15, 2));
    // injectivity on 0..N under the admissibility constraints
    RacahParams p = sampled(5);
    for (int x = 0; x <= p.N; ++x)
        for (int y = x + 1; y <= p.N; ++y) {
            CHECK(lambda_eig(x, p.s1 * p.s2, p.q()) != lambda_eig(y, p.s1 * p.s2, p.q()));
            CHECK(lambda_eig(x, p.s2 * p.s3, p.q()) != lambda_eig(y, p.s2 * p.s3, p.q()));
        }
}

TEST_CASE("phi coefficient families") {
    RacahParams p = sampled(4);
    CHECK(phi_coeff(Eps::Plus, 0, p) == R(0));
    CHECK(phi_coeff(Eps::Minus, p.N, p) == R(0));
    for (int n = 0; n <= p.N; ++n)
        CHECK(phi_coeff(Eps::Zero, n, p) + phi_coeff(Eps::Plus, n, p) +
                  phi_coeff(Eps::Minus, n, p) ==
              R(0));
    // nonvanishing inside the ladder
    for (int n = 1; n <= p.N; ++n) {
        CHECK(!phi_coeff(Eps::Plus, n, p).is_zero());
        CHECK(!phi_coeff(Eps::Minus, n - 1, p).is_zero());
    }
}

TEST_CASE("contiguity coefficients") {
    RacahParams p = sampled(3);
    CHECK(cont_lambda(Sign::Minus, p.N, p) == R(0));  // factor q^{-N} - q^{-x} at x = N
    // engineered zero of lambda_+: c3 = q^{x-N-1} with x = 1, N = 2
    RacahParams z{R(2), R(3, 2), R(5, 3), pow_int(R(2), -2), 2};  // q = 4, c3 = 4^{-2}
    CHECK(cont_lambda(Sign::Plus, 1, z) == R(0));

    // direct evaluation of Phi_+^+(1; c1,c2,c3; N) against the closed form
    const Rational q = p.q(), c1 = p.c1(), c2 = p.c2(), c3 = p.c3();
    Rational expect = -(p.sq * p.s2) * c2 * pow_int(q, 2 - p.N - 1) * (R(1) - q) *
                      (R(1) - c1 * pow_int(q, p.N)) * (R(1) - c1 * pow_int(q, p.N + 1)) *
                      (R(1) - c3 * q) /
                      ((R(1) - c2 * c3 * q * q) * (R(1) - c2 * c3 * q * q * q));
    CHECK(cont_phi(Sign::Plus, Eps::Plus, 1, p) == expect);
}

TEST_CASE("boundary safety of the bispectral pair") {
    RacahParams p = sampled(4);
    const RacahParams dual = p.swapped13();
    CHECK(phi_coeff(Eps::Plus, 0, dual) == R(0));     // kills p_n(-1) in the difference equation
    CHECK(phi_coeff(Eps::Minus, p.N, dual) == R(0));  // kills p_n(N+1)
}

TEST_CASE("all ten univariate identities pass on sampled parameters") {
    for (int N : {0, 1, 3}) {
        RacahParams p = sampled(N, 7);
        for (RacahIdentity id : kRacahIdentities) {
            IdentityReport r = check_identity_1v(id, p);
            INFO("identity ", racah_identity_name(id), " N=", N);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("duality and orthogonality imply involution on shared parameters") {
    RacahParams p = sampled(4, 3);
    CHECK(check_identity_1v(RacahIdentity::Duality, p).pass);
    CHECK(check_identity_1v(RacahIdentity::Orthogonality, p).pass);
    CHECK(check_identity_1v(RacahIdentity::Involution, p).pass);
}

TEST_CASE("degree property via exact Newton interpolation") {
    // p_n(x) agrees with a polynomial of degree exactly n in
    // mu(x) = q^{-x} + c1 c2 q^{x+1}; the interpolation oracle lives here
    // and is independent of the series evaluation path.
    RacahParams p = sampled(6, 11);
    const Rational q = p.q();
    std::vector<Rational> mu, f;
    for (int x = 0; x <= p.N; ++x)
        mu.push_back(pow_int(q, -x) + p.c1() * p.c2() * pow_int(q, x + 1));
    for (int n = 0; n <= p.N; ++n) {
        f.clear();
        for (int x = 0; x <= p.N; ++x) f.push_back(racah_p(n, x, p));
        std::vector<Rational> dd = f;
        for (int k = 1; k <= p.N; ++k)
            for (int m = p.N; m >= k; --m)
                dd[static_cast<size_t>(m)] =
                    (dd[static_cast<size_t>(m)] - dd[static_cast<size_t>(m - 1)]) /
                    (mu[static_cast<size_t>(m)] - mu[static_cast<size_t>(m - k)]);
        for (int k = n + 1; k <= p.N; ++k) CHECK(dd[static_cast<size_t>(k)].is_zero());
        CHECK(!dd[static_cast<size_t>(n)].is_zero());
    }
}

TEST_CASE("validate reports the constraint sets") {
    RacahParams good = sampled(3);
    CHECK(validate(good).empty());

    RacahParams unit_q{R(1), R(2, 3), R(3, 5), R(5, 7), 2};  // q = 1
    auto v = validate(unit_q);
    bool found = false;
    for (auto& s : v)
        if (s.find("q^1 = 1") != std::string::npos) found = true;
    CHECK(found);

    RacahParams bad = good;
    bad.s2 = bad.sq.inverse();  // c2 = q^{-1}
    v = validate(bad);
    found = false;
    for (auto& s : v)
        if (s.find("c2 = q^-1") != std::string::npos) found = true;
    CHECK(found);

    CHECK_THROWS_AS(check_identity_1v(RacahIdentity::Recurrence, bad), ConstraintViolation);
}

TEST_CASE("q-inversion is checked by substitution on the square roots") {
    RacahParams p = sampled(2, 5);
    RacahParams inv = p.inverted();
    CHECK(inv.q() == p.q().inverse());
    CHECK(inv.c1() == p.c1().inverse());
    CHECK(check_identity_1v(RacahIdentity::QInversion, p).pass);
}

TEST_CASE("flipping Phi^+ breaks the recurrence with a nonzero residual") {
    RacahParams p = sampled(3, 9);
    set_active_fault(Fault::FlipPhiPlus);
    IdentityReport r = check_identity_1v(RacahIdentity::Recurrence, p);
    set_active_fault(Fault::None);
    CHECK(!r.pass);
    REQUIRE(r.residual.has_value());
    CHECK(!r.residual->is_zero());
    CHECK(check_identity_1v(RacahIdentity::Recurrence, p).pass);  // healthy again
}
