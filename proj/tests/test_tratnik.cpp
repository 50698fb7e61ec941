#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qracah/faults.hpp"
#include "qracah/qseries.hpp"
#include "qracah/sampling.hpp"
#include "qracah/tratnik.hpp"

using namespace qracah;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }

TratnikParams sampled(int N, unsigned tag = 0) {
    Rng rng = stream_for(4096 + tag, "test_tratnik", N, 0);
    return sample_tratnik(N, rng, 9);
}
}  // namespace

TEST_CASE("derived parameter satisfies the product constraint exactly") {
    TratnikParams p = sampled(3);
    Rational prod = pow_int(p.q(), 2L * p.N + 3);
    for (int i = 0; i <= 4; ++i) prod *= p.c(i);
    CHECK(prod == R(1));
    // reordering re-derives the complementary parameter
    TratnikParams o = p.reordered(4, 0, 3, 1);
    CHECK(o.s0 * o.s0 == p.c(2));
}

TEST_CASE("T conventions and product structure") {
    TratnikParams p = sampled(2);
    CHECK(tratnik_T(1, 2, 0, 0, p) == R(0));   // i + j > N
    CHECK(tratnik_T(-1, 0, 0, 0, p) == R(0));
    CHECK(tratnik_T(0, -1, 0, 0, p) == R(0));
    for (int x = 0; x <= p.N; ++x)
        for (int y = 0; x + y <= p.N; ++y)
            CHECK(tratnik_T(0, 0, x, y, p) ==
                  omega_norm(0, p.triple(1, 2, 3, p.N)) *
                      omega_norm(0, p.triple(3, 0, 4, p.N - x)));
    CHECK(tratnik_T(1, 0, 1, 0, p) ==
          racah_p(1, 1, p.triple(1, 2, 3, p.N)) * racah_p(0, 0, p.triple(3, 0, 4, p.N - 1)));
}

TEST_CASE("Lambda closed form at x = 0 and generic x") {
    TratnikParams p = sampled(3);
    const Rational q = p.q();
    // x = 0: (1 - c1c2 q)(q c2)^{N/2} / (q c1 c2; q)_{N+1}
    Rational expect0 = (R(1) - p.c(1) * p.c(2) * q) * pow_int(p.sq * p.s2, p.N) /
                       qpoch(q * p.c(1) * p.c(2), q, p.N + 1);
    CHECK(tratnik_lambda(0, p) == expect0);
    CHECK(tratnik_lambda(-1, p) == R(0));
    CHECK(tratnik_lambda(p.N + 1, p) == R(0));
    // generic x = 1 from the printed factors, assembled independently
    Rational expect1 = -qbinom(p.N, 1, q) * (R(1) - p.c(1) * p.c(2) * pow_int(q, 3)) *
                       (R(1) - q * p.c(2)) * pow_int(p.sq * p.s2, p.N) *
                       (p.s1 * p.s3 / (p.s2 * p.s4)) /
                       ((R(1) - q * p.c(1)) * qpoch(p.c(1) * p.c(2) * q * q, q, p.N + 1));
    CHECK(tratnik_lambda(1, p) == expect1);
}

TEST_CASE("F coefficients") {
    TratnikParams p = sampled(2);
    const Rational q = p.q();
    CHECK(F_coeff(Sign::Plus, 0, p.s4, p.s0, q) == R(0));  // factor (1 - q^0)
    const Rational c1 = p.c(4), c2 = p.c(0);
    Rational fm0 = c1 * c2 * q * (R(1) - c2 * q) * (R(1) - c1 * c2 * q) /
                   ((R(1) - c1 * c2 * q) * (R(1) - c1 * c2 * q * q));
    CHECK(F_coeff(Sign::Minus, 0, p.s4, p.s0, q) == fm0);
    Rational fp1 = c1 * c2 * c2 * q * q * (R(1) - c1 * q) * (R(1) - q) /
                   ((R(1) - c1 * c2 * q * q) * (R(1) - c1 * c2 * q * q * q));
    CHECK(F_coeff(Sign::Plus, 1, p.s4, p.s0, q) == fp1);
}

TEST_CASE("A coefficients: definitional recombination and the g_j crosscheck") {
    TratnikParams p = sampled(3);
    const Rational q = p.q();
    for (int j = 0; j <= p.N; ++j)
        for (int i = 0; i + j <= p.N; ++i) {
            for (Eps e : kEpsAll) {
                CHECK(A_coeff(e, Eps::Plus, i, j, p) ==
                      -p.c(3) * pow_int(q, p.N + 1) * F_coeff(Sign::Plus, j, p.s4, p.s0, q) *
                          cont_phi(Sign::Plus, e, i, p.triple(1, 2, 3, p.N - j)));
                CHECK(A_coeff(e, Eps::Minus, i, j, p) ==
                      -p.c(3) * pow_int(q, p.N + 1) * F_coeff(Sign::Minus, j, p.s4, p.s0, q) *
                          cont_phi(Sign::Minus, e, i, p.triple(1, 2, 3, p.N - j)));
            }
            // independent route to A^{0,0}: F-sum times Phi^0 plus the row
            // constant from the Phi^0(j; c3,c0,c4; N-x) expansion
            Rational fsum = F_coeff(Sign::Plus, j, p.s4, p.s0, q) +
                            F_coeff(Sign::Minus, j, p.s4, p.s0, q);
            Rational alt = p.c(3) * pow_int(q, p.N + 1) * fsum *
                               phi_coeff(Eps::Zero, i, p.triple(1, 2, 3, p.N - j)) +
                           A_row_g(j, p);
            CHECK(A_coeff(Eps::Zero, Eps::Zero, i, j, p) == alt);
            // g_j equals the stated combination of column sums
            Rational sp(0), sm(0);
            for (Eps e : kEpsAll) {
                sp += A_coeff(e, Eps::Plus, i, j, p);
                sm += A_coeff(e, Eps::Minus, i, j, p);
            }
            const Rational sqc2 = p.sq * p.s2;
            Rational lhs = -(R(1) - p.c(3) * pow_int(q, p.N + 1 - j)) * sqc2 /
                               (R(1) - p.c(1) * p.c(2) * pow_int(q, p.N + 2 - j)) * sp -
                           (R(1) - p.c(1) * p.c(2) * pow_int(q, p.N + 1 - j)) /
                               ((R(1) - p.c(3) * pow_int(q, p.N - j)) * sqc2) * sm;
            CHECK(A_row_g(j, p) == lhs);
        }
}

TEST_CASE("A coefficient symmetry used in the difference-equation proof") {
    TratnikParams p = sampled(3, 1);
    const TratnikParams dual = p.reordered(4, 0, 3, 1);
    for (int x = 0; x <= p.N; ++x)
        for (int y = 0; x + y <= p.N; ++y)
            for (Eps e : kEpsAll)
                for (Eps ep : kEpsAll) {
                    const int ym = y - eps_int(e), xm = x - eps_int(ep);
                    if (ym < 0 || xm < 0 || ym + xm > p.N) continue;
                    Rational lhs = A_coeff(e, ep, y, x, dual) *
                                   omega_norm(y, p.triple(4, 0, 3, p.N - x)) *
                                   tratnik_lambda(x, p);
                    Eps me = static_cast<Eps>(-eps_int(e));
                    Eps mep = static_cast<Eps>(-eps_int(ep));
                    Rational rhs = A_coeff(me, mep, ym, xm, dual) *
                                   omega_norm(ym, p.triple(4, 0, 3, p.N - xm)) *
                                   tratnik_lambda(xm, p);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("staircase Newton interpolation reproduces a known polynomial") {
    // oracle: f(u, v) = 3 - u v + 2 u^2 + v/5 on a staircase grid
    const int M = 4;
    std::vector<Rational> u, v;
    for (int k = 0; k <= M; ++k) {
        u.push_back(R(2 * k + 1, 3));
        v.push_back(R(k * k + 2, 7));
    }
    auto f = [&](int X, int Y) {
        const Rational &a = u[static_cast<size_t>(X)], &b = v[static_cast<size_t>(Y)];
        return R(3) - a * b + R(2) * a * a + b / R(5);
    };
    std::vector<std::vector<Rational>> vals(static_cast<size_t>(M) + 1);
    for (int y = 0; y <= M; ++y)
        for (int x = 0; x + y <= M; ++x) vals[static_cast<size_t>(y)].push_back(f(x, y));
    auto a = newton_staircase_coeffs(u, v, vals);
    for (int x = 0; x <= M; ++x)
        for (int y = 0; x + y <= M; ++y) {
            if (x + y > 2) CHECK(a[static_cast<size_t>(x)][static_cast<size_t>(y)].is_zero());
            CHECK(newton_staircase_eval(a, u, v, x, y) == f(x, y));
        }
    CHECK(!a[2][0].is_zero());  // the u^2 term survives
    CHECK(!a[1][1].is_zero());  // the uv term survives
}

TEST_CASE("lambda interpolation nodes are pairwise distinct") {
    TratnikParams p = sampled(4, 2);
    for (int x = 0; x <= p.N; ++x)
        for (int y = x + 1; y <= p.N; ++y) {
            CHECK(lambda_eig(x, p.s1 * p.s2, p.q()) != lambda_eig(y, p.s1 * p.s2, p.q()));
            CHECK(lambda_eig(x, p.s3 * p.s0, p.q()) != lambda_eig(y, p.s3 * p.s0, p.q()));
        }
}

TEST_CASE("all fourteen identities pass on sampled parameters") {
    for (int N : {0, 2}) {
        TratnikParams p = sampled(N, 3);
        for (TratnikIdentity id : kTratnikIdentities) {
            IdentityReport r = check_identity_T(id, p);
            INFO("identity ", tratnik_identity_name(id), " N=", N);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("duality applied twice is the identity") {
    TratnikParams p = sampled(3, 4);
    const TratnikParams dual = p.reordered(4, 0, 3, 1);
    const TratnikParams dd = dual.reordered(4, 0, 3, 1);
    CHECK(dd.c(1) == p.c(1));
    CHECK(dd.c(2) == p.c(2));
    CHECK(dd.c(3) == p.c(3));
    CHECK(dd.c(4) == p.c(4));
    for (int i = 0; i <= p.N; ++i)
        for (int j = 0; i + j <= p.N; ++j)
            for (int x = 0; x <= p.N; ++x)
                for (int y = 0; x + y <= p.N; ++y)
                    CHECK(tratnik_T(i, j, x, y, dd) == tratnik_T(i, j, x, y, p));
}

TEST_CASE("mutations are caught by the bivariate identities") {
    TratnikParams p = sampled(2, 6);
    set_active_fault(Fault::FlipFMinus);
    CHECK(!check_identity_T(TratnikIdentity::Rec2, p).pass);
    set_active_fault(Fault::FlipAPlusPlus);
    CHECK(!check_identity_T(TratnikIdentity::StochasticRowsum, p).pass);
    set_active_fault(Fault::None);
    CHECK(check_identity_T(TratnikIdentity::Rec2, p).pass);
    CHECK(check_identity_T(TratnikIdentity::StochasticRowsum, p).pass);
}
