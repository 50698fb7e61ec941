#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qracah/aw3.hpp"
#include "qracah/qseries.hpp"
#include "qracah/sampling.hpp"

using namespace qracah;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }

RacahParams sampled(int N, unsigned tag = 0) {
    Rng rng = stream_for(515 + tag, "test_aw3", N, 0);
    return sample_racah(N, rng, 9);
}
}  // namespace

TEST_CASE("generator matrix entries match the tables") {
    RacahParams p = sampled(3);
    ExactMatrix a12 = aw3_generator(Aw3Basis::A, Aw3Gen::G12, p);
    CHECK(a12.at(0, 0) == R(0));  // lambda(0) = 0
    for (int i = 0; i <= p.N; ++i) CHECK(a12.at(i, i) == lambda_eig(i, p.s1 * p.s2, p.q()));
    ExactMatrix a23 = aw3_generator(Aw3Basis::A, Aw3Gen::G23, p);
    CHECK(a23.at(1, 0) == phi_coeff(Eps::Minus, 0, p.swapped13()));
    CHECK(a23.at(0, 1) == phi_coeff(Eps::Plus, 1, p.swapped13()));
    // rows -1 and N+1 are dropped: corners stay empty
    CHECK(a23.at(0, 2).is_zero());
    CHECK(a23.at(p.N, p.N - 2).is_zero());
}

TEST_CASE("representation map scalars") {
    RacahParams p = sampled(1);
    ExactMatrix c1 = aw3_element(Aw3Basis::A, Aw3Label::C1, p);
    CHECK(c1.at(0, 0) == p.s1 + p.s1.inverse());
    CHECK(c1.at(0, 1).is_zero());
    ExactMatrix c123 = aw3_element(Aw3Basis::B, Aw3Label::C123, p);
    Rational root = pow_int(p.sq, 2L * p.N + 2) * p.s1 * p.s2 * p.s3;
    CHECK(c123.at(0, 0) == root + root.inverse());
    // C12 at N = 1 assembled by hand from the affine map
    ExactMatrix c12 = aw3_element(Aw3Basis::A, Aw3Label::C12, p);
    Rational r12 = p.sq * p.s1 * p.s2;
    ExactMatrix manual = r12.inverse() * aw3_generator(Aw3Basis::A, Aw3Gen::G12, p) +
                         ExactMatrix::scalar_matrix(2, r12 + r12.inverse());
    CHECK(c12 == manual);
}

TEST_CASE("defining relations hold in all three bases") {
    for (int N : {0, 2, 4}) {
        RacahParams p = sampled(N, 1);
        for (Aw3Basis b : kAw3Bases) {
            INFO("basis ", aw3_basis_name(b), " N=", N);
            CHECK(check_aw3_relations(b, p).pass);
        }
    }
}

TEST_CASE("change-of-basis matrices") {
    RacahParams p = sampled(2, 2);
    // (P_AB)_{0,0} = p_0(0; c3,c2,c1; N) = Omega(0; c3,c2,c1; N)
    ExactMatrix pab = aw3_P(Aw3Pair::AB, p);
    CHECK(pab.at(0, 0) == omega_norm(0, p.swapped13()));
    ExactMatrix prod = pab * aw3_P(Aw3Pair::BA, p);
    CHECK(prod == ExactMatrix::identity_matrix(p.N + 1));
    CHECK(check_intertwining3(p).pass);
}

TEST_CASE("Racah relation with the Schur constant") {
    for (int N : {0, 1, 4}) {
        RacahParams p = sampled(N, 3);
        CHECK(check_racah_relation(p).pass);
        // tau recomputed from the matrix product agrees with the closed form
        ExactMatrix lhs = aw3_P(Aw3Pair::BA, p) * aw3_P(Aw3Pair::AC, p);
        ExactMatrix pbc = aw3_P(Aw3Pair::BC, p);
        Rational tau = lhs.at(0, 0) / pbc.at(0, 0);
        CHECK(tau == omega_fn(N, p.sq * p.s1 * p.s2 * p.s3, p.q()));
    }
}

TEST_CASE("cyclic images and irreducibility witnesses") {
    RacahParams p = sampled(3, 4);
    CHECK(check_aw3_z3(p).pass);
    CHECK(check_aw3_irreducibility(p).pass);
    // Leonard pair witness: A12 diagonal with simple spectrum, A23
    // irreducible tridiagonal
    ExactMatrix a12 = aw3_generator(Aw3Basis::A, Aw3Gen::G12, p);
    ExactMatrix a23 = aw3_generator(Aw3Basis::A, Aw3Gen::G23, p);
    for (int i = 0; i < p.N; ++i) {
        CHECK(!(a12.at(i, i) == a12.at(i + 1, i + 1)));
        CHECK(!a23.at(i + 1, i).is_zero());
        CHECK(!a23.at(i, i + 1).is_zero());
    }
}
