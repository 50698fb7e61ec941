// Acceptance suite: every criterion is exact (zero residual); each test
// prints one pass/fail line with its wall time and asserts its budget.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <regex>
#include <sstream>

#include "qracah/aw3.hpp"
#include "qracah/aw4.hpp"
#include "qracah/griffiths.hpp"
#include "qracah/qseries.hpp"
#include "qracah/sampling.hpp"
#include "qracah/suites.hpp"

using namespace qracah;

namespace {

struct Budget {
    const char* label;
    double limit_s;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    bool ok = true;

    void finish() {
        const double s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %s (%.2f s, budget %.0f s)\n", ok ? "PASS" : "FAIL", label, s,
                    limit_s);
        std::fflush(stdout);
        CHECK(ok);
        CHECK(s < limit_s);
    }
};

constexpr std::uint64_t kSeed = 20240601;

}  // namespace

TEST_CASE("criterion 1: q-calculus identities, 50 samples, exact") {
    Budget b{"criterion 1: q-calculus suite", 5.0};
    Rng rng(kSeed);
    for (int t = 0; t < 50 && b.ok; ++t) {
        // Pochhammer inversion, k, n <= 10
        Rational a = sample_root(rng, 9);
        if (rng.below(2)) a = -a;
        Rational q = sample_root(rng, 9);
        int n = static_cast<int>(rng.below(11));
        Rational lhs = qpoch(a.inverse(), q, n);
        Rational rhs = pow_int(-a.inverse(), n) * pow_int(q, 1L * n * (n - 1) / 2) *
                       qpoch(a * pow_int(q, -n + 1), q, n);
        if (!(lhs == rhs)) b.ok = false;

        // base inversion of the terminating 4phi3, truncation <= 6
        int m = static_cast<int>(rng.below(7));
        Rational a2 = sample_root(rng, 9), a3 = sample_root(rng, 9), a4 = sample_root(rng, 9);
        Rational bs[3];
        for (Rational& bb : bs) {
            for (;;) {
                bb = sample_root(rng, 9);
                bool clean = true;
                Rational ql(1);
                for (int l = 0; l < m; ++l) {
                    if (bb == ql) clean = false;
                    ql *= q;
                }
                if (clean) break;
            }
        }
        const Rational qi = q.inverse();
        Rational l2 = phi_rs({pow_int(q, m), a2, a3, a4}, {bs[0], bs[1], bs[2]}, qi, qi, m);
        Rational z = pow_int(q, m) * a2 * a3 * a4 / (bs[0] * bs[1] * bs[2]);
        Rational r2 = phi_rs({pow_int(q, -m), a2.inverse(), a3.inverse(), a4.inverse()},
                             {bs[0].inverse(), bs[1].inverse(), bs[2].inverse()}, q, z, m);
        if (!(l2 == r2)) b.ok = false;

        // permutation invariance of the terminating series; denominators of
        // the base-q series must avoid the negative powers instead
        Rational bp[3];
        for (Rational& bb : bp) {
            for (;;) {
                bb = sample_root(rng, 9);
                bool clean = true;
                Rational ql(1);
                for (int l = 0; l < m; ++l) {
                    if (bb == ql) clean = false;
                    ql /= q;
                }
                if (clean) break;
            }
        }
        Rational top = pow_int(q, -m);
        Rational base = phi_rs({top, a2, a3, a4}, {bp[0], bp[1], bp[2]}, q, q, m);
        if (!(base == phi_rs({a3, a4, top, a2}, {bp[2], bp[0], bp[1]}, q, q, m))) b.ok = false;
    }
    b.finish();
}

TEST_CASE("criterion 2: ten univariate identities, 25 sets per N <= 8") {
    Budget b{"criterion 2: univariate suite", 60.0};
    for (int N = 0; N <= 8 && b.ok; ++N)
        for (int trial = 0; trial < 25 && b.ok; ++trial) {
            Rng rng = stream_for(kSeed, "acc2", N, trial);
            RacahParams p = sample_racah(N, rng, 9);
            for (RacahIdentity id : kRacahIdentities)
                if (!check_identity_1v(id, p).pass) b.ok = false;
        }
    b.finish();
}

TEST_CASE("criterion 3: Racah relation with tau = omega_N(q c1 c2 c3), N <= 6") {
    Budget b{"criterion 3: Racah relation", 60.0};
    for (int trial = 0; trial < 10 && b.ok; ++trial)
        for (int N = 0; N <= 6 && b.ok; ++N) {
            Rng rng = stream_for(kSeed, "acc3", N, trial);
            RacahParams p = sample_racah(N, rng, 9);
            if (!check_racah_relation(p).pass) b.ok = false;
        }
    b.finish();
}

TEST_CASE("criterion 4: fourteen Tratnik identities, N <= 6") {
    Budget b{"criterion 4: Tratnik suite", 180.0};
    for (int trial = 0; trial < 10 && b.ok; ++trial)
        for (int N = 0; N <= 6 && b.ok; ++N) {
            Rng rng = stream_for(kSeed, "acc4", N, trial);
            TratnikParams p = sample_tratnik(N, rng, 9);
            for (TratnikIdentity id : kTratnikIdentities)
                if (!check_identity_T(id, p).pass) b.ok = false;
        }
    b.finish();
}

TEST_CASE("criterion 5: Biedenharn-Elliot with the pentagon at tau = 1, N <= 4") {
    Budget b{"criterion 5: Biedenharn-Elliot", 120.0};
    for (int trial = 0; trial < 10 && b.ok; ++trial)
        for (int N = 0; N <= 4 && b.ok; ++N) {
            Rng rng = stream_for(kSeed, "acc5", N, trial);
            TratnikParams p = sample_tratnik(N, rng, 9);
            if (!check_biedenharn_elliot(p).pass) b.ok = false;
        }
    b.finish();
}

TEST_CASE("criterion 6: eighteen Griffiths identities, N <= 5") {
    Budget b{"criterion 6: Griffiths suite", 180.0};
    for (int trial = 0; trial < 10 && b.ok; ++trial)
        for (int N = 0; N <= 5 && b.ok; ++N) {
            Rng rng = stream_for(kSeed, "acc6", N, trial);
            GriffithsParams p = sample_griffiths(N, rng, 9);
            for (GriffithsIdentity id : kGriffithsIdentities)
                if (!check_identity_G(id, p).pass) b.ok = false;
        }
    b.finish();
}

TEST_CASE("criterion 7: aw(3) relations, intertwining and irreducibility, N <= 8") {
    Budget b{"criterion 7: aw(3)", 60.0};
    for (int trial = 0; trial < 10 && b.ok; ++trial)
        for (int N = 0; N <= 8 && b.ok; ++N) {
            Rng rng = stream_for(kSeed, "acc7", N, trial);
            RacahParams p = sample_racah(N, rng, 9);
            for (Aw3Basis basis : kAw3Bases)
                if (!check_aw3_relations(basis, p).pass) b.ok = false;
            if (!check_intertwining3(p).pass) b.ok = false;
            if (!check_aw3_irreducibility(p).pass) b.ok = false;
            if (!check_aw3_z3(p).pass) b.ok = false;
        }
    b.finish();
}

TEST_CASE("criterion 8: aw(4) full relation set in five bases, N <= 4") {
    Budget b{"criterion 8: aw(4)", 300.0};
    for (int trial = 0; trial < 5 && b.ok; ++trial)
        for (int N = 0; N <= 4 && b.ok; ++N) {
            Rng rng = stream_for(kSeed, "acc8", N, trial);
            TratnikParams p = sample_tratnik(N, rng, 9);
            for (Aw4Basis basis : kAw4Bases)
                if (!check_aw4_relations(basis, p).pass) b.ok = false;
            if (!check_intertwining4(p).pass) b.ok = false;
            if (!check_aw4_z5(p).pass) b.ok = false;
            if (!check_aw4_irreducibility(p).pass) b.ok = false;
        }
    b.finish();
}

TEST_CASE("criterion 9: mutation sensitivity") {
    Budget b{"criterion 9: mutation sensitivity", 60.0};
    SuiteConfig cfg;
    cfg.mutation_test = true;
    cfg.seed = kSeed;
    std::ostringstream out;
    int rc = run_suites(cfg, out);
    if (rc == 0) b.ok = false;  // the flipped families must be detected
    const std::string s = out.str();
    for (Fault f : kMutationFaults) {
        const std::string tag = std::string("\"suite\":\"mutation:") + fault_name(f) + "\"";
        bool fault_failed = false;
        std::istringstream lines(s);
        std::string line;
        while (std::getline(lines, line))
            if (line.find(tag) != std::string::npos &&
                line.find("\"pass\":false") != std::string::npos &&
                line.find("\"residual\":") != std::string::npos)
                fault_failed = true;
        if (!fault_failed) b.ok = false;
    }
    b.finish();
}

TEST_CASE("criterion 10: determinism of the report stream") {
    Budget b{"criterion 10: determinism", 120.0};
    SuiteConfig cfg;
    cfg.suites = {"qnum", "racah1", "tratnik", "aw3"};
    cfg.n_max = 2;
    cfg.trials = 2;
    cfg.seed = kSeed;
    std::ostringstream s1, s2;
    if (run_suites(cfg, s1) != 0) b.ok = false;
    if (run_suites(cfg, s2) != 0) b.ok = false;
    static const std::regex k_wall(",\"wall_time\":[^}]*");
    if (std::regex_replace(s1.str(), k_wall, "") != std::regex_replace(s2.str(), k_wall, ""))
        b.ok = false;
    if (s1.str().empty()) b.ok = false;
    b.finish();
}
