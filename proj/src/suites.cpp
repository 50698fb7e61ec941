#include "qracah/suites.hpp"

#include <chrono>
#include <sstream>

#include "qracah/aw3.hpp"
#include "qracah/aw4.hpp"
#include "qracah/griffiths.hpp"
#include "qracah/qseries.hpp"
#include "qracah/sampling.hpp"

namespace qracah {

namespace {

Rational sample_signed(Rng& rng, int bound) {
    Rational r = sample_root(rng, bound);
    return rng.below(2) == 0 ? r : -r;
}

template <typename Body>
IdentityReport timed_q(const char* identity, std::string params, Body&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    IdentityScan scan;
    body(scan);
    IdentityReport r = scan.finish("qnum", identity, std::move(params));
    r.wall_time =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

IdentityReport qnum_pochhammer_inversion(Rng& rng, int bound) {
    const Rational a = sample_signed(rng, bound);
    const Rational q = sample_root(rng, bound);
    const int n = static_cast<int>(rng.below(11));
    std::ostringstream ps;
    ps << "a=" << a.str() << " q=" << q.str() << " n=" << n;
    return timed_q("pochhammer_inversion", ps.str(), [&](IdentityScan& scan) {
        Rational lhs = qpoch(a.inverse(), q, n);
        Rational rhs = pow_int(-a.inverse(), n) * pow_int(q, 1L * n * (n - 1) / 2) *
                       qpoch(a * pow_int(q, -n + 1), q, n);
        scan.expect_zero({n}, lhs - rhs);
    });
}

// Rejects b-parameters that would zero a denominator Pochhammer within the
// truncation: (b;q)_k vanishes on {q^{-l}}, while the inverted-base series
// and its mirror vanish on {q^{+l}}.
Rational sample_phi_den(Rng& rng, int bound, const Rational& q, int n, bool inverted_base) {
    const Rational step = inverted_base ? q : q.inverse();
    for (int tries = 0; tries < kSampleRedrawCap; ++tries) {
        Rational b = sample_root(rng, bound);
        bool ok = true;
        Rational ql(1);
        for (int l = 0; l < n && ok; ++l) {
            if (b == ql) ok = false;
            ql *= step;
        }
        if (ok) return b;
    }
    throw SamplingExhausted("sample_phi_den");
}

IdentityReport qnum_phi_base_inversion(Rng& rng, int bound) {
    const Rational q = sample_root(rng, bound);
    const int n = static_cast<int>(rng.below(7));
    const Rational a2 = sample_signed(rng, bound), a3 = sample_signed(rng, bound),
                   a4 = sample_signed(rng, bound);
    const Rational b1 = sample_phi_den(rng, bound, q, n, true),
                   b2 = sample_phi_den(rng, bound, q, n, true),
                   b3 = sample_phi_den(rng, bound, q, n, true);
    std::ostringstream ps;
    ps << "q=" << q.str() << " n=" << n << " a=" << a2.str() << "," << a3.str() << ","
       << a4.str() << " b=" << b1.str() << "," << b2.str() << "," << b3.str();
    return timed_q("phi_base_inversion", ps.str(), [&](IdentityScan& scan) {
        const Rational qi = q.inverse();
        Rational lhs = phi_rs({pow_int(q, n), a2, a3, a4}, {b1, b2, b3}, qi, qi, n);
        Rational z = pow_int(q, n) * a2 * a3 * a4 / (b1 * b2 * b3);
        Rational rhs = phi_rs({pow_int(q, -n), a2.inverse(), a3.inverse(), a4.inverse()},
                              {b1.inverse(), b2.inverse(), b3.inverse()}, q, z, n);
        scan.expect_zero({n}, lhs - rhs);
    });
}

IdentityReport qnum_phi_permutation(Rng& rng, int bound) {
    const Rational q = sample_root(rng, bound);
    const int n = static_cast<int>(rng.below(7));
    const Rational a2 = sample_signed(rng, bound), a3 = sample_signed(rng, bound),
                   a4 = sample_signed(rng, bound);
    const Rational b1 = sample_phi_den(rng, bound, q, n, false),
                   b2 = sample_phi_den(rng, bound, q, n, false),
                   b3 = sample_phi_den(rng, bound, q, n, false);
    std::ostringstream ps;
    ps << "q=" << q.str() << " n=" << n;
    return timed_q("phi_permutation", ps.str(), [&](IdentityScan& scan) {
        const Rational top = pow_int(q, -n);
        Rational base = phi_rs({top, a2, a3, a4}, {b1, b2, b3}, q, q, n);
        scan.expect_zero({0}, base - phi_rs({a3, top, a4, a2}, {b2, b3, b1}, q, q, n));
        scan.expect_zero({1}, base - phi_rs({a4, a3, a2, top}, {b3, b1, b2}, q, q, n));
    });
}

IdentityReport qnum_pochhammer_multiplicativity(Rng& rng, int bound) {
    const Rational a = sample_signed(rng, bound);
    const Rational q = sample_root(rng, bound);
    const int m = static_cast<int>(rng.below(11)), n = static_cast<int>(rng.below(11));
    std::ostringstream ps;
    ps << "a=" << a.str() << " q=" << q.str() << " m=" << m << " n=" << n;
    return timed_q("pochhammer_multiplicativity", ps.str(), [&](IdentityScan& scan) {
        scan.expect_zero({m, n}, qpoch(a, q, m + n) -
                                     qpoch(a, q, m) * qpoch(a * pow_int(q, m), q, n));
    });
}

IdentityReport qnum_xi_reciprocal(Rng& rng, int bound) {
    for (int tries = 0; tries < kSampleRedrawCap; ++tries) {
        const Rational q = sample_root(rng, bound);
        const Rational s1 = sample_root(rng, bound), s2 = sample_root(rng, bound);
        const int n = static_cast<int>(rng.below(11));
        if (qpoch(q * s1 * s1, q, n).is_zero() || qpoch(q * s2 * s2, q, n).is_zero()) continue;
        std::ostringstream ps;
        ps << "q=" << q.str() << " s1=" << s1.str() << " s2=" << s2.str() << " n=" << n;
        return timed_q("xi_reciprocal", ps.str(), [&](IdentityScan& scan) {
            scan.expect_zero({n}, xi_fn(n, s1, s2, q) * xi_fn(n, s2, s1, q) - Rational(1));
        });
    }
    throw SamplingExhausted("qnum_xi_reciprocal");
}

IdentityReport qnum_omega_product(Rng& rng, int bound) {
    const Rational q = sample_root(rng, bound);
    const Rational sc = sample_signed(rng, bound), sd = sample_signed(rng, bound);
    const int n = static_cast<int>(rng.below(11));
    std::ostringstream ps;
    ps << "q=" << q.str() << " sc=" << sc.str() << " sd=" << sd.str() << " n=" << n;
    return timed_q("omega_product", ps.str(), [&](IdentityScan& scan) {
        scan.expect_zero({n}, omega_fn(n, sc * sd, q) -
                                  omega_fn(n, sc, q) * pow_int(sd, n));
    });
}

void emit(const IdentityReport& r, const SuiteConfig& cfg, std::ostream& out, bool& all_pass) {
    if (!r.pass) all_pass = false;
    out << r.to_json(cfg.with_timing) << '\n';
}

// Runs one check, converting thrown errors into failed reports so a bad
// identity cannot halt the rest of the run.
template <typename F>
void guarded(const char* suite, const char* identity, const SuiteConfig& cfg, std::ostream& out,
             bool& all_pass, F&& f) {
    try {
        emit(f(), cfg, out, all_pass);
    } catch (const std::exception& e) {
        IdentityReport r;
        r.suite = suite;
        r.identity = identity;
        r.params = std::string("error=") + e.what();
        r.pass = false;
        r.first_failure = std::vector<long>{-1};
        emit(r, cfg, out, all_pass);
    }
}

void run_qnum(const SuiteConfig& cfg, std::ostream& out, bool& all_pass) {
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Rng rng = stream_for(cfg.seed, "qnum", 0, trial);
        guarded("qnum", "pochhammer_inversion", cfg, out, all_pass,
                [&] { return qnum_pochhammer_inversion(rng, cfg.bound); });
        guarded("qnum", "phi_base_inversion", cfg, out, all_pass,
                [&] { return qnum_phi_base_inversion(rng, cfg.bound); });
        guarded("qnum", "phi_permutation", cfg, out, all_pass,
                [&] { return qnum_phi_permutation(rng, cfg.bound); });
        guarded("qnum", "pochhammer_multiplicativity", cfg, out, all_pass,
                [&] { return qnum_pochhammer_multiplicativity(rng, cfg.bound); });
        guarded("qnum", "xi_reciprocal", cfg, out, all_pass,
                [&] { return qnum_xi_reciprocal(rng, cfg.bound); });
        guarded("qnum", "omega_product", cfg, out, all_pass,
                [&] { return qnum_omega_product(rng, cfg.bound); });
    }
}

void run_racah1(const SuiteConfig& cfg, int n_max, std::ostream& out, bool& all_pass) {
    for (int N = 0; N <= n_max; ++N)
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Rng rng = stream_for(cfg.seed, "racah1", N, trial);
            RacahParams p = sample_racah(N, rng, cfg.bound);
            for (RacahIdentity id : kRacahIdentities)
                guarded("racah1", racah_identity_name(id), cfg, out, all_pass,
                        [&] { return check_identity_1v(id, p); });
        }
}

void run_tratnik(const SuiteConfig& cfg, int n_max, std::ostream& out, bool& all_pass) {
    for (int N = 0; N <= n_max; ++N)
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Rng rng = stream_for(cfg.seed, "tratnik", N, trial);
            TratnikParams p = sample_tratnik(N, rng, cfg.bound);
            for (TratnikIdentity id : kTratnikIdentities)
                guarded("tratnik", tratnik_identity_name(id), cfg, out, all_pass,
                        [&] { return check_identity_T(id, p); });
        }
}

void run_griffiths(const SuiteConfig& cfg, int n_max, std::ostream& out, bool& all_pass) {
    for (int N = 0; N <= n_max; ++N)
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Rng rng = stream_for(cfg.seed, "griffiths", N, trial);
            GriffithsParams p = sample_griffiths(N, rng, cfg.bound);
            for (GriffithsIdentity id : kGriffithsIdentities)
                guarded("griffiths", griffiths_identity_name(id), cfg, out, all_pass,
                        [&] { return check_identity_G(id, p); });
        }
}

void run_aw3(const SuiteConfig& cfg, int n_max, std::ostream& out, bool& all_pass) {
    for (int N = 0; N <= n_max; ++N)
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Rng rng = stream_for(cfg.seed, "aw3", N, trial);
            RacahParams p = sample_racah(N, rng, cfg.bound);
            for (Aw3Basis b : kAw3Bases) {
                std::string nm = std::string("relations_") + aw3_basis_name(b);
                guarded("aw3", nm.c_str(), cfg, out, all_pass,
                        [&] { return check_aw3_relations(b, p); });
            }
            guarded("aw3", "intertwining", cfg, out, all_pass,
                    [&] { return check_intertwining3(p); });
            guarded("aw3", "racah_relation", cfg, out, all_pass,
                    [&] { return check_racah_relation(p); });
            guarded("aw3", "z3_symmetry", cfg, out, all_pass, [&] { return check_aw3_z3(p); });
            guarded("aw3", "irreducibility", cfg, out, all_pass,
                    [&] { return check_aw3_irreducibility(p); });
        }
}

void run_aw4(const SuiteConfig& cfg, int n_max, std::ostream& out, bool& all_pass) {
    for (int N = 0; N <= n_max; ++N)
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Rng rng = stream_for(cfg.seed, "aw4", N, trial);
            TratnikParams p = sample_tratnik(N, rng, cfg.bound);
            for (Aw4Basis b : kAw4Bases) {
                std::string nm = std::string("relations_") + aw4_basis_name(b);
                guarded("aw4", nm.c_str(), cfg, out, all_pass,
                        [&] { return check_aw4_relations(b, p); });
            }
            guarded("aw4", "intertwining", cfg, out, all_pass,
                    [&] { return check_intertwining4(p); });
            guarded("aw4", "biedenharn_elliot", cfg, out, all_pass,
                    [&] { return check_biedenharn_elliot(p); });
            guarded("aw4", "z5_symmetry", cfg, out, all_pass, [&] { return check_aw4_z5(p); });
            guarded("aw4", "irreducibility", cfg, out, all_pass,
                    [&] { return check_aw4_irreducibility(p); });
        }
}

// Restores the fault state even if a check throws.
struct FaultGuard {
    ~FaultGuard() { set_active_fault(Fault::None); }
};

void run_mutation(const SuiteConfig& cfg, std::ostream& out, bool& all_pass) {
    FaultGuard guard;
    for (Fault f : kMutationFaults) {
        set_active_fault(f);
        const std::string tag = std::string("mutation:") + fault_name(f);
        Rng rng = stream_for(cfg.seed, tag.c_str(), 3, 0);
        // Small fixed probes; each flipped family must trip at least one.
        RacahParams rp = sample_racah(3, rng, cfg.bound);
        TratnikParams tp = sample_tratnik(2, rng, cfg.bound);
        auto relabel = [&](IdentityReport r) {
            r.suite = tag;
            return r;
        };
        guarded(tag.c_str(), "recurrence", cfg, out, all_pass,
                [&] { return relabel(check_identity_1v(RacahIdentity::Recurrence, rp)); });
        guarded(tag.c_str(), "rec2", cfg, out, all_pass,
                [&] { return relabel(check_identity_T(TratnikIdentity::Rec2, tp)); });
        guarded(tag.c_str(), "stochastic_rowsum", cfg, out, all_pass, [&] {
            return relabel(check_identity_T(TratnikIdentity::StochasticRowsum, tp));
        });
        set_active_fault(Fault::None);
    }
}

}  // namespace

int default_n_max(const std::string& suite) {
    if (suite == "racah1" || suite == "aw3") return 8;
    if (suite == "tratnik") return 6;
    if (suite == "griffiths") return 5;
    if (suite == "aw4") return 4;
    return 0;  // qnum ignores N
}

int run_suites(const SuiteConfig& cfg, std::ostream& out) {
    bool all_pass = true;
    if (cfg.mutation_test) {
        run_mutation(cfg, out, all_pass);
        return all_pass ? 0 : 1;
    }
    for (const std::string& s : cfg.suites) {
        const int n_max = cfg.n_max >= 0 ? cfg.n_max : default_n_max(s);
        if (s == "qnum")
            run_qnum(cfg, out, all_pass);
        else if (s == "racah1")
            run_racah1(cfg, n_max, out, all_pass);
        else if (s == "tratnik")
            run_tratnik(cfg, n_max, out, all_pass);
        else if (s == "griffiths")
            run_griffiths(cfg, n_max, out, all_pass);
        else if (s == "aw3")
            run_aw3(cfg, n_max, out, all_pass);
        else if (s == "aw4")
            run_aw4(cfg, n_max, out, all_pass);
        else
            throw ConstraintViolation("run_suites: unknown suite " + s);
    }
    return all_pass ? 0 : 1;
}

}  // namespace qracah
