#include "qracah/racah.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

#include "qracah/faults.hpp"
#include "qracah/qseries.hpp"

namespace qracah {

namespace {

void require_admissible(const RacahParams& p, const char* what) {
    auto v = validate(p);
    if (!v.empty())
        throw ConstraintViolation(std::string("check_identity_1v: inadmissible parameters (") +
                                  what + "): " + v.front());
}

// p-values for n in [0, n_hi], x in [x_lo, x_hi]; out-of-convention entries
// are zero through racah_p itself.
struct PTable {
    int x_lo = 0;
    std::vector<std::vector<Rational>> v;
    const Rational& at(int n, int x) const {
        return v[static_cast<size_t>(n)][static_cast<size_t>(x - x_lo)];
    }
};

PTable build_p_table(const RacahParams& p, int n_hi, int x_lo, int x_hi) {
    PTable t;
    t.x_lo = x_lo;
    t.v.resize(static_cast<size_t>(n_hi) + 1);
    for (int n = 0; n <= n_hi; ++n) {
        auto& row = t.v[static_cast<size_t>(n)];
        row.reserve(static_cast<size_t>(x_hi - x_lo) + 1);
        for (int x = x_lo; x <= x_hi; ++x) row.push_back(racah_p(n, x, p));
    }
    return t;
}

template <typename Body>
IdentityReport timed(const char* identity, const RacahParams& p, Body&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    IdentityScan scan;
    body(scan);
    IdentityReport r = scan.finish("racah1", identity, p.fingerprint());
    r.wall_time =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace

Rational omega_norm(int n, const RacahParams& p) {
    if (n < 0 || n > p.N) return Rational(0);
    const Rational q = p.q();
    const Rational c1 = p.c1(), c2 = p.c2(), c3 = p.c3();
    Rational num = qbinom(p.N, n, q) * (Rational(1) - c2 * c3 * pow_int(q, 2L * n + 1)) *
                   qpoch(q * c2, q, n) * qpoch(c1 * c2 * c3 * pow_int(q, p.N + 2), q, n) *
                   qpoch(q * c1, q, p.N - n);
    Rational d1 = qpoch(c2 * c3 * pow_int(q, n + 1), q, p.N + 1);
    Rational d2 = qpoch(q * c3, q, n);
    if (d1.is_zero() || d2.is_zero())
        throw DegenerateQ("omega_norm: denominator Pochhammer vanishes");
    // (qc2)^{n - N/2} in the denominator: divide by the half power
    // (qc2)^{n - N/2} = pow_half(sqrt(q c2), 2n - N).
    const HalfInt e = HalfInt::whole(n) - HalfInt::half(p.N);
    return num / (pow_half(p.sq * p.s2, e) * d1 * d2);
}

Rational racah_p(int n, int x, const RacahParams& p) {
    if (n < 0 || n > p.N || x > p.N) return Rational(0);
    const Rational q = p.q();
    const Rational c1 = p.c1(), c2 = p.c2(), c3 = p.c3();
    const std::vector<Rational> nums = {pow_int(q, -n), c2 * c3 * pow_int(q, n + 1),
                                        pow_int(q, -x), c1 * c2 * pow_int(q, x + 1)};
    const std::vector<Rational> dens = {q * c2, c1 * c2 * c3 * pow_int(q, p.N + 2),
                                        pow_int(q, -p.N)};
    const int trunc = x >= 0 ? std::min(n, x) : n;
    return omega_norm(n, p) * phi_rs(nums, dens, q, q, trunc);
}

Rational lambda_eig(int x, const Rational& sqrt_c, const Rational& q) {
    if (q.is_zero()) throw DegenerateQ("lambda_eig: q = 0");
    return -(Rational(1) - pow_int(q, -x)) *
           (Rational(1) - sqrt_c * sqrt_c * pow_int(q, x + 1));
}

Rational phi_coeff(Eps eps, int n, const RacahParams& p) {
    const Rational q = p.q();
    const Rational c1 = p.c1(), c2 = p.c2(), c3 = p.c3();
    const Rational c23 = c2 * c3;
    switch (eps) {
        case Eps::Plus: {
            Rational den = (Rational(1) - c23 * pow_int(q, 2L * n)) *
                           (Rational(1) - c23 * pow_int(q, 2L * n + 1));
            if (den.is_zero()) throw DegenerateQ("phi_coeff: denominator vanishes");
            Rational r = -c2 * pow_int(q, n - p.N) * (Rational(1) - pow_int(q, n)) *
                         (Rational(1) - c1 * pow_int(q, p.N - n + 1)) *
                         (Rational(1) - c23 * pow_int(q, n + p.N + 1)) *
                         (Rational(1) - c3 * pow_int(q, n)) / den;
            if (active_fault() == Fault::FlipPhiPlus) r = -r;
            return r;
        }
        case Eps::Minus: {
            Rational den = (Rational(1) - c23 * pow_int(q, 2L * n + 1)) *
                           (Rational(1) - c23 * pow_int(q, 2L * n + 2));
            if (den.is_zero()) throw DegenerateQ("phi_coeff: denominator vanishes");
            return (Rational(1) - pow_int(q, n - p.N)) *
                   (Rational(1) - c1 * c2 * c3 * pow_int(q, n + p.N + 2)) *
                   (Rational(1) - c2 * pow_int(q, n + 1)) *
                   (Rational(1) - c23 * pow_int(q, n + 1)) / den;
        }
        case Eps::Zero:
            return -phi_coeff(Eps::Plus, n, p) - phi_coeff(Eps::Minus, n, p);
    }
    throw IndexOutOfRange("phi_coeff: bad eps");
}

Rational cont_lambda(Sign pm, int x, const RacahParams& p) {
    const Rational q = p.q();
    if (pm == Sign::Plus) {
        if (p.c3().is_zero()) throw DegenerateQ("cont_lambda: c3 = 0");
        return -(pow_int(q, -p.N - 1) / p.c3() - pow_int(q, -x)) *
               (Rational(1) - p.c1() * p.c2() * p.c3() * pow_int(q, p.N + x + 2));
    }
    return -(pow_int(q, -p.N) - pow_int(q, -x)) *
           (Rational(1) - p.c1() * p.c2() * pow_int(q, p.N + x + 1));
}

Rational cont_phi(Sign pm, Eps eps, int n, const RacahParams& p) {
    const Rational q = p.q();
    const Rational c1 = p.c1(), c2 = p.c2(), c3 = p.c3();
    const Rational c23 = c2 * c3;
    const Rational sqc2 = p.sq * p.s2;  // sqrt(q c2)
    auto den0 = [&](long a, long b) {
        Rational d = (Rational(1) - c23 * pow_int(q, a)) * (Rational(1) - c23 * pow_int(q, b));
        if (d.is_zero()) throw DegenerateQ("cont_phi: denominator vanishes");
        return d;
    };
    if (pm == Sign::Plus) {
        switch (eps) {
            case Eps::Plus:
                return -sqc2 * c2 * pow_int(q, 2L * n - p.N - 1) *
                       (Rational(1) - pow_int(q, n)) *
                       (Rational(1) - c1 * pow_int(q, p.N - n + 1)) *
                       (Rational(1) - c1 * pow_int(q, p.N + 2 - n)) *
                       (Rational(1) - c3 * pow_int(q, n)) / den0(2L * n, 2L * n + 1);
            case Eps::Minus:
                return -(Rational(1) - c1 * c2 * c3 * pow_int(q, n + p.N + 2)) *
                       (Rational(1) - c1 * c2 * c3 * pow_int(q, n + p.N + 3)) *
                       (Rational(1) - c2 * pow_int(q, n + 1)) *
                       (Rational(1) - c23 * pow_int(q, n + 1)) /
                       (c3 * pow_int(q, p.N + 1) * sqc2 * den0(2L * n + 1, 2L * n + 2));
            case Eps::Zero:
                return -cont_phi(Sign::Plus, Eps::Plus, n, p) -
                       cont_phi(Sign::Plus, Eps::Minus, n, p) -
                       (Rational(1) - c1 * c2 * pow_int(q, p.N + 2)) *
                           (Rational(1) - c1 * c2 * c3 * pow_int(q, p.N + 2)) /
                           (c3 * pow_int(q, p.N + 1) * sqc2);
        }
    } else {
        switch (eps) {
            case Eps::Plus:
                return -sqc2 * (Rational(1) - pow_int(q, n)) *
                       (Rational(1) - c3 * pow_int(q, n)) *
                       (Rational(1) - c23 * pow_int(q, n + p.N)) *
                       (Rational(1) - c23 * pow_int(q, n + p.N + 1)) /
                       (pow_int(q, p.N) * den0(2L * n, 2L * n + 1));
            case Eps::Minus:
                return -c3 * sqc2 * pow_int(q, p.N) *
                       (Rational(1) - pow_int(q, n - p.N)) *
                       (Rational(1) - pow_int(q, n - p.N + 1)) *
                       (Rational(1) - c2 * pow_int(q, n + 1)) *
                       (Rational(1) - c23 * pow_int(q, n + 1)) / den0(2L * n + 1, 2L * n + 2);
            case Eps::Zero:
                return -cont_phi(Sign::Minus, Eps::Plus, n, p) -
                       cont_phi(Sign::Minus, Eps::Minus, n, p) -
                       sqc2 * (Rational(1) - c3 * pow_int(q, p.N)) *
                           (pow_int(q, -p.N) - Rational(1));
        }
    }
    throw IndexOutOfRange("cont_phi: bad eps");
}

const char* racah_identity_name(RacahIdentity id) {
    switch (id) {
        case RacahIdentity::Recurrence: return "recurrence";
        case RacahIdentity::Difference: return "difference";
        case RacahIdentity::Duality: return "duality";
        case RacahIdentity::Orthogonality: return "orthogonality";
        case RacahIdentity::Involution: return "involution";
        case RacahIdentity::QInversion: return "q_inversion";
        case RacahIdentity::ContiguityRecPlus: return "contiguity_rec_plus";
        case RacahIdentity::ContiguityRecMinus: return "contiguity_rec_minus";
        case RacahIdentity::ContiguityDiffPlus: return "contiguity_diff_plus";
        case RacahIdentity::ContiguityDiffMinus: return "contiguity_diff_minus";
    }
    return "?";
}

IdentityReport check_identity_1v(RacahIdentity id, const RacahParams& p) {
    const int N = p.N;
    require_admissible(p, "base");
    const RacahParams dual = p.swapped13();

    switch (id) {
        case RacahIdentity::Recurrence:
            return timed("recurrence", p, [&](IdentityScan& scan) {
                PTable t = build_p_table(p, N, 0, N);
                for (int n = 0; n <= N; ++n)
                    for (int x = 0; x <= N; ++x) {
                        Rational lhs = lambda_eig(x, p.s1 * p.s2, p.q()) * t.at(n, x);
                        Rational rhs(0);
                        for (Eps e : kEpsAll) {
                            int m = n + eps_int(e);
                            if (m < 0 || m > N) continue;  // p_m = 0 by convention
                            rhs += phi_coeff(e, m, p) * t.at(m, x);
                        }
                        scan.expect_zero({n, x}, lhs - rhs);
                    }
            });

        case RacahIdentity::Difference:
            require_admissible(dual, "c1<->c3");
            return timed("difference", p, [&](IdentityScan& scan) {
                PTable t = build_p_table(p, N, -1, N + 1);
                for (int n = 0; n <= N; ++n)
                    for (int x = 0; x <= N; ++x) {
                        Rational lhs = lambda_eig(n, p.s2 * p.s3, p.q()) * t.at(n, x);
                        Rational rhs(0);
                        for (Eps e : kEpsAll)
                            rhs += phi_coeff(e, x, dual) * t.at(n, x - eps_int(e));
                        scan.expect_zero({n, x}, lhs - rhs);
                    }
            });

        case RacahIdentity::Duality:
            require_admissible(dual, "c1<->c3");
            return timed("duality", p, [&](IdentityScan& scan) {
                for (int n = 0; n <= N; ++n)
                    for (int x = 0; x <= N; ++x)
                        scan.expect_zero(
                            {n, x}, omega_norm(x, dual) * racah_p(n, x, p) -
                                        omega_norm(n, p) * racah_p(x, n, dual));
            });

        case RacahIdentity::Orthogonality:
            require_admissible(dual, "c1<->c3");
            return timed("orthogonality", p, [&](IdentityScan& scan) {
                PTable t = build_p_table(p, N, 0, N);
                std::vector<Rational> w;
                for (int x = 0; x <= N; ++x) w.push_back(omega_norm(x, dual));
                for (int n = 0; n <= N; ++n)
                    for (int m = 0; m <= N; ++m) {
                        Rational s(0);
                        for (int x = 0; x <= N; ++x)
                            s += w[static_cast<size_t>(x)] * t.at(n, x) * t.at(m, x);
                        if (n == m) s -= omega_norm(n, p);
                        scan.expect_zero({n, m}, s);
                    }
            });

        case RacahIdentity::Involution:
            require_admissible(dual, "c1<->c3");
            return timed("involution", p, [&](IdentityScan& scan) {
                PTable t = build_p_table(p, N, 0, N);
                PTable td = build_p_table(dual, N, 0, N);
                for (int n = 0; n <= N; ++n)
                    for (int m = 0; m <= N; ++m) {
                        Rational s(0);
                        for (int x = 0; x <= N; ++x) s += t.at(n, x) * td.at(x, m);
                        if (n == m) s -= Rational(1);
                        scan.expect_zero({n, m}, s);
                    }
            });

        case RacahIdentity::QInversion: {
            const RacahParams inv = p.inverted();
            const Rational factor = pow_int(p.s1 / p.s3, 2L * N);  // (c1/c3)^N
            return timed("q_inversion", p, [&](IdentityScan& scan) {
                for (int n = 0; n <= N; ++n)
                    for (int x = 0; x <= N; ++x)
                        scan.expect_zero({n, x}, racah_p(n, x, p) -
                                                     factor * racah_p(n, x, inv));
            });
        }

        case RacahIdentity::ContiguityRecPlus: {
            require_admissible(p.with_level(N + 1), "level N+1");
            return timed("contiguity_rec_plus", p, [&](IdentityScan& scan) {
                const RacahParams up = p.with_level(N + 1);
                PTable t = build_p_table(p, N, 0, N);
                PTable tu = build_p_table(up, N + 1, 0, N);
                for (int n = 0; n <= N + 1; ++n)
                    for (int x = 0; x <= N; ++x) {
                        Rational lhs = cont_lambda(Sign::Plus, x, p) * tu.at(n, x);
                        Rational rhs(0);
                        for (Eps e : kEpsAll) {
                            int m = n + eps_int(e);
                            if (m < 0 || m > N) continue;
                            rhs += cont_phi(Sign::Plus, e, m, p) * t.at(m, x);
                        }
                        scan.expect_zero({n, x}, lhs - rhs);
                    }
            });
        }

        case RacahIdentity::ContiguityRecMinus: {
            if (N > 0) require_admissible(p.with_level(N - 1), "level N-1");
            return timed("contiguity_rec_minus", p, [&](IdentityScan& scan) {
                const RacahParams down = p.with_level(N - 1);
                PTable t = build_p_table(p, N, 0, N);
                PTable td = build_p_table(down, std::max(N - 1, 0), 0, N);
                for (int n = 0; n <= N; ++n)
                    for (int x = 0; x <= N; ++x) {
                        Rational pn = (n <= N - 1) ? td.at(n, x) : Rational(0);
                        Rational lhs = cont_lambda(Sign::Minus, x, p) * pn;
                        Rational rhs(0);
                        for (Eps e : kEpsAll) {
                            int m = n + eps_int(e);
                            if (m < 0 || m > N) continue;
                            rhs += cont_phi(Sign::Minus, e, m, p) * t.at(m, x);
                        }
                        scan.expect_zero({n, x}, lhs - rhs);
                    }
            });
        }

        case RacahIdentity::ContiguityDiffPlus: {
            require_admissible(dual, "c1<->c3");
            require_admissible(p.with_level(N + 1), "level N+1");
            return timed("contiguity_diff_plus", p, [&](IdentityScan& scan) {
                PTable t = build_p_table(p, N, 0, N);
                PTable tu = build_p_table(p.with_level(N + 1), N, -1, N + 1);
                for (int n = 0; n <= N; ++n)
                    for (int x = 0; x <= N; ++x) {
                        Rational lhs = cont_lambda(Sign::Plus, n, dual) * t.at(n, x);
                        Rational rhs(0);
                        for (Eps e : kEpsAll)
                            rhs += cont_phi(Sign::Plus, e, x, dual) * tu.at(n, x - eps_int(e));
                        scan.expect_zero({n, x}, lhs - rhs);
                    }
            });
        }

        case RacahIdentity::ContiguityDiffMinus: {
            require_admissible(dual, "c1<->c3");
            if (N > 0) require_admissible(p.with_level(N - 1), "level N-1");
            return timed("contiguity_diff_minus", p, [&](IdentityScan& scan) {
                PTable t = build_p_table(p, N, 0, N);
                PTable td = build_p_table(p.with_level(N - 1), std::max(N - 1, 0), -1, N + 1);
                for (int n = 0; n <= N; ++n)
                    for (int x = 0; x <= N; ++x) {
                        Rational lhs = cont_lambda(Sign::Minus, n, dual) * t.at(n, x);
                        Rational rhs(0);
                        for (Eps e : kEpsAll) {
                            Rational pv = (n <= N - 1) ? td.at(n, x - eps_int(e)) : Rational(0);
                            rhs += cont_phi(Sign::Minus, e, x, dual) * pv;
                        }
                        scan.expect_zero({n, x}, lhs - rhs);
                    }
            });
        }
    }
    throw IndexOutOfRange("check_identity_1v: bad identity id");
}

}  // namespace qracah
