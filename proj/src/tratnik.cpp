#include "qracah/tratnik.hpp"

#include <algorithm>
#include <chrono>

#include "qracah/faults.hpp"
#include "qracah/qseries.hpp"

namespace qracah {

namespace {

void require_admissible(const TratnikParams& p, const char* what) {
    auto v = validate(p);
    if (!v.empty())
        throw ConstraintViolation(std::string("check_identity_T: inadmissible parameters (") +
                                  what + "): " + v.front());
}

// Dense table of T values with x, y running over [-1, N+1]; entries outside
// the (i,j) triangle are zero by convention.
struct TTable {
    int N = 0;
    std::vector<Rational> v;
    const Rational& at(int i, int j, int x, int y) const {
        const size_t s = static_cast<size_t>(N) + 3;
        return v[((static_cast<size_t>(i) * (static_cast<size_t>(N) + 1) +
                   static_cast<size_t>(j)) *
                      s +
                  static_cast<size_t>(x + 1)) *
                     s +
                 static_cast<size_t>(y + 1)];
    }
};

TTable build_T_table(const TratnikParams& p) {
    TTable t;
    t.N = p.N;
    const size_t s = static_cast<size_t>(p.N) + 3;
    t.v.assign((static_cast<size_t>(p.N) + 1) * (static_cast<size_t>(p.N) + 1) * s * s,
               Rational(0));
    for (int i = 0; i <= p.N; ++i)
        for (int j = 0; i + j <= p.N; ++j)
            for (int x = -1; x <= p.N + 1; ++x)
                for (int y = -1; y <= p.N + 1; ++y) {
                    const_cast<Rational&>(t.at(i, j, x, y)) = tratnik_T(i, j, x, y, p);
                }
    return t;
}

template <typename Body>
IdentityReport timed(const char* identity, const TratnikParams& p, Body&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    IdentityScan scan;
    body(scan);
    IdentityReport r = scan.finish("tratnik", identity, p.fingerprint());
    r.wall_time =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace

Rational tratnik_T(int i, int j, int x, int y, const TratnikParams& p) {
    if (i < 0 || j < 0 || i + j > p.N) return Rational(0);
    return racah_p(i, x, p.triple(1, 2, 3, p.N - j)) *
           racah_p(j, y, p.triple(3, 0, 4, p.N - x));
}

Rational tratnik_lambda(int x, const TratnikParams& o) {
    if (x < 0 || x > o.N) return Rational(0);
    const Rational q = o.q();
    const Rational c1 = o.c(1), c2 = o.c(2);
    Rational num = qbinom(o.N, x, q) * (Rational(1) - c1 * c2 * pow_int(q, 2L * x + 1)) *
                   qpoch(q * c2, q, x) * pow_int(o.sq * o.s2, o.N);
    Rational d1 = qpoch(q * c1, q, x);
    Rational d2 = qpoch(c1 * c2 * pow_int(q, x + 1), q, o.N + 1);
    if (d1.is_zero() || d2.is_zero())
        throw DegenerateQ("tratnik_lambda: denominator Pochhammer vanishes");
    // (c1 c3 q^{x-1} / (c2 c4))^{x/2}
    Rational half = pow_int(o.s1 * o.s3 / (o.s2 * o.s4), x) * pow_int(o.sq, 1L * x * (x - 1));
    Rational r = num * half / (d1 * d2);
    return (x % 2 != 0) ? -r : r;
}

Rational F_coeff(Sign pm, int x, const Rational& sqrt_c1, const Rational& sqrt_c2,
                 const Rational& q) {
    const Rational c1 = sqrt_c1 * sqrt_c1, c2 = sqrt_c2 * sqrt_c2;
    const Rational c12 = c1 * c2;
    if (pm == Sign::Minus) {
        Rational den = (Rational(1) - c12 * pow_int(q, 2L * x + 1)) *
                       (Rational(1) - c12 * pow_int(q, 2L * x + 2));
        if (den.is_zero()) throw DegenerateQ("F_coeff: denominator vanishes");
        Rational r = c12 * pow_int(q, x + 1) * (Rational(1) - c2 * pow_int(q, x + 1)) *
                     (Rational(1) - c12 * pow_int(q, x + 1)) / den;
        if (active_fault() == Fault::FlipFMinus) r = -r;
        return r;
    }
    Rational den = (Rational(1) - c12 * pow_int(q, 2L * x)) *
                   (Rational(1) - c12 * pow_int(q, 2L * x + 1));
    if (den.is_zero()) throw DegenerateQ("F_coeff: denominator vanishes");
    return c1 * c2 * c2 * pow_int(q, x + 1) * (Rational(1) - c1 * pow_int(q, x)) *
           (Rational(1) - pow_int(q, x)) / den;
}

Rational A_coeff(Eps eps, Eps eps_prime, int i, int j, const TratnikParams& o) {
    const Rational q = o.q();
    const Rational c3qN1 = o.c(3) * pow_int(q, o.N + 1);
    if (eps_prime != Eps::Zero) {
        const Sign s = eps_prime == Eps::Plus ? Sign::Plus : Sign::Minus;
        Rational r = -c3qN1 * F_coeff(s, j, o.s4, o.s0, q) *
                     cont_phi(s, eps, i, o.triple(1, 2, 3, o.N - j));
        if (eps == Eps::Plus && eps_prime == Eps::Plus &&
            active_fault() == Fault::FlipAPlusPlus)
            r = -r;
        return r;
    }
    if (eps != Eps::Zero) {
        Rational fsum = F_coeff(Sign::Plus, j, o.s4, o.s0, q) +
                        F_coeff(Sign::Minus, j, o.s4, o.s0, q);
        return c3qN1 * fsum * phi_coeff(eps, i, o.triple(1, 2, 3, o.N - j));
    }
    // A^{0,0}: the closed three-sum combination.
    const Rational sqc2 = o.sq * o.s2;
    Rational d1 = Rational(1) - o.c(1) * o.c(2) * pow_int(q, o.N + 2 - j);
    Rational d2 = (Rational(1) - o.c(3) * pow_int(q, o.N - j)) * sqc2;
    if (d1.is_zero() || d2.is_zero()) throw DegenerateQ("A_coeff: A00 denominator vanishes");
    Rational f1 = (Rational(1) - o.c(3) * pow_int(q, o.N + 1 - j)) * sqc2 / d1;
    Rational f2 = (Rational(1) - o.c(1) * o.c(2) * pow_int(q, o.N + 1 - j)) / d2;
    Rational sum_plus(0), sum_minus(0), sum_zero(0);
    for (Eps e : kEpsAll) {
        sum_plus += A_coeff(e, Eps::Plus, i, j, o);
        sum_minus += A_coeff(e, Eps::Minus, i, j, o);
        if (e != Eps::Zero) sum_zero += A_coeff(e, Eps::Zero, i, j, o);
    }
    return -f1 * sum_plus - f2 * sum_minus - sum_zero;
}

Rational A_row_g(int j, const TratnikParams& o) {
    const Rational q = o.q();
    return -(Rational(1) - o.c(3) * pow_int(q, o.N + 1 - j)) *
               (pow_int(q, j) - o.c(1) * o.c(2) * o.c(3) * pow_int(q, o.N + 2)) *
               F_coeff(Sign::Plus, j, o.s4, o.s0, q) -
           o.c(3) * (Rational(1) - pow_int(q, o.N - j)) *
               (pow_int(q, j + 1) - o.c(1) * o.c(2) * pow_int(q, o.N + 2)) *
               F_coeff(Sign::Minus, j, o.s4, o.s0, q);
}

std::vector<std::vector<Rational>> newton_staircase_coeffs(
    const std::vector<Rational>& u, const std::vector<Rational>& v,
    const std::vector<std::vector<Rational>>& values) {
    const int M = static_cast<int>(values.size()) - 1;
    // Divided differences in u along each fixed y, then in v along each fixed x.
    std::vector<std::vector<Rational>> d(values);
    for (int y = 0; y <= M; ++y) {
        auto& row = d[static_cast<size_t>(y)];  // row[x] = f(x, y), x = 0..M-y
        const int len = M - y;
        for (int k = 1; k <= len; ++k)
            for (int m = len; m >= k; --m) {
                Rational du = u[static_cast<size_t>(m)] - u[static_cast<size_t>(m - k)];
                if (du.is_zero()) throw DegenerateQ("newton: coincident u nodes");
                row[static_cast<size_t>(m)] =
                    (row[static_cast<size_t>(m)] - row[static_cast<size_t>(m - 1)]) / du;
            }
    }
    std::vector<std::vector<Rational>> a(static_cast<size_t>(M) + 1);
    for (int x = 0; x <= M; ++x) {
        std::vector<Rational> col;
        for (int y = 0; y <= M - x; ++y) col.push_back(d[static_cast<size_t>(y)][static_cast<size_t>(x)]);
        const int len = M - x;
        for (int k = 1; k <= len; ++k)
            for (int m = len; m >= k; --m) {
                Rational dv = v[static_cast<size_t>(m)] - v[static_cast<size_t>(m - k)];
                if (dv.is_zero()) throw DegenerateQ("newton: coincident v nodes");
                col[static_cast<size_t>(m)] =
                    (col[static_cast<size_t>(m)] - col[static_cast<size_t>(m - 1)]) / dv;
            }
        a[static_cast<size_t>(x)] = std::move(col);
    }
    return a;
}

Rational newton_staircase_eval(const std::vector<std::vector<Rational>>& a,
                               const std::vector<Rational>& u, const std::vector<Rational>& v,
                               int X, int Y) {
    Rational sum(0);
    Rational bu(1);
    for (int x = 0; x < static_cast<int>(a.size()); ++x) {
        if (x > 0) bu *= u[static_cast<size_t>(X)] - u[static_cast<size_t>(x - 1)];
        if (bu.is_zero()) break;  // later u-factors stay zero
        Rational bv(1);
        const auto& col = a[static_cast<size_t>(x)];
        for (int y = 0; y < static_cast<int>(col.size()); ++y) {
            if (y > 0) bv *= v[static_cast<size_t>(Y)] - v[static_cast<size_t>(y - 1)];
            if (bv.is_zero()) break;
            sum += col[static_cast<size_t>(y)] * bu * bv;
        }
    }
    return sum;
}

const char* tratnik_identity_name(TratnikIdentity id) {
    switch (id) {
        case TratnikIdentity::LemmaStar: return "lemma_star";
        case TratnikIdentity::LemmaStarStar: return "lemma_starstar";
        case TratnikIdentity::Orthogonality: return "orthogonality";
        case TratnikIdentity::Duality: return "duality";
        case TratnikIdentity::Involution: return "involution";
        case TratnikIdentity::Rec1: return "rec1";
        case TratnikIdentity::Rec2: return "rec2";
        case TratnikIdentity::Diff1: return "diff1";
        case TratnikIdentity::Diff2: return "diff2";
        case TratnikIdentity::StochasticRowsum: return "stochastic_rowsum";
        case TratnikIdentity::FavardNu: return "favard_nu";
        case TratnikIdentity::TN0ClosedForm: return "TN0_closed_form";
        case TratnikIdentity::Polynomiality: return "polynomiality";
        case TratnikIdentity::IlievCrosscheck: return "iliev_crosscheck";
    }
    return "?";
}

namespace {

// R_2 of the nested-product correspondence, assembled from its two
// terminating series and the normalization N_2.
Rational iliev_R2(int z1, int z2, int n1, int n2, const TratnikParams& p) {
    const Rational q = p.q();
    const Rational c1 = p.c(1), c2 = p.c(2), c3 = p.c(3), c4 = p.c(4), c0 = p.c(0);

    const std::vector<Rational> nums1 = {pow_int(q, -n1), c1 * c2 * pow_int(q, n1 + 1),
                                         pow_int(q, -z1), c2 * c3 * pow_int(q, z1 + 1)};
    const std::vector<Rational> dens1 = {q * c2, c1 * c2 * c3 * pow_int(q, z2 + 2),
                                         pow_int(q, -z2)};
    Rational phi1 = phi_rs(nums1, dens1, q, q, std::min(n1, z1));

    const std::vector<Rational> nums2 = {pow_int(q, -n2),
                                         c1 * c2 * c4 * pow_int(q, 2L * n1 + n2 + 2),
                                         pow_int(q, n1 - z2), c1 * c2 * c3 * pow_int(q, n1 + z2 + 2)};
    const std::vector<Rational> dens2 = {c1 * c2 * pow_int(q, 2L * n1 + 2),
                                         c1 * c2 * c3 * c4 * pow_int(q, p.N + n1 + 3),
                                         pow_int(q, n1 - p.N)};
    const int trunc2 = z2 >= n1 ? std::min(n2, z2 - n1) : n2;
    Rational phi2 = phi_rs(nums2, dens2, q, q, trunc2);

    // The q^{n1-N}/c0 Pochhammer matches the second series' middle
    // denominator q^{N+n1} a3^2 = q^{n1-N}/c0 under the product constraint.
    Rational num = qpoch(q * c2, q, n1) * qpoch(c1 * c2 * c3 * pow_int(q, z2 + 2), q, n1) *
                   qpoch(pow_int(q, -z2), q, n1) * qpoch(c1 * c2 * pow_int(q, 2L * n1 + 2), q, n2) *
                   qpoch(pow_int(q, n1 - p.N) / c0, q, n2) * qpoch(pow_int(q, n1 - p.N), q, n2);
    Rational den = pow_int(p.sq * p.s2 * p.s3, n1 + n2) * pow_int(p.sq * p.s1, n2) *
                   pow_int(q, 1L * n1 * n2);
    return num / den * phi1 * phi2;
}

Rational iliev_W(int z1, int z2, const TratnikParams& p) {
    TratnikParams unit_tail = TratnikParams::make(p.sq, p.s4, p.s0, Rational(1), Rational(1), p.N);
    return omega_norm(z1, p.triple(1, 2, 3, z2)) * tratnik_lambda(p.N - z2, unit_tail) *
           xi_fn(p.N - z2, p.s4, p.s0, p.q());
}

Rational iliev_N(int n1, int n2, const TratnikParams& p) {
    const Rational q = p.q();
    const int rest = p.N - n1 - n2;
    Rational num = qpoch(q * p.c(3), q, rest) * qpoch(q, q, rest);
    Rational den = qpoch(q * p.c(2), q, n1) * qpoch(q * p.c(4), q, n2) * qpoch(q, q, p.N);
    if (den.is_zero()) throw DegenerateQ("iliev_N: denominator vanishes");
    Rational half = pow_int(p.s4 / p.s1, n1) * pow_int(p.s3 / (p.s1 * p.s2), n2) *
                    pow_int(p.sq, 2L * (n1 + n2) * rest + n1);
    return num / den * half;
}

}  // namespace

IdentityReport check_identity_T(TratnikIdentity id, const TratnikParams& p) {
    const int N = p.N;
    require_admissible(p, "base");
    const Rational q = p.q();

    switch (id) {
        case TratnikIdentity::LemmaStar:
            return timed("lemma_star", p, [&](IdentityScan& scan) {
                const TratnikParams dual = p.reordered(4, 0, 3, 1);
                for (int x = 0; x <= N; ++x)
                    for (int j = 0; x + j <= N; ++j)
                        scan.expect_zero(
                            {x, j},
                            omega_norm(x, p.triple(3, 2, 1, N - j)) * tratnik_lambda(j, dual) -
                                omega_norm(j, p.triple(3, 0, 4, N - x)) * tratnik_lambda(x, p));
            });

        case TratnikIdentity::LemmaStarStar:
            return timed("lemma_starstar", p, [&](IdentityScan& scan) {
                const TratnikParams swapped = p.reordered(1, 2, 4, 3);
                const Rational r1 = p.s1 * p.s2 * p.s4 / p.s3;  // sqrt(c1c2c4/c3)
                const Rational r2 = p.s1 * p.s2 * p.s3 / p.s4;  // sqrt(c1c2c3/c4)
                for (int x = 0; x <= N; ++x)
                    scan.expect_zero({x}, tratnik_lambda(x, p) * omega_fn(x, r1, q) -
                                              tratnik_lambda(x, swapped) * omega_fn(x, r2, q));
            });

        case TratnikIdentity::Orthogonality:
            return timed("orthogonality", p, [&](IdentityScan& scan) {
                TTable t = build_T_table(p);
                const TratnikParams dual = p.reordered(4, 0, 3, 1);
                std::vector<std::vector<Rational>> w(static_cast<size_t>(N) + 1);
                for (int x = 0; x <= N; ++x)
                    for (int y = 0; x + y <= N; ++y)
                        w[static_cast<size_t>(x)].push_back(
                            omega_norm(y, p.triple(4, 0, 3, N - x)) * tratnik_lambda(x, p));
                for (int i = 0; i <= N; ++i)
                    for (int j = 0; i + j <= N; ++j)
                        for (int k = 0; k <= N; ++k)
                            for (int l = 0; k + l <= N; ++l) {
                                Rational s(0);
                                for (int x = 0; x <= N; ++x)
                                    for (int y = 0; x + y <= N; ++y)
                                        s += w[static_cast<size_t>(x)][static_cast<size_t>(y)] *
                                             t.at(i, j, x, y) * t.at(k, l, x, y);
                                if (i == k && j == l)
                                    s -= omega_norm(i, p.triple(1, 2, 3, N - j)) *
                                         tratnik_lambda(j, dual);
                                scan.expect_zero({i, j, k, l}, s);
                            }
            });

        case TratnikIdentity::Duality:
            return timed("duality", p, [&](IdentityScan& scan) {
                const TratnikParams dual = p.reordered(4, 0, 3, 1);
                for (int i = 0; i <= N; ++i)
                    for (int j = 0; i + j <= N; ++j)
                        for (int x = 0; x <= N; ++x)
                            for (int y = 0; x + y <= N; ++y)
                                scan.expect_zero(
                                    {i, j, x, y},
                                    tratnik_T(i, j, x, y, p) *
                                            omega_norm(y, p.triple(4, 0, 3, N - x)) *
                                            tratnik_lambda(x, p) -
                                        tratnik_T(y, x, j, i, dual) *
                                            omega_norm(i, p.triple(1, 2, 3, N - j)) *
                                            tratnik_lambda(j, dual));
            });

        case TratnikIdentity::Involution:
            return timed("involution", p, [&](IdentityScan& scan) {
                TTable t = build_T_table(p);
                TTable td = build_T_table(p.reordered(4, 0, 3, 1));
                for (int i = 0; i <= N; ++i)
                    for (int j = 0; i + j <= N; ++j)
                        for (int k = 0; k <= N; ++k)
                            for (int l = 0; k + l <= N; ++l) {
                                Rational s(0);
                                for (int x = 0; x <= N; ++x)
                                    for (int y = 0; x + y <= N; ++y)
                                        s += t.at(i, j, x, y) * td.at(y, x, l, k);
                                if (i == k && j == l) s -= Rational(1);
                                scan.expect_zero({i, j, k, l}, s);
                            }
            });

        case TratnikIdentity::Rec1:
            return timed("rec1", p, [&](IdentityScan& scan) {
                TTable t = build_T_table(p);
                for (int i = 0; i <= N; ++i)
                    for (int j = 0; i + j <= N; ++j)
                        for (int x = 0; x <= N; ++x)
                            for (int y = 0; x + y <= N; ++y) {
                                Rational lhs =
                                    lambda_eig(x, p.s1 * p.s2, q) * t.at(i, j, x, y);
                                Rational rhs(0);
                                for (Eps e : kEpsAll) {
                                    const int m = i + eps_int(e);
                                    if (m < 0 || m + j > N) continue;
                                    rhs += phi_coeff(e, m, p.triple(1, 2, 3, N - j)) *
                                           t.at(m, j, x, y);
                                }
                                scan.expect_zero({i, j, x, y}, lhs - rhs);
                            }
            });

        case TratnikIdentity::Rec2:
            return timed("rec2", p, [&](IdentityScan& scan) {
                TTable t = build_T_table(p);
                for (int i = 0; i <= N; ++i)
                    for (int j = 0; i + j <= N; ++j)
                        for (int x = 0; x <= N; ++x)
                            for (int y = 0; x + y <= N; ++y) {
                                Rational lhs =
                                    lambda_eig(y, p.s3 * p.s0, q) * t.at(i, j, x, y);
                                Rational rhs(0);
                                for (Eps e : kEpsAll)
                                    for (Eps ep : kEpsAll) {
                                        const int a = i + eps_int(e), b = j + eps_int(ep);
                                        if (a < 0 || b < 0 || a + b > N) continue;
                                        rhs += A_coeff(e, ep, a, b, p) * t.at(a, b, x, y);
                                    }
                                scan.expect_zero({i, j, x, y}, lhs - rhs);
                            }
            });

        case TratnikIdentity::Diff1:
            return timed("diff1", p, [&](IdentityScan& scan) {
                TTable t = build_T_table(p);
                for (int i = 0; i <= N; ++i)
                    for (int j = 0; i + j <= N; ++j)
                        for (int x = 0; x <= N; ++x)
                            for (int y = 0; x + y <= N; ++y) {
                                Rational lhs =
                                    lambda_eig(j, p.s4 * p.s0, q) * t.at(i, j, x, y);
                                Rational rhs(0);
                                for (Eps e : kEpsAll)
                                    rhs += phi_coeff(e, y, p.triple(4, 0, 3, N - x)) *
                                           t.at(i, j, x, y - eps_int(e));
                                scan.expect_zero({i, j, x, y}, lhs - rhs);
                            }
            });

        case TratnikIdentity::Diff2:
            return timed("diff2", p, [&](IdentityScan& scan) {
                TTable t = build_T_table(p);
                const TratnikParams dual = p.reordered(4, 0, 3, 1);
                for (int i = 0; i <= N; ++i)
                    for (int j = 0; i + j <= N; ++j)
                        for (int x = 0; x <= N; ++x)
                            for (int y = 0; x + y <= N; ++y) {
                                Rational lhs =
                                    lambda_eig(i, p.s2 * p.s3, q) * t.at(i, j, x, y);
                                Rational rhs(0);
                                for (Eps e : kEpsAll)
                                    for (Eps ep : kEpsAll)
                                        rhs += A_coeff(e, ep, y, x, dual) *
                                               t.at(i, j, x - eps_int(ep), y - eps_int(e));
                                scan.expect_zero({i, j, x, y}, lhs - rhs);
                            }
            });

        case TratnikIdentity::StochasticRowsum:
            return timed("stochastic_rowsum", p, [&](IdentityScan& scan) {
                // The diagonal coefficient enters through its independent
                // route (F-sum times Phi^0 plus the row constant g_j); with
                // the closed A^{0,0} combination instead, the renormalized
                // sum would vanish tautologically.
                const Rational sqc2 = p.sq * p.s2;
                for (int i = 0; i <= N; ++i)
                    for (int j = 0; i + j <= N; ++j) {
                        Rational d1 = Rational(1) - p.c(1) * p.c(2) * pow_int(q, N - j + 2);
                        Rational d2 = sqc2 * (Rational(1) - p.c(3) * pow_int(q, N - j));
                        if (d1.is_zero() || d2.is_zero())
                            throw DegenerateQ("rowsum: renormalizer vanishes");
                        Rational f_plus =
                            sqc2 * (Rational(1) - p.c(3) * pow_int(q, N - j + 1)) / d1;
                        Rational f_minus =
                            (Rational(1) - p.c(1) * p.c(2) * pow_int(q, N - j + 1)) / d2;
                        Rational s(0);
                        for (Eps e : kEpsAll) {
                            s += f_plus * A_coeff(e, Eps::Plus, i, j, p);
                            s += f_minus * A_coeff(e, Eps::Minus, i, j, p);
                            if (e != Eps::Zero) s += A_coeff(e, Eps::Zero, i, j, p);
                        }
                        Rational fsum = F_coeff(Sign::Plus, j, p.s4, p.s0, q) +
                                        F_coeff(Sign::Minus, j, p.s4, p.s0, q);
                        s += p.c(3) * pow_int(q, N + 1) * fsum *
                                 phi_coeff(Eps::Zero, i, p.triple(1, 2, 3, N - j)) +
                             A_row_g(j, p);
                        scan.expect_zero({i, j}, s);
                    }
            });

        case TratnikIdentity::FavardNu:
            return timed("favard_nu", p, [&](IdentityScan& scan) {
                // nu2[n][j] for 0 <= j <= n <= N, solved from the first-line
                // ratio equations up to the global constant nu2[0][0] = 1.
                std::vector<std::vector<Rational>> nu2(static_cast<size_t>(N) + 1);
                nu2[0].push_back(Rational(1));
                for (int n = 0; n < N; ++n) {
                    Rational den = A_coeff(Eps::Plus, Eps::Zero, N - n, 0, p);
                    if (den.is_zero()) throw DegenerateQ("favard_nu: A^{+,0} vanishes");
                    nu2[static_cast<size_t>(n) + 1].push_back(
                        nu2[static_cast<size_t>(n)][0] *
                        A_coeff(Eps::Minus, Eps::Zero, N - n - 1, 0, p) / den);
                }
                for (int n = 1; n <= N; ++n)
                    for (int j = 0; j < n; ++j) {
                        Rational den = A_coeff(Eps::Zero, Eps::Minus, N - n, j, p);
                        if (den.is_zero()) throw DegenerateQ("favard_nu: A^{0,-} vanishes");
                        nu2[static_cast<size_t>(n)].push_back(
                            nu2[static_cast<size_t>(n)][static_cast<size_t>(j)] *
                            A_coeff(Eps::Zero, Eps::Plus, N - n, j + 1, p) / den);
                    }
                // Remaining four ratio families, cross-multiplied.
                for (int i = 0; i < N; ++i)
                    for (int j = 0; j <= i; ++j) {
                        scan.expect_zero({0, i, j},
                                         nu2[static_cast<size_t>(i) + 1][static_cast<size_t>(j)] *
                                                 A_coeff(Eps::Plus, Eps::Zero, N - i, j, p) -
                                             nu2[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                                 A_coeff(Eps::Minus, Eps::Zero, N - i - 1, j, p));
                        scan.expect_zero(
                            {1, i, j},
                            nu2[static_cast<size_t>(i) + 1][static_cast<size_t>(j) + 1] *
                                    A_coeff(Eps::Plus, Eps::Minus, N - i, j, p) -
                                nu2[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                    A_coeff(Eps::Minus, Eps::Plus, N - i - 1, j + 1, p));
                        if (j + 1 <= i)
                            scan.expect_zero(
                                {2, i, j},
                                nu2[static_cast<size_t>(i)][static_cast<size_t>(j) + 1] *
                                        A_coeff(Eps::Minus, Eps::Minus, N - i - 1, j, p) -
                                    nu2[static_cast<size_t>(i) + 1][static_cast<size_t>(j)] *
                                        A_coeff(Eps::Plus, Eps::Plus, N - i, j + 1, p));
                        scan.expect_zero(
                            {3, i, j},
                            nu2[static_cast<size_t>(i) + 1][static_cast<size_t>(j)] *
                                    phi_coeff(Eps::Plus, N - i, p.triple(1, 2, 3, N - j)) -
                                nu2[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                    phi_coeff(Eps::Minus, N - i - 1, p.triple(1, 2, 3, N - j)));
                    }
            });

        case TratnikIdentity::TN0ClosedForm:
            return timed("TN0_closed_form", p, [&](IdentityScan& scan) {
                const Rational pref = pow_int(p.s1 / p.s4, N) *
                                      xi_fn(N, p.s2, p.s2 * p.s3 * pow_int(p.sq, N), q) *
                                      (N % 2 != 0 ? Rational(-1) : Rational(1));
                for (int x = 0; x <= N; ++x) {
                    Rational closed =
                        pref * pow_int(p.s4 / p.s3, x) * xi_fn(x, p.s1, p.s2, q);
                    for (int y = 0; x + y <= N; ++y)
                        scan.expect_zero({x, y}, tratnik_T(N, 0, x, y, p) - closed);
                }
            });

        case TratnikIdentity::Polynomiality:
            return timed("polynomiality", p, [&](IdentityScan& scan) {
                std::vector<Rational> u, v;
                for (int x = 0; x <= N; ++x) u.push_back(lambda_eig(x, p.s1 * p.s2, q));
                for (int y = 0; y <= N; ++y) v.push_back(lambda_eig(y, p.s3 * p.s0, q));
                // T_{N,0} never vanishes on the grid for admissible parameters.
                std::vector<std::vector<Rational>> tn0(static_cast<size_t>(N) + 1);
                for (int x = 0; x <= N; ++x)
                    for (int y = 0; x + y <= N; ++y) {
                        Rational d = tratnik_T(N, 0, x, y, p);
                        if (d.is_zero()) throw DegenerateQ("polynomiality: T_{N,0} vanishes");
                        tn0[static_cast<size_t>(x)].push_back(d);
                    }
                for (int i = 0; i <= N; ++i)
                    for (int j = 0; i + j <= N; ++j) {
                        std::vector<std::vector<Rational>> f(static_cast<size_t>(N) + 1);
                        for (int y = 0; y <= N; ++y)
                            for (int x = 0; x + y <= N; ++x)
                                f[static_cast<size_t>(y)].push_back(
                                    tratnik_T(i, j, x, y, p) /
                                    tn0[static_cast<size_t>(x)][static_cast<size_t>(y)]);
                        auto a = newton_staircase_coeffs(u, v, f);
                        bool leading = false;
                        for (int x = 0; x <= N; ++x)
                            for (int y = 0; x + y <= N; ++y) {
                                const Rational& c =
                                    a[static_cast<size_t>(x)][static_cast<size_t>(y)];
                                if (x + y > N - i)
                                    scan.expect_zero({i, j, x, y}, c);
                                else if (x + y == N - i && !c.is_zero())
                                    leading = true;
                            }
                        scan.expect_true({i, j, -1, -1}, leading);
                        for (int x = 0; x <= N; ++x)
                            for (int y = 0; x + y <= N; ++y)
                                scan.expect_zero(
                                    {i, j, x, y},
                                    newton_staircase_eval(a, u, v, x, y) -
                                        f[static_cast<size_t>(y)][static_cast<size_t>(x)]);
                    }
            });

        case TratnikIdentity::IlievCrosscheck:
            return timed("iliev_crosscheck", p, [&](IdentityScan& scan) {
                for (int z2 = 0; z2 <= N; ++z2)
                    for (int z1 = 0; z1 <= z2; ++z1)
                        for (int n1 = 0; n1 <= N; ++n1)
                            for (int n2 = 0; n1 + n2 <= N; ++n2) {
                                Rational lhs =
                                    tratnik_T(z1, N - z2, n1, N - n1 - n2, p);
                                Rational rhs = iliev_W(z1, z2, p) * iliev_N(n1, n2, p) *
                                               iliev_R2(z1, z2, n1, n2, p);
                                scan.expect_zero({z1, z2, n1, n2}, lhs - rhs);
                            }
            });
    }
    throw IndexOutOfRange("check_identity_T: bad identity id");
}

}  // namespace qracah
