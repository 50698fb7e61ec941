#include "qracah/aw3.hpp"

#include <chrono>

#include "qracah/qseries.hpp"

namespace qracah {

namespace {

template <typename Body>
IdentityReport timed(const char* identity, const RacahParams& p, Body&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    IdentityScan scan;
    body(scan);
    IdentityReport r = scan.finish("aw3", identity, p.fingerprint());
    r.wall_time =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// Tridiagonal fill: entry (i - eps, i) = coeff(eps, i); rows -1 and N+1 are
// dropped.
template <typename Coeff>
ExactMatrix tridiagonal(int N, Coeff&& coeff) {
    ExactMatrix m(N + 1);
    for (int i = 0; i <= N; ++i)
        for (Eps e : kEpsAll) {
            const int r = i - eps_int(e);
            if (r < 0 || r > N) continue;
            m.at(r, i) = coeff(e, i);
        }
    return m;
}

struct XiOmegaRatio {
    // xi_{i-eps}(a, b) omega_{i-eps}(ab) / (xi_i(a, b) omega_i(ab))
    Rational operator()(Eps e, int i) const {
        const int r = i - eps_int(e);
        return xi_fn(r, sa, sb, q) * omega_fn(r, sa * sb, q) /
               (xi_fn(i, sa, sb, q) * omega_fn(i, sa * sb, q));
    }
    Rational sa, sb, q;
};

}  // namespace

const char* aw3_basis_name(Aw3Basis b) {
    switch (b) {
        case Aw3Basis::A: return "A";
        case Aw3Basis::B: return "B";
        case Aw3Basis::C: return "C";
    }
    return "?";
}

ExactMatrix aw3_generator(Aw3Basis basis, Aw3Gen gen, const RacahParams& p) {
    const int N = p.N;
    const Rational q = p.q();
    switch (basis) {
        case Aw3Basis::A:
            switch (gen) {
                case Aw3Gen::G12: {
                    ExactMatrix m(N + 1);
                    for (int i = 0; i <= N; ++i) m.at(i, i) = lambda_eig(i, p.s1 * p.s2, q);
                    return m;
                }
                case Aw3Gen::G23:
                    return tridiagonal(N, [&](Eps e, int i) {
                        return phi_coeff(e, i, p.swapped13());
                    });
                case Aw3Gen::G13: {
                    XiOmegaRatio ratio{p.s2, p.s1, q};
                    return tridiagonal(N, [&](Eps e, int i) {
                        return ratio(e, i) * phi_coeff(e, i, p.reordered(p.s3, p.s1, p.s2));
                    });
                }
            }
            break;
        case Aw3Basis::B:
            switch (gen) {
                case Aw3Gen::G23: {
                    ExactMatrix m(N + 1);
                    for (int i = 0; i <= N; ++i) m.at(i, i) = lambda_eig(i, p.s2 * p.s3, q);
                    return m;
                }
                case Aw3Gen::G13:
                    return tridiagonal(N, [&](Eps e, int i) {
                        return phi_coeff(e, i, p.reordered(p.s1, p.s3, p.s2));
                    });
                case Aw3Gen::G12: {
                    XiOmegaRatio ratio{p.s3, p.s2, q};
                    return tridiagonal(N, [&](Eps e, int i) {
                        return ratio(e, i) * phi_coeff(e, i, p);
                    });
                }
            }
            break;
        case Aw3Basis::C:
            switch (gen) {
                case Aw3Gen::G13: {
                    ExactMatrix m(N + 1);
                    for (int i = 0; i <= N; ++i) m.at(i, i) = lambda_eig(i, p.s1 * p.s3, q);
                    return m;
                }
                case Aw3Gen::G12:
                    return tridiagonal(N, [&](Eps e, int i) {
                        return phi_coeff(e, i, p.reordered(p.s2, p.s1, p.s3));
                    });
                case Aw3Gen::G23: {
                    XiOmegaRatio ratio{p.s1, p.s3, q};
                    return tridiagonal(N, [&](Eps e, int i) {
                        return ratio(e, i) * phi_coeff(e, i, p.reordered(p.s2, p.s3, p.s1));
                    });
                }
            }
            break;
    }
    throw IndexOutOfRange("aw3_generator");
}

ExactMatrix aw3_element(Aw3Basis basis, Aw3Label label, const RacahParams& p) {
    const int dim = p.N + 1;
    auto central = [&](const Rational& root) {
        return ExactMatrix::scalar_matrix(dim, root + root.inverse());
    };
    auto affine = [&](Aw3Gen gen, const Rational& root) {
        // (1/root) X + (root + 1/root) 1 with root = sqrt(q c_i c_j)
        return root.inverse() * aw3_generator(basis, gen, p) +
               ExactMatrix::scalar_matrix(dim, root + root.inverse());
    };
    switch (label) {
        case Aw3Label::C1: return central(p.s1);
        case Aw3Label::C2: return central(p.s2);
        case Aw3Label::C3: return central(p.s3);
        case Aw3Label::C123:
            // sqrt(q^{2N+2} c1 c2 c3) = sq^{2N+2} s1 s2 s3
            return central(pow_int(p.sq, 2L * p.N + 2) * p.s1 * p.s2 * p.s3);
        case Aw3Label::C12: return affine(Aw3Gen::G12, p.sq * p.s1 * p.s2);
        case Aw3Label::C23: return affine(Aw3Gen::G23, p.sq * p.s2 * p.s3);
        case Aw3Label::C13: return affine(Aw3Gen::G13, p.sq * p.s1 * p.s3);
    }
    throw IndexOutOfRange("aw3_element");
}

ExactMatrix aw3_P(Aw3Pair pair, const RacahParams& p) {
    const int N = p.N;
    const Rational q = p.q();
    ExactMatrix m(N + 1);
    // forward pairs carry xi_j/omega_j column factors; inverse pairs carry
    // omega_i/xi_i row factors.
    auto fill_cols = [&](const Rational& sa, const Rational& sb, const RacahParams& tri) {
        for (int j = 0; j <= N; ++j) {
            Rational f = xi_fn(j, sa, sb, q) / omega_fn(j, sa * sb, q);
            for (int i = 0; i <= N; ++i) m.at(i, j) = f * racah_p(i, j, tri);
        }
    };
    auto fill_rows = [&](const Rational& sa, const Rational& sb, const RacahParams& tri) {
        for (int i = 0; i <= N; ++i) {
            Rational f = omega_fn(i, sa * sb, q) / xi_fn(i, sa, sb, q);
            for (int j = 0; j <= N; ++j) m.at(i, j) = f * racah_p(i, j, tri);
        }
    };
    switch (pair) {
        case Aw3Pair::AB: fill_cols(p.s2, p.s3, p.swapped13()); break;
        case Aw3Pair::BC: fill_cols(p.s3, p.s1, p.reordered(p.s1, p.s3, p.s2)); break;
        case Aw3Pair::CA: fill_cols(p.s1, p.s2, p.reordered(p.s2, p.s1, p.s3)); break;
        case Aw3Pair::BA: fill_rows(p.s2, p.s3, p); break;
        case Aw3Pair::CB: fill_rows(p.s3, p.s1, p.reordered(p.s2, p.s3, p.s1)); break;
        case Aw3Pair::AC: fill_rows(p.s1, p.s2, p.reordered(p.s3, p.s1, p.s2)); break;
    }
    return m;
}

IdentityReport check_aw3_relations(Aw3Basis basis, const RacahParams& p) {
    std::string name = std::string("relations_") + aw3_basis_name(basis);
    return timed(name.c_str(), p, [&](IdentityScan& scan) {
        const Rational Q = p.sq;
        const Rational d = Q * Q - (Q * Q).inverse();
        if (d.is_zero()) throw DegenerateQ("aw3: q^2 = q^-2");
        const Rational e = Q + Q.inverse();
        ExactMatrix c12 = aw3_element(basis, Aw3Label::C12, p);
        ExactMatrix c23 = aw3_element(basis, Aw3Label::C23, p);
        ExactMatrix c13 = aw3_element(basis, Aw3Label::C13, p);
        ExactMatrix c1 = aw3_element(basis, Aw3Label::C1, p);
        ExactMatrix c2 = aw3_element(basis, Aw3Label::C2, p);
        ExactMatrix c3 = aw3_element(basis, Aw3Label::C3, p);
        ExactMatrix c123 = aw3_element(basis, Aw3Label::C123, p);
        // relation i: [C12, C23]_q / (q^2 - q^-2) = -C13 + (C3 C1 + C2 C123)/(q + q^-1)
        {
            ExactMatrix r = d.inverse() * q_commutator(Q, c12, c23) + c13 -
                            e.inverse() * (c3 * c1 + c2 * c123);
            scan.expect_true({1}, r.is_zero());
        }
        // relation ii: [C23, C13]_q -> -C12 + (C1 C2 + C3 C123)/(q + q^-1)
        {
            ExactMatrix r = d.inverse() * q_commutator(Q, c23, c13) + c12 -
                            e.inverse() * (c1 * c2 + c3 * c123);
            scan.expect_true({2}, r.is_zero());
        }
        // relation iii: [C13, C12]_q -> -C23 + (C2 C3 + C1 C123)/(q + q^-1)
        {
            ExactMatrix r = d.inverse() * q_commutator(Q, c13, c12) + c23 -
                            e.inverse() * (c2 * c3 + c1 * c123);
            scan.expect_true({3}, r.is_zero());
        }
    });
}

IdentityReport check_intertwining3(const RacahParams& p) {
    return timed("intertwining", p, [&](IdentityScan& scan) {
        const ExactMatrix one = ExactMatrix::identity_matrix(p.N + 1);
        const struct {
            Aw3Pair fwd, inv;
            Aw3Basis left, right;
        } trips[3] = {{Aw3Pair::AB, Aw3Pair::BA, Aw3Basis::A, Aw3Basis::B},
                      {Aw3Pair::BC, Aw3Pair::CB, Aw3Basis::B, Aw3Basis::C},
                      {Aw3Pair::CA, Aw3Pair::AC, Aw3Basis::C, Aw3Basis::A}};
        int k = 0;
        for (const auto& t : trips) {
            ExactMatrix P = aw3_P(t.fwd, p);
            ExactMatrix Pinv = aw3_P(t.inv, p);
            scan.expect_true({k, 0}, P * Pinv == one);
            int gi = 1;
            for (Aw3Gen g : kAw3Gens) {
                // P_LR R_I = L_I P_LR with L the target of the forward pair.
                // For pair AB: P_AB B_I = A_I P_AB; the "right" basis of CA is A.
                ExactMatrix lhs = P * aw3_generator(t.right, g, p);
                ExactMatrix rhs = aw3_generator(t.left, g, p) * P;
                scan.expect_true({k, gi}, lhs == rhs);
                ++gi;
            }
            ++k;
        }
    });
}

IdentityReport check_racah_relation(const RacahParams& p) {
    return timed("racah_relation", p, [&](IdentityScan& scan) {
        const int N = p.N;
        const Rational q = p.q();
        const Rational tau_closed = omega_fn(N, p.sq * p.s1 * p.s2 * p.s3, q);
        // scalar identity on the full grid
        const RacahParams t312 = p.reordered(p.s3, p.s1, p.s2);  // p_n(x; c3,c1,c2; N)
        const RacahParams t132 = p.reordered(p.s1, p.s3, p.s2);  // p_i(x; c1,c3,c2; N)
        std::vector<Rational> wn;
        for (int n = 0; n <= N; ++n)
            wn.push_back(omega_fn(n, p.s1 * p.s2, q) / xi_fn(n, p.s1, p.s2, q));
        for (int i = 0; i <= N; ++i) {
            Rational wi = omega_fn(i, p.s2 * p.s3, q) / xi_fn(i, p.s2, p.s3, q);
            for (int x = 0; x <= N; ++x) {
                Rational wx = omega_fn(x, p.s3 * p.s1, q) / xi_fn(x, p.s3, p.s1, q);
                Rational s(0);
                for (int n = 0; n <= N; ++n)
                    s += wn[static_cast<size_t>(n)] * racah_p(i, n, p) * racah_p(n, x, t312);
                scan.expect_zero({i, x},
                                 wi * wx * s - tau_closed * racah_p(i, x, t132));
            }
        }
        // Schur product: P_BA P_AC = tau P_BC, tau recomputed from the (0,0)
        // component and cross-checked against the closed form.
        ExactMatrix lhs = aw3_P(Aw3Pair::BA, p) * aw3_P(Aw3Pair::AC, p);
        ExactMatrix pbc = aw3_P(Aw3Pair::BC, p);
        if (pbc.at(0, 0).is_zero()) throw DegenerateQ("racah_relation: (P_BC)_{0,0} = 0");
        Rational tau = lhs.at(0, 0) / pbc.at(0, 0);
        scan.expect_zero({-1, 0}, tau - tau_closed);
        scan.expect_true({-1, 1}, lhs == tau_closed * pbc);
    });
}

IdentityReport check_aw3_z3(const RacahParams& p) {
    return timed("z3_symmetry", p, [&](IdentityScan& scan) {
        const RacahParams shifted = p.reordered(p.s2, p.s3, p.s1);   // c_i -> c_{i+1}
        const RacahParams shifted2 = p.reordered(p.s3, p.s1, p.s2);  // applied twice
        auto sigma = [](Aw3Gen g) {
            switch (g) {
                case Aw3Gen::G12: return Aw3Gen::G23;
                case Aw3Gen::G23: return Aw3Gen::G13;
                case Aw3Gen::G13: return Aw3Gen::G12;
            }
            throw IndexOutOfRange("sigma");
        };
        int k = 0;
        for (Aw3Gen g : kAw3Gens) {
            scan.expect_true({k, 0}, aw3_generator(Aw3Basis::B, sigma(g), p) ==
                                         aw3_generator(Aw3Basis::A, g, shifted));
            scan.expect_true({k, 1}, aw3_generator(Aw3Basis::C, sigma(sigma(g)), p) ==
                                         aw3_generator(Aw3Basis::A, g, shifted2));
            ++k;
        }
    });
}

IdentityReport check_aw3_irreducibility(const RacahParams& p) {
    return timed("irreducibility", p, [&](IdentityScan& scan) {
        int bi = 0;
        for (Aw3Basis b : kAw3Bases) {
            Aw3Gen diag = b == Aw3Basis::A   ? Aw3Gen::G12
                          : b == Aw3Basis::B ? Aw3Gen::G23
                                             : Aw3Gen::G13;
            ExactMatrix d = aw3_generator(b, diag, p);
            for (int i = 0; i <= p.N; ++i)
                for (int j = i + 1; j <= p.N; ++j)
                    scan.expect_true({bi, 0, i, j}, !(d.at(i, i) == d.at(j, j)));
            int gi = 1;
            for (Aw3Gen g : kAw3Gens) {
                if (g == diag) continue;
                ExactMatrix m = aw3_generator(b, g, p);
                for (int i = 1; i <= p.N; ++i) {
                    scan.expect_true({bi, gi, i, 0}, !m.at(i - 1, i).is_zero());
                    scan.expect_true({bi, gi, i, 1}, !m.at(i, i - 1).is_zero());
                }
                ++gi;
            }
            ++bi;
        }
    });
}

}  // namespace qracah
