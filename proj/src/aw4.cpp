#include "qracah/aw4.hpp"

#include <array>
#include <chrono>
#include <map>

#include "qracah/qseries.hpp"

namespace qracah {

namespace {

template <typename Body>
IdentityReport timed(const char* identity, const TratnikParams& p, Body&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    IdentityScan scan;
    body(scan);
    IdentityReport r = scan.finish("aw4", identity, p.fingerprint());
    r.wall_time =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// Column (i,j) runs over the triangle; the filler supplies the entry for
// target row (ri, rj) computed from (eps, eps'); rows outside the triangle
// are dropped (their coefficients vanish identically).
template <typename Value>
ExactMatrix diag4(const TratnikParams& p, Value&& value) {
    ExactMatrix m(triangle_size(p.N));
    for (int i = 0; i <= p.N; ++i)
        for (int j = 0; i + j <= p.N; ++j) {
            const int c = pair_index(i, j, p.N);
            m.at(c, c) = value(i, j);
        }
    return m;
}

template <typename Value>
ExactMatrix tridiag_j(const TratnikParams& p, Value&& value) {
    ExactMatrix m(triangle_size(p.N));
    for (int i = 0; i <= p.N; ++i)
        for (int j = 0; i + j <= p.N; ++j)
            for (Eps e : kEpsAll) {
                const int rj = j - eps_int(e);
                if (rj < 0 || i + rj > p.N) continue;
                m.at(pair_index(i, rj, p.N), pair_index(i, j, p.N)) = value(e, i, j);
            }
    return m;
}

template <typename Value>
ExactMatrix tridiag_i(const TratnikParams& p, Value&& value) {
    ExactMatrix m(triangle_size(p.N));
    for (int i = 0; i <= p.N; ++i)
        for (int j = 0; i + j <= p.N; ++j)
            for (Eps ep : kEpsAll) {
                const int ri = i - eps_int(ep);
                if (ri < 0 || ri + j > p.N) continue;
                m.at(pair_index(ri, j, p.N), pair_index(i, j, p.N)) = value(ep, i, j);
            }
    return m;
}

template <typename Value>
ExactMatrix nine_diag(const TratnikParams& p, Value&& value) {
    ExactMatrix m(triangle_size(p.N));
    for (int i = 0; i <= p.N; ++i)
        for (int j = 0; i + j <= p.N; ++j)
            for (Eps e : kEpsAll)
                for (Eps ep : kEpsAll) {
                    const int ri = i - eps_int(ep), rj = j - eps_int(e);
                    if (ri < 0 || rj < 0 || ri + rj > p.N) continue;
                    m.at(pair_index(ri, rj, p.N), pair_index(i, j, p.N)) = value(e, ep, i, j);
                }
    return m;
}

// xi_m(a,b) omega_m(ab) evaluated as a ratio between two row indices.
Rational xw(int m, const Rational& sa, const Rational& sb, const Rational& q) {
    return xi_fn(m, sa, sb, q) * omega_fn(m, sa * sb, q);
}

ExactMatrix aw4_gen_A(Aw4Gen g, const TratnikParams& o) {
    const Rational q = o.q();
    const int N = o.N;
    switch (g) {
        case Aw4Gen::G12:
            return diag4(o, [&](int i, int) { return lambda_eig(i, o.root(1) * o.root(2), q); });
        case Aw4Gen::G123:
            return diag4(o, [&](int, int j) { return lambda_eig(j, o.root(4) * o.root(0), q); });
        case Aw4Gen::G34:
            return tridiag_j(o, [&](Eps e, int i, int j) {
                return phi_coeff(e, j, o.triple(3, 4, 0, N - i));
            });
        case Aw4Gen::G23:
            return tridiag_i(o, [&](Eps ep, int i, int j) {
                return phi_coeff(ep, i, o.triple(3, 2, 1, N - j)) *
                       pow_int(o.root(3) / o.root(0), eps_int(ep)) *
                       xi_fn(i, o.root(2), o.root(1), q) /
                       xi_fn(i - eps_int(ep), o.root(2), o.root(1), q);
            });
        case Aw4Gen::G234:
            return nine_diag(o, [&](Eps e, Eps ep, int i, int j) {
                return A_coeff(e, ep, j, i, o.reordered(3, 4, 0, 2));
            });
        case Aw4Gen::G13:
            return tridiag_i(o, [&](Eps ep, int i, int j) {
                return phi_coeff(ep, i, o.triple(3, 1, 2, N - j)) *
                       pow_int(o.root(3) / o.root(0), eps_int(ep)) *
                       omega_fn(i - eps_int(ep), o.root(2) * o.root(1), q) /
                       omega_fn(i, o.root(2) * o.root(1), q);
            });
        case Aw4Gen::G31:
            return tridiag_i(o, [&](Eps ep, int i, int j) {
                return phi_coeff(ep, i, o.triple(3, 1, 2, N - j)) *
                       pow_int(o.root(3) / o.root(0), eps_int(ep)) *
                       omega_fn(i, o.root(2) * o.root(1), q) /
                       omega_fn(i - eps_int(ep), o.root(2) * o.root(1), q);
            });
        case Aw4Gen::G124:
            return tridiag_j(o, [&](Eps e, int i, int j) {
                return phi_coeff(e, j, o.triple(3, 0, 4, N - i)) *
                       xw(j - eps_int(e), o.root(4), o.root(0), q) /
                       xw(j, o.root(4), o.root(0), q);
            });
        case Aw4Gen::G412:
            return tridiag_j(o, [&](Eps e, int i, int j) {
                return phi_coeff(e, j, o.triple(3, 0, 4, N - i)) *
                       xw(j, o.root(0), o.root(4), q) /
                       xw(j - eps_int(e), o.root(0), o.root(4), q);
            });
        case Aw4Gen::G24:
            return nine_diag(o, [&](Eps e, Eps ep, int i, int j) {
                return A_coeff(e, ep, j, i, o.reordered(3, 0, 4, 1)) *
                       xw(j - eps_int(e), o.root(4), o.root(0), q) /
                       xw(j, o.root(4), o.root(0), q) *
                       pow_int(o.root(4) / o.root(0), eps_int(ep)) *
                       xw(i, o.root(2), o.root(1), q) /
                       xw(i - eps_int(ep), o.root(2), o.root(1), q);
            });
        case Aw4Gen::G42:
            return nine_diag(o, [&](Eps e, Eps ep, int i, int j) {
                return A_coeff(e, ep, j, i, o.reordered(3, 0, 4, 1)) *
                       xw(j, o.root(0), o.root(4), q) /
                       xw(j - eps_int(e), o.root(0), o.root(4), q) *
                       pow_int(o.root(4) / o.root(0), eps_int(ep)) *
                       xw(i - eps_int(ep), o.root(1), o.root(2), q) /
                       xw(i, o.root(1), o.root(2), q);
            });
        case Aw4Gen::G14:
            return nine_diag(o, [&](Eps e, Eps ep, int i, int j) {
                return A_coeff(e, ep, j, i, o.reordered(3, 0, 4, 2)) *
                       xw(j - eps_int(e), o.root(4), o.root(0), q) /
                       xw(j, o.root(4), o.root(0), q) *
                       pow_int(o.root(4) / o.root(0), eps_int(ep));
            });
        case Aw4Gen::G41:
            return nine_diag(o, [&](Eps e, Eps ep, int i, int j) {
                return A_coeff(e, ep, j, i, o.reordered(3, 0, 4, 2)) *
                       xw(j, o.root(0), o.root(4), q) /
                       xw(j - eps_int(e), o.root(0), o.root(4), q) *
                       pow_int(o.root(4) / o.root(0), eps_int(ep));
            });
        case Aw4Gen::G134:
            return nine_diag(o, [&](Eps e, Eps ep, int i, int j) {
                return A_coeff(e, ep, j, i, o.reordered(3, 4, 0, 1)) *
                       xw(i - eps_int(ep), o.root(1), o.root(2), q) /
                       xw(i, o.root(1), o.root(2), q);
            });
        case Aw4Gen::G341:
            return nine_diag(o, [&](Eps e, Eps ep, int i, int j) {
                return A_coeff(e, ep, j, i, o.reordered(3, 4, 0, 1)) *
                       xw(i, o.root(2), o.root(1), q) /
                       xw(i - eps_int(ep), o.root(2), o.root(1), q);
            });
    }
    throw IndexOutOfRange("aw4_gen_A");
}

bool is_primary(Aw4Gen g) {
    return g == Aw4Gen::G12 || g == Aw4Gen::G23 || g == Aw4Gen::G34 || g == Aw4Gen::G123 ||
           g == Aw4Gen::G234;
}

// Cyclic symmetry on the generator labels.
Aw4Gen rho_gen(Aw4Gen g) {
    switch (g) {
        case Aw4Gen::G12: return Aw4Gen::G123;
        case Aw4Gen::G123: return Aw4Gen::G23;
        case Aw4Gen::G23: return Aw4Gen::G234;
        case Aw4Gen::G234: return Aw4Gen::G34;
        case Aw4Gen::G34: return Aw4Gen::G12;
        case Aw4Gen::G13: return Aw4Gen::G14;
        case Aw4Gen::G14: return Aw4Gen::G24;
        case Aw4Gen::G24: return Aw4Gen::G341;
        case Aw4Gen::G341: return Aw4Gen::G412;
        case Aw4Gen::G412: return Aw4Gen::G13;
        case Aw4Gen::G31: return Aw4Gen::G41;
        case Aw4Gen::G41: return Aw4Gen::G42;
        case Aw4Gen::G42: return Aw4Gen::G134;
        case Aw4Gen::G134: return Aw4Gen::G124;
        case Aw4Gen::G124: return Aw4Gen::G31;
    }
    throw IndexOutOfRange("rho_gen");
}

Aw4Gen rho_inv_gen(Aw4Gen g) {
    // rho^5 = id, so rho^{-1} = rho^4.
    for (int t = 0; t < 4; ++t) g = rho_gen(g);
    return g;
}

// Parameter substitution of the cyclic symmetry: (c1,c2,c3,c4) -> (c4,c0,c1,c2).
TratnikParams rho_params(const TratnikParams& p) { return p.reordered(4, 0, 1, 2); }

int basis_index(Aw4Basis b) { return static_cast<int>(b); }

// Explicit tabulated entries for the five primary generators per basis.
ExactMatrix aw4_primary(Aw4Basis basis, Aw4Gen g, const TratnikParams& p) {
    const Rational q = p.q();
    const int N = p.N;
    switch (basis) {
        case Aw4Basis::A: return aw4_gen_A(g, p);
        case Aw4Basis::B:
            switch (g) {
                case Aw4Gen::G123:
                    return diag4(p, [&](int i, int) { return lambda_eig(i, p.s4 * p.s0, q); });
                case Aw4Gen::G23:
                    return diag4(p, [&](int, int j) { return lambda_eig(j, p.s2 * p.s3, q); });
                case Aw4Gen::G12:
                    return tridiag_j(p, [&](Eps e, int i, int j) {
                        return phi_coeff(e, j, p.triple(1, 2, 3, N - i));
                    });
                case Aw4Gen::G234:
                    return tridiag_i(p, [&](Eps ep, int i, int j) {
                        return phi_coeff(ep, i, p.triple(1, 0, 4, N - j)) *
                               pow_int(p.s1 / p.s3, eps_int(ep)) * xi_fn(i, p.s0, p.s4, q) /
                               xi_fn(i - eps_int(ep), p.s0, p.s4, q);
                    });
                case Aw4Gen::G34:
                    return nine_diag(p, [&](Eps e, Eps ep, int i, int j) {
                        return A_coeff(e, ep, j, i, p.reordered(1, 2, 3, 0));
                    });
                default: break;
            }
            break;
        case Aw4Basis::C:
            switch (g) {
                case Aw4Gen::G23:
                    return diag4(p, [&](int i, int) { return lambda_eig(i, p.s2 * p.s3, q); });
                case Aw4Gen::G234:
                    return diag4(p, [&](int, int j) { return lambda_eig(j, p.s0 * p.s1, q); });
                case Aw4Gen::G123:
                    return tridiag_j(p, [&](Eps e, int i, int j) {
                        return phi_coeff(e, j, p.triple(4, 0, 1, N - i));
                    });
                case Aw4Gen::G34:
                    return tridiag_i(p, [&](Eps ep, int i, int j) {
                        return phi_coeff(ep, i, p.triple(4, 3, 2, N - j)) *
                               pow_int(p.s4 / p.s1, eps_int(ep)) * xi_fn(i, p.s3, p.s2, q) /
                               xi_fn(i - eps_int(ep), p.s3, p.s2, q);
                    });
                case Aw4Gen::G12:
                    return nine_diag(p, [&](Eps e, Eps ep, int i, int j) {
                        return A_coeff(e, ep, j, i, p.reordered(4, 0, 1, 3));
                    });
                default: break;
            }
            break;
        case Aw4Basis::D:
            switch (g) {
                case Aw4Gen::G234:
                    return diag4(p, [&](int i, int) { return lambda_eig(i, p.s0 * p.s1, q); });
                case Aw4Gen::G34:
                    return diag4(p, [&](int, int j) { return lambda_eig(j, p.s3 * p.s4, q); });
                case Aw4Gen::G23:
                    return tridiag_j(p, [&](Eps e, int i, int j) {
                        return phi_coeff(e, j, p.triple(2, 3, 4, N - i));
                    });
                case Aw4Gen::G12:
                    return tridiag_i(p, [&](Eps ep, int i, int j) {
                        return phi_coeff(ep, i, p.triple(2, 1, 0, N - j)) *
                               pow_int(p.s2 / p.s4, eps_int(ep)) * xi_fn(i, p.s1, p.s0, q) /
                               xi_fn(i - eps_int(ep), p.s1, p.s0, q);
                    });
                case Aw4Gen::G123:
                    return nine_diag(p, [&](Eps e, Eps ep, int i, int j) {
                        return A_coeff(e, ep, j, i, p.reordered(2, 3, 4, 1));
                    });
                default: break;
            }
            break;
        case Aw4Basis::E:
            switch (g) {
                case Aw4Gen::G34:
                    return diag4(p, [&](int i, int) { return lambda_eig(i, p.s3 * p.s4, q); });
                case Aw4Gen::G12:
                    return diag4(p, [&](int, int j) { return lambda_eig(j, p.s1 * p.s2, q); });
                case Aw4Gen::G234:
                    return tridiag_j(p, [&](Eps e, int i, int j) {
                        return phi_coeff(e, j, p.triple(0, 1, 2, N - i));
                    });
                case Aw4Gen::G123:
                    return tridiag_i(p, [&](Eps ep, int i, int j) {
                        return phi_coeff(ep, i, p.triple(0, 4, 3, N - j)) *
                               pow_int(p.s0 / p.s2, eps_int(ep)) * xi_fn(i, p.s4, p.s3, q) /
                               xi_fn(i - eps_int(ep), p.s4, p.s3, q);
                    });
                case Aw4Gen::G23:
                    return nine_diag(p, [&](Eps e, Eps ep, int i, int j) {
                        return A_coeff(e, ep, j, i, p.reordered(0, 1, 2, 4));
                    });
                default: break;
            }
            break;
    }
    throw IndexOutOfRange("aw4_primary: not a primary generator of this basis");
}

}  // namespace

int triangle_size(int N) { return (N + 1) * (N + 2) / 2; }

int pair_index(int i, int j, int N) {
    if (i < 0 || j < 0 || i + j > N) throw IndexOutOfRange("pair_index: i+j > N");
    return i * (N + 1) - i * (i - 1) / 2 + j;
}

std::pair<int, int> pair_from_index(int t, int N) {
    if (t < 0 || t >= triangle_size(N)) throw IndexOutOfRange("pair_from_index");
    int i = 0;
    while (t >= N + 1 - i) {
        t -= N + 1 - i;
        ++i;
    }
    return {i, t};
}

const char* aw4_basis_name(Aw4Basis b) {
    switch (b) {
        case Aw4Basis::A: return "A";
        case Aw4Basis::B: return "B";
        case Aw4Basis::C: return "C";
        case Aw4Basis::D: return "D";
        case Aw4Basis::E: return "E";
    }
    return "?";
}

ExactMatrix aw4_generator(Aw4Basis basis, Aw4Gen gen, const TratnikParams& p) {
    if (basis == Aw4Basis::A) return aw4_gen_A(gen, p);
    if (is_primary(gen)) return aw4_primary(basis, gen, p);
    // Extended generators of the other bases: pull back to the A expressions
    // through the cyclic symmetry.
    const int k = basis_index(basis);
    Aw4Gen g = gen;
    TratnikParams o = p;
    for (int t = 0; t < k; ++t) {
        g = rho_inv_gen(g);
        o = rho_params(o);
    }
    return aw4_gen_A(g, o);
}

ExactMatrix aw4_element(Aw4Basis basis, Aw4Label label, const TratnikParams& p) {
    const int dim = triangle_size(p.N);
    auto central = [&](const Rational& root) {
        return ExactMatrix::scalar_matrix(dim, root + root.inverse());
    };
    auto pair_el = [&](Aw4Gen g, const Rational& sa, const Rational& sb) {
        const Rational root = p.sq * sa * sb;
        return root.inverse() * aw4_generator(basis, g, p) +
               ExactMatrix::scalar_matrix(dim, root + root.inverse());
    };
    auto triple_el = [&](Aw4Gen g, const Rational& sa, const Rational& sb, const Rational& sc) {
        // sqrt(q^{2N+2} c_i c_j c_k) = sq^{2N+2} s_i s_j s_k
        const Rational root = pow_int(p.sq, 2L * p.N + 2) * sa * sb * sc;
        return root * aw4_generator(basis, g, p) +
               ExactMatrix::scalar_matrix(dim, root + root.inverse());
    };
    switch (label) {
        case Aw4Label::C1: return central(p.s1);
        case Aw4Label::C2: return central(p.s2);
        case Aw4Label::C3: return central(p.s3);
        case Aw4Label::C4: return central(p.s4);
        case Aw4Label::C1234: return central(p.s0);
        case Aw4Label::C12: return pair_el(Aw4Gen::G12, p.s1, p.s2);
        case Aw4Label::C23: return pair_el(Aw4Gen::G23, p.s2, p.s3);
        case Aw4Label::C34: return pair_el(Aw4Gen::G34, p.s3, p.s4);
        case Aw4Label::C13: return pair_el(Aw4Gen::G13, p.s1, p.s3);
        case Aw4Label::C31: return pair_el(Aw4Gen::G31, p.s1, p.s3);
        case Aw4Label::C24: return pair_el(Aw4Gen::G24, p.s2, p.s4);
        case Aw4Label::C42: return pair_el(Aw4Gen::G42, p.s2, p.s4);
        case Aw4Label::C14: return pair_el(Aw4Gen::G14, p.s1, p.s4);
        case Aw4Label::C41: return pair_el(Aw4Gen::G41, p.s1, p.s4);
        case Aw4Label::C123: return triple_el(Aw4Gen::G123, p.s1, p.s2, p.s3);
        case Aw4Label::C234: return triple_el(Aw4Gen::G234, p.s2, p.s3, p.s4);
        case Aw4Label::C124: return triple_el(Aw4Gen::G124, p.s1, p.s2, p.s4);
        case Aw4Label::C412: return triple_el(Aw4Gen::G412, p.s1, p.s2, p.s4);
        case Aw4Label::C134: return triple_el(Aw4Gen::G134, p.s1, p.s3, p.s4);
        case Aw4Label::C341: return triple_el(Aw4Gen::G341, p.s1, p.s3, p.s4);
    }
    throw IndexOutOfRange("aw4_element");
}

IdentityReport check_aw4_relations(Aw4Basis basis, const TratnikParams& p) {
    std::string name = std::string("relations_") + aw4_basis_name(basis);
    return timed(name.c_str(), p, [&](IdentityScan& scan) {
        const Rational Q = p.sq;
        const Rational d = Q * Q - (Q * Q).inverse();
        if (d.is_zero()) throw DegenerateQ("aw4: q^2 = q^-2");
        const Rational e = Q + Q.inverse();

        // Images of the ten generators.
        std::map<int, ExactMatrix> el;
        auto E = [&](Aw4Label l) -> const ExactMatrix& {
            int k = static_cast<int>(l);
            auto it = el.find(k);
            if (it == el.end()) it = el.emplace(k, aw4_element(basis, l, p)).first;
            return it->second;
        };

        auto derive = [&](const ExactMatrix& ij, const ExactMatrix& jk, const ExactMatrix& ci,
                          const ExactMatrix& ck, const ExactMatrix& cj,
                          const ExactMatrix& cijk) {
            return Rational(-1) * d.inverse() * q_commutator(Q, ij, jk) +
                   e.inverse() * (ci * ck + cj * cijk);
        };

        // Derived generators from the algebra combinations.
        const ExactMatrix d13 =
            derive(E(Aw4Label::C12), E(Aw4Label::C23), E(Aw4Label::C1), E(Aw4Label::C3),
                   E(Aw4Label::C2), E(Aw4Label::C123));
        const ExactMatrix d24 =
            derive(E(Aw4Label::C23), E(Aw4Label::C34), E(Aw4Label::C2), E(Aw4Label::C4),
                   E(Aw4Label::C3), E(Aw4Label::C234));
        const ExactMatrix d14 =
            derive(E(Aw4Label::C123), E(Aw4Label::C234), E(Aw4Label::C1), E(Aw4Label::C4),
                   E(Aw4Label::C23), E(Aw4Label::C1234));
        const ExactMatrix d124 =
            derive(E(Aw4Label::C123), E(Aw4Label::C34), E(Aw4Label::C12), E(Aw4Label::C4),
                   E(Aw4Label::C3), E(Aw4Label::C1234));
        const ExactMatrix d134 =
            derive(E(Aw4Label::C12), E(Aw4Label::C234), E(Aw4Label::C1), E(Aw4Label::C34),
                   E(Aw4Label::C2), E(Aw4Label::C1234));
        const ExactMatrix d31 =
            derive(E(Aw4Label::C23), E(Aw4Label::C12), E(Aw4Label::C3), E(Aw4Label::C1),
                   E(Aw4Label::C2), E(Aw4Label::C123));
        const ExactMatrix d42 =
            derive(E(Aw4Label::C34), E(Aw4Label::C23), E(Aw4Label::C4), E(Aw4Label::C2),
                   E(Aw4Label::C3), E(Aw4Label::C234));
        const ExactMatrix d41 =
            derive(E(Aw4Label::C234), E(Aw4Label::C123), E(Aw4Label::C4), E(Aw4Label::C1),
                   E(Aw4Label::C23), E(Aw4Label::C1234));
        const ExactMatrix d412 =
            derive(E(Aw4Label::C34), E(Aw4Label::C123), E(Aw4Label::C4), E(Aw4Label::C12),
                   E(Aw4Label::C3), E(Aw4Label::C1234));
        const ExactMatrix d341 =
            derive(E(Aw4Label::C234), E(Aw4Label::C12), E(Aw4Label::C34), E(Aw4Label::C1),
                   E(Aw4Label::C2), E(Aw4Label::C1234));

        // Route coincidence: algebra combination vs tabulated matrices.
        const struct {
            const ExactMatrix* derived;
            Aw4Label tab;
        } routes[] = {{&d13, Aw4Label::C13},   {&d24, Aw4Label::C24},   {&d14, Aw4Label::C14},
                      {&d124, Aw4Label::C124}, {&d134, Aw4Label::C134}, {&d31, Aw4Label::C31},
                      {&d42, Aw4Label::C42},   {&d41, Aw4Label::C41},   {&d412, Aw4Label::C412},
                      {&d341, Aw4Label::C341}};
        int ri = 0;
        for (const auto& r : routes) scan.expect_true({0, ri++}, *r.derived == E(r.tab));

        // (i) commutation for disjoint or nested index sets.
        const struct {
            Aw4Label l;
            unsigned mask;
        } gens[] = {{Aw4Label::C1, 0b0001},   {Aw4Label::C2, 0b0010},  {Aw4Label::C3, 0b0100},
                    {Aw4Label::C4, 0b1000},   {Aw4Label::C12, 0b0011}, {Aw4Label::C23, 0b0110},
                    {Aw4Label::C34, 0b1100},  {Aw4Label::C123, 0b0111},
                    {Aw4Label::C234, 0b1110}, {Aw4Label::C1234, 0b1111}};
        for (int a = 0; a < 10; ++a)
            for (int b = a + 1; b < 10; ++b) {
                const unsigned ia = gens[a].mask, ib = gens[b].mask;
                const bool disjoint = (ia & ib) == 0;
                const bool nested = (ia & ib) == ia || (ia & ib) == ib;
                if (!disjoint && !nested) continue;
                ExactMatrix comm = E(gens[a].l) * E(gens[b].l) - E(gens[b].l) * E(gens[a].l);
                scan.expect_true({1, a, b}, comm.is_zero());
            }

        // (ii) the ten 3-tuple relations, with the derived generators.
        const struct {
            Aw4Label ij;
            const ExactMatrix* ik;
            Aw4Label i, j, k, ijk;
        } tuples[] = {
            {Aw4Label::C12, &d13, Aw4Label::C1, Aw4Label::C2, Aw4Label::C3, Aw4Label::C123},
            {Aw4Label::C23, &d24, Aw4Label::C2, Aw4Label::C3, Aw4Label::C4, Aw4Label::C234},
            {Aw4Label::C123, &d14, Aw4Label::C1, Aw4Label::C23, Aw4Label::C4, Aw4Label::C1234},
            {Aw4Label::C123, &d124, Aw4Label::C12, Aw4Label::C3, Aw4Label::C4, Aw4Label::C1234},
            {Aw4Label::C12, &d134, Aw4Label::C1, Aw4Label::C2, Aw4Label::C34, Aw4Label::C1234},
            {Aw4Label::C23, &d31, Aw4Label::C3, Aw4Label::C2, Aw4Label::C1, Aw4Label::C123},
            {Aw4Label::C34, &d42, Aw4Label::C4, Aw4Label::C3, Aw4Label::C2, Aw4Label::C234},
            {Aw4Label::C234, &d41, Aw4Label::C4, Aw4Label::C23, Aw4Label::C1, Aw4Label::C1234},
            {Aw4Label::C34, &d412, Aw4Label::C4, Aw4Label::C3, Aw4Label::C12, Aw4Label::C1234},
            {Aw4Label::C234, &d341, Aw4Label::C34, Aw4Label::C2, Aw4Label::C1, Aw4Label::C1234},
        };
        const Aw4Label jk_labels[] = {Aw4Label::C23,  Aw4Label::C34,  Aw4Label::C234,
                                      Aw4Label::C34,  Aw4Label::C234, Aw4Label::C12,
                                      Aw4Label::C23,  Aw4Label::C123, Aw4Label::C123,
                                      Aw4Label::C12};
        for (int t = 0; t < 10; ++t) {
            const auto& tp = tuples[t];
            ExactMatrix rhs = Rational(-1) * d.inverse() *
                                  q_commutator(Q, E(jk_labels[t]), *tp.ik) +
                              e.inverse() * (E(tp.i) * E(tp.j) + E(tp.k) * E(tp.ijk));
            scan.expect_true({2, t}, E(tp.ij) == rhs);
        }

        // (iii) the two relations tying C14 / C41 to the other derived ones.
        {
            ExactMatrix rhs = Rational(-1) * d.inverse() * q_commutator(Q, d13, E(Aw4Label::C34)) +
                              e.inverse() * (E(Aw4Label::C1) * E(Aw4Label::C4) +
                                             E(Aw4Label::C3) * d134);
            scan.expect_true({3, 0}, d14 == rhs);
        }
        {
            ExactMatrix rhs = Rational(-1) * d.inverse() * q_commutator(Q, d42, E(Aw4Label::C12)) +
                              e.inverse() * (E(Aw4Label::C1) * E(Aw4Label::C4) +
                                             E(Aw4Label::C2) * d412);
            scan.expect_true({3, 1}, d41 == rhs);
        }
    });
}

ExactMatrix aw4_P(Aw4Pair pair, const TratnikParams& p) {
    const int N = p.N;
    const Rational q = p.q();
    ExactMatrix m(triangle_size(N));
    // forward: (i1,i2);(j1,j2) nonzero iff i2 == j1;
    // inverse: nonzero iff i1 == j2.
    auto fwd = [&](const Rational& num_root, const Rational& den_root, const Rational& xa,
                   const Rational& xb, int a, int b, int c) {
        for (int i1 = 0; i1 <= N; ++i1)
            for (int i2 = 0; i1 + i2 <= N; ++i2) {
                Rational f = pow_int(num_root / den_root, i1) * xi_fn(i1, xa, xb, q);
                for (int j2 = 0; i2 + j2 <= N; ++j2)
                    m.at(pair_index(i1, i2, N), pair_index(i2, j2, N)) =
                        f * racah_p(i1, j2, p.triple(a, b, c, N - i2));
            }
    };
    auto inv = [&](const Rational& num_root, const Rational& den_root, const Rational& xa,
                   const Rational& xb, int a, int b, int c) {
        for (int j1 = 0; j1 <= N; ++j1)
            for (int j2 = 0; j1 + j2 <= N; ++j2) {
                Rational f = pow_int(num_root / den_root, j1) * xi_fn(j1, xa, xb, q);
                for (int i2 = 0; j2 + i2 <= N; ++i2)
                    m.at(pair_index(j2, i2, N), pair_index(j1, j2, N)) =
                        f * racah_p(i2, j1, p.triple(a, b, c, N - j2));
            }
    };
    switch (pair) {
        case Aw4Pair::AB: fwd(p.s0, p.s3, p.s1, p.s2, 3, 2, 1); break;
        case Aw4Pair::BC: fwd(p.s3, p.s1, p.s4, p.s0, 1, 0, 4); break;
        case Aw4Pair::CD: fwd(p.s1, p.s4, p.s2, p.s3, 4, 3, 2); break;
        case Aw4Pair::DE: fwd(p.s4, p.s2, p.s0, p.s1, 2, 1, 0); break;
        case Aw4Pair::EA: fwd(p.s2, p.s0, p.s3, p.s4, 0, 4, 3); break;
        case Aw4Pair::BA: inv(p.s3, p.s0, p.s2, p.s1, 1, 2, 3); break;
        case Aw4Pair::CB: inv(p.s1, p.s3, p.s0, p.s4, 4, 0, 1); break;
        case Aw4Pair::DC: inv(p.s4, p.s1, p.s3, p.s2, 2, 3, 4); break;
        case Aw4Pair::ED: inv(p.s2, p.s4, p.s1, p.s0, 0, 1, 2); break;
        case Aw4Pair::AE: inv(p.s0, p.s2, p.s4, p.s3, 3, 4, 0); break;
    }
    return m;
}

IdentityReport check_intertwining4(const TratnikParams& p) {
    return timed("intertwining", p, [&](IdentityScan& scan) {
        const ExactMatrix one = ExactMatrix::identity_matrix(triangle_size(p.N));
        const struct {
            Aw4Pair fwd, inv;
            Aw4Basis left, right;
        } hops[5] = {{Aw4Pair::AB, Aw4Pair::BA, Aw4Basis::A, Aw4Basis::B},
                     {Aw4Pair::BC, Aw4Pair::CB, Aw4Basis::B, Aw4Basis::C},
                     {Aw4Pair::CD, Aw4Pair::DC, Aw4Basis::C, Aw4Basis::D},
                     {Aw4Pair::DE, Aw4Pair::ED, Aw4Basis::D, Aw4Basis::E},
                     {Aw4Pair::EA, Aw4Pair::AE, Aw4Basis::E, Aw4Basis::A}};
        int k = 0;
        for (const auto& h : hops) {
            ExactMatrix P = aw4_P(h.fwd, p);
            ExactMatrix Pinv = aw4_P(h.inv, p);
            scan.expect_true({k, -1}, P * Pinv == one);
            int gi = 0;
            for (Aw4Gen g : kAw4Primary) {
                ExactMatrix lhs = P * aw4_generator(h.right, g, p);
                ExactMatrix rhs = aw4_generator(h.left, g, p) * P;
                scan.expect_true({k, gi}, lhs == rhs);
                ++gi;
            }
            ++k;
        }
    });
}

IdentityReport check_biedenharn_elliot(const TratnikParams& p) {
    return timed("biedenharn_elliot", p, [&](IdentityScan& scan) {
        const int N = p.N;
        const Rational q = p.q();
        const TratnikParams rhs_tuple = p.reordered(3, 4, 0, 2);
        for (int i = 0; i <= N; ++i)
            for (int j = 0; i + j <= N; ++j)
                for (int x = 0; x <= N; ++x)
                    for (int y = 0; x + y <= N; ++y) {
                        Rational s(0);
                        const int M = std::min(N - j, N - y);
                        for (int a = 0; a <= M; ++a) {
                            Rational t = racah_p(i, a, p.triple(3, 2, 1, N - j));
                            if (t.is_zero()) continue;
                            t *= racah_p(j, y, p.triple(1, 0, 4, N - a)) *
                                 racah_p(a, x, p.triple(4, 3, 2, N - y));
                            t *= pow_int(p.s1 / p.s4, a) * xi_fn(a, p.s2, p.s3, q);
                            s += t;
                        }
                        s *= pow_int(p.s0 / p.s3, i) * pow_int(p.s3 / p.s1, j) *
                             pow_int(p.s4 / p.s2, y) * pow_int(p.s2 / p.s0, x) *
                             xi_fn(i, p.s1, p.s2, q) * xi_fn(j, p.s4, p.s0, q) *
                             xi_fn(y, p.s0, p.s1, q) * xi_fn(x, p.s3, p.s4, q);
                        Rational direct = racah_p(j, x, p.triple(3, 4, 0, N - i)) *
                                          racah_p(i, y, p.triple(0, 1, 2, N - x));
                        scan.expect_zero({i, j, x, y, 0}, s - direct);
                        scan.expect_zero({i, j, x, y, 1},
                                         direct - tratnik_T(j, i, x, y, rhs_tuple));
                    }
        // Pentagon: P_AB P_BC P_CD = tau P_AE P_ED with tau = 1 exactly.
        ExactMatrix lhs = aw4_P(Aw4Pair::AB, p) * aw4_P(Aw4Pair::BC, p) * aw4_P(Aw4Pair::CD, p);
        ExactMatrix rhs = aw4_P(Aw4Pair::AE, p) * aw4_P(Aw4Pair::ED, p);
        const int dim = lhs.dim();
        Rational tau;
        bool found = false;
        for (int r = 0; r < dim && !found; ++r)
            for (int c = 0; c < dim && !found; ++c)
                if (!rhs.at(r, c).is_zero()) {
                    tau = lhs.at(r, c) / rhs.at(r, c);
                    found = true;
                }
        scan.expect_true({-1, 0, 0, 0, 0}, found);
        if (found) {
            scan.expect_zero({-1, 1, 0, 0, 0}, tau - Rational(1));
            scan.expect_true({-1, 2, 0, 0, 0}, lhs == rhs);
        }
    });
}

IdentityReport check_aw4_z5(const TratnikParams& p) {
    return timed("z5_symmetry", p, [&](IdentityScan& scan) {
        const TratnikParams pr = rho_params(p);
        const Aw4Basis order[5] = {Aw4Basis::A, Aw4Basis::B, Aw4Basis::C, Aw4Basis::D,
                                   Aw4Basis::E};
        for (int k = 0; k < 5; ++k) {
            const Aw4Basis cur = order[k];
            const Aw4Basis nxt = order[(k + 1) % 5];
            int gi = 0;
            for (Aw4Gen g : kAw4Primary) {
                scan.expect_true({k, gi}, aw4_generator(nxt, rho_gen(g), p) ==
                                              aw4_generator(cur, g, pr));
                ++gi;
            }
        }
    });
}

IdentityReport check_aw4_irreducibility(const TratnikParams& p) {
    return timed("irreducibility", p, [&](IdentityScan& scan) {
        const int N = p.N;
        const struct {
            Aw4Basis b;
            Aw4Gen diag1, diag2, trid_i, trid_j;
        } rows[5] = {
            {Aw4Basis::A, Aw4Gen::G12, Aw4Gen::G123, Aw4Gen::G23, Aw4Gen::G34},
            {Aw4Basis::B, Aw4Gen::G123, Aw4Gen::G23, Aw4Gen::G234, Aw4Gen::G12},
            {Aw4Basis::C, Aw4Gen::G23, Aw4Gen::G234, Aw4Gen::G34, Aw4Gen::G123},
            {Aw4Basis::D, Aw4Gen::G234, Aw4Gen::G34, Aw4Gen::G12, Aw4Gen::G23},
            {Aw4Basis::E, Aw4Gen::G34, Aw4Gen::G12, Aw4Gen::G123, Aw4Gen::G234},
        };
        int bi = 0;
        for (const auto& rw : rows) {
            ExactMatrix d1 = aw4_generator(rw.b, rw.diag1, p);
            ExactMatrix d2 = aw4_generator(rw.b, rw.diag2, p);
            ExactMatrix ti = aw4_generator(rw.b, rw.trid_i, p);
            ExactMatrix tj = aw4_generator(rw.b, rw.trid_j, p);
            const int dim = triangle_size(N);
            for (int a = 0; a < dim; ++a)
                for (int b = a + 1; b < dim; ++b)
                    scan.expect_true({bi, 0, a, b}, !(d1.at(a, a) == d1.at(b, b)) ||
                                                        !(d2.at(a, a) == d2.at(b, b)));
            for (int i = 0; i <= N; ++i)
                for (int j = 0; i + j <= N; ++j) {
                    const int c = pair_index(i, j, N);
                    if (i >= 1)
                        scan.expect_true({bi, 1, i, j},
                                         !ti.at(pair_index(i - 1, j, N), c).is_zero());
                    if (i + j + 1 <= N)
                        scan.expect_true({bi, 2, i, j},
                                         !ti.at(pair_index(i + 1, j, N), c).is_zero());
                    if (j >= 1)
                        scan.expect_true({bi, 3, i, j},
                                         !tj.at(pair_index(i, j - 1, N), c).is_zero());
                    if (i + j + 1 <= N)
                        scan.expect_true({bi, 4, i, j},
                                         !tj.at(pair_index(i, j + 1, N), c).is_zero());
                }
            ++bi;
        }
    });
}

}  // namespace qracah
