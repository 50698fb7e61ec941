#include "qracah/params.hpp"

#include <array>
#include <sstream>

namespace qracah {

namespace {

// True iff v == q^{-m} for some m in [lo, hi].
bool hits_neg_power(const Rational& v, const Rational& q, int lo, int hi) {
    Rational qm = pow_int(q, -lo);
    for (int m = lo; m <= hi; ++m) {
        if (v == qm) return true;
        qm /= q;
    }
    return false;
}

void check_excluded(std::vector<std::string>& out, const char* name, const Rational& v,
                    const Rational& q, int lo, int hi) {
    Rational qm = pow_int(q, -lo);
    for (int m = lo; m <= hi; ++m) {
        if (v == qm) {
            out.push_back(std::string(name) + " = q^-" + std::to_string(m));
            return;
        }
        qm /= q;
    }
}

void check_roots_of_unity(std::vector<std::string>& out, const Rational& q, int N) {
    Rational qm = q;
    for (int m = 1; m <= N; ++m) {
        if (qm.is_one()) {
            out.push_back("q^" + std::to_string(m) + " = 1");
            return;
        }
        qm *= q;
    }
}

}  // namespace

std::string RacahParams::fingerprint() const {
    std::ostringstream os;
    os << "N=" << N << " sq=" << sq.str() << " s1=" << s1.str() << " s2=" << s2.str()
       << " s3=" << s3.str();
    return os.str();
}

TratnikParams TratnikParams::make(const Rational& sq, const Rational& s1, const Rational& s2,
                                  const Rational& s3, const Rational& s4, int N) {
    if (sq.is_zero() || s1.is_zero() || s2.is_zero() || s3.is_zero() || s4.is_zero())
        throw ConstraintViolation("TratnikParams: zero square root");
    TratnikParams p;
    p.sq = sq;
    p.s1 = s1;
    p.s2 = s2;
    p.s3 = s3;
    p.s4 = s4;
    p.N = N;
    p.s0 = (pow_int(sq, 2L * N + 3) * s1 * s2 * s3 * s4).inverse();
    return p;
}

std::string TratnikParams::fingerprint() const {
    std::ostringstream os;
    os << "N=" << N << " sq=" << sq.str() << " s1=" << s1.str() << " s2=" << s2.str()
       << " s3=" << s3.str() << " s4=" << s4.str() << " s0=" << s0.str();
    return os.str();
}

std::vector<std::string> validate(const RacahParams& p) {
    std::vector<std::string> out;
    const Rational q = p.q();
    if (q.is_zero()) out.push_back("q = 0");
    if (p.c2().is_zero()) out.push_back("c2 = 0");
    check_roots_of_unity(out, q, p.N);
    // c2c3 not in {q^-2, ..., q^-2N}
    check_excluded(out, "c2c3", p.c2() * p.c3(), q, 2, 2 * p.N);
    // c1, c2, c3, c1c2c3 q^{N+1} not in {q^-1, ..., q^-N}
    check_excluded(out, "c1", p.c1(), q, 1, p.N);
    check_excluded(out, "c2", p.c2(), q, 1, p.N);
    check_excluded(out, "c3", p.c3(), q, 1, p.N);
    check_excluded(out, "c1c2c3*q^(N+1)", p.c1() * p.c2() * p.c3() * pow_int(q, p.N + 1), q, 1, p.N);
    // c1c2 not in {q^-2, ..., q^-2N}
    check_excluded(out, "c1c2", p.c1() * p.c2(), q, 2, 2 * p.N);
    return out;
}

std::vector<std::string> validate(const TratnikParams& p) {
    std::vector<std::string> out;
    const Rational q = p.q();
    for (int i = 0; i <= 4; ++i)
        if (p.c(i).is_zero()) out.push_back("c" + std::to_string(i) + " = 0");
    check_roots_of_unity(out, q, p.N);
    const struct { const char* name; int a, b; } pairs[] = {
        {"c1c2", 1, 2}, {"c2c3", 2, 3}, {"c0c3", 0, 3}, {"c0c4", 0, 4}};
    for (auto& pr : pairs)
        check_excluded(out, pr.name, p.c(pr.a) * p.c(pr.b), q, 2, 2 * p.N);
    check_excluded(out, "q*c1c2c3", q * p.c(1) * p.c(2) * p.c(3), q, 2, 2 * p.N);
    check_excluded(out, "q*c0c3c4", q * p.c(0) * p.c(3) * p.c(4), q, 2, 2 * p.N);
    for (int i = 0; i <= 4; ++i)
        check_excluded(out, ("c" + std::to_string(i)).c_str(), p.c(i), q, 1, p.N);
    return out;
}

std::vector<std::string> validate(const GriffithsParams& g) {
    std::vector<std::string> out = validate(g.base);
    const TratnikParams& p = g.base;
    const Rational q = p.q();
    check_excluded(out, "c2c4", p.c(2) * p.c(4), q, 2, 2 * p.N);
    check_excluded(out, "q*c1c2c4", q * p.c(1) * p.c(2) * p.c(4), q, 2, 2 * p.N);
    return out;
}

// The strict scans reject every locus where any coefficient or weight
// denominator used by any check (including the reordered parameter sets
// and the N+1 contiguity level) can vanish: all pair products over
// exponents 0..2N+4, all q-shifted triples over 0..2N+4, singles over
// 1..N+2, plus q^m != 1 up to 2N+4. Values equal to 1 are rejected for
// the singles as well (row-sum and A00 denominators hit (1 - c3 q^0)).
bool safe_for_checks(const RacahParams& p) {
    const Rational q = p.q();
    if (q.is_zero() || q.is_one()) return false;
    {
        Rational qm = q;
        for (int m = 1; m <= 2 * p.N + 4; ++m) {
            if (qm.is_one()) return false;
            qm *= q;
        }
    }
    const Rational cs[] = {p.c1(), p.c2(), p.c3()};
    for (const Rational& c : cs) {
        if (c.is_zero() || c.is_one()) return false;
        if (hits_neg_power(c, q, 1, p.N + 2)) return false;
    }
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (hits_neg_power(cs[a] * cs[b], q, 0, 2 * p.N + 4)) return false;
    if (hits_neg_power(q * p.c1() * p.c2() * p.c3(), q, 0, 2 * p.N + 4)) return false;
    return true;
}

bool safe_for_checks(const TratnikParams& p) {
    const Rational q = p.q();
    if (q.is_zero() || q.is_one()) return false;
    {
        Rational qm = q;
        for (int m = 1; m <= 2 * p.N + 4; ++m) {
            if (qm.is_one()) return false;
            qm *= q;
        }
    }
    std::array<Rational, 5> cs;
    for (int i = 0; i <= 4; ++i) cs[static_cast<size_t>(i)] = p.c(i);
    for (const Rational& c : cs) {
        if (c.is_zero() || c.is_one()) return false;
        if (hits_neg_power(c, q, 1, p.N + 2)) return false;
    }
    for (int a = 0; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            if (hits_neg_power(cs[static_cast<size_t>(a)] * cs[static_cast<size_t>(b)], q, 0,
                               2 * p.N + 4))
                return false;
    for (int a = 0; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            for (int c = b + 1; c <= 4; ++c)
                if (hits_neg_power(q * cs[static_cast<size_t>(a)] * cs[static_cast<size_t>(b)] *
                                       cs[static_cast<size_t>(c)],
                                   q, 0, 2 * p.N + 4))
                    return false;
    return true;
}

}  // namespace qracah
