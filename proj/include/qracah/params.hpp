/// Parameter records. All parameters are stored through their square
/// roots so that every half-integer power in the formulas becomes an
/// integer power of stored rationals. Records are immutable after
/// construction; reorderings build new records.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "qracah/rational.hpp"

namespace qracah {

/// Parameters of one univariate family p_n(x; c1, c2, c3; N).
/// The same record doubles as the "ordered triple" the identities pass
/// around: e.g. the difference equation uses the (c3, c2, c1) ordering.
struct RacahParams {
    Rational sq;          // sqrt(q), nonzero
    Rational s1, s2, s3;  // sqrt(c1), sqrt(c2), sqrt(c3), nonzero
    int N = 0;

    Rational q() const { return sq * sq; }
    Rational c1() const { return s1 * s1; }
    Rational c2() const { return s2 * s2; }
    Rational c3() const { return s3 * s3; }

    RacahParams reordered(const Rational& a, const Rational& b, const Rational& c) const {
        return RacahParams{sq, a, b, c, N};
    }
    RacahParams swapped13() const { return RacahParams{sq, s3, s2, s1, N}; }
    RacahParams with_level(int M) const { return RacahParams{sq, s1, s2, s3, M}; }
    /// q -> 1/q, c_i -> 1/c_i by reciprocal substitution on the roots.
    RacahParams inverted() const {
        return RacahParams{sq.inverse(), s1.inverse(), s2.inverse(), s3.inverse(), N};
    }

    std::string fingerprint() const;
};

/// Parameters of the bivariate families: (c1,..,c4) plus the derived c0
/// fixed by q^{2N+3} c0 c1 c2 c3 c4 = 1. Construction derives
/// sqrt(c0) = 1 / (sqrt(q)^{2N+3} sqrt(c1) sqrt(c2) sqrt(c3) sqrt(c4)),
/// so the constraint holds exactly for any consistent branch choice.
struct TratnikParams {
    Rational sq;
    Rational s1, s2, s3, s4;
    Rational s0;  // derived
    int N = 0;

    static TratnikParams make(const Rational& sq, const Rational& s1, const Rational& s2,
                              const Rational& s3, const Rational& s4, int N);

    Rational q() const { return sq * sq; }
    Rational c(int i) const { return root(i) * root(i); }  // i in 0..4

    /// Root of c_i, i in 0..4 (0 is the derived parameter).
    const Rational& root(int i) const {
        switch (i) {
            case 0: return s0;
            case 1: return s1;
            case 2: return s2;
            case 3: return s3;
            case 4: return s4;
        }
        throw IndexOutOfRange("TratnikParams::root");
    }

    /// New record whose (c1,c2,c3,c4) are this record's (c_a, c_b, c_c, c_d);
    /// the derived fifth parameter of the result is the remaining one, up to
    /// the branch fixed by the root product.
    TratnikParams reordered(int a, int b, int c, int d) const {
        return make(sq, root(a), root(b), root(c), root(d), N);
    }

    /// q -> 1/q, c_i -> 1/c_i.
    TratnikParams inverted() const {
        return make(sq.inverse(), s1.inverse(), s2.inverse(), s3.inverse(), s4.inverse(), N);
    }

    RacahParams triple(int a, int b, int c, int level) const {
        return RacahParams{sq, root(a), root(b), root(c), level};
    }

    std::string fingerprint() const;
};

/// Tratnik parameters subject to the stricter Griffiths admissibility block.
struct GriffithsParams {
    TratnikParams base;
    std::string fingerprint() const { return base.fingerprint(); }
};

/// Constraint scan for the univariate family: the three exclusion sets of
/// the recurrence/difference admissibility conditions. Returns one message
/// per violation; empty means admissible.
std::vector<std::string> validate(const RacahParams& p);

/// Constraint scan for the bivariate Tratnik block.
std::vector<std::string> validate(const TratnikParams& p);

/// Tratnik block plus the extra pair exclusions of the Griffiths family.
std::vector<std::string> validate(const GriffithsParams& p);

/// Strict admissibility used by the sampler: the validate() sets extended
/// by the removable-singularity loci (where coefficient formulas have
/// vanishing residues but the raw expressions divide by zero) and by the
/// shifted-level exclusions that the contiguity checks at N+1 need.
bool safe_for_checks(const RacahParams& p);
bool safe_for_checks(const TratnikParams& p);

}  // namespace qracah
