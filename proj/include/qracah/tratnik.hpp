/// Bivariate Tratnik polynomials of q-Racah type, their coefficient
/// families (Lambda, F, A) and the fourteen identity checkers.
#pragma once

#include "qracah/racah.hpp"

namespace qracah {

/// T_{i,j}(x,y; c1..c4; N) = p_i(x; c1,c2,c3; N-j) p_j(y; c3,c0,c4; N-x).
/// Zero for i < 0, j < 0 or i + j > N.
Rational tratnik_T(int i, int j, int x, int y, const TratnikParams& p);

/// Lambda(x; c1,c2,c3,c4; N) evaluated on the record's ordering; pass a
/// reordered record for permuted argument tuples. Vanishes for x < 0 or
/// x > N via the q-binomial.
Rational tratnik_lambda(int x, const TratnikParams& ordering);

/// F^{+-}_x(c1, c2); sqrt roots are passed, values are used squared.
Rational F_coeff(Sign pm, int x, const Rational& sqrt_c1, const Rational& sqrt_c2,
                 const Rational& q);

/// A^{eps,eps'}_{i,j}(c1,c2,c3,c4;N) on the record's ordering; includes the
/// composite A^{0,0}.
Rational A_coeff(Eps eps, Eps eps_prime, int i, int j, const TratnikParams& ordering);

/// Row constant g_j from the expansion of Phi^0(j; c3,c0,c4; N-x); used to
/// cross-check the A^{0,0} combination.
Rational A_row_g(int j, const TratnikParams& ordering);

enum class TratnikIdentity {
    LemmaStar,
    LemmaStarStar,
    Orthogonality,
    Duality,
    Involution,
    Rec1,
    Rec2,
    Diff1,
    Diff2,
    StochasticRowsum,
    FavardNu,
    TN0ClosedForm,
    Polynomiality,
    IlievCrosscheck,
};

const char* tratnik_identity_name(TratnikIdentity id);
inline constexpr TratnikIdentity kTratnikIdentities[14] = {
    TratnikIdentity::LemmaStar,     TratnikIdentity::LemmaStarStar,
    TratnikIdentity::Orthogonality, TratnikIdentity::Duality,
    TratnikIdentity::Involution,    TratnikIdentity::Rec1,
    TratnikIdentity::Rec2,          TratnikIdentity::Diff1,
    TratnikIdentity::Diff2,         TratnikIdentity::StochasticRowsum,
    TratnikIdentity::FavardNu,      TratnikIdentity::TN0ClosedForm,
    TratnikIdentity::Polynomiality, TratnikIdentity::IlievCrosscheck,
};

IdentityReport check_identity_T(TratnikIdentity id, const TratnikParams& p);

/// Bivariate Newton interpolation on the staircase grid
/// {(x,y): x,y >= 0, x+y <= M}: coefficient a[x][y] of the basis
/// prod_{s<x}(u - u_s) prod_{t<y}(v - v_t). Nodes must be pairwise distinct.
std::vector<std::vector<Rational>> newton_staircase_coeffs(
    const std::vector<Rational>& u_nodes, const std::vector<Rational>& v_nodes,
    const std::vector<std::vector<Rational>>& values);

/// Evaluates the Newton form at node indices (X, Y); used to confirm exact
/// reproduction of the interpolated data.
Rational newton_staircase_eval(const std::vector<std::vector<Rational>>& coeffs,
                               const std::vector<Rational>& u_nodes,
                               const std::vector<Rational>& v_nodes, int X, int Y);

}  // namespace qracah
