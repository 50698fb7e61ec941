/// Univariate q-Racah polynomials in the Omega normalization, their
/// recurrence / difference / contiguity coefficient families, and the
/// exhaustive checkers for the ten univariate identities.
#pragma once

#include "qracah/params.hpp"
#include "qracah/report.hpp"

namespace qracah {

enum class Eps : int { Minus = -1, Zero = 0, Plus = 1 };
enum class Sign : int { Minus = -1, Plus = 1 };

inline constexpr Eps kEpsAll[3] = {Eps::Plus, Eps::Zero, Eps::Minus};
inline int eps_int(Eps e) { return static_cast<int>(e); }

/// Omega(n; c1,c2,c3; N), the normalization tied to the weight and norm.
/// Vanishes for n < 0 or n > N through the q-binomial convention.
Rational omega_norm(int n, const RacahParams& p);

/// p_n(x; c1,c2,c3; N) = Omega(n) * 4phi3(...). Zero for n < 0, n > N or
/// x > N. Negative x is admitted (the series still terminates at n); the
/// boundary checks rely on the vanishing of the matching coefficients.
Rational racah_p(int n, int x, const RacahParams& p);

/// lambda(x; c) = -(1 - q^{-x})(1 - c q^{x+1}); sqrt_c is the stored root of c.
Rational lambda_eig(int x, const Rational& sqrt_c, const Rational& q);

/// Recurrence coefficients Phi^eps(n; c1,c2,c3; N); Phi^0 = -Phi^+ - Phi^-.
Rational phi_coeff(Eps eps, int n, const RacahParams& p);

/// Contiguity eigenvalues lambda_{+-}(x; c1,c2,c3; N).
Rational cont_lambda(Sign pm, int x, const RacahParams& p);

/// Contiguity coefficients Phi^eps_{+-}(n; c1,c2,c3; N).
Rational cont_phi(Sign pm, Eps eps, int n, const RacahParams& p);

enum class RacahIdentity {
    Recurrence,
    Difference,
    Duality,
    Orthogonality,
    Involution,
    QInversion,
    ContiguityRecPlus,
    ContiguityRecMinus,
    ContiguityDiffPlus,
    ContiguityDiffMinus,
};

const char* racah_identity_name(RacahIdentity id);
inline constexpr RacahIdentity kRacahIdentities[10] = {
    RacahIdentity::Recurrence,          RacahIdentity::Difference,
    RacahIdentity::Duality,             RacahIdentity::Orthogonality,
    RacahIdentity::Involution,          RacahIdentity::QInversion,
    RacahIdentity::ContiguityRecPlus,   RacahIdentity::ContiguityRecMinus,
    RacahIdentity::ContiguityDiffPlus,  RacahIdentity::ContiguityDiffMinus,
};

/// Runs one identity over its full admissible index grid with exact
/// residuals. Throws ConstraintViolation when a parameter reordering the
/// identity needs is inadmissible.
IdentityReport check_identity_1v(RacahIdentity id, const RacahParams& p);

}  // namespace qracah
