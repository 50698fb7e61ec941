/// (N+1)-dimensional representations of the Askey-Wilson algebra aw(3):
/// the three generator bases, the representation map, the change-of-basis
/// matrices built from the univariate polynomials, and the checkers for
/// the defining relations, intertwining and the Racah product relation.
#pragma once

#include "qracah/matrix.hpp"
#include "qracah/racah.hpp"

namespace qracah {

enum class Aw3Basis { A, B, C };
enum class Aw3Gen { G12, G23, G13 };
enum class Aw3Label { C1, C2, C3, C12, C23, C13, C123 };
enum class Aw3Pair { AB, BC, CA, BA, CB, AC };

inline constexpr Aw3Basis kAw3Bases[3] = {Aw3Basis::A, Aw3Basis::B, Aw3Basis::C};
inline constexpr Aw3Gen kAw3Gens[3] = {Aw3Gen::G12, Aw3Gen::G23, Aw3Gen::G13};

const char* aw3_basis_name(Aw3Basis b);

/// The generator matrix X_I in the given basis (X in {A, B, C}).
ExactMatrix aw3_generator(Aw3Basis basis, Aw3Gen gen, const RacahParams& p);

/// Image of the abstract algebra element under the representation map,
/// with the algebra deformation parameter equal to sqrt(q).
ExactMatrix aw3_element(Aw3Basis basis, Aw3Label label, const RacahParams& p);

/// Change-of-basis matrix P for the given ordered pair of bases.
ExactMatrix aw3_P(Aw3Pair pair, const RacahParams& p);

/// The three defining relations as exact matrix identities in one basis.
IdentityReport check_aw3_relations(Aw3Basis basis, const RacahParams& p);

/// P_AB B_I = A_I P_AB (cyclically) for all generators, plus P P^{-1} = 1.
IdentityReport check_intertwining3(const RacahParams& p);

/// The scalar Racah relation on the full (i,x) grid with the constant
/// recomputed from the (0,0) matrix component, plus the Schur product
/// relation P_BA P_AC = tau P_BC.
IdentityReport check_racah_relation(const RacahParams& p);

/// The cyclic images: each basis is the parameter-shifted image of the
/// previous one.
IdentityReport check_aw3_z3(const RacahParams& p);

/// Simple spectrum of the diagonal generator and nonvanishing off-diagonal
/// entries of the two tridiagonal generators, in every basis.
IdentityReport check_aw3_irreducibility(const RacahParams& p);

}  // namespace qracah
