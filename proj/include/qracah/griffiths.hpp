/// Bivariate Griffiths polynomials of q-Racah type and the checkers for
/// their symmetry, duality, biorthogonality, bispectrality, polynomiality
/// and the Favard obstruction.
#pragma once

#include "qracah/tratnik.hpp"

namespace qracah {

/// G_{i,j}(x,y; c1..c4; N): triple-product sum over a = 0..min(N-j, N-y)
/// with weight omega_a(c1c2c3/c4). Zero outside the index triangle.
Rational griffiths_G(int i, int j, int x, int y, const GriffithsParams& p);

enum class GriffithsIdentity {
    FormGT,
    FormPT,
    SymLemmaXY,
    SymLemmaIJ,
    SymTheorem,
    Duality,
    Biorthogonality,
    Involution,
    Rec1,
    Rec2,
    Diff1,
    Diff2,
    Polynomiality0N,
    PolynomialityN0,
    G0NClosedForm,
    GN0ClosedForm,
    FavardObstruction,
    SpecialOrthogonality,
};

const char* griffiths_identity_name(GriffithsIdentity id);
inline constexpr GriffithsIdentity kGriffithsIdentities[18] = {
    GriffithsIdentity::FormGT,          GriffithsIdentity::FormPT,
    GriffithsIdentity::SymLemmaXY,      GriffithsIdentity::SymLemmaIJ,
    GriffithsIdentity::SymTheorem,      GriffithsIdentity::Duality,
    GriffithsIdentity::Biorthogonality, GriffithsIdentity::Involution,
    GriffithsIdentity::Rec1,            GriffithsIdentity::Rec2,
    GriffithsIdentity::Diff1,           GriffithsIdentity::Diff2,
    GriffithsIdentity::Polynomiality0N, GriffithsIdentity::PolynomialityN0,
    GriffithsIdentity::G0NClosedForm,   GriffithsIdentity::GN0ClosedForm,
    GriffithsIdentity::FavardObstruction,
    GriffithsIdentity::SpecialOrthogonality,
};

IdentityReport check_identity_G(GriffithsIdentity id, const GriffithsParams& p);

}  // namespace qracah
