/// Representations of the rank-2 Askey-Wilson algebra aw(4): five
/// equivalent bases of dimension binom(N+2,2), the defining-relation
/// checker (including the derived generators built both from the algebra
/// and from the tabulated matrices), the change-of-basis matrices and the
/// Biedenharn-Elliot relation.
#pragma once

#include <utility>

#include "qracah/matrix.hpp"
#include "qracah/tratnik.hpp"

namespace qracah {

/// Size of the (i,j) triangle, binom(N+2,2).
int triangle_size(int N);

/// Row-major flat index of (i,j), i ascending then j; throws on i+j > N.
int pair_index(int i, int j, int N);
std::pair<int, int> pair_from_index(int t, int N);

enum class Aw4Basis { A, B, C, D, E };
inline constexpr Aw4Basis kAw4Bases[5] = {Aw4Basis::A, Aw4Basis::B, Aw4Basis::C, Aw4Basis::D,
                                          Aw4Basis::E};
const char* aw4_basis_name(Aw4Basis b);

/// Generator labels: the five tabulated per basis plus the ten extended
/// ones (basis A tables; other bases through the cyclic symmetry).
enum class Aw4Gen {
    G12, G23, G34, G123, G234,                     // primary
    G13, G31, G124, G412,                          // extended tridiagonal
    G24, G42, G14, G41, G134, G341,                // extended nine-diagonal
};
inline constexpr Aw4Gen kAw4Primary[5] = {Aw4Gen::G12, Aw4Gen::G23, Aw4Gen::G34, Aw4Gen::G123,
                                          Aw4Gen::G234};

ExactMatrix aw4_generator(Aw4Basis basis, Aw4Gen gen, const TratnikParams& p);

/// Abstract algebra elements under the representation map (deformation
/// parameter sqrt(q)).
enum class Aw4Label {
    C1, C2, C3, C4, C1234,
    C12, C23, C34, C123, C234,
    C13, C31, C24, C42, C14, C41, C124, C412, C134, C341,
};
ExactMatrix aw4_element(Aw4Basis basis, Aw4Label label, const TratnikParams& p);

/// Full defining-relation check in one basis: the disjoint/nested
/// commutations, the ten 3-tuple relations, the two C14/C41 relations,
/// with every derived generator computed from the algebra combination and
/// cross-checked against its tabulated matrix.
IdentityReport check_aw4_relations(Aw4Basis basis, const TratnikParams& p);

enum class Aw4Pair { AB, BC, CD, DE, EA, BA, CB, DC, ED, AE };
ExactMatrix aw4_P(Aw4Pair pair, const TratnikParams& p);

/// P X = Y P for the five primary generators across the five basis pairs,
/// plus P P^{-1} = 1.
IdentityReport check_intertwining4(const TratnikParams& p);

/// The scalar Biedenharn-Elliot relation on the full admissible grid, the
/// identification of its right side with a Tratnik polynomial, and the
/// pentagon product with the Schur constant exactly 1.
IdentityReport check_biedenharn_elliot(const TratnikParams& p);

/// Consecutive bases are cyclic-parameter images of one another.
IdentityReport check_aw4_z5(const TratnikParams& p);

/// Distinct eigenvalue pairs of the two diagonal generators and nonzero
/// nearest-neighbour couplings of the two tridiagonal ones, per basis.
IdentityReport check_aw4_irreducibility(const TratnikParams& p);

}  // namespace qracah
