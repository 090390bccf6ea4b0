#ifndef LOGDIV_ARRANGEMENT_HPP
#define LOGDIV_ARRANGEMENT_HPP

#include <logdiv/linalg.hpp>
#include <logdiv/poly.hpp>

#include <vector>

namespace logdiv {

/// Univariate integer polynomial; coeffs[k] multiplies t^k.
using UniPoly = std::vector<BigInt>;

/// A flat of the central cone arrangement in C^{n+1}.
struct Flat {
    int rank = 0;                  // codimension of the flat in the cone
    std::vector<size_t> forms;     // indices of hyperplanes containing it, sorted
    std::vector<QVector> basis;    // canonical echelon rows of the covector span
                                   // (empty for the synthetic flats of a section)

    /// Dimension as a projective subspace of P^n; negative for the cone point.
    int pdim(int n) const { return n - rank; }
};

struct IntersectionLattice {
    int n = 0;                 // projective ambient dimension
    std::vector<Poly> forms;   // the defining linear forms, in n+1 variables
    std::vector<Flat> flats;   // sorted by (rank, forms); flats[0] is the top

    const Flat& top() const { return flats.front(); }

    /// inner lies inside outer as subspaces (hyperplane sets reversed).
    static bool contains(const Flat& outer, const Flat& inner);
};

QVector linear_form_covector(const Poly& form);

/// All intersections of the hyperplanes, deduplicated exactly by row space.
/// `forms` must be pairwise non-proportional nonzero linear forms in n+1
/// variables.
IntersectionLattice intersection_lattice(const std::vector<Poly>& forms, int n);

/// Moebius values mu(top, x), one per flat, over the full cone lattice.
std::vector<BigInt> moebius_values(const IntersectionLattice& L);

/// Integer weights m_x with 1_complement = sum over projective flats of
/// m_x * 1_x; m_top = 1 and m_x = -sum over flats properly containing x.
/// Entries for cone-point flats (rank n+1) are zero placeholders.
std::vector<BigInt> indicator_coefficients(const IntersectionLattice& L);

/// chi(A, t) = sum_x mu(top,x) t^{dim x} over the cone lattice in C^{n+1}.
UniPoly characteristic_polynomial(const IntersectionLattice& L);

/// Lattice of the restriction to a combinatorially generic hyperplane:
/// flats of projective dimension >= 1 survive with dimension dropped by one.
/// Requires n >= 2.
IntersectionLattice generic_section(const IntersectionLattice& L);

std::string to_string(const UniPoly& p);

} // namespace logdiv

#endif
