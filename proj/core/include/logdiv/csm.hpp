#ifndef LOGDIV_CSM_HPP
#define LOGDIV_CSM_HPP

#include <logdiv/arrangement.hpp>
#include <logdiv/chow.hpp>

#include <vector>

namespace logdiv {

/// CSM class of a linearly embedded P^k inside P^n:
/// coefficient of h^{n-k+i} is binom(k+1, i).
ChowClass csm_linear_subspace(int k, int n);

/// CSM class of the arrangement complement, by inclusion-exclusion over the
/// intersection lattice with the indicator weights. Reference route.
ChowClass csm_arrangement_complement(const IntersectionLattice& L);

/// CSM class of the complement from the characteristic polynomial of the
/// cone: chi must be divisible by (t-1); each term c_k t^k of the quotient
/// contributes c_k (1+h)^k h^{n-k}. Cross-check route.
ChowClass csm_from_charpoly(const UniPoly& chi, int n);

struct CurveSingularPoint {
    std::vector<Rational> point;  // projective coordinates, 3 entries
    long long milnor = 0;
};

struct CurveSingularityData {
    int degree = 0;
    std::vector<CurveSingularPoint> points;
};

/// CSM class of the complement of a reduced plane curve whose singularities
/// are all quasi-homogeneous (caller verifies): coefficients
/// (1, 3-d, 3-chi(D)) with chi(D) = 3d - d^2 + sum of Milnor numbers.
ChowClass csm_curve_complement(const CurveSingularityData& data);

/// chi(D) = 3d - d^2 + sum mu_p for a reduced plane curve; valid with or
/// without quasi-homogeneity, used for the Euler-characteristic comparison.
long long curve_euler_characteristic(const CurveSingularityData& data);

/// Quotient chi/(t-1); throws when the division leaves a remainder.
UniPoly reduced_charpoly(const UniPoly& chi);

} // namespace logdiv

#endif
