#ifndef LOGDIV_LOGDERIV_HPP
#define LOGDIV_LOGDERIV_HPP

#include <logdiv/groebner.hpp>
#include <logdiv/poly.hpp>

#include <string>
#include <vector>

namespace logdiv {

/// Vector field theta = sum_i coefficients[i] * d/dx_i.
struct Derivation {
    std::vector<Poly> coefficients;

    /// Common degree of the (homogeneous) coefficients; -1 when zero.
    int degree() const;
    bool is_zero() const;
    bool operator==(const Derivation& other) const { return coefficients == other.coefficients; }
};

/// theta(f) = sum_i a_i * df/dx_i, exactly.
Poly apply(const Derivation& theta, const Poly& f);

Derivation euler_derivation(int nvars);

/// Divisor in P^n cut out by a reduced homogeneous f in n+1 variables;
/// arrangement_forms, when nonempty, multiply to f up to a nonzero scalar.
struct DivisorSpec {
    int n = 0;
    Poly f;
    std::vector<Poly> arrangement_forms;
};

/// Checks the DivisorSpec invariants (homogeneity, variable count, form
/// product). Squarefreeness is checked separately where required.
void validate_divisor(const DivisorSpec& D);

struct FreenessCertificate {
    bool is_free = false;
    std::vector<Derivation> basis;   // n+1 entries when is_free
    std::vector<int> exponents;      // sorted basis degrees when is_free
    Rational saito_scalar = 0;       // det(coefficients) = saito_scalar * f
    std::string failure;             // reason when not is_free
};

/// Graded minimal generators of { theta : theta(f) in (f) } in degrees up to
/// the bound, found degreewise by exact null-space computation and stripped
/// of multiples of lower-degree generators.
std::vector<Derivation> logderiv_generators(const DivisorSpec& D, int degree_bound);

/// Saito's criterion on n+1 candidate derivations: all must be logarithmic
/// and their coefficient determinant a nonzero scalar multiple of f.
FreenessCertificate saito_check(const std::vector<Derivation>& candidates, const DivisorSpec& D);

enum class FreenessStatus { free_divisor, not_free, inconclusive };

struct ExponentsResult {
    FreenessStatus status = FreenessStatus::inconclusive;
    std::vector<int> exponents;      // when free
    size_t generator_count = 0;      // minimal generators found within bound
    int degree_bound = 0;
    std::string note;
    FreenessCertificate certificate; // populated when free
};

/// Decides graded freeness of the cone module and extracts the exponent
/// multiset. degree_bound < 0 selects deg f, which is complete for free
/// divisors (exponents sum to deg f).
ExponentsResult exponents(const DivisorSpec& D, int degree_bound = -1);

/// Determinant of a square polynomial matrix by cofactor expansion.
Poly determinant(const std::vector<std::vector<Poly>>& m);

std::string to_string(const Derivation& theta);

} // namespace logdiv

#endif
