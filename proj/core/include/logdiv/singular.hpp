#ifndef LOGDIV_SINGULAR_HPP
#define LOGDIV_SINGULAR_HPP

#include <logdiv/groebner.hpp>
#include <logdiv/poly.hpp>

#include <string>
#include <vector>

namespace logdiv {

/// Affine local equation with the point of interest translated to the origin.
struct GermSpec {
    Poly g;
};

enum class LocalStatus { ok, not_isolated, inconclusive };

struct LocalNumber {
    LocalStatus status = LocalStatus::inconclusive;
    long long value = -1;
    std::string note;
};

/// mu = local dimension of the Jacobian quotient at the origin. Computed as
/// the stabilized dimension of R/(J + m^N); stabilization certifies the value
/// by Nakayama, so critical points away from the origin cannot leak in.
LocalNumber milnor_number(const GermSpec& germ, const GroebnerOptions& opts = {});

/// tau = local dimension of R/(g, dg) at the origin, same truncation scheme.
LocalNumber tjurina_number(const GermSpec& germ, const GroebnerOptions& opts = {});

enum class QhStatus { quasihomogeneous, not_quasihomogeneous, not_singular, inconclusive };

struct QhReport {
    QhStatus status = QhStatus::inconclusive;
    LocalNumber milnor;
    LocalNumber tjurina;
    std::string note;
};

/// Isolated singularity at the origin is quasi-homogeneous iff mu = tau.
/// Smooth points are rejected.
QhReport quasihomogeneity_test(const GermSpec& germ, const GroebnerOptions& opts = {});

/// Affine germ of a homogeneous f at the projective point p: dehomogenize in
/// the last nonzero coordinate and translate the point to the origin.
GermSpec germ_at(const Poly& f, std::vector<Rational> point);

/// Every d_y h for y in y_vars lies in (h, d_x h : x in x_vars). The
/// membership detects a smooth local factor in the y directions.
bool triviality_membership(const Poly& h, const std::vector<int>& x_vars,
                           const std::vector<int>& y_vars, const GroebnerOptions& opts = {});

/// No coordinate direction splits off: the membership above fails for every
/// single-direction choice. Certifies triviality index 0 at the origin.
bool triviality_zero_certificate(const Poly& h, const GroebnerOptions& opts = {});

/// Rank of the evaluations at p of the logarithmic derivations of degree at
/// most the bound (default deg f): a certified lower bound for the triviality
/// index. f homogeneous, f(p) = 0.
long long triviality_index_lower_bound(const Poly& f, const std::vector<Rational>& p,
                                       int degree_bound = -1);

enum class Transversality { transversal, not_transversal, inconclusive };

struct TransversalityReport {
    Transversality verdict = Transversality::inconclusive;
    std::string note;
};

/// Does the hyperplane H meet the divisor stratum through p transversally?
/// Exact at smooth points; at singular points the evaluated-field span only
/// bounds the stratum tangent from below, so a deficient span is conclusive
/// only with a triviality-zero certificate at the origin.
TransversalityReport transversality_check(const Poly& f, const std::vector<Rational>& p,
                                          const Poly& H, int degree_bound = -1,
                                          const GroebnerOptions& opts = {});

enum class BertiniStatus { equal, not_equal, degenerate, inconclusive };

struct BertiniReport {
    BertiniStatus status = BertiniStatus::inconclusive;
    std::string note;
};

/// Compares the restriction of the singular-locus ideal (f, all partials) to
/// the hyperplane H with the singular-locus ideal of the restricted equation.
/// `chart` is the variable eliminated via H; its coefficient must be nonzero.
BertiniReport bertini_schematic_check(const Poly& f, const Poly& H, int chart,
                                      const GroebnerOptions& opts = {});

/// f with x_chart eliminated via H = 0, in the remaining variables in order.
Poly restrict_to_hyperplane(const Poly& f, const Poly& H, int chart);

} // namespace logdiv

#endif
