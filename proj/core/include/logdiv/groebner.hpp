#ifndef LOGDIV_GROEBNER_HPP
#define LOGDIV_GROEBNER_HPP

#include <logdiv/poly.hpp>

#include <stdexcept>
#include <vector>

namespace logdiv {

/// Thrown when a Groebner computation exceeds its S-pair budget. Callers map
/// this to an "inconclusive" verdict rather than crashing.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default S-pair budget; LOGDIV_MAX_STEPS in the environment overrides it.
long long default_pair_budget();

struct GroebnerOptions {
    MonomialOrder order = MonomialOrder::grevlex;
    long long max_pairs = default_pair_budget();
};

/// Leading term with respect to `order` (storage order is grevlex).
const Poly::Term& leading_term(const Poly& f, MonomialOrder order);

/// Remainder of full multivariate division of f by `basis` (leading term and
/// tail both reduced). Deterministic: divisors are tried in list order.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, MonomialOrder order);

/// The reduced Groebner basis, monic, sorted by decreasing leading term.
/// Unique for a given ideal and order.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const GroebnerOptions& opts = {});

/// f is in the ideal; `gb` must be a Groebner basis for `order`.
bool ideal_membership(const Poly& f, const std::vector<Poly>& gb, MonomialOrder order);

/// The two generating sets span the same ideal (via canonical reduced bases).
bool ideal_equal(const std::vector<Poly>& gens_a, const std::vector<Poly>& gens_b,
                 const GroebnerOptions& opts = {});

/// dim_Q(R/I) as a vector space, or -1 when infinite; `gb` must be a Groebner
/// basis for `order`.
long long quotient_dimension(const std::vector<Poly>& gb, MonomialOrder order);

/// The monomials outside the leading-term ideal; requires a finite quotient.
std::vector<Monomial> standard_monomials(const std::vector<Poly>& gb, MonomialOrder order);

/// V(I) is contained in the origin, exactly: each variable is nilpotent
/// modulo the ideal. Requires a finite-dimensional quotient to hold.
bool vanishes_only_at_origin(const std::vector<Poly>& gb, MonomialOrder order);

/// Krull dimension of R/I via the leading-term staircase; -1 for the unit
/// ideal. `gb` must be a Groebner basis for `order`.
int krull_dimension(const std::vector<Poly>& gb, MonomialOrder order);

/// f is squarefree: the Jacobian ideal (f, all partials) is the unit ideal or
/// cuts out a locus of codimension at least two.
bool is_reduced(const Poly& f, const GroebnerOptions& opts = {});

} // namespace logdiv

#endif
