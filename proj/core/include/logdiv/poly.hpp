#ifndef LOGDIV_POLY_HPP
#define LOGDIV_POLY_HPP

#include <logdiv/monomial.hpp>
#include <logdiv/rational.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logdiv {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept in descending grevlex order with no zero coefficients, so
/// equal polynomials compare equal term-by-term and front() is the grevlex
/// leading term.
class Poly {
public:
    using Term = std::pair<Monomial, Rational>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int i, int nvars);
    static Poly monomial(Monomial m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading_term() const;
    const Rational& coeff(const Monomial& m) const;

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator-() const;
    Poly operator*(const Poly& other) const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }
    bool operator!=(const Poly& other) const { return !(*this == other); }

    Rational eval(const std::vector<Rational>& point) const;
    /// Simultaneous substitution x_i -> images[i]; images share one ring.
    Poly substitute(const std::vector<Poly>& images) const;
    /// Drops variable `var` after setting it to 1 (chart of P^n).
    Poly dehomogenize(int var) const;
    /// Shifts coordinates by `point`: result(x) = this(x + point).
    Poly translate(const std::vector<Rational>& point) const;

    /// Appends a term; used by builders. Keeps the invariant via normalize().
    void add_term(const Monomial& m, const Rational& c);

private:
    int nvars_;
    std::vector<Term> terms_;
    void normalize();
};

/// Strictly positive weights together with the target weighted degree.
struct WeightVector {
    std::vector<int> weights;
    long long degree = 0;

    WeightVector(std::vector<int> w, long long d);
};

Poly operator*(const Rational& c, const Poly& p);

Poly partial_derivative(const Poly& f, int var);

/// Every term has weighted degree equal to w.degree.
bool is_quasihomogeneous(const Poly& f, const WeightVector& w);

/// d*f == sum_i a_i x_i df/dx_i, the weighted Euler identity.
bool euler_pairing_check(const Poly& f, const WeightVector& w);

Poly euler_apply(const Poly& f, const WeightVector& w);

/// Text form of the grammar: terms joined by + and -, each term an optional
/// rational coefficient and *-separated powers `v^e`. Variables are the
/// entries of `vars`; the aliases x,y,z,w are accepted for x0..x3.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars);
/// Same, over the canonical variables x0..x{nvars-1}.
Poly parse_poly(const std::string& text, int nvars);

std::string to_string(const Poly& p);
std::string to_string(const Poly& p, const std::vector<std::string>& vars);

std::vector<std::string> canonical_variables(int nvars);

} // namespace logdiv

#endif
