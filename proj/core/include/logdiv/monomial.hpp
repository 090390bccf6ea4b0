#ifndef LOGDIV_MONOMIAL_HPP
#define LOGDIV_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace logdiv {

/// Exponent vector of a power product. The length always equals the number
/// of variables of the ambient ring.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(int nvars) : exps(static_cast<size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int nvars() const { return static_cast<int>(exps.size()); }
    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    long long weighted_degree(const std::vector<int>& weights) const;

    bool is_one() const;
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    /// Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return exps == other.exps; }
    bool operator!=(const Monomial& other) const { return exps != other.exps; }

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial var(int i, int nvars, int power = 1);
};

enum class MonomialOrder { grevlex, lex };

/// Strict "a comes after b" tests in the chosen order, i.e. a < b.
bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order);
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    return monomial_less(a, b, MonomialOrder::grevlex);
}

/// Enumerates all monomials of the given total degree in nvars variables,
/// in descending grevlex order. Deterministic; used by the graded solvers.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

std::string variable_name(int i);
std::string to_string(const Monomial& m);

} // namespace logdiv

#endif
