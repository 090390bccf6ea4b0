#ifndef LOGDIV_CHOW_HPP
#define LOGDIV_CHOW_HPP

#include <logdiv/rational.hpp>

#include <string>
#include <vector>

namespace logdiv {

/// Element of the Chow group of P^n written as sum_j coeffs[j] * h^j cap [P^n],
/// where h is the hyperplane class. coeffs has length n+1.
struct ChowClass {
    int n = 0;
    std::vector<Rational> coeffs;

    ChowClass() = default;
    explicit ChowClass(int ambient) : n(ambient), coeffs(static_cast<size_t>(ambient + 1), Rational(0)) {}
    ChowClass(int ambient, std::vector<Rational> c);

    /// d_i = integral of h^i cap this = coeffs[n-i]; zero for i > n.
    Rational degree(int i) const;
    std::vector<Rational> degrees() const;

    bool is_integral() const;

    ChowClass operator+(const ChowClass& other) const;
    ChowClass operator-(const ChowClass& other) const;
    /// Product truncated above h^n.
    ChowClass operator*(const ChowClass& other) const;
    ChowClass operator*(const Rational& c) const;
    bool operator==(const ChowClass& other) const {
        return n == other.n && coeffs == other.coeffs;
    }
    bool operator!=(const ChowClass& other) const { return !(*this == other); }
};

/// c(TP^n) cap [P^n]: the binomial coefficients of (1+h)^{n+1}, truncated.
ChowClass chern_tangent(int n);

/// Total Chern class of the log-derivation sheaf of a free divisor with the
/// given exponent multiset (one entry per basis element, n+1 entries). One
/// copy of the Euler degree 1 is split off; the rest contribute
/// prod_i (1 + (1 - d_i) h). Throws if the multiset is malformed.
ChowClass chern_logderiv_from_exponents(std::vector<int> exps, int n);

/// Log-derivation Chern class for k distinct points on P^1: 1 + (2-k) h.
ChowClass chern_logderiv_curve(int k);

BigInt binomial(int n, int k);

std::string to_string(const ChowClass& c);

} // namespace logdiv

#endif
