#include <logdiv/chow.hpp>

#include <algorithm>
#include <stdexcept>

namespace logdiv {

ChowClass::ChowClass(int ambient, std::vector<Rational> c) : n(ambient), coeffs(std::move(c)) {
    if (coeffs.size() != static_cast<size_t>(n + 1))
        throw std::invalid_argument("coefficient vector length must be n+1");
}

Rational ChowClass::degree(int i) const {
    if (i < 0) throw std::invalid_argument("negative codimension");
    if (i > n) return Rational(0);
    return coeffs[static_cast<size_t>(n - i)];
}

std::vector<Rational> ChowClass::degrees() const {
    std::vector<Rational> d(coeffs.rbegin(), coeffs.rend());
    return d;
}

bool ChowClass::is_integral() const {
    return std::all_of(coeffs.begin(), coeffs.end(), is_integer);
}

ChowClass ChowClass::operator+(const ChowClass& other) const {
    if (n != other.n) throw std::invalid_argument("ambient dimension mismatch");
    ChowClass r(n);
    for (size_t j = 0; j < coeffs.size(); ++j) r.coeffs[j] = coeffs[j] + other.coeffs[j];
    return r;
}

ChowClass ChowClass::operator-(const ChowClass& other) const {
    if (n != other.n) throw std::invalid_argument("ambient dimension mismatch");
    ChowClass r(n);
    for (size_t j = 0; j < coeffs.size(); ++j) r.coeffs[j] = coeffs[j] - other.coeffs[j];
    return r;
}

ChowClass ChowClass::operator*(const ChowClass& other) const {
    if (n != other.n) throw std::invalid_argument("ambient dimension mismatch");
    ChowClass r(n);
    for (size_t a = 0; a < coeffs.size(); ++a)
        for (size_t b = 0; a + b < coeffs.size(); ++b) r.coeffs[a + b] += coeffs[a] * other.coeffs[b];
    return r;
}

ChowClass ChowClass::operator*(const Rational& c) const {
    ChowClass r(n);
    for (size_t j = 0; j < coeffs.size(); ++j) r.coeffs[j] = coeffs[j] * c;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

ChowClass chern_tangent(int n) {
    if (n < 1) throw std::invalid_argument("ambient dimension must be at least 1");
    ChowClass c(n);
    for (int j = 0; j <= n; ++j) c.coeffs[static_cast<size_t>(j)] = Rational(binomial(n + 1, j));
    return c;
}

ChowClass chern_logderiv_from_exponents(std::vector<int> exps, int n) {
    if (exps.size() != static_cast<size_t>(n + 1))
        throw std::invalid_argument("expected n+1 exponents");
    auto euler = std::find(exps.begin(), exps.end(), 1);
    if (euler != exps.end()) {
        exps.erase(euler);
    } else if (std::all_of(exps.begin(), exps.end(), [](int d) { return d == 0; })) {
        // empty divisor: the module is all of Der and the Euler subsheaf is
        // trivial, so every factor survives and the product is c(TP^n)
    } else {
        throw std::invalid_argument("exponent multiset lacks the Euler degree 1");
    }

    ChowClass result(n);
    result.coeffs[0] = 1;
    for (int d : exps) {
        ChowClass factor(n);
        factor.coeffs[0] = 1;
        factor.coeffs[1] = Rational(1 - d);
        result = result * factor;
    }
    return result;
}

ChowClass chern_logderiv_curve(int k) {
    if (k < 0) throw std::invalid_argument("point count must be nonnegative");
    ChowClass c(1);
    c.coeffs[0] = 1;
    c.coeffs[1] = Rational(2 - k);
    return c;
}

std::string to_string(const ChowClass& c) {
    std::string s;
    for (int j = 0; j <= c.n; ++j) {
        Rational a = c.coeffs[static_cast<size_t>(j)];
        if (!s.empty()) {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        s += to_string(a);
        if (j >= 1) s += " h";
        if (j >= 2) s += "^" + std::to_string(j);
    }
    return s;
}

} // namespace logdiv
