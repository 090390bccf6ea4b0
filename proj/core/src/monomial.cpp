#include <logdiv/monomial.hpp>

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace logdiv {

long long Monomial::weighted_degree(const std::vector<int>& weights) const {
    assert(weights.size() == exps.size());
    long long d = 0;
    for (size_t i = 0; i < exps.size(); ++i) d += static_cast<long long>(weights[i]) * exps[i];
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    assert(nvars() == other.nvars());
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > other.exps[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    assert(nvars() == other.nvars());
    Monomial r = *this;
    for (size_t i = 0; i < exps.size(); ++i) r.exps[i] += other.exps[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    assert(other.divides(*this));
    Monomial r = *this;
    for (size_t i = 0; i < exps.size(); ++i) r.exps[i] -= other.exps[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r = a;
    for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r = a;
    for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::min(a.exps[i], b.exps[i]);
    return r;
}

Monomial Monomial::var(int i, int nvars, int power) {
    Monomial m(nvars);
    m.exps[static_cast<size_t>(i)] = power;
    return m;
}

bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
    assert(a.nvars() == b.nvars());
    if (order == MonomialOrder::lex) {
        for (size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
        return false;
    }
    // grevlex: compare total degree, then the last differing exponent
    // with reversed sense.
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (size_t i = a.exps.size(); i-- > 0;)
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    return false;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    if (nvars <= 0 || degree < 0) {
        if (degree == 0 && nvars == 0) return {Monomial(0)};
        if (nvars <= 0) return {};
    }
    std::vector<Monomial> out;
    Monomial m(nvars);
    // Recursive enumeration, then sorted to the canonical order.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            m.exps[static_cast<size_t>(var)] = remaining;
            out.push_back(m);
            m.exps[static_cast<size_t>(var)] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            m.exps[static_cast<size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
        m.exps[static_cast<size_t>(var)] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(),
              [](const Monomial& x, const Monomial& y) { return grevlex_less(y, x); });
    return out;
}

std::string variable_name(int i) { return "x" + std::to_string(i); }

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        int e = m.exps[static_cast<size_t>(i)];
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += variable_name(i);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace logdiv
