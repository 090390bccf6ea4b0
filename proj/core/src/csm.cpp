#include <logdiv/csm.hpp>

#include <stdexcept>

namespace logdiv {

ChowClass csm_linear_subspace(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("subspace dimension out of range");
    ChowClass c(n);
    for (int i = 0; i <= k; ++i)
        c.coeffs[static_cast<size_t>(n - k + i)] = Rational(binomial(k + 1, i));
    return c;
}

ChowClass csm_arrangement_complement(const IntersectionLattice& L) {
    std::vector<BigInt> m = indicator_coefficients(L);
    ChowClass total(L.n);
    for (size_t x = 0; x < L.flats.size(); ++x) {
        const Flat& flat = L.flats[x];
        if (flat.rank > L.n || m[x] == 0) continue;
        total = total + csm_linear_subspace(flat.pdim(L.n), L.n) * Rational(m[x]);
    }
    return total;
}

UniPoly reduced_charpoly(const UniPoly& chi) {
    // Synthetic division by (t - 1); remainder is chi(1).
    UniPoly quotient(chi.size() > 1 ? chi.size() - 1 : 0, BigInt(0));
    BigInt carry = 0;
    for (size_t k = chi.size(); k-- > 0;) {
        BigInt value = chi[k] + carry;
        if (k == 0) {
            if (value != 0)
                throw std::invalid_argument("characteristic polynomial not divisible by t-1");
        } else {
            quotient[k - 1] = value;
            carry = value;
        }
    }
    return quotient;
}

ChowClass csm_from_charpoly(const UniPoly& chi, int n) {
    UniPoly bar = reduced_charpoly(chi);
    if (static_cast<int>(bar.size()) > n + 1)
        throw std::invalid_argument("reduced characteristic polynomial degree exceeds n");

    ChowClass total(n);
    for (size_t k = 0; k < bar.size(); ++k) {
        if (bar[k] == 0) continue;
        // c_k t^k contributes c_k (1+h)^k h^{n-k}.
        ChowClass term(n);
        for (size_t i = 0; i <= k; ++i) {
            size_t power = static_cast<size_t>(n) - k + i;
            if (power <= static_cast<size_t>(n))
                term.coeffs[power] = Rational(binomial(static_cast<int>(k), static_cast<int>(i)));
        }
        total = total + term * Rational(bar[k]);
    }
    return total;
}

long long curve_euler_characteristic(const CurveSingularityData& data) {
    if (data.degree < 1) throw std::invalid_argument("curve degree must be positive");
    long long chi = 3LL * data.degree - 1LL * data.degree * data.degree;
    for (const CurveSingularPoint& p : data.points) chi += p.milnor;
    return chi;
}

ChowClass csm_curve_complement(const CurveSingularityData& data) {
    long long chi_curve = curve_euler_characteristic(data);
    ChowClass c(2);
    c.coeffs[0] = 1;
    c.coeffs[1] = Rational(3 - data.degree);
    c.coeffs[2] = Rational(3 - chi_curve);
    return c;
}

} // namespace logdiv
