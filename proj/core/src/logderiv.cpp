#include <logdiv/logderiv.hpp>

#include <logdiv/linalg.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace logdiv {

int Derivation::degree() const {
    int d = -1;
    for (const Poly& a : coefficients) d = std::max(d, a.degree());
    return d;
}

bool Derivation::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(),
                       [](const Poly& a) { return a.is_zero(); });
}

Poly apply(const Derivation& theta, const Poly& f) {
    if (static_cast<int>(theta.coefficients.size()) != f.nvars())
        throw std::invalid_argument("derivation/polynomial variable mismatch");
    Poly total(f.nvars());
    for (int i = 0; i < f.nvars(); ++i)
        total = total + theta.coefficients[static_cast<size_t>(i)] * partial_derivative(f, i);
    return total;
}

Derivation euler_derivation(int nvars) {
    Derivation e;
    for (int i = 0; i < nvars; ++i) e.coefficients.push_back(Poly::variable(i, nvars));
    return e;
}

void validate_divisor(const DivisorSpec& D) {
    if (D.n < 1) throw std::invalid_argument("ambient dimension must be at least 1");
    if (D.f.is_zero() || D.f.nvars() != D.n + 1)
        throw std::invalid_argument("divisor equation must be nonzero in n+1 variables");
    // a nonzero constant is the empty divisor
    if (!D.f.is_homogeneous())
        throw std::invalid_argument("divisor equation must be homogeneous");
    if (!D.arrangement_forms.empty()) {
        Poly prod = Poly::constant(D.n + 1, 1);
        for (const Poly& form : D.arrangement_forms) {
            if (form.nvars() != D.n + 1 || form.is_zero() || form.degree() != 1 ||
                !form.is_homogeneous())
                throw std::invalid_argument("arrangement forms must be linear in n+1 variables");
            prod = prod * form;
        }
        Rational scale = D.f.leading_term().second / prod.leading_term().second;
        if (prod * scale != D.f)
            throw std::invalid_argument("arrangement forms do not multiply to the equation");
    }
}

namespace {

struct GrevlexDescCmp {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

using MonomialIndex = std::map<Monomial, size_t, GrevlexDescCmp>;

MonomialIndex index_of(const std::vector<Monomial>& mons) {
    MonomialIndex idx;
    for (size_t k = 0; k < mons.size(); ++k) idx.emplace(mons[k], k);
    return idx;
}

/// Coordinates of a graded derivation of degree d in the layout
/// [a_0 over amons | a_1 over amons | ...]; amons is descending grevlex.
QVector derivation_coordinates(const std::vector<Poly>& coeffs, const MonomialIndex& aidx,
                               size_t awidth) {
    QVector v(coeffs.size() * awidth, Rational(0));
    for (size_t i = 0; i < coeffs.size(); ++i)
        for (const auto& [m, c] : coeffs[i].terms()) v[i * awidth + aidx.at(m)] = c;
    return v;
}

/// New minimal generators in degree d: the null space of the graded
/// condition sum_i a_i d_i f - b f = 0, reduced modulo monomial multiples of
/// the lower-degree generators.
std::vector<Derivation> degree_step(const Poly& f, int d, const std::vector<Derivation>& lower) {
    int nvars = f.nvars();
    int degf = f.degree();

    std::vector<Monomial> amons = monomials_of_degree(nvars, d);
    std::vector<Monomial> bmons =
        d >= 1 ? monomials_of_degree(nvars, d - 1) : std::vector<Monomial>{};
    std::vector<Monomial> eqmons = monomials_of_degree(nvars, d + degf - 1);
    MonomialIndex aidx = index_of(amons);
    MonomialIndex eqidx = index_of(eqmons);

    size_t awidth = amons.size();
    size_t acols = static_cast<size_t>(nvars) * awidth;
    QMatrix system(eqmons.size(), acols + bmons.size());

    std::vector<Poly> partials;
    for (int i = 0; i < nvars; ++i) partials.push_back(partial_derivative(f, i));

    size_t col = 0;
    for (int i = 0; i < nvars; ++i)
        for (const Monomial& m : amons) {
            Poly p = Poly::monomial(m, Rational(1)) * partials[static_cast<size_t>(i)];
            for (const auto& [mon, c] : p.terms()) system.at(eqidx.at(mon), col) = c;
            ++col;
        }
    for (const Monomial& m : bmons) {
        Poly p = Poly::monomial(m, Rational(1)) * f;
        for (const auto& [mon, c] : p.terms()) system.at(eqidx.at(mon), col) = -c;
        ++col;
    }

    std::vector<QVector> solutions = system.nullspace();

    RowSpan span(acols);
    for (const Derivation& theta : lower) {
        int k = d - theta.degree();
        if (k < 0) continue;
        for (const Monomial& m : monomials_of_degree(nvars, k)) {
            std::vector<Poly> shifted;
            for (const Poly& a : theta.coefficients)
                shifted.push_back(Poly::monomial(m, Rational(1)) * a);
            span.add(derivation_coordinates(shifted, aidx, awidth));
        }
    }

    std::vector<Derivation> fresh;
    for (const QVector& sol : solutions) {
        QVector u(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(acols));
        u = span.reduce(std::move(u));
        if (is_zero_vector(u)) continue;
        span.add(u);

        size_t lead = 0;
        while (u[lead] == 0) ++lead;
        Rational inv = Rational(1) / u[lead];

        Derivation theta;
        for (int i = 0; i < nvars; ++i) {
            Poly a(nvars);
            for (size_t k = 0; k < awidth; ++k) {
                const Rational& c = u[static_cast<size_t>(i) * awidth + k];
                if (c != 0) a.add_term(amons[k], c * inv);
            }
            theta.coefficients.push_back(std::move(a));
        }
        fresh.push_back(std::move(theta));
    }
    return fresh;
}

} // namespace

std::vector<Derivation> logderiv_generators(const DivisorSpec& D, int degree_bound) {
    validate_divisor(D);
    if (degree_bound < 0) degree_bound = D.f.degree();
    std::vector<Derivation> gens;
    for (int d = 0; d <= degree_bound; ++d) {
        std::vector<Derivation> fresh = degree_step(D.f, d, gens);
        gens.insert(gens.end(), std::make_move_iterator(fresh.begin()),
                    std::make_move_iterator(fresh.end()));
    }
    return gens;
}

Poly determinant(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix not square");
    int nvars = m[0][0].nvars();
    if (n == 1) return m[0][0];

    Poly det(nvars);
    int sign = 1;
    for (size_t j = 0; j < n; ++j) {
        if (!m[0][j].is_zero()) {
            std::vector<std::vector<Poly>> minor;
            for (size_t r = 1; r < n; ++r) {
                std::vector<Poly> row;
                for (size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Poly cofactor = m[0][j] * determinant(minor);
            det = sign > 0 ? det + cofactor : det - cofactor;
        }
        sign = -sign;
    }
    return det;
}

FreenessCertificate saito_check(const std::vector<Derivation>& candidates, const DivisorSpec& D) {
    FreenessCertificate cert;
    size_t nvars = static_cast<size_t>(D.n + 1);
    if (candidates.size() != nvars) {
        cert.failure = "need exactly " + std::to_string(nvars) + " candidate derivations";
        return cert;
    }
    for (size_t k = 0; k < candidates.size(); ++k) {
        if (candidates[k].coefficients.size() != nvars) {
            cert.failure = "candidate " + std::to_string(k) + " has wrong coefficient count";
            return cert;
        }
        Poly image = apply(candidates[k], D.f);
        if (!normal_form(image, {D.f}, MonomialOrder::grevlex).is_zero()) {
            cert.failure = "candidate " + std::to_string(k) + " is not logarithmic";
            return cert;
        }
    }

    std::vector<std::vector<Poly>> matrix;
    for (const Derivation& theta : candidates) matrix.push_back(theta.coefficients);
    Poly det = determinant(matrix);
    if (det.is_zero()) {
        cert.failure = "coefficient determinant vanishes";
        return cert;
    }
    Rational scale = det.leading_term().second / D.f.leading_term().second;
    if (det != D.f * scale) {
        cert.failure = "coefficient determinant is not a scalar multiple of the equation";
        return cert;
    }

    cert.is_free = true;
    cert.basis = candidates;
    cert.saito_scalar = scale;
    for (const Derivation& theta : candidates) cert.exponents.push_back(theta.degree());
    std::sort(cert.exponents.begin(), cert.exponents.end());

    long long sum = 0;
    for (int e : cert.exponents) sum += e;
    if (sum != D.f.degree()) {
        cert = FreenessCertificate{};
        cert.failure = "exponent sum disagrees with the divisor degree";
    }
    return cert;
}

ExponentsResult exponents(const DivisorSpec& D, int degree_bound) {
    validate_divisor(D);
    ExponentsResult res;
    int degf = D.f.degree();
    int bound = degree_bound < 0 ? degf : degree_bound;
    res.degree_bound = bound;
    size_t rank = static_cast<size_t>(D.n + 1);

    std::vector<Derivation> gens;
    std::string saito_failure;
    for (int d = 0; d <= bound; ++d) {
        std::vector<Derivation> fresh = degree_step(D.f, d, gens);
        gens.insert(gens.end(), std::make_move_iterator(fresh.begin()),
                    std::make_move_iterator(fresh.end()));
        if (gens.size() > rank) {
            res.status = FreenessStatus::not_free;
            res.generator_count = gens.size();
            res.note = std::to_string(gens.size()) + " minimal generators in degrees <= " +
                       std::to_string(d) + " exceed the rank " + std::to_string(rank);
            return res;
        }
        if (gens.size() == rank && !fresh.empty()) {
            FreenessCertificate cert = saito_check(gens, D);
            if (cert.is_free) {
                // Saito's criterion certifies the n+1 generators are a basis,
                // so no further generators can appear: stop early.
                res.status = FreenessStatus::free_divisor;
                res.exponents = cert.exponents;
                res.generator_count = gens.size();
                res.certificate = std::move(cert);
                return res;
            }
            saito_failure = cert.failure;
        }
    }

    res.generator_count = gens.size();
    if (bound < degf) {
        res.status = FreenessStatus::inconclusive;
        res.note = "incomplete below bound: " + std::to_string(gens.size()) +
                   " generators in degrees <= " + std::to_string(bound) +
                   "; a free basis may extend past the bound (needs " + std::to_string(degf) + ")";
        return res;
    }
    res.status = FreenessStatus::not_free;
    if (gens.size() == rank)
        res.note = "n+1 minimal generators but the determinant criterion fails: " + saito_failure;
    else
        res.note = "only " + std::to_string(gens.size()) +
                   " minimal generators in degrees <= " + std::to_string(bound);
    return res;
}

std::string to_string(const Derivation& theta) {
    std::string s;
    for (size_t i = 0; i < theta.coefficients.size(); ++i) {
        const Poly& a = theta.coefficients[i];
        if (a.is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string body = to_string(a);
        if (a.term_count() > 1)
            s += "(" + body + ")";
        else
            s += body;
        s += "*d" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

} // namespace logdiv
