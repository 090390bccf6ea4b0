#include <logdiv/singular.hpp>

#include <logdiv/arrangement.hpp>
#include <logdiv/linalg.hpp>
#include <logdiv/logderiv.hpp>

#include <algorithm>
#include <stdexcept>

namespace logdiv {

namespace {

constexpr long long kTruncationCap = 64;

/// Bezout bound on the local multiplicity of an isolated origin: k generic
/// combinations of the generators cut it out with multiplicity at most
/// (max degree)^k, so the truncated dimensions stabilize by that order + 1.
long long isolation_bound(const std::vector<Poly>& gens, int nvars) {
    long long dmax = 1;
    for (const Poly& g : gens) dmax = std::max<long long>(dmax, g.degree());
    long long bound = 1;
    for (int i = 0; i < nvars; ++i) {
        bound *= dmax;
        if (bound > 1000000) return 1000001;
    }
    return bound + 1;
}

std::vector<Poly> jacobian(const Poly& g) {
    std::vector<Poly> J;
    for (int i = 0; i < g.nvars(); ++i) J.push_back(partial_derivative(g, i));
    return J;
}

bool vanishes_at_origin(const Poly& p) {
    return p.eval(std::vector<Rational>(static_cast<size_t>(p.nvars()), Rational(0))) == 0;
}

/// Local vector-space dimension of R/I at the origin: dimensions of the
/// truncations R/(I + m^N) grow to the local dimension and two equal
/// consecutive values certify stabilization (Nakayama).
LocalNumber local_dimension(std::vector<Poly> gens, int nvars, const GroebnerOptions& opts) {
    LocalNumber out;
    try {
        // Fast path: if the whole zero locus already sits at the origin, the
        // global quotient is the local one.
        std::vector<Poly> gb = groebner_basis(gens, opts);
        long long global = quotient_dimension(gb, opts.order);
        if (global >= 0 && vanishes_only_at_origin(gb, opts.order)) {
            out.status = LocalStatus::ok;
            out.value = global;
            return out;
        }

        long long previous = -1;
        long long bound = isolation_bound(gens, nvars);
        for (long long N = 1; N <= std::min(bound, kTruncationCap); ++N) {
            std::vector<Poly> truncated = gens;
            for (const Monomial& m : monomials_of_degree(nvars, static_cast<int>(N)))
                truncated.push_back(Poly::monomial(m, Rational(1)));
            long long d = quotient_dimension(groebner_basis(truncated, opts), opts.order);
            if (d == previous) {
                out.status = LocalStatus::ok;
                out.value = d;
                return out;
            }
            previous = d;
        }
        if (bound <= kTruncationCap) {
            out.status = LocalStatus::not_isolated;
            out.note = "no stabilization within the Bezout multiplicity bound " +
                       std::to_string(bound) + "; the locus is positive-dimensional at the origin";
        } else {
            out.status = LocalStatus::inconclusive;
            out.note = "truncated dimensions still growing at order " +
                       std::to_string(kTruncationCap) +
                       ", below the certification bound " + std::to_string(bound);
        }
    } catch (const BudgetExceeded& e) {
        out.status = LocalStatus::inconclusive;
        out.note = e.what();
    }
    return out;
}

} // namespace

LocalNumber milnor_number(const GermSpec& germ, const GroebnerOptions& opts) {
    if (germ.g.is_zero() || !vanishes_at_origin(germ.g))
        throw std::invalid_argument("germ must be nonzero and vanish at the origin");
    return local_dimension(jacobian(germ.g), germ.g.nvars(), opts);
}

LocalNumber tjurina_number(const GermSpec& germ, const GroebnerOptions& opts) {
    if (germ.g.is_zero() || !vanishes_at_origin(germ.g))
        throw std::invalid_argument("germ must be nonzero and vanish at the origin");
    std::vector<Poly> gens = jacobian(germ.g);
    gens.insert(gens.begin(), germ.g);
    return local_dimension(std::move(gens), germ.g.nvars(), opts);
}

QhReport quasihomogeneity_test(const GermSpec& germ, const GroebnerOptions& opts) {
    QhReport report;
    if (germ.g.is_zero() || !vanishes_at_origin(germ.g))
        throw std::invalid_argument("germ must be nonzero and vanish at the origin");
    for (const Poly& dg : jacobian(germ.g)) {
        if (!vanishes_at_origin(dg)) {
            report.status = QhStatus::not_singular;
            report.note = "the origin is a smooth point of the germ";
            return report;
        }
    }
    report.milnor = milnor_number(germ, opts);
    report.tjurina = tjurina_number(germ, opts);
    if (report.milnor.status != LocalStatus::ok || report.tjurina.status != LocalStatus::ok) {
        report.status = QhStatus::inconclusive;
        if (report.milnor.status == LocalStatus::not_isolated) {
            report.note = "the singularity is not isolated; the mu = tau criterion "
                          "applies only to isolated singularities";
        } else {
            report.note = "local dimensions not certified: " + report.milnor.note;
            if (!report.tjurina.note.empty() && report.tjurina.note != report.milnor.note)
                report.note += "; " + report.tjurina.note;
        }
        return report;
    }
    if (report.milnor.value < report.tjurina.value) {
        report.status = QhStatus::inconclusive;
        report.note = "mu < tau contradicts the expected inequality; computation suspect";
        return report;
    }
    report.status = report.milnor.value == report.tjurina.value ? QhStatus::quasihomogeneous
                                                                : QhStatus::not_quasihomogeneous;
    return report;
}

GermSpec germ_at(const Poly& f, std::vector<Rational> point) {
    int chart = -1;
    for (size_t i = 0; i < point.size(); ++i)
        if (point[i] != 0) chart = static_cast<int>(i);
    if (chart < 0) throw std::invalid_argument("germ_at: zero point");
    if (f.eval(point) != 0)
        throw std::invalid_argument("germ_at: point is not on the divisor");
    Rational scale = point[static_cast<size_t>(chart)];
    for (auto& c : point) c = c / scale;
    Poly g = f.dehomogenize(chart);
    std::vector<Rational> affine;
    for (size_t i = 0; i < point.size(); ++i)
        if (static_cast<int>(i) != chart) affine.push_back(point[i]);
    return GermSpec{g.translate(affine)};
}

bool triviality_membership(const Poly& h, const std::vector<int>& x_vars,
                           const std::vector<int>& y_vars, const GroebnerOptions& opts) {
    std::vector<bool> seen(static_cast<size_t>(h.nvars()), false);
    for (int v : x_vars) {
        if (v < 0 || v >= h.nvars() || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("x_vars must be distinct variable indices");
        seen[static_cast<size_t>(v)] = true;
    }
    for (int v : y_vars) {
        if (v < 0 || v >= h.nvars() || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("variable sets must partition the variables");
        seen[static_cast<size_t>(v)] = true;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw std::invalid_argument("variable sets must cover all variables");

    std::vector<Poly> gens{h};
    for (int v : x_vars) gens.push_back(partial_derivative(h, v));
    std::vector<Poly> gb = groebner_basis(gens, opts);
    return std::all_of(y_vars.begin(), y_vars.end(), [&](int v) {
        return ideal_membership(partial_derivative(h, v), gb, opts.order);
    });
}

bool triviality_zero_certificate(const Poly& h, const GroebnerOptions& opts) {
    for (int y = 0; y < h.nvars(); ++y) {
        std::vector<int> x_vars;
        for (int v = 0; v < h.nvars(); ++v)
            if (v != y) x_vars.push_back(v);
        if (triviality_membership(h, x_vars, {y}, opts)) return false;
    }
    return true;
}

namespace {

/// Rows = values at p of the graded logarithmic fields up to the bound.
QMatrix evaluated_log_fields(const Poly& f, const std::vector<Rational>& p, int degree_bound) {
    DivisorSpec D;
    D.n = f.nvars() - 1;
    D.f = f;
    std::vector<Derivation> gens = logderiv_generators(D, degree_bound);
    QMatrix values(0, static_cast<size_t>(f.nvars()));
    for (const Derivation& theta : gens) {
        QVector row;
        for (const Poly& a : theta.coefficients) row.push_back(a.eval(p));
        values.append_row(std::move(row));
    }
    return values;
}

} // namespace

long long triviality_index_lower_bound(const Poly& f, const std::vector<Rational>& p,
                                       int degree_bound) {
    if (static_cast<int>(p.size()) != f.nvars())
        throw std::invalid_argument("point has wrong coordinate count");
    if (f.eval(p) != 0) throw std::invalid_argument("point does not lie on the divisor");
    return static_cast<long long>(evaluated_log_fields(f, p, degree_bound).rank());
}

TransversalityReport transversality_check(const Poly& f, const std::vector<Rational>& p,
                                          const Poly& H, int degree_bound,
                                          const GroebnerOptions& opts) {
    TransversalityReport report;
    if (static_cast<int>(p.size()) != f.nvars())
        throw std::invalid_argument("point has wrong coordinate count");
    if (f.eval(p) != 0 || H.eval(p) != 0)
        throw std::invalid_argument("point must lie on both the divisor and the hyperplane");
    QVector dH = linear_form_covector(H);

    QVector gradient;
    for (int i = 0; i < f.nvars(); ++i) gradient.push_back(partial_derivative(f, i).eval(p));
    if (!is_zero_vector(gradient)) {
        // Smooth point: the stratum tangent is exactly ker(df_p).
        RowSpan span(static_cast<size_t>(f.nvars()));
        span.add(gradient);
        bool proportional = !span.add(dH);
        report.verdict = proportional ? Transversality::not_transversal
                                      : Transversality::transversal;
        report.note = proportional ? "hyperplane is tangent at a smooth point"
                                   : "smooth point with independent conormals";
        return report;
    }

    QMatrix values = evaluated_log_fields(f, p, degree_bound);
    for (size_t r = 0; r < values.rows(); ++r) {
        Rational pairing(0);
        for (size_t j = 0; j < dH.size(); ++j) pairing += values.at(r, j) * dH[j];
        if (pairing != 0) {
            report.verdict = Transversality::transversal;
            report.note = "an evaluated logarithmic field leaves the hyperplane";
            return report;
        }
    }

    bool at_origin = std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
    if (at_origin && triviality_zero_certificate(f, opts)) {
        report.verdict = Transversality::not_transversal;
        report.note = "stratum tangent is zero at the origin; no hyperplane can be transversal";
        return report;
    }
    report.verdict = Transversality::inconclusive;
    report.note = "evaluated fields up to the degree bound stay inside the hyperplane";
    return report;
}

Poly restrict_to_hyperplane(const Poly& f, const Poly& H, int chart) {
    if (H.nvars() != f.nvars())
        throw std::invalid_argument("hyperplane/divisor variable mismatch");
    QVector c = linear_form_covector(H);
    if (chart < 0 || chart >= f.nvars() || c[static_cast<size_t>(chart)] == 0)
        throw std::invalid_argument("chart variable must appear in the hyperplane");

    int target = f.nvars() - 1;
    std::vector<Poly> images;
    int k = 0;
    for (int i = 0; i < f.nvars(); ++i)
        images.push_back(i == chart ? Poly::zero(target) : Poly::variable(k++, target));
    // x_chart = -(1/c_chart) * sum of the other terms of H
    Poly sub(target);
    k = 0;
    for (int i = 0; i < f.nvars(); ++i) {
        if (i == chart) continue;
        sub = sub + Poly::variable(k++, target) * (-c[static_cast<size_t>(i)] / c[static_cast<size_t>(chart)]);
    }
    images[static_cast<size_t>(chart)] = sub;
    return f.substitute(images);
}

BertiniReport bertini_schematic_check(const Poly& f, const Poly& H, int chart,
                                      const GroebnerOptions& opts) {
    BertiniReport report;
    Poly g = restrict_to_hyperplane(f, H, chart);
    if (g.is_zero() || g.is_constant()) {
        report.status = BertiniStatus::degenerate;
        report.note = "restriction collapses to a constant";
        return report;
    }
    try {
        if (!is_reduced(g, opts)) {
            report.status = BertiniStatus::degenerate;
            report.note = "restriction is not reduced";
            return report;
        }
        std::vector<Poly> restricted_singular{g};
        for (int i = 0; i < f.nvars(); ++i)
            restricted_singular.push_back(restrict_to_hyperplane(partial_derivative(f, i), H, chart));
        std::vector<Poly> section_singular{g};
        for (int j = 0; j < g.nvars(); ++j) section_singular.push_back(partial_derivative(g, j));

        // Subscheme equality inside the section: the homogeneous ideals may
        // differ by irrelevant components, so compare their dehomogenizations
        // in every affine chart instead.
        bool equal = true;
        std::string where;
        for (int j = 0; j < g.nvars() && equal; ++j) {
            std::vector<Poly> a, b;
            for (const Poly& p : restricted_singular) a.push_back(p.dehomogenize(j));
            for (const Poly& p : section_singular) b.push_back(p.dehomogenize(j));
            if (!ideal_equal(a, b, opts)) {
                equal = false;
                where = "x" + std::to_string(j) + " = 1";
            }
        }
        report.status = equal ? BertiniStatus::equal : BertiniStatus::not_equal;
        report.note = equal ? "singular subschemes agree in every affine chart of the section"
                            : "singular subschemes differ in the chart " + where;
    } catch (const BudgetExceeded& e) {
        report.status = BertiniStatus::inconclusive;
        report.note = e.what();
    }
    return report;
}

} // namespace logdiv
