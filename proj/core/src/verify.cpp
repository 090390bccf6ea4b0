#include <logdiv/verify.hpp>

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace logdiv {

namespace {

using nlohmann::json;

json rational_json(const Rational& q) {
    if (is_integer(q)) {
        const BigInt& num = numerator(q);
        if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max())
            return json(num.convert_to<long long>());
    }
    return json(to_string(q));
}

json class_json(const ChowClass& c) {
    json j;
    j["n"] = c.n;
    json coeffs = json::array();
    for (const auto& a : c.coeffs) coeffs.push_back(rational_json(a));
    j["coeffs"] = std::move(coeffs);
    json degs = json::array();
    for (int i = 0; i <= c.n; ++i) degs.push_back(rational_json(c.degree(i)));
    j["degrees"] = std::move(degs);
    return j;
}

json freeness_json(const ExponentsResult& r) {
    json j;
    j["status"] = to_string(r.status);
    j["generator_count"] = r.generator_count;
    j["degree_bound"] = r.degree_bound;
    j["note"] = r.note;
    json exps = json::array();
    for (int e : r.exponents) exps.push_back(e);
    j["exponents"] = std::move(exps);
    if (r.status == FreenessStatus::free_divisor)
        j["saito_scalar"] = rational_json(r.certificate.saito_scalar);
    return j;
}

json local_number_json(const LocalNumber& v) {
    json j;
    switch (v.status) {
        case LocalStatus::ok: j["value"] = v.value; break;
        case LocalStatus::not_isolated: j["value"] = "infinite"; break;
        case LocalStatus::inconclusive: j["value"] = nullptr; break;
    }
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json qh_json(const QhSummary& q) {
    json j;
    json pt = json::array();
    for (const auto& c : q.point) pt.push_back(rational_json(c));
    j["point"] = std::move(pt);
    j["status"] = to_string(q.report.status);
    j["milnor"] = local_number_json(q.report.milnor);
    j["tjurina"] = local_number_json(q.report.tjurina);
    if (q.declared_milnor >= 0) j["declared_milnor"] = q.declared_milnor;
    if (!q.report.note.empty()) j["note"] = q.report.note;
    return j;
}

std::string point_string(const std::vector<Rational>& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += to_string(p[i]);
    }
    return out + ")";
}

std::string local_number_string(const LocalNumber& v) {
    switch (v.status) {
        case LocalStatus::ok: return std::to_string(v.value);
        case LocalStatus::not_isolated: return "infinite";
        default: return "?";
    }
}

std::string exponents_string(const std::vector<int>& exps) {
    std::string out = "{";
    for (size_t i = 0; i < exps.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(exps[i]);
    }
    return out + "}";
}

std::string degrees_string(const ChowClass& c) {
    std::string out = "[";
    for (int i = 0; i <= c.n; ++i) {
        if (i) out += ", ";
        out += to_string(c.degree(i));
    }
    return out + "]";
}

struct CsmSide {
    bool available = false;
    ChowClass cls;
    std::string route;
    bool charpoly_checked = false;
    bool charpoly_agrees = false;
    std::vector<QhSummary> qh;
    bool qh_violated = false;
    bool data_fail = false;
    bool have_chi = false;
    long long chi_complement = 0;
    std::vector<std::string> notes;
};

CsmSide compute_csm_side(const DivisorInput& input, const VerifyOptions& opts) {
    CsmSide s;
    const DivisorSpec& D = input.spec;
    const int n = D.n;
    if (D.f.degree() == 0) {
        s.cls = csm_linear_subspace(n, n);
        s.route = "empty";
        s.available = true;
        return s;
    }
    if (!D.arrangement_forms.empty()) {
        IntersectionLattice L = intersection_lattice(D.arrangement_forms, n);
        s.cls = csm_arrangement_complement(L);
        s.route = "lattice";
        s.available = true;
        ChowClass cross = csm_from_charpoly(characteristic_polynomial(L), n);
        s.charpoly_checked = true;
        s.charpoly_agrees = (cross == s.cls);
        if (!s.charpoly_agrees)
            s.notes.push_back("lattice and characteristic-polynomial routes disagree: " +
                              to_string(s.cls) + " vs " + to_string(cross));
        return s;
    }
    if (n == 1) {
        s.cls = ChowClass(1, {Rational(1), Rational(2 - D.f.degree())});
        s.route = "points";
        s.available = true;
        return s;
    }
    if (n == 2) {
        if (!input.has_singular_data) {
            s.notes.push_back(
                "no singular-point data: the curve route needs the singular points");
            return s;
        }
        CurveSingularityData data;
        data.degree = D.f.degree();
        bool any_inconclusive = false;
        for (const auto& sp : input.singular_points) {
            QhSummary summary;
            summary.point = sp.point;
            summary.declared_milnor = sp.milnor;
            if (sp.point.size() != 3) {
                s.data_fail = true;
                s.notes.push_back("singular point record has the wrong coordinate count");
                s.qh.push_back(std::move(summary));
                continue;
            }
            if (D.f.eval(sp.point) != 0) {
                s.data_fail = true;
                s.notes.push_back("declared singular point " + point_string(sp.point) +
                                  " does not lie on the curve");
                s.qh.push_back(std::move(summary));
                continue;
            }
            summary.report = quasihomogeneity_test(germ_at(D.f, sp.point), opts.groebner);
            switch (summary.report.status) {
                case QhStatus::not_singular:
                    s.data_fail = true;
                    s.notes.push_back("declared singular point " + point_string(sp.point) +
                                      " is a smooth point of the curve");
                    break;
                case QhStatus::inconclusive:
                    any_inconclusive = true;
                    break;
                case QhStatus::not_quasihomogeneous:
                    s.qh_violated = true;
                    break;
                case QhStatus::quasihomogeneous:
                    break;
            }
            if (summary.report.milnor.status == LocalStatus::ok &&
                summary.report.status != QhStatus::not_singular) {
                if (sp.milnor >= 0 && sp.milnor != summary.report.milnor.value) {
                    s.data_fail = true;
                    s.notes.push_back("declared Milnor number " + std::to_string(sp.milnor) +
                                      " at " + point_string(sp.point) +
                                      " disagrees with the computed value " +
                                      std::to_string(summary.report.milnor.value));
                }
                data.points.push_back({sp.point, summary.report.milnor.value});
            } else if (summary.report.status == QhStatus::not_quasihomogeneous ||
                       summary.report.status == QhStatus::quasihomogeneous) {
                any_inconclusive = true;
            }
            s.qh.push_back(std::move(summary));
        }
        if (s.data_fail) return s;
        if (any_inconclusive) {
            s.notes.push_back("a local Milnor/Tjurina computation did not stabilize");
            return s;
        }
        s.have_chi = true;
        s.chi_complement = 3 - curve_euler_characteristic(data);
        if (s.qh_violated) {
            s.notes.push_back(
                "a singular point is not quasi-homogeneous (mu > tau); the curve CSM route "
                "requires quasi-homogeneous singularities, so only the Euler characteristics "
                "are compared");
            return s;
        }
        s.cls = csm_curve_complement(data);
        s.route = "curve";
        s.available = true;
        return s;
    }
    s.notes.push_back("no CSM route for a non-arrangement divisor in P^" + std::to_string(n));
    return s;
}

int chart_for(const Poly& H) {
    QVector cov = linear_form_covector(H);
    for (size_t i = 0; i < cov.size(); ++i)
        if (cov[i] != 0) return static_cast<int>(i);
    return -1;
}

struct SectionSample {
    bool ok = false;
    Poly hyperplane;
    DivisorInput section;
    std::vector<std::string> log;
};

/// Draws hyperplanes until one misses every proper flat of an arrangement
/// (combinatorial genericity) or, for other divisors, restricts to a reduced
/// equation of full degree. Gives up after ten draws.
SectionSample sample_section(const DivisorInput& input, std::mt19937_64& rng,
                             const GroebnerOptions& gopts) {
    SectionSample out;
    const DivisorSpec& D = input.spec;
    const int nv = D.n + 1;
    std::vector<RowSpan> flat_spans;
    if (!D.arrangement_forms.empty()) {
        IntersectionLattice L = intersection_lattice(D.arrangement_forms, D.n);
        for (const Flat& fl : L.flats) {
            if (fl.rank < 1 || fl.rank > D.n) continue;
            RowSpan span(static_cast<size_t>(nv));
            for (const auto& row : fl.basis) span.add(row);
            flat_spans.push_back(std::move(span));
        }
    }
    for (int attempt = 0; attempt < 10; ++attempt) {
        Poly H = sample_hyperplane(nv, rng);
        QVector cov = linear_form_covector(H);
        if (!flat_spans.empty()) {
            bool meets_flat = false;
            for (const auto& span : flat_spans)
                if (span.contains(cov)) { meets_flat = true; break; }
            if (meets_flat) {
                out.log.push_back("rejected sample " + to_string(H) +
                                  ": the hyperplane contains a flat of the arrangement");
                continue;
            }
        }
        int chart = chart_for(H);
        Poly g = restrict_to_hyperplane(D.f, H, chart);
        if (g.degree() != D.f.degree()) {
            out.log.push_back("rejected sample " + to_string(H) + ": degenerate restriction");
            continue;
        }
        DivisorInput sec;
        sec.id = input.id + "|section";
        sec.spec.n = D.n - 1;
        sec.spec.f = g;
        if (!D.arrangement_forms.empty()) {
            for (const auto& form : D.arrangement_forms)
                sec.spec.arrangement_forms.push_back(restrict_to_hyperplane(form, H, chart));
        } else if (!is_reduced(g, gopts)) {
            out.log.push_back("rejected sample " + to_string(H) + ": restriction is not reduced");
            continue;
        }
        validate_divisor(sec.spec);
        out.ok = true;
        out.hyperplane = H;
        out.section = std::move(sec);
        return out;
    }
    return out;
}

std::vector<Rational> point_of_corank_one_flat(const Flat& fl, int nvars) {
    QMatrix m(0, static_cast<size_t>(nvars));
    for (const auto& row : fl.basis) m.append_row(row);
    auto ns = m.nullspace();
    if (ns.size() != 1) throw std::logic_error("flat is not a projective point");
    return ns.front();
}

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inapplicable: return "inapplicable";
        case Verdict::hypothesis_violated: return "hypothesis_violated";
        default: return "inconclusive";
    }
}

std::string to_string(QhStatus s) {
    switch (s) {
        case QhStatus::quasihomogeneous: return "quasihomogeneous";
        case QhStatus::not_quasihomogeneous: return "not_quasihomogeneous";
        case QhStatus::not_singular: return "not_singular";
        default: return "inconclusive";
    }
}

std::string to_string(FreenessStatus s) {
    switch (s) {
        case FreenessStatus::free_divisor: return "free";
        case FreenessStatus::not_free: return "not_free";
        default: return "inconclusive";
    }
}

Poly sample_hyperplane(int nvars, std::mt19937_64& rng) {
    for (;;) {
        Poly H = Poly::zero(nvars);
        bool nonzero = false;
        for (int i = 0; i < nvars; ++i) {
            int c = static_cast<int>(rng() % 15) - 7;
            if (c == 0) continue;
            nonzero = true;
            H = H + Poly::variable(i, nvars) * Rational(c);
        }
        if (nonzero) return H;
    }
}

VerificationReport main_theorem_check(const DivisorInput& input, const VerifyOptions& opts) {
    VerificationReport r;
    r.id = input.id;
    r.n = input.spec.n;
    r.seed = opts.seed;
    r.mode = opts.mode == VerifyOptions::Mode::full ? "full" : "degrees";
    try {
        validate_divisor(input.spec);
        if (!is_reduced(input.spec.f, opts.groebner)) {
            r.verdict = Verdict::inapplicable;
            r.notes.push_back("the defining polynomial is not reduced");
            return r;
        }
        r.freeness = exponents(input.spec, opts.degree_bound);
        CsmSide side = compute_csm_side(input, opts);
        r.has_csm = side.available;
        if (side.available) r.csm = side.cls;
        r.csm_route = side.route;
        r.charpoly_route_checked = side.charpoly_checked;
        r.charpoly_route_agrees = side.charpoly_agrees;
        r.qh = side.qh;
        for (const auto& note : side.notes) r.notes.push_back(note);
        if (r.freeness.status == FreenessStatus::free_divisor) {
            r.chern = chern_logderiv_from_exponents(r.freeness.exponents, r.n);
            r.has_chern = true;
        }
        if (side.data_fail || (side.charpoly_checked && !side.charpoly_agrees)) {
            r.verdict = Verdict::fail;
            return r;
        }
        if (r.freeness.status == FreenessStatus::inconclusive) {
            r.verdict = Verdict::inconclusive;
            r.notes.push_back("freeness undecided: " + r.freeness.note);
            return r;
        }
        if (r.freeness.status == FreenessStatus::not_free) {
            r.verdict = Verdict::inapplicable;
            r.notes.push_back("the log-derivation module is not free (graded test)");
            if (r.n == 2)
                r.notes.push_back("the log-derivation sheaf of a reduced curve on a surface is "
                                  "locally free; only graded freeness fails");
            if (side.qh_violated)
                r.notes.push_back("a non-quasi-homogeneous singular point was also found");
            return r;
        }
        if (side.qh_violated) {
            r.verdict = Verdict::hypothesis_violated;
            if (side.have_chi && r.has_chern) {
                r.has_euler_comparison = true;
                r.euler_csm = Rational(side.chi_complement);
                r.euler_chern = r.chern.degree(0);
                r.notes.push_back(std::string("Euler characteristics ") +
                                  (r.euler_csm == r.euler_chern ? "agree" : "differ") +
                                  ": chi(complement) = " + to_string(r.euler_csm) +
                                  ", chern degree = " + to_string(r.euler_chern));
            }
            return r;
        }
        if (!r.has_csm) {
            r.verdict = Verdict::inconclusive;
            return r;
        }
        r.has_euler_comparison = true;
        r.euler_csm = r.csm.degree(0);
        r.euler_chern = r.chern.degree(0);
        bool equal = true;
        if (opts.mode == VerifyOptions::Mode::full) {
            equal = (r.csm == r.chern);
        } else {
            for (int i = 0; i <= r.n; ++i)
                if (r.csm.degree(i) != r.chern.degree(i)) equal = false;
        }
        if (equal) {
            r.verdict = Verdict::pass;
        } else {
            r.verdict = Verdict::fail;
            r.notes.push_back("the classes differ: csm " + to_string(r.csm) + " vs chern " +
                              to_string(r.chern));
        }
        return r;
    } catch (const BudgetExceeded& e) {
        r.verdict = Verdict::inconclusive;
        r.notes.push_back(std::string("computation budget exceeded: ") + e.what());
        return r;
    }
}

bool degree_equality_check(const DivisorInput& input, const VerifyOptions& opts) {
    VerificationReport r = main_theorem_check(input, opts);
    return r.has_euler_comparison && r.euler_csm == r.euler_chern;
}

RecursionReport section_recursion_check(const DivisorInput& input, SectionMode mode,
                                        const VerifyOptions& opts) {
    RecursionReport r;
    r.id = input.id;
    r.mode = mode == SectionMode::csm ? "csm" : "chern";
    r.seed = opts.seed;
    const int n = input.spec.n;
    try {
        validate_divisor(input.spec);
        if (n < 2) {
            r.verdict = Verdict::inapplicable;
            r.notes.push_back("a hyperplane section needs ambient dimension at least 2");
            return r;
        }
        ChowClass alpha, alpha_section;
        if (mode == SectionMode::csm) {
            if (input.spec.f.degree() == 0) {
                alpha = csm_linear_subspace(n, n);
                alpha_section = csm_linear_subspace(n - 1, n - 1);
                r.notes.push_back("empty divisor: both sides are tangent classes");
            } else if (!input.spec.arrangement_forms.empty()) {
                IntersectionLattice L = intersection_lattice(input.spec.arrangement_forms, n);
                alpha = csm_arrangement_complement(L);
                alpha_section = csm_arrangement_complement(generic_section(L));
            } else if (n == 2) {
                CsmSide side = compute_csm_side(input, opts);
                for (const auto& note : side.notes) r.notes.push_back(note);
                if (!side.available) {
                    r.verdict = side.data_fail ? Verdict::fail : Verdict::inconclusive;
                    return r;
                }
                alpha = side.cls;
                alpha_section =
                    ChowClass(1, {Rational(1), Rational(2 - input.spec.f.degree())});
                r.notes.push_back("section modeled as deg f distinct points on a line");
            } else {
                r.verdict = Verdict::inconclusive;
                r.notes.push_back("no CSM route for a non-arrangement divisor in P^" +
                                  std::to_string(n));
                return r;
            }
        } else {
            ExponentsResult e = exponents(input.spec, opts.degree_bound);
            if (e.status != FreenessStatus::free_divisor) {
                r.verdict = Verdict::inconclusive;
                r.notes.push_back("the Chern recursion needs a free divisor; freeness is " +
                                  to_string(e.status));
                return r;
            }
            alpha = chern_logderiv_from_exponents(e.exponents, n);
            std::mt19937_64 rng(opts.seed);
            SectionSample sample = sample_section(input, rng, opts.groebner);
            for (const auto& line : sample.log) r.notes.push_back(line);
            if (!sample.ok) {
                r.verdict = Verdict::inconclusive;
                r.notes.push_back("no non-degenerate hyperplane found in ten draws");
                return r;
            }
            r.notes.push_back("hyperplane: " + to_string(sample.hyperplane));
            if (sample.section.spec.n == 1) {
                alpha_section = chern_logderiv_curve(sample.section.spec.f.degree());
            } else {
                ExponentsResult es = exponents(sample.section.spec, opts.degree_bound);
                if (es.status != FreenessStatus::free_divisor) {
                    r.verdict = Verdict::inconclusive;
                    r.notes.push_back("the sampled section is not graded-free (" +
                                      to_string(es.status) +
                                      "); its Chern class is unavailable");
                    return r;
                }
                alpha_section = chern_logderiv_from_exponents(es.exponents, n - 1);
            }
        }
        bool all_equal = true;
        for (int i = 1; i <= n; ++i) {
            RecursionStep step;
            step.i = i;
            step.lhs = alpha.degree(i);
            step.rhs = alpha_section.degree(i - 1) + alpha_section.degree(i);
            if (step.lhs != step.rhs) all_equal = false;
            r.steps.push_back(step);
        }
        r.verdict = all_equal ? Verdict::pass : Verdict::fail;
        if (!all_equal) r.notes.push_back("the degree recursion fails at some i");
        return r;
    } catch (const BudgetExceeded& e) {
        r.verdict = Verdict::inconclusive;
        r.notes.push_back(std::string("computation budget exceeded: ") + e.what());
        return r;
    }
}

PreservationReport section_preservation_check(const DivisorInput& input,
                                              const VerifyOptions& opts) {
    PreservationReport r;
    r.id = input.id;
    r.seed = opts.seed;
    try {
        validate_divisor(input.spec);
        const int n = input.spec.n;
        if (n < 2) {
            r.verdict = Verdict::inapplicable;
            r.notes.push_back("a hyperplane section needs ambient dimension at least 2");
            return r;
        }
        r.original = exponents(input.spec, opts.degree_bound);
        if (r.original.status == FreenessStatus::inconclusive) {
            r.verdict = Verdict::inconclusive;
            r.notes.push_back("freeness of the input is undecided: " + r.original.note);
            return r;
        }
        if (r.original.status == FreenessStatus::not_free) {
            r.verdict = Verdict::inapplicable;
            r.notes.push_back("preservation is asserted for free divisors; the input is not "
                              "graded-free");
            return r;
        }
        std::mt19937_64 rng(opts.seed);
        SectionSample sample = sample_section(input, rng, opts.groebner);
        for (const auto& line : sample.log) r.notes.push_back(line);
        if (!sample.ok) {
            r.verdict = Verdict::inconclusive;
            r.notes.push_back("no non-degenerate hyperplane found in ten draws");
            return r;
        }
        r.hyperplane = to_string(sample.hyperplane);
        r.section = exponents(sample.section.spec, opts.degree_bound);
        bool qh_fail = false;
        bool qh_inconclusive = false;
        const DivisorSpec& S = sample.section.spec;
        if (S.n == 2 && !S.arrangement_forms.empty()) {
            IntersectionLattice L = intersection_lattice(S.arrangement_forms, 2);
            for (const Flat& fl : L.flats) {
                if (fl.rank != 2) continue;
                QhSummary summary;
                summary.point = point_of_corank_one_flat(fl, 3);
                summary.report = quasihomogeneity_test(germ_at(S.f, summary.point), opts.groebner);
                switch (summary.report.status) {
                    case QhStatus::not_quasihomogeneous: qh_fail = true; break;
                    case QhStatus::quasihomogeneous: break;
                    default: qh_inconclusive = true; break;
                }
                r.section_qh.push_back(std::move(summary));
            }
        } else if (S.n >= 2 && S.f.degree() > 0) {
            r.notes.push_back("section singular points are located automatically only for "
                              "arrangements on P^2");
        }
        if (qh_fail) {
            r.verdict = Verdict::fail;
            r.notes.push_back("quasi-homogeneity is not preserved at a section point");
            return r;
        }
        if (r.section.status == FreenessStatus::free_divisor && !qh_inconclusive) {
            r.verdict = Verdict::pass;
            return r;
        }
        r.verdict = Verdict::inconclusive;
        if (r.section.status == FreenessStatus::not_free) {
            r.notes.push_back("the section is not graded-free; graded freeness is strictly "
                              "stronger than local freeness of the sheaf, which is what the "
                              "preservation statement concerns");
            if (S.n == 2)
                r.notes.push_back("the log-derivation sheaf of a reduced curve on a surface "
                                  "is locally free; only graded freeness fails");
        } else if (r.section.status == FreenessStatus::inconclusive) {
            r.notes.push_back("freeness of the section is undecided: " + r.section.note);
        }
        if (qh_inconclusive)
            r.notes.push_back("a local computation at a section point did not stabilize");
        return r;
    } catch (const BudgetExceeded& e) {
        r.verdict = Verdict::inconclusive;
        r.notes.push_back(std::string("computation budget exceeded: ") + e.what());
        return r;
    }
}

BertiniRun bertini_run(const DivisorInput& input, int trials, const VerifyOptions& opts) {
    BertiniRun r;
    r.id = input.id;
    r.seed = opts.seed;
    try {
        validate_divisor(input.spec);
        if (!is_reduced(input.spec.f, opts.groebner)) {
            r.verdict = Verdict::inapplicable;
            r.notes.push_back("the defining polynomial is not reduced");
            return r;
        }
    } catch (const BudgetExceeded& e) {
        r.verdict = Verdict::inconclusive;
        r.notes.push_back(std::string("computation budget exceeded: ") + e.what());
        return r;
    }
    std::mt19937_64 rng(opts.seed);
    int conclusive = 0;
    for (int t = 0; t < trials; ++t) {
        for (int attempt = 0; attempt < 10; ++attempt) {
            Poly H = sample_hyperplane(input.spec.n + 1, rng);
            int chart = chart_for(H);
            BertiniReport rep;
            try {
                rep = bertini_schematic_check(input.spec.f, H, chart, opts.groebner);
            } catch (const BudgetExceeded& e) {
                rep.status = BertiniStatus::inconclusive;
                rep.note = std::string("budget exceeded: ") + e.what();
            }
            if (rep.status == BertiniStatus::degenerate) {
                r.notes.push_back("rejected sample " + to_string(H) + ": " + rep.note);
                continue;
            }
            r.trials.push_back({to_string(H), rep});
            ++r.completed;
            if (rep.status == BertiniStatus::equal) ++r.equal;
            if (rep.status != BertiniStatus::inconclusive) ++conclusive;
            break;
        }
    }
    if (conclusive == 0)
        r.verdict = Verdict::inconclusive;
    else
        r.verdict = (r.equal * 10 >= conclusive * 9) ? Verdict::pass : Verdict::fail;
    return r;
}

CorpusSummary corpus_run(const std::vector<std::string>& paths, const VerifyOptions& opts) {
    CorpusSummary s;
    for (const auto& path : paths) {
        try {
            DivisorInput input = load_divisor_file(path);
            s.reports.push_back(main_theorem_check(input, opts));
        } catch (const std::exception& e) {
            s.errors.push_back(path + ": " + e.what());
        }
    }
    for (const auto& rep : s.reports)
        if (rep.verdict == Verdict::fail) s.any_fail = true;
    return s;
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "check: " << r.id << " (P^" << r.n << ")\n";
    out << "mode: " << r.mode << "  seed: " << r.seed << "\n";
    out << "freeness: " << to_string(r.freeness.status);
    if (r.freeness.status == FreenessStatus::free_divisor)
        out << "  exponents: " << exponents_string(r.freeness.exponents);
    out << "  generators: " << r.freeness.generator_count
        << "  bound: " << r.freeness.degree_bound << "\n";
    if (r.has_csm) {
        out << "csm[" << r.csm_route << "]: " << to_string(r.csm);
        if (r.charpoly_route_checked)
            out << (r.charpoly_route_agrees ? "  (charpoly route agrees)"
                                            : "  (charpoly route DISAGREES)");
        out << "\n";
        out << "csm degrees: " << degrees_string(r.csm) << "\n";
    }
    if (r.has_chern) {
        out << "chern: " << to_string(r.chern) << "\n";
        out << "chern degrees: " << degrees_string(r.chern) << "\n";
    }
    if (r.has_euler_comparison)
        out << "euler: complement " << to_string(r.euler_csm) << " vs chern degree "
            << to_string(r.euler_chern) << "\n";
    for (const auto& q : r.qh)
        out << "local: " << point_string(q.point) << "  " << to_string(q.report.status)
            << "  mu " << local_number_string(q.report.milnor) << "  tau "
            << local_number_string(q.report.tjurina) << "\n";
    for (const auto& note : r.notes) out << "note: " << note << "\n";
    out << "verdict: " << to_string(r.verdict) << "\n";
    return out.str();
}

std::string to_json_string(const VerificationReport& r) {
    json j;
    j["id"] = r.id;
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["mode"] = r.mode;
    j["verdict"] = to_string(r.verdict);
    j["freeness"] = freeness_json(r.freeness);
    json csm;
    csm["available"] = r.has_csm;
    if (r.has_csm) {
        csm["route"] = r.csm_route;
        csm["class"] = class_json(r.csm);
    }
    if (r.charpoly_route_checked) csm["charpoly_route_agrees"] = r.charpoly_route_agrees;
    j["csm"] = std::move(csm);
    json chern;
    chern["available"] = r.has_chern;
    if (r.has_chern) chern["class"] = class_json(r.chern);
    j["chern"] = std::move(chern);
    if (r.has_euler_comparison) {
        json euler;
        euler["complement"] = rational_json(r.euler_csm);
        euler["chern_degree"] = rational_json(r.euler_chern);
        j["euler"] = std::move(euler);
    } else {
        j["euler"] = nullptr;
    }
    json qh = json::array();
    for (const auto& q : r.qh) qh.push_back(qh_json(q));
    j["local_points"] = std::move(qh);
    j["notes"] = r.notes;
    return j.dump(2);
}

std::string to_text(const RecursionReport& r) {
    std::ostringstream out;
    out << "section recursion: " << r.id << "  mode: " << r.mode << "  seed: " << r.seed
        << "\n";
    for (const auto& step : r.steps)
        out << "i = " << step.i << ": " << to_string(step.lhs) << " vs "
            << to_string(step.rhs) << (step.lhs == step.rhs ? "  ok" : "  MISMATCH") << "\n";
    for (const auto& note : r.notes) out << "note: " << note << "\n";
    out << "verdict: " << to_string(r.verdict) << "\n";
    return out.str();
}

std::string to_json_string(const RecursionReport& r) {
    json j;
    j["id"] = r.id;
    j["mode"] = r.mode;
    j["seed"] = r.seed;
    j["verdict"] = to_string(r.verdict);
    json steps = json::array();
    for (const auto& step : r.steps) {
        json s;
        s["i"] = step.i;
        s["lhs"] = rational_json(step.lhs);
        s["rhs"] = rational_json(step.rhs);
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    j["notes"] = r.notes;
    return j.dump(2);
}

std::string to_text(const PreservationReport& r) {
    std::ostringstream out;
    out << "section preservation: " << r.id << "  seed: " << r.seed << "\n";
    out << "original freeness: " << to_string(r.original.status);
    if (r.original.status == FreenessStatus::free_divisor)
        out << "  exponents: " << exponents_string(r.original.exponents);
    out << "\n";
    if (!r.hyperplane.empty()) {
        out << "hyperplane: " << r.hyperplane << "\n";
        out << "section freeness: " << to_string(r.section.status);
        if (r.section.status == FreenessStatus::free_divisor)
            out << "  exponents: " << exponents_string(r.section.exponents);
        out << "\n";
    }
    for (const auto& q : r.section_qh)
        out << "local: " << point_string(q.point) << "  " << to_string(q.report.status)
            << "  mu " << local_number_string(q.report.milnor) << "  tau "
            << local_number_string(q.report.tjurina) << "\n";
    for (const auto& note : r.notes) out << "note: " << note << "\n";
    out << "verdict: " << to_string(r.verdict) << "\n";
    return out.str();
}

std::string to_json_string(const PreservationReport& r) {
    json j;
    j["id"] = r.id;
    j["seed"] = r.seed;
    j["verdict"] = to_string(r.verdict);
    j["hyperplane"] = r.hyperplane;
    j["original"] = freeness_json(r.original);
    if (!r.hyperplane.empty()) j["section"] = freeness_json(r.section);
    json qh = json::array();
    for (const auto& q : r.section_qh) qh.push_back(qh_json(q));
    j["section_local_points"] = std::move(qh);
    j["notes"] = r.notes;
    return j.dump(2);
}

std::string to_text(const BertiniRun& r) {
    std::ostringstream out;
    out << "schematic section check: " << r.id << "  seed: " << r.seed << "\n";
    for (const auto& t : r.trials) {
        const char* status = "inconclusive";
        if (t.report.status == BertiniStatus::equal) status = "equal";
        else if (t.report.status == BertiniStatus::not_equal) status = "not_equal";
        out << t.hyperplane << ": " << status;
        if (!t.report.note.empty()) out << "  (" << t.report.note << ")";
        out << "\n";
    }
    out << "equal on " << r.equal << " of " << r.completed << " sections\n";
    for (const auto& note : r.notes) out << "note: " << note << "\n";
    out << "verdict: " << to_string(r.verdict) << "\n";
    return out.str();
}

std::string to_json_string(const BertiniRun& r) {
    json j;
    j["id"] = r.id;
    j["seed"] = r.seed;
    j["completed"] = r.completed;
    j["equal"] = r.equal;
    j["verdict"] = to_string(r.verdict);
    json trials = json::array();
    for (const auto& t : r.trials) {
        json s;
        s["hyperplane"] = t.hyperplane;
        const char* status = "inconclusive";
        if (t.report.status == BertiniStatus::equal) status = "equal";
        else if (t.report.status == BertiniStatus::not_equal) status = "not_equal";
        s["status"] = status;
        if (!t.report.note.empty()) s["note"] = t.report.note;
        trials.push_back(std::move(s));
    }
    j["trials"] = std::move(trials);
    j["notes"] = r.notes;
    return j.dump(2);
}

std::string to_text(const CorpusSummary& s) {
    std::ostringstream out;
    for (const auto& rep : s.reports) out << to_text(rep) << "\n";
    for (const auto& err : s.errors) out << "error: " << err << "\n";
    int pass = 0, fail = 0, other = 0;
    for (const auto& rep : s.reports) {
        if (rep.verdict == Verdict::pass) ++pass;
        else if (rep.verdict == Verdict::fail) ++fail;
        else ++other;
    }
    out << "corpus: " << pass << " pass, " << fail << " fail, " << other
        << " other, " << s.errors.size() << " errors\n";
    return out.str();
}

std::string to_json_string(const CorpusSummary& s) {
    json j;
    json reports = json::array();
    for (const auto& rep : s.reports) reports.push_back(json::parse(to_json_string(rep)));
    j["reports"] = std::move(reports);
    j["errors"] = s.errors;
    j["any_fail"] = s.any_fail;
    return j.dump(2);
}

std::string to_text(const ExponentsResult& r) {
    std::ostringstream out;
    out << "freeness: " << to_string(r.status) << "\n";
    if (r.status == FreenessStatus::free_divisor) {
        out << "exponents: " << exponents_string(r.exponents) << "\n";
        out << "saito scalar: " << to_string(r.certificate.saito_scalar) << "\n";
    }
    out << "generators found: " << r.generator_count << "  degree bound: " << r.degree_bound
        << "\n";
    if (!r.note.empty()) out << "note: " << r.note << "\n";
    return out.str();
}

std::string to_json_string(const ExponentsResult& r) { return freeness_json(r).dump(2); }

std::string to_text(const QhReport& r) {
    std::ostringstream out;
    out << "status: " << to_string(r.status) << "\n";
    out << "mu: " << local_number_string(r.milnor) << "  tau: "
        << local_number_string(r.tjurina) << "\n";
    if (!r.note.empty()) out << "note: " << r.note << "\n";
    return out.str();
}

std::string to_json_string(const QhReport& r) {
    json j;
    j["status"] = to_string(r.status);
    j["milnor"] = local_number_json(r.milnor);
    j["tjurina"] = local_number_json(r.tjurina);
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump(2);
}

} // namespace logdiv
