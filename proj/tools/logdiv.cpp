#include <logdiv/arrangement.hpp>
#include <logdiv/chow.hpp>
#include <logdiv/csm.hpp>
#include <logdiv/divisor_io.hpp>
#include <logdiv/groebner.hpp>
#include <logdiv/logderiv.hpp>
#include <logdiv/singular.hpp>
#include <logdiv/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace logdiv;
using nlohmann::json;

struct Cfg {
    std::vector<std::string> paths;
    std::string mode = "full";
    std::string section_mode = "csm";
    std::string order = "grevlex";
    std::uint64_t seed = 0;
    int degree_bound = -1;
    int trials = 10;
    std::string point;
    bool json_out = false;
};

VerifyOptions make_options(const Cfg& c) {
    VerifyOptions o;
    o.mode = c.mode == "degrees" ? VerifyOptions::Mode::degrees : VerifyOptions::Mode::full;
    o.seed = c.seed;
    o.degree_bound = c.degree_bound;
    o.groebner.order = c.order == "lex" ? MonomialOrder::lex : MonomialOrder::grevlex;
    return o;
}

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

std::string vector_string(const std::vector<Rational>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + "]";
}

void print_class(const char* label, const ChowClass& c) {
    std::cout << label << ": " << to_string(c) << "\n";
    std::cout << "coefficients: " << vector_string(c.coeffs) << "\n";
    std::cout << "degrees: " << vector_string(c.degrees()) << "\n";
}

std::vector<Rational> parse_point(const std::string& text) {
    std::string cleaned;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) cleaned += ch;
    std::vector<Rational> out;
    std::stringstream ss(cleaned);
    std::string coord;
    while (std::getline(ss, coord, ',')) {
        auto q = parse_rational(coord);
        if (!q) throw std::invalid_argument("bad point coordinate '" + coord + "'");
        out.push_back(*q);
    }
    if (out.empty()) throw std::invalid_argument("empty point");
    return out;
}

/// Germ input: a plain affine polynomial file, or a divisor file localized
/// at --point.
GermSpec load_germ(const Cfg& c) {
    if (!c.point.empty()) {
        DivisorInput input = load_divisor_file(c.paths.front());
        return germ_at(input.spec.f, parse_point(c.point));
    }
    return GermSpec{load_germ_file(c.paths.front())};
}

int verdict_exit(Verdict v) {
    if (v == Verdict::fail) return 1;
    if (v == Verdict::inconclusive) return 3;
    return 0;
}

int run_verify(const Cfg& c) {
    CorpusSummary s = corpus_run(c.paths, make_options(c));
    if (c.json_out)
        std::cout << to_json_string(s) << "\n";
    else
        std::cout << to_text(s);
    if (s.any_fail) return 1;
    if (!s.errors.empty()) return 2;
    return 0;
}

int run_csm(const Cfg& c) {
    DivisorInput input = load_divisor_file(c.paths.front());
    VerificationReport r = main_theorem_check(input, make_options(c));
    if (c.json_out) {
        json j;
        j["id"] = r.id;
        j["n"] = r.n;
        j["available"] = r.has_csm;
        if (r.has_csm) {
            j["csm"] = class_json(r.csm);
            j["route"] = r.csm_route;
        }
        if (r.charpoly_route_checked) j["charpoly_route_agrees"] = r.charpoly_route_agrees;
        if (!r.notes.empty()) j["notes"] = r.notes;
        std::cout << j.dump(2) << "\n";
    } else if (r.has_csm) {
        print_class("csm", r.csm);
        std::cout << "route: " << r.csm_route;
        if (r.charpoly_route_checked)
            std::cout << (r.charpoly_route_agrees ? " (charpoly route agrees)"
                                                  : " (charpoly route DISAGREES)");
        std::cout << "\n";
    } else {
        std::cout << "csm: unavailable\n";
        for (const auto& note : r.notes) std::cout << "note: " << note << "\n";
    }
    if (r.charpoly_route_checked && !r.charpoly_route_agrees) return 1;
    if (!r.has_csm) return r.verdict == Verdict::fail ? 1 : 3;
    return 0;
}

int run_chern(const Cfg& c) {
    DivisorInput input = load_divisor_file(c.paths.front());
    validate_divisor(input.spec);
    ExponentsResult r = exponents(input.spec, c.degree_bound);
    bool free = r.status == FreenessStatus::free_divisor;
    ChowClass ch;
    if (free) ch = chern_logderiv_from_exponents(r.exponents, input.spec.n);
    if (c.json_out) {
        json j;
        j["id"] = input.id;
        j["n"] = input.spec.n;
        j["freeness"] = json::parse(to_json_string(r));
        if (free) j["chern"] = class_json(ch);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_text(r);
        if (free) print_class("chern", ch);
    }
    if (free) return 0;
    return 3;
}

int run_exponents(const Cfg& c) {
    DivisorInput input = load_divisor_file(c.paths.front());
    validate_divisor(input.spec);
    ExponentsResult r = exponents(input.spec, c.degree_bound);
    if (c.json_out)
        std::cout << to_json_string(r) << "\n";
    else
        std::cout << to_text(r);
    return r.status == FreenessStatus::inconclusive ? 3 : 0;
}

IntersectionLattice load_lattice(const Cfg& c, std::string* id = nullptr) {
    DivisorInput input = load_divisor_file(c.paths.front());
    if (input.spec.arrangement_forms.empty())
        throw std::invalid_argument("input is not a hyperplane arrangement");
    if (id) *id = input.id;
    return intersection_lattice(input.spec.arrangement_forms, input.spec.n);
}

int run_lattice(const Cfg& c) {
    std::string id;
    IntersectionLattice L = load_lattice(c, &id);
    std::vector<BigInt> mu = moebius_values(L);
    if (c.json_out) {
        json j;
        j["id"] = id;
        j["n"] = L.n;
        json forms = json::array();
        for (const auto& f : L.forms) forms.push_back(to_string(f));
        j["forms"] = std::move(forms);
        json flats = json::array();
        for (size_t i = 0; i < L.flats.size(); ++i) {
            json fj;
            fj["rank"] = L.flats[i].rank;
            fj["pdim"] = L.flats[i].pdim(L.n);
            fj["moebius"] = mu[i].convert_to<long long>();
            fj["forms"] = L.flats[i].forms;
            flats.push_back(std::move(fj));
        }
        j["flats"] = std::move(flats);
        std::cout << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < L.forms.size(); ++i)
            std::cout << "H" << i << ": " << to_string(L.forms[i]) << "\n";
        for (size_t i = 0; i < L.flats.size(); ++i) {
            const Flat& fl = L.flats[i];
            std::cout << "rank " << fl.rank << "  pdim " << fl.pdim(L.n) << "  mu "
                      << mu[i].str() << "  forms {";
            for (size_t k = 0; k < fl.forms.size(); ++k) {
                if (k) std::cout << ", ";
                std::cout << fl.forms[k];
            }
            std::cout << "}\n";
        }
    }
    return 0;
}

int run_charpoly(const Cfg& c) {
    std::string id;
    IntersectionLattice L = load_lattice(c, &id);
    UniPoly chi = characteristic_polynomial(L);
    if (c.json_out) {
        json j;
        j["id"] = id;
        j["n"] = L.n;
        json coeffs = json::array();
        for (const auto& a : chi) coeffs.push_back(a.convert_to<long long>());
        j["charpoly"] = std::move(coeffs);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "charpoly: " << to_string(chi) << "\n";
    }
    return 0;
}

int run_local(const Cfg& c, bool want_tjurina) {
    GermSpec germ = load_germ(c);
    VerifyOptions o = make_options(c);
    LocalNumber v = want_tjurina ? tjurina_number(germ, o.groebner) : milnor_number(germ, o.groebner);
    const char* label = want_tjurina ? "tjurina" : "milnor";
    if (c.json_out) {
        json j;
        switch (v.status) {
            case LocalStatus::ok: j[label] = v.value; break;
            case LocalStatus::not_isolated: j[label] = "infinite"; break;
            case LocalStatus::inconclusive: j[label] = nullptr; break;
        }
        if (!v.note.empty()) j["note"] = v.note;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << label << ": ";
        switch (v.status) {
            case LocalStatus::ok: std::cout << v.value; break;
            case LocalStatus::not_isolated: std::cout << "infinite"; break;
            case LocalStatus::inconclusive: std::cout << "inconclusive"; break;
        }
        std::cout << "\n";
        if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
    }
    return v.status == LocalStatus::inconclusive ? 3 : 0;
}

int run_qh_test(const Cfg& c) {
    GermSpec germ = load_germ(c);
    QhReport r = quasihomogeneity_test(germ, make_options(c).groebner);
    if (c.json_out)
        std::cout << to_json_string(r) << "\n";
    else
        std::cout << to_text(r);
    return r.status == QhStatus::inconclusive ? 3 : 0;
}

int run_bertini(const Cfg& c) {
    DivisorInput input = load_divisor_file(c.paths.front());
    BertiniRun r = bertini_run(input, c.trials, make_options(c));
    if (c.json_out)
        std::cout << to_json_string(r) << "\n";
    else
        std::cout << to_text(r);
    return verdict_exit(r.verdict);
}

int run_section_check(const Cfg& c) {
    DivisorInput input = load_divisor_file(c.paths.front());
    VerifyOptions o = make_options(c);
    if (c.section_mode == "preservation") {
        PreservationReport r = section_preservation_check(input, o);
        if (c.json_out)
            std::cout << to_json_string(r) << "\n";
        else
            std::cout << to_text(r);
        return verdict_exit(r.verdict);
    }
    SectionMode m = c.section_mode == "chern" ? SectionMode::chern : SectionMode::csm;
    RecursionReport r = section_recursion_check(input, m, o);
    if (c.json_out)
        std::cout << to_json_string(r) << "\n";
    else
        std::cout << to_text(r);
    return verdict_exit(r.verdict);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact logarithmic-derivation and CSM checks for divisors in P^n"};
    app.require_subcommand(1);
    Cfg c;
    int rc = 0;

    auto add_order = [&](CLI::App* s) {
        s->add_option("--order", c.order, "monomial order")
            ->check(CLI::IsMember({"grevlex", "lex"}));
    };
    auto add_json = [&](CLI::App* s) { s->add_flag("--json", c.json_out, "JSON output"); };
    auto add_seed = [&](CLI::App* s) { s->add_option("--seed", c.seed, "random seed"); };
    auto add_bound = [&](CLI::App* s) {
        s->add_option("--degree-bound", c.degree_bound,
                      "generator degree bound (default: deg f)");
    };
    auto add_point = [&](CLI::App* s) {
        s->add_option("--point", c.point,
                      "projective point a,b,... locating the germ on a divisor file");
    };

    CLI::App* verify = app.add_subcommand(
        "verify", "check csm(complement) = c(Der(-log D)) for each divisor file");
    verify->add_option("files", c.paths, "divisor files")->required()->expected(-1);
    verify->add_option("--mode", c.mode, "full coefficient-wise or degrees only")
        ->check(CLI::IsMember({"full", "degrees"}));
    add_seed(verify);
    add_order(verify);
    add_bound(verify);
    add_json(verify);
    verify->callback([&] { rc = run_verify(c); });

    CLI::App* csm = app.add_subcommand("csm", "CSM class of the divisor complement");
    csm->add_option("file", c.paths, "divisor file")->required()->expected(1);
    add_order(csm);
    add_json(csm);
    csm->callback([&] { rc = run_csm(c); });

    CLI::App* chern = app.add_subcommand("chern", "Chern class of the log-derivation sheaf");
    chern->add_option("file", c.paths, "divisor file")->required()->expected(1);
    add_bound(chern);
    add_json(chern);
    chern->callback([&] { rc = run_chern(c); });

    CLI::App* expo = app.add_subcommand("exponents", "exponents of a free divisor");
    expo->add_option("file", c.paths, "divisor file")->required()->expected(1);
    add_bound(expo);
    add_json(expo);
    expo->callback([&] { rc = run_exponents(c); });

    CLI::App* checkfree = app.add_subcommand("check-free", "graded freeness test");
    checkfree->add_option("file", c.paths, "divisor file")->required()->expected(1);
    add_bound(checkfree);
    add_json(checkfree);
    checkfree->callback([&] { rc = run_exponents(c); });

    CLI::App* lattice = app.add_subcommand("lattice", "intersection lattice with Moebius values");
    lattice->add_option("file", c.paths, "arrangement file")->required()->expected(1);
    add_json(lattice);
    lattice->callback([&] { rc = run_lattice(c); });

    CLI::App* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of an arrangement");
    charpoly->add_option("file", c.paths, "arrangement file")->required()->expected(1);
    add_json(charpoly);
    charpoly->callback([&] { rc = run_charpoly(c); });

    CLI::App* milnor = app.add_subcommand("milnor", "local Milnor number of a germ");
    milnor->add_option("file", c.paths, "germ file, or divisor file with --point")
        ->required()
        ->expected(1);
    add_point(milnor);
    add_order(milnor);
    add_json(milnor);
    milnor->callback([&] { rc = run_local(c, false); });

    CLI::App* tjurina = app.add_subcommand("tjurina", "local Tjurina number of a germ");
    tjurina->add_option("file", c.paths, "germ file, or divisor file with --point")
        ->required()
        ->expected(1);
    add_point(tjurina);
    add_order(tjurina);
    add_json(tjurina);
    tjurina->callback([&] { rc = run_local(c, true); });

    CLI::App* qh = app.add_subcommand("qh-test", "quasi-homogeneity test (mu = tau)");
    qh->add_option("file", c.paths, "germ file, or divisor file with --point")
        ->required()
        ->expected(1);
    add_point(qh);
    add_order(qh);
    add_json(qh);
    qh->callback([&] { rc = run_qh_test(c); });

    CLI::App* bertini = app.add_subcommand(
        "bertini", "schematic singular-locus comparison against random hyperplane sections");
    bertini->add_option("file", c.paths, "divisor file")->required()->expected(1);
    bertini->add_option("--trials", c.trials, "number of sampled hyperplanes")
        ->check(CLI::PositiveNumber);
    add_seed(bertini);
    add_order(bertini);
    add_json(bertini);
    bertini->callback([&] { rc = run_bertini(c); });

    CLI::App* section = app.add_subcommand(
        "section-check", "hyperplane-section recursion / freeness preservation");
    section->add_option("file", c.paths, "divisor file")->required()->expected(1);
    section->add_option("--mode", c.section_mode, "csm, chern, or preservation")
        ->check(CLI::IsMember({"csm", "chern", "preservation"}));
    add_seed(section);
    add_order(section);
    add_json(section);
    section->callback([&] { rc = run_section_check(c); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const logdiv::BudgetExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
