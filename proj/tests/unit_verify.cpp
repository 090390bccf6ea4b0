#include <doctest.h>

#include <logdiv/verify.hpp>

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

using namespace logdiv;

namespace {

std::string corpus(const std::string& name) {
    return std::string(LOGDIV_CORPUS_DIR) + "/" + name;
}

DivisorInput make_divisor(const char* json) { return parse_divisor_json_text(json, "test"); }

std::vector<Rational> coeffs(const ChowClass& c) { return c.coeffs; }

} // namespace

TEST_CASE("divisor files load") {
    DivisorInput braid = load_divisor_file(corpus("braid_a3.json"));
    CHECK(braid.spec.n == 2);
    CHECK(braid.spec.arrangement_forms.size() == 6);
    CHECK(braid.spec.f.degree() == 6);

    // the text format gives the same divisor
    DivisorInput braid_txt = load_divisor_file(corpus("braid_a3.txt"));
    CHECK(braid_txt.spec.f == braid.spec.f);

    DivisorInput cubic = load_divisor_file(corpus("cuspidal_cubic_p2.json"));
    CHECK(cubic.has_singular_data);
    REQUIRE(cubic.singular_points.size() == 1);
    CHECK(cubic.singular_points[0].milnor == 2);

    CHECK(load_germ_file(corpus("germs/cusp.txt")) == parse_poly("x^3 - y^2", 2));
    CHECK(infer_variable_count("x^2*y - z^2") == 3);

    CHECK_THROWS(load_divisor_file(corpus("no_such_file.json")));
    CHECK_THROWS_AS(make_divisor("{\"n\": 2}"), std::runtime_error);
}

TEST_CASE("main theorem check on the reference arrangements") {
    VerificationReport boolean =
        main_theorem_check(make_divisor("{\"n\":2,\"arrangement\":[\"x\",\"y\",\"z\"]}"));
    CHECK(boolean.verdict == Verdict::pass);
    CHECK(coeffs(boolean.csm) == std::vector<Rational>{1, 0, 0});
    CHECK(coeffs(boolean.chern) == std::vector<Rational>{1, 0, 0});
    CHECK(boolean.charpoly_route_checked);
    CHECK(boolean.charpoly_route_agrees);

    VerificationReport braid = main_theorem_check(load_divisor_file(corpus("braid_a3.json")));
    CHECK(braid.verdict == Verdict::pass);
    CHECK(coeffs(braid.csm) == std::vector<Rational>{1, -3, 2});
    CHECK(coeffs(braid.chern) == std::vector<Rational>{1, -3, 2});
    CHECK(braid.freeness.exponents == std::vector<int>{1, 2, 3});
    CHECK(braid.euler_csm == 2);

    VerificationReport generic4 =
        main_theorem_check(load_divisor_file(corpus("generic4_p2.json")));
    CHECK(generic4.verdict == Verdict::inapplicable);
    CHECK(generic4.freeness.status == FreenessStatus::not_free);
    CHECK_FALSE(generic4.has_chern);
    CHECK(coeffs(generic4.csm) == std::vector<Rational>{1, -1, 1});
}

TEST_CASE("main theorem check on curves") {
    VerificationReport conic =
        main_theorem_check(load_divisor_file(corpus("smooth_conic_p2.json")));
    CHECK(conic.verdict == Verdict::inapplicable);  // not graded-free
    CHECK(coeffs(conic.csm) == std::vector<Rational>{1, 1, 1});

    VerificationReport nodes =
        main_theorem_check(load_divisor_file(corpus("boolean_curve_p2.json")));
    CHECK(nodes.verdict == Verdict::pass);
    CHECK(nodes.csm_route == "curve");
    CHECK(coeffs(nodes.csm) == std::vector<Rational>{1, 0, 0});

    VerificationReport sextic =
        main_theorem_check(load_divisor_file(corpus("sextic_nonqh_p2.json")));
    CHECK(sextic.verdict == Verdict::inapplicable);
    REQUIRE(sextic.qh.size() == 1);
    CHECK(sextic.qh[0].report.status == QhStatus::not_quasihomogeneous);
    CHECK(sextic.qh[0].report.milnor.value == 16);
    CHECK(sextic.qh[0].report.tjurina.value == 15);
}

TEST_CASE("bad declared data fails the check") {
    DivisorInput wrong = make_divisor(
        "{\"n\":2,\"f\":\"x^3 - y^2*z\","
        "\"singular_points\":[{\"point\":[0,0,1],\"milnor\":5}]}");
    VerificationReport r = main_theorem_check(wrong);
    CHECK(r.verdict == Verdict::fail);

    DivisorInput off_curve = make_divisor(
        "{\"n\":2,\"f\":\"x^3 - y^2*z\","
        "\"singular_points\":[{\"point\":[1,1,4],\"milnor\":2}]}");
    CHECK(main_theorem_check(off_curve).verdict == Verdict::fail);
}

TEST_CASE("non-reduced input is rejected") {
    VerificationReport r = main_theorem_check(make_divisor("{\"n\":2,\"f\":\"x^2*y\"}"));
    CHECK(r.verdict == Verdict::inapplicable);
    REQUIRE_FALSE(r.notes.empty());
    CHECK(r.notes[0].find("not reduced") != std::string::npos);
}

TEST_CASE("degree equality instances") {
    CHECK(degree_equality_check(load_divisor_file(corpus("braid_a3.json"))));
    CHECK(degree_equality_check(load_divisor_file(corpus("boolean_p2.json"))));
    // three points on P^1: chi = -1 on both sides
    DivisorInput pts = make_divisor("{\"n\":1,\"f\":\"x0*x1^2 - x0^2*x1\"}");
    VerificationReport r = main_theorem_check(pts);
    CHECK(r.euler_csm == -1);
    CHECK(r.euler_chern == -1);
    CHECK(degree_equality_check(pts));
}

TEST_CASE("section recursion in csm mode") {
    RecursionReport boolean3 = section_recursion_check(
        load_divisor_file(corpus("boolean_p3.json")), SectionMode::csm);
    CHECK(boolean3.verdict == Verdict::pass);
    REQUIRE(boolean3.steps.size() == 3);
    CHECK(boolean3.steps[0].lhs == 0);
    CHECK(boolean3.steps[0].rhs == 0);  // 1 + (-1)
    CHECK(boolean3.steps[1].lhs == 0);  // -1 + 1
    CHECK(boolean3.steps[2].lhs == 1);  // 1 + 0
    CHECK(boolean3.steps[2].rhs == 1);

    CHECK(section_recursion_check(load_divisor_file(corpus("two_lines_p2.json")),
                                  SectionMode::csm)
              .verdict == Verdict::pass);
    CHECK(section_recursion_check(load_divisor_file(corpus("generic4_p2.json")),
                                  SectionMode::csm)
              .verdict == Verdict::pass);  // freeness not required
}

TEST_CASE("section recursion in chern mode") {
    RecursionReport braid = section_recursion_check(
        load_divisor_file(corpus("braid_a3.json")), SectionMode::chern);
    CHECK(braid.verdict == Verdict::pass);

    // not free: the chern recursion has nothing to compare
    CHECK(section_recursion_check(load_divisor_file(corpus("generic4_p2.json")),
                                  SectionMode::chern)
              .verdict == Verdict::inconclusive);
}

TEST_CASE("section recursion for the empty divisor") {
    DivisorInput empty = make_divisor("{\"n\":2,\"f\":\"1\"}");
    CHECK(section_recursion_check(empty, SectionMode::csm).verdict == Verdict::pass);
    CHECK(section_recursion_check(empty, SectionMode::chern).verdict == Verdict::pass);
    CHECK(main_theorem_check(empty).verdict == Verdict::pass);
    CHECK(section_preservation_check(empty).verdict == Verdict::pass);
}

TEST_CASE("section preservation") {
    PreservationReport braid =
        section_preservation_check(load_divisor_file(corpus("braid_a3.json")));
    CHECK(braid.verdict == Verdict::pass);
    CHECK(braid.original.exponents == std::vector<int>{1, 2, 3});
    CHECK(braid.section.exponents == std::vector<int>{1, 5});

    // Boolean in P^3 restricts to four generic lines: graded freeness is lost
    PreservationReport boolean3 =
        section_preservation_check(load_divisor_file(corpus("boolean_p3.json")));
    CHECK(boolean3.verdict == Verdict::inconclusive);
    CHECK(boolean3.section.status == FreenessStatus::not_free);

    PreservationReport generic4 =
        section_preservation_check(load_divisor_file(corpus("generic4_p2.json")));
    CHECK(generic4.verdict == Verdict::inapplicable);
}

TEST_CASE("bertini runs") {
    VerifyOptions opts;
    opts.seed = 42;
    BertiniRun run = bertini_run(load_divisor_file(corpus("boolean_p2.json")), 10, opts);
    CHECK(run.verdict == Verdict::pass);
    CHECK(run.completed == 10);
    CHECK(run.equal >= 9);

    BertiniRun nonreduced = bertini_run(make_divisor("{\"n\":2,\"f\":\"x^2*y\"}"), 5, opts);
    CHECK(nonreduced.verdict == Verdict::inapplicable);
}

TEST_CASE("corpus driver") {
    CorpusSummary empty = corpus_run({});
    CHECK(empty.reports.empty());
    CHECK(empty.errors.empty());
    CHECK_FALSE(empty.any_fail);

    CorpusSummary three = corpus_run({corpus("boolean_p2.json"), corpus("braid_a3.json"),
                                      corpus("two_lines_p2.json")});
    REQUIRE(three.reports.size() == 3);
    for (const auto& r : three.reports) CHECK(r.verdict == Verdict::pass);
    CHECK_FALSE(three.any_fail);

    CorpusSummary broken = corpus_run({corpus("missing.json")});
    CHECK(broken.reports.empty());
    REQUIRE(broken.errors.size() == 1);
}

TEST_CASE("report rendering") {
    VerificationReport braid = main_theorem_check(load_divisor_file(corpus("braid_a3.json")));
    std::string text = to_text(braid);
    CHECK(text.find("verdict: pass") != std::string::npos);
    CHECK(text.find("{1, 2, 3}") != std::string::npos);

    std::string json_text = to_json_string(braid);
    CHECK(json_text == to_json_string(braid));  // deterministic
    nlohmann::json j = nlohmann::json::parse(json_text);
    CHECK(j["verdict"] == "pass");
    CHECK(j["csm"]["class"]["coeffs"] == nlohmann::json({1, -3, 2}));
    CHECK(j["chern"]["class"]["coeffs"] == nlohmann::json({1, -3, 2}));
    CHECK(j["csm"]["class"]["degrees"] == nlohmann::json({2, -3, 1}));
}
