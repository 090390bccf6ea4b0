#ifndef LOGDIV_VERIFY_HPP
#define LOGDIV_VERIFY_HPP

#include <logdiv/divisor_io.hpp>
#include <logdiv/singular.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace logdiv {

/// Five-valued outcome: a verifier must distinguish refutation (fail) from
/// non-application of the hypotheses.
enum class Verdict { pass, fail, inapplicable, hypothesis_violated, inconclusive };

std::string to_string(Verdict v);

struct VerifyOptions {
    enum class Mode { full, degrees };
    Mode mode = Mode::full;
    std::uint64_t seed = 0;
    int degree_bound = -1;  // negative selects deg f
    GroebnerOptions groebner;
};

struct QhSummary {
    std::vector<Rational> point;  // projective coordinates
    QhReport report;
    long long declared_milnor = -1;
};

struct VerificationReport {
    std::string id;
    int n = 0;
    std::uint64_t seed = 0;
    std::string mode = "full";
    Verdict verdict = Verdict::inconclusive;

    ExponentsResult freeness;
    bool has_csm = false;
    ChowClass csm;
    std::string csm_route;
    bool charpoly_route_checked = false;
    bool charpoly_route_agrees = false;
    bool has_chern = false;
    ChowClass chern;
    bool has_euler_comparison = false;
    Rational euler_csm = 0;
    Rational euler_chern = 0;
    std::vector<QhSummary> qh;
    std::vector<std::string> notes;
};

/// Computes the CSM class of the complement and the Chern class of the
/// log-derivation sheaf and compares them coefficient-wise (full mode) or
/// degree-wise. Not free -> inapplicable; a non-quasi-homogeneous singular
/// point -> hypothesis_violated with the Euler-characteristic comparison
/// still reported.
VerificationReport main_theorem_check(const DivisorInput& input, const VerifyOptions& opts = {});

/// The i = 0 instance: both sides compute the same Euler characteristic.
bool degree_equality_check(const DivisorInput& input, const VerifyOptions& opts = {});

enum class SectionMode { csm, chern };

struct RecursionStep {
    int i = 0;
    Rational lhs = 0;   // integral of h^i against the class on P^n
    Rational rhs = 0;   // section contribution at i-1 plus at i
};

struct RecursionReport {
    std::string id;
    std::string mode;
    std::uint64_t seed = 0;
    Verdict verdict = Verdict::inconclusive;
    std::vector<RecursionStep> steps;
    std::vector<std::string> notes;
};

/// Verifies int h^i (class of U) = int h^{i-1} (class of U') + int h^i
/// (class of U') for 1 <= i <= n, where U' is a hyperplane section: the
/// combinatorially generic one in csm mode, a sampled one in chern mode.
RecursionReport section_recursion_check(const DivisorInput& input, SectionMode mode,
                                        const VerifyOptions& opts = {});

struct PreservationReport {
    std::string id;
    std::uint64_t seed = 0;
    Verdict verdict = Verdict::inconclusive;
    std::string hyperplane;
    ExponentsResult original;
    ExponentsResult section;
    std::vector<QhSummary> section_qh;
    std::vector<std::string> notes;
};

/// Samples a hyperplane, restricts the divisor, and re-runs the freeness and
/// quasi-homogeneity tests on the section.
PreservationReport section_preservation_check(const DivisorInput& input,
                                              const VerifyOptions& opts = {});

struct BertiniTrial {
    std::string hyperplane;
    BertiniReport report;
};

struct BertiniRun {
    std::string id;
    std::uint64_t seed = 0;
    int completed = 0;
    int equal = 0;
    Verdict verdict = Verdict::inconclusive;
    std::vector<BertiniTrial> trials;
    std::vector<std::string> notes;
};

/// Runs the schematic singular-locus comparison against `trials` sampled
/// hyperplanes; passes when at least nine of ten agree.
BertiniRun bertini_run(const DivisorInput& input, int trials, const VerifyOptions& opts = {});

struct CorpusSummary {
    std::vector<VerificationReport> reports;
    std::vector<std::string> errors;  // per-file failures, isolated
    bool any_fail = false;
};

CorpusSummary corpus_run(const std::vector<std::string>& paths, const VerifyOptions& opts = {});

/// Nonzero covector with entries in [-7, 7], drawn from the given generator.
Poly sample_hyperplane(int nvars, std::mt19937_64& rng);

std::string to_text(const VerificationReport& r);
std::string to_json_string(const VerificationReport& r);
std::string to_text(const RecursionReport& r);
std::string to_json_string(const RecursionReport& r);
std::string to_text(const PreservationReport& r);
std::string to_json_string(const PreservationReport& r);
std::string to_text(const BertiniRun& r);
std::string to_json_string(const BertiniRun& r);
std::string to_text(const CorpusSummary& s);
std::string to_json_string(const CorpusSummary& s);
std::string to_text(const ExponentsResult& r);
std::string to_json_string(const ExponentsResult& r);
std::string to_text(const QhReport& r);
std::string to_json_string(const QhReport& r);

std::string to_string(QhStatus s);
std::string to_string(FreenessStatus s);

} // namespace logdiv

#endif
