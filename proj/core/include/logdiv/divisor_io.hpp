#ifndef LOGDIV_DIVISOR_IO_HPP
#define LOGDIV_DIVISOR_IO_HPP

#include <logdiv/csm.hpp>
#include <logdiv/logderiv.hpp>

#include <string>
#include <vector>

namespace logdiv {

struct DivisorInput {
    std::string id;
    DivisorSpec spec;
    std::vector<CurveSingularPoint> singular_points;
    bool has_singular_data = false;
};

/// Loads a divisor description. JSON files carry {"n": int, "f": "..."} or
/// {"n": int, "arrangement": ["...", ...]} plus optional "singular_points";
/// plain-text files list one linear form or one integer coefficient row per
/// line ('#' starts a comment).
DivisorInput load_divisor_file(const std::string& path);

DivisorInput parse_divisor_json_text(const std::string& text, const std::string& id);
DivisorInput parse_arrangement_text(const std::string& text, const std::string& id);

/// Affine germ: a single polynomial; the variable count is inferred from the
/// identifiers that occur (x,y,z,w and x0..xN).
Poly parse_germ_text(const std::string& text);
Poly load_germ_file(const std::string& path);

/// Number of variables implied by the identifiers in `text`.
int infer_variable_count(const std::string& text);

std::string read_file(const std::string& path);

} // namespace logdiv

#endif
