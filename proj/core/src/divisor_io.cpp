#include <logdiv/divisor_io.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace logdiv {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int infer_variable_count(const std::string& text) {
    int count = 0;
    for (size_t i = 0; i < text.size();) {
        if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
        std::string name = text.substr(start, i - start);
        if (name.size() == 1) {
            size_t k = std::string("xyzw").find(name[0]);
            if (k != std::string::npos) count = std::max(count, static_cast<int>(k) + 1);
        } else if (name[0] == 'x' &&
                   std::all_of(name.begin() + 1, name.end(),
                               [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            count = std::max(count, std::stoi(name.substr(1)) + 1);
        }
    }
    return count;
}

namespace {

std::string strip_comment(const std::string& line) {
    size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

Rational json_rational(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) {
        if (auto q = parse_rational(v.get<std::string>())) return *q;
        throw std::runtime_error(where + ": cannot parse rational '" + v.get<std::string>() + "'");
    }
    throw std::runtime_error(where + ": expected integer or rational string");
}

void finish(DivisorInput& input) {
    if (!input.spec.arrangement_forms.empty() && input.spec.f.is_zero()) {
        Poly prod = Poly::constant(input.spec.n + 1, 1);
        for (const Poly& form : input.spec.arrangement_forms) prod = prod * form;
        input.spec.f = prod;
    }
    validate_divisor(input.spec);
}

} // namespace

DivisorInput parse_divisor_json_text(const std::string& text, const std::string& id) {
    nlohmann::json j = nlohmann::json::parse(text);
    DivisorInput input;
    input.id = id;
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::runtime_error(id + ": missing integer field 'n'");
    input.spec.n = j["n"].get<int>();
    int nvars = input.spec.n + 1;

    if (j.contains("arrangement")) {
        for (const auto& entry : j["arrangement"])
            input.spec.arrangement_forms.push_back(parse_poly(entry.get<std::string>(), nvars));
    }
    if (j.contains("f")) input.spec.f = parse_poly(j["f"].get<std::string>(), nvars);
    if (!j.contains("f") && !j.contains("arrangement"))
        throw std::runtime_error(id + ": need 'f' or 'arrangement'");

    if (j.contains("singular_points")) {
        input.has_singular_data = true;
        for (const auto& entry : j["singular_points"]) {
            CurveSingularPoint p;
            for (const auto& coord : entry.at("point"))
                p.point.push_back(json_rational(coord, id));
            p.milnor = entry.at("milnor").get<long long>();
            if (static_cast<int>(p.point.size()) != nvars)
                throw std::runtime_error(id + ": singular point needs n+1 coordinates");
            input.singular_points.push_back(std::move(p));
        }
    }
    finish(input);
    return input;
}

DivisorInput parse_arrangement_text(const std::string& text, const std::string& id) {
    std::vector<std::string> form_lines;
    std::vector<std::vector<long long>> rows;
    std::istringstream in(text);
    std::string line;
    size_t width = 0;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (blank(line)) continue;
        if (std::any_of(line.begin(), line.end(),
                        [](char c) { return std::isalpha(static_cast<unsigned char>(c)); })) {
            form_lines.push_back(line);
        } else {
            std::istringstream cells(line);
            std::vector<long long> row;
            long long v;
            while (cells >> v) row.push_back(v);
            if (row.empty()) throw std::runtime_error(id + ": unreadable matrix row '" + line + "'");
            if (width == 0) width = row.size();
            if (row.size() != width)
                throw std::runtime_error(id + ": matrix rows have unequal lengths");
            rows.push_back(std::move(row));
        }
    }
    int nvars = std::max(static_cast<int>(width), infer_variable_count(text));
    if (nvars < 2) throw std::runtime_error(id + ": ambient dimension too small");

    DivisorInput input;
    input.id = id;
    input.spec.n = nvars - 1;
    for (const std::string& s : form_lines)
        input.spec.arrangement_forms.push_back(parse_poly(s, nvars));
    for (const auto& row : rows) {
        Poly form(nvars);
        for (int i = 0; i < static_cast<int>(row.size()); ++i)
            if (row[static_cast<size_t>(i)] != 0)
                form.add_term(Monomial::var(i, nvars), Rational(row[static_cast<size_t>(i)]));
        input.spec.arrangement_forms.push_back(std::move(form));
    }
    if (input.spec.arrangement_forms.empty())
        throw std::runtime_error(id + ": no forms found");
    finish(input);
    return input;
}

DivisorInput load_divisor_file(const std::string& path) {
    std::string text = read_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return parse_divisor_json_text(text, path);
    return parse_arrangement_text(text, path);
}

Poly parse_germ_text(const std::string& text) {
    std::string body;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (!blank(line)) body += line + " ";
    }
    int nvars = infer_variable_count(body);
    if (nvars == 0) throw std::runtime_error("no variables found in germ");
    return parse_poly(body, nvars);
}

Poly load_germ_file(const std::string& path) { return parse_germ_text(read_file(path)); }

} // namespace logdiv
