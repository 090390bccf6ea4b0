#include <logdiv/poly.hpp>

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>

namespace logdiv {

namespace {

struct GrevlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_less(b, a);
    }
};

} // namespace

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.emplace_back(Monomial(nvars), c);
    return p;
}

Poly Poly::variable(int i, int nvars) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    Poly p(nvars);
    p.terms_.emplace_back(Monomial::var(i, nvars), Rational(1));
    return p;
}

Poly Poly::monomial(Monomial m, const Rational& c) {
    Poly p(m.nvars());
    if (c != 0) p.terms_.emplace_back(std::move(m), c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

const Poly::Term& Poly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

const Rational& Poly::coeff(const Monomial& m) const {
    static const Rational zero(0);
    for (const auto& [mon, c] : terms_)
        if (mon == m) return c;
    return zero;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.first.degree() == d; });
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grevlex_less(b.first, a.first); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.second == 0; });
    terms_ = std::move(merged);
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial/ring mismatch");
    if (c == 0) return;
    terms_.emplace_back(m, c);
    normalize();
}

Poly Poly::operator+(const Poly& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("polynomial ring mismatch");
    Poly r(nvars_);
    r.terms_.reserve(terms_.size() + other.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        const auto& a = terms_[i];
        const auto& b = other.terms_[j];
        if (a.first == b.first) {
            Rational c = a.second + b.second;
            if (c != 0) r.terms_.emplace_back(a.first, std::move(c));
            ++i, ++j;
        } else if (grevlex_less(b.first, a.first)) {
            r.terms_.push_back(a);
            ++i;
        } else {
            r.terms_.push_back(b);
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("polynomial ring mismatch");
    std::map<Monomial, Rational, GrevlexDesc> acc;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) acc[ma * mb] += ca * cb;
    Poly r(nvars_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, std::move(c));
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return Poly(nvars_);
    Poly r = *this;
    for (auto& [m, coef] : r.terms_) coef *= c;
    return r;
}

Poly operator*(const Rational& c, const Poly& p) { return p * c; }

Rational Poly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point has wrong length");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m.exps[static_cast<size_t>(i)]; ++e) v *= point[static_cast<size_t>(i)];
        total += v;
    }
    return total;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("substitute: one image per variable required");
    int target = images.empty() ? 0 : images[0].nvars();
    for (const auto& g : images)
        if (g.nvars() != target) throw std::invalid_argument("substitute: mixed target rings");

    // Power cache per variable keeps repeated exponents cheap.
    std::vector<std::vector<Poly>> powers(static_cast<size_t>(nvars_));
    auto power = [&](int var, int e) -> const Poly& {
        auto& cache = powers[static_cast<size_t>(var)];
        if (cache.empty()) cache.push_back(Poly::constant(target, 1));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * images[static_cast<size_t>(var)]);
        return cache[static_cast<size_t>(e)];
    };

    Poly total(target);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (int i = 0; i < nvars_; ++i) {
            int e = m.exps[static_cast<size_t>(i)];
            if (e > 0) t = t * power(i, e);
        }
        total = total + t;
    }
    return total;
}

Poly Poly::dehomogenize(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("chart variable out of range");
    std::vector<Poly> images;
    images.reserve(static_cast<size_t>(nvars_));
    int target = nvars_ - 1;
    int k = 0;
    for (int i = 0; i < nvars_; ++i) {
        if (i == var)
            images.push_back(Poly::constant(target, 1));
        else
            images.push_back(Poly::variable(k++, target));
    }
    return substitute(images);
}

Poly Poly::translate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("translate: point has wrong length");
    std::vector<Poly> images;
    images.reserve(static_cast<size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i)
        images.push_back(Poly::variable(i, nvars_) + Poly::constant(nvars_, point[static_cast<size_t>(i)]));
    return substitute(images);
}

WeightVector::WeightVector(std::vector<int> w, long long d) : weights(std::move(w)), degree(d) {
    for (int a : weights)
        if (a <= 0) throw std::invalid_argument("weights must be strictly positive");
}

Poly partial_derivative(const Poly& f, int var) {
    if (var < 0 || var >= f.nvars()) throw std::invalid_argument("derivative index out of range");
    Poly r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        int e = m.exps[static_cast<size_t>(var)];
        if (e == 0) continue;
        Monomial q = m;
        q.exps[static_cast<size_t>(var)] -= 1;
        r.add_term(q, c * e);
    }
    return r;
}

bool is_quasihomogeneous(const Poly& f, const WeightVector& w) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no weighted degree");
    if (static_cast<int>(w.weights.size()) != f.nvars())
        throw std::invalid_argument("weight vector length mismatch");
    return std::all_of(f.terms().begin(), f.terms().end(), [&](const Poly::Term& t) {
        return t.first.weighted_degree(w.weights) == w.degree;
    });
}

Poly euler_apply(const Poly& f, const WeightVector& w) {
    Poly total(f.nvars());
    for (int i = 0; i < f.nvars(); ++i)
        total = total + Poly::variable(i, f.nvars()) * partial_derivative(f, i) *
                            Rational(w.weights[static_cast<size_t>(i)]);
    return total;
}

bool euler_pairing_check(const Poly& f, const WeightVector& w) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    if (static_cast<int>(w.weights.size()) != f.nvars())
        throw std::invalid_argument("weight vector length mismatch");
    return euler_apply(f, w) == f * Rational(w.degree);
}

// ---------------------------------------------------------------------------
// Parsing and rendering

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    BigInt integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", start);
        return BigInt(text.substr(start, pos - start));
    }
    std::string identifier() {
        skip_ws();
        size_t start = pos;
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected variable name", start);
        ++pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    }
};

int lookup_variable(const std::string& name, const std::vector<std::string>& vars, size_t pos) {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    static const std::string aliases = "xyzw";
    if (name.size() == 1) {
        size_t k = aliases.find(name[0]);
        if (k != std::string::npos && k < vars.size() && vars[k] == variable_name(static_cast<int>(k)))
            return static_cast<int>(k);
    }
    throw ParseError("unknown variable '" + name + "'", pos);
}

} // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    int nvars = static_cast<int>(vars.size());
    Lexer lex{text};
    Poly result(nvars);
    if (lex.done()) throw ParseError("empty expression", 0);

    bool first = true;
    while (!lex.done()) {
        Rational sign(1);
        if (lex.accept('+')) {
            sign = 1;
        } else if (lex.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-'", lex.pos);
        }
        while (lex.accept('+') || lex.peek() == '-') {
            if (lex.accept('-')) sign = -sign;
        }
        first = false;

        Rational coeff = sign;
        Monomial mono(nvars);
        bool saw_factor = false;
        for (;;) {
            lex.skip_ws();
            if (lex.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[lex.pos]))) {
                BigInt num = lex.integer();
                BigInt den = 1;
                if (lex.accept('/')) {
                    den = lex.integer();
                    if (den == 0) throw ParseError("zero denominator", lex.pos);
                }
                coeff *= Rational(num, den);
                saw_factor = true;
            } else if (lex.pos < text.size() &&
                       std::isalpha(static_cast<unsigned char>(text[lex.pos]))) {
                size_t at = lex.pos;
                std::string name = lex.identifier();
                int var = lookup_variable(name, vars, at);
                int exp = 1;
                if (lex.accept('^')) {
                    BigInt e = lex.integer();
                    if (e < 0 || e > 4096) throw ParseError("exponent out of range", lex.pos);
                    exp = static_cast<int>(e);
                }
                mono.exps[static_cast<size_t>(var)] += exp;
                saw_factor = true;
            } else {
                throw ParseError("expected coefficient or variable", lex.pos);
            }
            if (!lex.accept('*')) break;
        }
        if (!saw_factor) throw ParseError("empty term", lex.pos);
        result.add_term(mono, coeff);
    }
    return result;
}

Poly parse_poly(const std::string& text, int nvars) {
    return parse_poly(text, canonical_variables(nvars));
}

std::vector<std::string> canonical_variables(int nvars) {
    std::vector<std::string> vars;
    vars.reserve(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i) vars.push_back(variable_name(i));
    return vars;
}

std::string to_string(const Poly& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (s.empty()) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        bool unit = a == 1;
        if (!unit || m.is_one()) s += to_string(a);
        bool printed_var = false;
        for (int i = 0; i < m.nvars(); ++i) {
            int e = m.exps[static_cast<size_t>(i)];
            if (e == 0) continue;
            if (!unit || printed_var) s += "*";
            s += vars[static_cast<size_t>(i)];
            if (e > 1) s += "^" + std::to_string(e);
            printed_var = true;
            unit = false;
        }
    }
    return s;
}

std::string to_string(const Poly& p) { return to_string(p, canonical_variables(p.nvars())); }

} // namespace logdiv
