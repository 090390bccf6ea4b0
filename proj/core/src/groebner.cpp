#include <logdiv/groebner.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace logdiv {

long long default_pair_budget() {
    static const long long value = [] {
        if (const char* env = std::getenv("LOGDIV_MAX_STEPS")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end && *end == '\0' && v > 0) return v;
        }
        return 1'000'000LL;
    }();
    return value;
}

const Poly::Term& leading_term(const Poly& f, MonomialOrder order) {
    if (f.is_zero()) throw std::logic_error("leading term of zero polynomial");
    if (order == MonomialOrder::grevlex) return f.leading_term();
    const Poly::Term* best = &f.terms().front();
    for (const auto& t : f.terms())
        if (monomial_less(best->first, t.first, order)) best = &t;
    return *best;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, MonomialOrder order) {
    Poly p = f;
    Poly remainder(f.nvars());
    while (!p.is_zero()) {
        const auto& [lm, lc] = leading_term(p, order);
        bool reduced = false;
        for (const Poly& g : basis) {
            if (g.is_zero()) continue;
            const auto& [gm, gc] = leading_term(g, order);
            if (!gm.divides(lm)) continue;
            p = p - Poly::monomial(lm / gm, lc / gc) * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lm, lc);
            p = p - Poly::monomial(lm, lc);
        }
    }
    return remainder;
}

namespace {

struct SPair {
    size_t i, j;
    Monomial lcm;
    long long sugar;
};

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t k = 0; k < a.exps.size(); ++k)
        if (a.exps[k] > 0 && b.exps[k] > 0) return false;
    return true;
}

/// Gebauer-Moeller pair update: prunes the queue with the B/M/F criteria as
/// generator `t` joins the basis.
void update_pairs(std::vector<SPair>& pairs, const std::vector<Poly>& basis,
                  const std::vector<long long>& sugars, size_t t, MonomialOrder order) {
    const Monomial& lt_t = leading_term(basis[t], order).first;

    std::vector<SPair> fresh;
    for (size_t i = 0; i < t; ++i) {
        if (basis[i].is_zero()) continue;
        const Monomial& lt_i = leading_term(basis[i], order).first;
        Monomial l = Monomial::lcm(lt_i, lt_t);
        long long sugar = std::max(sugars[i] + l.degree() - lt_i.degree(),
                                   sugars[t] + l.degree() - lt_t.degree());
        fresh.push_back(SPair{i, t, std::move(l), sugar});
    }

    // M criterion: drop (i,t) when another new pair's lcm divides it properly.
    std::vector<bool> dropped(fresh.size(), false);
    for (size_t a = 0; a < fresh.size(); ++a) {
        for (size_t b = 0; b < fresh.size() && !dropped[a]; ++b) {
            if (a == b) continue;
            if (fresh[b].lcm == fresh[a].lcm) {
                dropped[a] = b < a;  // F criterion: keep the first of equal lcms
            } else if (fresh[b].lcm.divides(fresh[a].lcm)) {
                dropped[a] = true;
            }
        }
    }
    std::vector<SPair> kept;
    for (size_t a = 0; a < fresh.size(); ++a)
        if (!dropped[a]) kept.push_back(std::move(fresh[a]));
    // Product criterion.
    std::erase_if(kept, [&](const SPair& p) {
        return coprime(leading_term(basis[p.i], order).first, lt_t);
    });

    // B criterion on the old queue.
    std::erase_if(pairs, [&](const SPair& p) {
        if (!lt_t.divides(p.lcm)) return false;
        const Monomial& lt_i = leading_term(basis[p.i], order).first;
        const Monomial& lt_j = leading_term(basis[p.j], order).first;
        return Monomial::lcm(lt_i, lt_t) != p.lcm && Monomial::lcm(lt_j, lt_t) != p.lcm;
    });

    pairs.insert(pairs.end(), std::make_move_iterator(kept.begin()),
                 std::make_move_iterator(kept.end()));
}

size_t select_pair(const std::vector<SPair>& pairs, MonomialOrder order) {
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
        const SPair& a = pairs[k];
        const SPair& b = pairs[best];
        bool better;
        if (a.sugar != b.sugar)
            better = a.sugar < b.sugar;
        else if (a.lcm != b.lcm)
            better = monomial_less(a.lcm, b.lcm, order);
        else
            better = std::tie(a.i, a.j) < std::tie(b.i, b.j);
        if (better) best = k;
    }
    return best;
}

std::vector<Poly> interreduce(std::vector<Poly> basis, MonomialOrder order) {
    std::erase_if(basis, [](const Poly& g) { return g.is_zero(); });
    // Minimalize: drop g when another kept element's leading term divides LT(g).
    std::vector<Poly> minimal;
    std::sort(basis.begin(), basis.end(), [order](const Poly& a, const Poly& b) {
        return monomial_less(leading_term(a, order).first, leading_term(b, order).first, order);
    });
    for (const Poly& g : basis) {
        const Monomial& lt = leading_term(g, order).first;
        bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Poly& h) {
            return leading_term(h, order).first.divides(lt);
        });
        if (!redundant) minimal.push_back(g);
    }
    // Tail-reduce each element by the rest and make monic.
    std::vector<Poly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = normal_form(minimal[i], others, order);
        reduced.push_back(r * (Rational(1) / leading_term(r, order).second));
    }
    std::sort(reduced.begin(), reduced.end(), [order](const Poly& a, const Poly& b) {
        return monomial_less(leading_term(b, order).first, leading_term(a, order).first, order);
    });
    return reduced;
}

} // namespace

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const GroebnerOptions& opts) {
    std::vector<Poly> basis;
    std::vector<long long> sugars;
    int nvars = -1;
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        if (nvars == -1) nvars = g.nvars();
        if (g.nvars() != nvars) throw std::invalid_argument("generators from different rings");
        basis.push_back(g);
        sugars.push_back(g.degree());
    }
    if (basis.empty()) return {};

    std::vector<SPair> pairs;
    for (size_t t = 0; t < basis.size(); ++t) update_pairs(pairs, basis, sugars, t, opts.order);

    long long steps = 0;
    while (!pairs.empty()) {
        if (++steps > opts.max_pairs)
            throw BudgetExceeded("S-pair budget of " + std::to_string(opts.max_pairs) +
                                 " exceeded");
        size_t k = select_pair(pairs, opts.order);
        SPair pair = std::move(pairs[k]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));

        const auto& [mi, ci] = leading_term(basis[pair.i], opts.order);
        const auto& [mj, cj] = leading_term(basis[pair.j], opts.order);
        Poly s = Poly::monomial(pair.lcm / mi, Rational(1) / ci) * basis[pair.i] -
                 Poly::monomial(pair.lcm / mj, Rational(1) / cj) * basis[pair.j];
        Poly r = normal_form(s, basis, opts.order);
        if (r.is_zero()) continue;

        basis.push_back(std::move(r));
        sugars.push_back(pair.sugar);
        update_pairs(pairs, basis, sugars, basis.size() - 1, opts.order);
    }
    return interreduce(std::move(basis), opts.order);
}

bool ideal_membership(const Poly& f, const std::vector<Poly>& gb, MonomialOrder order) {
    return normal_form(f, gb, order).is_zero();
}

bool ideal_equal(const std::vector<Poly>& gens_a, const std::vector<Poly>& gens_b,
                 const GroebnerOptions& opts) {
    std::vector<Poly> a = groebner_basis(gens_a, opts);
    std::vector<Poly> b = groebner_basis(gens_b, opts);
    return a == b;
}

long long quotient_dimension(const std::vector<Poly>& gb, MonomialOrder order) {
    if (gb.empty()) return -1;
    int nvars = gb.front().nvars();

    std::vector<Monomial> lts;
    for (const Poly& g : gb) lts.push_back(leading_term(g, order).first);

    // Finite iff every variable appears as a pure power among the leading terms.
    std::vector<int> bound(static_cast<size_t>(nvars), -1);
    for (const Monomial& m : lts) {
        int support = -1;
        bool pure = true;
        for (int v = 0; v < nvars; ++v) {
            if (m.exps[static_cast<size_t>(v)] == 0) continue;
            if (support != -1) {
                pure = false;
                break;
            }
            support = v;
        }
        if (m.is_one()) return 0;  // unit ideal
        if (!pure || support == -1) continue;
        int e = m.exps[static_cast<size_t>(support)];
        auto& b = bound[static_cast<size_t>(support)];
        if (b == -1 || e < b) b = e;
    }
    for (int b : bound)
        if (b == -1) return -1;

    long long count = 0;
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    std::function<void(int)> walk = [&](int v) {
        if (v == nvars) {
            Monomial m(nvars);
            m.exps = std::vector<int>(exps.begin(), exps.end());
            for (const Monomial& lt : lts)
                if (lt.divides(m)) return;
            ++count;
            return;
        }
        for (int e = 0; e < bound[static_cast<size_t>(v)]; ++e) {
            exps[static_cast<size_t>(v)] = e;
            walk(v + 1);
        }
        exps[static_cast<size_t>(v)] = 0;
    };
    walk(0);
    return count;
}

std::vector<Monomial> standard_monomials(const std::vector<Poly>& gb, MonomialOrder order) {
    long long dim = quotient_dimension(gb, order);
    if (dim < 0) throw std::logic_error("standard monomial basis is infinite");

    int nvars = gb.front().nvars();
    std::vector<Monomial> lts;
    for (const Poly& g : gb) lts.push_back(leading_term(g, order).first);
    std::vector<int> bound(static_cast<size_t>(nvars), 0);
    for (const Monomial& m : lts)
        for (int v = 0; v < nvars; ++v) {
            int e = m.exps[static_cast<size_t>(v)];
            bound[static_cast<size_t>(v)] = std::max(bound[static_cast<size_t>(v)], e);
        }

    std::vector<Monomial> result;
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    std::function<void(int)> walk = [&](int v) {
        if (v == nvars) {
            Monomial m(nvars);
            m.exps = exps;
            for (const Monomial& lt : lts)
                if (lt.divides(m)) return;
            result.push_back(m);
            return;
        }
        for (int e = 0; e <= bound[static_cast<size_t>(v)]; ++e) {
            exps[static_cast<size_t>(v)] = e;
            walk(v + 1);
        }
        exps[static_cast<size_t>(v)] = 0;
    };
    walk(0);
    std::sort(result.begin(), result.end(),
              [order](const Monomial& a, const Monomial& b) { return monomial_less(a, b, order); });
    return result;
}

bool vanishes_only_at_origin(const std::vector<Poly>& gb, MonomialOrder order) {
    long long m = quotient_dimension(gb, order);
    if (m < 0) return false;
    if (gb.empty()) return false;
    int nvars = gb.front().nvars();
    // x_i nilpotent mod I implies x_i^m in I (powers of x_i up to the
    // nilpotency index are independent in the quotient).
    for (int i = 0; i < nvars; ++i) {
        Monomial power(nvars);
        power.exps[static_cast<size_t>(i)] = static_cast<int>(m);
        if (!ideal_membership(Poly::monomial(power, Rational(1)), gb, order)) return false;
    }
    return true;
}

int krull_dimension(const std::vector<Poly>& gb, MonomialOrder order) {
    if (gb.empty()) throw std::invalid_argument("zero ideal has no staircase");
    int nvars = gb.front().nvars();
    std::vector<Monomial> lts;
    for (const Poly& g : gb) lts.push_back(leading_term(g, order).first);
    for (const Monomial& m : lts)
        if (m.is_one()) return -1;

    // dim R/I = dim R/LT(I) = largest |S| with no leading term supported in S.
    int best = -1;
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        int size = 0;
        for (int v = 0; v < nvars; ++v)
            if (mask & (1u << v)) ++size;
        if (size <= best) continue;
        bool independent = true;
        for (const Monomial& m : lts) {
            bool supported = true;
            for (int v = 0; v < nvars && supported; ++v)
                if (m.exps[static_cast<size_t>(v)] > 0 && !(mask & (1u << v))) supported = false;
            if (supported) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

bool is_reduced(const Poly& f, const GroebnerOptions& opts) {
    if (f.is_zero()) throw std::invalid_argument("squarefreeness needs a nonzero polynomial");
    if (f.is_constant()) return true;  // empty vanishing locus
    std::vector<Poly> gens{f};
    for (int i = 0; i < f.nvars(); ++i) gens.push_back(partial_derivative(f, i));
    std::vector<Poly> gb = groebner_basis(gens, opts);
    int dim = krull_dimension(gb, opts.order);
    return dim <= f.nvars() - 2;  // -1 means the empty locus
}

} // namespace logdiv
