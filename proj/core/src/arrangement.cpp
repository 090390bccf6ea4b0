#include <logdiv/arrangement.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace logdiv {

bool IntersectionLattice::contains(const Flat& outer, const Flat& inner) {
    return std::includes(inner.forms.begin(), inner.forms.end(), outer.forms.begin(),
                         outer.forms.end());
}

QVector linear_form_covector(const Poly& form) {
    if (form.is_zero() || form.degree() != 1 || !form.is_homogeneous())
        throw std::invalid_argument("expected a nonzero homogeneous linear form");
    QVector v(static_cast<size_t>(form.nvars()), Rational(0));
    for (const auto& [m, c] : form.terms())
        for (int i = 0; i < form.nvars(); ++i)
            if (m.exps[static_cast<size_t>(i)] == 1) v[static_cast<size_t>(i)] = c;
    return v;
}

IntersectionLattice intersection_lattice(const std::vector<Poly>& forms, int n) {
    std::vector<QVector> covectors;
    for (const Poly& f : forms) {
        if (f.nvars() != n + 1)
            throw std::invalid_argument("linear form must have n+1 variables");
        covectors.push_back(linear_form_covector(f));
    }
    for (size_t i = 0; i < covectors.size(); ++i)
        for (size_t j = i + 1; j < covectors.size(); ++j) {
            RowSpan span(static_cast<size_t>(n + 1));
            span.add(covectors[i]);
            if (!span.add(covectors[j]))
                throw std::invalid_argument("proportional forms at indices " + std::to_string(i) +
                                            " and " + std::to_string(j));
        }

    IntersectionLattice L;
    L.n = n;
    L.forms = forms;

    std::map<std::vector<size_t>, Flat> seen;
    Flat top;  // the whole space: rank 0, no containing hyperplanes
    seen.emplace(top.forms, top);

    std::vector<Flat> queue{top};
    while (!queue.empty()) {
        Flat flat = std::move(queue.back());
        queue.pop_back();
        for (size_t i = 0; i < covectors.size(); ++i) {
            if (std::binary_search(flat.forms.begin(), flat.forms.end(), i)) continue;
            RowSpan span(static_cast<size_t>(n + 1));
            for (const QVector& row : flat.basis) span.add(row);
            span.add(covectors[i]);

            Flat next;
            next.rank = static_cast<int>(span.rank());
            next.basis = span.rows();
            for (size_t j = 0; j < covectors.size(); ++j)
                if (span.contains(covectors[j])) next.forms.push_back(j);
            if (seen.emplace(next.forms, next).second) queue.push_back(next);
        }
    }

    for (auto& [key, flat] : seen) L.flats.push_back(std::move(flat));
    std::sort(L.flats.begin(), L.flats.end(), [](const Flat& a, const Flat& b) {
        return std::tie(a.rank, a.forms) < std::tie(b.rank, b.forms);
    });
    return L;
}

namespace {

/// mu(top, x) over the subposet selected by `keep`, by the defining recursion
/// mu(x) = -sum of mu(y) over kept flats y properly containing x.
std::vector<BigInt> moebius_on(const IntersectionLattice& L, const std::vector<bool>& keep) {
    std::vector<BigInt> mu(L.flats.size(), 0);
    for (size_t x = 0; x < L.flats.size(); ++x) {
        if (!keep[x]) continue;
        if (L.flats[x].rank == 0) {
            mu[x] = 1;
            continue;
        }
        BigInt total = 0;
        for (size_t y = 0; y < L.flats.size(); ++y) {
            if (!keep[y] || y == x) continue;
            if (L.flats[y].rank < L.flats[x].rank &&
                IntersectionLattice::contains(L.flats[y], L.flats[x]))
                total += mu[y];
        }
        mu[x] = -total;
    }
    return mu;
}

} // namespace

std::vector<BigInt> moebius_values(const IntersectionLattice& L) {
    return moebius_on(L, std::vector<bool>(L.flats.size(), true));
}

std::vector<BigInt> indicator_coefficients(const IntersectionLattice& L) {
    std::vector<bool> projective(L.flats.size());
    for (size_t x = 0; x < L.flats.size(); ++x) projective[x] = L.flats[x].rank <= L.n;
    return moebius_on(L, projective);
}

UniPoly characteristic_polynomial(const IntersectionLattice& L) {
    std::vector<BigInt> mu = moebius_values(L);
    UniPoly chi(static_cast<size_t>(L.n + 2), BigInt(0));
    for (size_t x = 0; x < L.flats.size(); ++x)
        chi[static_cast<size_t>(L.n + 1 - L.flats[x].rank)] += mu[x];
    return chi;
}

IntersectionLattice generic_section(const IntersectionLattice& L) {
    if (L.n < 2) throw std::invalid_argument("section needs ambient dimension at least 2");

    IntersectionLattice S;
    S.n = L.n - 1;
    S.forms = L.forms;  // closure sets keep indexing the original forms

    int max_rank = 0;
    for (const Flat& flat : L.flats) {
        max_rank = std::max(max_rank, flat.rank);
        if (flat.rank <= L.n - 1) S.flats.push_back(flat);
    }
    if (max_rank >= L.n) {
        // All deeper flats collapse to the single cone point of the section.
        Flat center;
        center.rank = L.n;
        for (size_t i = 0; i < L.forms.size(); ++i) center.forms.push_back(i);
        S.flats.push_back(std::move(center));
    }
    return S;
}

std::string to_string(const UniPoly& p) {
    std::string s;
    for (size_t k = p.size(); k-- > 0;) {
        const BigInt& c = p[k];
        if (c == 0) continue;
        BigInt a = c;
        if (s.empty()) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1 || k == 0) s += a.str();
        if (k >= 1) {
            if (a != 1) s += "*";
            s += "t";
            if (k >= 2) s += "^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace logdiv
