#include "pert/tropical.hpp"

#include "pert/error.hpp"

#include <algorithm>
#include <cctype>

namespace pert {

std::optional<std::size_t> TropicalPolynomial::find(const Term& t) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
    if (it == terms_.end() || *it != t) return std::nullopt;
    return static_cast<std::size_t>(it - terms_.begin());
}

TropicalPolynomial make_poly(int n, SupportFamily support) {
    if (n < 1) throw Error(ErrorKind::Input, "BadParameters", "a polynomial needs at least one variable");
    if (support.empty()) throw Error(ErrorKind::Input, "EmptySupport", "a polynomial needs at least one term");
    for (const auto& t : support) {
        if (t.empty()) throw Error(ErrorKind::Input, "EmptyTerm", "terms must be nonempty");
        for (int i : t)
            if (i < 1 || i > n)
                throw Error(ErrorKind::Input, "IndexOutOfRange",
                            "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    support = canonical_family(std::move(support));
    for (std::size_t a = 0; a < support.size(); ++a)
        for (std::size_t b = 0; b < support.size(); ++b)
            if (a != b && support[a].size() < support[b].size() && is_subset(support[a], support[b]))
                throw Error(ErrorKind::Input, "DivisibleTerms",
                            format_term(support[a]) + " divides " + format_term(support[b]));
    TropicalPolynomial f;
    f.n_ = n;
    f.terms_ = std::move(support);
    return f;
}

Rational term_value(const Term& term, std::span<const Rational> t) {
    Rational sum = 0;
    for (int i : term) sum += t[static_cast<std::size_t>(i - 1)];
    return sum;
}

Evaluation eval(const TropicalPolynomial& f, std::span<const Rational> t, CostDomain domain) {
    if (t.size() != static_cast<std::size_t>(f.variables()))
        throw Error(ErrorKind::Dimension, "DimensionMismatch",
                    "expected " + std::to_string(f.variables()) + " costs, got " + std::to_string(t.size()));
    if (domain == CostDomain::Orthant)
        for (std::size_t i = 0; i < t.size(); ++i)
            if (sgn(t[i]) < 0)
                throw Error(ErrorKind::Input, "NegativeCost", "cost " + std::to_string(i + 1) + " is negative");

    Evaluation e;
    bool first = true;
    for (const auto& term : f.terms()) {
        Rational v = term_value(term, t);
        if (first || v > e.value) {
            e.value = v;
            e.argmax.assign(1, term);
            first = false;
        } else if (v == e.value) {
            e.argmax.push_back(term);
        }
    }
    return e;
}

Evaluation eval_min_plus(const TropicalPolynomial& f, std::span<const Rational> t) {
    CostVector negated(t.begin(), t.end());
    for (auto& x : negated) x = -x;
    Evaluation e = eval(f, negated, CostDomain::Signed);
    e.value = -e.value;
    return e;
}

TropicalPolynomial dual(const TropicalPolynomial& f) {
    const int n = f.variables();
    SupportFamily out;
    for (const auto& term : f.terms()) {
        if (term.size() == static_cast<std::size_t>(n))
            throw Error(ErrorKind::Domain, "FullTerm", "the dual is undefined when [n] is a term");
        Term c;
        for (int i = 1; i <= n; ++i)
            if (!std::binary_search(term.begin(), term.end(), i)) c.push_back(i);
        out.push_back(std::move(c));
    }
    return make_poly(n, std::move(out));
}

TropicalPolynomial product(const TropicalPolynomial& a, const TropicalPolynomial& b) {
    const int shift = a.variables();
    SupportFamily out;
    out.reserve(a.size() * b.size());
    for (const auto& I : a.terms()) {
        for (const auto& J : b.terms()) {
            Term t = I;
            for (int j : J) t.push_back(j + shift);
            out.push_back(std::move(t));
        }
    }
    return make_poly(a.variables() + b.variables(), std::move(out));
}

TropicalPolynomial gen_fnk(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw Error(ErrorKind::Input, "BadParameters", "need 1 <= k <= n, got n=" + std::to_string(n) +
                                                           " k=" + std::to_string(k));
    SupportFamily out;
    std::vector<char> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    do {
        Term t;
        for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)]) t.push_back(i + 1);
        out.push_back(std::move(t));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return make_poly(n, std::move(out));
}

TropicalPolynomial gen_zigzag(int n) {
    if (n < 1) throw Error(ErrorKind::Input, "BadParameters", "zigzag needs n >= 1");
    if (n == 1) return make_poly(1, {{1}});
    SupportFamily out;
    for (int i = 1; i < n; ++i) out.push_back({i, i + 1});
    return make_poly(n, std::move(out));
}

bool is_homogeneous(const TropicalPolynomial& f) {
    const auto d = f.term(0).size();
    return std::all_of(f.terms().begin(), f.terms().end(), [d](const Term& t) { return t.size() == d; });
}

std::string to_text(const TropicalPolynomial& f) {
    std::string out;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k) out += '+';
        out += format_term(f.term(k));
    }
    return out;
}

TropicalPolynomial parse_poly_text(std::string_view text, int n) {
    auto fail = [&](const std::string& why) {
        return Error(ErrorKind::Input, "BadPolynomialText", why + " in '" + std::string(text) + "'");
    };
    SupportFamily support;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    int largest = 0;
    while (true) {
        skip_ws();
        if (pos >= text.size() || text[pos] != '{') throw fail("expected '{'");
        ++pos;
        Term t;
        while (true) {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos || pos - start > 9) throw fail("expected an index");
            int idx = std::stoi(std::string(text.substr(start, pos - start)));
            t.push_back(idx);
            largest = std::max(largest, idx);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                break;
            }
            throw fail("expected ',' or '}'");
        }
        support.push_back(std::move(t));
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '+') throw fail("expected '+'");
        ++pos;
    }
    return make_poly(n > 0 ? n : largest, std::move(support));
}

} // namespace pert
