#include "support.hpp"

#include "pert/error.hpp"
#include "pert/tropical.hpp"

#include <doctest.h>

using namespace pert;
using test::costs;
using test::Q;

namespace {

std::string error_code(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

std::vector<Rational> indicator(int n, const Term& I) {
    std::vector<Rational> t(static_cast<std::size_t>(n), 0);
    for (int i : I) t[static_cast<std::size_t>(i - 1)] = 1;
    return t;
}

} // namespace

TEST_CASE("make_poly validates and canonicalises") {
    auto f = make_poly(3, {{3}, {1}, {2}, {1}});
    CHECK(f.terms() == SupportFamily{{1}, {2}, {3}});
    CHECK(f == gen_fnk(3, 1));
    CHECK(make_poly(3, {{2, 1}}).terms() == SupportFamily{{1, 2}});

    CHECK(error_code([] { make_poly(2, {{1}, {1, 2}}); }) == "DivisibleTerms");
    CHECK(error_code([] { make_poly(2, {}); }) == "EmptySupport");
    CHECK(error_code([] { make_poly(2, {{}}); }) == "EmptyTerm");
    CHECK(error_code([] { make_poly(2, {{3}}); }) == "IndexOutOfRange");
    CHECK(error_code([] { make_poly(2, {{0}}); }) == "IndexOutOfRange");
    CHECK_NOTHROW(make_poly(6, test::six_terms()));
}

TEST_CASE("eval") {
    auto f31 = gen_fnk(3, 1);
    auto e = eval(f31, costs({"3", "5", "2"}));
    CHECK(e.value == 5);
    CHECK(e.argmax == SupportFamily{{2}});

    auto fig = eval(test::six_poly(), test::ones(6));
    CHECK(fig.value == 3);
    CHECK(fig.argmax == SupportFamily{{1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 6}});

    CHECK(error_code([&] { eval(f31, costs({"1", "2"})); }) == "DimensionMismatch");
    CHECK(error_code([&] { eval(f31, costs({"1", "-2", "0"})); }) == "NegativeCost");
    CHECK(eval(f31, costs({"1", "-2", "0"}), CostDomain::Signed).value == 1);
}

TEST_CASE("eval at an indicator point singles out its term") {
    test::Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = test::uniform(rng, 1, 6);
        auto f = make_poly(n, test::random_antichain(n, rng));
        for (const auto& I : f.terms()) {
            auto e = eval(f, indicator(n, I));
            CHECK(e.value == static_cast<long>(I.size()));
            CHECK(e.argmax == SupportFamily{I});
        }
    }
}

TEST_CASE("a divisible pair never lets the smaller term win strictly") {
    // I = {1} ⊊ J = {1,2}: t_J - t_I = t_2 >= 0 on the orthant.
    test::Rng rng(17);
    const Term I{1}, J{1, 2};
    for (int trial = 0; trial < 500; ++trial) {
        auto t = test::random_costs(3, rng);
        CHECK(term_value(I, t) <= term_value(J, t));
    }
}

TEST_CASE("eval is monotone and conic") {
    test::Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = test::uniform(rng, 1, 6);
        auto f = make_poly(n, test::random_antichain(n, rng));
        auto t = test::random_costs(n, rng);
        auto base = eval(f, t);

        Rational lambda(test::uniform(rng, 0, 9), test::uniform(rng, 1, 5));
        lambda.canonicalize();
        auto scaled = t;
        for (auto& x : scaled) x *= lambda;
        auto es = eval(f, scaled);
        CHECK(es.value == lambda * base.value);
        if (sgn(lambda) > 0) CHECK(es.argmax == base.argmax);

        auto bumped = t;
        bumped[static_cast<std::size_t>(test::uniform(rng, 0, n - 1))] += Rational(1, 3);
        CHECK(eval(f, bumped).value >= base.value);
    }
}

TEST_CASE("eval_min_plus") {
    auto f21 = gen_fnk(2, 1);
    auto e = eval_min_plus(f21, costs({"3", "5"}));
    CHECK(e.value == 3);
    CHECK(e.argmax == SupportFamily{{1}});

    auto e3 = eval_min_plus(gen_fnk(3, 1), costs({"-1", "0", "2"}));
    CHECK(e3.value == -1);
    CHECK(e3.argmax == SupportFamily{{1}});

    auto fig = eval_min_plus(test::six_poly(), test::ones(6));
    CHECK(fig.value == 2);
    CHECK(fig.argmax == SupportFamily{{2, 5}});
}

TEST_CASE("eval_min_plus equals -eval_signed(-t) and the direct minimum") {
    test::Rng rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = test::uniform(rng, 1, 6);
        auto f = make_poly(n, test::random_antichain(n, rng));
        std::vector<Rational> t;
        for (int i = 0; i < n; ++i) t.emplace_back(test::uniform(rng, -20, 20));
        auto neg = t;
        for (auto& x : neg) x = -x;
        auto mn = eval_min_plus(f, t);
        CHECK(mn.value == -eval(f, neg, CostDomain::Signed).value);

        Rational direct = term_value(f.term(0), t);
        for (const auto& I : f.terms()) direct = std::min(direct, Rational(term_value(I, t)));
        CHECK(mn.value == direct);
        for (const auto& I : mn.argmax) CHECK(term_value(I, t) == direct);
    }
}

TEST_CASE("dual") {
    CHECK(dual(gen_fnk(3, 1)) == gen_fnk(3, 2));
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) CHECK(dual(gen_fnk(n, k)) == gen_fnk(n, n - k));
    CHECK(dual(dual(gen_fnk(4, 2))) == gen_fnk(4, 2));
    CHECK(error_code([] { dual(gen_fnk(3, 3)); }) == "FullTerm");
}

TEST_CASE("dual is an involution preserving prerealisability") {
    test::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = test::uniform(rng, 2, 6);
        auto support = test::random_antichain(n, rng);
        Term full;
        for (int i = 1; i <= n; ++i) full.push_back(i);
        if (std::find(support.begin(), support.end(), full) != support.end()) continue;
        auto f = make_poly(n, support);
        auto d = dual(f);  // make_poly inside would throw on a divisible pair
        CHECK(d.size() == f.size());
        CHECK(dual(d) == f);
    }
}

TEST_CASE("product") {
    auto f21 = gen_fnk(2, 1);
    auto p = product(f21, f21);
    CHECK(p.variables() == 4);
    CHECK(p.terms() == SupportFamily{{1, 3}, {1, 4}, {2, 3}, {2, 4}});

    auto unit = product(gen_fnk(1, 1), test::six_poly());
    CHECK(unit.variables() == 7);
    CHECK(unit.terms() == SupportFamily{{1, 2, 4, 7}, {1, 2, 5, 6}, {1, 2, 5, 7}, {1, 3, 4, 7}, {1, 3, 6}});

    auto cube = product(product(f21, f21), f21);
    CHECK(cube.variables() == 6);
    CHECK(cube.size() == 8);
    for (const auto& t : cube.terms()) CHECK(t.size() == 3);
}

TEST_CASE("product sizes and homogeneity") {
    test::Rng rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = test::random_homogeneous(test::uniform(rng, 1, 4), rng);
        auto b = test::random_homogeneous(test::uniform(rng, 1, 4), rng);
        auto p = product(a, b);
        CHECK(p.size() == a.size() * b.size());
        CHECK(is_homogeneous(p));
    }
}

TEST_CASE("gen_fnk") {
    CHECK(gen_fnk(3, 2).terms() == SupportFamily{{1, 2}, {1, 3}, {2, 3}});
    CHECK(gen_fnk(5, 5).terms() == SupportFamily{{1, 2, 3, 4, 5}});
    CHECK(gen_fnk(4, 2).size() == 6);
    CHECK(error_code([] { gen_fnk(3, 0); }) == "BadParameters");
    CHECK(error_code([] { gen_fnk(3, 4); }) == "BadParameters");
}

TEST_CASE("is_homogeneous") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) CHECK(is_homogeneous(gen_fnk(n, k)));
    CHECK_FALSE(is_homogeneous(test::six_poly()));
    for (int n = 2; n <= 7; ++n) CHECK(is_homogeneous(gen_zigzag(n)));
    CHECK(gen_zigzag(4).terms() == SupportFamily{{1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("text form") {
    auto f = test::six_poly();
    CHECK(to_text(f) == "{1,3,6}+{1,4,5}+{1,4,6}+{2,3,6}+{2,5}");
    CHECK(parse_poly_text(to_text(f)) == f);
    CHECK(parse_poly_text(" {2, 5} + {1,3,6}+{1,4,5}+{1,4,6}+{2,3,6} ") == f);
    CHECK(parse_poly_text("{1}", 3).variables() == 3);
    CHECK(error_code([] { parse_poly_text("{1,}"); }) == "BadPolynomialText");
    CHECK(error_code([] { parse_poly_text("{1}{2}"); }) == "BadPolynomialText");
    CHECK(error_code([] { parse_poly_text("{1}+{1,2}"); }) == "DivisibleTerms");
}
