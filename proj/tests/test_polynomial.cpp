#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dqre/polynomial.hpp"

using namespace dqre;

TEST_CASE("terms merge and zeros drop") {
    Polynomial poly;
    poly.add_term(2.0, 1, 0, 0);
    poly.add_term(3.0, 1, 0, 0);
    poly.add_term(1.0, 0, 2, 0);
    poly.add_term(-1.0, 0, 2, 0);
    REQUIRE(poly.terms().size() == 1);
    CHECK(poly.terms()[0].coeff == doctest::Approx(5.0));
    CHECK(poly.terms()[0].ex == 1);
}

TEST_CASE("evaluation") {
    Polynomial poly{{2.0, 1, 0, 0, 0}, {1.0, 0, 1, 1, 0}, {6.5, 0, 0, 0, 1}};
    const PauliErrorRates in{0.1, 0.2, 0.3};
    CHECK(poly.eval(in, 1e-3) == doctest::Approx(2.0 * 0.1 + 0.2 * 0.3 + 6.5e-3));
    CHECK(Polynomial{}.eval(in, 1e-3) == doctest::Approx(0.0));
}

TEST_CASE("input_terms filters Clifford terms and truncates order") {
    Polynomial poly{{2.0, 1, 0, 0, 0}, {5.0, 1, 2, 0, 0}, {0.8, 0, 0, 0, 1}};
    const auto first = poly.input_terms(1);
    REQUIRE(first.size() == 1);
    CHECK(first[0].coeff == doctest::Approx(2.0));
    const auto all = poly.input_terms();
    CHECK(all.size() == 2);
    for (const auto& t : all)
        CHECK(t.ep == 0);
}

TEST_CASE("term set comparisons") {
    Polynomial a{{2.0, 1, 0, 0, 0}, {1.0, 0, 2, 0, 0}};
    Polynomial b{{1.0, 0, 2, 0, 0}, {2.0, 1, 0, 0, 0}};
    CHECK(terms_equal(a.terms(), b.terms()));
    Polynomial sub{{2.0, 1, 0, 0, 0}};
    CHECK(terms_subset(sub.terms(), a.terms()));
    CHECK_FALSE(terms_subset(a.terms(), sub.terms()));
    Polynomial off{{2.1, 1, 0, 0, 0}, {1.0, 0, 2, 0, 0}};
    CHECK_FALSE(terms_equal(a.terms(), off.terms()));
}

TEST_CASE("canonical order is stable under insertion order") {
    Polynomial a;
    a.add_term(1.0, 2, 0, 0);
    a.add_term(3.0, 0, 0, 1);
    Polynomial b;
    b.add_term(3.0, 0, 0, 1);
    b.add_term(1.0, 2, 0, 0);
    CHECK(a.to_string() == b.to_string());
}
