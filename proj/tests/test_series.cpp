#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "conjlang/fsa/operations.hpp"
#include "conjlang/series/growth.hpp"
#include "support.hpp"

using namespace conjlang;
using testing_support::brute_language;
using testing_support::random_dfa;

namespace {

IntPolynomial poly(std::initializer_list<long long> c) {
  std::vector<BigInt> v;
  for (auto x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

std::vector<BigInt> ints(std::initializer_list<long long> c) {
  std::vector<BigInt> v;
  for (auto x : c) v.emplace_back(x);
  return v;
}

const Alphabet ab = Alphabet::plain({"a", "b"});

}  // namespace

TEST_CASE("polynomial arithmetic") {
  IntPolynomial x = poly({1, 1});
  IntPolynomial y = poly({1, -1});
  CHECK(x * y == poly({1, 0, -1}));
  CHECK(divide_exact(poly({1, 0, -1}), y) == x);
  CHECK_THROWS_AS(divide_exact(poly({1, 0, 1}), y), std::domain_error);
  CHECK(gcd(poly({1, 0, -1}), poly({-2, 2})) == poly({-1, 1}));
  CHECK(gcd(poly({6, 12}), poly({4, 8})) == poly({2, 4}));
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({4, 6}).content() == 2);
  CHECK(pseudo_remainder(poly({1, 0, 1}), poly({1, 1})) == poly({2}));
}

TEST_CASE("rational function normalization and text") {
  RationalFunction r(poly({1, 0, -1}), poly({1, -2, 1}));
  CHECK(r.num() == poly({1, 1}));
  CHECK(r.den() == poly({1, -1}));
  CHECK(eq_rational(r, RationalFunction(poly({1, 1}), poly({1, -1}))));
  CHECK_FALSE(eq_rational(RationalFunction(1, poly({1, -1})), RationalFunction(1, poly({1, -2}))));
  RationalFunction neg(poly({-2}), poly({-4, 2}));
  CHECK(neg.num() == poly({1}));
  CHECK(neg.den() == poly({2, -1}));
  CHECK(r.to_string() == "num: 1,1 ; den: 1,-1");
  CHECK(RationalFunction::parse(r.to_string()) == r);
  CHECK(RationalFunction::parse("num: 0 ; den: 1").num().is_zero());
  CHECK_THROWS_AS(RationalFunction::parse("1/(1-z)"), std::invalid_argument);
  CHECK_THROWS_AS(RationalFunction(1, poly({0, 1})), std::domain_error);
}

TEST_CASE("expand") {
  CHECK(expand(RationalFunction(1, poly({1, -2})), 4) == ints({1, 2, 4, 8, 16}));
  // (1+z)(1+2z+3z^2-z^3-z^4)/(1-z^2)^2
  RationalFunction conj(poly({1, 1}) * poly({1, 2, 3, -1, -1}), poly({1, 0, -1}) * poly({1, 0, -1}));
  CHECK(expand(conj, 7) == ints({1, 3, 7, 8, 11, 12, 15, 16}));
  CHECK(expand(RationalFunction(), 3) == ints({0, 0, 0, 0}));
  CHECK_THROWS_AS(expand(RationalFunction(1, poly({2, -1})), 3), std::domain_error);
}

TEST_CASE("count_by_length and rational_series on known languages") {
  CHECK(count_by_length(Dfa::universal(ab), 5) == ints({1, 2, 4, 8, 16, 32}));
  CHECK(rational_series(Dfa::universal(ab)) == RationalFunction(1, poly({1, -2})));

  Dfa astar_bstar = to_dfa(Regex::concat({Regex::star(Regex::literal("a")), Regex::star(Regex::literal("b"))}), ab);
  auto counts = count_by_length(astar_bstar, 20);
  for (int i = 0; i <= 10; ++i)
    CHECK(counts[i] == static_cast<long long>(brute_language(restrict_length(astar_bstar, i, i), i).size()));
  for (int i = 0; i <= 20; ++i) CHECK(counts[i] == i + 1);
  CHECK(rational_series(astar_bstar) == RationalFunction(1, poly({1, -2, 1})));

  CHECK(count_by_length(Dfa::empty_language(ab), 4) == ints({0, 0, 0, 0, 0}));
  CHECK(rational_series(Dfa::empty_language(ab)).num().is_zero());
}

TEST_CASE("series of random machines") {
  Alphabet abc = Alphabet::plain({"a", "b", "c"});
  std::mt19937 rng(17);
  for (int i = 0; i < 60; ++i) {
    Dfa d = random_dfa(abc, 2 + i % 6, rng);
    RationalFunction r = rational_series(d);
    CHECK(expand(r, 50) == count_by_length(d, 50));
    CHECK(eq_rational(r, rational_series(minimize(d))));
    auto live = useful_states(minimize(d));
    CHECK(r.den().degree() <= static_cast<int>(std::count(live.begin(), live.end(), true)));

    Dfa e = random_dfa(abc, 3, rng);
    Dfa x = difference(d, e), y = intersection(d, e);
    CHECK(eq_rational(rational_series(union_of(x, y)), rational_series(x) + rational_series(y)));
  }
}

TEST_CASE("counts tsv") { CHECK(counts_tsv(ints({1, 3})) == "0\t1\n1\t3\n"); }
