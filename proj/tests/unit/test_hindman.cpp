#include <optional>
#include <vector>

#include "doctest.h"
#include "hypergerm/errors.hpp"
#include "hypergerm/hindman.hpp"

using namespace hypergerm;

namespace {

// Independent oracle: walk every k-subset of 1..window in lexicographic
// order and return the first one whose nonempty subset sums stay inside the
// window and share one color. Deliberately not the DFS under test.
std::optional<std::vector<long>> brute_force(const Coloring& coloring, int k,
                                             long window) {
  std::vector<long> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    bool mono = true;
    std::string color = coloring.color_key(idx[0]);
    for (unsigned mask = 1; mask < (1u << k) && mono; ++mask) {
      long sum = 0;
      for (int i = 0; i < k; ++i) {
        if (mask & (1u << i)) sum += idx[i];
      }
      if (sum > window || coloring.color_key(sum) != color) mono = false;
    }
    if (mono) return idx;

    int pos = k - 1;
    while (pos >= 0 && idx[pos] == window - (k - 1 - pos)) --pos;
    if (pos < 0) return std::nullopt;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

TEST_SUITE("hindman") {

TEST_CASE("parity coloring yields the even set two four six") {
  auto cert = search_monochromatic(Coloring::modular(2), 3, 100);
  REQUIRE(cert.has_value());
  CHECK(cert->set == std::vector<long>{2, 4, 6});
  CHECK(cert->color == "0");
  REQUIRE(cert->sums.size() == 7);
  long expect[] = {2, 4, 6, 6, 8, 10, 12};
  for (int i = 0; i < 7; ++i) {
    CHECK(cert->sums[i].sum == expect[i]);
    CHECK(cert->sums[i].color == "0");
    CHECK(cert->sums[i].sum % 2 == 0);
  }
  CHECK(verify_certificate(Coloring::modular(2), *cert));
}

TEST_CASE("further catalog searches") {
  auto mod3 = search_monochromatic(Coloring::modular(3), 2, 20);
  REQUIRE(mod3.has_value());
  CHECK(mod3->set == std::vector<long>{3, 6});
  long expect[] = {3, 6, 9};
  for (int i = 0; i < 3; ++i) CHECK(mod3->sums[i].sum == expect[i]);

  // constant coloring: everything is monochromatic, minimum wins
  auto mod1 = search_monochromatic(Coloring::modular(1), 4, 50);
  REQUIRE(mod1.has_value());
  CHECK(mod1->set == std::vector<long>{1, 2, 3, 4});
  CHECK(mod1->sums.size() == 15);

  auto mod4 = search_monochromatic(Coloring::modular(4), 3, 40);
  REQUIRE(mod4.has_value());
  CHECK(mod4->set == std::vector<long>{4, 8, 12});
}

TEST_CASE("window boundaries") {
  // {2,4,6} needs its full sum 12 inside the window
  CHECK_FALSE(search_monochromatic(Coloring::modular(2), 3, 11).has_value());
  auto at12 = search_monochromatic(Coloring::modular(2), 3, 12);
  REQUIRE(at12.has_value());
  CHECK(at12->set == std::vector<long>{2, 4, 6});

  // a certificate found in a tight window stays the answer in a wide one
  auto wide = search_monochromatic(Coloring::modular(2), 3, 1000);
  CHECK(wide->set == at12->set);

  CHECK_THROWS_AS(search_monochromatic(Coloring::modular(2), 3, 5),
                  WindowTooSmall);
  CHECK_THROWS_AS(search_monochromatic(Coloring::modular(2), 0, 10),
                  DomainError);
  CHECK_THROWS_AS(search_monochromatic(Coloring::modular(2), 21, 100000),
                  DomainError);
}

TEST_CASE("table colorings stop at their own edge") {
  Coloring alt = Coloring::table({0, 1, 0, 1, 0, 1});
  CHECK_FALSE(search_monochromatic(alt, 3, 6).has_value());
  // searching past the table is a window violation, not a silent miss
  CHECK_THROWS_AS(search_monochromatic(alt, 2, 10), WindowTooSmall);
  CHECK_THROWS_AS(Coloring::table({}), DomainError);

  Coloring blocks = Coloring::table({0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1});
  auto cert = search_monochromatic(blocks, 2, 12);
  REQUIRE(cert.has_value());
  CHECK(cert->set == std::vector<long>{1, 2});  // sums 1, 2, 3 all color 0
}

TEST_CASE("expression colorings compare exact value keys") {
  Coloring buckets = Coloring::expression(parse_expr("floor(n/4)", {"n"}));
  auto cert = search_monochromatic(buckets, 2, 20);
  REQUIRE(cert.has_value());
  CHECK(cert->set == std::vector<long>{1, 2});
  CHECK(cert->color == "0");

  // transcendental values never collide, so nothing is monochromatic
  Coloring distinct = Coloring::expression(parse_expr("sin(n)", {"n"}));
  CHECK_FALSE(search_monochromatic(distinct, 2, 12).has_value());
}

TEST_CASE("verification is recomputation, not trust") {
  Coloring parity = Coloring::modular(2);
  auto cert = *search_monochromatic(parity, 3, 100);

  SUBCASE("forged color") {
    auto bad = cert;
    bad.color = "1";
    for (auto& s : bad.sums) s.color = "1";
    CHECK_FALSE(verify_certificate(parity, bad));
  }
  SUBCASE("forged sum value") {
    auto bad = cert;
    bad.sums[3].sum += 1;
    CHECK_FALSE(verify_certificate(parity, bad));
  }
  SUBCASE("set with mixed parities") {
    CHECK_FALSE(verify_certificate(parity, tabulate_certificate(parity, {1, 2})));
  }
  SUBCASE("valid under one coloring, not another") {
    CHECK(verify_certificate(Coloring::modular(1), cert));
    CHECK_FALSE(verify_certificate(Coloring::modular(5), cert));
  }
  SUBCASE("malformed set") {
    CHECK_THROWS_AS(tabulate_certificate(parity, {4, 2}), DomainError);
    CHECK_THROWS_AS(tabulate_certificate(parity, {}), DomainError);
  }
}

TEST_CASE("search agrees with brute force enumeration") {
  std::vector<Coloring> colorings;
  colorings.push_back(Coloring::modular(1));
  colorings.push_back(Coloring::modular(2));
  colorings.push_back(Coloring::modular(3));
  colorings.push_back(Coloring::table({0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0,
                                       1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1,
                                       0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1}));
  colorings.push_back(Coloring::expression(parse_expr("floor(n/5)", {"n"})));

  for (const auto& coloring : colorings) {
    for (int k = 1; k <= 3; ++k) {
      for (long window : {12L, 25L, 40L}) {
        auto expect = brute_force(coloring, k, window);
        auto got = search_monochromatic(coloring, k, window);
        REQUIRE(got.has_value() == expect.has_value());
        if (got) {
          CHECK(got->set == *expect);
          CHECK(verify_certificate(coloring, *got));
        }
      }
    }
  }
}

TEST_CASE("coloring parsing") {
  CHECK(Coloring::parse("mod:7").color_key(10) == "3");
  CHECK(Coloring::parse("expr:floor(n/3)").color_key(7) == "2");
  CHECK(Coloring::parse("mod:3").to_string() == "mod:3");
  CHECK_THROWS_AS(Coloring::parse("mod:x"), DomainError);
  CHECK_THROWS_AS(Coloring::parse("mod:0"), DomainError);
  CHECK_THROWS_AS(Coloring::parse("rainbow"), DomainError);
  CHECK_THROWS_AS(Coloring::parse("table:/no/such/file"), DomainError);
  CHECK_THROWS_AS(Coloring::parse("expr:floor(q)"), UnknownIdentifier);
  CHECK_THROWS_AS(Coloring::modular(2).color_key(0), DomainError);
}

}  // TEST_SUITE
