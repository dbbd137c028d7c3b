#include <doctest.h>

#include "group.hpp"
#include "grid.hpp"
#include "spectral.hpp"

using namespace vilenkin;

TEST_CASE("generalized powers and bound") {
  auto g = GroupSpec::create({2, 2, 2});
  CHECK(g->level() == 3);
  CHECK(g->gen_power(0) == 1);
  CHECK(g->gen_power(1) == 2);
  CHECK(g->gen_power(2) == 4);
  CHECK(g->gen_power(3) == 8);
  CHECK(g->bound() == 2);

  auto h = GroupSpec::create({3, 2, 4});
  CHECK(h->gen_power(1) == 3);
  CHECK(h->gen_power(2) == 6);
  CHECK(h->gen_power(3) == 24);
  CHECK(h->bound() == 4);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(GroupSpec::create({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::create({}), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::create_cyclic({2}, 0), std::invalid_argument);
  // cap guard: 2^23 over the default 2^22 cap
  CHECK_THROWS_AS(GroupSpec::create_cyclic({2}, 23), GridLimitError);
  CHECK_NOTHROW(GroupSpec::create_cyclic({2}, 23, std::uint64_t{1} << 23));
}

TEST_CASE("spec string parse and format") {
  auto g = GroupSpec::parse("m=2,3,4;L=6");
  CHECK(g->level() == 6);
  CHECK(g->radix(0) == 2);
  CHECK(g->radix(3) == 2);  // pattern repeats
  CHECK(g->radix(5) == 4);
  CHECK(g->format() == "m=2,3,4,2,3,4;L=6");
  CHECK(GroupSpec::parse(g->format())->same_as(*g));

  CHECK_THROWS_AS(GroupSpec::parse("m=2,3"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("m=2,1;L=2"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("m=2;L=0"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("L=3;m=2"), std::invalid_argument);
}

TEST_CASE("digit expansion and order") {
  auto g = GroupSpec::create({2, 2, 2});
  const VIndex five = g->index(5);
  CHECK(five.digits == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(five.order == 2);

  const VIndex zero = g->index(0);
  CHECK(zero.digits == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(zero.order == 0);  // |0| := 0

  auto h = GroupSpec::create({3, 2, 4});
  const VIndex seven = h->index(7);  // 1 + 0*3 + 1*6, digits below the radices
  CHECK(seven.digits == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(seven.order == 2);

  CHECK_THROWS_AS(g->index(8), std::out_of_range);
}

TEST_CASE("point subtraction") {
  auto g = GroupSpec::create({3, 3, 2});
  const Point a{{1, 2, 0}};
  const Point b{{2, 1, 0}};
  CHECK(g->point_sub(a, b).digits == std::vector<std::uint32_t>{2, 1, 0});
  CHECK(g->point_sub(a, a).digits == std::vector<std::uint32_t>{0, 0, 0});

  auto w = GroupSpec::create({2, 2});
  CHECK(w->point_sub(Point{{0, 1}}, Point{{1, 0}}).digits ==
        std::vector<std::uint32_t>{1, 1});

  CHECK_THROWS_AS(g->point_sub(Point{{1, 2}}, b), std::invalid_argument);
  CHECK_THROWS_AS(g->point_sub(Point{{5, 0, 0}}, b), std::invalid_argument);
}

TEST_CASE("rank and unrank") {
  auto g = GroupSpec::create({2, 2, 2});
  CHECK(g->rank(Point{{1, 0, 1}}) == 5);
  CHECK(g->rank(Point{{0, 0, 0}}) == 0);
  auto h = GroupSpec::create({3, 2, 4});
  CHECK(h->rank(Point{{2, 1, 3}}) == 23);

  for (auto spec : {GroupSpec::create({2, 3, 4, 2}), GroupSpec::parse("m=2;L=12"),
                    GroupSpec::parse("m=4;L=6")}) {
    for (std::uint64_t r = 0; r < spec->size(); ++r)
      CHECK(spec->rank(spec->unrank(r)) == r);
  }
}

TEST_CASE("subtracting the negation recovers the point") {
  auto g = GroupSpec::parse("m=3,2,4;L=3");
  const Point zero = g->unrank(0);
  for (std::uint64_t xr = 0; xr < g->size(); xr += 5) {
    for (std::uint64_t tr = 0; tr < g->size(); tr += 3) {
      const Point x = g->unrank(xr), t = g->unrank(tr);
      const Point y = g->point_sub(x, t);
      const Point neg_t = g->point_sub(zero, t);
      CHECK(g->rank(g->point_sub(y, neg_t)) == xr);
    }
  }
}

TEST_CASE("coset representatives") {
  auto g = GroupSpec::create({2, 2, 2});
  CHECK(g->coset_reps(3).size() == 1);
  CHECK(g->rank(g->coset_reps(3)[0]) == 0);
  CHECK(g->coset_reps(0).size() == 8);

  const auto reps = g->coset_reps(1);
  CHECK(reps.size() == 4);
  for (const Point& r : reps) CHECK(r.digits[0] == 0);

  auto h = GroupSpec::parse("m=3,2,4;L=3");
  for (std::size_t s = 0; s <= h->level(); ++s)
    CHECK(h->coset_reps(s).size() * h->gen_power(s) == h->size());
  CHECK_THROWS_AS(h->coset_reps(4), std::out_of_range);
}

TEST_CASE("haar integral") {
  auto g = GroupSpec::create({2, 2, 2});
  CHECK(haar_integral(constant_grid(g, 1.0)) == cdouble{1.0, 0.0});
  CHECK(std::abs(haar_integral(character_grid(g, 3))) < 1e-15);
  CHECK(std::abs(haar_integral(indicator_coset(g, 1)) - 0.5) < 1e-15);

  // measure of every coset I_s(x) is 1/M_s
  auto h = GroupSpec::parse("m=3,2,4;L=3");
  for (std::size_t s = 0; s <= h->level(); ++s) {
    for (std::uint64_t base = 0; base < h->size(); base += 7) {
      const double want = 1.0 / static_cast<double>(h->gen_power(s));
      CHECK(std::abs(haar_integral(indicator_coset(h, s, base)) - want) <
            1e-15);
    }
  }
}
