#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include <set>

#include "oracles.hpp"
#include "sylowscope/permutation.hpp"

using namespace sylowscope;

TEST_CASE("identity basics") {
  const Permutation id3 = Permutation::identity(3);
  CHECK(id3.is_identity());
  CHECK(id3.cycle_string() == "()");
  CHECK(id3.cycle_type().parts() == std::vector<unsigned>{1, 1, 1});
  CHECK(Permutation::identity(5).cycle_type().parts() ==
        std::vector<unsigned>{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(Permutation::identity(0), std::invalid_argument);
}

TEST_CASE("composition convention is right-to-left") {
  // compose(a, b)(x) = a(b(x)); the other convention would give (1 3 2)
  const Permutation a = Permutation::parse(3, "(1 2)");
  const Permutation b = Permutation::parse(3, "(2 3)");
  const Permutation c = compose(a, b);
  CHECK(c == Permutation::parse(3, "(1 2 3)"));
  CHECK(c(1) == 2);
  CHECK(c(2) == 3);
  CHECK(c(3) == 1);
  CHECK(compose(a, a).is_identity());

  const Permutation p = Permutation::parse(4, "(1 3 4)");
  CHECK(compose(Permutation::identity(4), p) == p);
  CHECK(compose(p, Permutation::identity(4)) == p);
}

TEST_CASE("compose over all of S4 matches brute-force image chasing") {
  std::vector<Permutation> s4;
  std::vector<unsigned> img{1, 2, 3, 4};
  do {
    s4.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  REQUIRE(s4.size() == 24);
  for (const Permutation& a : s4)
    for (const Permutation& b : s4) {
      const Permutation c = compose(a, b);
      for (unsigned x = 1; x <= 4; ++x) CHECK(c(x) == a(b(x)));
    }
}

TEST_CASE("inverse and power") {
  const Permutation p = Permutation::parse(6, "(1 2 3)(4 5)");
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p.inverse(), p).is_identity());
  CHECK(p.order() == 6);
  CHECK(p.power(6).is_identity());
  CHECK(p.power(-1) == p.inverse());
  CHECK(p.power(7) == p);
  CHECK(p.power(3) == Permutation::parse(6, "(4 5)"));
}

TEST_CASE("cycle structure") {
  const Permutation p = Permutation::parse(7, "(1 4)(2 5 6)");
  CHECK(p.cycle_type().parts() == std::vector<unsigned>{3, 2, 1, 1});
  CHECK(p.fixed_point_count() == 2);
  CHECK(p.smallest_moved_point() == 1);
  CHECK(p.cycle_string() == "(1 4)(2 5 6)");
  CHECK(Permutation::parse(7, p.cycle_string()) == p);
}

TEST_CASE("from_images validates bijection") {
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images({1, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("degree mismatch is rejected") {
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("cycle type is a conjugation invariant") {
  const Permutation g = Permutation::parse(6, "(1 2 3)(4 5)");
  std::vector<unsigned> img{1, 2, 3, 4, 5, 6};
  for (int i = 0; i < 120; ++i) {
    std::next_permutation(img.begin(), img.end());
    const Permutation h = Permutation::from_images(img);
    CHECK(conjugated(g, h).cycle_type() == g.cycle_type());
  }
}

TEST_CASE("conjugating_permutation produces a verified witness") {
  const Permutation a = Permutation::parse(7, "(1 2 3)(4 5)");
  const Permutation b = Permutation::parse(7, "(2 7 4)(1 6)");
  const Permutation g = conjugating_permutation(a, b);
  CHECK(conjugated(a, g) == b);
  CHECK_THROWS_AS(conjugating_permutation(a, Permutation::parse(7, "(1 2)")),
                  std::invalid_argument);
}
