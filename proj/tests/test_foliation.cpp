#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace mobius;

TEST_CASE("isotropy index on the Mobius bundle") {
  DiscreteBundle b = DiscreteBundle::mobius();
  validate_bundle(b);
  CHECK(isotropy_index(b, 1.5) == 2);
  CHECK(isotropy_index(b, 0.0) == 1);
  CHECK(isotropy_index(DiscreteBundle::trivial(), 7.25) == 1);
  CHECK_THROWS_AS(isotropy_index(b, 25.0), precondition_error);
}

TEST_CASE("a bundle whose declared order is wrong is rejected") {
  DiscreteBundle broken{[](double x) { return x + 1.0; }, 2, {}, {}, 20.0};
  CHECK_THROWS_AS(validate_bundle(broken), inconsistency_error);
  CHECK_THROWS_AS(isotropy_index(broken, 0.5), inconsistency_error);
  DiscreteBundle bad_fixed{[](double x) { return -x; }, 2, {1.0}, {}, 20.0};
  CHECK_THROWS_AS(validate_bundle(bad_fixed), inconsistency_error);
}

TEST_CASE("leaves wrap as often as their isotropy index") {
  DiscreteBundle b = DiscreteBundle::mobius();
  CHECK(leaf_through(b, 0.0).wrap_count == 1);
  CHECK(leaf_through(b, -3.2).wrap_count == 2);
  // the leaf is determined by the orbit
  for (double r : {0.3, -1.7, 5.0, 0.0})
    CHECK(leaf_through(b, r).wrap_count ==
          leaf_through(b, b.generator(r)).wrap_count);
}

TEST_CASE("holonomy is Z_2 at the core and trivial elsewhere") {
  DiscreteBundle b = DiscreteBundle::mobius();
  CHECK(holonomy_group(b, 0.0).order == 2);
  CHECK(holonomy_group(b, 2.0).order == 1);
  CHECK(holonomy_group(b, -0.04).order == 1);
  CHECK(holonomy_group(DiscreteBundle::trivial(), 1.0).order == 1);
}

TEST_CASE("one-sided stability raises the ambiguity error") {
  // order-two monodromy fixing the right half-line pointwise but acting as
  // the involution x -> 1/x on the left half-line: at 0 the two sides of
  // the germ disagree
  DiscreteBundle lopsided{
      [](double x) { return x >= 0.0 ? x : 1.0 / x; }, 2, {0.0}, {}, 20.0};
  CHECK_THROWS_AS(holonomy_group(lopsided, 0.0), ambiguity_error);
}

TEST_CASE("transversal groupoid descriptor") {
  TransversalGroupoidDescriptor d = transversal_groupoid(DiscreteBundle::mobius());
  CHECK(d.fiber_label == "R");
  CHECK(d.group_order == 2);
  CHECK(d.identification_note.find("stable isotropy") != std::string::npos);
  CHECK(transversal_groupoid(DiscreteBundle::trivial()).group_order == 1);
}

TEST_CASE("exactly one of 1000 probed leaves wraps once, namely the core") {
  DiscreteBundle b = DiscreteBundle::mobius();
  int once = 0, twice = 0;
  double once_at = -1.0;
  for (int i = 0; i < 1000; ++i) {
    const double r = -20.0 + 40.0 * i / 1000; // includes 0 at i = 500
    const int w = leaf_through(b, r).wrap_count;
    if (w == 1) {
      ++once;
      once_at = r;
    } else if (w == 2) {
      ++twice;
    }
  }
  CHECK(once == 1);
  CHECK(twice == 999);
  CHECK(once_at == 0.0);
}
