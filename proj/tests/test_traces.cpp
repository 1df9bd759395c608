#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace mobius;
using test_support::quick_grid;
using test_support::random_bump_sum;
using test_support::random_cp;

TEST_CASE("measure invariance under the flip") {
  const Grid grid = quick_grid();
  CHECK(is_invariant(TransverseMeasure::lebesgue(), grid));
  CHECK_FALSE(is_invariant(
      TransverseMeasure::from_density([](double x) { return std::exp(x); }),
      grid));
  CHECK(is_invariant(TransverseMeasure::from_density(
                         [](double x) { return std::exp(-x * x); }),
                     grid));
}

TEST_CASE("representation validation") {
  CHECK_NOTHROW(GroupRepresentation::sign());
  // eps image must square to the identity
  CHECK_THROWS_AS(GroupRepresentation(1, {Complex(1.0)}, {Complex(0.5)}),
                  config_error);
  // e must go to the identity
  CHECK_THROWS_AS(GroupRepresentation(1, {Complex(2.0)}, {Complex(1.0)}),
                  config_error);
  // the two-dimensional swap representation is fine
  CHECK_NOTHROW(GroupRepresentation(
      2, {Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)},
      {Complex(0.0), Complex(1.0), Complex(1.0), Complex(0.0)}));
}

TEST_CASE("representation trace values on the lifted projections") {
  const Grid grid = quick_grid();
  const LiftProfile profile = LiftProfile::logistic();
  auto [p_plus, p_minus] = minimal_projections();
  TraceFunctional tau =
      TraceFunctional::representation(GroupRepresentation::sign());
  CHECK(apply_trace(tau, lift_projection(p_plus, profile), grid) ==
        Complex(0.0));
  CHECK(apply_trace(tau, lift_projection(p_minus, profile), grid) ==
        Complex(1.0));
  CHECK(apply_trace(tau, CrossedProductElement(), grid) == Complex(0.0));
}

TEST_CASE("representation traces are exactly tracial on the group algebra") {
  GroupRepresentation rho = GroupRepresentation::sign();
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    GroupAlgebraElement a{Complex(d(rng), d(rng)), Complex(d(rng), d(rng))};
    GroupAlgebraElement b{Complex(d(rng), d(rng)), Complex(d(rng), d(rng))};
    const Complex ab = representation_trace(rho, group_algebra_product(a, b));
    const Complex ba = representation_trace(rho, group_algebra_product(b, a));
    CHECK(std::abs(ab - ba) == 0.0);
  }
}

TEST_CASE("measure trace quadrature against a finer oracle") {
  const Grid grid = Grid::uniform();
  RealLineFunction f = RealLineFunction::vanishing(
      [](double x) { return Complex(std::exp(-0.5 * x * x) * (2.0 + std::cos(x))); });
  TraceFunctional tau = TraceFunctional::measure(TransverseMeasure::lebesgue());
  const Complex coarse =
      apply_trace(tau, CrossedProductElement::on_e(f), grid);
  const Complex fine =
      apply_trace(tau, CrossedProductElement::on_e(f), grid.refined(10));
  CHECK(std::abs(coarse - fine) < 1e-8);
}

TEST_CASE("measure trace rejects non-decayed integrands and the unit") {
  const Grid grid = quick_grid();
  TraceFunctional heavy = TraceFunctional::measure(
      TransverseMeasure::from_density([](double x) { return std::exp(x); }));
  RealLineFunction slow = RealLineFunction::vanishing(
      [](double x) { return Complex(1.0 / (1.0 + x * x)); });
  CHECK_THROWS_AS(apply_trace(heavy, CrossedProductElement::on_e(slow), grid),
                  integrability_error);
  TraceFunctional tau = TraceFunctional::measure(TransverseMeasure::lebesgue());
  CHECK_THROWS_AS(apply_trace(tau, CrossedProductElement::unit(), grid),
                  integrability_error);
}

TEST_CASE("measure traces are tracial exactly when the measure is invariant") {
  const Grid grid = quick_grid();
  std::mt19937_64 rng(72);
  TraceFunctional good = TraceFunctional::measure(TransverseMeasure::lebesgue());
  TraceFunctional bad = TraceFunctional::measure(
      TransverseMeasure::from_density([](double x) { return std::exp(x); }));
  double worst_good = 0.0, worst_bad = 0.0;
  for (int k = 0; k < 100; ++k) {
    CrossedProductElement f = random_cp(rng);
    CrossedProductElement g = random_cp(rng);
    worst_good = std::max(
        worst_good, std::abs(apply_trace(good, convolve(f, g), grid) -
                             apply_trace(good, convolve(g, f), grid)));
    worst_bad = std::max(
        worst_bad, std::abs(apply_trace(bad, convolve(f, g), grid) -
                            apply_trace(bad, convolve(g, f), grid)));
  }
  CHECK(worst_good < 1e-8);
  CHECK(worst_bad >= 1e-3); // the negative control must actually fail
}

TEST_CASE("pairings of the lifted projections") {
  const Grid grid = Grid::uniform();
  const LiftProfile profile = LiftProfile::logistic();
  auto [p_plus, p_minus] = minimal_projections();
  CrossedProductElement a = lift_projection(p_plus, profile);
  CrossedProductElement b = lift_projection(p_minus, profile);

  TraceFunctional rho =
      TraceFunctional::representation(GroupRepresentation::sign());
  CHECK(pair_difference(rho, a, b, grid) == Complex(-1.0));

  TraceFunctional leb = TraceFunctional::measure(TransverseMeasure::lebesgue());
  CHECK(std::abs(pair_difference(leb, a, b, grid)) < 1e-10);

  CHECK(pair_difference(rho, a, a, grid) == Complex(0.0));
}

TEST_CASE("pair_difference requires lifts of projections") {
  const Grid grid = quick_grid();
  const LiftProfile profile = LiftProfile::logistic();
  auto [p_plus, p_minus] = minimal_projections();
  CrossedProductElement ok = lift_projection(p_plus, profile);
  CrossedProductElement not_a_lift = CrossedProductElement::on_e(
      RealLineFunction::vanishing([](double x) { return Complex(0.3 * std::exp(-x * x)); }));
  TraceFunctional rho =
      TraceFunctional::representation(GroupRepresentation::sign());
  CHECK_THROWS_AS(pair_difference(rho, ok, not_a_lift, grid),
                  precondition_error);
}

TEST_CASE("representation pairings live on the integer lattice of the traces") {
  const Grid grid = quick_grid();
  const LiftProfile profile = LiftProfile::logistic();
  auto [p_plus, p_minus] = minimal_projections();
  TraceFunctional rho =
      TraceFunctional::representation(GroupRepresentation::sign());
  std::vector<CrossedProductElement> lifts = {
      lift_projection(GroupAlgebraElement{}, profile),
      lift_projection(p_plus, profile), lift_projection(p_minus, profile),
      lift_projection(group_unit(), profile)};
  for (const auto& x : lifts)
    for (const auto& y : lifts) {
      const Complex v = pair_difference(rho, x, y, grid);
      CHECK(std::abs(v.imag()) < 1e-12);
      CHECK(std::abs(v.real() - std::round(v.real())) < 1e-12);
    }
}

TEST_CASE("traces are linear, and pairings add over block-diagonal lifts") {
  const Grid grid = quick_grid();
  // a steep profile whose chi decays like |x|^-10, so single lifts are
  // integrable against the window and the measure trace applies to them
  const LiftProfile profile = LiftProfile::from_theta(
      [](double t) { return 0.5 * (1.0 + std::tanh(5.0 * t)); });
  auto [p_plus, p_minus] = minimal_projections();
  CrossedProductElement zero = lift_projection(GroupAlgebraElement{}, profile);
  CrossedProductElement a = lift_projection(p_plus, profile);
  CrossedProductElement b = lift_projection(p_minus, profile);
  CrossedProductElement u = lift_projection(group_unit(), profile);
  for (TraceFunctional tau :
       {TraceFunctional::representation(GroupRepresentation::sign()),
        TraceFunctional::measure(TransverseMeasure::lebesgue())}) {
    const Complex va = apply_trace(tau, a, grid);
    const Complex vb = apply_trace(tau, b, grid);
    CHECK(std::abs(apply_trace(tau, a + b, grid) - (va + vb)) < 1e-12);
    CHECK(std::abs(apply_trace(tau, Complex(2.5) * a, grid) - 2.5 * va) < 1e-12);

    // the canonical trace of a block-diagonal 2x2 lift diag(x, y) is
    // tau(x) + tau(y); the pairing of diag(a, u) against diag(b, zero)
    // must therefore be the sum of the slotwise pairings
    auto tau2 = [&](const CrossedProductElement& x,
                    const CrossedProductElement& y) {
      return apply_trace(tau, x, grid) + apply_trace(tau, y, grid);
    };
    const Complex block_pairing = tau2(a, u) - tau2(b, zero);
    const Complex slotwise = pair_difference(tau, a, b, grid) +
                             pair_difference(tau, u, zero, grid);
    CHECK(std::abs(block_pairing - slotwise) < 1e-12);
  }
}
