#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "mobius/abelian.hpp"
#include "mobius/foliation.hpp"
#include "mobius/ktheory.hpp"
#include "mobius/traces.hpp"

namespace mobius {

/// Run configuration shared by the CLI and the claim engine.
struct Config {
  double half_width = kDefaultHalfWidth;
  int samples = kDefaultSamples;
  double tolerance = 1e-8;
  int homotopy_steps = 64;
  std::string output = "text";

  void validate() const {
    if (!(half_width > 0.0))
      throw config_error("half-width must be positive");
    if (samples < 3 || samples % 2 == 0)
      throw config_error("samples must be odd (the grid has to contain 0)");
    if (!(tolerance > 0.0) || tolerance >= 1e-2)
      throw config_error("tolerance must lie in (0, 1e-2)");
    if (homotopy_steps < 1)
      throw config_error("homotopy steps must be positive");
    if (output != "text" && output != "json")
      throw config_error("output must be text or json");
  }

  Grid grid() const { return Grid::uniform(half_width, samples); }
};

/// One verified claim.
struct ClaimReport {
  std::string claim_id;
  std::string description;
  std::string computed;
  std::string expected;
  std::string provenance; // paper | derived | trivial
  bool pass = false;
  std::string caveat; // empty when none
};

/// Static registry: id, description, expectation, provenance.  Claim bodies
/// fill in `computed` and `pass`; a claim that aborts keeps its registry
/// entry with the error text as caveat.
struct ClaimMeta {
  const char* id;
  const char* description;
  const char* expected;
  const char* provenance;
};

inline const std::vector<ClaimMeta>& claim_registry() {
  static const std::vector<ClaimMeta> meta = {
      {"C1",
       "crossed product algebra axioms on randomized elements: associativity, "
       "unit law, involution anti-multiplicativity",
       "all residuals < 1e-10", "derived"},
      {"C2",
       "Psi carries the ideal isomorphically onto M2(C0(R)): multiplicative "
       "and adjoint-preserving on randomized pairs",
       "product residual < 1e-9, adjoint residual < 1e-10", "derived"},
      {"C3",
       "exp(2 pi i f p) = e^{2 pi i f} p + (1 - p) for constant projections "
       "p, against the pointwise 2x2 exponential",
       "residual < 1e-9", "paper"},
      {"C4",
       "boundary classes in reference-generator units: exp[p+], exp[p-] and "
       "exp[1_e] wind 1, 1 and 2",
       "p+ -> 1, p- -> 1, 1_e -> 2 (|1_e class| = 2 regardless of "
       "orientation)",
       "paper"},
      {"C5",
       "the two boundary images are homotopic: equal determinant winding and "
       "an explicit rotation-conjugation path",
       "equal windings; endpoint reached; path verifies unitary", "paper"},
      {"C6",
       "six-term solution with the measured connecting map: K0(A) = Z "
       "generated by [p+] - [p-], K1(A) = 0",
       "K0 = Z with generator [p+] - [p-], K1 = 0", "paper"},
      {"C7",
       "pairing of the sign-representation trace with the lifted projections: "
       "tau(lift p+) - tau(lift p-)",
       "-1 exactly", "paper"},
      {"C8",
       "Lebesgue-measure trace: invariant, pairs to 0 with the lifted "
       "projections; a non-invariant density breaks traciality",
       "pairing 0 within 1e-10; invariance yes; witness residual >= 1e-3",
       "paper"},
      {"C9",
       "Mobius foliation: every leaf wraps twice except the core at r = 0; "
       "holonomy Z_2 exactly at the core; transversal groupoid R x Z_2",
       "999/1000 wrap twice, core wraps once; holonomy orders (2 at 0, 1 "
       "elsewhere); fiber R, group order 2",
       "paper"},
      {"C10",
       "group algebra at the fixed point: characters of the minimal "
       "projections, their regular representation, and the K-groups of "
       "C x| Z_2",
       "p+ -> (1,0), p- -> (0,1); matrices (1/2)[[1,+-1],[+-1,1]]; K0 = Z^2, "
       "K1 = 0",
       "paper"},
  };
  return meta;
}

inline const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const ClaimMeta& m : claim_registry())
      v.push_back(m.id);
    return v;
  }();
  return ids;
}

inline ClaimReport base_report(const std::string& id) {
  for (const ClaimMeta& m : claim_registry())
    if (id == m.id)
      return ClaimReport{m.id, m.description, "", m.expected, m.provenance,
                         false, ""};
  std::string valid;
  for (const std::string& v : claim_ids())
    valid += (valid.empty() ? "" : ", ") + v;
  throw usage_error("unknown claim id '" + id + "'; valid ids: " + valid);
}

namespace claims_detail {

inline std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

inline std::string fmt_complex(Complex z) {
  if (z.imag() == 0.0)
    return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

/// A vanishing function built from a few Gaussian bumps.
inline RealLineFunction random_c0(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> center(-4.0, 4.0);
  std::uniform_real_distribution<double> width(0.6, 1.8);
  struct Bump {
    Complex c;
    double a, s;
  };
  std::vector<Bump> bumps;
  for (int k = 0; k < 3; ++k) {
    const double w = width(rng);
    bumps.push_back({Complex(coeff(rng), coeff(rng)), center(rng), 0.5 / (w * w)});
  }
  return RealLineFunction::vanishing([bumps](double x) {
    Complex v(0.0);
    for (const Bump& b : bumps)
      v += b.c * std::exp(-(x - b.a) * (x - b.a) * b.s);
    return v;
  });
}

/// Same, forced to vanish exactly at 0 (membership in the ideal).
inline RealLineFunction random_ideal_c0(std::mt19937_64& rng) {
  RealLineFunction f = random_c0(rng);
  const Complex f0 = f(0.0);
  RealLineFunction g = RealLineFunction::vanishing(
      [f0](double x) { return f0 * std::exp(-x * x); });
  return f - g;
}

inline CrossedProductElement random_element(std::mt19937_64& rng,
                                            bool with_unit) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  Complex scalar(0.0);
  if (with_unit)
    scalar = Complex(coeff(rng), coeff(rng));
  return CrossedProductElement(random_c0(rng), random_c0(rng), scalar);
}

inline CrossedProductElement random_ideal_element(std::mt19937_64& rng) {
  return CrossedProductElement(random_ideal_c0(rng), random_ideal_c0(rng));
}

} // namespace claims_detail

/// Everything the individual claims need, built once per run.
struct ClaimContext {
  Config config;
  Grid grid;
  LiftProfile profile;

  explicit ClaimContext(const Config& c)
      : config(c), grid(c.grid()), profile(LiftProfile::logistic()) {}
};

namespace claims_detail {

inline ClaimReport claim_c1(const ClaimContext& ctx) {
  ClaimReport r = base_report("C1");
  std::mt19937_64 rng(101);
  const Grid& grid = ctx.grid;
  const CrossedProductElement unit = CrossedProductElement::unit();
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    CrossedProductElement f = random_element(rng, k % 3 == 0);
    CrossedProductElement g = random_element(rng, k % 5 == 0);
    CrossedProductElement h = random_element(rng, false);
    worst = std::max(worst, sup_distance(convolve(convolve(f, g), h),
                                         convolve(f, convolve(g, h)), grid));
    worst = std::max(worst, sup_distance(convolve(unit, f), f, grid));
    worst = std::max(worst, sup_distance(convolve(f, unit), f, grid));
    worst = std::max(
        worst, sup_distance(involution(convolve(f, g)),
                            convolve(involution(g), involution(f)), grid));
  }
  r.computed = "max residual = " + fmt(worst);
  r.pass = worst < 1e-10;
  return r;
}

inline ClaimReport claim_c2(const ClaimContext& ctx) {
  ClaimReport r = base_report("C2");
  std::mt19937_64 rng(202);
  const Grid& grid = ctx.grid;
  double worst_mult = 0.0, worst_adj = 0.0;
  for (int k = 0; k < 50; ++k) {
    CrossedProductElement f = random_ideal_element(rng);
    CrossedProductElement g = random_ideal_element(rng);
    worst_mult = std::max(
        worst_mult,
        sup_distance(psi_iso(convolve(f, g)),
                     matrix_product(psi_iso(f), psi_iso(g)), grid));
    worst_adj = std::max(worst_adj,
                         sup_distance(psi_iso(involution(f)),
                                      matrix_adjoint(psi_iso(f)), grid));
  }
  r.computed = "product residual = " + fmt(worst_mult) +
               ", adjoint residual = " + fmt(worst_adj);
  r.pass = worst_mult < 1e-9 && worst_adj < 1e-10;
  return r;
}

inline ClaimReport claim_c3(const ClaimContext& ctx) {
  ClaimReport r = base_report("C3");
  const Grid& grid = ctx.grid;
  const RealLineFunction& chi = ctx.profile.chi;
  auto [p_plus, p_minus] = minimal_projections();
  std::vector<Mat2> projections = {
      regular_representation(p_plus), regular_representation(p_minus),
      Mat2::identity(), Mat2::diag(Complex(1.0), Complex(0.0))};
  // a tilted rank-one projection, still constant so it commutes with chi
  const double al = 0.3;
  const double cs = std::cos(al), sn = std::sin(al);
  projections.push_back(Mat2::of(cs * cs, cs * sn, cs * sn, sn * sn));

  double worst = 0.0;
  const RealLineFunction u = unit_exponential(chi);
  for (const Mat2& p : projections) {
    FunctionMatrix via_identity =
        FunctionMatrix::scale(u, p) +
        FunctionMatrix::from_constant(Mat2::identity() - p);
    FunctionMatrix via_oracle =
        pointwise_unitary_exponential(FunctionMatrix::scale(chi, p), grid);
    worst = std::max(worst, sup_distance(via_identity, via_oracle, grid));
  }
  r.computed = "max residual over 5 projections = " + fmt(worst);
  r.pass = worst < 1e-9;
  return r;
}

struct BoundaryClasses {
  FunctionMatrix image_plus;
  FunctionMatrix image_minus;
  int w_plus = 0;
  int w_minus = 0;
};

inline BoundaryClasses boundary_classes(const ClaimContext& ctx) {
  auto [p_plus, p_minus] = minimal_projections();
  BoundaryClasses b;
  b.image_plus =
      exponential_boundary(lift_projection(p_plus, ctx.profile), ctx.grid);
  b.image_minus =
      exponential_boundary(lift_projection(p_minus, ctx.profile), ctx.grid);
  b.w_plus = det_winding(b.image_plus, ctx.grid).winding;
  b.w_minus = det_winding(b.image_minus, ctx.grid).winding;
  return b;
}

inline ClaimReport claim_c4(const ClaimContext& ctx) {
  ClaimReport r = base_report("C4");
  const BoundaryClasses b = boundary_classes(ctx);
  GroupAlgebraElement one_e = group_unit();
  FunctionMatrix image_unit =
      exponential_boundary(lift_projection(one_e, ctx.profile), ctx.grid);
  const int w_unit = det_winding(image_unit, ctx.grid).winding;
  r.computed = "p+ -> " + std::to_string(b.w_plus) + ", p- -> " +
               std::to_string(b.w_minus) + ", 1_e -> " + std::to_string(w_unit);
  r.pass = b.w_plus == 1 && b.w_minus == 1 && w_unit == 2 &&
           w_unit == b.w_plus + b.w_minus && std::abs(w_unit) == 2;
  return r;
}

inline ClaimReport claim_c5(const ClaimContext& ctx) {
  ClaimReport r = base_report("C5");
  const BoundaryClasses b = boundary_classes(ctx);
  HomotopyPath path = rotation_conjugation_path(b.image_plus, kPi / 2.0,
                                                ctx.config.homotopy_steps);
  const double endpoint_gap =
      sup_distance(path.sample(1.0), b.image_minus, ctx.grid);
  HomotopyReport hom = verify_homotopy(path, HomotopyKind::unitary, ctx.grid);
  r.computed = "windings " + std::to_string(b.w_plus) + " and " +
               std::to_string(b.w_minus) + "; endpoint gap " +
               fmt(endpoint_gap) + "; path " + (hom.pass ? "pass" : "fail");
  if (!hom.pass)
    r.caveat = "path violation at t = " + fmt(hom.first_violation_t) + ": " +
               hom.note;
  r.pass = b.w_plus == b.w_minus && endpoint_gap < 1e-9 && hom.pass;
  return r;
}

inline ClaimReport claim_c6(const ClaimContext& ctx) {
  ClaimReport r = base_report("C6");
  const BoundaryClasses b = boundary_classes(ctx);
  IntMatrix exp_matrix(1, 2);
  exp_matrix(0, 0) = b.w_plus;
  exp_matrix(0, 1) = b.w_minus;
  IntegerMap exp_map(exp_matrix, AbelianGroup::free(2), AbelianGroup::free(1));
  SixTermSolution sol = solve_six_term(
      AbelianGroup::free(2), AbelianGroup::free(1), exp_map,
      AbelianGroup::zero(), AbelianGroup::zero(), {"[p+]", "[p-]"});
  std::string gens;
  for (const std::string& g : sol.k0_generators)
    gens += (gens.empty() ? "" : ", ") + g;
  r.computed = "measured exp = " + exp_matrix.to_string() + "; K0 = " +
               sol.k0_middle.to_string() + " generated by " + gens +
               "; K1 = " + sol.k1_middle.to_string();
  for (const std::string& n : sol.notes)
    r.caveat += (r.caveat.empty() ? "" : "; ") + n;
  r.pass = sol.k0_middle == AbelianGroup::free(1) &&
           sol.k0_generators.size() == 1 &&
           sol.k0_generators[0] == "[p+] - [p-]" &&
           sol.k1_middle == AbelianGroup::zero();
  return r;
}

inline ClaimReport claim_c7(const ClaimContext& ctx) {
  ClaimReport r = base_report("C7");
  auto [p_plus, p_minus] = minimal_projections();
  TraceFunctional tau =
      TraceFunctional::representation(GroupRepresentation::sign());
  const Complex d =
      pair_difference(tau, lift_projection(p_plus, ctx.profile),
                      lift_projection(p_minus, ctx.profile), ctx.grid);
  r.computed = fmt_complex(d);
  r.pass = d == Complex(-1.0);
  return r;
}

inline ClaimReport claim_c8(const ClaimContext& ctx) {
  ClaimReport r = base_report("C8");
  r.caveat =
      "lift-level pairing: the measure trace is evaluated on lifts of the "
      "projections, not on a projection over the unitization";
  const Grid& grid = ctx.grid;
  auto [p_plus, p_minus] = minimal_projections();
  TransverseMeasure lebesgue = TransverseMeasure::lebesgue(grid.half_width());
  TraceFunctional tau = TraceFunctional::measure(lebesgue);
  const Complex d =
      pair_difference(tau, lift_projection(p_plus, ctx.profile),
                      lift_projection(p_minus, ctx.profile), grid);
  const bool lebesgue_invariant = is_invariant(lebesgue, grid);

  // negative control: density e^x restricted to the window
  TransverseMeasure witness = TransverseMeasure::from_density(
      [](double x) { return std::exp(x); }, grid.half_width());
  const bool witness_invariant = is_invariant(witness, grid);
  TraceFunctional tau_witness = TraceFunctional::measure(witness);
  std::mt19937_64 rng(808);
  double worst_break = 0.0;
  for (int k = 0; k < 8; ++k) {
    CrossedProductElement f, g;
    if (k == 0) {
      // a pair guaranteed to see the asymmetry
      f = CrossedProductElement::on_eps(RealLineFunction::vanishing(
          [](double x) { return Complex(std::exp(-(x - 1.0) * (x - 1.0))); }));
      g = CrossedProductElement::on_eps(RealLineFunction::vanishing(
          [](double x) { return Complex(std::exp(-(x + 1.0) * (x + 1.0))); }));
    } else {
      f = random_element(rng, false);
      g = random_element(rng, false);
    }
    const Complex lhs = apply_trace(tau_witness, convolve(f, g), grid);
    const Complex rhs = apply_trace(tau_witness, convolve(g, f), grid);
    worst_break = std::max(worst_break, std::abs(lhs - rhs));
  }
  r.computed = "pairing = " + fmt_complex(d) + "; Lebesgue invariant: " +
               (lebesgue_invariant ? "yes" : "no") + "; e^x invariant: " +
               (witness_invariant ? "yes" : "no") +
               "; max traciality break = " + fmt(worst_break);
  r.pass = std::abs(d) < 1e-10 && lebesgue_invariant && !witness_invariant &&
           worst_break >= 1e-3;
  return r;
}

inline ClaimReport claim_c9(const ClaimContext& ctx) {
  ClaimReport r = base_report("C9");
  DiscreteBundle bundle = DiscreteBundle::mobius();
  bundle.probe_halfwidth = ctx.grid.half_width();
  validate_bundle(bundle);

  const int n = 1000;
  const double l = ctx.grid.half_width();
  int wrap_two = 0, wrap_one = 0;
  bool core_is_zero = true;
  bool holonomy_ok = true;
  for (int i = 0; i < n; ++i) {
    const double rr = -l + 2.0 * l * i / n; // includes 0, excludes +l
    const Leaf leaf = leaf_through(bundle, rr);
    if (leaf.wrap_count == 2)
      ++wrap_two;
    else if (leaf.wrap_count == 1) {
      ++wrap_one;
      if (rr != 0.0)
        core_is_zero = false;
    }
    const int order = holonomy_group(bundle, rr).order;
    if (rr == 0.0 ? order != 2 : order != 1)
      holonomy_ok = false;
  }
  const TransversalGroupoidDescriptor desc = transversal_groupoid(bundle);
  r.computed = std::to_string(wrap_two) + "/1000 wrap twice, " +
               std::to_string(wrap_one) + " wraps once (core at 0: " +
               (core_is_zero ? "yes" : "no") + "); holonomy " +
               (holonomy_ok ? "as expected" : "unexpected") + "; fiber " +
               desc.fiber_label + ", group order " +
               std::to_string(desc.group_order);
  r.pass = wrap_two == 999 && wrap_one == 1 && core_is_zero && holonomy_ok &&
           desc.fiber_label == "R" && desc.group_order == 2;
  return r;
}

inline ClaimReport claim_c10(const ClaimContext&) {
  ClaimReport r = base_report("C10");
  auto [p_plus, p_minus] = minimal_projections();
  const auto chi_plus = character_iso(p_plus);
  const auto chi_minus = character_iso(p_minus);
  const bool characters_ok = chi_plus.first == Complex(1.0) &&
                             chi_plus.second == Complex(0.0) &&
                             chi_minus.first == Complex(0.0) &&
                             chi_minus.second == Complex(1.0);
  const Mat2 m_plus = regular_representation(p_plus);
  const Mat2 m_minus = regular_representation(p_minus);
  const Mat2 expect_plus = Mat2::of(0.5, 0.5, 0.5, 0.5);
  const Mat2 expect_minus = Mat2::of(0.5, -0.5, -0.5, 0.5);
  const bool matrices_ok = (m_plus - expect_plus).max_abs() == 0.0 &&
                           (m_minus - expect_minus).max_abs() == 0.0;
  // p+ and p- are orthogonal idempotents summing to the unit, so K0 is the
  // free group on their classes and K1 of the two-character algebra is 0.
  const bool orthogonal =
      group_algebra_product(p_plus, p_minus).norm1() == 0.0 &&
      (p_plus + p_minus == group_unit());
  const AbelianGroup k0 =
      orthogonal && characters_ok ? AbelianGroup::free(2) : AbelianGroup::zero();
  const AbelianGroup k1 = AbelianGroup::zero();
  r.computed = std::string("characters ") + (characters_ok ? "ok" : "bad") +
               "; matrices " + (matrices_ok ? "ok" : "bad") + "; K0 = " +
               k0.to_string() + ", K1 = " + k1.to_string();
  r.pass = characters_ok && matrices_ok && orthogonal &&
           k0 == AbelianGroup::free(2) && k1 == AbelianGroup::zero();
  return r;
}

inline ClaimReport dispatch(const std::string& id, const ClaimContext& ctx) {
  if (id == "C1")
    return claim_c1(ctx);
  if (id == "C2")
    return claim_c2(ctx);
  if (id == "C3")
    return claim_c3(ctx);
  if (id == "C4")
    return claim_c4(ctx);
  if (id == "C5")
    return claim_c5(ctx);
  if (id == "C6")
    return claim_c6(ctx);
  if (id == "C7")
    return claim_c7(ctx);
  if (id == "C8")
    return claim_c8(ctx);
  if (id == "C9")
    return claim_c9(ctx);
  if (id == "C10")
    return claim_c10(ctx);
  return base_report(id); // throws the usage error for unknown ids
}

/// Failures inside a claim become a failed report with the error text as
/// caveat; they never propagate out of a run.
inline ClaimReport run_guarded(const std::string& id, const ClaimContext& ctx) {
  try {
    return dispatch(id, ctx);
  } catch (const std::exception& e) {
    ClaimReport r = base_report(id);
    r.computed = "error";
    r.pass = false;
    r.caveat = e.what();
    return r;
  }
}

} // namespace claims_detail

inline ClaimReport run_single(const std::string& claim_id, const Config& config) {
  config.validate();
  base_report(claim_id); // reject unknown ids up front
  ClaimContext ctx(config);
  return claims_detail::run_guarded(claim_id, ctx);
}

inline std::vector<ClaimReport> run_verify_all(const Config& config) {
  config.validate();
  ClaimContext ctx(config);
  std::vector<ClaimReport> reports;
  for (const std::string& id : claim_ids())
    reports.push_back(claims_detail::run_guarded(id, ctx));
  return reports;
}

inline bool all_pass(const std::vector<ClaimReport>& reports) {
  for (const ClaimReport& r : reports)
    if (!r.pass)
      return false;
  return true;
}

} // namespace mobius
