// Command-line front end: claim-by-claim verification of the invariants of
// the Mobius foliation algebra, plus direct access to leaves, holonomy,
// K-groups and trace pairings.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mobius/mobius.hpp"
#include "mobius/report_io.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f)
    throw mobius::config_error("cannot open output file: " + out_path);
  f << text;
}

int run_kgroups(const mobius::Config& config, const std::string& out_path) {
  mobius::ClaimContext ctx(config);
  const auto b = mobius::claims_detail::boundary_classes(ctx);
  mobius::IntMatrix exp_matrix(1, 2);
  exp_matrix(0, 0) = b.w_plus;
  exp_matrix(0, 1) = b.w_minus;
  mobius::IntegerMap exp_map(exp_matrix, mobius::AbelianGroup::free(2),
                             mobius::AbelianGroup::free(1));
  mobius::SixTermSolution sol = mobius::solve_six_term(
      mobius::AbelianGroup::free(2), mobius::AbelianGroup::free(1), exp_map,
      mobius::AbelianGroup::zero(), mobius::AbelianGroup::zero(),
      {"[p+]", "[p-]"});

  std::string gens;
  for (const std::string& g : sol.k0_generators)
    gens += (gens.empty() ? "" : ", ") + g;

  if (config.output == "json") {
    nlohmann::ordered_json doc;
    doc["measured_exp"] = {b.w_plus, b.w_minus};
    doc["k0_quotient"] = "Z^2";
    doc["k1_ideal"] = "Z";
    doc["k0"] = sol.k0_middle.to_string();
    doc["k0_generators"] = sol.k0_generators;
    doc["k1"] = sol.k1_middle.to_string();
    doc["exp_image"] = sol.exp_image.to_string();
    doc["notes"] = sol.notes;
    emit(doc.dump(2) + "\n", out_path);
  } else {
    std::string text;
    text += "measured exp on the K0 generators: [p+] -> " +
            std::to_string(b.w_plus) + ", [p-] -> " + std::to_string(b.w_minus) +
            " (reference-generator units)\n";
    text += "K0(C(Z2)) = Z^2, K1 = 0 at the fixed point; K1(ideal) = Z\n";
    text += "K0(C0(R) x| Z2) = " + sol.k0_middle.to_string() +
            ", generated by " + gens + "\n";
    text += "K1(C0(R) x| Z2) = " + sol.k1_middle.to_string() + "\n";
    for (const std::string& n : sol.notes)
      text += "note: " + n + "\n";
    emit(text, out_path);
  }
  return 0;
}

int run_pairing(const mobius::Config& config, const std::string& which,
                const std::string& out_path) {
  mobius::ClaimContext ctx(config);
  auto [p_plus, p_minus] = mobius::minimal_projections();
  mobius::CrossedProductElement a =
      mobius::lift_projection(p_plus, ctx.profile);
  mobius::CrossedProductElement b =
      mobius::lift_projection(p_minus, ctx.profile);

  mobius::Complex value, expected;
  std::string caveat;
  if (which == "rho") {
    auto tau = mobius::TraceFunctional::representation(
        mobius::GroupRepresentation::sign());
    value = mobius::pair_difference(tau, a, b, ctx.grid);
    expected = mobius::Complex(-1.0);
  } else if (which == "lebesgue") {
    auto tau = mobius::TraceFunctional::measure(
        mobius::TransverseMeasure::lebesgue(ctx.grid.half_width()));
    value = mobius::pair_difference(tau, a, b, ctx.grid);
    expected = mobius::Complex(0.0);
    caveat = "lift-level pairing: evaluated on lifts of the projections, not "
             "on a projection over the unitization";
  } else {
    throw mobius::usage_error("unknown trace '" + which +
                              "'; valid: rho, lebesgue");
  }
  const bool ok = std::abs(value - expected) <= config.tolerance;

  if (config.output == "json") {
    nlohmann::ordered_json doc;
    doc["trace"] = which;
    doc["value"] = {value.real(), value.imag()};
    doc["expected"] = {expected.real(), expected.imag()};
    doc["pass"] = ok;
    doc["caveat"] = caveat.empty() ? nlohmann::ordered_json(nullptr)
                                   : nlohmann::ordered_json(caveat);
    emit(doc.dump(2) + "\n", out_path);
  } else {
    std::string text = "pairing <[p+] - [p-], tau_" + which +
                       "> = " + mobius::claims_detail::fmt_complex(value) +
                       " (expected " +
                       mobius::claims_detail::fmt_complex(expected) + "): " +
                       (ok ? "PASS" : "FAIL") + "\n";
    if (!caveat.empty())
      text += "caveat: " + caveat + "\n";
    emit(text, out_path);
  }
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator-algebraic invariants of the Mobius foliation"};
  app.require_subcommand(1);

  mobius::Config config;
  bool json = false;
  std::string out_path;
  app.add_option("--half-width", config.half_width,
                 "half-width L of the sampling window [-L, L]");
  app.add_option("--samples", config.samples,
                 "number of grid samples (odd, so the grid contains 0)");
  app.add_option("--tol", config.tolerance,
                 "tolerance for ad-hoc comparisons (claims pin their own)");
  app.add_option("--steps", config.homotopy_steps,
                 "discretization steps for homotopy verification");
  app.add_flag("--json", json, "emit JSON instead of text");
  app.add_option("--out", out_path, "write the report to a file");

  auto* cmd_verify = app.add_subcommand("verify-all", "run all claims C1..C10");
  auto* cmd_claim = app.add_subcommand("claim", "run a single claim");
  std::string claim_id;
  cmd_claim->add_option("id", claim_id, "claim id, C1..C10")->required();
  auto* cmd_leaves =
      app.add_subcommand("leaves", "leaf data through a basepoint");
  double leaf_r = 0.0;
  cmd_leaves->add_option("--r", leaf_r, "fiber coordinate of the basepoint")
      ->required();
  auto* cmd_holonomy =
      app.add_subcommand("holonomy", "holonomy group at a basepoint");
  double hol_r = 0.0;
  cmd_holonomy->add_option("--r", hol_r, "fiber coordinate of the basepoint")
      ->required();
  auto* cmd_kgroups = app.add_subcommand(
      "kgroups", "measure the connecting map and solve the six-term diagram");
  auto* cmd_pairing =
      app.add_subcommand("pairing", "trace pairing with [p+] - [p-]");
  std::string trace_kind = "rho";
  cmd_pairing->add_option("--trace", trace_kind, "rho | lebesgue")->required();

  // global flags may follow the subcommand
  for (CLI::App* sub : {cmd_verify, cmd_claim, cmd_leaves, cmd_holonomy,
                        cmd_kgroups, cmd_pairing})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
    config.output = json ? "json" : "text";
    config.validate();

    if (*cmd_verify) {
      auto reports = mobius::run_verify_all(config);
      emit(mobius::render(reports, config), out_path);
      return mobius::all_pass(reports) ? 0 : 1;
    }
    if (*cmd_claim) {
      auto report = mobius::run_single(claim_id, config);
      emit(mobius::render({report}, config), out_path);
      return report.pass ? 0 : 1;
    }
    if (*cmd_leaves || *cmd_holonomy) {
      mobius::DiscreteBundle bundle = mobius::DiscreteBundle::mobius();
      bundle.probe_halfwidth = config.half_width;
      const double r = *cmd_leaves ? leaf_r : hol_r;
      if (*cmd_leaves) {
        mobius::Leaf leaf = mobius::leaf_through(bundle, r);
        if (config.output == "json") {
          nlohmann::ordered_json doc;
          doc["basepoint"] = leaf.basepoint;
          doc["isotropy_index"] = leaf.isotropy_index;
          doc["wrap_count"] = leaf.wrap_count;
          emit(doc.dump(2) + "\n", out_path);
        } else {
          emit("leaf through r = " + mobius::claims_detail::fmt(r) +
                   ": wraps " + std::to_string(leaf.wrap_count) +
                   " time(s) around the base (isotropy index " +
                   std::to_string(leaf.isotropy_index) + ")\n",
               out_path);
        }
      } else {
        mobius::HolonomyGroup h = mobius::holonomy_group(bundle, r);
        if (config.output == "json") {
          nlohmann::ordered_json doc;
          doc["basepoint"] = r;
          doc["holonomy_order"] = h.order;
          emit(doc.dump(2) + "\n", out_path);
        } else {
          emit("holonomy group at r = " + mobius::claims_detail::fmt(r) +
                   ": " + (h.order == 1 ? "trivial" : "Z_" + std::to_string(h.order)) +
                   "\n",
               out_path);
        }
      }
      return 0;
    }
    if (*cmd_kgroups)
      return run_kgroups(config, out_path);
    if (*cmd_pairing)
      return run_pairing(config, trace_kind, out_path);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const mobius::usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const mobius::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
