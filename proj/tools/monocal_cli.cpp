// Command-line front end: run verification suites, export matrices, rescale
// tables, posets and chain-complex verdicts as exact-valued JSON.
//
// Exit codes: 0 all checks pass, 1 some check fails, 2 configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "monocal/checks.hpp"
#include "monocal/serialize.hpp"

namespace {

using namespace monocal;

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

int run_report(const RunConfig& cfg) {
  Report rep = run(cfg);
  emit(report_json(rep), cfg.output_path);
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for unipotent monodromy calculus"};
  app.require_subcommand(1);

  monocal::RunConfig cfg;
  app.add_option("--l", cfg.ell, "prime field modulus (default: run Q together with F_2, F_3, F_5)");
  app.add_option("--a-max", cfg.a_max, "largest module dimension in sweeps");
  app.add_option("--r-max", cfg.r_max, "largest rescale index r");
  app.add_option("--t-max", cfg.t_max, "largest integer rescale argument");
  app.add_option("--n-range", cfg.n_range, "monodromy sweep bound |n|");
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
  app.add_option("--instances", cfg.vancrit_instances, "instances per vanishing-lemma window");
  app.add_option("-o,--output", cfg.output_path, "write the JSON result to a file instead of stdout");

  auto* rescale = app.add_subcommand("rescale", "rescaling-coefficient checks and table export");
  bool export_table = false;
  rescale->add_flag("--export", export_table, "emit the symbolic table instead of a report");

  auto* jordan = app.add_subcommand("jordan", "module action checks");
  long long witness_p = 0;
  jordan->add_option("--witness", witness_p, "emit the F_2 non-semisimplicity matrix for this prime");

  app.add_subcommand("mult", "multiplication map checks");
  app.add_subcommand("compose", "pointed-map composition checks");

  auto* poset = app.add_subcommand("poset", "refinement poset checks and export");
  unsigned p_size = 0;
  bool dot = false;
  poset->add_option("--p-size", p_size, "emit the Hasse diagram for a ground set of this size");
  poset->add_flag("--dot", dot, "emit GraphViz instead of JSON (with --p-size)");

  auto* vancrit = app.add_subcommand("vancrit", "vanishing-lemma checks and instance verdicts");
  std::string instance_file;
  vancrit->add_option("--input", instance_file, "verify a serialized instance file instead of sweeping");

  app.add_subcommand("verify-all", "run every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();

    if (cfg.command == "rescale" && export_table) {
      emit(monocal::to_json(monocal::RescaleTable::build(cfg.r_max)), cfg.output_path);
      return 0;
    }
    if (cfg.command == "jordan" && witness_p != 0) {
      auto g = monocal::nonsemisimple_witness(witness_p);
      emit(monocal::matrix_bundle(g, 3, "galois", std::to_string(witness_p) + "^-1"), cfg.output_path);
      return 0;
    }
    if (cfg.command == "poset" && p_size != 0) {
      if (p_size > 5) throw CLI::ValidationError("--p-size", "ground sets larger than 5 are not supported");
      auto k = monocal::enumerate_poset(monocal::default_labels(p_size), p_size + 1);
      if (dot) {
        if (cfg.output_path.empty())
          std::cout << k.to_dot();
        else {
          std::ofstream out(cfg.output_path);
          out << k.to_dot();
        }
      } else {
        emit(monocal::hasse_json(k), cfg.output_path);
      }
      return 0;
    }
    if (cfg.command == "vancrit" && !instance_file.empty()) {
      std::ifstream in(instance_file);
      if (!in) throw CLI::ValidationError("--input", "cannot open " + instance_file);
      monocal::json j = monocal::json::parse(in);
      auto inst = monocal::instance_from_json(j);
      monocal::TWindow w(j.at("window").at("a").get<int>(), j.at("window").at("b").get<int>());
      auto verdict = monocal::vancrit_check(inst.maps, w);
      emit(monocal::verdict_json(verdict, inst), cfg.output_path);
      return verdict.holds() ? 0 : 1;
    }

    if (cfg.ell != 0 && !monocal::is_prime(cfg.ell)) throw CLI::ValidationError("--l", "modulus must be prime");
    if (cfg.a_max < 1 || cfg.r_max < 2) throw CLI::ValidationError("bounds", "bounds must be positive (r-max >= 2)");
    return run_report(cfg);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
