// sgh: grid homology of spatial graphs from the command line.

#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "sgh/commands.hpp"
#include "sgh/errors.hpp"
#include "sgh/skein.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kCheckFailed = 3 };

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void announce_memory(const sgh::Diagram& d, const sgh::RunOptions& opts, int extra_size = 0) {
  const auto bytes = sgh::require_resources(d.size() + extra_size, d.o_count(), opts);
  std::cerr << "projected memory: " << ((bytes + (1 << 20) - 1) >> 20) << " MiB\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid homology of spatial graphs"};
  app.require_subcommand(1);

  sgh::RunOptions opts;
  if (const char* env = std::getenv("SGH_MAX_STATES")) {
    try {
      opts.max_states = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: SGH_MAX_STATES must be a positive integer\n";
      return kUsage;
    }
  }
  app.add_option("--max-states", opts.max_states, "Refuse diagrams with more grid states than this");
  app.add_option("--workers", opts.workers, "Threads for matrix assembly (0 = all cores)");

  std::string file;
  auto* validate = app.add_subcommand("validate", "Parse and validate a diagram");
  validate->add_option("file", file)->required();

  auto* graph = app.add_subcommand("graph", "Print the reconstructed spatial graph as JSON");
  graph->add_option("file", file)->required();

  std::string mode = "tilde";
  bool json = false;
  auto* homology = app.add_subcommand("homology", "Blocked grid homology table");
  homology->add_option("file", file)->required();
  homology->add_option("--mode", mode)->check(CLI::IsMember({"tilde", "hat"}));
  homology->add_flag("--json", json);

  auto* check = app.add_subcommand("check", "Run the chain-level self checks");
  check->add_option("file", file)->required();
  check->add_flag("--json", json);

  std::string vertex, part_a, part_c;
  auto* skein = app.add_subcommand("skein", "Split a vertex and verify the skein sequence");
  skein->add_option("file", file)->required();
  skein->add_option("--vertex", vertex, "r,c")->required();
  skein->add_option("--partA", part_a, "r,c;r,c;...")->required();
  skein->add_option("--partC", part_c, "r,c;r,c;...")->required();

  std::optional<int> shift_rows, shift_cols;
  bool reflect = false;
  auto* moves = app.add_subcommand("moves", "Apply a toroidal move and print the result");
  moves->add_option("file", file)->required();
  auto* rows_opt = moves->add_option("--shift-rows", shift_rows);
  auto* cols_opt = moves->add_option("--shift-cols", shift_cols);
  auto* reflect_opt = moves->add_flag("--reflect", reflect);
  rows_opt->excludes(cols_opt)->excludes(reflect_opt);
  cols_opt->excludes(reflect_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const sgh::Diagram d = sgh::load_diagram(file);

    if (*validate) {
      const auto g = sgh::reconstruct(d);
      std::cout << "valid: n = " << d.size() << ", m = " << d.o_count() << ", vertices = " << g.vertices.size()
                << ", edges = " << g.edge_count() << "\n";
      return kOk;
    }
    if (*graph) {
      print_json(sgh::graph_json(sgh::reconstruct(d)));
      return kOk;
    }
    if (*homology) {
      announce_memory(d, opts);
      const auto r = sgh::cmd_homology(d, mode == "hat" ? sgh::BlockMode::hat : sgh::BlockMode::tilde, opts);
      if (json) {
        print_json(sgh::homology_json(r));
      } else {
        std::cout << sgh::homology_text(r);
      }
      return kOk;
    }
    if (*check) {
      announce_memory(d, opts);
      const auto checks = sgh::cmd_check(d, opts);
      if (json) {
        print_json(sgh::checks_json(checks));
      } else {
        std::cout << sgh::checks_text(checks);
      }
      return sgh::all_pass(checks) ? kOk : kCheckFailed;
    }
    if (*skein) {
      const auto problem =
          sgh::make_skein_problem(d, sgh::parse_square(vertex), sgh::parse_square_list(part_a),
                                  sgh::parse_square_list(part_c));
      announce_memory(d, opts, 1);
      const auto report = sgh::skein_les_report(problem, opts.workers, opts.max_states);
      print_json(sgh::skein_json(report));
      return report.all_pass ? kOk : kCheckFailed;
    }
    if (*moves) {
      if (shift_rows) {
        std::cout << sgh::serialize(sgh::cyclic_shift(d, sgh::Axis::rows, *shift_rows));
      } else if (shift_cols) {
        std::cout << sgh::serialize(sgh::cyclic_shift(d, sgh::Axis::columns, *shift_cols));
      } else if (reflect) {
        std::cout << sgh::serialize(sgh::reflect_diagonal(d));
      } else {
        std::cerr << "error: moves needs --shift-rows, --shift-cols or --reflect\n";
        return kUsage;
      }
      return kOk;
    }
  } catch (const sgh::CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const sgh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
