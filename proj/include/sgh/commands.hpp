#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "sgh/check.hpp"
#include "sgh/diagram.hpp"
#include "sgh/graph_model.hpp"
#include "sgh/poly_matrix.hpp"
#include "sgh/skein.hpp"
#include "sgh/state_space.hpp"

namespace sgh {

struct RunOptions {
  std::size_t max_states = kDefaultStateCap;
  unsigned workers = 0;  // 0 = hardware concurrency
};

/// Tilde homology of a diagram. Graded when the diagram admits consistent
/// relative gradings; otherwise only the total is known.
struct TildeHomology {
  bool graded = false;
  BigradedDims dims;
  std::size_t total = 0;
};

TildeHomology tilde_homology(const Diagram& d, const StateSpace& space, unsigned workers = 0);

enum class BlockMode { tilde, hat };

struct HomologyReport {
  int n = 0;
  std::size_t m = 0;
  std::size_t edge_count = 0;
  BlockMode mode = BlockMode::tilde;
  bool graded = false;
  BigradedDims table;
  std::size_t total = 0;
};

/// Hat mode divides the tilde table by W^(m - edge_count). Throws CheckFailure
/// when the division is not exact.
HomologyReport cmd_homology(const Diagram& d, BlockMode mode, const RunOptions& opts = {});

/// (d^-)^2 = 0 with the first nonzero entry as witness.
CheckResult check_square_zero(const std::string& name, const PolyMatrix& d, const StateSpace& space);

std::vector<CheckResult> cmd_check(const Diagram& d, const RunOptions& opts = {});

/// Bytes the largest stage of a run is expected to need.
std::size_t estimate_memory_bytes(int n, std::size_t m);
std::size_t physical_memory_bytes();

/// Throws CapError if the state space is over the cap or the estimate exceeds
/// physical memory. Returns the estimate.
std::size_t require_resources(int n, std::size_t m, const RunOptions& opts);

nlohmann::ordered_json graph_json(const SpatialGraphModel& g);
nlohmann::ordered_json homology_json(const HomologyReport& r);
nlohmann::ordered_json table_json(const BigradedDims& t);
nlohmann::ordered_json checks_json(const std::vector<CheckResult>& checks);
nlohmann::ordered_json skein_json(const SkeinReport& r);

std::string homology_text(const HomologyReport& r);
std::string checks_text(const std::vector<CheckResult>& checks);

/// "r,c" and "r,c;r,c;..." argument syntax.
Square parse_square(const std::string& text);
std::vector<Square> parse_square_list(const std::string& text);

}  // namespace sgh
