#include "sgh/commands.hpp"

#include <unistd.h>

#include <charconv>
#include <sstream>

#include "sgh/errors.hpp"
#include "sgh/homology.hpp"
#include "sgh/state_complex.hpp"

namespace sgh {

TildeHomology tilde_homology(const Diagram& d, const StateSpace& space, unsigned workers) {
  ChainComplexF2 cx{differential_tilde(d, space, workers), std::nullopt};
  TildeHomology out;
  try {
    cx.gradings = assign_gradings(d, space).grading;
    out.graded = true;
  } catch (const CheckFailure&) {
  }
  const auto h = homology(cx);
  out.total = h.dimension();
  if (out.graded) out.dims = h.dims_by_grading();
  return out;
}

HomologyReport cmd_homology(const Diagram& d, BlockMode mode, const RunOptions& opts) {
  const auto g = reconstruct(d);
  require_resources(d.size(), d.o_count(), opts);
  const auto space = StateSpace::enumerate(d.size(), opts.max_states);
  const auto tilde = tilde_homology(d, space, opts.workers);

  HomologyReport r;
  r.n = d.size();
  r.m = d.o_count();
  r.edge_count = g.edge_count();
  r.mode = mode;
  r.graded = tilde.graded;
  r.table = tilde.dims;
  r.total = tilde.total;
  if (mode == BlockMode::tilde) return r;

  const int power = static_cast<int>(r.m - r.edge_count);
  if (r.graded) {
    auto quotient = divide_by_w(tilde.dims, power);
    if (!quotient)
      throw CheckFailure("tilde table is not divisible by W^" + std::to_string(power));
    r.table = *quotient;
    r.total = total_dimension(r.table);
  } else {
    const std::size_t factor = std::size_t{1} << power;
    if (tilde.total % factor != 0)
      throw CheckFailure("tilde total " + std::to_string(tilde.total) + " is not divisible by 2^" +
                         std::to_string(power));
    r.total = tilde.total / factor;
  }
  return r;
}

CheckResult check_square_zero(const std::string& name, const PolyMatrix& d, const StateSpace& space) {
  const PolyMatrix sq = d * d;
  for (std::size_t c = 0; c < sq.cols(); ++c) {
    for (const auto& [r, p] : sq.column(c)) {
      if (p.terms().empty()) continue;
      return {name, false,
              state_to_string(space.state(c)) + " -> " + state_to_string(space.state(r)) + ": " + p.to_string()};
    }
  }
  return {name, true, std::to_string(d.nonzeros()) + " nonzero entries"};
}

namespace {

CheckResult compare_tables(const std::string& name, const TildeHomology& a, const TildeHomology& b) {
  if (a.graded && b.graded) {
    const bool ok = equal_up_to_shift(a.dims, b.dims);
    return {name, ok, ok ? "" : "bigraded tables differ beyond a global shift"};
  }
  const bool ok = a.total == b.total;
  return {name, ok, "ungraded totals " + std::to_string(a.total) + " vs " + std::to_string(b.total)};
}

CheckResult operator_identity(const std::string& name, const PolyMatrix& d, const PolyMatrix& h, const Poly& scalar,
                              const StateSpace& space) {
  const PolyMatrix lhs = d * h + h * d;
  const PolyMatrix rhs = PolyMatrix::scalar(space.size(), scalar);
  if (auto diff = lhs.first_difference(rhs)) {
    const auto [c, r] = *diff;
    return {name, false,
            "entry " + state_to_string(space.state(c)) + " -> " + state_to_string(space.state(r)) + ": " +
                lhs.at(r, c).to_string() + " vs " + rhs.at(r, c).to_string()};
  }
  return {name, true, "equals (" + scalar.to_string() + ") Id"};
}

}  // namespace

std::vector<CheckResult> cmd_check(const Diagram& d, const RunOptions& opts) {
  require_resources(d.size(), d.o_count(), opts);
  const auto space = StateSpace::enumerate(d.size(), opts.max_states);
  const auto g = reconstruct(d);
  std::vector<CheckResult> out;

  const PolyMatrix dm = differential_minus(d, space, opts.workers);
  const F2Matrix dt = differential_tilde(d, space, opts.workers);
  out.push_back(check_square_zero("d_minus_squared_zero", dm, space));
  {
    const bool ok = (dt * dt).is_zero();
    out.push_back({"d_tilde_squared_zero", ok, ok ? "" : "nonzero square"});
  }
  {
    const bool ok = dt == dm.specialize_at_zero();
    out.push_back({"d_tilde_is_specialization", ok, ok ? "" : "blocked differential differs from V = 0"});
  }

  try {
    const auto graded = assign_gradings(d, space);
    out.push_back({"grading_path_independence", true,
                   std::to_string(graded.rectangles_checked) + " rectangles checked"});
    const auto deg = map_degree(dm, graded.grading, graded.grading);
    const bool ok = deg.homogeneous && (!deg.degree || *deg.degree == Bigrading{-1, 0});
    out.push_back({"differential_bidegree", ok,
                   !deg.homogeneous ? deg.witness : deg.degree ? "degree " + to_string(*deg.degree) : "zero map"});
  } catch (const CheckFailure& e) {
    out.push_back({"grading_path_independence", false, e.what()});
  }

  for (const auto& x : d.xs()) {
    out.push_back(operator_identity("homotopy_" + to_string(x), dm, homotopy_h(d, space, x, opts.workers),
                                    homotopy_target(d, x), space));
  }

  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    for (std::size_t k = 0; k + 1 < edge.os.size(); ++k) {
      const int oi = edge.os[k], oj = edge.os[k + 1];
      const auto k_op = edge_homotopy(d, g, space, oi, oj, opts.workers);
      const Poly target = Poly(Monomial::variable(oi - 1)) + Poly(Monomial::variable(oj - 1));
      out.push_back(operator_identity("edge_homotopy_V" + std::to_string(oi) + "_V" + std::to_string(oj), dm,
                                      k_op.operator_k, target, space));
    }
  }

  const auto base = tilde_homology(d, space, opts.workers);
  out.push_back(compare_tables("reflection_invariance", base, tilde_homology(reflect_diagonal(d), space, opts.workers)));
  out.push_back(compare_tables("cyclic_shift_rows_1", base,
                               tilde_homology(cyclic_shift(d, Axis::rows, 1), space, opts.workers)));
  out.push_back(compare_tables("cyclic_shift_columns_1", base,
                               tilde_homology(cyclic_shift(d, Axis::columns, 1), space, opts.workers)));
  return out;
}

std::size_t estimate_memory_bytes(int n, std::size_t m) {
  const std::size_t states = factorial(n);
  const std::size_t nn = static_cast<std::size_t>(n);
  // Each state has n(n-1)/2 transpositions and two rectangles per pair.
  const std::size_t entries = states * nn * (nn - 1);
  const std::size_t poly_entry = 64 + 2 * m;
  const std::size_t dense = 3 * states * ((states + 63) / 64) * 8;
  return states * (nn + 16) + entries * poly_entry + dense;
}

std::size_t physical_memory_bytes() {
  const long pages = sysconf(_SC_PHYS_PAGES);
  const long page = sysconf(_SC_PAGE_SIZE);
  if (pages <= 0 || page <= 0) return 0;
  return static_cast<std::size_t>(pages) * static_cast<std::size_t>(page);
}

std::size_t require_resources(int n, std::size_t m, const RunOptions& opts) {
  const std::size_t states = factorial(n);
  if (states > opts.max_states)
    throw CapError("state space " + std::to_string(states) + " exceeds cap " + std::to_string(opts.max_states));
  const std::size_t need = estimate_memory_bytes(n, m);
  const std::size_t have = physical_memory_bytes();
  if (have != 0 && need > have)
    throw CapError("projected memory " + std::to_string(need >> 20) + " MiB exceeds physical memory " +
                   std::to_string(have >> 20) + " MiB");
  return need;
}

nlohmann::ordered_json graph_json(const SpatialGraphModel& g) {
  nlohmann::ordered_json out;
  out["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices)
    out["vertices"].push_back({{"x", {v.x.row, v.x.col}}, {"in", v.incoming}, {"out", v.outgoing}});
  out["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) out["edges"].push_back({{"os", e.os}, {"closed", e.closed}});
  out["edge_count"] = g.edge_count();
  return out;
}

nlohmann::ordered_json table_json(const BigradedDims& t) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [gr, dim] : t) out.push_back({{"dM", gr.maslov}, {"dA", gr.alexander}, {"dim", dim}});
  return out;
}

nlohmann::ordered_json homology_json(const HomologyReport& r) {
  nlohmann::ordered_json out;
  out["n"] = r.n;
  out["m"] = r.m;
  out["edge_count"] = r.edge_count;
  out["mode"] = r.mode == BlockMode::tilde ? "tilde" : "hat";
  out["graded"] = r.graded;
  out["table"] = table_json(r.table);
  out["total"] = r.total;
  return out;
}

nlohmann::ordered_json checks_json(const std::vector<CheckResult>& checks) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

nlohmann::ordered_json skein_json(const SkeinReport& r) {
  nlohmann::ordered_json out;
  out["checks"] = checks_json(r.checks);
  out["graded"] = r.graded;
  out["homology"] = {{"GA", table_json(r.cone_phi_a)}, {"GB", table_json(r.cone_phi_b)},
                     {"cone_gf", table_json(r.cone_gf)}};
  out["dimensions"] = {{"GA", r.dim_cone_phi_a}, {"GB", r.dim_cone_phi_b}, {"cone_gf", r.dim_cone_gf}};
  auto nodes = nlohmann::ordered_json::array();
  for (const auto& node : r.triangle.nodes)
    nodes.push_back({{"name", node.name}, {"dim", node.dimension}, {"rank_in", node.rank_in},
                     {"rank_out", node.rank_out}, {"exact", node.exact}});
  out["triangle"] = nodes;
  out["exact"] = r.exact;
  return out;
}

std::string homology_text(const HomologyReport& r) {
  std::ostringstream os;
  os << "grid " << r.n << ", m = " << r.m << ", edges = " << r.edge_count << ", mode "
     << (r.mode == BlockMode::tilde ? "tilde" : "hat") << "\n";
  if (r.graded) {
    os << "  dM  dA  dim\n";
    for (const auto& [gr, dim] : r.table) {
      char line[64];
      std::snprintf(line, sizeof line, "%4d%4d%5zu\n", gr.maslov, gr.alexander, dim);
      os << line;
    }
  } else {
    os << "  (no consistent relative grading)\n";
  }
  os << "total " << r.total << "\n";
  return os.str();
}

std::string checks_text(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  return os.str();
}

namespace {

int parse_int(std::string_view s, const std::string& whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ValidationError("expected r,c but got '" + whole + "'");
  return v;
}

}  // namespace

Square parse_square(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ValidationError("expected r,c but got '" + text + "'");
  const std::string_view view(text);
  return {parse_int(view.substr(0, comma), text), parse_int(view.substr(comma + 1), text)};
}

std::vector<Square> parse_square_list(const std::string& text) {
  std::vector<Square> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(';', start);
    const std::string item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!item.empty()) out.push_back(parse_square(item));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace sgh
