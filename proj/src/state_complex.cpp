#include "sgh/state_complex.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <thread>

#include "sgh/errors.hpp"

namespace sgh {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

template <class Fn>
void parallel_chunks(std::size_t count, unsigned workers, Fn fn) {
  if (workers <= 1 || count < 2) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> threads;
  for (std::size_t begin = 0; begin < count; begin += chunk)
    threads.emplace_back(fn, begin, std::min(count, begin + chunk));
  for (auto& t : threads) t.join();
}

unsigned resolve(unsigned workers) { return workers == 0 ? default_workers() : workers; }

// Visits (target id, rect) for every rectangle out of state `id`.
template <class Fn>
void for_each_rect_from(const StateSpace& space, std::size_t id, std::vector<std::uint8_t>& scratch, Fn fn) {
  const int n = space.grid_size();
  auto x = space.state(id);
  scratch.assign(x.begin(), x.end());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::swap(scratch[i], scratch[j]);
      const std::size_t target = space.index_of(scratch);
      std::swap(scratch[i], scratch[j]);
      fn(target, Rect{i, j - i, x[i], mod(x[j] - x[i], n)});
      fn(target, Rect{j, mod(i - j, n), x[j], mod(x[i] - x[j], n)});
    }
  }
}

}  // namespace

bool contains_square(const Rect& r, Square s, int n) {
  return mod(s.row - r.bottom, n) < r.height && mod(s.col - r.left, n) < r.width;
}

bool contains_in_interior(const Rect& r, LatticePoint p, int n) {
  const int dh = mod(p.horizontal - r.bottom, n);
  const int dv = mod(p.vertical - r.left, n);
  return dh > 0 && dh < r.height && dv > 0 && dv < r.width;
}

std::vector<Square> interior_squares(const Rect& r, int n) {
  std::vector<Square> out;
  for (int a = 0; a < r.height; ++a)
    for (int b = 0; b < r.width; ++b) out.push_back({mod(r.bottom + a, n), mod(r.left + b, n)});
  return out;
}

int interior_points(const Rect& r, StateView x) {
  const int n = static_cast<int>(x.size());
  int count = 0;
  for (int a = 1; a < r.height; ++a) {
    const int h = mod(r.bottom + a, n);
    const int dv = mod(x[h] - r.left, n);
    if (dv > 0 && dv < r.width) ++count;
  }
  return count;
}

std::vector<Rect> rects(StateView x, StateView y) {
  const int n = static_cast<int>(x.size());
  std::vector<int> moved;
  for (int i = 0; i < n; ++i)
    if (x[i] != y[i]) moved.push_back(i);
  if (moved.size() != 2) return {};
  const int i = moved[0], j = moved[1];
  if (x[i] != y[j] || x[j] != y[i]) return {};
  return {Rect{i, j - i, x[i], mod(x[j] - x[i], n)}, Rect{j, mod(i - j, n), x[j], mod(x[i] - x[j], n)}};
}

RectangleRule::RectangleRule(int n, const std::vector<Square>& labelled_os)
    : n_(n), o_label_(n * n, 0), forbidden_(n * n, 0), counted_(n * n, 0) {
  for (std::size_t i = 0; i < labelled_os.size(); ++i)
    o_label_.at(labelled_os[i].row * n + labelled_os[i].col) = static_cast<int>(i) + 1;
}

RectangleRule& RectangleRule::forbid(Square s) {
  forbidden_.at(s.row * n_ + s.col) = 1;
  return *this;
}

RectangleRule& RectangleRule::forbid(const std::vector<Square>& squares) {
  for (const auto& s : squares) forbid(s);
  return *this;
}

RectangleRule& RectangleRule::require_exactly_one_of(const std::vector<Square>& squares) {
  ++groups_;
  if (groups_ > 8) throw std::invalid_argument("at most 8 counted groups");
  for (const auto& s : squares) counted_.at(s.row * n_ + s.col) |= static_cast<std::uint8_t>(1u << (groups_ - 1));
  return *this;
}

std::optional<Monomial> RectangleRule::weigh(const Rect& r, StateView x) const {
  if (interior_points(r, x) != 0) return std::nullopt;
  std::array<int, 8> counted{};
  std::vector<std::uint16_t> exps;
  for (int a = 0; a < r.height; ++a) {
    const int row = mod(r.bottom + a, n_);
    for (int b = 0; b < r.width; ++b) {
      const int sq = row * n_ + mod(r.left + b, n_);
      if (forbidden_[sq]) return std::nullopt;
      if (counted_[sq])
        for (int g = 0; g < groups_; ++g) counted[g] += (counted_[sq] >> g) & 1;
      if (int label = o_label_[sq]; label != 0) {
        if (static_cast<int>(exps.size()) < label) exps.resize(label, 0);
        ++exps[label - 1];
      }
    }
  }
  for (int g = 0; g < groups_; ++g)
    if (counted[g] != 1) return std::nullopt;
  return Monomial::from_exponents(std::move(exps));
}

unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

PolyMatrix count_rectangles(const StateSpace& space, const RectangleRule& rule, const std::vector<bool>* sources,
                            const std::vector<bool>* targets, unsigned workers) {
  if (rule.grid_size() != space.grid_size()) throw std::invalid_argument("rule and state space differ in size");
  const std::size_t count = space.size();
  std::vector<PolyMatrix::Column> columns(count);
  parallel_chunks(count, resolve(workers), [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint8_t> scratch;
    for (std::size_t x = begin; x < end; ++x) {
      if (sources && !(*sources)[x]) continue;
      auto& col = columns[x];
      for_each_rect_from(space, x, scratch, [&](std::size_t y, const Rect& r) {
        if (targets && !(*targets)[y]) return;
        auto weight = rule.weigh(r, space.state(x));
        if (!weight) return;
        auto [it, inserted] = col.try_emplace(static_cast<std::uint32_t>(y), Poly(*weight));
        if (!inserted) it->second.add(*weight);
      });
    }
  });
  PolyMatrix out(count, count);
  for (std::size_t x = 0; x < count; ++x) out.set_column(x, std::move(columns[x]));
  return out;
}

F2Matrix count_rectangles_f2(const StateSpace& space, const RectangleRule& rule, unsigned workers) {
  if (rule.grid_size() != space.grid_size()) throw std::invalid_argument("rule and state space differ in size");
  const std::size_t count = space.size();
  std::vector<std::vector<std::uint32_t>> columns(count);
  parallel_chunks(count, resolve(workers), [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint8_t> scratch;
    for (std::size_t x = begin; x < end; ++x) {
      for_each_rect_from(space, x, scratch, [&](std::size_t y, const Rect& r) {
        if (rule.weigh(r, space.state(x))) columns[x].push_back(static_cast<std::uint32_t>(y));
      });
    }
  });
  F2Matrix out(count, count);
  for (std::size_t x = 0; x < count; ++x) out.set_column(x, std::move(columns[x]));
  return out;
}

PolyMatrix differential_minus(const Diagram& d, const StateSpace& space, unsigned workers) {
  RectangleRule rule(d.size(), d.os());
  rule.forbid(d.xs());
  return count_rectangles(space, rule, nullptr, nullptr, workers);
}

F2Matrix differential_tilde(const Diagram& d, const StateSpace& space, unsigned workers) {
  RectangleRule rule(d.size(), d.os());
  rule.forbid(d.xs()).forbid(d.os());
  return count_rectangles_f2(space, rule, workers);
}

PolyMatrix homotopy_h(const Diagram& d, const StateSpace& space, Square x1, unsigned workers) {
  if (!d.has_x(x1)) throw ValidationError("no X at " + to_string(x1));
  RectangleRule rule(d.size(), d.os());
  for (const auto& x : d.xs())
    if (x != x1) rule.forbid(x);
  rule.require_exactly_one_of({x1});
  return count_rectangles(space, rule, nullptr, nullptr, workers);
}

Poly homotopy_target(const Diagram& d, Square x1) {
  if (!d.has_x(x1)) throw ValidationError("no X at " + to_string(x1));
  Monomial row, col;
  for (int label : d.o_labels_in_row(x1.row)) row = row * Monomial::variable(label - 1);
  for (int label : d.o_labels_in_column(x1.col)) col = col * Monomial::variable(label - 1);
  return Poly(row) + Poly(col);
}

EdgeHomotopy edge_homotopy(const Diagram& d, const SpatialGraphModel& g, const StateSpace& space, int o_i,
                           int o_j, unsigned workers) {
  if (o_i < 1 || o_i > d.o_count() || o_j < 1 || o_j > d.o_count() || o_i == o_j)
    throw ValidationError("edge homotopy needs two distinct O labels");
  const int e = g.o_to_edge.at(o_i - 1);
  if (e != g.o_to_edge.at(o_j - 1)) throw ValidationError("O's lie on different edges");
  const auto& edge = g.edges[e];
  auto pos = [&](int o) { return static_cast<std::size_t>(std::find(edge.os.begin(), edge.os.end(), o) - edge.os.begin()); };
  std::size_t from = pos(o_i), to = pos(o_j);
  if (!edge.closed && from > to) std::swap(from, to);

  // The X between os[k] and os[k+1] is standard_xs[k].
  EdgeHomotopy out{PolyMatrix(space.size(), space.size()), {}};
  const std::size_t len = edge.os.size();
  for (std::size_t k = from; k != to; k = (k + 1) % len) {
    const Square x = edge.standard_xs.at(k);
    out.through.push_back(x);
    out.operator_k = out.operator_k + homotopy_h(d, space, x, workers);
  }
  return out;
}

Bigrading rectangle_grading_change(const Diagram& d, const Rect& r, StateView x) {
  const int n = d.size();
  int os = 0, xs = 0;
  for (const auto& o : d.os()) os += contains_square(r, o, n) ? 1 : 0;
  for (const auto& s : d.xs()) xs += contains_square(r, s, n) ? 1 : 0;
  return {1 - 2 * os + 2 * interior_points(r, x), xs - os};
}

namespace {

std::string describe(const Rect& r) {
  return "rect[bottom=" + std::to_string(r.bottom) + ",height=" + std::to_string(r.height) +
         ",left=" + std::to_string(r.left) + ",width=" + std::to_string(r.width) + "]";
}

struct Propagation {
  std::vector<Bigrading> grading;
  std::size_t checked = 0;
  std::string witness;
};

Propagation propagate(const Diagram& d, const StateSpace& space, bool x_free_only) {
  const int n = d.size();
  Propagation out;
  std::vector<std::uint8_t> assigned(space.size(), 0);
  out.grading.assign(space.size(), Bigrading{});
  std::deque<std::size_t> queue{0};
  assigned[0] = 1;
  std::vector<std::uint8_t> scratch;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    // Rectangles are oriented, so the graph uses those from x and those into x.
    std::size_t last_y = space.size();
    auto visit = [&](std::size_t y, const Rect& r, StateView source, bool forward) {
      if (x_free_only) {
        for (const auto& s : d.xs())
          if (contains_square(r, s, n)) return;
      }
      ++out.checked;
      const Bigrading change = rectangle_grading_change(d, r, source);
      const Bigrading expected = forward ? out.grading[x] - change : out.grading[x] + change;
      if (!assigned[y]) {
        assigned[y] = 1;
        out.grading[y] = expected;
        queue.push_back(y);
      } else if (out.grading[y] != expected && out.witness.empty()) {
        out.witness = "states " + state_to_string(space.state(x)) + " and " + state_to_string(space.state(y)) +
                      " via " + describe(r) + ": law gives " + to_string(expected) + ", another path gives " +
                      to_string(out.grading[y]);
      }
    };
    for_each_rect_from(space, x, scratch, [&](std::size_t y, const Rect& r) {
      visit(y, r, space.state(x), true);
      if (y == last_y) return;
      last_y = y;
      for (const auto& back : rects(space.state(y), space.state(x))) visit(y, back, space.state(y), false);
    });
  }
  if (out.witness.empty() && std::find(assigned.begin(), assigned.end(), 0) != assigned.end())
    out.witness = "rectangle graph is disconnected";
  return out;
}

}  // namespace

GradedStates assign_gradings(const Diagram& d, const StateSpace& space) {
  if (space.grid_size() != d.size()) throw std::invalid_argument("state space and diagram differ in size");
  auto p = propagate(d, space, true);
  if (!p.witness.empty()) throw CheckFailure("inconsistent relative gradings: " + p.witness);
  return {std::move(p.grading), p.checked};
}

GradingAudit audit_all_rectangles(const Diagram& d, const StateSpace& space) {
  auto p = propagate(d, space, false);
  return {p.witness.empty(), p.checked, p.witness};
}

std::string state_to_string(StateView x) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x[i]);
  }
  return out + "]";
}

}  // namespace sgh
