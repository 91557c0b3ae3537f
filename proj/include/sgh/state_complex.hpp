#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgh/bigrading.hpp"
#include "sgh/diagram.hpp"
#include "sgh/f2_matrix.hpp"
#include "sgh/graph_model.hpp"
#include "sgh/poly_matrix.hpp"
#include "sgh/state_space.hpp"

namespace sgh {

using StateView = std::span<const std::uint8_t>;

/// A rectangle on the torus. Interior rows are bottom, bottom+1, ...,
/// bottom+height-1 (mod n), interior columns likewise from `left`. Its SW
/// corner is (bottom, left) and its NE corner (bottom+height, left+width).
struct Rect {
  int bottom = 0;
  int height = 0;
  int left = 0;
  int width = 0;

  friend auto operator<=>(const Rect&, const Rect&) = default;
};

bool contains_square(const Rect& r, Square s, int n);
bool contains_in_interior(const Rect& r, LatticePoint p, int n);
std::vector<Square> interior_squares(const Rect& r, int n);
/// Number of points of x strictly inside r.
int interior_points(const Rect& r, StateView x);

/// Rect(x, y): empty unless y is x composed with a transposition, in which case
/// the two regions whose SW and NE corners are points of x.
std::vector<Rect> rects(StateView x, StateView y);

/// Which rectangles to count and how to weight them: a rectangle is accepted
/// iff it is empty, avoids every forbidden square and contains exactly one
/// square of each counted group. Its weight is the product of
/// V_i over the O squares in its interior.
class RectangleRule {
 public:
  RectangleRule(int n, const std::vector<Square>& labelled_os);

  RectangleRule& forbid(Square s);
  RectangleRule& forbid(const std::vector<Square>& squares);
  /// Adds a counted group; may be called up to eight times.
  RectangleRule& require_exactly_one_of(const std::vector<Square>& squares);

  int grid_size() const { return n_; }
  /// nullopt if the rectangle is rejected.
  std::optional<Monomial> weigh(const Rect& r, StateView x) const;

 private:
  int n_;
  std::vector<int> o_label_;          // per square, 0 = none
  std::vector<std::uint8_t> forbidden_;
  std::vector<std::uint8_t> counted_;
  int groups_ = 0;  // bit g of counted_ marks membership in group g
};

/// Worker threads used by matrix assembly when the caller does not say.
unsigned default_workers();

/// Entry (y, x) = sum of weights of accepted rectangles from x to y. Sources
/// and targets may be restricted by masks over generator ids.
PolyMatrix count_rectangles(const StateSpace& space, const RectangleRule& rule,
                            const std::vector<bool>* sources = nullptr,
                            const std::vector<bool>* targets = nullptr, unsigned workers = 0);

/// Same count, reduced mod 2 and ignoring weights.
F2Matrix count_rectangles_f2(const StateSpace& space, const RectangleRule& rule, unsigned workers = 0);

/// d^- : empty rectangles with no X inside, weighted by their O's.
PolyMatrix differential_minus(const Diagram& d, const StateSpace& space, unsigned workers = 0);
/// Fully blocked differential: empty rectangles avoiding every marking.
F2Matrix differential_tilde(const Diagram& d, const StateSpace& space, unsigned workers = 0);
/// H_X1: empty rectangles whose only X is x1.
PolyMatrix homotopy_h(const Diagram& d, const StateSpace& space, Square x1, unsigned workers = 0);

/// The multiplication operator d^- H + H d^- is expected to equal for x1:
/// (product of V over the row O's) + (product of V over the column O's).
Poly homotopy_target(const Diagram& d, Square x1);

/// K = sum of H_X over the standard X's met between two O's on one edge, so
/// that d^- K + K d^- = (V_i + V_j) Id. Throws ValidationError if the O's are
/// not joined by a run of standard X's.
struct EdgeHomotopy {
  PolyMatrix operator_k;
  std::vector<Square> through;
};
EdgeHomotopy edge_homotopy(const Diagram& d, const SpatialGraphModel& g, const StateSpace& space, int o_i,
                           int o_j, unsigned workers = 0);

/// M(x) - M(y), A(x) - A(y) for r in Rect(x, y):
///   M: 1 - 2 #(r n O) + 2 #(x n Int r)
///   A: #(r n X) - #(r n O)
Bigrading rectangle_grading_change(const Diagram& d, const Rect& r, StateView x);

/// Relative bigradings with the lexicographically least state pinned at (0,0).
struct GradedStates {
  std::vector<Bigrading> grading;
  std::size_t rectangles_checked = 0;
};

/// Propagates the rectangle grading law over rectangles with no X inside and
/// checks every such rectangle. Throws CheckFailure naming a state pair and a
/// rectangle when the law is inconsistent.
GradedStates assign_gradings(const Diagram& d, const StateSpace& space);

/// Path-independence of the grading law over every rectangle (X's allowed).
struct GradingAudit {
  bool consistent = true;
  std::size_t rectangles_checked = 0;
  std::string witness;
};
GradingAudit audit_all_rectangles(const Diagram& d, const StateSpace& space);

/// State of the split or base grid read as a permutation string "[2,0,1]".
std::string state_to_string(StateView x);

}  // namespace sgh
