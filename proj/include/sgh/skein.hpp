#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sgh/check.hpp"
#include "sgh/diagram.hpp"
#include "sgh/homology.hpp"
#include "sgh/poly_matrix.hpp"
#include "sgh/state_complex.hpp"
#include "sgh/state_space.hpp"

namespace sgh {

/// A vertex X together with a partition of its row O's (incoming edges) into
/// A and B and of its column O's (outgoing edges) into C and D.
struct SkeinProblem {
  Diagram base;
  Square vertex;
  std::vector<Square> a, b, c, d;
};

/// Validates: the vertex flock is in L-formation, has at least two row O's
/// and two column O's, and A, C are nonempty proper subsets. B and D are the
/// complements. Throws ValidationError.
SkeinProblem make_skein_problem(const Diagram& base, Square vertex, const std::vector<Square>& part_a,
                                const std::vector<Square>& part_c);

/// The vertex row is doubled (B below, A above) and the vertex column doubled
/// (C left, D right). The old X square becomes a 2x2 block whose anti-diagonal
/// squares form the A-pair and whose diagonal squares form the B-pair; p is
/// the lattice point at the centre of the block.
struct SplitBundle {
  SkeinProblem problem;
  Diagram grid_a;  // X's on the A-pair: vertices (A -> C) and (B -> D)
  Diagram grid_b;  // X's on the B-pair: vertices (A -> D) and (B -> C)
  LatticePoint corner;
  std::array<Square, 2> a_pair;  // upper-left, lower-right
  std::array<Square, 2> b_pair;  // upper-right, lower-left
  std::vector<Square> common_xs;
  std::vector<int> new_label_of_old;  // [old label - 1] -> new label
  std::vector<int> labels_a, labels_b, labels_c, labels_d;  // new labels

  /// x -> x + {p} on permutations.
  std::vector<std::uint8_t> lift_state(StateView x) const;
};

SplitBundle split_vertex(const SkeinProblem& problem);

/// Matrices of the construction. Z and Y are indexed locally: position in
/// z_ids / y_ids, which list split-grid generator ids in increasing order.
struct SkeinComplexes {
  StateSpace base_states;
  StateSpace split_states;
  std::vector<std::size_t> z_ids;
  std::vector<std::size_t> y_ids;
  std::vector<std::size_t> p_image;  // base id -> split id
  PolyMatrix d_base;
  PolyMatrix d_a;
  PolyMatrix d_b;
  PolyMatrix d_z;    // Z x Z block of d_b
  PolyMatrix d_y;    // Y x Y block of d_b
  PolyMatrix phi_a;  // Z -> Y: one B-pair square, no common X or A-pair square
  PolyMatrix phi_b;  // Y -> Z: one A-pair square, no common X or B-pair square
  PolyMatrix h_y;    // Y -> Y: one A-pair and one B-pair square, no common X
};

SkeinComplexes build_skein_complexes(const SplitBundle& bundle, unsigned workers = 0,
                                     std::size_t cap = kDefaultStateCap);

/// V_A + V_B + V_C + V_D, each V_S the product over the O's of S (new labels).
Poly annulus_sum(const SplitBundle& bundle);

/// Exact symbolic identities over F2[V]: Z-closure, corner rectangles, P
/// conjugation and gradings, chain-map property and compositions of the Phi
/// maps, and the block form of both split differentials. On Y the composite
/// Phi_A Phi_B is also tested against S Id up to the homotopy h_y.
std::vector<CheckResult> skein_chain_checks(const SplitBundle& bundle, const SkeinComplexes& cx);

struct SkeinReport {
  std::vector<CheckResult> checks;
  bool graded = false;
  BigradedDims cone_phi_a;  // H(Cone Phi_A~), identified with GH~(G_A)
  BigradedDims cone_phi_b;  // H(Cone Phi_B~), identified with GH~(G_B)
  BigradedDims cone_gf;     // H(Cone(Phi_B~ Phi_A~))
  BigradedDims direct_a;    // GH~(G_A) from its own differential
  BigradedDims direct_b;
  std::size_t dim_cone_phi_a = 0, dim_cone_phi_b = 0, dim_cone_gf = 0;
  TriangleReport triangle;
  bool exact = false;
  bool all_pass = false;
};

/// Runs the whole pipeline; the exactness part uses fully blocked coefficients.
SkeinReport skein_les_report(const SkeinProblem& problem, unsigned workers = 0, std::size_t cap = kDefaultStateCap);

}  // namespace sgh
