#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sgh/bigrading.hpp"
#include "sgh/f2_matrix.hpp"

namespace sgh {

/// Finite chain complex over F2. When gradings are present the differential
/// must be homogeneous of bidegree (-1, 0).
struct ChainComplexF2 {
  F2Matrix differential;
  std::optional<std::vector<Bigrading>> gradings;

  std::size_t size() const { return differential.cols(); }
};

/// Linear map between complexes; `degree` is its bidegree when known.
struct ChainMapF2 {
  F2Matrix matrix;
  std::optional<Bigrading> degree;
};

/// Homology with an explicit basis of cycle representatives and enough
/// reduction data to write any cycle in that basis. Pivots are lowest
/// generator ids, so identical inputs give identical bases.
class HomologyPresentation {
 public:
  std::size_t dimension() const { return representatives_.size(); }
  std::size_t generator_count() const { return generator_count_; }
  std::size_t cycle_dimension() const { return cycle_dim_; }
  std::size_t boundary_dimension() const { return boundary_dim_; }

  const std::vector<BitVector>& representatives() const { return representatives_; }
  /// Bigrading of each representative (empty for ungraded complexes).
  const std::vector<Bigrading>& representative_gradings() const { return rep_gradings_; }
  bool graded() const { return graded_; }
  BigradedDims dims_by_grading() const;

  /// Coordinates of a cycle in the representative basis. Throws CheckFailure
  /// if `cycle` is not a cycle.
  BitVector coordinates(const BitVector& cycle) const;

 private:
  friend HomologyPresentation homology(const ChainComplexF2&);

  std::size_t generator_count_ = 0;
  std::size_t cycle_dim_ = 0;
  std::size_t boundary_dim_ = 0;
  bool graded_ = false;
  std::vector<BitVector> representatives_;
  std::vector<Bigrading> rep_gradings_;

  // Echelon basis of (boundaries + representatives), pivot = lowest bit. Each
  // vector carries its class in the representative basis.
  std::vector<std::int64_t> pivot_;
  std::vector<BitVector> echelon_;
  std::vector<BitVector> tags_;
};

/// Throws CheckFailure if d^2 != 0 or a graded differential is not
/// homogeneous of bidegree (-1, 0).
HomologyPresentation homology(const ChainComplexF2& cx);

/// Throws CheckFailure unless f d = d f (and f is homogeneous of its stated
/// degree, for graded complexes).
void require_chain_map(const ChainComplexF2& source, const ChainComplexF2& target, const ChainMapF2& f);

/// Matrix of f_* in the representative bases of src and dst.
F2Matrix induced_map(const ChainMapF2& f, const ChainComplexF2& source, const HomologyPresentation& src,
                     const ChainComplexF2& target, const HomologyPresentation& dst);

/// Cone(f) on A (+) B, A first: (a, b) -> (da, f(a) + db). The A part is
/// regraded by deg f + (1, 0) so the cone differential has bidegree (-1, 0).
struct MappingCone {
  ChainComplexF2 complex;
  F2Matrix inclusion;   // B -> Cone
  F2Matrix projection;  // Cone -> A
};

MappingCone cone(const ChainComplexF2& source, const ChainComplexF2& target, const ChainMapF2& f);

struct TriangleNode {
  std::string name;
  std::size_t dimension = 0;
  std::size_t rank_in = 0;    // rank of the map arriving here
  std::size_t rank_out = 0;   // rank of the map leaving here
  bool composite_zero = true; // out o in = 0
  bool exact = false;         // composite_zero && dim - rank_out == rank_in
  BigradedDims dims;
};

struct TriangleReport {
  bool chain_maps_ok = false;
  std::array<TriangleNode, 3> nodes;
  bool exact = false;
  std::string failure;
};

/// For f: A -> B and g: B -> C checks exactness of
///   H(Cone f) -u-> H(Cone gf) -v-> H(Cone g) -delta-> H(Cone f)
/// with u(a, b) = (a, g b), v(a, c) = (f a, c), delta(b, c) = (0, b).
TriangleReport triangle_exactness(const ChainComplexF2& a, const ChainComplexF2& b, const ChainComplexF2& c,
                                  const ChainMapF2& f, const ChainMapF2& g);

}  // namespace sgh
