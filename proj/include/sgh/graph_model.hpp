#pragma once

#include <optional>
#include <vector>

#include "sgh/diagram.hpp"

namespace sgh {

/// The O's sharing a row (incoming) or a column (outgoing) with an X.
struct Flock {
  Square owner;
  std::vector<Square> row_os;
  std::vector<Square> column_os;

  std::size_t size() const { return row_os.size() + column_os.size(); }
};

Flock flock(const Diagram& d, Square x);

struct Vertex {
  Square x;
  std::vector<int> incoming;  // O labels in the X's row
  std::vector<int> outgoing;  // O labels in the X's column
};

/// A maximal hop chain X -> O -> X -> ... through standard X's. Hops alternate
/// vertical (X to an O in its column) and horizontal (O to the X in its row).
/// A closed edge is a cycle of standard X's and has no source or target.
struct Edge {
  std::optional<Square> source;
  std::optional<Square> target;
  std::vector<int> os;                  // O labels in traversal order
  std::vector<Square> standard_xs;      // interior X's in traversal order
  bool closed = false;
};

struct SpatialGraphModel {
  std::vector<Vertex> vertices;         // ordered by X row
  std::vector<Square> standard_xs;      // ordered by row
  std::vector<Edge> edges;
  std::vector<int> o_to_edge;           // indexed by O label - 1

  std::size_t edge_count() const { return edges.size(); }
  const Vertex* vertex_at(Square x) const;
};

SpatialGraphModel reconstruct(const Diagram& d);

/// One O label per edge (the lexicographically least square on the edge), in
/// edge order.
std::vector<int> edge_representatives(const Diagram& d, const SpatialGraphModel& g);

struct PreferredReport {
  struct Entry {
    Square vertex;
    bool l_formation = false;
  };
  std::vector<Entry> vertices;

  bool preferred() const;
};

/// L-formation check on the planar representative: every row-O of a vertex
/// flock lies strictly right of the X, every column-O strictly below it.
PreferredReport is_preferred(const Diagram& d, const SpatialGraphModel& g);

}  // namespace sgh
