#include "sgh/graph_model.hpp"

#include <algorithm>

#include "sgh/errors.hpp"

namespace sgh {

Flock flock(const Diagram& d, Square x) {
  if (!d.has_x(x)) throw ValidationError("no X at " + to_string(x));
  Flock f{x, {}, {}};
  for (int label : d.o_labels_in_row(x.row)) f.row_os.push_back(d.o_square(label));
  for (int label : d.o_labels_in_column(x.col)) f.column_os.push_back(d.o_square(label));
  return f;
}

const Vertex* SpatialGraphModel::vertex_at(Square x) const {
  for (const auto& v : vertices)
    if (v.x == x) return &v;
  return nullptr;
}

namespace {

bool is_standard(const Diagram& d, Square x) {
  return d.o_labels_in_row(x.row).size() == 1 && d.o_labels_in_column(x.col).size() == 1;
}

}  // namespace

SpatialGraphModel reconstruct(const Diagram& d) {
  SpatialGraphModel g;
  g.o_to_edge.assign(d.o_count(), -1);

  for (const auto& x : d.xs()) {
    if (is_standard(d, x)) {
      g.standard_xs.push_back(x);
    } else {
      g.vertices.push_back({x, d.o_labels_in_row(x.row), d.o_labels_in_column(x.col)});
    }
  }

  // Follow O -> X(row) -> O(column of that X) until a vertex X (or the start
  // O, for closed edges) is reached.
  auto trace = [&](int first_o, Edge& edge, std::optional<int> stop_at) {
    int o = first_o;
    while (true) {
      edge.os.push_back(o);
      g.o_to_edge[o - 1] = static_cast<int>(g.edges.size());
      Square x = d.x_in_row(d.o_square(o).row);
      if (!is_standard(d, x)) {
        edge.target = x;
        return;
      }
      edge.standard_xs.push_back(x);
      int next = d.o_labels_in_column(x.col).front();
      if (stop_at && next == *stop_at) return;
      o = next;
    }
  };

  for (const auto& v : g.vertices) {
    for (int o : v.outgoing) {
      Edge e;
      e.source = v.x;
      trace(o, e, std::nullopt);
      g.edges.push_back(std::move(e));
    }
  }
  for (int label = 1; label <= d.o_count(); ++label) {
    if (g.o_to_edge[label - 1] != -1) continue;
    Edge e;
    e.closed = true;
    trace(label, e, label);
    g.edges.push_back(std::move(e));
  }
  return g;
}

std::vector<int> edge_representatives(const Diagram&, const SpatialGraphModel& g) {
  std::vector<int> reps;
  reps.reserve(g.edges.size());
  // Labels are lexicographic, so the least label is the least square.
  for (const auto& e : g.edges) reps.push_back(*std::min_element(e.os.begin(), e.os.end()));
  return reps;
}

bool PreferredReport::preferred() const {
  return std::all_of(vertices.begin(), vertices.end(), [](const Entry& e) { return e.l_formation; });
}

PreferredReport is_preferred(const Diagram& d, const SpatialGraphModel& g) {
  PreferredReport report;
  for (const auto& v : g.vertices) {
    bool ok = true;
    for (int o : v.incoming) ok = ok && d.o_square(o).col > v.x.col;
    for (int o : v.outgoing) ok = ok && d.o_square(o).row < v.x.row;
    report.vertices.push_back({v.x, ok});
  }
  return report;
}

}  // namespace sgh
