#include "sgh/homology.hpp"

#include <stdexcept>

#include "sgh/errors.hpp"

namespace sgh {

BigradedDims HomologyPresentation::dims_by_grading() const {
  BigradedDims out;
  for (const auto& g : rep_gradings_) ++out[g];
  return out;
}

BitVector HomologyPresentation::coordinates(const BitVector& cycle) const {
  if (cycle.size() != generator_count_) throw std::invalid_argument("cycle has the wrong length");
  BitVector v = cycle;
  BitVector tag(representatives_.size());
  BitVector wide_tag = tags_.empty() ? BitVector(0) : BitVector(tags_.front().size());
  for (std::size_t low = v.lowest(); low < v.size(); low = v.lowest()) {
    auto p = pivot_[low];
    if (p < 0) throw CheckFailure("vector is not a cycle (no pivot at generator " + std::to_string(low) + ")");
    v ^= echelon_[p];
    wide_tag ^= tags_[p];
  }
  for (auto i : wide_tag.support()) tag.set(i);
  return tag;
}

HomologyPresentation homology(const ChainComplexF2& cx) {
  const auto& d = cx.differential;
  const std::size_t n = d.cols();
  if (d.rows() != n) throw std::invalid_argument("differential must be square");
  if (!(d * d).is_zero()) throw CheckFailure("d^2 != 0");
  if (cx.gradings) {
    const auto& gr = *cx.gradings;
    if (gr.size() != n) throw std::invalid_argument("grading count does not match generator count");
    for (std::size_t c = 0; c < n; ++c)
      for (auto r : d.column(c))
        if (gr[r] != gr[c] - Bigrading{1, 0})
          throw CheckFailure("differential not of bidegree (-1,0) at generator " + std::to_string(c) + " -> " +
                             std::to_string(r));
  }

  HomologyPresentation h;
  h.generator_count_ = n;
  h.graded_ = cx.gradings.has_value();
  h.pivot_.assign(n, -1);

  // Column reduction with tracking: reduced = d * track.
  std::vector<BitVector> kernel;
  std::vector<BitVector> reduced_tracks;
  for (std::size_t j = 0; j < n; ++j) {
    BitVector col = d.column_bits(j);
    BitVector track(n);
    track.set(j);
    for (std::size_t low = col.lowest(); low < n; low = col.lowest()) {
      auto p = h.pivot_[low];
      if (p < 0) break;
      col ^= h.echelon_[p];
      track ^= reduced_tracks[p];
    }
    if (col.none()) {
      kernel.push_back(std::move(track));
    } else {
      h.pivot_[col.lowest()] = static_cast<std::int64_t>(h.echelon_.size());
      h.echelon_.push_back(std::move(col));
      reduced_tracks.push_back(std::move(track));
    }
  }
  reduced_tracks.clear();
  h.boundary_dim_ = h.echelon_.size();
  h.cycle_dim_ = kernel.size();

  const std::size_t tag_width = kernel.size();
  h.tags_.assign(h.echelon_.size(), BitVector(tag_width));
  for (auto& z : kernel) {
    BitVector v = z;
    BitVector tag(tag_width);
    for (std::size_t low = v.lowest(); low < n; low = v.lowest()) {
      auto p = h.pivot_[low];
      if (p < 0) break;
      v ^= h.echelon_[p];
      tag ^= h.tags_[p];
    }
    if (v.none()) continue;
    const std::size_t k = h.representatives_.size();
    tag.flip(k);
    h.pivot_[v.lowest()] = static_cast<std::int64_t>(h.echelon_.size());
    h.echelon_.push_back(std::move(v));
    h.tags_.push_back(std::move(tag));
    if (cx.gradings) h.rep_gradings_.push_back((*cx.gradings)[z.lowest()]);
    h.representatives_.push_back(std::move(z));
  }
  return h;
}

void require_chain_map(const ChainComplexF2& source, const ChainComplexF2& target, const ChainMapF2& f) {
  if (f.matrix.cols() != source.size() || f.matrix.rows() != target.size())
    throw std::invalid_argument("chain map dimensions do not match the complexes");
  auto lhs = f.matrix * source.differential;
  auto rhs = target.differential * f.matrix;
  if (auto diff = lhs.first_difference(rhs))
    throw CheckFailure("not a chain map: f d != d f at generator " + std::to_string(diff->first) + " -> " +
                       std::to_string(diff->second));
  if (source.gradings && target.gradings && f.degree) {
    for (std::size_t c = 0; c < f.matrix.cols(); ++c)
      for (auto r : f.matrix.column(c))
        if ((*target.gradings)[r] - (*source.gradings)[c] != *f.degree)
          throw CheckFailure("map not homogeneous of degree " + to_string(*f.degree) + " at generator " +
                             std::to_string(c) + " -> " + std::to_string(r));
  }
}

F2Matrix induced_map(const ChainMapF2& f, const ChainComplexF2& source, const HomologyPresentation& src,
                     const ChainComplexF2& target, const HomologyPresentation& dst) {
  require_chain_map(source, target, f);
  F2Matrix out(dst.dimension(), src.dimension());
  for (std::size_t i = 0; i < src.dimension(); ++i) {
    BitVector image = f.matrix.apply(src.representatives()[i]);
    out.set_column(i, dst.coordinates(image).support());
  }
  return out;
}

MappingCone cone(const ChainComplexF2& source, const ChainComplexF2& target, const ChainMapF2& f) {
  require_chain_map(source, target, f);
  const std::size_t na = source.size();
  const std::size_t nb = target.size();
  const auto offset = static_cast<std::uint32_t>(na);

  MappingCone out;
  out.complex.differential = F2Matrix(na + nb, na + nb);
  for (std::size_t a = 0; a < na; ++a) {
    std::vector<std::uint32_t> col = source.differential.column(a);
    for (auto r : f.matrix.column(a)) col.push_back(r + offset);
    out.complex.differential.set_column(a, std::move(col));
  }
  for (std::size_t b = 0; b < nb; ++b) {
    std::vector<std::uint32_t> col;
    for (auto r : target.differential.column(b)) col.push_back(r + offset);
    out.complex.differential.set_column(na + b, std::move(col));
  }

  if (source.gradings && target.gradings) {
    if (!f.degree) throw std::invalid_argument("graded cone needs the degree of the map");
    std::vector<Bigrading> gr;
    gr.reserve(na + nb);
    for (const auto& g : *source.gradings) gr.push_back(g + *f.degree + Bigrading{1, 0});
    for (const auto& g : *target.gradings) gr.push_back(g);
    out.complex.gradings = std::move(gr);
  }

  out.inclusion = F2Matrix(na + nb, nb);
  for (std::size_t b = 0; b < nb; ++b) out.inclusion.set_column(b, {static_cast<std::uint32_t>(na + b)});
  out.projection = F2Matrix(na, na + nb);
  for (std::size_t a = 0; a < na; ++a) out.projection.set_column(a, {static_cast<std::uint32_t>(a)});
  return out;
}

TriangleReport triangle_exactness(const ChainComplexF2& a, const ChainComplexF2& b, const ChainComplexF2& c,
                                  const ChainMapF2& f, const ChainMapF2& g) {
  ChainMapF2 gf{g.matrix * f.matrix, std::nullopt};
  if (f.degree && g.degree) gf.degree = *f.degree + *g.degree;

  const auto cone_f = cone(a, b, f);
  const auto cone_gf = cone(a, c, gf);
  const auto cone_g = cone(b, c, g);
  const std::size_t na = a.size(), nb = b.size(), nc = c.size();

  ChainMapF2 u{F2Matrix(na + nc, na + nb), g.degree};
  for (std::size_t i = 0; i < na; ++i) u.matrix.set_column(i, {static_cast<std::uint32_t>(i)});
  for (std::size_t j = 0; j < nb; ++j) {
    std::vector<std::uint32_t> col;
    for (auto r : g.matrix.column(j)) col.push_back(static_cast<std::uint32_t>(na + r));
    u.matrix.set_column(na + j, std::move(col));
  }

  ChainMapF2 v{F2Matrix(nb + nc, na + nc), Bigrading{0, 0}};
  for (std::size_t i = 0; i < na; ++i) v.matrix.set_column(i, f.matrix.column(i));
  for (std::size_t k = 0; k < nc; ++k) v.matrix.set_column(na + k, {static_cast<std::uint32_t>(nb + k)});

  ChainMapF2 delta{F2Matrix(na + nb, nb + nc), std::nullopt};
  if (g.degree) delta.degree = Bigrading{0, 0} - *g.degree - Bigrading{1, 0};
  for (std::size_t j = 0; j < nb; ++j) delta.matrix.set_column(j, {static_cast<std::uint32_t>(na + j)});

  TriangleReport report;
  try {
    require_chain_map(cone_f.complex, cone_gf.complex, u);
    require_chain_map(cone_gf.complex, cone_g.complex, v);
    require_chain_map(cone_g.complex, cone_f.complex, delta);
    report.chain_maps_ok = true;
  } catch (const CheckFailure& e) {
    report.failure = e.what();
    return report;
  }

  const auto h_f = homology(cone_f.complex);
  const auto h_gf = homology(cone_gf.complex);
  const auto h_g = homology(cone_g.complex);
  const auto u_star = induced_map(u, cone_f.complex, h_f, cone_gf.complex, h_gf);
  const auto v_star = induced_map(v, cone_gf.complex, h_gf, cone_g.complex, h_g);
  const auto d_star = induced_map(delta, cone_g.complex, h_g, cone_f.complex, h_f);

  auto node = [](std::string name, const HomologyPresentation& h, const F2Matrix& in, const F2Matrix& out) {
    TriangleNode n;
    n.name = std::move(name);
    n.dimension = h.dimension();
    n.rank_in = f2_rank(in);
    n.rank_out = f2_rank(out);
    n.composite_zero = (out * in).is_zero();
    n.exact = n.composite_zero && n.dimension - n.rank_out == n.rank_in;
    if (h.graded()) n.dims = h.dims_by_grading();
    return n;
  };
  report.nodes[0] = node("H(Cone f)", h_f, d_star, u_star);
  report.nodes[1] = node("H(Cone gf)", h_gf, u_star, v_star);
  report.nodes[2] = node("H(Cone g)", h_g, v_star, d_star);

  report.exact = true;
  for (const auto& n : report.nodes) {
    if (n.exact) continue;
    report.exact = false;
    if (report.failure.empty())
      report.failure = "not exact at " + n.name + ": dim " + std::to_string(n.dimension) + ", rank in " +
                       std::to_string(n.rank_in) + ", rank out " + std::to_string(n.rank_out);
  }
  return report;
}

}  // namespace sgh
