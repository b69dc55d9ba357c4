#pragma once

#include <map>
#include <string>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/matrix.hpp"
#include "rigidity/rat.hpp"

namespace rigidity {

// A graph with exact rational coordinates. dim = 3 feeds the rigidity matrix,
// dim = 2 the cofactor matrix.
struct Framework {
  Graph graph;
  int dim = 3;
  std::map<Label, std::vector<mpq_class>> coords;

  void validate() const {
    if (dim != 2 && dim != 3) throw Error("bad-dimension", "dim must be 2 or 3");
    for (const auto& v : graph.vertices()) {
      auto it = coords.find(v);
      if (it == coords.end()) throw Error("missing-coordinates", v);
      if (static_cast<int>(it->second.size()) != dim) throw Error("bad-dimension", v);
    }
    if (coords.size() != graph.vertices().size())
      throw Error("extra-coordinates", "coordinate map does not match vertex set");
  }

  std::uint64_t hash() const {
    std::uint64_t h = graph.hash();
    h = fnv1a(dim == 3 ? "d3" : "d2", h);
    for (const auto& [v, p] : coords) {
      h = fnv1a(v + ":", h);
      for (const auto& q : p) h = fnv1a(rat_str(q) + ",", h);
    }
    return h;
  }
};

// One row per edge, 3 columns per vertex; the row for (u,v) carries p_u - p_v
// in u's block and the negation in v's block.
inline Mat<mpq_class> rigidity_matrix(const Framework& fw) {
  fw.validate();
  if (fw.dim != 3) throw Error("bad-dimension", "rigidity matrix needs dim 3");
  const Graph& g = fw.graph;
  Mat<mpq_class> m(g.m(), 3 * g.n());
  int r = 0;
  for (auto [i, j] : g.edge_indices()) {
    const auto& pu = fw.coords.at(g.label(i));
    const auto& pv = fw.coords.at(g.label(j));
    for (int ax = 0; ax < 3; ++ax) {
      mpq_class d = pu[ax] - pv[ax];
      m(r, 3 * i + ax) = d;
      m(r, 3 * j + ax) = -d;
    }
    ++r;
  }
  return m;
}

// C^1_2-cofactor matrix: one row per edge, 3 columns per vertex. The row for
// (u,v) carries the degree-2 monomials of p_u - p_v at u and the negation at
// v. The cross-term coefficient is 1; any per-block column scaling leaves
// ranks unchanged, and the K_n / K_5 self-checks in the test suite pin the
// convention.
inline Mat<mpq_class> cofactor_matrix(const Framework& fw) {
  fw.validate();
  if (fw.dim != 2) throw Error("bad-dimension", "cofactor matrix needs dim 2");
  const Graph& g = fw.graph;
  Mat<mpq_class> m(g.m(), 3 * g.n());
  int r = 0;
  for (auto [i, j] : g.edge_indices()) {
    const auto& pu = fw.coords.at(g.label(i));
    const auto& pv = fw.coords.at(g.label(j));
    mpq_class dx = pu[0] - pv[0], dy = pu[1] - pv[1];
    if (dx == 0 && dy == 0) throw Error("coincident-endpoints", g.label(i) + "," + g.label(j));
    mpq_class mono[3] = {dx * dx, dx * dy, dy * dy};
    for (int ax = 0; ax < 3; ++ax) {
      m(r, 3 * i + ax) = mono[ax];
      m(r, 3 * j + ax) = -mono[ax];
    }
    ++r;
  }
  return m;
}

// Prime-field images of the same matrices at sampled points: coords[i] holds
// dim residues for vertex index i.
inline Mat<Fp> rigidity_matrix_fp(const Graph& g, const std::vector<std::vector<Fp>>& pts) {
  Mat<Fp> m(g.m(), 3 * g.n());
  int r = 0;
  for (auto [i, j] : g.edge_indices()) {
    for (int ax = 0; ax < 3; ++ax) {
      Fp d = pts[i][ax] - pts[j][ax];
      m(r, 3 * i + ax) = d;
      m(r, 3 * j + ax) = -d;
    }
    ++r;
  }
  return m;
}

inline Mat<Fp> cofactor_matrix_fp(const Graph& g, const std::vector<std::vector<Fp>>& pts) {
  Mat<Fp> m(g.m(), 3 * g.n());
  int r = 0;
  for (auto [i, j] : g.edge_indices()) {
    Fp dx = pts[i][0] - pts[j][0], dy = pts[i][1] - pts[j][1];
    Fp mono[3] = {dx * dx, dx * dy, dy * dy};
    for (int ax = 0; ax < 3; ++ax) {
      m(r, 3 * i + ax) = mono[ax];
      m(r, 3 * j + ax) = -mono[ax];
    }
    ++r;
  }
  return m;
}

// Single matrix row for one extra pair at the same sampled points.
inline std::vector<Fp> pair_row_fp(const Graph& g, const std::vector<std::vector<Fp>>& pts, int i, int j,
                                   bool cofactor) {
  std::vector<Fp> row(3 * g.n());
  if (cofactor) {
    Fp dx = pts[i][0] - pts[j][0], dy = pts[i][1] - pts[j][1];
    Fp mono[3] = {dx * dx, dx * dy, dy * dy};
    for (int ax = 0; ax < 3; ++ax) {
      row[3 * i + ax] = mono[ax];
      row[3 * j + ax] = -mono[ax];
    }
  } else {
    for (int ax = 0; ax < 3; ++ax) {
      Fp d = pts[i][ax] - pts[j][ax];
      row[3 * i + ax] = d;
      row[3 * j + ax] = -d;
    }
  }
  return row;
}

}  // namespace rigidity
