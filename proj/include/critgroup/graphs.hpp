#pragma once

#include "critgroup/bigint.hpp"
#include "critgroup/exactlin.hpp"
#include "critgroup/matrix.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace critgroup {

/// Loopless multigraph stored as a symmetric multiplicity matrix, with an
/// optional sink vertex.
class Multigraph {
 public:
  explicit Multigraph(std::size_t vertex_count)
      : n_(vertex_count), mult_(vertex_count * vertex_count, 0) {}

  Multigraph(std::size_t vertex_count, std::vector<std::int64_t> multiplicity,
             std::optional<std::size_t> sink = std::nullopt)
      : n_(vertex_count), mult_(std::move(multiplicity)), sink_(sink) {
    if (mult_.size() != n_ * n_)
      throw std::invalid_argument("multiplicity matrix must have " + std::to_string(n_ * n_) + " entries, got " +
                                  std::to_string(mult_.size()));
    for (std::size_t u = 0; u < n_; ++u) {
      if (at(u, u) != 0) throw std::invalid_argument("loop at vertex " + std::to_string(u));
      for (std::size_t v = 0; v < n_; ++v) {
        if (at(u, v) < 0)
          throw std::invalid_argument("negative multiplicity at (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (at(u, v) != at(v, u))
          throw std::invalid_argument("asymmetric multiplicity at (" + std::to_string(u) + "," + std::to_string(v) +
                                      ")");
      }
    }
    if (sink_) check_vertex(*sink_);
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::int64_t multiplicity(std::size_t u, std::size_t v) const { return at(u, v); }
  std::span<const std::int64_t> multiplicities() const noexcept { return mult_; }
  std::optional<std::size_t> sink() const noexcept { return sink_; }

  void set_sink(std::size_t v) {
    check_vertex(v);
    sink_ = v;
  }

  void add_edges(std::size_t u, std::size_t v, std::int64_t count = 1) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (at(u, v) + count < 0) throw std::invalid_argument("multiplicity would become negative");
    mult_[u * n_ + v] += count;
    mult_[v * n_ + u] += count;
  }

  std::int64_t degree(std::size_t u) const {
    check_vertex(u);
    std::int64_t d = 0;
    for (std::size_t v = 0; v < n_; ++v) d += at(u, v);
    return d;
  }

  /// Total number of edges, counting parallel edges separately.
  std::int64_t edge_count() const {
    std::int64_t e = 0;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v) e += at(u, v);
    return e;
  }

  IntMatrix adjacency() const {
    IntMatrix a(n_, n_);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = 0; v < n_; ++v) a(u, v) = static_cast<long>(at(u, v));
    return a;
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::int64_t at(std::size_t u, std::size_t v) const { return mult_[u * n_ + v]; }

  void check_vertex(std::size_t v) const {
    if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range for " + std::to_string(n_));
  }

  std::size_t n_;
  std::vector<std::int64_t> mult_;
  std::optional<std::size_t> sink_;
};

namespace graphs {

inline void require_size(std::size_t n, std::size_t min, const char* what) {
  if (n < min)
    throw std::invalid_argument(std::string(what) + " needs at least " + std::to_string(min) + " vertices, got " +
                                std::to_string(n));
}

inline Multigraph path(std::size_t n) {
  require_size(n, 2, "path");
  Multigraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edges(i, i + 1);
  return g;
}

inline Multigraph cycle(std::size_t n) {
  require_size(n, 3, "cycle");
  Multigraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edges(i, (i + 1) % n);
  return g;
}

inline Multigraph complete(std::size_t n) {
  require_size(n, 2, "complete graph");
  Multigraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edges(i, j);
  return g;
}

/// Whether a side of the two-part family carries no internal edges (m) or a
/// clique (M).
enum class Side { Independent, Clique };

/// Edges between u_i and v_j: all pairs (K), pairs with i != j (L), or the
/// perfect matching i == j (M).
enum class Coupling { Complete, MinusMatching, Matching };

/// Two-part family C_{u,v}: vertices u_1..u_m then v_1..v_m.
inline Multigraph cuv(Side u, Side v, Coupling coupling, std::size_t m) {
  require_size(m, 2, "two-part family side");
  Multigraph g(2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (u == Side::Clique) g.add_edges(i, j);
      if (v == Side::Clique) g.add_edges(m + i, m + j);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const bool edge = coupling == Coupling::Complete || (coupling == Coupling::MinusMatching && i != j) ||
                        (coupling == Coupling::Matching && i == j);
      if (edge) g.add_edges(i, m + j);
    }
  return g;
}

/// Replaces every edge by l parallel edges.
inline Multigraph duplicate(const Multigraph& g, std::int64_t l) {
  if (l < 1) throw std::invalid_argument("duplication factor must be >= 1, got " + std::to_string(l));
  std::vector<std::int64_t> m(g.multiplicities().begin(), g.multiplicities().end());
  for (auto& v : m) v *= l;
  return Multigraph(g.vertex_count(), std::move(m), g.sink());
}

/// Appends a sink joined to every existing vertex by k parallel edges.
/// k == 0 leaves the sink isolated.
inline Multigraph cone(const Multigraph& g, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("cone multiplicity must be >= 0, got " + std::to_string(k));
  const std::size_t n = g.vertex_count();
  Multigraph c(n + 1);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v)
      if (g.multiplicity(u, v)) c.add_edges(u, v, g.multiplicity(u, v));
    if (k) c.add_edges(u, n, k);
  }
  c.set_sink(n);
  return c;
}

inline Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  const std::size_t na = a.vertex_count();
  Multigraph g(na + b.vertex_count());
  for (std::size_t u = 0; u < na; ++u)
    for (std::size_t v = u + 1; v < na; ++v)
      if (a.multiplicity(u, v)) g.add_edges(u, v, a.multiplicity(u, v));
  for (std::size_t u = 0; u < b.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < b.vertex_count(); ++v)
      if (b.multiplicity(u, v)) g.add_edges(na + u, na + v, b.multiplicity(u, v));
  return g;
}

/// Cartesian product with vertex (i, j) numbered i * |b| + j.
inline Multigraph cartesian_product(const Multigraph& a, const Multigraph& b) {
  const std::size_t na = a.vertex_count(), nb = b.vertex_count();
  Multigraph g(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t jj = j + 1; jj < nb; ++jj)
        if (b.multiplicity(j, jj)) g.add_edges(i * nb + j, i * nb + jj, b.multiplicity(j, jj));
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t ii = i + 1; ii < na; ++ii)
        if (a.multiplicity(i, ii)) g.add_edges(i * nb + j, ii * nb + j, a.multiplicity(i, ii));
  return g;
}

/// Relabels vertex v as perm[v].
inline Multigraph permuted(const Multigraph& g, std::span<const std::size_t> perm) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) throw std::invalid_argument("permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  Multigraph h(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (g.multiplicity(u, v)) h.add_edges(perm[u], perm[v], g.multiplicity(u, v));
  if (g.sink()) h.set_sink(perm[*g.sink()]);
  return h;
}

/// L = D - A.
inline IntMatrix laplacian(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("laplacian of the empty graph");
  IntMatrix l(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) l(u, v) = -static_cast<long>(g.multiplicity(u, v));
    l(u, u) = static_cast<long>(g.degree(u));
  }
  return l;
}

/// Laplacian with the sink row and column deleted.
inline IntMatrix reduced_laplacian(const Multigraph& g) {
  if (!g.sink()) throw std::invalid_argument("reduced Laplacian requires a sink");
  const std::size_t n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("reduced Laplacian of a single vertex is empty");
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < n; ++v)
    if (v != *g.sink()) keep.push_back(v);
  return laplacian(g).submatrix(keep, keep);
}

/// Matrix-tree count det L(G, s); 0 for a disconnected graph.
inline BigInt spanning_tree_count(const Multigraph& g) { return det(reduced_laplacian(g)); }

inline AbelianGroup critical_group(const Multigraph& g) { return critgroup::critical_group(reduced_laplacian(g)); }

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

enum class Family { Path, Cycle, Complete, Kmm, Lmm, Mmm, KMM, LMM, MMM, KmM, LmM, MmM };

inline constexpr std::array<Family, 12> kAllFamilies = {Family::Path, Family::Cycle, Family::Complete, Family::Kmm,
                                                        Family::Lmm,  Family::Mmm,   Family::KMM,      Family::LMM,
                                                        Family::MMM,  Family::KmM,   Family::LmM,      Family::MmM};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Kmm: return "Kmm";
    case Family::Lmm: return "Lmm";
    case Family::Mmm: return "Mmm";
    case Family::KMM: return "KMM";
    case Family::LMM: return "LMM";
    case Family::MMM: return "MMM";
    case Family::KmM: return "KmM";
    case Family::LmM: return "LmM";
    case Family::MmM: return "MmM";
  }
  return "?";
}

/// Accepts the plain names above and the "cone-" prefixed spellings.
inline Family parse_family(std::string_view name) {
  if (name.starts_with("cone-")) name.remove_prefix(5);
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

/// Minimum size for which the simple base graph exists.
inline std::size_t family_min_size(Family f) {
  switch (f) {
    case Family::Path:
    case Family::Complete: return 2;
    case Family::Cycle: return 3;
    default: return 2;
  }
}

inline Multigraph family_base(Family f, std::size_t size) {
  using enum Side;
  switch (f) {
    case Family::Path: return path(size);
    case Family::Cycle: return cycle(size);
    case Family::Complete: return complete(size);
    case Family::Kmm: return cuv(Independent, Independent, Coupling::Complete, size);
    case Family::Lmm: return cuv(Independent, Independent, Coupling::MinusMatching, size);
    case Family::Mmm: return cuv(Independent, Independent, Coupling::Matching, size);
    case Family::KMM: return cuv(Clique, Clique, Coupling::Complete, size);
    case Family::LMM: return cuv(Clique, Clique, Coupling::MinusMatching, size);
    case Family::MMM: return cuv(Clique, Clique, Coupling::Matching, size);
    case Family::KmM: return cuv(Independent, Clique, Coupling::Complete, size);
    case Family::LmM: return cuv(Independent, Clique, Coupling::MinusMatching, size);
    case Family::MmM: return cuv(Independent, Clique, Coupling::Matching, size);
  }
  throw std::logic_error("unhandled family");
}

/// c_k(G(l)) for the family's base graph G of the given size.
inline Multigraph family_instance(Family f, std::size_t size, std::int64_t l, std::int64_t k) {
  return cone(duplicate(family_base(f, size), l), k);
}

}  // namespace graphs
}  // namespace critgroup
