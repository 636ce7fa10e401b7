#pragma once

#include "critgroup/bigint.hpp"
#include "critgroup/graphs.hpp"
#include "critgroup/matrix.hpp"
#include "critgroup/polyseq.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace critgroup::matforms {

enum class Kind { T, P, C, K };

inline std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::T: return "T";
    case Kind::P: return "P";
    case Kind::C: return "C";
    case Kind::K: return "K";
  }
  return "?";
}

inline Kind parse_kind(std::string_view s) {
  if (s == "T") return Kind::T;
  if (s == "P") return Kind::P;
  if (s == "C") return Kind::C;
  if (s == "K") return Kind::K;
  throw std::invalid_argument("unknown matrix kind '" + std::string(s) + "' (expected T, P, C or K)");
}

struct ParamMatrixSpec {
  Kind kind;
  std::size_t n;
  BigInt a;
  BigInt b;
};

inline void check_order(const ParamMatrixSpec& s) {
  const std::size_t min = s.kind == Kind::C ? 3 : 2;
  if (s.n < min)
    throw std::invalid_argument(std::string(kind_name(s.kind)) + "_n needs n >= " + std::to_string(min) + ", got " +
                                std::to_string(s.n));
}

/// T_n = aI + bA(P_n); P_n as T_n with a+b in both corners; C_n = aI + bA(C_n);
/// K_n = (a+b)I + bA(K_n).
inline IntMatrix build(const ParamMatrixSpec& s) {
  check_order(s);
  const std::size_t n = s.n;
  IntMatrix m(n, n);
  switch (s.kind) {
    case Kind::T:
    case Kind::P:
    case Kind::C:
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = s.a;
        if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = s.b;
      }
      if (s.kind == Kind::P) {
        m(0, 0) += s.b;
        m(n - 1, n - 1) += s.b;
      }
      if (s.kind == Kind::C) {
        m(0, n - 1) += s.b;
        m(n - 1, 0) += s.b;
      }
      break;
    case Kind::K:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? BigInt(s.a + s.b) : s.b;
      break;
  }
  return m;
}

/// A claimed equivalent form: a diagonal run followed, for the cycle kind, by
/// a trailing 2x2 block that is left unreduced.
struct ClaimedForm {
  std::vector<BigInt> diagonal;
  std::optional<IntMatrix> block;

  IntMatrix materialize() const {
    BlockDiagonal bd;
    for (const auto& d : diagonal) bd.scalars(d, 1);
    if (block) bd.block(*block);
    return bd.build();
  }
};

namespace detail {

inline IntMatrix scaled_2x2(const BigInt& s, const BigInt& p, const BigInt& q, const BigInt& r, const BigInt& t) {
  return IntMatrix(2, 2, {s * p, s * q, s * r, s * t});
}

// Claimed form with the gcd r = gcd(a, b) split off: a = r a', b = r b'.
// The scalar-one case is the coprime theorem.
inline ClaimedForm claimed_form(const ParamMatrixSpec& s, const BigInt& r, const BigInt& a1, const BigInt& b1) {
  using polyseq::f;
  const auto n = static_cast<std::int64_t>(s.n);
  const BigInt& a = s.a;
  const BigInt& b = s.b;
  ClaimedForm out;
  switch (s.kind) {
    case Kind::T:
      out.diagonal.assign(s.n - 1, r);
      out.diagonal.push_back(r * f(n, a1, b1));
      break;
    case Kind::P:
      out.diagonal.assign(s.n - 1, r);
      out.diagonal.push_back((a + 2 * b) * f(n - 1, a1, b1));
      break;
    case Kind::K:
      out.diagonal.push_back(r);
      for (std::size_t i = 0; i + 2 < s.n; ++i) out.diagonal.push_back(a);
      out.diagonal.push_back(a1 * (a + BigInt(static_cast<long>(n)) * b));
      break;
    case Kind::C: {
      if (s.n < 4) throw std::invalid_argument("cycle form is stated for n >= 4, got " + std::to_string(s.n));
      out.diagonal.assign(s.n - 2, r);
      const std::int64_t q = (n - 2) / 2;
      if ((n - 2) % 2 == 0) {
        out.block = scaled_2x2(f(q, a1, b1), a, 2 * b, 2 * b, a);
      } else {
        const BigInt scale = f(q + 1, a1, b1) - b1 * f(q, a1, b1);
        out.block = scaled_2x2(scale, r, 0, 0, a + 2 * b);
      }
      break;
    }
  }
  return out;
}

}  // namespace detail

/// Diagonal form for coprime (a, b): diag(1,..,1,f_n), diag(1,..,1,(a+2b)f_{n-1}),
/// diag(1,a,..,a,a(a+nb)) and I_{n-2} (+) C for the cycle.
inline ClaimedForm theorem_form(const ParamMatrixSpec& s) {
  check_order(s);
  if (gcd(s.a, s.b) != 1)
    throw std::invalid_argument("coprime form needs gcd(a, b) = 1, got gcd(" + to_string(s.a) + ", " +
                                to_string(s.b) + ")");
  return detail::claimed_form(s, 1, s.a, s.b);
}

/// Scaled form with r = gcd(a, b), a = r a', b = r b'. For a = b = 0 the
/// quotients are taken as 0; every branch then yields the zero matrix.
inline ClaimedForm claimed_diagonal(const ParamMatrixSpec& s) {
  check_order(s);
  const BigInt r = gcd(s.a, s.b);
  if (sgn(r) == 0) return detail::claimed_form(s, 0, 0, 0);
  return detail::claimed_form(s, r, divexact(s.a, r), divexact(s.b, r));
}

// ---------------------------------------------------------------------------
// The commutative ring K_n(Z)
// ---------------------------------------------------------------------------

/// K_n(a, b) = (a+b)I + bA(K_n) = aI + b J.
struct KnElement {
  std::size_t n;
  BigInt a;
  BigInt b;

  IntMatrix materialize() const {
    if (n < 1) throw std::invalid_argument("K_n needs n >= 1");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? BigInt(a + b) : b;
    return m;
  }

  friend bool operator==(const KnElement&, const KnElement&) = default;
};

namespace detail {
inline void same_ring(const KnElement& x, const KnElement& y) {
  if (x.n != y.n)
    throw std::invalid_argument("K_n ring size mismatch: " + std::to_string(x.n) + " vs " + std::to_string(y.n));
}
}  // namespace detail

inline KnElement kn_add(const KnElement& x, const KnElement& y) {
  detail::same_ring(x, y);
  return {x.n, x.a + y.a, x.b + y.b};
}

inline KnElement kn_scale(const BigInt& alpha, const KnElement& x) { return {x.n, alpha * x.a, alpha * x.b}; }

/// K_n(a,b) K_n(c,d) = K_n(ac, ad + bc + n b d)
inline KnElement kn_mul(const KnElement& x, const KnElement& y) {
  detail::same_ring(x, y);
  const BigInt n = static_cast<long>(x.n);
  return {x.n, x.a * y.a, x.a * y.b + x.b * y.a + n * x.b * y.b};
}

/// K_n(a,b)^m = K_n(a^m, p^n_m(a, b))
inline KnElement kn_pow(const KnElement& x, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("negative power in K_n");
  return {x.n, pow(x.a, static_cast<unsigned long>(m)), polyseq::p(m, static_cast<std::int64_t>(x.n), x.a, x.b)};
}

inline KnElement kn_identity(std::size_t n) { return {n, 1, 0}; }

// ---------------------------------------------------------------------------
// Block operator Phi_m
// ---------------------------------------------------------------------------

namespace detail {
inline void check_phi_args(std::size_t m, const IntMatrix& a, const IntMatrix& b) {
  if (m < 2) throw std::invalid_argument("Phi_m needs m >= 2, got " + std::to_string(m));
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw std::invalid_argument("Phi_m needs square A and B of equal order, got " + a.shape() + " and " + b.shape());
}
}  // namespace detail

/// nm x nm matrix whose (i, j) block is K_m(A_ij, B_ij).
inline IntMatrix phi(std::size_t m, const IntMatrix& a, const IntMatrix& b) {
  detail::check_phi_args(m, a, b);
  const std::size_t n = a.rows();
  IntMatrix out(n * m, n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) out(i * m + r, j * m + c) = r == c ? BigInt(a(i, j) + b(i, j)) : b(i, j);
  return out;
}

/// (+)^{m-2} A  (+)  [[A, B], [0, A + mB]]
inline IntMatrix phi_reduced(std::size_t m, const IntMatrix& a, const IntMatrix& b) {
  detail::check_phi_args(m, a, b);
  const std::size_t n = a.rows();
  IntMatrix tail(2 * n, 2 * n);
  const BigInt mm = static_cast<long>(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      tail(i, j) = a(i, j);
      tail(i, n + j) = b(i, j);
      tail(n + i, n + j) = a(i, j) + mm * b(i, j);
    }
  BlockDiagonal bd;
  for (std::size_t k = 0; k + 2 < m; ++k) bd.block(a);
  bd.block(std::move(tail));
  return bd.build();
}

// ---------------------------------------------------------------------------
// Two-part families
// ---------------------------------------------------------------------------

enum class BipartiteId { K_mm, L_mm, L_MM, M_MM, K_mM, M_mM, L_mM };

inline constexpr std::array<BipartiteId, 7> kAllBipartite = {BipartiteId::K_mm, BipartiteId::L_mm, BipartiteId::L_MM,
                                                             BipartiteId::M_MM, BipartiteId::K_mM, BipartiteId::M_mM,
                                                             BipartiteId::L_mM};

inline std::string_view bipartite_name(BipartiteId id) {
  switch (id) {
    case BipartiteId::K_mm: return "K_mm";
    case BipartiteId::L_mm: return "L_mm";
    case BipartiteId::L_MM: return "L_MM";
    case BipartiteId::M_MM: return "M_MM";
    case BipartiteId::K_mM: return "K_mM";
    case BipartiteId::M_mM: return "M_mM";
    case BipartiteId::L_mM: return "L_mM";
  }
  return "?";
}

inline graphs::Family bipartite_family(BipartiteId id) {
  switch (id) {
    case BipartiteId::K_mm: return graphs::Family::Kmm;
    case BipartiteId::L_mm: return graphs::Family::Lmm;
    case BipartiteId::L_MM: return graphs::Family::LMM;
    case BipartiteId::M_MM: return graphs::Family::MMM;
    case BipartiteId::K_mM: return graphs::Family::KmM;
    case BipartiteId::M_mM: return graphs::Family::MmM;
    case BipartiteId::L_mM: return graphs::Family::LmM;
  }
  throw std::logic_error("unhandled id");
}

inline std::size_t bipartite_min_m(BipartiteId) { return 2; }

namespace detail {
inline void check_bipartite_m(BipartiteId id, std::size_t m) {
  if (m < bipartite_min_m(id))
    throw std::invalid_argument(std::string(bipartite_name(id)) + " needs m >= " +
                                std::to_string(bipartite_min_m(id)) + ", got " + std::to_string(m));
}

inline IntMatrix two_by_two(BigInt p, BigInt q, BigInt r, BigInt s) {
  return IntMatrix(2, 2, {std::move(p), std::move(q), std::move(r), std::move(s)});
}
}  // namespace detail

/// a D + b A(G): D = I for the regular families, I_m (+) 2I_m for K_{m,M} and
/// L_{m,M}, I_m (+) (m+1)I_m for M_{m,M}.
inline IntMatrix bipartite_matrix(BipartiteId id, std::size_t m, const BigInt& a, const BigInt& b) {
  detail::check_bipartite_m(id, m);
  IntMatrix x = graphs::family_base(bipartite_family(id), m).adjacency() * b;
  BigInt v_weight = 1;
  if (id == BipartiteId::K_mM || id == BipartiteId::L_mM) v_weight = 2;
  if (id == BipartiteId::M_mM) v_weight = static_cast<long>(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    x(i, i) += a;
    x(m + i, m + i) += v_weight * a;
  }
  return x;
}

/// The claimed equivalent form, built as displayed.
inline IntMatrix bipartite_claimed(BipartiteId id, std::size_t m, const BigInt& a, const BigInt& b) {
  detail::check_bipartite_m(id, m);
  const BigInt mm = static_cast<long>(m);
  const BigInt a2 = a * a, b2 = b * b, ab = a * b;
  BlockDiagonal bd;
  switch (id) {
    case BipartiteId::K_mm:
      bd.scalars(1, 2).scalars(a, 2 * (m - 2)).block(detail::scaled_2x2(a, a, mm * b, mm * b, a));
      break;
    case BipartiteId::L_mm:
      bd.scalars(1, m)
          .scalars(a2 - b2, m - 2)
          .block(detail::two_by_two(a2, (mm - 2) * ab, (mm - 2) * ab, a2 - (mm - 1) * b2));
      break;
    case BipartiteId::L_MM:
      bd.scalars(1, m - 1)
          .scalars(a * (a - 2 * b), m - 2)
          .block(IntMatrix(3, 3,
                           {a * (a - 2 * b), ab, 0,  //
                            0, a + 2 * (mm - 1) * b, 0,  //
                            0, (mm - 1) * b, a}));
      break;
    case BipartiteId::M_MM: {
      const BigInt t = a + (mm - 1) * b;
      bd.scalars(1, m + 1)
          .scalars(a * (a - 2 * b), m - 2)
          .block(detail::two_by_two(a * (a - 2 * b), -b2 * (2 * a + (mm - 2) * b), 0, t * t - b2));
      break;
    }
    case BipartiteId::K_mM:
      bd.scalars(1, 2)
          .scalars(a, m - 2)
          .scalars(2 * a, m - 2)
          .block(detail::scaled_2x2(a, 2 * a, -(a - mm * b) * b, 2 * mm, 2 * a));
      break;
    case BipartiteId::M_mM: {
      const BigInt d = (mm + 1) * a2 - b2;
      bd.scalars(1, m).scalars(d, m - 2).block(detail::two_by_two(d, b, 0, (a + b) * (b - (mm + 1) * a)));
      break;
    }
    case BipartiteId::L_mM: {
      const BigInt d = 2 * a2 - b2;
      bd.scalars(1, m - 1)
          .scalars(d, m - 2)
          .block(IntMatrix(3, 3,
                           {d, 0, ab + mm * b2,  //
                            0, a, (mm - 1) * b,  //
                            0, (mm - 1) * b, 2 * a + mm * b}));
      break;
    }
  }
  return bd.build();
}

/// The (A, B) pair whose Phi_m the reduction argument starts from.
inline std::pair<IntMatrix, IntMatrix> bipartite_phi_blocks(BipartiteId id, const BigInt& a, const BigInt& b,
                                                            std::size_t m) {
  using detail::two_by_two;
  const BigInt mm = static_cast<long>(m);
  switch (id) {
    case BipartiteId::K_mm: return {two_by_two(a, 0, 0, a), two_by_two(0, b, b, 0)};
    case BipartiteId::L_mm: return {two_by_two(a, -b, -b, a), two_by_two(0, b, b, 0)};
    case BipartiteId::L_MM: return {two_by_two(a - b, -b, -b, a - b), two_by_two(b, b, b, b)};
    case BipartiteId::M_MM: return {two_by_two(a - b, b, b, a - b), two_by_two(b, 0, 0, b)};
    case BipartiteId::K_mM: return {two_by_two(a, 0, 0, 2 * a), two_by_two(0, b, b, b)};
    case BipartiteId::M_mM: return {two_by_two(a, b, b, (mm + 1) * a), two_by_two(0, 0, 0, b)};
    case BipartiteId::L_mM: return {two_by_two(a, -b, -b, 2 * a), two_by_two(0, b, b, b)};
  }
  throw std::logic_error("unhandled id");
}

inline IntMatrix bipartite_phi_form(BipartiteId id, std::size_t m, const BigInt& a, const BigInt& b) {
  detail::check_bipartite_m(id, m);
  auto [pa, pb] = bipartite_phi_blocks(id, a, b, m);
  return phi(m, pa, pb);
}

struct BipartitePair {
  IntMatrix original;
  IntMatrix claimed;
};

inline BipartitePair claimed_form_bipartite(BipartiteId id, std::size_t m, const BigInt& a, const BigInt& b) {
  return {bipartite_matrix(id, m, a, b), bipartite_claimed(id, m, a, b)};
}

}  // namespace critgroup::matforms
