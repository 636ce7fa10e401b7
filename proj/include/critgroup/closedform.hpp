#pragma once

#include "critgroup/bigint.hpp"
#include "critgroup/exactlin.hpp"
#include "critgroup/graphs.hpp"
#include "critgroup/matforms.hpp"
#include "critgroup/polyseq.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace critgroup::closedform {

/// A stated quotient was not exact at concrete parameters.
class FormulaViolation : public std::runtime_error {
 public:
  FormulaViolation(std::string formula, std::string params, std::string detail)
      : std::runtime_error(formula + " at " + params + ": " + detail),
        formula_(std::move(formula)),
        params_(std::move(params)),
        detail_(std::move(detail)) {}

  const std::string& formula() const noexcept { return formula_; }
  const std::string& params() const noexcept { return params_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string formula_;
  std::string params_;
  std::string detail_;
};

/// Cyclic factors as the formula lists them, and their canonical chain.
struct ClosedForm {
  std::vector<BigInt> raw;
  AbelianGroup group;
};

namespace detail {

class Evaluation {
 public:
  Evaluation(std::string formula, std::string params) : formula_(std::move(formula)), params_(std::move(params)) {}

  BigInt quotient(const BigInt& num, const BigInt& den, std::string_view what) const {
    if (sgn(den) == 0) throw FormulaViolation(formula_, params_, std::string(what) + ": division by zero");
    if (!divides(den, num))
      throw FormulaViolation(formula_, params_,
                             std::string(what) + ": " + to_string(num) + " is not divisible by " + to_string(den));
    return divexact(num, den);
  }

  void require(bool ok, const std::string& message) const {
    if (!ok) throw std::invalid_argument(formula_ + ": " + message + " (" + params_ + ")");
  }

  void push(const BigInt& modulus, std::size_t copies = 1) { raw_.insert(raw_.end(), copies, modulus); }

  ClosedForm finish() && {
    ClosedForm out{std::move(raw_), {}};
    out.group = canonicalize(out.raw);
    return out;
  }

 private:
  std::string formula_;
  std::string params_;
  std::vector<BigInt> raw_;
};

inline std::string cone_params(std::int64_t n, std::int64_t l, std::int64_t k) {
  return "n=" + std::to_string(n) + ",l=" + std::to_string(l) + ",k=" + std::to_string(k);
}

inline std::string family_params(std::int64_t m, std::int64_t l, std::int64_t n) {
  return "m=" + std::to_string(m) + ",l=" + std::to_string(l) + ",n=" + std::to_string(n);
}

inline BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Cones over thick paths, cycles and complete graphs. Size n, duplication l,
// cone multiplicity k.
// ---------------------------------------------------------------------------

/// Z_r^{n-1} + Z_{k f_{n-1}(k+2l, -l) / r^{n-1}}, r = gcd(l, k).
inline ClosedForm cone_path_group(std::int64_t n, std::int64_t l, std::int64_t k) {
  detail::Evaluation ev("cone-path", detail::cone_params(n, l, k));
  ev.require(n >= 2 && l >= 1 && k >= 0, "needs n >= 2, l >= 1, k >= 0");
  const BigInt L = detail::big(l), K = detail::big(k);
  const BigInt r = gcd(L, K);
  const BigInt a = K + 2 * L, b = -L;
  ev.push(r, static_cast<std::size_t>(n - 1));
  ev.push(ev.quotient(K * polyseq::f(n - 1, a, b), pow(r, static_cast<unsigned long>(n - 1)), "k f_{n-1} / r^{n-1}"));
  return std::move(ev).finish();
}

/// Odd n-2 = 2q+1: Z_r^{n-2} + Z_{r s_q} + Z_{k s_q}.
/// Even n-2 = 2q: Z_r^{n-2} + Z_{r t_q} + Z_{k(k+4l) t_q / r} when k/r is odd,
/// Z_r^{n-2} + Z_{2r t_q} + Z_{k(k+4l) t_q / 2r} when k/r is even.
inline ClosedForm cone_cycle_group(std::int64_t n, std::int64_t l, std::int64_t k) {
  detail::Evaluation ev("cone-cycle", detail::cone_params(n, l, k));
  ev.require(n >= 4 && l >= 1 && k >= 0, "needs n >= 4, l >= 1, k >= 0");
  const BigInt L = detail::big(l), K = detail::big(k);
  const BigInt r = gcd(L, K);
  const BigInt a = K + 2 * L, b = -L;
  ev.push(r, static_cast<std::size_t>(n - 2));
  if ((n - 2) % 2 == 1) {
    const std::int64_t q = (n - 3) / 2;
    const BigInt s = ev.quotient(polyseq::f(q + 1, a, b) + L * polyseq::f(q, a, b),
                                 pow(r, static_cast<unsigned long>(q + 1)), "s_q");
    ev.push(r * s);
    ev.push(K * s);
  } else {
    const std::int64_t q = (n - 2) / 2;
    const BigInt t = ev.quotient(polyseq::f(q, a, b), pow(r, static_cast<unsigned long>(q)), "t_q");
    const BigInt k_over_r = ev.quotient(K, r, "k/r");
    const BigInt top = K * (K + 4 * L) * t;
    if (is_odd(k_over_r)) {
      ev.push(r * t);
      ev.push(ev.quotient(top, r, "k(k+4l)t_q / r"));
    } else {
      ev.push(2 * r * t);
      ev.push(ev.quotient(top, 2 * r, "k(k+4l)t_q / 2r"));
    }
  }
  return std::move(ev).finish();
}

/// Z_r + Z_{k+nl}^{n-2} + Z_{k(k+nl)/r}.
inline ClosedForm cone_complete_group(std::int64_t n, std::int64_t l, std::int64_t k) {
  detail::Evaluation ev("cone-complete", detail::cone_params(n, l, k));
  ev.require(n >= 2 && l >= 1 && k >= 0, "needs n >= 2, l >= 1, k >= 0");
  const BigInt L = detail::big(l), K = detail::big(k), N = detail::big(n);
  const BigInt r = gcd(L, K);
  const BigInt s = K + N * L;
  ev.push(r);
  ev.push(s, static_cast<std::size_t>(n - 2));
  ev.push(ev.quotient(K * s, r, "k(k+nl)/r"));
  return std::move(ev).finish();
}

// ---------------------------------------------------------------------------
// Cones over the two-part families. Side size m, duplication l, cone
// multiplicity n (n = 0 is the bare graph).
// ---------------------------------------------------------------------------

/// K_{m,m}: Z_r^2 + Z_{n+ml}^{2(m-2)} + Z_{(n+ml)s/r} + Z_{n(n+ml)(n+2ml)/rs},
/// r = gcd(l, n), s = gcd(ml, n).
inline ClosedForm kmm_group(std::int64_t m, std::int64_t l, std::int64_t n) {
  detail::Evaluation ev("G1", detail::family_params(m, l, n));
  ev.require(m >= 2 && l >= 1 && n >= 0, "needs m >= 2, l >= 1, n >= 0");
  const BigInt M = detail::big(m), L = detail::big(l), N = detail::big(n);
  const BigInt r = gcd(L, N), s = gcd(M * L, N);
  const BigInt d = N + M * L;
  ev.push(r, 2);
  ev.push(d, static_cast<std::size_t>(2 * (m - 2)));
  ev.push(ev.quotient(d * s, r, "(n+ml)s/r"));
  ev.push(ev.quotient(N * d * (N + 2 * M * L), r * s, "n(n+ml)(n+2ml)/rs"));
  return std::move(ev).finish();
}

/// L_{m,m}: Z_r^m + Z_{(s^2-l^2)/r}^{m-2} + Z_{rt} + Z_{u/r^3 t}, r = gcd(l, n),
/// s = n+(m-1)l, t = gcd(m-1, n)/gcd(l, m-1, n), u = s^2(n^2+2n(m-1)l+(m-2)l^2).
inline ClosedForm lmm_group(std::int64_t m, std::int64_t l, std::int64_t n) {
  detail::Evaluation ev("G2", detail::family_params(m, l, n));
  ev.require(m >= 3 && l >= 1 && n >= 0, "needs m >= 3, l >= 1, n >= 0");
  const BigInt M = detail::big(m), L = detail::big(l), N = detail::big(n);
  const BigInt r = gcd(L, N);
  const BigInt s = N + (M - 1) * L;
  const BigInt t = ev.quotient(gcd(M - 1, N), gcd(L, M - 1, N), "t");
  const BigInt u = s * s * (N * N + 2 * N * (M - 1) * L + (M - 2) * L * L);
  ev.push(r, static_cast<std::size_t>(m));
  ev.push(ev.quotient(s * s - L * L, r, "(s^2-l^2)/r"), static_cast<std::size_t>(m - 2));
  ev.push(r * t);
  ev.push(ev.quotient(u, r * r * r * t, "u/r^3 t"));
  return std::move(ev).finish();
}

/// L_{M,M}: Z_r^{m-1} + Z_{st/r}^{m-2} + Z_u + Z_{sv/u} + Z_{nst/rv}, r = gcd(l, n),
/// s = n+2(m-1)l, t = n+2ml, u = gcd(n, (m-1)l), v = gcd(n, 2(m-1)l^2/r).
inline ClosedForm lMM_group(std::int64_t m, std::int64_t l, std::int64_t n) {
  detail::Evaluation ev("G3", detail::family_params(m, l, n));
  ev.require(m >= 2 && l >= 1 && n >= 0, "needs m >= 2, l >= 1, n >= 0");
  const BigInt M = detail::big(m), L = detail::big(l), N = detail::big(n);
  const BigInt r = gcd(L, N);
  const BigInt s = N + 2 * (M - 1) * L, t = N + 2 * M * L;
  const BigInt u = gcd(N, (M - 1) * L);
  const BigInt v = gcd(N, ev.quotient(2 * (M - 1) * L * L, r, "2(m-1)l^2/r"));
  ev.push(r, static_cast<std::size_t>(m - 1));
  ev.push(ev.quotient(s * t, r, "st/r"), static_cast<std::size_t>(m - 2));
  ev.push(u);
  ev.push(ev.quotient(s * v, u, "sv/u"));
  ev.push(ev.quotient(N * s * t, r * v, "nst/rv"));
  return std::move(ev).finish();
}

/// M_{M,M}: Z_r^{m+1} + Z_{(n+ml)(n+(m+2)l)/r}^{m-2} + Z_u +
/// Z_{n(n+2l)(n+ml)(n+(m+2)l)/ur^2}, r = gcd(l, n), t = n+(m+2)l,
/// v = gcd(m, l/r), u = gcd(n(n+2l), lv(n+t))/r.
inline ClosedForm mMM_group(std::int64_t m, std::int64_t l, std::int64_t n) {
  detail::Evaluation ev("G4", detail::family_params(m, l, n));
  ev.require(m >= 2 && l >= 1 && n >= 0, "needs m >= 2, l >= 1, n >= 0");
  const BigInt M = detail::big(m), L = detail::big(l), N = detail::big(n);
  const BigInt r = gcd(L, N);
  const BigInt s = N + M * L, t = N + (M + 2) * L;
  const BigInt v = gcd(M, ev.quotient(L, r, "l/r"));
  const BigInt u = ev.quotient(gcd(N * (N + 2 * L), L * v * (N + t)), r, "u");
  ev.push(r, static_cast<std::size_t>(m + 1));
  ev.push(ev.quotient(s * t, r, "(n+ml)(n+(m+2)l)/r"), static_cast<std::size_t>(m - 2));
  ev.push(u);
  ev.push(ev.quotient(N * (N + 2 * L) * s * t, u * r * r, "n(n+2l)(n+ml)(n+(m+2)l)/ur^2"));
  return std::move(ev).finish();
}

/// K_{m,M}: Z_{ml+n}^{m-2} + Z_{2ml+n}^{m-2} + Z_r^2 + Z_{s(n+2ml)/r^2} +
/// Z_{n(n+ml)(n+2ml)/s}, r = gcd(l, n), s = gcd(n^2, mlr).
inline ClosedForm kmM_group(std::int64_t m, std::int64_t l, std::int64_t n) {
  detail::Evaluation ev("G5", detail::family_params(m, l, n));
  ev.require(m >= 2 && l >= 1 && n >= 0, "needs m >= 2, l >= 1, n >= 0");
  const BigInt M = detail::big(m), L = detail::big(l), N = detail::big(n);
  const BigInt r = gcd(L, N);
  const BigInt s = gcd(N * N, M * L * r);
  ev.push(M * L + N, static_cast<std::size_t>(m - 2));
  ev.push(2 * M * L + N, static_cast<std::size_t>(m - 2));
  ev.push(r, 2);
  ev.push(ev.quotient(s * (N + 2 * M * L), r * r, "s(n+2ml)/r^2"));
  ev.push(ev.quotient(N * (N + M * L) * (N + 2 * M * L), s, "n(n+ml)(n+2ml)/s"));
  return std::move(ev).finish();
}

/// M_{m,M}: Z_r^{m+1} + Z_{s/r}^{m-2} + Z_{n(n+2l)s/r^3}, r = gcd(l, n),
/// s = n^2+ml^2+nl(m+2).
inline ClosedForm mmM_group(std::int64_t m, std::int64_t l, std::int64_t n) {
  detail::Evaluation ev("G6", detail::family_params(m, l, n));
  ev.require(m >= 2 && l >= 1 && n >= 0, "needs m >= 2, l >= 1, n >= 0");
  const BigInt M = detail::big(m), L = detail::big(l), N = detail::big(n);
  const BigInt r = gcd(L, N);
  const BigInt s = N * N + M * L * L + N * L * (M + 2);
  ev.push(r, static_cast<std::size_t>(m + 1));
  ev.push(ev.quotient(s, r, "s/r"), static_cast<std::size_t>(m - 2));
  ev.push(ev.quotient(N * (N + 2 * L) * s, r * r * r, "n(n+2l)s/r^3"));
  return std::move(ev).finish();
}

/// L_{m,M}: Z_r^m + Z_{s/r}^{m-2} + Z_t + Z_{n(n+2(m-1)l)s/tr^2}, r = gcd(l, n),
/// s = n^2+(3m-2)nl+m(2m-3)l^2, t = gcd(n, l^3(m-1)(2m-3)/r^2).
inline ClosedForm lmM_group(std::int64_t m, std::int64_t l, std::int64_t n) {
  detail::Evaluation ev("G7", detail::family_params(m, l, n));
  ev.require(m >= 2 && l >= 1 && n >= 0, "needs m >= 2, l >= 1, n >= 0");
  const BigInt M = detail::big(m), L = detail::big(l), N = detail::big(n);
  const BigInt r = gcd(L, N);
  const BigInt s = N * N + (3 * M - 2) * N * L + M * (2 * M - 3) * L * L;
  const BigInt t = gcd(N, ev.quotient(L * L * L * (M - 1) * (2 * M - 3), r * r, "l^3(m-1)(2m-3)/r^2"));
  ev.push(r, static_cast<std::size_t>(m));
  ev.push(ev.quotient(s, r, "s/r"), static_cast<std::size_t>(m - 2));
  ev.push(t);
  ev.push(ev.quotient(N * (N + 2 * (M - 1) * L) * s, t * r * r, "n(n+2(m-1)l)s/tr^2"));
  return std::move(ev).finish();
}

/// Closed form for c_cone(family(size)(l)). K_{M,M} is the complete graph on
/// 2m vertices; M_{m,m} has no stated formula.
inline ClosedForm closed_form(graphs::Family f, std::int64_t size, std::int64_t l, std::int64_t cone) {
  using graphs::Family;
  switch (f) {
    case Family::Path: return cone_path_group(size, l, cone);
    case Family::Cycle: return cone_cycle_group(size, l, cone);
    case Family::Complete: return cone_complete_group(size, l, cone);
    case Family::Kmm: return kmm_group(size, l, cone);
    case Family::Lmm: return lmm_group(size, l, cone);
    case Family::LMM: return lMM_group(size, l, cone);
    case Family::MMM: return mMM_group(size, l, cone);
    case Family::KmM: return kmM_group(size, l, cone);
    case Family::MmM: return mmM_group(size, l, cone);
    case Family::LmM: return lmM_group(size, l, cone);
    case Family::KMM: return cone_complete_group(2 * size, l, cone);
    case Family::Mmm: break;
  }
  throw std::invalid_argument("no closed form for family " + std::string(graphs::family_name(f)));
}

/// Minimum size accepted by the family's closed form.
inline std::int64_t closed_form_min_size(graphs::Family f) {
  using graphs::Family;
  switch (f) {
    case Family::Cycle: return 4;
    case Family::Lmm: return 3;
    default: return 2;
  }
}

/// The parametric matrix that the reduced Laplacian of the cone is identified
/// with when the formula is derived.
inline IntMatrix cone_matrix_form(graphs::Family f, std::int64_t size, std::int64_t l, std::int64_t cone) {
  using graphs::Family;
  using matforms::BipartiteId;
  using matforms::Kind;
  const BigInt S = detail::big(size), L = detail::big(l), K = detail::big(cone);
  const auto m = static_cast<std::size_t>(size);
  auto two = [](BigInt p, BigInt q, BigInt r, BigInt s) {
    return IntMatrix(2, 2, {std::move(p), std::move(q), std::move(r), std::move(s)});
  };
  switch (f) {
    case Family::Path: return matforms::build({Kind::P, m, K + 2 * L, -L});
    case Family::Cycle: return matforms::build({Kind::C, m, K + 2 * L, -L});
    case Family::Complete: return matforms::build({Kind::K, m, K + S * L, -L});
    case Family::KMM: return matforms::build({Kind::K, 2 * m, K + 2 * S * L, -L});
    case Family::Kmm: return matforms::bipartite_matrix(BipartiteId::K_mm, m, K + S * L, -L);
    case Family::Lmm: return matforms::bipartite_matrix(BipartiteId::L_mm, m, K + (S - 1) * L, -L);
    case Family::LMM: return matforms::bipartite_matrix(BipartiteId::L_MM, m, K + 2 * (S - 1) * L, -L);
    case Family::MMM: return matforms::bipartite_matrix(BipartiteId::M_MM, m, K + S * L, -L);
    case Family::KmM: return matforms::phi(m, two(S * L + K, 0, 0, 2 * S * L + K), two(0, -L, -L, -L));
    case Family::MmM: return matforms::phi(m, two(L + K, -L, -L, (S + 1) * L + K), two(0, 0, 0, -L));
    case Family::LmM: return matforms::phi(m, two((S - 1) * L + K, L, L, (2 * S - 1) * L + K), two(0, -L, -L, -L));
    case Family::Mmm: break;
  }
  throw std::invalid_argument("no parametric matrix for family " + std::string(graphs::family_name(f)));
}

}  // namespace critgroup::closedform
