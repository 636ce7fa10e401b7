#pragma once

#include "critgroup/bigint.hpp"
#include "critgroup/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace critgroup {

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

struct SmithForm {
  std::vector<BigInt> diagonal;  // length min(rows, cols), d[i] | d[i+1], zeros last
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t rank() const {
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(), [](const BigInt& d) { return sgn(d) != 0; }));
  }

  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

/// Replaces each pair (d_i, d_j), i < j, with (gcd, lcm). The result is a
/// divisibility chain with the same product, zeros moved to the tail.
inline void repair_divisibility_chain(std::vector<BigInt>& d) {
  for (auto& v : d) v = abs(v);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (divides(d[i], d[j])) continue;
      BigInt g = gcd(d[i], d[j]);
      BigInt l = lcm(d[i], d[j]);
      d[i] = std::move(g);
      d[j] = std::move(l);
    }
}

namespace detail {

// Locates the nonzero entry of least absolute value in the trailing block
// [t, rows) x [t, cols). Returns false when the block is zero.
inline bool find_min_pivot(const IntMatrix& w, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  for (std::size_t i = t; i < w.rows(); ++i)
    for (std::size_t j = t; j < w.cols(); ++j) {
      const BigInt& v = w(i, j);
      if (sgn(v) == 0) continue;
      if (!found || cmpabs(v, w(pr, pc)) < 0) {
        pr = i;
        pc = j;
        found = true;
      }
    }
  return found;
}

}  // namespace detail

/// Diagonalizes by least-absolute-value pivoting with truncated-quotient row
/// and column reductions, then enforces the divisibility chain.
inline SmithForm snf(const IntMatrix& m) {
  IntMatrix w = m;
  const std::size_t rows = w.rows();
  const std::size_t cols = w.cols();
  const std::size_t k = std::min(rows, cols);
  std::vector<BigInt> diag;
  diag.reserve(k);
  BigInt q;

  for (std::size_t t = 0; t < k; ++t) {
    std::size_t pr = t, pc = t;
    if (!detail::find_min_pivot(w, t, pr, pc)) break;
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(w(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), w(i, t).get_mpz_t(), w(t, t).get_mpz_t());
        if (sgn(q) == 0) continue;
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(w(t, j)) != 0) w(i, j) -= q * w(t, j);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(w(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), w(t, j).get_mpz_t(), w(t, t).get_mpz_t());
        if (sgn(q) == 0) continue;
        for (std::size_t i = t; i < rows; ++i)
          if (sgn(w(i, t)) != 0) w(i, j) -= q * w(i, t);
      }

      // Remainders are strictly smaller than the pivot; promote the least one.
      std::size_t best_r = t, best_c = t;
      bool dirty = false;
      auto consider = [&](std::size_t i, std::size_t j) {
        if (sgn(w(i, j)) == 0) return;
        if (!dirty || cmpabs(w(i, j), w(best_r, best_c)) < 0) {
          best_r = i;
          best_c = j;
          dirty = true;
        }
      };
      for (std::size_t i = t + 1; i < rows; ++i) consider(i, t);
      for (std::size_t j = t + 1; j < cols; ++j) consider(t, j);
      if (!dirty) break;
      w.swap_rows(t, best_r);
      w.swap_cols(t, best_c);
    }
    diag.push_back(abs(w(t, t)));
  }

  diag.resize(k);
  repair_divisibility_chain(diag);
  return SmithForm{std::move(diag), rows, cols};
}

// ---------------------------------------------------------------------------
// Determinants and minors
// ---------------------------------------------------------------------------

/// Fraction-free (Bareiss) elimination; every division is exact.
inline BigInt det(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det requires a square matrix, got " + m.shape());
  const std::size_t n = m.rows();
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap_with = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (sgn(a(i, k)) != 0) {
          swap_with = i;
          break;
        }
      if (swap_with == k) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = divexact(v, prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign < 0 ? BigInt(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

inline constexpr std::size_t kMinorOracleLimit = 6;

namespace detail {

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Greatest common divisor of all order x order minors. Oracle only: the
/// smaller dimension of m must not exceed kMinorOracleLimit.
inline BigInt minor_gcd(const IntMatrix& m, std::size_t order) {
  const std::size_t k = std::min(m.rows(), m.cols());
  if (order < 1 || order > k)
    throw std::out_of_range("minor order " + std::to_string(order) + " outside [1, " + std::to_string(k) + "]");
  if (k > kMinorOracleLimit)
    throw std::invalid_argument("minor_gcd oracle limited to min dimension <= 6, got " + m.shape());

  BigInt g = 0;
  std::vector<std::size_t> rs(order), cs(order);
  for (std::size_t i = 0; i < order; ++i) rs[i] = i;
  do {
    for (std::size_t i = 0; i < order; ++i) cs[i] = i;
    do {
      g = gcd(g, det(m.submatrix(rs, cs)));
      if (g == 1) return g;
    } while (detail::next_combination(cs, m.cols()));
  } while (detail::next_combination(rs, m.rows()));
  return g;
}

/// Invariant factors Delta_i / Delta_{i-1} from the minor-gcd description;
/// once some Delta_i vanishes every later factor is 0.
inline std::vector<BigInt> minor_gcd_factors(const IntMatrix& m) {
  const std::size_t k = std::min(m.rows(), m.cols());
  std::vector<BigInt> out;
  out.reserve(k);
  BigInt previous = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    if (sgn(previous) == 0) {
      out.emplace_back(0);
      continue;
    }
    BigInt delta = minor_gcd(m, i);
    out.push_back(sgn(delta) == 0 ? BigInt(0) : divexact(delta, previous));
    previous = delta;
  }
  return out;
}

/// Rank over the prime field F_p by plain Gaussian elimination on residues.
inline std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p needs a prime modulus");
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = mpz_fdiv_ui(m(i, j).get_mpz_t(), p);

  auto inverse = [p](std::uint64_t v) {
    std::uint64_t result = 1, base = v % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (a[r * cols + c] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    const std::uint64_t inv = inverse(a[rank * cols + c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t f = a[r * cols + c] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[r * cols + j] = (a[r * cols + j] + (p - f) * a[rank * cols + j]) % p;
    }
    ++rank;
  }
  return rank;
}

/// p-adic valuations of the elementary divisors of a nonsingular square
/// matrix, ascending. Works modulo p^(v_p(det)+1), always pivoting on an
/// entry of least valuation, so it shares no code path with snf().
inline std::vector<unsigned long> local_valuations(const IntMatrix& m, const BigInt& p) {
  if (!m.is_square()) throw std::invalid_argument("local_valuations needs a square matrix");
  const BigInt d = det(m);
  if (sgn(d) == 0) throw std::invalid_argument("local_valuations needs a nonsingular matrix");
  if (p < 2) throw std::invalid_argument("local_valuations needs a prime");
  BigInt rest;
  const unsigned long e = mpz_remove(rest.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) + 1;
  const BigInt q = pow(p, e);
  const std::size_t n = m.rows();

  IntMatrix w = m;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_fdiv_r(w(i, j).get_mpz_t(), w(i, j).get_mpz_t(), q.get_mpz_t());
  auto valuation = [&](const BigInt& x) -> unsigned long {
    if (sgn(x) == 0) return e;
    BigInt r;
    return mpz_remove(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  };

  std::vector<unsigned long> out;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pr = t, pc = t;
    unsigned long best = e;
    for (std::size_t i = t; i < n && best > 0; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const unsigned long v = valuation(w(i, j));
        if (v < best) {
          best = v, pr = i, pc = j;
          if (v == 0) break;
        }
      }
    if (best >= e) throw std::logic_error("local_valuations: valuation exceeds the determinant bound");
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);
    const BigInt scale = pow(p, best);
    BigInt unit_inv = divexact(w(t, t), scale);
    mpz_invert(unit_inv.get_mpz_t(), unit_inv.get_mpz_t(), q.get_mpz_t());
    for (std::size_t i = t + 1; i < n; ++i) {
      if (sgn(w(i, t)) == 0) continue;
      BigInt f = divexact(w(i, t), scale) * unit_inv;
      for (std::size_t j = t; j < n; ++j) {
        w(i, j) -= f * w(t, j);
        mpz_fdiv_r(w(i, j).get_mpz_t(), w(i, j).get_mpz_t(), q.get_mpz_t());
      }
    }
    for (std::size_t j = t + 1; j < n; ++j) w(t, j) = 0;  // cleared by column operations
    out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Prime divisors of |n| found by trial division up to `bound`, plus the
/// cofactor when GMP judges it prime. n == 0 yields nothing.
inline std::vector<BigInt> prime_divisors(const BigInt& n, unsigned long bound = 100000) {
  std::vector<BigInt> primes;
  BigInt r = abs(n);
  if (sgn(r) == 0) return primes;
  for (unsigned long p = 2; p <= bound && r > 1; ++p) {
    if (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
      primes.emplace_back(p);
      while (mpz_divisible_ui_p(r.get_mpz_t(), p)) mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
    }
  }
  if (r > 1 && mpz_probab_prime_p(r.get_mpz_t(), 30) > 0) primes.push_back(r);
  return primes;
}

// ---------------------------------------------------------------------------
// Finitely generated abelian groups
// ---------------------------------------------------------------------------

/// Invariant-factor chain d_1 | d_2 | ... | d_k with every d_i != 1.
/// Modulus 0 stands for an infinite cyclic factor Z.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  const std::vector<BigInt>& factors() const noexcept { return factors_; }

  std::size_t free_rank() const {
    return static_cast<std::size_t>(
        std::count_if(factors_.begin(), factors_.end(), [](const BigInt& d) { return sgn(d) == 0; }));
  }

  bool is_finite() const { return free_rank() == 0; }
  bool is_trivial() const { return factors_.empty(); }

  AbelianGroup torsion() const {
    AbelianGroup t;
    for (const auto& d : factors_)
      if (sgn(d) != 0) t.factors_.push_back(d);
    return t;
  }

  /// Number of cyclic factors whose modulus is divisible by p (its p-rank).
  std::size_t p_rank(const BigInt& p) const {
    return static_cast<std::size_t>(
        std::count_if(factors_.begin(), factors_.end(), [&](const BigInt& d) { return divides(p, d); }));
  }

  /// "Z8 + Z40", "Z3 + Z", or "0" for the trivial group.
  std::string to_string() const {
    if (factors_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += " + ";
      s += sgn(factors_[i]) == 0 ? std::string("Z") : "Z" + critgroup::to_string(factors_[i]);
    }
    return s;
  }

  std::vector<std::string> factor_strings() const {
    std::vector<std::string> out;
    out.reserve(factors_.size());
    for (const auto& d : factors_) out.push_back(critgroup::to_string(d));
    return out;
  }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  friend AbelianGroup canonicalize(std::span<const BigInt> moduli);
  std::vector<BigInt> factors_;
};

/// Invariant-factor chain of the direct sum of Z_{d_i}. Z_d and Z_{-d} are the
/// same group, so signs are dropped.
inline AbelianGroup canonicalize(std::span<const BigInt> moduli) {
  std::vector<BigInt> d(moduli.begin(), moduli.end());
  repair_divisibility_chain(d);
  AbelianGroup g;
  for (auto& v : d)
    if (v != 1) g.factors_.push_back(std::move(v));
  return g;
}

inline AbelianGroup canonicalize(std::initializer_list<long> moduli) {
  std::vector<BigInt> d(moduli.begin(), moduli.end());
  return canonicalize(std::span<const BigInt>(d));
}

/// Cokernel of m^t: invariant factors from the Smith form plus
/// (cols - rank) free factors.
inline AbelianGroup group_from_diagonal(std::span<const BigInt> diagonal, std::size_t cols) {
  std::vector<BigInt> factors;
  std::size_t rank = 0;
  for (const auto& d : diagonal)
    if (sgn(d) != 0) {
      factors.push_back(d);
      ++rank;
    }
  for (std::size_t i = rank; i < cols; ++i) factors.emplace_back(0);
  return canonicalize(factors);
}

inline AbelianGroup critical_group(const SmithForm& s) { return group_from_diagonal(s.diagonal, s.cols); }

inline AbelianGroup critical_group(const IntMatrix& m) { return critical_group(snf(m)); }

/// Product of the moduli, or nullopt when the group is infinite.
inline std::optional<BigInt> group_order(const AbelianGroup& g) {
  BigInt order = 1;
  for (const auto& d : g.factors()) {
    if (sgn(d) == 0) return std::nullopt;
    order *= d;
  }
  return order;
}

inline std::string order_string(const std::optional<BigInt>& order) {
  return order ? to_string(*order) : std::string("INFINITE");
}

inline bool group_eq(const AbelianGroup& g, const AbelianGroup& h) { return g == h; }

}  // namespace critgroup
