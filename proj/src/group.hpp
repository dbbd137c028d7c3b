#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace vilenkin {

/// Thrown when a requested grid would exceed the configured size cap.
class GridLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown on failed report/file I/O.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GroupSpec;
using GroupPtr = std::shared_ptr<const GroupSpec>;

/// A point of the truncated group: one digit x_k in Z_{m_k} per level.
struct Point {
  std::vector<std::uint32_t> digits;
};

/// Index n < M_L with its mixed-radix expansion and order |n|.
/// |n| = max{j : n_j != 0}; |0| is defined as 0.
struct VIndex {
  std::uint64_t n = 0;
  std::vector<std::uint32_t> digits;
  std::size_t order = 0;
};

/// Truncated bounded Vilenkin group: radices m_0..m_{L-1} (each >= 2),
/// generalized powers M_0 = 1, M_{k+1} = m_k * M_k, bound R = max m_k.
///
/// All computation lives on the quotient grid of M_L points; functions are
/// step functions constant on cosets of I_L, stored as M_L values indexed by
/// rank(x) = sum_k x_k M_k. Immutable after construction.
class GroupSpec {
 public:
  static constexpr std::uint64_t kDefaultMaxGrid = std::uint64_t{1} << 22;

  /// Builds a group from explicit radices (level = radices.size()).
  static GroupPtr create(const std::vector<std::uint32_t>& radices,
                         std::uint64_t max_grid = 0);

  /// Builds a group of the given level from a radix pattern; a pattern
  /// shorter than the level repeats cyclically.
  static GroupPtr create_cyclic(const std::vector<std::uint32_t>& pattern,
                                std::size_t level, std::uint64_t max_grid = 0);

  /// Parses the specification string "m=<r0>,<r1>,...;L=<n>".
  static GroupPtr parse(const std::string& text, std::uint64_t max_grid = 0);

  std::size_t level() const { return radices_.size(); }           // L
  std::uint64_t size() const { return mpow_.back(); }             // M_L
  std::uint32_t radix(std::size_t k) const { return radices_.at(k); }
  std::uint64_t gen_power(std::size_t k) const { return mpow_.at(k); }  // M_k
  std::uint32_t bound() const { return bound_; }                  // R
  std::string format() const;  // canonical spec string, explicit radices

  bool same_as(const GroupSpec& other) const {
    return radices_ == other.radices_;
  }

  // --- digit / rank arithmetic ------------------------------------------

  /// Digit x_k of the point with the given rank. Unchecked hot path.
  std::uint32_t digit(std::uint64_t rank, std::size_t k) const {
    return static_cast<std::uint32_t>((rank / mpow_[k]) % radices_[k]);
  }

  Point unrank(std::uint64_t rank) const;
  std::uint64_t rank(const Point& x) const;

  /// Rank of x - t (digit-wise subtraction mod m_k). Both ranks < M_L.
  std::uint64_t sub(std::uint64_t x, std::uint64_t t) const;
  Point point_sub(const Point& x, const Point& t) const;

  VIndex index(std::uint64_t n) const;

  /// x in I_s iff digits 0..s-1 vanish iff rank % M_s == 0.
  bool in_coset(std::uint64_t rank, std::size_t s) const {
    return rank % mpow_.at(s) == 0;
  }

  /// Ranks of the M_L / M_s points of I_s, one per coset of I_L inside I_s.
  std::vector<std::uint64_t> coset_rep_ranks(std::size_t s) const;
  std::vector<Point> coset_reps(std::size_t s) const;

  /// exp(2*pi*i*t/m_k), 0 <= t < m_k. The table is conjugate-symmetric
  /// (root(t) == conj(root(m_k - t)) exactly) and carries exact values at
  /// t/m in {0, 1/4, 1/2, 3/4}, so paired terms cancel without roundoff.
  const std::complex<double>& root(std::size_t k, std::uint32_t t) const {
    return roots_[k][t];
  }

 private:
  GroupSpec(std::vector<std::uint32_t> radices, std::uint64_t max_grid);

  std::vector<std::uint32_t> radices_;
  std::vector<std::uint64_t> mpow_;  // M_0..M_L
  std::vector<std::vector<std::complex<double>>> roots_;
  std::uint32_t bound_ = 0;
};

}  // namespace vilenkin
