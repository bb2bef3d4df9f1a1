#pragma once

// O*(2^m) allocation via characteristic-vector polynomials.
//
// A job set S is encoded as the monomial y^chi(S), where chi(S) is the m-bit
// mask of S. Two sets are disjoint exactly when the popcount of the integer
// sum chi(S1) + chi(S2) equals |S1| + |S2|, so multiplying polynomials and
// keeping only monomials of the expected Hamming weight combines bundles of
// successive agents while discarding overlapping ones. Coefficients only
// matter as zero/non-zero; after each round they are clamped to {0, 1}.

#include <cstdint>
#include <vector>

#include "cffa/model.hpp"

namespace cffa {

// Coefficient array over exponents [0, 2^bits). Arithmetic saturates at
// kSaturation: every coefficient is non-negative, so saturation can never turn
// a non-zero coefficient into zero.
class MaskPolynomial {
 public:
  static constexpr std::uint64_t kSaturation = std::uint64_t{1} << 62;

  MaskPolynomial() = default;
  explicit MaskPolynomial(int bits);

  static MaskPolynomial monomial(int bits, JobMask exponent, std::uint64_t coeff = 1);

  int bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::uint64_t operator[](JobMask e) const { return coeffs_.at(e); }
  void set(JobMask e, std::uint64_t c) { coeffs_.at(e) = c < kSaturation ? c : kSaturation; }
  void add(JobMask e, std::uint64_t c);
  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  std::vector<JobMask> support() const;

  friend bool operator==(const MaskPolynomial&, const MaskPolynomial&) = default;

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> coeffs_;
};

// Keeps only monomials whose exponent has popcount h.
MaskPolynomial hamming_projection(const MaskPolynomial& p, int h);
// Clamps every non-zero coefficient to 1.
MaskPolynomial representative(const MaskPolynomial& p);
// Integer polynomial product; exponents >= 2^bits are dropped. Cost is
// |support(p)| * |support(q)|.
MaskPolynomial poly_multiply(const MaskPolynomial& p, const MaskPolynomial& q);

// Feasible bundles of one agent, grouped by size: masks_by_size[s] holds the
// masks of popcount s (index 0 is always empty). Sizes run up to the bundle
// cap, or m when uncapped.
struct BundleFamily {
  int agent = 0;
  std::vector<std::vector<JobMask>> masks_by_size;

  std::size_t total() const noexcept;
};

// Rejects m > 30.
std::vector<BundleFamily> build_bundle_families(const Instance& inst);

// reach[i][e] != 0 iff the round-i polynomial has a non-zero coefficient at
// exponent e, i.e. agents 0..i-1 can receive disjoint feasible bundles whose
// union is exactly e. reach[0] is the constant polynomial 1.
struct RoundPolynomials {
  int bits = 0;
  std::vector<std::vector<std::uint8_t>> reach;
};

// Backtracks from the smallest reachable exponent of the last round. At each
// round the agent's bundle is the smallest family mask S inside the current
// exponent e with e - S reachable in the previous round. Throws
// Error(Internal) if no such S exists.
Allocation extract_assignment(const RoundPolynomials& rounds,
                              const std::vector<BundleFamily>& families);

// Rounds combine with a rank-stratified zeta/Moebius subset convolution,
// which realizes sum_{s'+s''=s} H_s(p_{s'} * f_{s''}) in O(2^m m^2) per round.
// The last round is decided by counting family masks below each complement
// and records a single reachable exponent.
// Rejects m > 30.
SolveReport solve_fpt_items(const Instance& inst);

// The same recursion evaluated literally with MaskPolynomial arithmetic and
// schoolbook products. `reduce_each_round` toggles the representative step.
// Intended for m <= 12; rejects m > 16.
SolveReport solve_fpt_items_polynomial(const Instance& inst, bool reduce_each_round = true);

}  // namespace cffa
