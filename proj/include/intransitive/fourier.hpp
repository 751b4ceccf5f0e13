#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "intransitive/die.hpp"
#include "intransitive/numeric.hpp"

namespace intransitive {

inline constexpr int kConvolutionCap = 40;

/// The law of (g_A(j), j - (n+1)/2) for j uniform on [n], in doubled units.
/// Column j-1 of `atoms` is (2 g_A(j), 2j - n - 1); each atom has weight 1/n.
struct LatticeLaw {
  int n = 0;
  Eigen::Matrix<std::int64_t, 2, Eigen::Dynamic> atoms;

  /// Sum over atoms of x x^T (doubled units). Equals the covariance of the
  /// n-fold sum in doubled units, since the mean is zero.
  Eigen::Matrix<std::int64_t, 2, 2> moment_sums() const { return atoms * atoms.transpose(); }
  Eigen::Matrix<std::int64_t, 2, 1> coordinate_sums() const { return atoms.rowwise().sum(); }
};

LatticeLaw lattice_law(const Die& die);

/// f^(alpha, beta) = n^-1 sum_j e(alpha g_A(j) + beta j), e(x) = exp(2 pi i x). Direct summation.
std::complex<double> char_fn(const Die& die, double alpha, double beta);

struct CharGrid {
  int n = 0;
  std::string die_id;
  Eigen::VectorXd alphas;
  Eigen::VectorXd betas;
  Eigen::MatrixXcd values;  // values(i, k) = f^(alphas(i), betas(k))
};

/// Evenly spaced points from lo to hi inclusive.
Eigen::VectorXd grid_axis(double lo, double hi, int points);

/// Evaluates the characteristic function on a grid as one complex matrix product.
CharGrid char_grid(const Die& die, const Eigen::VectorXd& alphas, const Eigen::VectorXd& betas);

struct BoxBoundOptions {
  int grid = 65;
  double alpha_constant = 1e7;  // box half-width in alpha: alpha_constant * log n / n
  double beta_constant = 1e9;   // box half-width in beta: beta_constant * (log n / n)^(3/2)
  double bound_exponent = 10;   // target bound n^-bound_exponent
};

struct BoxBoundReport {
  int n = 0;
  double alpha_threshold = 0;
  double beta_threshold = 0;
  double bound = 0;
  /// No grid point of [-1/2, 1/2]^2 lies outside the box.
  bool vacuous = false;
  std::int64_t points_outside = 0;
  double max_outside = 0;  // max |f^|^n over grid points outside the box
  bool holds = true;       // max_outside <= bound (true when vacuous)
  double slack = 0;        // max_outside / bound
  double max_modulus = 0;  // max |f^| over the whole grid
  bool modulus_bounded = true;  // |f^| <= 1 + 1e-12 everywhere
};

BoxBoundReport box_bound_report(const Die& die, const BoxBoundOptions& options = {});

/// Counts (or masses) of the n-fold sum of the lattice law on the doubled-unit
/// lattice. Rows are indexed by v in steps of 2 (the sum is always even in
/// doubled units), columns by u in steps of 1.
template <typename Count>
class JointPmf {
 public:
  static constexpr long v_step = 2;

  JointPmf(LatticeLaw law, long u_min, long u_max, long v_min, long v_max, std::vector<Count> counts);

  const LatticeLaw& law() const { return law_; }
  int sides() const { return law_.n; }
  long u_min() const { return u_min_; }
  long u_max() const { return u_max_; }
  long v_min() const { return v_min_; }
  long v_max() const { return v_max_; }
  long cols() const { return u_max_ - u_min_ + 1; }
  long rows() const { return (v_max_ - v_min_) / v_step + 1; }

  /// Zero outside the table or off the v lattice.
  Count at(long u, long v) const;
  std::span<const Count> row(long v) const;
  std::span<const Count> cells() const { return counts_; }

  Count total() const;
  Count row_total(long v) const;

 private:
  LatticeLaw law_;
  long u_min_, u_max_, v_min_, v_max_;
  std::vector<Count> counts_;
};

using ExactPmf = JointPmf<LatticeCount>;

/// n-fold self-convolution of the law: exact counts of sequences in [n]^n per
/// lattice point, total n^n. `Count` may be LatticeCount (exact) or double.
template <typename Count>
JointPmf<Count> convolve(const LatticeLaw& law, int threads = 1);

ExactPmf convolve_exact(const Die& die, int cap = kConvolutionCap, int threads = 1);

struct ConditionalBeat {
  Rational a_beats;  // P[U < 0 | V = 0]: fraction of balanced B that A beats
  Rational tie;      // P[U = 0 | V = 0]
  Rational b_beats;  // P[U > 0 | V = 0]
  BigInt balanced_count;  // mass of the V = 0 row
};

ConditionalBeat conditional_beat_prob(const ExactPmf& pmf);
ConditionalBeat conditional_beat_prob(const Die& die, int cap = kConvolutionCap, int threads = 1);

struct GaussianFit {
  bool degenerate = false;
  Eigen::Matrix2d covariance = Eigen::Matrix2d::Zero();  // of (U*n, V*n), value units
  double conditional_variance = 0;                        // Var(U*n | V*n = 0) from the quadratic form
  double p_v0 = 0;                                        // P[V*n = 0]
  long row_step = 0;      // spacing of the support lattice along u, doubled units
  double cell_area = 0;   // area of a support lattice cell, value units
  double row_scale = 0;   // c in G(x, 0) = c exp(-x^2 / 2 var), matched to P[V*n = 0]
  double sup_error_row = 0;
  double sup_error_plane = 0;
  double mode_u = 0;      // value units
  double mode_relative_error = 0;
  double symmetry_defect = 0;             // max_x |P[(x,0)] - P[(-x,0)]|
  double symmetry_defect_normalized = 0;  // ... / P[V*n = 0]
  double reference_bound = 0;             // 1e50 (log n)^7 / n^3
};

/// Compares the exact table with a discrete Gaussian built from the exact
/// second moments: the spatial quadratic form is the inverse covariance.
GaussianFit gaussian_compare(const ExactPmf& pmf);

struct MaxNormCheck {
  HalfInteger max_abs_g;
  double bound = 0;  // 2 sqrt(n log n)
  bool passes = false;
};

MaxNormCheck maxnorm_check(const Die& die);

struct TailCheck {
  double c = 0;
  double threshold = 0;  // 2 C n sqrt(log n), value units
  BigInt tail_count;     // sequences with |U*n| >= threshold
  double tail_probability = 0;
  double bound = 0;      // 2 exp(-2 C^2)
  bool applicable = false;  // the die passes maxnorm_check
  bool holds = false;
};

TailCheck tail_check(const ExactPmf& pmf, const Die& die, double c);
TailCheck tail_check(const Die& die, double c, int cap = kConvolutionCap);

}  // namespace intransitive
