#include "intransitive/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "intransitive/errors.hpp"
#include "intransitive/parallel.hpp"

namespace intransitive {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> unit(double turns) { return std::polar(1.0, kTwoPi * turns); }

}  // namespace

LatticeLaw lattice_law(const Die& die) {
  const int n = die.sides();
  const auto g = g_table_doubled(die);
  LatticeLaw law;
  law.n = n;
  law.atoms.resize(2, n);
  for (int j = 1; j <= n; ++j) {
    law.atoms(0, j - 1) = g[j - 1];
    law.atoms(1, j - 1) = 2 * j - n - 1;
  }
  return law;
}

std::complex<double> char_fn(const Die& die, double alpha, double beta) {
  const auto g = g_table_doubled(die);
  std::complex<double> sum = 0;
  for (int j = 1; j <= die.sides(); ++j) sum += unit(alpha * (static_cast<double>(g[j - 1]) / 2.0) + beta * j);
  return sum / static_cast<double>(die.sides());
}

Eigen::VectorXd grid_axis(double lo, double hi, int points) {
  if (points < 1) throw std::invalid_argument("grid_axis: need at least one point");
  if (points == 1) return Eigen::VectorXd::Constant(1, lo);
  return Eigen::VectorXd::LinSpaced(points, lo, hi);
}

CharGrid char_grid(const Die& die, const Eigen::VectorXd& alphas, const Eigen::VectorXd& betas) {
  const int n = die.sides();
  const auto g = g_table_doubled(die);
  Eigen::VectorXd half_g(n), j(n);
  for (int k = 0; k < n; ++k) {
    half_g(k) = static_cast<double>(g[k]) / 2.0;
    j(k) = k + 1;
  }
  const Eigen::MatrixXd alpha_phase = alphas * half_g.transpose();  // |alphas| x n
  const Eigen::MatrixXd beta_phase = j * betas.transpose();         // n x |betas|
  const Eigen::MatrixXcd left = alpha_phase.unaryExpr([](double t) { return unit(t); });
  const Eigen::MatrixXcd right = beta_phase.unaryExpr([](double t) { return unit(t); });

  CharGrid grid;
  grid.n = n;
  grid.die_id = to_string(die);
  grid.alphas = alphas;
  grid.betas = betas;
  grid.values = (left * right) / static_cast<double>(n);
  return grid;
}

BoxBoundReport box_bound_report(const Die& die, const BoxBoundOptions& options) {
  const int n = die.sides();
  BoxBoundReport r;
  r.n = n;
  const double logn = std::log(static_cast<double>(n));
  r.alpha_threshold = options.alpha_constant * logn / n;
  r.beta_threshold = options.beta_constant * std::pow(logn / n, 1.5);
  r.bound = std::pow(static_cast<double>(n), -options.bound_exponent);

  const Eigen::VectorXd axis = grid_axis(-0.5, 0.5, options.grid);
  const CharGrid grid = char_grid(die, axis, axis);
  const Eigen::ArrayXXd modulus = grid.values.array().abs();
  r.max_modulus = modulus.maxCoeff();
  r.modulus_bounded = r.max_modulus <= 1.0 + 1e-12;

  for (Eigen::Index i = 0; i < axis.size(); ++i) {
    for (Eigen::Index k = 0; k < axis.size(); ++k) {
      const bool outside = std::abs(axis(i)) >= r.alpha_threshold || std::abs(axis(k)) >= r.beta_threshold;
      if (!outside) continue;
      ++r.points_outside;
      r.max_outside = std::max(r.max_outside, std::pow(modulus(i, k), n));
    }
  }
  r.vacuous = r.points_outside == 0;
  r.holds = r.vacuous || r.max_outside <= r.bound;
  r.slack = r.bound > 0 ? r.max_outside / r.bound : 0.0;
  return r;
}

template <typename Count>
JointPmf<Count>::JointPmf(LatticeLaw law, long u_min, long u_max, long v_min, long v_max, std::vector<Count> counts)
    : law_(std::move(law)), u_min_(u_min), u_max_(u_max), v_min_(v_min), v_max_(v_max), counts_(std::move(counts)) {
  if (static_cast<long>(counts_.size()) != rows() * cols()) throw std::invalid_argument("JointPmf: table size mismatch");
}

template <typename Count>
Count JointPmf<Count>::at(long u, long v) const {
  if (u < u_min_ || u > u_max_ || v < v_min_ || v > v_max_) return Count(0);
  if ((v - v_min_) % v_step != 0) return Count(0);
  return counts_[static_cast<std::size_t>((v - v_min_) / v_step * cols() + (u - u_min_))];
}

template <typename Count>
std::span<const Count> JointPmf<Count>::row(long v) const {
  if (v < v_min_ || v > v_max_ || (v - v_min_) % v_step != 0) return {};
  const auto start = static_cast<std::size_t>((v - v_min_) / v_step * cols());
  return std::span<const Count>(counts_).subspan(start, static_cast<std::size_t>(cols()));
}

template <typename Count>
Count JointPmf<Count>::total() const {
  Count sum(0);
  for (const Count& c : counts_) sum += c;
  return sum;
}

template <typename Count>
Count JointPmf<Count>::row_total(long v) const {
  Count sum(0);
  for (const Count& c : row(v)) sum += c;
  return sum;
}

template <typename Count>
JointPmf<Count> convolve(const LatticeLaw& law, int threads) {
  const int n = law.n;
  const std::int64_t atom_u_min = law.atoms.row(0).minCoeff();
  const std::int64_t atom_u_max = law.atoms.row(0).maxCoeff();
  const long atom_width = static_cast<long>(atom_u_max - atom_u_min);

  // k = 0: a single unit mass at the origin.
  long cols = 1, rows = 1;
  std::vector<Count> table(1, Count(1));
  std::vector<Count> next;
  for (int step = 1; step <= n; ++step) {
    const long next_cols = cols + atom_width;
    const long next_rows = rows + (n - 1);  // v of atom j shifts the row index by j-1
    next.assign(static_cast<std::size_t>(next_cols * next_rows), Count(0));
    // Each output row gathers from up to n input rows, so row blocks are independent.
    parallel_for(static_cast<std::size_t>(next_rows), threads, [&](std::size_t out_row) {
      Count* out = &next[out_row * static_cast<std::size_t>(next_cols)];
      for (int j = 1; j <= n; ++j) {
        const long in_row = static_cast<long>(out_row) - (j - 1);
        if (in_row < 0 || in_row >= rows) continue;
        const long shift = static_cast<long>(law.atoms(0, j - 1) - atom_u_min);
        const Count* in = &table[static_cast<std::size_t>(in_row * cols)];
        Count* dst = out + shift;
        for (long c = 0; c < cols; ++c) dst[c] += in[c];
      }
    });
    table.swap(next);
    cols = next_cols;
    rows = next_rows;
  }
  const long u_min = static_cast<long>(n) * atom_u_min;
  const long v_min = -static_cast<long>(n) * (n - 1);
  return JointPmf<Count>(law, u_min, u_min + cols - 1, v_min, -v_min, std::move(table));
}

template class JointPmf<LatticeCount>;
template class JointPmf<double>;
template JointPmf<LatticeCount> convolve<LatticeCount>(const LatticeLaw&, int);
template JointPmf<double> convolve<double>(const LatticeLaw&, int);

ExactPmf convolve_exact(const Die& die, int cap, int threads) {
  if (die.sides() > cap) throw CapExceeded("convolve_exact", die.sides(), cap);
  if (cap > 46) throw std::invalid_argument("convolve_exact: n^n overflows 256-bit counts above n = 46");
  return convolve<LatticeCount>(lattice_law(die), threads);
}

namespace {

BigInt to_big(const LatticeCount& c) { return BigInt(c); }

BigInt power(int base, int exponent) {
  BigInt out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

double ratio(const BigInt& num, const BigInt& den) { return Rational(num, den).convert_to<double>(); }

}  // namespace

ConditionalBeat conditional_beat_prob(const ExactPmf& pmf) {
  const auto row = pmf.row(0);
  BigInt below = 0, zero = 0, above = 0;
  for (long c = 0; c < pmf.cols(); ++c) {
    const long u = pmf.u_min() + c;
    const BigInt count = to_big(row[static_cast<std::size_t>(c)]);
    if (u < 0)
      below += count;
    else if (u == 0)
      zero += count;
    else
      above += count;
  }
  const BigInt total = below + zero + above;
  return {Rational(below, total), Rational(zero, total), Rational(above, total), total};
}

ConditionalBeat conditional_beat_prob(const Die& die, int cap, int threads) {
  return conditional_beat_prob(convolve_exact(die, cap, threads));
}

namespace {

struct Lattice2 {
  // Hermite basis {(a, b), (0, d)} of the lattice generated by atom differences.
  long a = 0, b = 0, d = 0;
  long v_gcd = 0;  // gcd of the v components
  long determinant() const { return a * d; }
  bool contains(long du, long dv) const {
    if (a == 0) return du == 0 && (d == 0 ? dv == 0 : dv % d == 0);
    if (du % a != 0) return false;
    const long rest = dv - (du / a) * b;
    return d == 0 ? rest == 0 : rest % d == 0;
  }
};

// Extended gcd: returns g and x, y with a x + b y = g.
long ext_gcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::abs(a);
  }
  long x1, y1;
  const long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

Lattice2 difference_lattice(const LatticeLaw& law) {
  Lattice2 lat;
  const long u0 = static_cast<long>(law.atoms(0, 0)), v0 = static_cast<long>(law.atoms(1, 0));
  std::vector<std::pair<long, long>> gens;
  for (Eigen::Index j = 1; j < law.atoms.cols(); ++j)
    gens.emplace_back(static_cast<long>(law.atoms(0, j)) - u0, static_cast<long>(law.atoms(1, j)) - v0);
  // Combine first coordinates to their gcd while tracking the paired second coordinate.
  for (const auto& [du, dv] : gens) {
    if (du == 0) continue;
    long x, y;
    const long g = ext_gcd(lat.a, du, x, y);
    lat.b = x * lat.b + y * dv;
    lat.a = g;
  }
  long d = 0;
  for (const auto& [du, dv] : gens) {
    lat.v_gcd = std::gcd(lat.v_gcd, dv);
    const long rest = lat.a == 0 ? dv : dv - (du / lat.a) * lat.b;
    d = std::gcd(d, rest);
  }
  lat.d = std::abs(d);
  if (lat.d != 0) lat.b = ((lat.b % lat.d) + lat.d) % lat.d;
  return lat;
}

}  // namespace

GaussianFit gaussian_compare(const ExactPmf& pmf) {
  GaussianFit fit;
  const LatticeLaw& law = pmf.law();
  const int n = law.n;
  const double logn = std::log(static_cast<double>(n));
  fit.reference_bound = n > 1 ? 1e50 * std::pow(logn, 7) / std::pow(static_cast<double>(n), 3) : 0.0;

  const BigInt total = power(n, n);
  const double total_d = total.convert_to<double>();
  const auto prob = [&](const LatticeCount& c) { return c.convert_to<double>() / total_d; };

  const auto row = pmf.row(0);
  const BigInt row_mass = to_big(pmf.row_total(0));
  fit.p_v0 = ratio(row_mass, total);

  // Symmetry of the v = 0 row, computed on exact differences.
  BigInt worst = 0;
  long mode_col = 0;
  for (long c = 0; c < pmf.cols(); ++c) {
    const long u = pmf.u_min() + c;
    if (row[static_cast<std::size_t>(c)] > row[static_cast<std::size_t>(mode_col)]) mode_col = c;
    if (u <= 0) continue;
    const BigInt lhs = to_big(pmf.at(u, 0)), rhs = to_big(pmf.at(-u, 0));
    const BigInt diff = lhs > rhs ? BigInt(lhs - rhs) : BigInt(rhs - lhs);
    if (diff > worst) worst = diff;
  }
  fit.symmetry_defect = ratio(worst, total);
  fit.symmetry_defect_normalized = ratio(worst, row_mass);
  fit.mode_u = static_cast<double>(pmf.u_min() + mode_col) / 2.0;

  // Covariance of the n-fold sum: n E[x x^T] = sum over atoms; /4 converts doubled units.
  const Eigen::Matrix2d cov = law.moment_sums().cast<double>() / 4.0;
  fit.covariance = cov;
  const Lattice2 lat = difference_lattice(law);
  const double det = cov.determinant();
  if (!(det > 0) || lat.determinant() == 0 || lat.v_gcd == 0) {
    fit.degenerate = true;
    return fit;
  }
  const Eigen::Matrix2d precision = cov.inverse();
  fit.conditional_variance = 1.0 / precision(0, 0);
  fit.row_step = lat.determinant() / lat.v_gcd;
  fit.cell_area = static_cast<double>(lat.determinant()) / 4.0;

  // Row Gaussian, normalized to the exact row mass over the row's lattice points.
  long offset_col = -1;
  for (long c = 0; c < pmf.cols(); ++c)
    if (row[static_cast<std::size_t>(c)] != 0) {
      offset_col = c;
      break;
    }
  const long u_first = pmf.u_min() + offset_col;
  const auto row_shape = [&](long u) {
    const double x = static_cast<double>(u) / 2.0;
    return std::exp(-0.5 * x * x * precision(0, 0));
  };
  const long reach = static_cast<long>(std::ceil(20.0 * std::sqrt(fit.conditional_variance))) * 2 + pmf.cols();
  double shape_sum = 0;
  for (long u = u_first - (reach / fit.row_step) * fit.row_step; u <= u_first + reach; u += fit.row_step)
    shape_sum += row_shape(u);
  fit.row_scale = fit.p_v0 / shape_sum;

  for (long c = 0; c < pmf.cols(); ++c) {
    const long u = pmf.u_min() + c;
    if ((u - u_first) % fit.row_step != 0) continue;
    const double err = std::abs(prob(row[static_cast<std::size_t>(c)]) - fit.row_scale * row_shape(u));
    fit.sup_error_row = std::max(fit.sup_error_row, err);
  }
  const double p_mode = prob(row[static_cast<std::size_t>(mode_col)]);
  fit.mode_relative_error = std::abs(p_mode - fit.row_scale * row_shape(pmf.u_min() + mode_col)) / p_mode;

  // Plane Gaussian: density 1 / (2 pi sqrt(det)) times the lattice cell area.
  const double plane_scale = fit.cell_area / (2.0 * std::numbers::pi * std::sqrt(det));
  const long u_base = static_cast<long>(n * law.atoms(0, 0));
  const long v_base = static_cast<long>(n * law.atoms(1, 0));
  const auto cells = pmf.cells();
  for (long r = 0; r < pmf.rows(); ++r) {
    const long v = pmf.v_min() + r * ExactPmf::v_step;
    for (long c = 0; c < pmf.cols(); ++c) {
      const long u = pmf.u_min() + c;
      if (!lat.contains(u - u_base, v - v_base)) continue;
      const Eigen::Vector2d x(static_cast<double>(u) / 2.0, static_cast<double>(v) / 2.0);
      const double g = plane_scale * std::exp(-0.5 * x.dot(precision * x));
      const double p = prob(cells[static_cast<std::size_t>(r * pmf.cols() + c)]);
      fit.sup_error_plane = std::max(fit.sup_error_plane, std::abs(p - g));
    }
  }
  return fit;
}

MaxNormCheck maxnorm_check(const Die& die) {
  const int n = die.sides();
  if (n < 2) throw std::invalid_argument("maxnorm_check: n must be >= 2");
  MaxNormCheck out;
  std::int64_t worst = 0;
  for (std::int64_t g : g_table_doubled(die)) worst = std::max(worst, std::abs(g));
  out.max_abs_g = HalfInteger::from_doubled(worst);
  out.bound = 2.0 * std::sqrt(n * std::log(static_cast<double>(n)));
  out.passes = out.max_abs_g.value() <= out.bound;
  return out;
}

TailCheck tail_check(const ExactPmf& pmf, const Die& die, double c) {
  const int n = die.sides();
  TailCheck out;
  out.c = c;
  out.threshold = 2.0 * c * n * std::sqrt(std::log(static_cast<double>(n)));
  out.bound = 2.0 * std::exp(-2.0 * c * c);
  out.applicable = n >= 2 && maxnorm_check(die).passes;
  out.tail_count = 0;
  const auto cells = pmf.cells();
  for (long r = 0; r < pmf.rows(); ++r) {
    for (long col = 0; col < pmf.cols(); ++col) {
      const long u = pmf.u_min() + col;
      if (std::abs(static_cast<double>(u) / 2.0) >= out.threshold)
        out.tail_count += to_big(cells[static_cast<std::size_t>(r * pmf.cols() + col)]);
    }
  }
  out.tail_probability = ratio(out.tail_count, power(n, n));
  out.holds = out.tail_probability <= out.bound;
  return out;
}

TailCheck tail_check(const Die& die, double c, int cap) { return tail_check(convolve_exact(die, cap), die, c); }

}  // namespace intransitive
