#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "intransitive/counting.hpp"
#include "intransitive/enumeration.hpp"
#include "intransitive/errors.hpp"
#include "intransitive/fourier.hpp"
#include "intransitive/rng.hpp"
#include "intransitive/samplers.hpp"
#include "oracles.hpp"

using namespace intransitive;

namespace {

oracle::Faces faces_of(const Die& d) { return {d.faces().begin(), d.faces().end()}; }

Die sampled(int n, std::uint64_t stream) {
  RngStream rng(2024, stream);
  return sample_die(n, Model::balanced_sequence, rng);
}

std::complex<double> slow_char_fn(const oracle::Faces& a, double alpha, double beta) {
  const int n = static_cast<int>(a.size());
  std::complex<double> s = 0;
  for (int j = 1; j <= n; ++j) {
    const double x = alpha * oracle::g2(a, j) / 2.0 + beta * j;
    s += std::polar(1.0, 2 * std::numbers::pi * x);
  }
  return s / static_cast<double>(n);
}

}  // namespace

TEST_CASE("lattice law") {
  const LatticeLaw law = lattice_law(Die({1, 1, 4, 4}));
  CHECK(law.n == 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(law.atoms(0, j) == std::vector<long>{1, 1, -1, -1}[j]);
    CHECK(law.atoms(1, j) == std::vector<long>{-3, -1, 1, 3}[j]);
  }
  const LatticeLaw flat = lattice_law(Die::standard(9));
  CHECK(flat.atoms.row(0).cwiseAbs().sum() == 0);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const LatticeLaw l = lattice_law(sampled(25, s));
    CHECK(l.coordinate_sums().isZero());
    CHECK(l.atoms.cols() == 25);
  }
}

TEST_CASE("characteristic function") {
  const Die a({1, 1, 4, 4});
  CHECK(std::abs(char_fn(a, 0, 0) - 1.0) < 1e-15);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Die d = sampled(2 * (static_cast<int>(s) + 2), s);
    CHECK(std::abs(char_fn(d, 0, 0.5)) < 1e-12);
    CHECK(std::abs(char_fn(d, 0.3, -0.2) - std::conj(char_fn(d, -0.3, 0.2))) < 1e-12);
  }
  const Eigen::VectorXd alphas = grid_axis(-0.5, 0.5, 21);
  const Eigen::VectorXd betas = grid_axis(-0.5, 0.5, 17);
  CHECK(alphas(0) == -0.5);
  CHECK(alphas(20) == 0.5);
  for (const Die& d : {a, sampled(31, 1)}) {
    const CharGrid g = char_grid(d, alphas, betas);
    CHECK(g.n == d.sides());
    const auto faces = faces_of(d);
    for (int i = 0; i < alphas.size(); ++i)
      for (int k = 0; k < betas.size(); ++k) {
        REQUIRE(std::abs(g.values(i, k) - slow_char_fn(faces, alphas(i), betas(k))) < 1e-12);
        REQUIRE(std::abs(g.values(i, k) - char_fn(d, alphas(i), betas(k))) < 1e-12);
        REQUIRE(std::abs(g.values(i, k)) <= 1 + 1e-12);
      }
  }
}

TEST_CASE("box bound report") {
  const BoxBoundReport small = box_bound_report(sampled(12, 0));
  CHECK(small.vacuous);
  CHECK(small.holds);
  CHECK(small.modulus_bounded);
  CHECK(small.alpha_threshold > 0.5);

  BoxBoundOptions tight;
  tight.grid = 21;
  tight.alpha_constant = 0.01;
  tight.beta_constant = 0.01;
  const Die d = sampled(40, 3);
  const BoxBoundReport r = box_bound_report(d, tight);
  CHECK_FALSE(r.vacuous);
  CHECK(r.points_outside > 0);
  // Recompute the outside maximum by direct summation.
  const Eigen::VectorXd axis = grid_axis(-0.5, 0.5, tight.grid);
  double worst = 0;
  const auto faces = faces_of(d);
  for (int i = 0; i < axis.size(); ++i)
    for (int k = 0; k < axis.size(); ++k) {
      if (std::abs(axis(i)) < r.alpha_threshold && std::abs(axis(k)) < r.beta_threshold) continue;
      worst = std::max(worst, std::pow(std::abs(slow_char_fn(faces, axis(i), axis(k))), 40));
    }
  CHECK(r.max_outside == doctest::Approx(worst).epsilon(1e-9));
  CHECK(r.holds == (r.max_outside <= r.bound));
  CHECK(r.max_modulus == doctest::Approx(1.0));
}

TEST_CASE("exact convolution against direct enumeration of [n]^n") {
  const ExactPmf one = convolve_exact(Die::standard(1));
  CHECK(one.total() == 1);
  CHECK(one.at(0, 0) == 1);

  for (int n = 2; n <= 6; ++n) {
    for (const Die& d : enumerate_multiset(n)) {
      const ExactPmf pmf = convolve_exact(d);
      const auto brute = oracle::joint_counts(faces_of(d));
      LatticeCount total = 0;
      for (const auto& [uv, c] : brute) {
        REQUIRE(pmf.at(uv.first, uv.second) == c);
        total += c;
      }
      CHECK(pmf.total() == total);
      CHECK(pmf.row_total(0) == LatticeCount(count_balanced(n)));
    }
  }
}

TEST_CASE("convolution mass, moments and the balanced row") {
  for (int n : {8, 12, 20}) {
    const Die d = sampled(n, static_cast<std::uint64_t>(n));
    const ExactPmf pmf = convolve_exact(d, kConvolutionCap, 3);
    LatticeCount nn = 1;
    for (int i = 0; i < n; ++i) nn *= n;
    CHECK(pmf.total() == nn);
    CHECK(pmf.row_total(0) == LatticeCount(count_balanced(n)));
    BigInt mu = 0, mv = 0;
    for (long v = pmf.v_min(); v <= pmf.v_max(); v += ExactPmf::v_step)
      for (long u = pmf.u_min(); u <= pmf.u_max(); ++u) {
        const BigInt c(pmf.at(u, v));
        mu += c * u;
        mv += c * v;
      }
    CHECK(mu == 0);
    CHECK(mv == 0);
    CHECK(pmf.at(pmf.u_max() + 1, 0) == 0);
    CHECK(pmf.at(0, 1) == 0);
    const ExactPmf serial = convolve_exact(d);
    CHECK(std::equal(serial.cells().begin(), serial.cells().end(), pmf.cells().begin(), pmf.cells().end()));

    const JointPmf<double> fp = convolve<double>(lattice_law(d));
    CHECK(fp.total() == doctest::Approx(std::pow(static_cast<double>(n), n)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(convolve_exact(sampled(41, 0)), CapExceeded);
}

TEST_CASE("conditional beat probabilities") {
  const ConditionalBeat flat = conditional_beat_prob(Die::standard(7));
  CHECK(flat.a_beats == 0);
  CHECK(flat.tie == 1);
  CHECK(flat.b_beats == 0);

  for (int n = 3; n <= 5; ++n) {
    const ExactCensus census = exact_pairwise_stats(n, Model::balanced_sequence);
    for (const auto& s : census.standings) {
      const ConditionalBeat cb = conditional_beat_prob(s.die);
      CHECK(cb.a_beats == s.beats);
      CHECK(cb.tie == s.ties);
      CHECK(cb.b_beats == s.loses);
      CHECK(cb.a_beats + cb.tie + cb.b_beats == 1);
    }
  }
}

TEST_CASE("gaussian comparison") {
  CHECK(gaussian_compare(convolve_exact(Die::standard(10))).degenerate);
  for (std::uint64_t s = 0; s < 3; ++s) {
    const Die d = sampled(36, s);
    const LatticeLaw law = lattice_law(d);
    const GaussianFit fit = gaussian_compare(convolve_exact(d));
    REQUIRE_FALSE(fit.degenerate);
    const auto m = law.moment_sums();
    CHECK(fit.covariance(0, 0) == doctest::Approx(m(0, 0) / 4.0));
    CHECK(fit.covariance(0, 1) == doctest::Approx(m(0, 1) / 4.0));
    CHECK(fit.covariance(1, 1) == doctest::Approx(m(1, 1) / 4.0));
    const double det = fit.covariance.determinant();
    CHECK(fit.conditional_variance == doctest::Approx(det / fit.covariance(1, 1)));
    CHECK(fit.mode_relative_error < 0.15);
    CHECK(fit.symmetry_defect_normalized == doctest::Approx(fit.symmetry_defect / fit.p_v0));
    CHECK(fit.sup_error_row <= fit.reference_bound);
    CHECK(fit.p_v0 > 0);
  }
}

TEST_CASE("max-norm check") {
  CHECK_THROWS(maxnorm_check(Die::standard(1)));
  const MaxNormCheck flat = maxnorm_check(Die::standard(50));
  CHECK(flat.max_abs_g.doubled() == 0);
  CHECK(flat.passes);
  std::vector<int> heavy(100, 1);
  std::fill(heavy.begin() + 50, heavy.end(), 100);
  const MaxNormCheck h = maxnorm_check(Die(heavy));
  CHECK(h.max_abs_g.doubled() == 97);
  CHECK(h.bound == doctest::Approx(2 * std::sqrt(100 * std::log(100.0))));
  CHECK_FALSE(h.passes);
  const Die d = sampled(30, 4);
  long worst = 0;
  for (int j = 1; j <= 30; ++j) worst = std::max(worst, std::abs(oracle::g2(faces_of(d), j)));
  CHECK(maxnorm_check(d).max_abs_g.doubled() == worst);
}

TEST_CASE("tail check") {
  const TailCheck flat = tail_check(Die::standard(12), 1.0);
  CHECK(flat.tail_count == 0);
  CHECK(flat.holds);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Die d = sampled(24, s);
    const ExactPmf pmf = convolve_exact(d);
    for (double c : {1.0, 1.5}) {
      const TailCheck t = tail_check(pmf, d, c);
      CHECK(t.threshold == doctest::Approx(2 * c * 24 * std::sqrt(std::log(24.0))));
      CHECK(t.bound == doctest::Approx(2 * std::exp(-2 * c * c)));
      BigInt tail = 0;
      for (long v = pmf.v_min(); v <= pmf.v_max(); v += ExactPmf::v_step)
        for (long u = pmf.u_min(); u <= pmf.u_max(); ++u)
          if (std::abs(u) / 2.0 >= t.threshold) tail += BigInt(pmf.at(u, v));
      CHECK(t.tail_count == tail);
      CHECK(t.applicable == maxnorm_check(d).passes);
      if (t.applicable) CHECK(t.holds);
    }
    CHECK(tail_check(pmf, d, 1000.0).tail_count == 0);
  }
}
