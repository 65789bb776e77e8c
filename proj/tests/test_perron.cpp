#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "markovgeo/errors.hpp"
#include "markovgeo/perron.hpp"
#include "markovgeo/reversibility.hpp"
#include "markovgeo/sampling.hpp"

using namespace markovgeo;

namespace {

// Tail-windowed Cesaro average of (h/rho)^k, the independent oracle for the
// PF projection on aperiodic inputs.
Eigen::MatrixXd cesaro_projection(const Eigen::MatrixXd& h, double rho,
                                  int total = 10000) {
  const int m = static_cast<int>(h.rows());
  Eigen::MatrixXd scaled = h / rho;
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(m, m);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(m, m);
  int counted = 0;
  for (int k = 0; k <= total; ++k) {
    if (k > total / 2) {
      sum += power;
      ++counted;
    }
    power = scaled * power;
  }
  return sum / counted;
}

}  // namespace

TEST_CASE("pf_data on a row-stochastic matrix") {
  Rng rng(10);
  Kernel k = random_kernel(4, rng);
  PFData pf = pf_data(as_positive_function(k));
  CHECK(pf.rho == doctest::Approx(1.0).epsilon(1e-12));
  for (int x = 0; x < 4; ++x)
    CHECK(pf.right(x) == doctest::Approx(1.0).epsilon(1e-11));
  Distribution pi = stationary_distribution(k);
  for (int x = 0; x < 4; ++x)
    CHECK(pf.left(x) == doctest::Approx(pi(x)).epsilon(1e-10));
}

TEST_CASE("pf_data on the periodic 2x2 flip") {
  Eigen::MatrixXd h(2, 2);
  h << 0, 2, 2, 0;
  PFData pf = pf_data(make_positive_function(h));
  CHECK(pf.rho == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(pf.right(0) == doctest::Approx(1.0));
  CHECK(pf.right(1) == doctest::Approx(1.0));
  CHECK(pf.projection(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pf.projection(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pf.projection(1, 0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pf_data eigen residuals stay small") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int m = 3 + static_cast<int>(rng() % 3);
    PositiveEdgeFunction h = random_reversible_function(m, rng);
    PFData pf = pf_data(h);
    double right_res =
        (h.matrix * pf.right - pf.rho * pf.right).cwiseAbs().maxCoeff();
    double left_res =
        (h.matrix.transpose() * pf.left - pf.rho * pf.left).cwiseAbs().maxCoeff();
    CHECK(right_res / pf.rho <= 1e-10);
    CHECK(left_res / pf.rho <= 1e-10);
    CHECK(pf.left.dot(pf.right) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("stochastic_rescale is the identity on kernels") {
  Rng rng(12);
  Kernel k = random_kernel(5, rng);
  Kernel rescaled = stochastic_rescale(as_positive_function(k));
  CHECK((k.matrix - rescaled.matrix).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("stochastic_rescale of a symmetric exponential is reversible") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::MatrixXd s(4, 4);
    for (int x = 0; x < 4; ++x)
      for (int xp = x; xp < 4; ++xp) s(x, xp) = s(xp, x) = uniform(rng, -1, 1);
    Kernel k = stochastic_rescale(
        make_positive_function(s.array().exp().matrix()));
    CHECK(is_reversible_balance(k));
  }
}

TEST_CASE("stochastic_rescale ignores scalar multiples and shifts") {
  Rng rng(14);
  Kernel k = random_kernel(4, rng);
  PositiveEdgeFunction doubled{2.0 * k.matrix, k.support};
  CHECK((stochastic_rescale(doubled).matrix - k.matrix).cwiseAbs().maxCoeff() <=
        1e-10);

  for (int trial = 0; trial < 10; ++trial) {
    PositiveEdgeFunction h = random_reversible_function(4, rng);
    Eigen::VectorXd f(4);
    for (int x = 0; x < 4; ++x) f(x) = uniform(rng, -1, 1);
    double c = uniform(rng, -1, 1);
    Eigen::MatrixXd shifted(4, 4);
    for (int x = 0; x < 4; ++x)
      for (int xp = 0; xp < 4; ++xp)
        shifted(x, xp) = h.matrix(x, xp) * std::exp(f(xp) - f(x) + c);
    Kernel a = stochastic_rescale(h);
    Kernel b = stochastic_rescale(make_positive_function(shifted));
    CHECK((a.matrix - b.matrix).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("pf_projection of a doubly stochastic matrix is flat") {
  Rng rng(15);
  Kernel k = random_bistochastic_kernel(4, rng);
  Eigen::MatrixXd proj = pf_projection(as_positive_function(k));
  CHECK((proj.array() - 0.25).abs().maxCoeff() <= 1e-10);
}

TEST_CASE("pf_projection matches the Cesaro oracle on random matrices") {
  Rng rng(16);
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::MatrixXd h(4, 4);
    for (int x = 0; x < 4; ++x)
      for (int xp = 0; xp < 4; ++xp) h(x, xp) = uniform(rng, 0.2, 1.0);
    PFData pf = pf_data(make_positive_function(h));
    Eigen::MatrixXd oracle = cesaro_projection(h, pf.rho);
    CHECK((pf.projection - oracle).cwiseAbs().maxCoeff() <= 1e-6);
  }
}

TEST_CASE("rho is 1 exactly for row-stochastic inputs") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    Kernel k = random_kernel(3 + static_cast<int>(rng() % 3), rng);
    CHECK(std::abs(pf_data(as_positive_function(k)).rho - 1.0) <= 1e-10);
  }
}

TEST_CASE("basis-tilted matrix of a reversible kernel") {
  Rng rng(18);
  Kernel p = random_reversible_kernel(4, rng);
  const int m = 4;
  const double anchor = p.matrix(m - 1, 0) * p.matrix(0, m - 1);
  Eigen::MatrixXd h(m, m);
  for (int x = 0; x < m; ++x)
    for (int xp = 0; xp < m; ++xp)
      h(x, xp) = std::sqrt(p.matrix(x, xp) * p.matrix(xp, x) / anchor);
  PFData pf = pf_data(make_positive_function(h));
  CHECK(pf.rho == doctest::Approx(1.0 / std::sqrt(anchor)).epsilon(1e-10));
  Distribution pi = stationary_distribution(p);
  Eigen::VectorXd expected = pi.cwiseSqrt();
  expected /= expected.maxCoeff();
  CHECK((pf.right - expected).cwiseAbs().maxCoeff() <= 1e-10);
}
