#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "markovgeo/errors.hpp"
#include "markovgeo/families.hpp"
#include "markovgeo/info_geometry.hpp"
#include "markovgeo/numerics.hpp"
#include "markovgeo/reversibility.hpp"
#include "markovgeo/sampling.hpp"

using namespace markovgeo;

TEST_CASE("the uniform kernel belongs to every family") {
  Kernel uniform = validate_kernel(Eigen::MatrixXd::Constant(3, 3, 1.0 / 3));
  for (FamilyTag tag : {FamilyTag::reversible, FamilyTag::symmetric,
                        FamilyTag::bistochastic, FamilyTag::memoryless})
    CHECK(family_membership(uniform, tag));
}

TEST_CASE("the biased lazy cycle is bistochastic only") {
  Kernel p = lazy_cycle_kernel(3, 0.0, std::log(2.0));
  CHECK(family_membership(p, FamilyTag::bistochastic));
  CHECK_FALSE(family_membership(p, FamilyTag::reversible));
  CHECK_FALSE(family_membership(p, FamilyTag::symmetric));
  CHECK_FALSE(family_membership(p, FamilyTag::memoryless));
}

TEST_CASE("memoryless kernels are reversible") {
  Rng rng(60);
  for (int trial = 0; trial < 10; ++trial) {
    Kernel p = random_memoryless_kernel(4, rng);
    CHECK(family_membership(p, FamilyTag::memoryless));
    CHECK(family_membership(p, FamilyTag::reversible));
  }
}

TEST_CASE("membership implications on random ensembles") {
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    Kernel sym = random_symmetric_kernel(4, rng);
    CHECK(family_membership(sym, FamilyTag::bistochastic));
    CHECK(family_membership(sym, FamilyTag::reversible));

    Kernel any = trial % 2 == 0 ? random_kernel(4, rng)
                                : random_bistochastic_kernel(4, rng);
    bool rev = family_membership(any, FamilyTag::reversible);
    bool bis = family_membership(any, FamilyTag::bistochastic);
    if (rev && bis) CHECK(family_membership(any, FamilyTag::symmetric));
  }
}

TEST_CASE("flattening the uniform two-state measure") {
  EdgeMeasure q = validate_edge_measure(Eigen::MatrixXd::Constant(2, 2, 0.25));
  SimplexPoint point = flatten_reversible(q);
  REQUIRE(point.size() == 3);
  CHECK(point(0) == doctest::Approx(0.25));
  CHECK(point(1) == doctest::Approx(0.25));
  CHECK(point(2) == doctest::Approx(0.5));
}

TEST_CASE("flatten and unflatten are inverse and measure preserving") {
  Rng rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    Kernel p = random_reversible_kernel(4, rng);
    EdgeMeasure q = edge_measure(p);
    SimplexPoint point = flatten_reversible(q);
    CHECK(point.sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(point.minCoeff() > 0.0);
    EdgeMeasure back = unflatten_reversible(point, 4);
    CHECK((back.matrix - q.matrix).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("flattening rejects asymmetric measures") {
  Rng rng(63);
  Kernel p = lazy_cycle_kernel(3, 0.0, std::log(2.0));
  CHECK_THROWS_AS(flatten_reversible(edge_measure(p)), error);
}

TEST_CASE("the counterexample pair breaks the e-geodesic balance") {
  auto [q0, q1, midpoint] = counterexample_edge_measures();
  CHECK(q0.matrix(0, 0) == doctest::Approx(1.0 / 14.0).epsilon(1e-14));
  CHECK(q0.matrix(2, 1) == doctest::Approx(3.0 / 14.0).epsilon(1e-14));
  CHECK(q1.matrix(0, 1) == doctest::Approx(3.0 / 14.0).epsilon(1e-14));
  CHECK(marginal_imbalance(q0.matrix) <= 1e-14);
  CHECK(marginal_imbalance(q1.matrix) <= 1e-14);
  CHECK(midpoint.sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(marginal_imbalance(midpoint) > 1e-3);
  // midpoint entries are proportional to sqrt(q0 o q1)
  CHECK(midpoint(0, 1) / midpoint(0, 0) == doctest::Approx(std::sqrt(3.0)));
  CHECK(midpoint(1, 0) / midpoint(0, 0) == doctest::Approx(2.0));
}

TEST_CASE("ehull rank experiment") {
  auto [rank3, expected3] = ehull_rank_experiment(3, 40, 7);
  CHECK(rank3 == 8);
  CHECK(expected3 == 8);
  auto [rank4, expected4] = ehull_rank_experiment(4, 40, 7);
  CHECK(rank4 == 13);
  CHECK(expected4 == 13);
  CHECK_THROWS_AS(ehull_rank_experiment(2, 10, 7), error);
}

TEST_CASE("generator recovery from the hull kernels is exact") {
  CHECK(ehull_generator_recovery_error(3, 0.25) <= 1e-12);
  CHECK(ehull_generator_recovery_error(4, 0.25) <= 1e-12);
  CHECK(ehull_generator_recovery_error(5, 0.1) <= 1e-12);
}

TEST_CASE("mhull basis experiment") {
  CHECK(mhull_basis_experiment(3, 0.01));
  CHECK(mhull_basis_rank(3, 0.01) == 6);
  CHECK(mhull_basis_experiment(3, 0.0));  // the exact proof basis
  // near the uniform corner the flattened measures collapse numerically;
  // the rank first drops around eps = 1 - 1e-4 at the 1e-8 threshold
  CHECK_FALSE(mhull_basis_experiment(3, 0.9999));
}

TEST_CASE("iid coordinates characterize memoryless kernels") {
  Rng rng(64);
  Kernel p = random_memoryless_kernel(4, rng);
  auto [first, second] = iid_family_coordinates(p);
  CHECK(second.cwiseAbs().maxCoeff() <= 1e-12);
  Distribution pi = stationary_distribution(p);
  for (int i = 0; i < 3; ++i)
    CHECK(first(i) == doctest::Approx(std::log(pi(i) / pi(3))).epsilon(1e-10));

  Kernel uniform = validate_kernel(Eigen::MatrixXd::Constant(3, 3, 1.0 / 3));
  auto [ufirst, usecond] = iid_family_coordinates(uniform);
  CHECK(ufirst.cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(usecond.cwiseAbs().maxCoeff() <= 1e-14);

  Kernel biased = lazy_cycle_kernel(3, 0.0, std::log(2.0));
  auto [bfirst, bsecond] = iid_family_coordinates(biased);
  CHECK(bsecond.cwiseAbs().maxCoeff() > 0.1);
}

TEST_CASE("m-geodesics leave the memoryless family") {
  // two-point mixture construction with p != 1/2
  const double p = 0.3;
  auto iid = [](const Eigen::VectorXd& pi) {
    Eigen::MatrixXd k(pi.size(), pi.size());
    for (int x = 0; x < pi.size(); ++x) k.row(x) = pi.transpose();
    return validate_kernel(k);
  };
  Eigen::VectorXd pi0(2), pi1(2);
  pi0 << p, 1 - p;
  pi1 << 1 - p, p;
  Kernel mid = m_geodesic(iid(pi0), iid(pi1), 0.5);
  CHECK_FALSE(family_membership(mid, FamilyTag::memoryless));
  CHECK(mid.matrix(0, 0) == doctest::Approx(p * p + (1 - p) * (1 - p)));

  Eigen::VectorXd rho0(3), rho1(3);
  rho0 << p / 2, (1 - p) / 2, 0.5;
  rho1 << (1 - p) / 2, p / 2, 0.5;
  Kernel mid3 = m_geodesic(iid(rho0), iid(rho1), 0.5);
  CHECK_FALSE(family_membership(mid3, FamilyTag::memoryless));
  auto [first, second] = iid_family_coordinates(mid3);
  CHECK(second.cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("m-geodesics between symmetric kernels stay symmetric") {
  Rng rng(65);
  for (int trial = 0; trial < 10; ++trial) {
    Kernel p0 = random_symmetric_kernel(4, rng);
    Kernel p1 = random_symmetric_kernel(4, rng);
    for (double t : {0.25, 0.5, 0.75})
      CHECK(family_membership(m_geodesic(p0, p1, t), FamilyTag::symmetric));
  }
}

TEST_CASE("tangent ranks at m = 3 match the dimension table") {
  const int m = 3;
  Rng rng(66);
  auto shifts = shift_space_basis(EdgeSet::full(m));

  auto log_rank = [&](auto sampler) {
    const int samples = 30;
    Eigen::MatrixXd stacked(samples + shifts.size(), m * m);
    for (int s = 0; s < samples; ++s)
      stacked.row(s) =
          sampler().matrix.array().log().matrix().reshaped().transpose();
    for (std::size_t n = 0; n < shifts.size(); ++n)
      stacked.row(samples + n) = shifts[n].reshaped().transpose();
    return numerical_rank(stacked) - m;
  };
  auto measure_rank = [&](auto sampler) {
    const int samples = 30;
    Eigen::MatrixXd base = edge_measure(sampler()).matrix;
    Eigen::MatrixXd stacked(samples, m * m);
    for (int s = 0; s < samples; ++s)
      stacked.row(s) =
          (edge_measure(sampler()).matrix - base).reshaped().transpose();
    return numerical_rank(stacked);
  };

  CHECK(log_rank([&] { return random_reversible_kernel(m, rng); }) == 5);
  CHECK(log_rank([&] { return random_memoryless_kernel(m, rng); }) == 2);
  CHECK(measure_rank([&] { return random_symmetric_kernel(m, rng); }) == 3);
  CHECK(measure_rank([&] { return random_bistochastic_kernel(m, rng); }) == 4);
}
