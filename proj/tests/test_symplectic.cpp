#include <doctest.h>

#include <cmath>
#include <cstdint>

#include <gmono/errors.hpp>
#include <gmono/random.hpp>
#include <gmono/symplectic.hpp>

#include "helpers.hpp"

using namespace gmono;

TEST_SUITE("symplectic") {

TEST_CASE("symplectic_form structure") {
  const Eigen::MatrixXd j1 = symplectic_form(1);
  CHECK(j1(0, 0) == 0.0);
  CHECK(j1(0, 1) == 1.0);
  CHECK(j1(1, 0) == -1.0);
  CHECK(j1(1, 1) == 0.0);

  const Eigen::MatrixXd j3 = symplectic_form(3);
  REQUIRE(j3.rows() == 6);
  REQUIRE(j3.cols() == 6);
  CHECK((j3 + j3.transpose()).norm() == 0.0);
  CHECK((j3 * j3 + Eigen::MatrixXd::Identity(6, 6)).norm() == 0.0);
  // block-diagonal: no coupling between modes
  CHECK(j3.block<2, 2>(0, 2).norm() == 0.0);
  CHECK(j3.block<2, 2>(2, 4).norm() == 0.0);

  CHECK_THROWS_AS(symplectic_form(0), invalid_input);
  CHECK_THROWS_AS(symplectic_form(-2), invalid_input);
}

TEST_CASE("is_symplectic") {
  CHECK(is_symplectic(Eigen::MatrixXd::Identity(4, 4)));
  CHECK_FALSE(is_symplectic(2.0 * Eigen::MatrixXd::Identity(4, 4)));
  CHECK(is_symplectic(testutil::rotation(0.7)));
  CHECK(is_symplectic(testutil::squeezer(0.9)));
  CHECK(is_symplectic(testutil::two_mode_squeezer(0.6), 1e-10));
  for (int n : {1, 2, 4}) {
    const Eigen::MatrixXd s = random_symplectic(n, 1.0, 42 + n);
    CHECK(is_symplectic(s, 1e-9));
    CHECK(std::abs(s.determinant() - 1.0) < 1e-9);
  }
}

TEST_CASE("is_valid_cm") {
  CHECK(is_valid_cm(Eigen::MatrixXd::Identity(6, 6)));
  CHECK(is_valid_cm(testutil::tmsv_cm(1.0)));
  CHECK(is_valid_cm(1.7 * Eigen::MatrixXd::Identity(2, 2)));  // thermal
  CHECK_FALSE(is_valid_cm(0.5 * Eigen::MatrixXd::Identity(2, 2)));

  Eigen::MatrixXd asym = Eigen::MatrixXd::Identity(4, 4);
  asym(0, 1) = 0.3;
  CHECK_FALSE(is_valid_cm(asym));
}

TEST_CASE("symplectic_spectrum closed forms") {
  Eigen::MatrixXd th = Eigen::MatrixXd::Zero(4, 4);
  th.diagonal() << 2.5, 2.5, 1.2, 1.2;
  const auto nu = symplectic_spectrum(th);
  REQUIRE(nu.size() == 2);
  CHECK(nu[0] == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(nu[1] == doctest::Approx(2.5).epsilon(1e-12));

  for (double v : symplectic_spectrum(testutil::tmsv_cm(0.8)))
    CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("spectrum is a symplectic invariant") {
  Eigen::MatrixXd th = Eigen::MatrixXd::Zero(6, 6);
  th.diagonal() << 1.3, 1.3, 2.0, 2.0, 3.7, 3.7;
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const Eigen::MatrixXd s = random_symplectic(3, 1.2, seed);
    const auto nu = symplectic_spectrum(s * th * s.transpose());
    REQUIRE(nu.size() == 3);
    CHECK(nu[0] == doctest::Approx(1.3).epsilon(1e-9));
    CHECK(nu[1] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(nu[2] == doctest::Approx(3.7).epsilon(1e-9));
  }
}

TEST_CASE("random_symplectic determinism") {
  const Eigen::MatrixXd s1 = random_symplectic(2, 1.0, 99);
  const Eigen::MatrixXd s2 = random_symplectic(2, 1.0, 99);
  CHECK((s1 - s2).norm() == 0.0);
  const Eigen::MatrixXd s3 = random_symplectic(2, 1.0, 100);
  CHECK((s1 - s3).norm() > 1e-6);
}

TEST_CASE("orthogonal_symplectic from a Haar unitary") {
  Rng rng(17);
  const Eigen::MatrixXcd u = random_unitary(3, rng);
  CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-12);
  const Eigen::MatrixXd k = orthogonal_symplectic(u);
  CHECK((k * k.transpose() - Eigen::MatrixXd::Identity(6, 6)).norm() < 1e-12);
  CHECK(is_symplectic(k, 1e-12));
}

TEST_CASE("rng stream properties") {
  Rng a(123), b(123);
  for (int i = 0; i < 32; ++i) CHECK(a.uniform() == b.uniform());

  Rng c(7);
  double mean = 0.0, second = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double x = c.normal();
    mean += x;
    second += x * x;
  }
  mean /= n;
  second /= n;
  CHECK(std::abs(mean) < 0.03);
  CHECK(std::abs(second - 1.0) < 0.05);

  Rng d(8);
  bool in_range = true;
  for (int i = 0; i < 4096; ++i) {
    const double u = d.uniform();
    in_range = in_range && u >= 0.0 && u < 1.0;
  }
  CHECK(in_range);
  Rng e(9);
  const double lo = e.uniform(-3.0, 5.0);
  CHECK(lo >= -3.0);
  CHECK(lo < 5.0);
}

}  // TEST_SUITE
