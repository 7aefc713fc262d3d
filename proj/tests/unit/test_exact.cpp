#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lcycle/exact.hpp"

using namespace lcycle;

namespace {

Rational brute_at(const BruteForceResult& b, std::int64_t k) {
  auto it = b.dist.find(k);
  return it == b.dist.end() ? Rational(0) : it->second;
}

double to_d(const Float200& x) { return static_cast<double>(x); }

}  // namespace

TEST_CASE("brute force on tiny graphs") {
  BruteForceResult a = brute_force_dist(4, 3, LengthSet::finite({3}));
  CHECK(brute_at(a, 1) == Rational(4, 20));
  CHECK(brute_at(a, 0) == Rational(16, 20));
  CHECK(a.p_complex == 0);
  CHECK(a.edge_sets == 20);

  BruteForceResult b = brute_force_dist(3, 3, LengthSet::finite({3}));
  CHECK(brute_at(b, 1) == 1);
  CHECK(brute_at(b, 0) == 0);

  BruteForceResult c = brute_force_dist(4, 3, LengthSet::finite({4}));
  CHECK(brute_at(c, 0) == 1);

  BruteForceResult d = brute_force_dist(6, 5, LengthSet::finite({3}));
  CHECK(brute_at(d, 0) == Rational(591, 1001));
  CHECK(brute_at(d, 1) == Rational(380, 1001));
  CHECK(d.p_complex == Rational(30, 1001));

  BruteForceResult e = brute_force_dist(5, 4, LengthSet::finite({3, 4}));
  CHECK(brute_at(e, 0) == Rational(25, 42));
  CHECK(brute_at(e, 1) == Rational(17, 42));
}

TEST_CASE("brute force guards") {
  CHECK_THROWS_AS(brute_force_dist(9, 3, LengthSet::finite({3})), std::domain_error);
  // C(28, 14) = 40116600 edge sets.
  CHECK_THROWS_AS(brute_force_dist(8, 14, LengthSet::finite({3})), std::domain_error);
  CHECK_THROWS_AS(brute_force_dist(4, 7, LengthSet::finite({3})), std::domain_error);
}

TEST_CASE("generating-function probabilities") {
  const auto L3 = LengthSet::finite({3});
  CHECK(egf_prob(4, 3, L3, 1) == Rational(1, 5));
  CHECK(egf_prob(4, 3, L3, 0) == Rational(4, 5));
  CHECK(egf_prob(4, 3, L3, 2) == 0);
  CHECK(egf_prefactor(4, 3) == Rational(24, 20));
  CHECK(egf_prob(30, 9, L3, 0) == Rational(BigInt("3166806286665"), BigInt("3247423463786")));
  CHECK(egf_prob(30, 9, L3, 1) == Rational(BigInt("39717448110"), BigInt("1623711731893")));
  CHECK(egf_prob(30, 9, L3, 2) == Rational(BigInt("82489500"), BigInt("1623711731893")));
  auto dist = egf_dist(6, 5, L3);
  REQUIRE(dist.size() == 3);
  CHECK(dist[0] == Rational(591, 1001));
  CHECK(dist[1] == Rational(380, 1001));
  CHECK(dist[2] == 0);
}

TEST_CASE("generating-function guards") {
  const auto L3 = LengthSet::finite({3});
  CHECK_THROWS_AS(egf_prob(5, 6, L3, 0), std::domain_error);
  CHECK_THROWS_AS(egf_prob(5, 2, L3, -1), std::domain_error);
  CHECK_THROWS_AS(egf_prob(kMaxSeriesOrder + 1, 2, L3, 0), std::domain_error);
  CHECK(egf_prob(5, 2, LengthSet::finite({}), 0) == 1);
  CHECK(egf_prob(5, 2, LengthSet::finite({}), 1) == 0);
}

TEST_CASE("the two exact routes agree for n <= 7") {
  const std::vector<LengthSet> sets = {LengthSet::finite({3}), LengthSet::finite({3, 4}),
                                       LengthSet::all_at_least()};
  for (std::int64_t n = 1; n <= 7; ++n) {
    const auto pairs = n * (n - 1) / 2;
    for (std::int64_t m = 0; m <= std::min(n, pairs); ++m) {
      for (const auto& L : sets) {
        BruteForceResult b = brute_force_dist(n, m, L);
        auto dist = egf_dist(n, m, L);
        Rational total = 0;
        for (std::size_t k = 0; k < dist.size(); ++k) {
          CHECK(dist[k] == brute_at(b, static_cast<std::int64_t>(k)));
          total += dist[k];
        }
        for (const auto& [k, p] : b.dist) CHECK(k < static_cast<std::int64_t>(dist.size()));
        CHECK(total == b.p_no_complex());
      }
    }
  }
}

TEST_CASE("support ends at n / min L") {
  for (std::int64_t k = 0; k <= 6; ++k) {
    const Rational p = egf_prob(12, 10, LengthSet::finite({4, 5}), k);
    // Three 4-cycles would need 12 edges.
    if (k <= 2) CHECK(p > 0);
    else CHECK(p == 0);
  }
  CHECK(egf_prob(12, 10, LengthSet::all_at_least(7), 2) == 0);
}

TEST_CASE("critical formula at r = 0 is the exact one") {
  CHECK(std::abs(to_d(egf_prob_critical(4, 3, LengthSet::finite({3}), 1, 0)) - 0.2) <= 1e-15);
  const auto L = LengthSet::all_at_least();
  for (std::int64_t k = 0; k <= 2; ++k) {
    const double exact = to_double(egf_prob(30, 15, L, k));
    CHECK(to_d(egf_prob_critical(30, 15, L, k, 0)) == doctest::Approx(exact).epsilon(1e-14));
  }
  CHECK_THROWS_AS(egf_prob_critical(100, 50, L, 0, 5), std::domain_error);
  CHECK_THROWS_AS(egf_prob_critical(100, 50, L, 0, -1), std::domain_error);
}

TEST_CASE("critical formula at n = 100") {
  const auto L = LengthSet::all_at_least();
  auto table = egf_critical_table(100, 50, L, 33, 4);
  REQUIRE(table.size() == 5);
  const double k0[] = {0.630415368, 0.164428726, 0.0634658104, 0.0245372697, 0.00920773647};
  const double k1[] = {0.287283699, 0.0209916738, 0.00482429498, 0.00129012495, 0.000358355886};
  const double per_r[] = {0.943568985, 0.186324751, 0.0684239376, 0.0258529022, 0.009571414};
  double total = 0;
  for (std::size_t r = 0; r <= 4; ++r) {
    CHECK(to_d(table[r][0]) == doctest::Approx(k0[r]).epsilon(1e-8));
    CHECK(to_d(table[r][1]) == doctest::Approx(k1[r]).epsilon(1e-8));
    double s = 0;
    for (const auto& v : table[r]) s += to_d(v);
    CHECK(s == doctest::Approx(per_r[r]).epsilon(1e-8));
    total += s;
    CHECK(to_d(egf_prob_critical(100, 50, L, 1, static_cast<std::int64_t>(r))) ==
          doctest::Approx(k1[r]).epsilon(1e-8));
  }
  // The r = 0 term is exact.
  CHECK(to_d(table[0][0]) == doctest::Approx(to_double(egf_prob(100, 50, L, 0))).epsilon(1e-14));
  // Weight of r = 0 against the limiting excess law, √(2/3) = 0.8165.
  CHECK(std::abs(per_r[0] / total - std::sqrt(2.0 / 3.0)) <= 0.1);
  // The surrogate overcounts complex components at this size; r <= n^{1/3} allows only r <= 4.
  CHECK(total > 1.0);
  CHECK(total < 1.3);
}
