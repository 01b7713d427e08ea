#include <doctest.h>

#include <algorithm>
#include <set>

#include "mhg/automorphism.hpp"
#include "mhg/burnside.hpp"
#include "mhg/canonical.hpp"
#include "mhg/enumeration.hpp"
#include "oracles.hpp"

using namespace mhg;

namespace {

std::multiset<std::vector<std::uint8_t>> raw_set(const std::vector<MetricSpace>& v) {
  std::multiset<std::vector<std::uint8_t>> out;
  for (const auto& s : v) out.insert(s.upper_triangle());
  return out;
}

}  // namespace

TEST_SUITE("enumeration") {

TEST_CASE("labeled enumerations agree with the naive sweep") {
  for (auto cls : {ClassId::A1, ClassId::A2})
    for (std::size_t n = 0; n <= 5; ++n) {
      const auto naive = oracle::members(n, cls);
      CHECK(raw_set(enumerate_labeled_oracle(n, cls)) == raw_set(naive));
      CHECK(raw_set(enumerate_labeled_structured(n, cls)) == raw_set(naive));
      CHECK(count_labeled_exact(n, cls) == naive.size());
      CHECK(count_oracle(n, cls, CountMode::labeled) == naive.size());
    }
}

TEST_CASE("labeled counts") {
  const std::vector<int> a1{1, 1, 3, 10, 38, 156, 692};
  const std::vector<int> a2{1, 1, 3, 13, 81, 721, 9153};
  for (std::size_t n = 0; n < a1.size(); ++n) {
    CHECK(count_labeled_exact(n, ClassId::A1) == a1[n]);
    CHECK(count_labeled_exact(n, ClassId::A2) == a2[n]);
  }
  CHECK(count_labeled_paper(4, ClassId::A1) == 59);
  CHECK(count_labeled_paper(4, ClassId::A2) == 129);
  CHECK(count_labeled_paper(3, ClassId::A1) == 10);
}

TEST_CASE("paper labeled sums double the balanced term only") {
  for (auto cls : {ClassId::A1, ClassId::A2})
    for (std::size_t n = 1; n <= 12; ++n) {
      const BigInt diff = count_labeled_paper(n, cls) - count_labeled_exact(n, cls);
      if (n % 2 == 1) {
        CHECK(diff == 0);
        continue;
      }
      const std::size_t k = n / 2;
      BigInt cross = 0;
      if (cls == ClassId::A2) {
        cross = pow2(k * k);
      } else {
        for (std::size_t j = 0; j <= k; ++j) cross += a1_cross_count(k, k, j);
      }
      CHECK(diff == binomial(n, k) * cross / 2);
    }
  CHECK(a1_cross_count(2, 2, 1) == 4);
  CHECK(a1_cross_count(2, 3, 2) == 6);
}

TEST_CASE("unlabeled counts") {
  const std::vector<int> a1{1, 1, 3, 3, 6, 6, 10, 10};
  for (std::size_t n = 0; n < a1.size(); ++n) {
    CHECK(count_unlabeled_exact(n, ClassId::A1) == a1[n]);
    CHECK(count_unlabeled_paper(n, ClassId::A1) == a1[n]);
  }
  CHECK(count_unlabeled_exact(5, ClassId::A2) == 19);
  CHECK(count_unlabeled_paper(5, ClassId::A2) == 16);
  CHECK(count_unlabeled_exact(3, ClassId::A2) == 4);
  CHECK(count_unlabeled_exact(4, ClassId::A2) == 11);
  for (auto cls : {ClassId::A1, ClassId::A2})
    for (std::size_t n = 0; n <= 5; ++n) {
      CHECK(count_unlabeled_exact(n, cls) == oracle::classes(oracle::members(n, cls)));
      CHECK(count_oracle(n, cls, CountMode::unlabeled) == count_unlabeled_exact(n, cls));
    }
  CHECK_NOTHROW(count_unlabeled_exact(kBurnsideMaxN, ClassId::A2));
  CHECK_THROWS_AS(count_unlabeled_exact(kBurnsideMaxN + 1, ClassId::A2), CapacityError);
  CHECK(count_unlabeled_exact(400, ClassId::A1) == 201 * 202 / 2);
}

TEST_CASE("oracle guard") {
  CHECK_THROWS_AS(enumerate_labeled_oracle(kOracleMaxN + 1, ClassId::A1), CapacityError);
  CHECK_THROWS_AS(count_oracle(kOracleMaxN + 1, ClassId::A2, CountMode::labeled), CapacityError);
}

TEST_CASE("isometry-class descriptors") {
  for (auto cls : {ClassId::A1, ClassId::A2})
    for (std::size_t n = 0; n <= 8; ++n) {
      const auto ds = enumerate_unlabeled(n, cls);
      CHECK(ds.size() == count_unlabeled_exact(n, cls));
      std::set<CanonicalKey> keys;
      BigInt weight = 0;
      for (const auto& d : ds) {
        CHECK(validate(d.representative, cls));
        CHECK(d.representative.size() == n);
        keys.insert(canonical_form(d.representative));
        weight += d.labeled_weight();
        if (n <= 7) CHECK(d.aut_order == automorphism_count(d.representative));
      }
      CHECK(keys.size() == ds.size());
      CHECK(weight == count_labeled_exact(n, cls));
    }
  const auto a1 = enumerate_unlabeled(5, ClassId::A1);
  REQUIRE(a1.size() == 6);
  std::set<std::pair<std::size_t, std::size_t>> kj;
  for (const auto& d : a1) kj.insert({d.k, *d.j});
  CHECK(kj == std::set<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}});
  CHECK(enumerate_unlabeled(9, ClassId::A2).size() == count_unlabeled_exact(9, ClassId::A2));
  CHECK_THROWS_AS(enumerate_unlabeled(kUnlabeledA2MaxN + 1, ClassId::A2), CapacityError);
}

TEST_CASE("count reports") {
  const auto r = make_count_report(5, ClassId::A2, CountMode::unlabeled, {true, true, true});
  CHECK(*r.paper == 16);
  CHECK(*r.exact == 19);
  CHECK(*r.oracle == 19);
  CHECK(r.agrees_paper() == false);
  CHECK(r.agrees_oracle() == true);
  const auto l = make_count_report(3, ClassId::A2, CountMode::labeled, {false, true, true});
  CHECK_FALSE(l.agrees_paper().has_value());
  CHECK(l.agrees_oracle() == true);
  const auto f = make_count_report(5, ClassId::A1, CountMode::unlabeled, {true, false, false});
  CHECK(*f.paper == 6);
  CHECK_FALSE(f.agrees_paper().has_value());
  CHECK(parse_mode("labeled") == CountMode::labeled);
  CHECK_FALSE(parse_mode("both").has_value());
}

}  // TEST_SUITE
