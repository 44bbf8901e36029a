#include <set>
#include <vector>

#include "cvf/error.hpp"
#include "cvf/finite_field.hpp"
#include "cvf/random.hpp"
#include "doctest.h"

using namespace cvf;

namespace {

FqElem el(const FieldRef& f, const char* text) { return FqElem::parse(f, text); }

std::vector<FqElem> all_elements(const FieldRef& f) {
  const std::uint64_t q = *f->order();
  std::vector<FqElem> out;
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    Coords c{};
    std::uint64_t r = idx;
    for (unsigned i = 0; i < f->n(); ++i) {
      c[i] = static_cast<std::uint32_t>(r % f->p());
      r /= f->p();
    }
    out.push_back(FqElem::from_coords(f, std::span<const std::uint32_t>(c.data(), f->n())));
  }
  return out;
}

// Exhaustive factor search: f has no monic factor of degree 1..deg/2.
bool irreducible_by_trial_division(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::vector<std::uint32_t> g(d + 1, 0);
    g[d] = 1;
    for (;;) {
      // remainder of f by g
      std::vector<std::uint64_t> r(f.begin(), f.end());
      for (std::size_t i = n; i >= d; --i) {
        const std::uint64_t c = r[i] % p;
        for (std::size_t j = 0; j <= d; ++j) r[i - d + j] = (r[i - d + j] + p * p - c * g[j] % p) % p;
        if (i == d) break;
      }
      bool divides = true;
      for (std::size_t i = 0; i < d; ++i) divides = divides && r[i] % p == 0;
      if (divides) return false;
      std::size_t k = 0;
      while (k < d && ++g[k] == p) g[k++] = 0;
      if (k == d) break;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("field construction") {
  CHECK_THROWS_AS(FieldDesc::make(4), Error);
  CHECK_THROWS_AS(FieldDesc::make(2, 9), Error);
  CHECK_THROWS_AS(FieldDesc::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), Error);  // (u+1)^2
  CHECK(FieldDesc::make(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(FieldDesc::make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(FieldDesc::make(2, 2)->describe() == "F_2^2 = F_2[u]/(u^2+u+1)");
  CHECK_NOTHROW(FieldDesc::make(kMaxCharacteristic));
  CHECK_NOTHROW(FieldDesc::make(kMaxCharacteristic, 2));
}

TEST_CASE("Rabin's test agrees with exhaustive factor search") {
  for (auto [p, maxdeg] : {std::pair{2u, 7u}, std::pair{3u, 4u}, std::pair{5u, 3u}}) {
    for (unsigned n = 2; n <= maxdeg; ++n) {
      std::vector<std::uint32_t> f(n + 1, 0);
      f[n] = 1;
      for (;;) {
        CHECK(is_irreducible_mod_p(f, p) == irreducible_by_trial_division(f, p));
        unsigned k = 0;
        while (k < n && ++f[k] == p) f[k++] = 0;
        if (k == n) break;
      }
    }
  }
}

TEST_CASE("arithmetic examples") {
  auto f2 = FieldDesc::make(2);
  auto f3 = FieldDesc::make(3);
  auto f4 = FieldDesc::make(2, 2);
  CHECK((el(f2, "1") + el(f2, "1")).is_zero());
  CHECK(el(f4, "u") * el(f4, "u") == el(f4, "u+1"));
  CHECK(el(f3, "2").inv() == el(f3, "2"));
  CHECK_THROWS_AS(FqElem(f3).inv(), Error);
  CHECK_THROWS_AS(el(f2, "1") + el(f3, "1"), Error);
  // Structurally identical descriptors interoperate.
  CHECK(el(f4, "u") + el(FieldDesc::make(2, 2), "u") == FqElem(f4));
}

TEST_CASE("frobenius, p-th root and trace examples") {
  auto f2 = FieldDesc::make(2);
  auto f4 = FieldDesc::make(2, 2);
  auto f7 = FieldDesc::make(7);
  CHECK(el(f4, "u").frobenius() == el(f4, "u+1"));
  CHECK(FqElem(f4).frobenius().is_zero());
  for (int x = 0; x < 7; ++x) CHECK(FqElem::from_int(f7, x).frobenius() == FqElem::from_int(f7, x));
  CHECK(el(f4, "u").pth_root() == el(f4, "u+1"));
  CHECK(el(f2, "1").pth_root() == el(f2, "1"));
  CHECK(FqElem(f4).pth_root().is_zero());
  CHECK(el(f2, "1").trace_to_prime() == el(f2, "1"));
  CHECK(el(f4, "u").trace_to_prime() == el(f4, "1"));
  CHECK(el(f4, "1").trace_to_prime().is_zero());
}

TEST_CASE("residue Artin-Schreier solver examples") {
  auto f2 = FieldDesc::make(2);
  auto f4 = FieldDesc::make(2, 2);
  auto f5 = FieldDesc::make(5);
  CHECK_FALSE(as_solve_residue(el(f2, "1")).has_value());
  auto sol = as_solve_residue(el(f4, "1"));
  REQUIRE(sol.has_value());
  auto all = sol->all();
  std::set<std::string> got;
  for (const auto& y : all) got.insert(y.str());
  CHECK(got == std::set<std::string>{"u", "u+1"});
  auto zero = as_solve_residue(FqElem(f5));
  REQUIRE(zero.has_value());
  std::set<std::string> consts;
  for (const auto& y : zero->all()) consts.insert(y.str());
  CHECK(consts == std::set<std::string>{"0", "1", "2", "3", "4"});
}

TEST_CASE("exhaustive properties over F_4, F_8, F_9") {
  for (auto f : {FieldDesc::make(2, 2), FieldDesc::make(2, 3), FieldDesc::make(3, 2)}) {
    CAPTURE(f->describe());
    for (const auto& x : all_elements(f)) {
      CHECK(x.frobenius().pth_root() == x);
      CHECK(x.pth_root().frobenius() == x);
      CHECK(x.pow(*f->order()) == x);
      auto sol = as_solve_residue(x);
      CHECK(sol.has_value() == x.trace_to_prime().is_zero());
      if (sol) {
        std::set<std::string> distinct;
        for (const auto& y : sol->all()) {
          CHECK(y.frobenius() - y == x);
          CHECK((y - sol->particular).in_prime_field());
          distinct.insert(y.str());
        }
        CHECK(distinct.size() == f->p());
      }
      if (!x.is_zero()) CHECK((x * x.inv()).is_one());
    }
  }
}

TEST_CASE("sampled field axioms and Frobenius additivity") {
  Rng rng(7);
  for (auto f : {FieldDesc::make(5), FieldDesc::make(2, 2), FieldDesc::make(2, 8), FieldDesc::make(3, 2),
                 FieldDesc::make(7, 3), FieldDesc::make(kMaxCharacteristic),
                 FieldDesc::make(65521, 4)}) {
    CAPTURE(f->describe());
    for (int i = 0; i < 1000; ++i) {
      const FqElem x = random_elem(f, rng);
      const FqElem y = random_elem(f, rng);
      const FqElem z = random_elem(f, rng);
      REQUIRE((x + y).frobenius() == x.frobenius() + y.frobenius());
      REQUIRE((x * y).frobenius() == x.frobenius() * y.frobenius());
      REQUIRE(x * (y + z) == x * y + x * z);
      REQUIRE((x * y) * z == x * (y * z));
      REQUIRE((x + y).trace_to_prime() == x.trace_to_prime() + y.trace_to_prime());
      if (!x.is_zero()) REQUIRE((x * x.inv()).is_one());
    }
    const FqElem x = random_nonzero_elem(f, rng);
    CHECK(x.pth_root().frobenius() == x);
    CHECK(x.pow(f->p()) == x.frobenius());
  }
}

TEST_CASE("element literals") {
  auto f4 = FieldDesc::make(2, 2);
  auto f9 = FieldDesc::make(3, 2);
  auto f7 = FieldDesc::make(7);
  CHECK(el(f7, "-1").str() == "6");
  CHECK(el(f7, "15").str() == "1");
  CHECK(el(f9, "2*u + 4").str() == "2*u+1");
  CHECK(el(f9, "u^2").str() == "2");
  CHECK(el(f4, "u*u").str() == "u+1");
  CHECK(FqElem(f9).str() == "0");
  CHECK_THROWS_AS(el(f7, "u"), Error);
  CHECK_THROWS_AS(el(f4, "u+"), Error);
  Rng rng(3);
  auto f27 = FieldDesc::make(3, 3);
  for (int i = 0; i < 200; ++i) {
    const FqElem x = random_elem(f27, rng);
    CHECK(el(f27, x.str().c_str()) == x);
  }
}
