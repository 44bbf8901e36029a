#include <vector>

#include "cvf/artin_schreier.hpp"
#include "cvf/literal.hpp"
#include "cvf/random.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cvf;

namespace {

RatFunc rf(const FieldRef& f, const char* text) { return parse_rational(f, text); }

}  // namespace

TEST_CASE("membership examples") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto f = FieldDesc::make(p);
    const auto t = membership_rational(rf(f, "t"));
    CHECK_FALSE(t.solvable());
    REQUIRE(t.certificate);
    const auto* deg = std::get_if<DegreeCertificate>(&*t.certificate);
    REQUIRE(deg);
    CHECK(deg->degree == 1);

    const auto tp = RatFunc::monomial(FqElem::from_int(f, 1), -static_cast<std::int64_t>(p)) - rf(f, "1/t");
    const auto m = membership_rational(tp);
    REQUIRE(m.solvable());
    const auto sols = m.solutions();
    for (std::uint32_t c = 0; c < p; ++c)
      CHECK(std::find(sols.begin(), sols.end(), rf(f, "1/t") + RatFunc::from_int(f, c)) != sols.end());
  }
  auto f2 = FieldDesc::make(2);
  const auto y = rf(f2, "1/(t+1)");
  const auto m = membership_rational(y.frobenius() - y);
  REQUIRE(m.solvable());
  const auto sols = m.solutions();
  CHECK(sols.size() == 2);
  CHECK(std::find(sols.begin(), sols.end(), y) != sols.end());
  CHECK(std::find(sols.begin(), sols.end(), y + RatFunc::from_int(f2, 1)) != sols.end());
  CHECK(membership_rational(RatFunc(f2)).solvable());
}

TEST_CASE("membership certificates") {
  auto f3 = FieldDesc::make(3);
  // Simple pole at t = 1.
  const auto pole = membership_rational(rf(f3, "1/(t-1)"));
  REQUIRE(pole.certificate);
  const auto& pc = std::get<PoleCertificate>(*pole.certificate);
  CHECK(pc.place == parse_rational(f3, "t-1").num());
  CHECK(pc.order == 1);
  CHECK(pc.place_is_irreducible);
  // Pole of order 3 whose principal part is not of the required shape.
  const auto pp = membership_rational(rf(f3, "t/(t^3+1)"));
  REQUIRE(pp.certificate);
  CHECK(std::holds_alternative<PrincipalPartCertificate>(*pp.certificate));
  // Constant of nonzero trace.
  const auto tr = membership_rational(rf(f3, "1"));
  REQUIRE(tr.certificate);
  CHECK(std::holds_alternative<ResidueTraceCertificate>(*tr.certificate));
  // Irreducible quadratic place over F_3.
  const auto quad = membership_rational(rf(f3, "1/(t^2+1)^2"));
  REQUIRE(quad.certificate);
  const auto& qc = std::get<PoleCertificate>(*quad.certificate);
  CHECK(qc.place == parse_rational(f3, "t^2+1").num());
  CHECK(qc.order == 2);
  // Degree 3 polynomial part over F_3 reduces: t^3 = (t)^3 - t + t.
  const auto deg = membership_rational(rf(f3, "t^3"));
  REQUIRE(deg.certificate);
  CHECK(std::get<DegreeCertificate>(*deg.certificate).degree == 1);
}

TEST_CASE("membership against brute force") {
  for (std::uint32_t p : {2u, 3u}) {
    auto f = FieldDesc::make(p);
    const oracle::ArtinSchreierImage image(f, 2);
    Rng rng(derive_seed(41, p));
    for (int i = 0; i < 150; ++i) {
      RatFunc b(f);
      if (i % 2 == 0) {
        const auto x = random_ratfunc(f, rng, 2, 2);
        b = x.frobenius() - x;
      } else {
        b = random_ratfunc(f, rng, 3, 3);
      }
      const auto m = membership_rational(b);
      if (const RatFunc* x = image.preimage(b)) {
        REQUIRE(m.solvable());
        const auto sols = m.solutions();
        CHECK(std::find(sols.begin(), sols.end(), *x) != sols.end());
      }
      if (m.solvable()) {
        CHECK(m.solution->frobenius() - *m.solution == b);
      } else {
        CHECK(image.preimage(b) == nullptr);
      }
    }
  }
}

TEST_CASE("membership over extension fields") {
  for (auto f : {FieldDesc::make(2, 2), FieldDesc::make(3, 2), FieldDesc::make(2, 3)}) {
    Rng rng(derive_seed(42, f->p() * 10 + f->n()));
    for (int i = 0; i < 40; ++i) {
      const auto x = random_ratfunc(f, rng, 3, 3);
      const auto b = x.frobenius() - x;
      const auto m = membership_rational(b);
      REQUIRE(m.solvable());
      const auto sols = m.solutions();
      CHECK(std::find(sols.begin(), sols.end(), x) != sols.end());
      // Adding t keeps it out of the image.
      CHECK_FALSE(membership_rational(b + RatFunc::t(f)).solvable());
    }
  }
}
