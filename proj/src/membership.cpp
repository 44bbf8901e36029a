#include <cstdint>
#include <optional>
#include <vector>

#include "cvf/artin_schreier.hpp"
#include "cvf/error.hpp"
#include "cvf/linalg_fp.hpp"

namespace cvf {
namespace {

constexpr std::uint64_t kFactorSearchBudget = 1u << 16;

FqElem one_of(const FieldRef& f) { return FqElem::from_int(f, 1); }

// Monic polynomial of degree k whose lower coefficients are the base-q digits
// of index.
FqPoly monic_from_index(const FieldRef& f, unsigned k, std::uint64_t index) {
  const std::uint32_t p = f->p();
  const unsigned n = f->n();
  std::vector<std::uint32_t> flat((k + 1) * n, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < n; ++j) {
      flat[i * n + j] = static_cast<std::uint32_t>(index % p);
      index /= p;
    }
  flat[k * n] = 1;
  return FqPoly::from_raw(f, std::move(flat));
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > cap / base) return std::nullopt;
    r *= base;
  }
  return r;
}

std::int64_t multiplicity(FqPoly d, const FqPoly& place) {
  std::int64_t m = 0;
  for (;;) {
    auto [q, r] = d.divrem(place);
    if (!r.is_zero()) return m;
    d = std::move(q);
    ++m;
  }
}

PoleCertificate pole_certificate(const FqPoly& den) {
  const FieldRef& f = den.field();
  // Squarefree product of the places whose multiplicity is prime to p.
  const FqPoly w = den.divrem(FqPoly::gcd(den, den.derivative())).first.monic();
  const std::uint64_t q = *checked_pow(f->p(), f->n(), UINT64_MAX);
  std::uint64_t spent = 0;
  for (unsigned k = 1; 2 * static_cast<std::int64_t>(k) <= w.degree(); ++k) {
    const auto count = checked_pow(q, k, kFactorSearchBudget);
    if (!count || spent + *count > kFactorSearchBudget)
      return {w, multiplicity(den, w), false};
    spent += *count;
    for (std::uint64_t i = 0; i < *count; ++i) {
      FqPoly cand = monic_from_index(f, k, i);
      if (w.divrem(cand).second.is_zero()) return {cand, multiplicity(den, cand), true};
    }
  }
  return {w, multiplicity(den, w), true};
}

std::vector<std::uint32_t> flatten(const FqPoly& a, std::size_t len) {
  const unsigned n = a.field()->n();
  std::vector<std::uint32_t> out(len * n, 0);
  const auto raw = a.raw();
  for (std::size_t i = 0; i < raw.size() && i < out.size(); ++i) out[i] = raw[i];
  return out;
}

// Solves A^p - A * B^(p-1) = R for deg A < deg B, as an F_p-linear system in
// the coordinates of the coefficients of A.
std::optional<FqPoly> solve_principal_part(const FqPoly& r, const FqPoly& b) {
  const FieldRef& f = b.field();
  const std::uint32_t p = f->p();
  const unsigned n = f->n();
  const auto k = static_cast<std::size_t>(b.degree());
  const std::size_t out_len = static_cast<std::size_t>(p) * k;
  FqPoly bp1 = FqPoly::constant(one_of(f));
  for (std::uint32_t i = 1; i < p; ++i) bp1 = bp1 * b;

  MatrixFp m(out_len * n, k * n);
  std::vector<std::uint32_t> coords(n, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (unsigned j = 0; j < n; ++j) {
      coords.assign(n, 0);
      coords[j] = 1;
      const FqElem e = FqElem::from_coords(f, coords);
      const FqPoly image =
          FqPoly::monomial(e.frobenius(), i * p) - bp1.scaled(e).shifted_up(i);
      const auto col = flatten(image, out_len);
      for (std::size_t row = 0; row < col.size(); ++row) m.at(row, i * n + j) = col[row];
    }
  const auto rhs = flatten(r, out_len);
  const auto sol = solve_mod_p(std::move(m), rhs, p);
  if (!sol) return std::nullopt;
  return FqPoly::from_raw(f, sol->particular);
}

}  // namespace

std::vector<RatFunc> Membership::solutions() const {
  if (!solution) return {};
  const FieldRef& f = solution->field();
  if (f->p() > (1u << 20)) throw Error(Errc::InvalidField, "too many solutions to enumerate");
  std::vector<RatFunc> out;
  out.reserve(f->p());
  for (std::uint32_t c = 0; c < f->p(); ++c) out.push_back(*solution + RatFunc::from_int(f, c));
  return out;
}

Membership membership_rational(const RatFunc& b) {
  const FieldRef& f = b.field();
  if (b.is_zero()) return {RatFunc(f), std::nullopt};
  if (!b.den().is_pth_power()) return {std::nullopt, pole_certificate(b.den())};

  const FqPoly root_den = b.den().pth_root();
  auto [poly_part, proper_num] = b.num().divrem(b.den());

  RatFunc x(f);
  if (root_den.degree() >= 1) {
    const auto a = solve_principal_part(proper_num, root_den);
    if (!a) return {std::nullopt, PrincipalPartCertificate{root_den}};
    x = RatFunc(*a, root_den);
  }

  // Polynomial part, top-down: z^p - z = poly_part.
  const auto p = static_cast<std::int64_t>(f->p());
  FqPoly cur = std::move(poly_part);
  FqPoly z(f);
  while (!cur.is_zero()) {
    const std::int64_t d = cur.degree();
    if (d == 0) {
      const FqElem c = cur.coeff(0);
      const auto sol = as_solve_residue(c);
      if (!sol) return {std::nullopt, ResidueTraceCertificate{c, c.trace_to_prime()}};
      z = z + FqPoly::constant(sol->particular);
      break;
    }
    if (d % p != 0) return {std::nullopt, DegreeCertificate{d, cur}};
    const FqPoly u = FqPoly::monomial(cur.leading().pth_root(), static_cast<std::size_t>(d / p));
    cur = cur - (u.frobenius() - u);
    z = z + u;
  }
  x = x + RatFunc::from_poly(z);
  if (!(x.frobenius() - x == b))
    throw Error(Errc::InternalConsistency, "membership solution failed verification");
  return {x, std::nullopt};
}

}  // namespace cvf
