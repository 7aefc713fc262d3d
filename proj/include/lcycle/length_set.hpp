#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lcycle/numeric.hpp"

namespace lcycle {

/// A set L of admissible cycle lengths, L ⊆ {3, 4, ...}.
///
/// Four shapes are supported: an explicit finite list, all lengths from some
/// minimum on, an arithmetic progression (residue class) from some minimum on,
/// and the complement of another set relative to {3, 4, ...}. Every variant is
/// eventually periodic, which keeps membership questions decidable.
class LengthSet {
 public:
  struct Finite {
    std::vector<std::int64_t> values;  // strictly increasing, all >= 3
  };
  struct AllAtLeast {
    std::int64_t min;
  };
  struct Residue {
    std::int64_t a;  // normalized to [0, m)
    std::int64_t m;
    std::int64_t min;
  };
  struct Complement {
    std::shared_ptr<const LengthSet> inner;
  };
  using Variant = std::variant<Finite, AllAtLeast, Residue, Complement>;

  /// Sorts and deduplicates; throws std::domain_error on values below 3.
  static LengthSet finite(std::vector<std::int64_t> values);
  static LengthSet all_at_least(std::int64_t min = 3);
  static LengthSet residue(std::int64_t a, std::int64_t m, std::int64_t min = 3);
  static LengthSet complement(LengthSet inner);

  /// Parses the textual grammar: "3,4,5", "all", "ge:K", "mod:a:m", "even",
  /// "odd", "none", "not:<spec>". Case-insensitive, whitespace ignored.
  static LengthSet parse(std::string_view text);

  const Variant& variant() const { return variant_; }

  /// Throws std::domain_error for ell < 3.
  bool contains(std::int64_t ell) const;

  /// Smallest member, or nullopt when the set is empty.
  std::optional<std::int64_t> min_element() const;
  bool empty() const { return !min_element().has_value(); }

  /// Members up to and including `bound`.
  std::vector<std::int64_t> members_up_to(std::int64_t bound) const;

  /// Canonical text in the parse grammar.
  std::string to_string() const;

 private:
  explicit LengthSet(Variant v) : variant_(std::move(v)) {}

  // Membership is periodic with period() for every ell >= threshold().
  std::int64_t threshold() const;
  std::int64_t period() const;

  Variant variant_;
};

/// λ_L(z) = Σ_{ℓ∈L} z^ℓ / (2ℓ) to absolute accuracy `tol`, |z| < 1.
std::complex<double> lambda_L(const LengthSet& L, std::complex<double> z, double tol = 1e-14);
double lambda_L(const LengthSet& L, double t, double tol = 1e-14);

/// λ(t) = -½log(1-t) - t/2 - t²/4, the all-lengths case.
double lambda_all(double t);

namespace detail {

/// Index K past which the geometric tail bound |z|^{K+1} / (2(K+1)(1-|z|)) is below tol.
std::int64_t truncation_index(double modulus, double tol);

template <class Real>
Complex<Real> lambda_all_closed(const Complex<Real>& z) {
  Complex<Real> one(Real(1));
  return -(log(one - z) * Real(0.5)) - z * Real(0.5) - z * z * Real(0.25);
}

template <class Real>
Complex<Real> lambda_eval(const LengthSet& L, const Complex<Real>& z, double tol) {
  double modulus = to_double(abs(z));
  if (modulus == 0.0) return Complex<Real>(Real(0));

  auto sum_where = [&](std::int64_t first, std::int64_t last, auto&& keep) {
    Complex<Real> power = ipow(z, static_cast<std::uint64_t>(first));
    Complex<Real> acc(Real(0));
    for (std::int64_t ell = first; ell <= last; ++ell) {
      if (keep(ell)) acc += power / Real(2 * ell);
      power *= z;
    }
    return acc;
  };

  return std::visit(
      [&](const auto& v) -> Complex<Real> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LengthSet::Finite>) {
          if (v.values.empty()) return Complex<Real>(Real(0));
          Complex<Real> acc(Real(0));
          std::int64_t prev = 0;
          Complex<Real> power(Real(1));
          for (std::int64_t ell : v.values) {
            power *= ipow(z, static_cast<std::uint64_t>(ell - prev));
            prev = ell;
            acc += power / Real(2 * ell);
          }
          return acc;
        } else if constexpr (std::is_same_v<T, LengthSet::AllAtLeast>) {
          if (v.min == 3 && modulus >= 0.25) return lambda_all_closed(z);
          std::int64_t last = std::max(v.min, truncation_index(modulus, tol));
          return sum_where(v.min, last, [](std::int64_t) { return true; });
        } else if constexpr (std::is_same_v<T, LengthSet::Residue>) {
          std::int64_t last = std::max(v.min, truncation_index(modulus, tol));
          return sum_where(v.min, last, [&](std::int64_t ell) { return ell % v.m == v.a; });
        } else {
          auto all = lambda_eval(LengthSet::all_at_least(3), z, tol / 2);
          return all - lambda_eval(*v.inner, z, tol / 2);
        }
      },
      L.variant());
}

}  // namespace detail

}  // namespace lcycle
