#include "lcycle/length_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lcycle {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view context) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("malformed length set '" + std::string(context) +
                                "': expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

LengthSet parse_normalized(std::string_view s, std::string_view original) {
  if (s.starts_with("not:")) return LengthSet::complement(parse_normalized(s.substr(4), original));
  if (s == "all") return LengthSet::all_at_least(3);
  if (s == "none" || s.empty()) return LengthSet::finite({});
  if (s == "even") return LengthSet::residue(0, 2);
  if (s == "odd") return LengthSet::residue(1, 2);
  if (s.starts_with("ge:")) return LengthSet::all_at_least(parse_int(s.substr(3), original));
  if (s.starts_with("mod:")) {
    auto parts = split(s.substr(4), ':');
    if (parts.size() != 2) {
      throw std::invalid_argument("malformed length set '" + std::string(original) +
                                  "': expected mod:a:m");
    }
    return LengthSet::residue(parse_int(parts[0], original), parse_int(parts[1], original));
  }
  std::vector<std::int64_t> values;
  for (auto part : split(s, ',')) values.push_back(parse_int(part, original));
  return LengthSet::finite(std::move(values));
}

}  // namespace

LengthSet LengthSet::finite(std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (!values.empty() && values.front() < 3) {
    throw std::domain_error("cycle lengths must be >= 3, got " + std::to_string(values.front()));
  }
  return LengthSet(Finite{std::move(values)});
}

LengthSet LengthSet::all_at_least(std::int64_t min) {
  if (min < 3) throw std::domain_error("minimum cycle length must be >= 3");
  return LengthSet(AllAtLeast{min});
}

LengthSet LengthSet::residue(std::int64_t a, std::int64_t m, std::int64_t min) {
  if (m < 2) throw std::domain_error("residue modulus must be >= 2");
  if (min < 3) throw std::domain_error("minimum cycle length must be >= 3");
  a = ((a % m) + m) % m;
  return LengthSet(Residue{a, m, min});
}

LengthSet LengthSet::complement(LengthSet inner) {
  return LengthSet(Complement{std::make_shared<const LengthSet>(std::move(inner))});
}

LengthSet LengthSet::parse(std::string_view text) {
  std::string normalized;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      normalized.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return parse_normalized(normalized, text);
}

bool LengthSet::contains(std::int64_t ell) const {
  if (ell < 3) throw std::domain_error("cycle length must be >= 3, got " + std::to_string(ell));
  return std::visit(
      [ell](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Finite>) {
          return std::binary_search(v.values.begin(), v.values.end(), ell);
        } else if constexpr (std::is_same_v<T, AllAtLeast>) {
          return ell >= v.min;
        } else if constexpr (std::is_same_v<T, Residue>) {
          return ell >= v.min && ell % v.m == v.a;
        } else {
          return !v.inner->contains(ell);
        }
      },
      variant_);
}

std::int64_t LengthSet::threshold() const {
  return std::visit(
      [](const auto& v) -> std::int64_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Finite>) {
          return v.values.empty() ? 3 : v.values.back() + 1;
        } else if constexpr (std::is_same_v<T, Complement>) {
          return v.inner->threshold();
        } else {
          return v.min;
        }
      },
      variant_);
}

std::int64_t LengthSet::period() const {
  return std::visit(
      [](const auto& v) -> std::int64_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Residue>) {
          return v.m;
        } else if constexpr (std::is_same_v<T, Complement>) {
          return v.inner->period();
        } else {
          return 1;
        }
      },
      variant_);
}

std::optional<std::int64_t> LengthSet::min_element() const {
  std::int64_t stop = std::max<std::int64_t>(threshold(), 3) + period();
  for (std::int64_t ell = 3; ell < stop; ++ell) {
    if (contains(ell)) return ell;
  }
  return std::nullopt;
}

std::vector<std::int64_t> LengthSet::members_up_to(std::int64_t bound) const {
  std::vector<std::int64_t> out;
  if (const auto* f = std::get_if<Finite>(&variant_)) {
    for (auto v : f->values) {
      if (v <= bound) out.push_back(v);
    }
    return out;
  }
  for (std::int64_t ell = 3; ell <= bound; ++ell) {
    if (contains(ell)) out.push_back(ell);
  }
  return out;
}

std::string LengthSet::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Finite>) {
          if (v.values.empty()) return "none";
          std::ostringstream os;
          for (std::size_t i = 0; i < v.values.size(); ++i) os << (i ? "," : "") << v.values[i];
          return os.str();
        } else if constexpr (std::is_same_v<T, AllAtLeast>) {
          return v.min == 3 ? "all" : "ge:" + std::to_string(v.min);
        } else if constexpr (std::is_same_v<T, Residue>) {
          // The grammar has no slot for a custom minimum.
          if (v.min != 3) throw std::logic_error("residue set with min != 3 has no text form");
          return "mod:" + std::to_string(v.a) + ":" + std::to_string(v.m);
        } else {
          return "not:" + v.inner->to_string();
        }
      },
      variant_);
}

namespace detail {

std::int64_t truncation_index(double modulus, double tol) {
  if (!(modulus < 1.0)) throw std::domain_error("lambda_L needs |z| < 1");
  if (modulus == 0.0) return 3;
  // Smallest K with |z|^{K+1} <= 2 (K+1) (1-|z|) tol; start from the estimate that
  // drops the (K+1) factor and walk down while the bound still holds.
  double log_r = std::log(modulus);
  double rhs = std::log(2.0 * tol * (1.0 - modulus));
  auto holds = [&](std::int64_t k) {
    return static_cast<double>(k + 1) * log_r <= rhs + std::log(static_cast<double>(k + 1));
  };
  auto k = static_cast<std::int64_t>(std::ceil(rhs / log_r));
  k = std::max<std::int64_t>(k, 3);
  while (k > 3 && holds(k - 1)) --k;
  while (!holds(k)) ++k;
  return k;
}

}  // namespace detail

std::complex<double> lambda_L(const LengthSet& L, std::complex<double> z, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("lambda_L needs tol > 0");
  if (!(std::abs(z) < 1.0)) throw std::domain_error("lambda_L needs |z| < 1");
  return detail::lambda_eval(L, Complex<double>::from(z), tol).to_std();
}

double lambda_L(const LengthSet& L, double t, double tol) {
  return lambda_L(L, std::complex<double>(t, 0.0), tol).real();
}

double lambda_all(double t) {
  if (!(std::abs(t) < 1.0)) throw std::domain_error("lambda needs |t| < 1");
  return -0.5 * std::log1p(-t) - t / 2 - t * t / 4;
}

}  // namespace lcycle
