#include "kreweras/counting.hpp"

#include <stdexcept>

namespace kreweras {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;  // exact: r is C(n-k+j, j) after this step
  }
  return r;
}

namespace {

BigInt power_of_two(std::int64_t e) {
  BigInt r = 1;
  return r <<= e;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("count: closed form failed to divide exactly");
  return q;
}

}  // namespace

BigInt count(CountKind kind, std::int64_t n, std::optional<std::int64_t> i) {
  if (n < 0) throw std::invalid_argument("count: n must be nonnegative");
  const bool wants_i = kind == CountKind::kreweras_to || kind == CountKind::near_cubic_to;
  if (wants_i && !i)
    throw std::invalid_argument("count: this kind requires the endpoint parameter i");
  if (!wants_i && i)
    throw std::invalid_argument("count: this kind does not take the endpoint parameter i");
  if (wants_i && *i < 0) throw std::invalid_argument("count: i must be nonnegative");

  switch (kind) {
    case CountKind::kreweras_origin:
    case CountKind::depth_map:
      // 4^n / ((n+1)(2n+1)) * C(3n, n)
      return exact_div(power_of_two(2 * n) * binomial(3 * n, n),
                       BigInt(n + 1) * (2 * n + 1));
    case CountKind::excursion:
      // 4^n / (2n+1) * C(3n, n)
      return exact_div(power_of_two(2 * n) * binomial(3 * n, n), BigInt(2 * n + 1));
    case CountKind::projected:
      // C(3n, n) / (2n+1)
      return exact_div(binomial(3 * n, n), BigInt(2 * n + 1));
    case CountKind::cubic:
      // 2^n / ((n+1)(2n+1)) * C(3n, n)
      return exact_div(power_of_two(n) * binomial(3 * n, n),
                       BigInt(n + 1) * (2 * n + 1));
    case CountKind::kreweras_to:
      // 4^n (2i+1) / ((n+i+1)(2n+2i+1)) * C(2i, i) * C(3n+2i, n)
      return exact_div(power_of_two(2 * n) * (2 * *i + 1) * binomial(2 * *i, *i) *
                           binomial(3 * n + 2 * *i, n),
                       BigInt(n + *i + 1) * (2 * n + 2 * *i + 1));
    case CountKind::near_cubic_to:
      // 2^n (2i+1) / ((n+i+1)(2n+2i+1)) * C(2i, i) * C(3n+2i, n)
      return exact_div(power_of_two(n) * (2 * *i + 1) * binomial(2 * *i, *i) *
                           binomial(3 * n + 2 * *i, n),
                       BigInt(n + *i + 1) * (2 * n + 2 * *i + 1));
  }
  throw std::invalid_argument("count: unknown kind");
}

std::string_view to_string(CountKind kind) {
  switch (kind) {
    case CountKind::kreweras_origin: return "kreweras_origin";
    case CountKind::excursion: return "excursion";
    case CountKind::projected: return "projected";
    case CountKind::cubic: return "cubic";
    case CountKind::depth_map: return "depth_map";
    case CountKind::kreweras_to: return "kreweras_to";
    case CountKind::near_cubic_to: return "near_cubic_to";
  }
  return "unknown";
}

std::optional<CountKind> count_kind_from_string(std::string_view name) {
  if (name == "kreweras_origin") return CountKind::kreweras_origin;
  if (name == "excursion") return CountKind::excursion;
  if (name == "projected") return CountKind::projected;
  if (name == "cubic") return CountKind::cubic;
  if (name == "depth_map") return CountKind::depth_map;
  if (name == "kreweras_to") return CountKind::kreweras_to;
  if (name == "near_cubic_to") return CountKind::near_cubic_to;
  return std::nullopt;
}

}  // namespace kreweras
