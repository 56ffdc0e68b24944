#include "zxr/phase.hpp"

#include <charconv>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace zxr {

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("phase denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  const std::int64_t period = 2 * den;
  num %= period;
  if (num < 0) num += period;
  num_ = num;
  den_ = den;
}

Phase Phase::parse(std::string_view token) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (s.empty()) throw std::invalid_argument("empty phase token");
    const char* first = s.data();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument("bad phase token '" + std::string(token) + "'");
    return v;
  };
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return Phase(parse_int(token), 1);
  const std::int64_t den = parse_int(token.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("phase denominator must be positive");
  return Phase(parse_int(token.substr(0, slash)), den);
}

double Phase::radians() const {
  return static_cast<double>(num_) * std::numbers::pi / static_cast<double>(den_);
}

Phase Phase::operator+(const Phase& o) const {
  const std::int64_t l = std::lcm(den_, o.den_);
  return Phase(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

Phase Phase::operator-() const { return Phase(-num_, den_); }
Phase Phase::operator-(const Phase& o) const { return *this + (-o); }
Phase Phase::scaled(std::int64_t n) const { return Phase(num_ * n, den_); }

bool Phase::operator<(const Phase& o) const {
  return num_ * o.den_ < o.num_ * den_;
}

std::string Phase::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Phase phase_add(const Phase& a, const Phase& b) { return a + b; }

}  // namespace zxr
