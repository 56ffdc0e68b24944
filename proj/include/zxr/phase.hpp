#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace zxr {

// An angle (num/den)*pi kept in lowest terms with 0 <= num/den < 2.
class Phase {
 public:
  Phase() = default;
  Phase(std::int64_t num, std::int64_t den = 1);

  static Phase parse(std::string_view token);  // "p", "p/q" or "-p/q"

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_pi() const { return num_ == 1 && den_ == 1; }
  double radians() const;

  Phase operator+(const Phase& o) const;
  Phase operator-(const Phase& o) const;
  Phase operator-() const;
  Phase scaled(std::int64_t n) const;  // n*alpha, used by the model family

  bool operator==(const Phase&) const = default;
  bool operator<(const Phase& o) const;

  std::string str() const;  // "0", "1", "1/2", "3/2"

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Phase phase_add(const Phase& a, const Phase& b);

}  // namespace zxr
