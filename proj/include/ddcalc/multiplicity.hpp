#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ddcalc {

// The superscript m of the R/T/D/B operator families: a positive integer or
// infinity.
class Multiplicity {
public:
  constexpr Multiplicity() : v_(1) {}
  constexpr explicit Multiplicity(int v) : v_(v) {
    if (v < 1) throw std::invalid_argument("multiplicity must be >= 1");
  }
  static constexpr Multiplicity inf() {
    Multiplicity m;
    m.v_ = kInf;
    return m;
  }

  constexpr bool is_inf() const { return v_ == kInf; }
  constexpr int value() const {
    if (is_inf()) throw std::logic_error("value() on infinite multiplicity");
    return v_;
  }

  bool operator==(const Multiplicity&) const = default;

  std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }

  static Multiplicity parse(std::string_view s) {
    if (s == "inf" || s == "oo") return inf();
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9' || v > 100000) throw std::invalid_argument("bad multiplicity: " + std::string(s));
      v = v * 10 + (c - '0');
    }
    return Multiplicity(v);
  }

private:
  static constexpr int kInf = -1;
  int v_;
};

}  // namespace ddcalc
