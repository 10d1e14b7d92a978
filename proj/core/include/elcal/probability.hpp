#pragma once

#include <stdexcept>
#include <string>

namespace elcal {

/// A real number constrained to [0, 1]. Used for significance levels,
/// coverage levels and realized rejection rates. Converts implicitly to
/// double so it can be used directly in arithmetic; construction validates.
class Probability {
  public:
    Probability(double value) : value_(value) {
        if (!(value >= 0.0 && value <= 1.0)) {
            throw std::domain_error("Probability out of [0,1]: " + std::to_string(value));
        }
    }

    operator double() const noexcept { return value_; }
    double value() const noexcept { return value_; }

  private:
    double value_;
};

}  // namespace elcal
