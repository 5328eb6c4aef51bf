#ifndef GNNSEP_ERRORS_HPP
#define GNNSEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gnnsep {

// The requested scalar field cannot represent the computation,
// e.g. an analytic activation under the exact rational field.
class UnsupportedFieldError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A documented mathematical precondition does not hold.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Not enough same-signature sample points were found within the search budget.
class RegionTooSmallError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace gnnsep

#endif
