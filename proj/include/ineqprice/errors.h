#ifndef INEQPRICE_ERRORS_H_
#define INEQPRICE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ineqprice {

// Malformed input: bad instance data, unknown node ids, prices outside the
// price set, violated operation preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input text that cannot be decoded into the expected document shape.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// An exhaustive search or construction refused because the input is too big.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ineqprice

#endif  // INEQPRICE_ERRORS_H_
