#ifndef RCLOS_ERRORS_HPP_
#define RCLOS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rclos {

// Input data is malformed (bad file syntax, unknown names, bad grammar).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownLetter : ParseError {
  explicit UnknownLetter(char a)
      : ParseError(std::string("unknown letter '") + a + "'") {}
};

// Two relation values of different dimension were combined.
struct DimensionMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// Two automata or triples over different alphabets were combined.
struct AlphabetMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// The generated-set cap was hit before the closure was complete.
struct CapacityExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Certificate extraction was asked for a pair that is not present.
struct PairNotPresent : std::logic_error {
  using std::logic_error::logic_error;
};

// Certificate extraction could not find the intermediate state the
// construction requires.  Surfaced instead of silently producing a wrong
// certificate.
struct DecompositionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rclos

#endif  // RCLOS_ERRORS_HPP_
