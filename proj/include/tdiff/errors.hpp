#ifndef TDIFF_ERRORS_HPP
#define TDIFF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdiff {

/// Unknown node or product id, undefined threshold pair, malformed input
/// values.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An adoption step that is not a valid reduction of its source network.
class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algorithm was called outside the class of networks it is correct for
/// (e.g. a two-product solver on three products).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A search or construction exceeded its configured size budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t consumed)
      : std::runtime_error(what), consumed_(consumed) {}

  /// States visited (oracle) or nodes requested (transforms) when aborting.
  [[nodiscard]] std::size_t consumed() const { return consumed_; }

 private:
  std::size_t consumed_;
};

}  // namespace tdiff

#endif  // TDIFF_ERRORS_HPP
