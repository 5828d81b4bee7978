#ifndef IE_ERRORS_HPP
#define IE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ie {

/// Input text does not conform to the expected grammar.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  /// Byte offset of the first offending character.
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// A precondition on mathematical input is violated.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The request would exceed the configured size guard.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace ie

#endif
