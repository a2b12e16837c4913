#ifndef RSS_ERRORS_HPP
#define RSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rss {

/// Thrown when a computation would exceed a configured resource cap
/// (grid size, enumeration horizon).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a solved value function violates the structure an
/// operation relies on (e.g. a non-constant order-up-to level).
class StructureViolationError : public std::runtime_error {
 public:
  explicit StructureViolationError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an instance or policy file cannot be parsed.
/// Carries the name of the offending field.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, const std::string& what)
      : std::runtime_error("field '" + field + "': " + what), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace rss

#endif  // RSS_ERRORS_HPP
