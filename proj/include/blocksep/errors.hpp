#ifndef BLOCKSEP_ERRORS_HPP
#define BLOCKSEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace blocksep {

/// Precondition violated by the caller (bad order, zero part size, ...).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration was asked to go past its configured cap.
class resource_limit_error : public std::runtime_error {
 public:
  resource_limit_error(const std::string& what, std::size_t requested, std::size_t cap)
      : std::runtime_error(what + ": requested " + std::to_string(requested) + " exceeds cap " +
                           std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

}  // namespace blocksep

#endif  // BLOCKSEP_ERRORS_HPP
