#ifndef DSET_ERROR_HPP
#define DSET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dset {

// Raised for violated preconditions of library operations. `code` is a short
// machine-readable tag ("not well-founded", "precision", ...) surfaced by the
// CLI in its error JSON.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)), detail_(detail) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string code_;
  std::string detail_;
};

}  // namespace dset

#endif
