#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pyr {

enum class Errc {
  invalid_argument,
  degree_mismatch,
  too_large,
  not_member,
  not_normal,
  singular_matrix,
  unsupported_by_theorem,
  not_in_order_set,
  malformed_design,
  action_violation,
  overflow,
  internal,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::degree_mismatch: return "degree_mismatch";
    case Errc::too_large: return "too_large";
    case Errc::not_member: return "not_member";
    case Errc::not_normal: return "not_normal";
    case Errc::singular_matrix: return "singular_matrix";
    case Errc::unsupported_by_theorem: return "unsupported_by_theorem";
    case Errc::not_in_order_set: return "not_in_order_set";
    case Errc::malformed_design: return "malformed_design";
    case Errc::action_violation: return "action_violation";
    case Errc::overflow: return "overflow";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

/// Element-table cap for group closures. PYR_ELEMENT_CAP overrides the default.
inline std::size_t element_cap() {
  if (const char* env = std::getenv("PYR_ELEMENT_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultElementCap;
}

}  // namespace pyr
