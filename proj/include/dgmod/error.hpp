#pragma once

#include <stdexcept>
#include <string>

namespace dgmod {

/// Error categories surfaced by the library. The CLI maps these onto
/// process exit codes, so additions here need a corresponding entry there.
enum class errc {
  dimension_mismatch,
  invalid_argument,
  validation,          // a structural invariant failed (bad differential, bad map, ...)
  not_a_chain_map,
  not_a_cycle,
  not_graded_split,
  incompatible_ends,
  incompatible_algebras,
  cutoff_too_small,
  window_exhausted,
  hypothesis_violated,
  unknown_example,
  parse_error,
  computation,
  internal_check,      // a self-check that should be unreachable fired
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

// Internal consistency checks (identities that hold by construction) are kept
// active in test builds via DGMOD_CHECKS and compiled out of plain builds.
#ifdef DGMOD_CHECKS
inline constexpr bool checks_enabled = true;
#else
inline constexpr bool checks_enabled = false;
#endif

inline void check(bool ok, const char* what) {
  if (checks_enabled && !ok) fail(errc::internal_check, what);
}

}  // namespace dgmod
