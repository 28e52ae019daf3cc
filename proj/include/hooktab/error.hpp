#pragma once

#include <stdexcept>
#include <string>

namespace hooktab {

enum class errc {
  non_monotone_partition,
  non_positive_part,
  cell_out_of_shape,
  bound_too_small,
  bound_mismatch,
  not_rectangular,
  negative_dimension,
  invalid_input,
  precondition_violated,
  incomparable_paths,
  cap_exceeded,
  non_exact_division,
  internal,
};

/// All library failures are reported through this one exception type; the
/// `code` distinguishes caller mistakes from internal assertion failures.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

// Internal consistency checks for invariants the algorithms guarantee.
// A failure here means the implementation is wrong, not the input.
inline void internal_check(bool ok, const char* what) {
  if (!ok) fail(errc::internal, std::string("internal assertion failed: ") + what);
}

}  // namespace hooktab
