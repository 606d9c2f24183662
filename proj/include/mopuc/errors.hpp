#pragma once

#include <stdexcept>
#include <string>

namespace mopuc {

// Error conditions surfaced by the library.  Each maps to one failure mode
// of a public operation; the CLI translates them to exit codes.
enum class errc {
  invalid_arc,
  overlapping_arcs,
  forbidden_point_mass,
  mass_outside_arc,
  negative_weight,
  invalid_modifier_point,
  empty_function_set,
  zero_argument,
  zero_polynomial,
  empty_index,
  non_normal,
  non_unimodular_tau,
  not_tau_invariant,
  degenerate_leading,
  root_on_circle,
  theorem_violated,
  config_parse,
  unknown_preset,
  io_failure,
  precondition,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace mopuc
