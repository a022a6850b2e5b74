#pragma once

#include <stdexcept>
#include <string>

namespace oscnet {

/// Error codes carried by every oscnet::Error. The category of a code
/// determines the CLI exit status: input validation -> 2, numerical
/// applicability -> 3, file I/O -> 4.
enum class errc {
  // validation
  index_out_of_range,
  self_loop,
  duplicate_edge,
  invalid_weight,
  invalid_size,
  invalid_params,
  dimension_mismatch,
  negative_sq_norm,
  invalid_b,
  parse_error,
  // numerical applicability
  zero_out_degree,
  complex_spectrum,
  not_diagonalizable,
  negative_eigenvalue,
  unstable_step,
  unsupported,
  solver_inapplicable,
  singular_system,
  // I/O
  io_error,
};

const char* errc_name(errc code) noexcept;
int exit_code(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace oscnet
