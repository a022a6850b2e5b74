#include "oscnet/error.hpp"

namespace oscnet {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::invalid_weight: return "InvalidWeight";
    case errc::invalid_size: return "InvalidSize";
    case errc::invalid_params: return "InvalidParams";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::negative_sq_norm: return "NegativeSqNorm";
    case errc::invalid_b: return "InvalidB";
    case errc::parse_error: return "ParseError";
    case errc::zero_out_degree: return "ZeroOutDegree";
    case errc::complex_spectrum: return "ComplexSpectrum";
    case errc::not_diagonalizable: return "NotDiagonalizable";
    case errc::negative_eigenvalue: return "NegativeEigenvalue";
    case errc::unstable_step: return "UnstableStep";
    case errc::unsupported: return "Unsupported";
    case errc::solver_inapplicable: return "SolverInapplicable";
    case errc::singular_system: return "SingularSystem";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

int exit_code(errc code) noexcept {
  switch (code) {
    case errc::index_out_of_range:
    case errc::self_loop:
    case errc::duplicate_edge:
    case errc::invalid_weight:
    case errc::invalid_size:
    case errc::invalid_params:
    case errc::dimension_mismatch:
    case errc::negative_sq_norm:
    case errc::invalid_b:
    case errc::parse_error:
      return 2;
    case errc::zero_out_degree:
    case errc::complex_spectrum:
    case errc::not_diagonalizable:
    case errc::negative_eigenvalue:
    case errc::unstable_step:
    case errc::unsupported:
    case errc::solver_inapplicable:
    case errc::singular_system:
      return 3;
    case errc::io_error:
      return 4;
  }
  return 1;
}

}  // namespace oscnet
