#ifndef SYMCAP_ERROR_HPP
#define SYMCAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace symcap {

enum class ErrorCode {
  self_intersecting_polygon,
  degenerate_primitive,
  disconnected_union,
  unbounded_set,
  origin_in_set,
  invalid_slit_extent,
  too_many_vertices,
  solver_divergence,
  non_symmetric_set,
  containment_violated,
  zero_measure_slice,
  slice_hypothesis_violated,
  unsupported_set,
  domain_error,
  bad_input
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace symcap

#endif
