#pragma once

#include <stdexcept>
#include <string>

namespace coalg {

enum class Errc {
  // malformed or inconsistent input
  parse_error,
  non_prime,
  degree_out_of_range,
  division_by_zero,
  field_mismatch,
  shape_mismatch,
  degree_mismatch,
  unknown_vertex,
  unknown_element,
  duplicate_edge,
  duplicate_generator,
  loop_edge,
  invalid_sigma,
  zero_mu,
  graph_mismatch,
  not_a_morphism,
  not_invertible,
  malformed_image,
  not_generating,
  identity_generator,
  // resource cap hit before the run could finish
  size_cap_exceeded,
  group_too_large,
  search_cap_exceeded,
  enumeration_cap_exceeded,
  oracle_cap_exceeded,
  // a completed check came out false
  verification_failed,
};

// Exit-code class used by the CLI: 2 input, 3 cap, 4 verification.
int exit_category(Errc code);

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace coalg
