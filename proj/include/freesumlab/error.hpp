#ifndef FREESUMLAB_ERROR_HPP
#define FREESUMLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace freesumlab {

enum class Errc {
  zero_vector,
  dimension_mismatch,
  not_independent,
  empty_input,
  not_full_dimensional,
  origin_missing,
  cap_exceeded,
  interpolation_mismatch,
  delta_tail_nonzero,
  methods_disagree,
  invalid_argument,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

  // Errors that indicate the artifact itself is inconsistent, as opposed to
  // bad input or a violated precondition.
  bool internal_inconsistency() const {
    return code_ == Errc::methods_disagree || code_ == Errc::interpolation_mismatch ||
           code_ == Errc::delta_tail_nonzero || code_ == Errc::internal;
  }

 private:
  Errc code_;
};

}  // namespace freesumlab

#endif
