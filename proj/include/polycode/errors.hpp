#ifndef POLYCODE_ERRORS_HPP
#define POLYCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polycode {

enum class errc {
    non_prime_p,
    reducible_modulus,
    field_too_large,
    zero_element,
    not_a_subfield,
    mixed_fields,
    division_by_zero_poly,
    both_zero,
    zero_constant,
    empty_list,
    zero_poly,
    support_mismatch,
    length_mismatch,
    bad_support,
    representative_collision,
    not_trinomial,
    not_a_divisor,
    zero_code,
    irreducible_case,
    not_in_subfield,
    compatibility_failed,
    budget_exceeded,
    parse_error,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace polycode

#endif
