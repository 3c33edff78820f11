#ifndef GWLINES_ERRORS_HPP
#define GWLINES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gwlines {

/// Error categories shared by the library and the CLI exit-code mapping.
enum class errc {
    invalid_field,
    zero_argument,
    no_embedding,
    no_extension,
    degenerate_form,
    invalid_form,
    field_mismatch,
    unsupported_field,
    unsupported_characteristic,
    invalid_surface,
    degenerate_subspace,
    not_on_surface,
    singular_along_line,
    singular_surface,
    incomplete_enumeration,
    budget_exceeded,
    not_isolated,
    zero_not_unique,
    inconsistent_system,
    not_simple_zero,
    non_rational_line,
    internal_inconsistency,
    parse_error,
};

const char* errc_name(errc c);

class gw_error : public std::runtime_error {
public:
    gw_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw gw_error(code, what); }

} // namespace gwlines

#endif
