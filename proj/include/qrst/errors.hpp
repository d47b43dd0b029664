#pragma once

#include <stdexcept>
#include <string>

namespace qrst {

/// Failure categories raised by the library. Each maps to one of the
/// documented error conditions of the public operations.
enum class errc {
    division_by_zero,
    pole_at_point,
    pole_on_locus,
    pole_at_one,
    degenerate_bracket,
    cell_outside_diagram,
    cell_inside_diagram,
    empty_partition,
    not_contained,
    not_horizontal_strip,
    not_cover,
    not_cover_chain,
    size_bound_exceeded,
    shape_mismatch,
    duplicate_entry,
    already_absorbed,
    invalid_parameter_range,
    parse_error,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace qrst
