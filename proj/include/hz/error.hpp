// error.hpp — single exception type with a machine-readable failure kind.
#pragma once

#include <stdexcept>
#include <string>

namespace hz {

enum class errc {
    out_of_range,
    self_loop,
    parse_error,
    empty_component_list,
    adjacent_anchors,
    missing_second_anchor,
    merged_multi_edge,
    too_few_components,
    bad_parameter,
    overflow,
    internal_identity_violation,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::out_of_range:                return "out_of_range";
        case errc::self_loop:                   return "self_loop";
        case errc::parse_error:                 return "parse_error";
        case errc::empty_component_list:        return "empty_component_list";
        case errc::adjacent_anchors:            return "adjacent_anchors";
        case errc::missing_second_anchor:       return "missing_second_anchor";
        case errc::merged_multi_edge:           return "merged_multi_edge";
        case errc::too_few_components:          return "too_few_components";
        case errc::bad_parameter:               return "bad_parameter";
        case errc::overflow:                    return "overflow";
        case errc::internal_identity_violation: return "internal_identity_violation";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

namespace detail {

// All index arithmetic is exact 64-bit; anything past that is an error,
// never a silent wraparound.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw error(errc::overflow, "64-bit integer overflow in index arithmetic");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw error(errc::overflow, "64-bit integer overflow in index arithmetic");
    return r;
}

inline std::int64_t checked_sq(std::int64_t a) { return checked_mul(a, a); }

} // namespace detail

} // namespace hz
