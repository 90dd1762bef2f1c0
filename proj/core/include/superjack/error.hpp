#pragma once

#include <stdexcept>
#include <string>

namespace superjack {

// Every failure the library can signal, so callers (and the CLI's structured
// error reports) can dispatch on the kind rather than parse messages.
enum class errc {
    division_by_zero,
    theta_excluded,
    theta_pole,
    weight_mismatch,
    box_outside_diagram,
    not_in_fat_hook,
    nonzero_remainder,
    asymmetric_input,
    not_an_eigenfunction,
    kernel_label_in_fat_hook,
    invalid_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::division_by_zero: return "division-by-zero";
        case errc::theta_excluded: return "excluded-parameter";
        case errc::theta_pole: return "pole";
        case errc::weight_mismatch: return "weight-mismatch";
        case errc::box_outside_diagram: return "box-outside-diagram";
        case errc::not_in_fat_hook: return "not-in-fat-hook";
        case errc::nonzero_remainder: return "nonzero-remainder";
        case errc::asymmetric_input: return "asymmetric-input";
        case errc::not_an_eigenfunction: return "not-an-eigenfunction";
        case errc::kernel_label_in_fat_hook: return "kernel-label-in-fat-hook";
        case errc::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* code_name() const noexcept { return errc_name(code_); }

private:
    errc code_;
};

}  // namespace superjack
