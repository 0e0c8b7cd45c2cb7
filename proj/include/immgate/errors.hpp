#pragma once

#include <stdexcept>
#include <string>

namespace immgate {

/// Failure categories shared across the library.  Callers that care about
/// the distinction between "outside the supported data window" and a real
/// input error should dispatch on code() rather than parse messages.
enum class errc {
    malformed_input,
    malformed_indices,
    out_of_table,
    missing_composition_data,
    budget_exceeded,
    odd_half_degree,
    diagonal_terms_present,
    missing_class_data,
    not_applicable,
    odd_codimension,
    degenerate_form,
    wrong_parity,
    non_even_form,
    signature_not_divisible_by_8,
    non_integral_r,
    invalid_codimension,
    table_integrity,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::malformed_input: return "malformed-input";
        case errc::malformed_indices: return "malformed-indices";
        case errc::out_of_table: return "out-of-table";
        case errc::missing_composition_data: return "missing-composition-data";
        case errc::budget_exceeded: return "budget-exceeded";
        case errc::odd_half_degree: return "odd-half-degree";
        case errc::diagonal_terms_present: return "diagonal-terms-present";
        case errc::missing_class_data: return "missing-class-data";
        case errc::not_applicable: return "not-applicable";
        case errc::odd_codimension: return "odd-codimension";
        case errc::degenerate_form: return "degenerate-form";
        case errc::wrong_parity: return "wrong-parity";
        case errc::non_even_form: return "non-even-form";
        case errc::signature_not_divisible_by_8: return "signature-not-divisible-by-8";
        case errc::non_integral_r: return "non-integral-r";
        case errc::invalid_codimension: return "invalid-codimension";
        case errc::table_integrity: return "table-integrity";
    }
    return "unknown";
}

}  // namespace immgate
