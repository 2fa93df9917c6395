#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qrep {

enum class errc {
    invalid_field,
    shape_mismatch,
    no_solution,
    not_injective,
    dependent_columns,
    duplicate_id,
    dangling_endpoint,
    cyclic_quiver,
    non_commuting_square,
    quiver_mismatch,
    field_mismatch,
    component_quiver_mismatch,
    endpoint_mismatch,
    zero_object,
    index_out_of_range,
    too_large,
    candidate_not_annihilating,
    rationals_not_supported,
    syntax_error,
    unresolved_name,
};

inline const char* errc_name(errc code) {
    switch (code) {
    case errc::invalid_field: return "InvalidField";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::no_solution: return "NoSolution";
    case errc::not_injective: return "NotInjective";
    case errc::dependent_columns: return "DependentColumns";
    case errc::duplicate_id: return "DuplicateId";
    case errc::dangling_endpoint: return "DanglingEndpoint";
    case errc::cyclic_quiver: return "CyclicQuiver";
    case errc::non_commuting_square: return "NonCommutingSquare";
    case errc::quiver_mismatch: return "QuiverMismatch";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::component_quiver_mismatch: return "ComponentQuiverMismatch";
    case errc::endpoint_mismatch: return "EndpointMismatch";
    case errc::zero_object: return "ZeroObject";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::too_large: return "TooLarge";
    case errc::candidate_not_annihilating: return "CandidateNotAnnihilating";
    case errc::rationals_not_supported: return "RationalsNotSupportedForExhaustive";
    case errc::syntax_error: return "SyntaxError";
    case errc::unresolved_name: return "UnresolvedName";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

    errc code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    errc code_;
    std::string detail_;
};

/// A failure tied to a position in a text document (1-based line and column).
class parse_error : public error {
public:
    parse_error(errc code, std::size_t line, std::size_t column, const std::string& what)
        : error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace qrep
