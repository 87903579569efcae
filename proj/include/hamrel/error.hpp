#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamrel {

enum class ErrorCode {
    domain,
    invalid_vector,
    degenerate_dimension,
    invalid_anchors,
    invalid_bridge_point,
    singular_system,
    inconsistent_anchors,
    cap_exceeded,
    bad_graph,
    bad_input,
};

// Stable short identifier, used as the CLI diagnostic code.
std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hamrel
