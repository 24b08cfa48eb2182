#pragma once

#include <stdexcept>
#include <string>

namespace facetlab {

enum class Errc {
    Parse,
    EmptyFacet,
    OutOfRange,
    ResourceLimit,
    NotAMember,
    NotMaximum,
    BadParameters,
    NotSimple,
    Degenerate,
    PreconditionFailed,
    Ambiguous,
    NoArrangement,
    NoEdgeFound,
    UnboundedInput,
    BadFarFace,
    Overflow,
};

class Error : public std::runtime_error {
public:
    Error(Errc kind, const std::string& msg) : std::runtime_error(msg), kind(kind) {}
    Errc kind;
};

// Resource caps threaded through the closure and chain enumerations.
struct Limits {
    size_t member_cap = 1'000'000;        // max closure family size
    long long chain_cap = 10'000'000;     // max chains the euler oracle enumerates
};

}  // namespace facetlab
