#pragma once

#include <stdexcept>
#include <string>

namespace lacet {

enum class Errc {
    empty_input,
    odd_length,
    bad_multiplicity,
    label_out_of_range,
    bad_coloring,
    dimension_mismatch,
    same_pair,
    too_many_solutions,
    too_large,
    internal_inconsistency,
};

// Single exception type; code() carries the failure class.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace lacet
