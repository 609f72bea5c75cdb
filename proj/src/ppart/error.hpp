#pragma once

#include <stdexcept>
#include <string>

namespace ppart {

enum class errc {
    cycle,
    out_of_range,
    comparable,
    not_comparable,
    size_mismatch,
    not_a_flag,
    infeasible,
    length,
    bump_not_unique,
    decomposition,
    parse,
    invalid_argument,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace ppart
