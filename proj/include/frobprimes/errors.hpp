#ifndef FROBPRIMES_ERRORS_HPP
#define FROBPRIMES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frobprimes {

// Error categories surfaced by the library. The CLI maps these to exit codes:
// validation problems -> 2, resource limits -> 3.
enum class errc {
    not_coprime,
    bad_order,
    overflow,
    limit_too_large,
    index_out_of_range,
    not_sorted,
    domain_error,
    degenerate_s,
    io_error,
    bad_argument,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what_arg)
        : std::runtime_error(what_arg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what_arg)
{
    throw error(code, what_arg);
}

} // namespace frobprimes

#endif
