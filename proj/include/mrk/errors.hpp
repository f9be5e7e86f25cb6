#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mrk {

// Every rejection carries a stable machine-readable code alongside the
// human-readable message.  The CLI maps codes to exit statuses and emits
// them in structured error objects; tests match on codes, not prose.
//
// Codes in use:
//   bad-input          malformed JSON / CLI arguments / structural data
//   bad-gram           Gram matrix not square or not symmetric
//   dimension-mismatch vector length does not match lattice rank
//   odd-coordinate     (K - c)/2 has a non-integral coordinate
//   admissibility      1 - b1 + b+ is odd, so the ASD dimension is not integral
//   indivisible        a checked exact division left a remainder
//   congruence         basic class not congruent to c1(W+) mod 2
//   unsupported-level  reducible at Uhlenbeck level > 0 in a formula path
//   degree             monomial degree outside the window a formula covers
//   setup              d_a < 0 or n_a <= 0 where an invariant was requested
//   lift-mismatch      orientation-sign inputs differ by an odd class
//   sign-parity        series term with w^2 + w.K odd
//   not-simple-type    simple-type formula applied to data with some d_s != 0
//   unknown-label      named homology class absent from the manifold's labels
//   bad-catalog        catalog arguments out of range or F^2 not realizable
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
    throw error(code, msg);
}

}  // namespace mrk
