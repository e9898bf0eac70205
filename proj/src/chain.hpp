#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace holopack {

struct ChainParams {
    Rational epsilon = rational_pow(Rational(1, 10), 100);
    Rational r0 = rational_pow(Rational(1, 10), 10);
    Rational delta = rational_pow(Rational(1, 10), 5);

    static ChainParams paper() { return {}; }
    void validate() const; // 0 < epsilon, r0, delta < 1
};

// The named constants of the inequality chain. Mutable so a mutation test can
// scale one and watch the chain report the first inequality that breaks.
struct ChainConstants {
    Rational c30{30};
    Rational c65{65};
    Rational c100{100};
    Rational c500{500};
    Rational c600{600};

    // name in {"30","65","100","500","600"}; multiplies that constant.
    void scale(const std::string& name, const Rational& factor);
};

struct ChainStep {
    std::string name;
    Rational lhs;
    Rational rhs;
    bool strict = false; // requires lhs < rhs instead of <=
    bool holds = false;
    Rational margin; // rhs - lhs
};

struct ChainReport {
    std::vector<ChainStep> steps;
    bool all_hold = false;
    std::string first_failed;  // empty when all hold
    Rational final_bound;      // 1 - (pi_lo/16) * 10^-30 at paper scale; < 1 when the chain holds
    Rational one_minus_epsilon;
};

// Re-derivation of the section's constant propagation in exact rational
// arithmetic, pi replaced by the enclosure [223/71, 22/7] with each
// inequality checked against its adverse endpoint.
ChainReport constant_chain(const ChainParams& params, const ChainConstants& consts = {});

// As constant_chain but throws StepFailed naming the first failing step.
ChainReport certify_chain(const ChainParams& params, const ChainConstants& consts = {});

} // namespace holopack
