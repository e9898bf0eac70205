#include "chain.hpp"

namespace holopack {

void ChainParams::validate() const {
    require(epsilon > 0 && epsilon < 1, ErrorCode::InvalidArgument, "epsilon must satisfy 0 < epsilon < 1");
    require(r0 > 0 && r0 < 1, ErrorCode::InvalidArgument, "r0 must satisfy 0 < r0 < 1");
    require(delta > 0 && delta < 1, ErrorCode::InvalidArgument, "delta must satisfy 0 < delta < 1");
}

void ChainConstants::scale(const std::string& name, const Rational& factor) {
    if (name == "30")
        c30 *= factor;
    else if (name == "65")
        c65 *= factor;
    else if (name == "100")
        c100 *= factor;
    else if (name == "500")
        c500 *= factor;
    else if (name == "600")
        c600 *= factor;
    else
        fail(ErrorCode::InvalidArgument, "unknown chain constant '" + name + "'");
}

namespace {

struct ChainBuilder {
    std::vector<ChainStep> steps;

    void step(std::string name, Rational lhs, Rational rhs, bool strict = false) {
        ChainStep s;
        s.name = std::move(name);
        s.holds = strict ? lhs < rhs : lhs <= rhs;
        s.margin = rhs - lhs;
        s.lhs = std::move(lhs);
        s.rhs = std::move(rhs);
        s.strict = strict;
        steps.push_back(std::move(s));
    }
};

} // namespace

ChainReport constant_chain(const ChainParams& params, const ChainConstants& k) {
    params.validate();
    const Rational& e = params.epsilon;
    const Rational& r = params.r0;
    const Rational& d = params.delta;
    const Rational r2 = r * r, r3 = r2 * r;
    const RationalInterval se = rational_sqrt_enclosure(e); // sqrt(epsilon)
    const Rational pi_lo = pi_enclosure().lo;
    const Rational target30 = rational_pow(Rational(1, 10), 30); // the 10^-30 sector milestone
    const Rational target20 = rational_pow(Rational(1, 10), 20);

    ChainBuilder b;

    // Taylor bound |a_n| <= (4/pi)^n < 2^n needs pi > 2.
    b.step("taylor_coefficient_bound", Rational(2), pi_lo, true);
    // tan^2 r <= r^2 + 2 r^4 <= 2 r^2 on r <= r0.
    b.step("apriori_tan_square", 2 * r2, Rational(1));
    b.step("two_r0_below_one", 2 * r, Rational(1), true);
    // Denominator estimate: 3*2^2 + 2^4 r^2 <= 13 and the geometric sum
    // 4 r^2/(1-2r) <= 5 r^2, then the assembled bound with the constant 30.
    b.step("denominator_series", Rational(12) + 16 * r2, Rational(13));
    b.step("denominator_geometric", Rational(4), 5 * (1 - 2 * r));
    b.step("denominator_assembly", (20 + 13 * r) * r3 + 4 * e * r2, k.c30 * r3 + e);
    // a2 estimate: 2 + 24/(1-2r)^2 <= 27, then 28 eps <= 30 eps.
    {
        Rational q = 1 - 2 * r;
        b.step("a2_series", Rational(24) + 2 * q * q, Rational(27) * q * q);
    }
    b.step("a2_bound", Rational(28), k.c30);
    // Error term E(r): 64/(1-2r)^2 <= 65 and the paper-scale magnitude.
    {
        Rational q = 1 - 2 * r;
        b.step("error_term_series", Rational(64), k.c65 * q * q);
    }
    b.step("error_term_magnitude", k.c65 * r3, target20);
    // a3 estimate: (2r + 65) r^3 <= 100 r^3 and eps + 30 sqrt(eps) r <= delta sqrt(eps).
    b.step("a3_series", 2 * r + k.c65, k.c100);
    b.step("a3_epsilon_absorb", se.hi + k.c30 * r, d);
    // Numerator: 2|a1 + 3 a3 z^2| <= 3, the delta absorption, and assembly.
    b.step("numerator_three_bound", Rational(2) + 48 * r2, Rational(3));
    {
        Rational e_term = k.c65 * r3; // E(r0) bound
        Rational lhs = k.c30 * k.c30 * se.hi * r2 + 3 * k.c30 * r + 2 * k.c30 * r * e_term;
        b.step("delta_absorb", lhs, d);
    }
    b.step("error_square_absorb", k.c65 * r3, Rational(1)); // E^2 + 3E <= 4E
    b.step("a3_square_term", 576 * r, Rational(1));         // 9*2^6 r^4 <= r^3
    b.step("numerator_assembly", (2 * k.c100 + 1) + 4 * k.c65, k.c500);
    b.step("numerator_delta_half", 3 * d, Rational(1, 2));
    // Density assembly: cross terms then 531 r^3 + (2 sqrt(eps) + 1/2) sqrt(eps)
    // <= 600 r^3 + sqrt(eps).
    b.step("density_cross_terms", 2 * k.c30 * r2, Rational(1));
    b.step("density_assembly", (k.c500 + k.c30 + 1) * r3 + 2 * e, k.c600 * r3 + Rational(1, 2) * se.lo);
    // Sector mean: (1/vol) int r^3 = (2/5) r0^3 exactly; angular deficit
    // 1 - 2/pi >= 1/3; assembled coefficient (2/5)*600 = 240.
    b.step("sector_angular_deficit", Rational(1, 3), 1 - Rational(2) / pi_lo);
    b.step("sector_assembly", Rational(2, 5) * k.c600 * r, Rational(1, 12));
    b.step("sector_bound_positive", se.hi, r2 / 4, true);
    b.step("sector_below_target", target30 + se.hi, r2 / 4, true);
    // Square composition: vol(D)/vol(K) = pi/16; final comparison against eps.
    b.step("final_below_one_minus_epsilon", e, pi_lo / 16 * target30, true);

    ChainReport report;
    report.steps = std::move(b.steps);
    report.all_hold = true;
    for (const auto& s : report.steps) {
        if (!s.holds) {
            report.all_hold = false;
            report.first_failed = s.name;
            break;
        }
    }
    report.final_bound = 1 - pi_lo / 16 * target30;
    report.one_minus_epsilon = 1 - e;
    return report;
}

ChainReport certify_chain(const ChainParams& params, const ChainConstants& consts) {
    ChainReport report = constant_chain(params, consts);
    if (!report.all_hold) fail(ErrorCode::StepFailed, report.first_failed);
    return report;
}

} // namespace holopack
