#pragma once

#include <string>
#include <vector>

#include "thetalift/config.hpp"
#include "thetalift/maass.hpp"

namespace thetalift {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the invariant suite behind `thetalift verify`: shell counts, Bessel
/// envelopes and transition law, Gamma identities, exponent algebra, form
/// data sanity and the coefficient bound sweep (for the given form).
/// A check that throws is reported as failed with the exception message.
std::vector<CheckResult> run_invariant_suite(const Config& cfg, const MaassForm& form, int threads = 1);

}  // namespace thetalift
