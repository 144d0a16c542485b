#pragma once

#include "carlitz/field.hpp"

#include <string>
#include <vector>

namespace carlitz {

struct SelfTestCase {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SelfTestReport {
    int q = 0;
    int prec = 0;
    std::vector<SelfTestCase> cases;
    bool pass = false;
};

/**
 * Named end-to-end battery over one field: field axioms, polynomial
 * division, Bernoulli-Carlitz support, period methods and lattice zeros,
 * the zeta and main-identity verifiers, the reciprocal expansion, the
 * telescoping identity, and the floating-point checks.  Exceptions are
 * caught per case and reported as failures.
 */
SelfTestReport run_selftest(const FieldPtr& F, int prec = 40, int threads = 1);

} // namespace carlitz
