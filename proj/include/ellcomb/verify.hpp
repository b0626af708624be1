// SPDX-License-Identifier: Apache-2.0
#ifndef ELLCOMB_VERIFY_HPP
#define ELLCOMB_VERIFY_HPP

#include <string>
#include <vector>

namespace ellcomb {

struct VerifyOptions {
    unsigned max_k = 12;   // depth of the k-indexed sweeps
    unsigned max_d = 30;   // depth of the cyclotomic sweeps
    unsigned rounds = 300; // randomized property-test iterations
};

struct VerifyResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short summary of what ran
};

// Runs every cross-identity suite in a fixed deterministic order.
std::vector<VerifyResult> run_verify_all(const VerifyOptions& opts);

}  // namespace ellcomb

#endif
