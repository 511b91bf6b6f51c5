#pragma once

#include <string>
#include <vector>

namespace sc {

// One operator identity of the one-band projector algebra, checked as an
// exact matrix identity on every particle-number sector of a cluster.
struct IdentityResult {
    std::string name;
    std::string statement;
    std::string cluster;
    int instances = 0;  // (sector, site, spin, ...) cases checked
    bool holds = true;
    std::string failure;  // first failing case
};

// Names of the identities in the suite, in reporting order.
std::vector<std::string> identity_names();

// Runs every identity on each named cluster ("bond", "chain3", ...). The
// adjacent-bond vanishing identity needs two bonds sharing a site and is
// skipped on clusters without them.
std::vector<IdentityResult> run_identity_suite(const std::vector<std::string>& clusters = {"bond", "chain3"});

}  // namespace sc
