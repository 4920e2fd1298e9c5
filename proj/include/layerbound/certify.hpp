#ifndef LAYERBOUND_CERTIFY_HPP
#define LAYERBOUND_CERTIFY_HPP

#include <string>
#include <vector>

#include "layerbound/pathwidth.hpp"

namespace layerbound {

enum class CheckStatus { Pass, Fail, Unknown };

struct CertificationCheck {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct CertificationReport {
    int k = 0;
    std::vector<CertificationCheck> checks;
    bool overall = false;  // true iff every check passed

    bool any_unknown() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Unknown) return true;
        return false;
    }
};

/// Machine-checks, for the given k, that the wall graph is a 2-layer
/// k-planar graph with pathwidth k+1: (1) the canonical drawing has max
/// crossing count exactly k, (2) the grid graph is a minor of the wall graph,
/// (3) the wall sweep strategy converts to a width-(k+1) decomposition, and
/// (4) the grid graph has no layout of separation <= k (may come back
/// Unknown when the budget runs out). k = 0 certifies the two-vertex path.
CertificationReport certify(int k, const Budget& budget = {});

std::string format_report(const CertificationReport& report);

}  // namespace layerbound

#endif
