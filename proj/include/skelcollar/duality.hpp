#pragma once

#include "skelcollar/birmaps.hpp"
#include "skelcollar/bundles.hpp"
#include "skelcollar/skeleton.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace skelcollar::duality {

/// O(j) + O(-j) on the n-collar as the residues of j and -j.
struct CollarPair {
    int n = 1;
    int first = 0;
    int second = 0;
    bundles::LineCertificate first_certificate;
    bundles::LineCertificate second_certificate;

    bool verifies() const { return first_certificate.verifies() && second_certificate.verifies(); }
    friend bool operator==(const CollarPair& a, const CollarPair& b) {
        return a.n == b.n && a.first == b.first && a.second == b.second;
    }
};

/// Residues of an arbitrary splitting integer.
CollarPair collar_pair(int n, int j);

/// L_j of T*P^(n-1) to (L_n(j), L_n(-j)). Requires 0 <= j <= n-1.
CollarPair dual_of_lagrangian(int n, int j);

/// Inverse assignment; throws NotAPair unless the residues are negatives mod n.
int dual_of_bundle_pair(int n, std::pair<int, int> residues);

struct DualityEntry {
    int n = 1;
    int j = 0;
    skeleton::SkeletonComponent component;
    CollarPair pair;
};

struct SquareOptions {
    /// Inclusion step of the def arrow; anything other than 1 breaks the square.
    int s = 1;
    int samples = 50;
    std::uint64_t seed = 1;
};

struct SquareReport {
    int n = 1;
    int j = 0;
    int s = 1;
    /// Factor dimensions of bir: source P^a x P^b, target P^a' x P^b'.
    std::vector<int> bir_source;
    std::vector<int> bir_target;
    birmaps::Verdict bir_forward;
    birmaps::Verdict bir_backward;
    /// Skeleton index reached by bir, read from the target factor dimensions.
    int bir_index = 0;
    bool bir_shapes_match = false;
    CollarPair dual_top;
    CollarPair dual_bottom;
    /// Splitting integers of the def family at tau = 0, 1, 2, 1/3.
    std::vector<int> def_profile;
    bool def_endpoint_verified = false;
    CollarPair def_source;
    CollarPair def_target;
    bool verdict = false;
    std::string first_failure;
};

/// Checks dual(bir(L_j)) against the source of the def arrow into dual(L_j).
/// Requires 0 <= j <= n-2.
SquareReport square_check(int n, int j, const SquareOptions& options = {});

struct DualityReport {
    int n = 1;
    std::vector<DualityEntry> entries;
    std::vector<SquareReport> squares;

    bool all_verified() const;
};

DualityReport duality_report(int n, const SquareOptions& options = {});

}  // namespace skelcollar::duality
