#include "skelcollar/duality.hpp"

#include "skelcollar/deform.hpp"
#include "skelcollar/error.hpp"

#include <algorithm>

namespace skelcollar::duality {

namespace {

void require_index(int n, int j, int top) {
    if (n < 1) throw Error(Errc::InvalidInput, "n must be at least 1");
    if (j < 0 || j > top) {
        throw Error(Errc::IndexOutOfRange,
                    "index " + std::to_string(j) + " outside 0.." + std::to_string(top) + " for n = " + std::to_string(n));
    }
}

/// Factor dimensions (base, fiber) of the compactified component.
std::vector<int> component_shape(const skeleton::Classification& c) { return {c.base_dim, c.rank}; }

}  // namespace

CollarPair collar_pair(int n, int j) {
    CollarPair p;
    p.n = n;
    p.first_certificate = bundles::line_bundle_normal_form(n, j);
    p.second_certificate = bundles::line_bundle_normal_form(n, -j);
    p.first = p.first_certificate.residue;
    p.second = p.second_certificate.residue;
    return p;
}

CollarPair dual_of_lagrangian(int n, int j) {
    require_index(n, j, n - 1);
    return collar_pair(n, j);
}

int dual_of_bundle_pair(int n, std::pair<int, int> residues) {
    if (n < 1) throw Error(Errc::InvalidInput, "n must be at least 1");
    const auto [a, b] = residues;
    if (a < 0 || a >= n || b < 0 || b >= n || (a + b) % n != 0) {
        throw Error(Errc::NotAPair, "(" + std::to_string(a) + ", " + std::to_string(b) +
                                        ") are not negative residues mod " + std::to_string(n));
    }
    return a;
}

SquareReport square_check(int n, int j, const SquareOptions& options) {
    if (n < 2) throw Error(Errc::InvalidInput, "the square needs n >= 2");
    require_index(n, j, n - 2);
    SquareReport r;
    r.n = n;
    r.j = j;
    r.s = options.s;
    const auto fail = [&](const std::string& what) {
        if (r.first_failure.empty()) r.first_failure = what;
    };

    const auto step = birmaps::bir_step(n, j);
    r.bir_source = step.forward.source;
    r.bir_target = step.forward.target;
    r.bir_forward = birmaps::verify_birational(step.forward, step.inverse, options.samples, options.seed);
    r.bir_backward = birmaps::verify_birational(step.inverse, step.forward, options.samples, options.seed);
    if (!r.bir_forward.ok()) fail("bir forward round trip: " + r.bir_forward.first_failure);
    if (!r.bir_backward.ok()) fail("bir backward round trip: " + r.bir_backward.first_failure);
    r.bir_index = r.bir_target.front();
    const auto comps = skeleton::skeleton(n - 1);
    r.bir_shapes_match = component_shape(comps[j].classification) == r.bir_source &&
                         component_shape(comps[r.bir_index].classification) == r.bir_target;
    if (!r.bir_shapes_match) fail("bir factors do not match the skeleton components");

    r.dual_top = dual_of_lagrangian(n, j);
    r.dual_bottom = dual_of_lagrangian(n, r.bir_index);
    if (!r.dual_top.verifies() || !r.dual_bottom.verifies()) fail("line bundle certificate");

    const auto family = deform::deformation_family(deform::make_class(n, j, {}), options.s);
    r.def_endpoint_verified = family.endpoint_verified;
    if (!r.def_endpoint_verified) fail("def endpoint certificate");
    r.def_profile = deform::family_splitting_profile(family, {0, 1, 2, exact::Rational(1, 3)});
    const bool constant = std::all_of(r.def_profile.begin() + 1, r.def_profile.end(),
                                      [&](int v) { return v == r.def_profile[1]; });
    if (!constant) fail("def profile is not constant on tau != 0");
    r.def_source = collar_pair(n, r.def_profile[0]);
    r.def_target = collar_pair(n, r.def_profile[1]);
    if (!(r.def_target == r.dual_top)) fail("def arrow does not end at dual(L_j)");
    if (!(r.def_source == r.dual_bottom)) {
        fail("dual(bir(L_j)) = (" + std::to_string(r.dual_bottom.first) + ", " + std::to_string(r.dual_bottom.second) +
             ") but the def source is (" + std::to_string(r.def_source.first) + ", " +
             std::to_string(r.def_source.second) + ")");
    }
    r.verdict = r.first_failure.empty();
    return r;
}

bool DualityReport::all_verified() const {
    return std::all_of(squares.begin(), squares.end(), [](const SquareReport& s) { return s.verdict; });
}

DualityReport duality_report(int n, const SquareOptions& options) {
    if (n < 2) throw Error(Errc::InvalidInput, "the duality report needs n >= 2");
    DualityReport rep;
    rep.n = n;
    const auto comps = skeleton::skeleton(n - 1);
    for (int j = 0; j < n; ++j) rep.entries.push_back({n, j, comps[j], dual_of_lagrangian(n, j)});
    for (int j = 0; j + 1 < n; ++j) rep.squares.push_back(square_check(n, j, options));
    return rep;
}

}  // namespace skelcollar::duality
