#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include "milnor/numeric.hpp"

namespace milnor {

/// Closed-form stability bounds for H_i of the Milnor fiber sequence.
struct StabilityReport {
    int i = 0;
    ZZ stable_degree_bound;
    ZZ local_degree_bound;
    ZZ generation_bound;
    ZZ presentation_bound;
    ZZ mu_trivial_from;

    std::string to_json() const {
        std::ostringstream os;
        os << "{\"i\": " << i << ", \"stable_degree_bound\": " << stable_degree_bound.get_str()
           << ", \"local_degree_bound\": " << local_degree_bound.get_str()
           << ", \"generation_bound\": " << generation_bound.get_str()
           << ", \"presentation_bound\": " << presentation_bound.get_str()
           << ", \"mu_trivial_from\": " << mu_trivial_from.get_str() << "}";
        return os.str();
    }
};

/// delta(H_i) <= 2i; 0 for i = 0.
inline ZZ stable_degree_bound(int i) {
    if (i < 0) throw std::domain_error("negative homological degree");
    return ZZ(2) * i;
}

/// h^max(H_i) <= 3i^2 + 6i - 1 for i >= 1; -1 for i = 0.
inline ZZ local_degree_bound(int i) {
    if (i < 0) throw std::domain_error("negative homological degree");
    if (i == 0) return ZZ(-1);
    return ZZ(3) * i * i + ZZ(6) * i - 1;
}

/// Iterates f(0) = -1, f(i) = f(i-1) + 6i + 3 and checks it against the
/// closed form for every i <= i_max.
inline bool recurrence_check(int i_max) {
    if (i_max < 1) throw std::domain_error("recurrence_check requires i_max >= 1");
    ZZ f(-1);
    for (int i = 1; i <= i_max; ++i) {
        f += ZZ(6) * i + 3;
        if (f != local_degree_bound(i)) return false;
    }
    return true;
}

/// (generation, presentation) degree bounds (8i + 3i^2, 14i + 6i^2),
/// cross-checked against the (d + N + 1, 2N + d + 2) composite built
/// from the stable and local degree bounds.
inline std::pair<ZZ, ZZ> generation_presentation_bounds(int i) {
    if (i < 0) throw std::domain_error("negative homological degree");
    ZZ gen = ZZ(8) * i + ZZ(3) * i * i;
    ZZ pres = ZZ(14) * i + ZZ(6) * i * i;
    ZZ d = stable_degree_bound(i);
    ZZ N = local_degree_bound(i);
    if (gen != d + N + 1 || pres != 2 * N + d + 2)
        throw std::logic_error("closed forms disagree with the composite bounds at i = " +
                               std::to_string(i));
    return {gen, pres};
}

/// The degree from which the roots of unity act trivially on H_i:
/// 2 + 8i + 3i^2, equal to the generation bound plus 2.
inline ZZ mu_trivial_from(int i) {
    if (i < 0) throw std::domain_error("negative homological degree");
    return ZZ(2) + ZZ(8) * i + ZZ(3) * i * i;
}

inline StabilityReport stability_report(int i) {
    StabilityReport r;
    r.i = i;
    r.stable_degree_bound = stable_degree_bound(i);
    r.local_degree_bound = local_degree_bound(i);
    auto [gen, pres] = generation_presentation_bounds(i);
    r.generation_bound = gen;
    r.presentation_bound = pres;
    r.mu_trivial_from = mu_trivial_from(i);
    return r;
}

} // namespace milnor
