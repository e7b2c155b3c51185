#pragma once

#include <string>
#include <vector>

#include "dpg/gaussian.hpp"

namespace dpg {

/// The six classical polar-space families.
enum class Family { C, B, D, TwoD, TwoAEven, TwoAOdd };

const std::vector<Family>& all_families();
/// "C", "B", "D", "2D", "2A-even", "2A-odd".
std::string family_tag(Family f);
/// Inverse of family_tag; throws std::invalid_argument for unknown tags.
Family parse_family(const std::string& tag);

/// The scalar e of the family: C 1, B 1, D 0, 2D 2, 2A-even 3/2, 2A-odd 1/2.
Rational family_e(Family f);
bool is_hermitian(Family f);

struct FamilyParams {
    Family family = Family::C;
    int D = 3;

    Rational e() const { return family_e(family); }
    /// 2D, 2D+1 or 2D+2 depending on the family.
    int ambient_dimension() const;
};

/// Instance descriptor shared by the formal and concrete pipelines.
/// The formal suites depend on the family only through e.
struct Instance {
    FamilyParams params;
    long q0 = 0;  // 0 means formal q

    bool formal() const { return q0 == 0; }
    std::string label() const;
};

/// Checks that q is a prime power, returning (p, k) with q = p^k.
/// Throws std::invalid_argument otherwise.
std::pair<long, int> prime_power(long q);

/// Exact vertex count prod_{i=0}^{D-1} (q^{i+e} + 1) for a concrete instance.
Integer predicted_vertex_count(const FamilyParams& fp, long q0);

}  // namespace dpg
