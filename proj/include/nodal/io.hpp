#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "nodal/dualcurve.hpp"
#include "nodal/families.hpp"
#include "nodal/identities.hpp"
#include "nodal/invariants.hpp"
#include "nodal/singular.hpp"

namespace nodal {

using Json = nlohmann::ordered_json;

/// Q^2 - L1 L2 L3 L4.
struct TetrahedralParams {
    std::array<MultiPoly, 4> planes;
};

/// K = L1 L2 L3 with the fourth plane from l_from_point at a rational point.
struct ThirteenthParams {
    std::array<MultiPoly, 3> planes;
    std::vector<Scalar> point;
};

using FamilyParams = std::variant<TetrahedralParams, ThirteenthParams, FourteenNodalParams, TorusParams, KummerParams>;

/// {"family": ..., "params": {...}}; family is tetrahedral, thirteenth, fourteen, torus or kummer.
struct FamilySpec {
    FamilyParams params;
    [[nodiscard]] std::string family() const;
};

Json scalar_json(const Scalar& s);
/// Accepts "p/q" strings and integers.
Scalar scalar_from_json(const Json& j);

/// Throws std::invalid_argument on a malformed document.
FamilySpec family_from_json(const Json& j);
Json family_json(const FamilySpec& f);

Json record_json(const SingularPointRecord& r, const std::string& provenance);
Json agreement_json(const CensusAgreement& a);
Json identity_json(const IdentityReport& r);
Json rational_json(const RationalFunction& f);
Json invariants_json(const InvariantInput& i);

/// Canonical text: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace nodal
