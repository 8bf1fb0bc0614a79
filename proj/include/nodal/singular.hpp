#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nodal/families.hpp"
#include "nodal/multipoly.hpp"

namespace nodal {

enum class NodeClass { A1_node, higher_or_degenerate, nonsingular };
std::string to_string(NodeClass c);

using ComplexPoint = std::array<std::complex<double>, 4>;

struct SingularPointRecord {
    /// True when `point` holds exact coordinates (first nonzero entry scaled to 1).
    bool exact = false;
    std::vector<Scalar> point;
    /// Floating coordinates, scaled so the entry of largest modulus is 1.
    ComplexPoint approx{};
    /// Max |dF/dx_i| at the scaled point; zero for exact records.
    double gradient_residual = 0;
    int hessian_rank = 0;
    NodeClass classification = NodeClass::nonsingular;
    /// Irrational point reported numerically together with its Galois conjugate.
    bool conjugate_pair = false;
    /// Found by Newton iteration and then confirmed exactly on a rational snap.
    bool snapped = false;
    /// Where the point came from, e.g. "edge L1=L2", "trope x1=y2=z1", "newton".
    std::string origin;
};

/// Scales so the coordinate of largest modulus is 1.
ComplexPoint normalize_point(const ComplexPoint& p);
ComplexPoint to_complex(const std::vector<Scalar>& p);
/// Max coordinate difference after normalizing both points at the largest entry of a.
double point_distance(const ComplexPoint& a, const ComplexPoint& b);

/// Exact check of a homogeneous F (in x0..x3) at a rational point.
SingularPointRecord verify_singular(const MultiPoly& F, const std::vector<Scalar>& P);
/// Floating check at a complex point; rank by singular values relative to the largest.
SingularPointRecord verify_singular_numeric(const MultiPoly& F, const ComplexPoint& P, double rank_tol = 1e-7);

/// Singularity of a fibre of the two-equation family at (x; y): both equations vanish and the
/// 2x7 Jacobian in (y0, y1, y2, x0..x3) has rank at most 1.
struct FamilyPointCheck {
    bool on_fibre = false;
    int jacobian_rank = 0;
    [[nodiscard]] bool singular() const { return on_fibre && jacobian_rank <= 1; }
};
FamilyPointCheck verify_family_singular(const DeformationSpec& spec, const std::vector<Scalar>& x,
                                        const std::vector<Scalar>& y);
/// The displayed 2x4 block matrix (y2, y1, -2y0 Phi, -y0^2 dPhi; a2, a1, -Q, -y0 dQ), evaluated.
std::vector<std::vector<Scalar>> family_rank_matrix(const DeformationSpec& spec, const std::vector<Scalar>& x,
                                                    const std::vector<Scalar>& y);

/// Intersection of Q with each edge Li = Lj = 0, checked on F = Q^2 - scale * L1 L2 L3 L4.
std::vector<SingularPointRecord> structural_nodes_tetrahedral(const MultiPoly& Q, const std::array<MultiPoly, 4>& L,
                                                              const Scalar& scale = Scalar(1));

/// Six tropes x1, x2, y1, y2, z1, z2 (linear forms) of a quartic in rational form.
struct Tropes {
    MultiPoly x1, x2, y1, y2, z1, z2;
};
/// (X)^2 + (Y)^2 + (Z)^2 - 2YZ - 2XZ - 2XY with X = x1 x2 and so on.
MultiPoly trope_quartic(const Tropes& t);
/// Tropes of the fourteen-nodal family: c^2 F equals the trope quartic.
Tropes fourteen_nodal_tropes(const FourteenNodalFamily& f);
/// 8 points x_i = y_j = z_k = 0 and 6 points on pair lines; verified on the given quartic
/// (default: the trope quartic).
std::vector<SingularPointRecord> structural_nodes_fourteen(const Tropes& t,
                                                           const std::optional<MultiPoly>& quartic = std::nullopt);

struct FamilyLocusPoint {
    std::vector<Scalar> x;
    std::vector<Scalar> y;
    std::string origin;
    FamilyPointCheck check;
};

struct NormalForm {
    /// phi(x1, x2), psi(u0, x1, x2) and y1 (y2 - a2 psi(a2 y1, x1, x2)) - phi in the chart x3 = y0 = 1, Q = u0.
    MultiPoly phi, psi, normal_form;
    /// First equation after u0 = a2 y1, minus the normal form; zero when consistent.
    MultiPoly residual;
};

struct FamilySingularReport {
    /// (i) non-isolated part above alpha1 alpha2 = 0 in y0 = 0.
    std::vector<std::string> nonisolated_components;
    /// Sample points of those components with the rank check.
    std::vector<FamilyLocusPoint> nonisolated_samples;
    /// (ii) isolated points over Q = Phi = 0 with dPhi proportional to dQ.
    std::vector<FamilyLocusPoint> isolated;
    /// Irrational isolated x-locations (numeric, conjugate pairs).
    std::vector<SingularPointRecord> isolated_numeric;
    /// (iii) local normal form when alpha1 = 0 and alpha2 != 0.
    std::optional<NormalForm> normal_form;
};

/// Requires constant alphas. `planes` are the linear factors of Phi (their product must equal
/// Phi up to a constant); part (ii) is computed from them.
FamilySingularReport family_singular_locus(const DeformationSpec& spec, const std::vector<MultiPoly>& planes,
                                           std::uint64_t seed = 1);

/// A point of P^1 x P^1, exact or numeric.
struct RulingNode {
    bool exact = true;
    RulingPoint point;
    std::array<std::complex<double>, 4> approx{};  // (s0, s1, t0, t1), each pair scaled
    /// Number of smooth branches through the point.
    int branches = 0;
    int delta = 0;
    bool numeric = false;
};

struct DiscriminantNodes {
    std::vector<RulingNode> nodes;
    int delta = 0;
    /// Number of irreducible components after splitting degenerate (1,1)-forms.
    int components = 0;
    bool numeric_fallback = false;
};

/// Split input: a list of forms of type (1,1), (1,0) or (0,1) in s0, s1, t0, t1.
DiscriminantNodes discriminant_curve_nodes(const std::vector<MultiPoly>& factors);
/// Unstructured input: numeric search for singular points of phi = 0 (flagged records).
DiscriminantNodes discriminant_curve_nodes(const MultiPoly& phi, std::uint64_t seed = 1);

/// Randomized square-free test: some restriction to a line {s = const} has nonzero discriminant.
bool is_square_free(const MultiPoly& phi, std::uint64_t seed = 1);

struct NumericSearchConfig {
    int starts = 2000;  // per chart
    double tol = 1e-8;
    int max_iter = 50;
    std::uint64_t seed = 1;
    /// 0 means: NODAL_FAMILIES_THREADS or the hardware concurrency.
    unsigned threads = 0;
    long snap_max_den = 10000;
};

/// Newton iteration on the partials in each affine chart; deduplicated, sorted, snapped.
std::vector<SingularPointRecord> numeric_singular_search(const MultiPoly& F, const NumericSearchConfig& config = {});

/// Worker count from NODAL_FAMILIES_THREADS (if set) capped by the request.
unsigned worker_count(unsigned requested);

/// Every record in `expected` has a partner in `found` within tol and vice versa.
struct CensusAgreement {
    bool agree = false;
    int matched = 0;
    int unmatched_expected = 0;
    int unmatched_found = 0;
};
CensusAgreement compare_census(const std::vector<SingularPointRecord>& expected,
                               const std::vector<SingularPointRecord>& found, double tol);

/// Number of pairwise distinct points (distance above tol).
int count_distinct(const std::vector<SingularPointRecord>& records, double tol = 1e-9);

}  // namespace nodal
