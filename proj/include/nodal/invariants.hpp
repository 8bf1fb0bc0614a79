#pragma once

#include <utility>

namespace nodal {

/// Discriminant curve data: bidegree (n, n), total delta, geometric genus g, r components.
struct InvariantInput {
    long n = 3;
    long delta = 0;
    long g = 0;
    long r = 1;
    /// The curve admits a 1-dimensional symmetry group.
    bool symmetric = false;
};

/// 1 + delta + g = r + (n - 1)^2.
bool delta_genus_check(const InvariantInput& i);

/// Both printed forms of a formula.
struct FormulaPair {
    long in_delta = 0;
    long in_genus = 0;
    [[nodiscard]] bool agree() const { return in_delta == in_genus; }
};

FormulaPair w_dimension_forms(const InvariantInput& i);      // n^2+2n-7-delta, g-r+4n-7
FormulaPair z_dimension_forms(const InvariantInput& i);      // n^2+6n-15-delta, g-r+8n-15
FormulaPair triple_dimension_forms(const InvariantInput& i); // n^2+4n-8-delta, g-r+6n-8 (+1 if symmetric)
FormulaPair chi_forms(const InvariantInput& i);              // (n+1)^2-1-delta, 4n-(r-g)

struct ModuliDimensions {
    long h1_minus_h0_W = 0;
    long h1_minus_h0_Z = 0;
    long dim_triples = 0;
    long h0 = 1;
    [[nodiscard]] long h1_W() const { return h1_minus_h0_W + h0; }
    [[nodiscard]] long h1_Z() const { return h1_minus_h0_Z + h0; }
};

/// Throws std::invalid_argument for an inadmissible tuple or n < 3, std::logic_error if printed forms disagree.
ModuliDimensions moduli_dimensions(const InvariantInput& i);

/// 4n - (r - g), checked against (n+1)^2 - 1 - delta and chi(nu^* Theta_Q) - chi(Theta_D~).
long chi_normal_bundle(const InvariantInput& i);

/// n(n - 1): the twistor case g = 0, r = n. Requires n >= 1.
long twistor_delta(long n);
InvariantInput twistor_input(long n);

/// 2(n - 2), the codimension of the image of the triple deformations. Requires n >= 3.
long kernel_codimension(long n);

}  // namespace nodal
