#include "nodal/invariants.hpp"

#include <stdexcept>
#include <string>

namespace nodal {

namespace {

void require_admissible(const InvariantInput& i, const char* who) {
    if (i.delta < 0 || i.g < 0 || i.r < 1) {
        throw std::invalid_argument(std::string(who) + ": need delta >= 0, g >= 0, r >= 1");
    }
    if (!delta_genus_check(i)) {
        throw std::invalid_argument(std::string(who) + ": inadmissible tuple, 1 + delta + g != r + (n-1)^2");
    }
}

}  // namespace

bool delta_genus_check(const InvariantInput& i) { return 1 + i.delta + i.g == i.r + (i.n - 1) * (i.n - 1); }

FormulaPair w_dimension_forms(const InvariantInput& i) {
    const long n = i.n;
    return {n * n + 2 * n - 7 - i.delta, i.g - i.r + 4 * n - 7};
}

FormulaPair z_dimension_forms(const InvariantInput& i) {
    const long n = i.n;
    return {n * n + 6 * n - 15 - i.delta, i.g - i.r + 8 * n - 15};
}

FormulaPair triple_dimension_forms(const InvariantInput& i) {
    const long n = i.n, extra = i.symmetric ? 1 : 0;
    return {n * n + 4 * n - 8 - i.delta + extra, i.g - i.r + 6 * n - 8 + extra};
}

FormulaPair chi_forms(const InvariantInput& i) {
    const long n = i.n;
    return {(n + 1) * (n + 1) - 1 - i.delta, 4 * n - (i.r - i.g)};
}

ModuliDimensions moduli_dimensions(const InvariantInput& i) {
    if (i.n < 3) throw std::invalid_argument("moduli_dimensions: n >= 3");
    require_admissible(i, "moduli_dimensions");
    const FormulaPair w = w_dimension_forms(i), z = z_dimension_forms(i), t = triple_dimension_forms(i);
    if (!w.agree() || !z.agree() || !t.agree()) throw std::logic_error("moduli_dimensions: printed forms disagree");
    return {w.in_delta, z.in_delta, t.in_delta, i.symmetric ? 2 : 1};
}

long chi_normal_bundle(const InvariantInput& i) {
    require_admissible(i, "chi_normal_bundle");
    const FormulaPair c = chi_forms(i);
    // chi(nu^* Theta_Q) = 4n + 2(r - g), chi(Theta_D~) = 3(r - g)
    const long via_sequence = (4 * i.n + 2 * (i.r - i.g)) - 3 * (i.r - i.g);
    if (!c.agree() || via_sequence != c.in_genus) throw std::logic_error("chi_normal_bundle: printed forms disagree");
    return c.in_genus;
}

long twistor_delta(long n) {
    if (n < 1) throw std::invalid_argument("twistor_delta: n >= 1");
    return n * (n - 1);
}

InvariantInput twistor_input(long n) { return {n, twistor_delta(n), 0, n, false}; }

long kernel_codimension(long n) {
    if (n < 3) throw std::invalid_argument("kernel_codimension: n >= 3");
    return 2 * (n - 2);
}

}  // namespace nodal
