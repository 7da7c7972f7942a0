#pragma once

#include <vector>

#include "foxcalc/finquot.hpp"
#include "foxcalc/freeword.hpp"
#include "foxcalc/groupring.hpp"

namespace foxcalc {

// The free derivative with respect to generator k: the unique additive map
// with D_k(x_k) = e, D_k(x_j) = 0 for j != k, and the product rule
// D_k(uv) = D_k(u)*v + augment(u)*D_k(v); hence D_k(f^-1) = -D_k(f)*f^-1.
RingElt fox_derive(int k, const FreeWord& w);
RingElt fox_derive(int k, const RingElt& u);

// All derivatives [D_1(u), ..., D_rank(u)].  Before returning, the
// decomposition u - augment(u)*e = sum_j (x_j - 1)*D_j(u) is re-checked
// exactly; a failure would mean a defect in the derivative itself and
// raises std::logic_error.
std::vector<RingElt> fundamental_decomposition(const RingElt& u);

// Checks the congruence D_k(f^-1 n f) == D_k(n)*f modulo the ideal
// Z[F](N-1), for n in N = ker(hom), by reducing the difference into Z[G].
// Always true when the derivative is implemented correctly.
bool conjugation_formula_check(int k, const FreeWord& f, const FreeWord& n,
                               const GroupHom& hom);

}  // namespace foxcalc
