#pragma once

#include "sc/sparse_operator.hpp"

#include <vector>

namespace sc {

// Matrix of c†_{xσ} (create) or c_{xσ} from `from` to the neighbouring sector.
// Throws std::invalid_argument when the target sector is infeasible.
Operator ladder_matrix(const BasisPtr& from, int site, Spin spin, bool create);

// Product ops[0] * ops[1] * ... * ops.back() acting on `from` (the last
// operator acts first). The codomain is the shifted sector; pass `to` to reuse
// an existing basis object.
Operator fermion_string(const BasisPtr& from, const std::vector<Ladder>& ops, BasisPtr to = nullptr);

// Within-sector elementary operators.
Operator hop(const BasisPtr& b, int x, int y, Spin s);  // c†_{xσ} c_{yσ}
Operator number(const BasisPtr& b, int x, Spin s);
Operator sz(const BasisPtr& b, int x);                  // (n₊ − n₋)/2
Operator sperp_pair(const BasisPtr& b, int x, int y);   // (S⁺_x S⁻_y + S⁻_x S⁺_y)/2
// Spin raising / lowering: change (N₊, N₋) when the basis is per-spin.
Operator splus(const BasisPtr& b, int x);                // c†_{x+} c_{x−}
Operator sminus(const BasisPtr& b, int x);               // c†_{x−} c_{x+}

}  // namespace sc
