#pragma once

#include <string>
#include <vector>

#include "gkforge/group.hpp"

namespace gkforge {

// Families of concretely realized permutation groups.  Every builder returns a
// fully enumerated PermGroup and asserts the expected abstract order.

// Cyclic group of order n acting on n points (n >= 1).
GroupPtr cyclic_group(i64 n, Limits limits = {}, std::string name = "");

// Dihedral group of the given even order (>= 4).
GroupPtr dihedral_group(i64 order, Limits limits = {}, std::string name = "");

// Symmetric group on n letters (n >= 1).
GroupPtr symmetric_group(int n, Limits limits = {}, std::string name = "");

// Alternating group on n letters (n >= 3).
GroupPtr alternating_group(int n, Limits limits = {}, std::string name = "");

// Generalized quaternion / dicyclic group of order 4m (order >= 8, divisible
// by 4), realized faithfully on 4m points.
GroupPtr generalized_quaternion_group(i64 order, Limits limits = {}, std::string name = "");

// Direct product acting on the disjoint union of the factors' points.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, Limits limits = {},
                        std::string name = "");

// Semidirect product kernel x| complement.  `action` holds one row per
// complement generator h; row i lists, for every kernel generator n_j, the
// kernel element equal to h^-1 * n_j * h (as a permutation of the kernel's
// points).  Each row must extend to an automorphism of the kernel
// (NotAnAutomorphism otherwise) and the rows together must define a
// homomorphism from the complement into Aut(kernel) (InconsistentAction
// otherwise).  The result acts on |kernel| + |complement| points.
GroupPtr semidirect_product(const GroupPtr& kernel, const GroupPtr& complement,
                            const std::vector<std::vector<Perm>>& action, Limits limits = {},
                            std::string name = "");

// Imprimitive wreath product: one copy of `base` on each point of `top`, with
// `top` permuting the copies.  Degree = top.degree * base.degree, order
// |base|^top.degree * |top|.
GroupPtr wreath_product(const GroupPtr& base, const GroupPtr& top, Limits limits = {},
                        std::string name = "");

} // namespace gkforge
