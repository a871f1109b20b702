#pragma once

// Finite permutation groups by exhaustive element enumeration.  Everything is
// exact and deterministic: elements are kept sorted lexicographically, and all
// derived structures (classes, normal subgroups, quotients) are emitted in a
// fixed order.  Intended for small solvable groups, not for large degrees.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "gkforge/errors.hpp"
#include "gkforge/numbers.hpp"
#include "gkforge/perm.hpp"

namespace gkforge {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

struct Limits {
    size_t element_cap = 200000;     // max elements materialized by a closure
    i64 normal_lattice_bound = 10000; // max group order for normal-subgroup enumeration
    i64 iso_order_bound = 500;       // max order for isomorphism backtracking
};

// Element orders with multiplicity.
struct OrderSpectrum {
    std::map<i64, i64> counts; // order -> number of elements of that order

    bool contains(i64 order) const { return counts.count(order) != 0; }
    bool has_order_divisible_by(i64 d) const;
    std::set<i64> order_set() const;
    i64 total() const;
    std::string to_string() const; // "{1:1, 2:9, 3:8}"
    friend bool operator==(const OrderSpectrum&, const OrderSpectrum&) = default;
};

// A subgroup of a fixed parent, stored as sorted positions into the parent's
// element list.  Handles are only built by functions that have verified the
// member set is closed; is_normal is verified, never assumed.
struct SubgroupHandle {
    GroupPtr parent;
    std::vector<int> members; // ascending indices into parent->elements()
    bool is_normal = false;

    i64 order() const { return static_cast<i64>(members.size()); }
    bool contains_index(int idx) const;
    bool contains(const SubgroupHandle& other) const;
    bool same_members(const SubgroupHandle& other) const { return members == other.members; }
};

class PermGroup : public std::enable_shared_from_this<PermGroup> {
public:
    // Enumerates the closure of gens.  Throws CapExceeded when the closure
    // walk surpasses limits.element_cap, MalformedPermutation on bad input.
    static GroupPtr generate(int degree, std::vector<Perm> gens, Limits limits = {},
                             std::string name = "");

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return generators_; }
    const std::vector<int>& generator_indices() const { return generator_indices_; }
    const std::vector<Perm>& elements() const { return elements_; } // sorted
    i64 order() const { return static_cast<i64>(elements_.size()); }
    const std::string& name() const { return name_; }
    const Limits& limits() const { return limits_; }

    const Perm& element(int idx) const { return elements_[static_cast<size_t>(idx)]; }
    int index_of(const Perm& p) const;       // -1 when p is not an element
    int mul(int a, int b) const;             // index of element(a) * element(b)
    int inv(int a) const;
    int conj(int x, int g) const;            // index of g^-1 x g
    int identity_index() const { return 0; } // identity is lexicographically least

    const OrderSpectrum& spectrum() const;
    // Conjugacy classes as sorted index vectors, ordered by smallest member.
    const std::vector<std::vector<int>>& conjugacy_classes() const;
    // The complete list of normal subgroups, sorted by (order, members).
    // Throws BoundExceeded when order() exceeds limits().normal_lattice_bound.
    const std::vector<SubgroupHandle>& normal_subgroups() const;

    SubgroupHandle full_handle() const;
    SubgroupHandle trivial_handle() const;

private:
    PermGroup() = default;

    int degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<int> generator_indices_;
    std::vector<Perm> elements_;
    std::unordered_map<Perm, int, PermHash> index_;
    std::string name_;
    Limits limits_;

    mutable std::once_flag spectrum_once_;
    mutable OrderSpectrum spectrum_;
    mutable std::once_flag classes_once_;
    mutable std::vector<std::vector<int>> classes_;
    mutable std::once_flag lattice_once_;
    mutable std::vector<SubgroupHandle> lattice_;
    mutable std::string lattice_error_;
};

GroupPtr group_from_generators(int degree, const std::vector<Perm>& gens, Limits limits = {},
                               std::string name = "");
OrderSpectrum order_spectrum(const GroupPtr& g);

// --- subgroup machinery (all index vectors are sorted, parent-relative) ---

// Subgroup generated by the given elements.
std::vector<int> close_indices(const PermGroup& g, std::vector<int> seed);
// Smallest conjugation-closed superset of seed (a union of classes).
std::vector<int> conjugation_closure(const PermGroup& g, std::vector<int> seed);
// Subgroup generated by all conjugates of seed: the normal closure.
std::vector<int> normal_closure(const PermGroup& g, std::vector<int> seed);
// Short generating sequence for a member set, grown greedily in index order.
std::vector<int> greedy_generators(const PermGroup& g, const std::vector<int>& members);

SubgroupHandle make_handle(const GroupPtr& g, std::vector<int> members);
bool verify_subgroup_normal(const PermGroup& g, const std::vector<int>& members);
// The subgroup as a standalone group on the same points.
GroupPtr subgroup_as_group(const SubgroupHandle& h, std::string name = "");

std::vector<SubgroupHandle> normal_subgroups(const GroupPtr& g);

// --- quotients ---

struct QuotientMap {
    GroupPtr parent;
    GroupPtr group;             // parent / kernel, acting on right cosets
    SubgroupHandle kernel;
    std::vector<int> coset_of;  // parent element index -> coset point
    std::vector<int> image_index; // parent element index -> element index in group
};

// Coset action of g on the right cosets of n.  Coset points are numbered by
// their lexicographically least representative.  Throws NotNormal.
QuotientMap quotient_map(const GroupPtr& g, const SubgroupHandle& n);
GroupPtr quotient(const GroupPtr& g, const SubgroupHandle& n);
SubgroupHandle image_subgroup(const QuotientMap& q, const SubgroupHandle& h);
SubgroupHandle preimage_subgroup(const QuotientMap& q, const SubgroupHandle& k);

// --- structural predicates ---

// [members(a), G] as a handle (normal in G).
SubgroupHandle commutator_with_group(const GroupPtr& g, const SubgroupHandle& a);
// Derived subgroup of the subgroup a, inside the same parent.
SubgroupHandle derived_subgroup(const GroupPtr& g, const SubgroupHandle& a);

bool is_nilpotent(const GroupPtr& g);     // lower central series reaches 1
bool is_solvable(const GroupPtr& g);      // derived series reaches 1
int derived_length(const GroupPtr& g);    // throws NotSolvable
bool is_cyclic(const GroupPtr& g);
SubgroupHandle center(const GroupPtr& g);

// Largest normal pi-subgroup.
SubgroupHandle pi_core(const GroupPtr& g, const std::set<i64>& pi);
// Join of the p-cores over p | |G|; verified nilpotent.
SubgroupHandle fitting_subgroup(const GroupPtr& g);
// Length of the iterated-Fitting chain; throws NotSolvable when F(G)=1, G!=1.
int fitting_length(const GroupPtr& g);

// Generator-image backtracking with order/class-size pruning.
// Throws BoundExceeded when either order exceeds limits().iso_order_bound.
bool is_isomorphic(const GroupPtr& a, const GroupPtr& b);

std::set<i64> group_primes(const GroupPtr& g); // primes dividing |G|

} // namespace gkforge
