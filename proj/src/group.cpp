#include "gkforge/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace gkforge {

// ---------------------------------------------------------------- spectrum

bool OrderSpectrum::has_order_divisible_by(i64 d) const {
    for (const auto& [ord, cnt] : counts)
        if (ord % d == 0) return true;
    return false;
}

std::set<i64> OrderSpectrum::order_set() const {
    std::set<i64> s;
    for (const auto& [ord, cnt] : counts) s.insert(ord);
    return s;
}

i64 OrderSpectrum::total() const {
    i64 t = 0;
    for (const auto& [ord, cnt] : counts) t += cnt;
    return t;
}

std::string OrderSpectrum::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [ord, cnt] : counts) {
        if (!first) os << ", ";
        os << ord << ':' << cnt;
        first = false;
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------- handles

bool SubgroupHandle::contains_index(int idx) const {
    return std::binary_search(members.begin(), members.end(), idx);
}

bool SubgroupHandle::contains(const SubgroupHandle& other) const {
    return std::includes(members.begin(), members.end(), other.members.begin(),
                         other.members.end());
}

// ---------------------------------------------------------------- PermGroup

GroupPtr PermGroup::generate(int degree, std::vector<Perm> gens, Limits limits,
                             std::string name) {
    if (degree < 1)
        throw MalformedPermutation("degree must be at least 1");
    for (const Perm& p : gens)
        if (p.degree() != degree)
            throw MalformedPermutation("generator degree " + std::to_string(p.degree()) +
                                       " does not match group degree " + std::to_string(degree));

    auto g = std::shared_ptr<PermGroup>(new PermGroup());
    g->degree_ = degree;
    g->generators_ = gens;
    g->limits_ = limits;
    g->name_ = std::move(name);

    std::unordered_map<Perm, int, PermHash> seen;
    std::vector<Perm> pool;
    Perm id(degree);
    seen.emplace(id, 0);
    pool.push_back(id);
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        size_t cur = queue.front();
        queue.pop_front();
        for (const Perm& gen : gens) {
            Perm next = pool[cur] * gen;
            if (seen.emplace(next, static_cast<int>(pool.size())).second) {
                if (pool.size() + 1 > limits.element_cap)
                    throw CapExceeded("element closure surpassed cap " +
                                      std::to_string(limits.element_cap));
                pool.push_back(std::move(next));
                queue.push_back(pool.size() - 1);
            }
        }
    }

    std::sort(pool.begin(), pool.end());
    g->elements_ = std::move(pool);
    g->index_.reserve(g->elements_.size() * 2);
    for (size_t i = 0; i < g->elements_.size(); ++i)
        g->index_.emplace(g->elements_[i], static_cast<int>(i));
    for (const Perm& gen : g->generators_)
        g->generator_indices_.push_back(g->index_.at(gen));
    return g;
}

int PermGroup::index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

int PermGroup::mul(int a, int b) const {
    return index_.at(element(a) * element(b));
}

int PermGroup::inv(int a) const { return index_.at(element(a).inverse()); }

int PermGroup::conj(int x, int g) const {
    return index_.at(element(x).conjugated_by(element(g)));
}

const OrderSpectrum& PermGroup::spectrum() const {
    std::call_once(spectrum_once_, [this] {
        for (const Perm& p : elements_) spectrum_.counts[p.order()] += 1;
    });
    return spectrum_;
}

const std::vector<std::vector<int>>& PermGroup::conjugacy_classes() const {
    std::call_once(classes_once_, [this] {
        const int n = static_cast<int>(elements_.size());
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            std::vector<int> cls{i};
            seen[static_cast<size_t>(i)] = 1;
            std::deque<int> queue{i};
            while (!queue.empty()) {
                int x = queue.front();
                queue.pop_front();
                for (int gidx : generator_indices_) {
                    int y = conj(x, gidx);
                    if (!seen[static_cast<size_t>(y)]) {
                        seen[static_cast<size_t>(y)] = 1;
                        cls.push_back(y);
                        queue.push_back(y);
                    }
                }
            }
            std::sort(cls.begin(), cls.end());
            classes_.push_back(std::move(cls));
        }
        // classes are discovered by ascending least member, so already ordered
    });
    return classes_;
}

const std::vector<SubgroupHandle>& PermGroup::normal_subgroups() const {
    if (order() > limits_.normal_lattice_bound)
        throw BoundExceeded("normal-subgroup enumeration bound " +
                            std::to_string(limits_.normal_lattice_bound) +
                            " exceeded by group of order " + std::to_string(order()));
    std::call_once(lattice_once_, [this] {
        GroupPtr self = shared_from_this();
        std::set<std::vector<int>> found;
        // normal closures of single classes; a class generates a normal subgroup
        for (const auto& cls : conjugacy_classes())
            found.insert(close_indices(*this, cls));
        found.insert({identity_index()});
        // close under pairwise joins
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<int>> snapshot(found.begin(), found.end());
            for (size_t i = 0; i < snapshot.size() && !grew; ++i) {
                for (size_t j = i + 1; j < snapshot.size(); ++j) {
                    if (std::includes(snapshot[i].begin(), snapshot[i].end(),
                                      snapshot[j].begin(), snapshot[j].end()) ||
                        std::includes(snapshot[j].begin(), snapshot[j].end(),
                                      snapshot[i].begin(), snapshot[i].end()))
                        continue;
                    std::vector<int> both = snapshot[i];
                    both.insert(both.end(), snapshot[j].begin(), snapshot[j].end());
                    std::sort(both.begin(), both.end());
                    both.erase(std::unique(both.begin(), both.end()), both.end());
                    auto join = close_indices(*this, both);
                    if (found.insert(join).second) grew = true;
                }
            }
        }
        for (const auto& members : found) {
            SubgroupHandle h;
            h.parent = self;
            h.members = members;
            h.is_normal = verify_subgroup_normal(*this, members);
            if (!h.is_normal)
                throw Error("internal: class-closure join produced a non-normal subgroup");
            lattice_.push_back(std::move(h));
        }
        std::sort(lattice_.begin(), lattice_.end(),
                  [](const SubgroupHandle& a, const SubgroupHandle& b) {
                      if (a.members.size() != b.members.size())
                          return a.members.size() < b.members.size();
                      return a.members < b.members;
                  });
    });
    return lattice_;
}

SubgroupHandle PermGroup::full_handle() const {
    SubgroupHandle h;
    h.parent = shared_from_this();
    h.members.resize(elements_.size());
    for (size_t i = 0; i < elements_.size(); ++i) h.members[i] = static_cast<int>(i);
    h.is_normal = true;
    return h;
}

SubgroupHandle PermGroup::trivial_handle() const {
    SubgroupHandle h;
    h.parent = shared_from_this();
    h.members = {identity_index()};
    h.is_normal = true;
    return h;
}

GroupPtr group_from_generators(int degree, const std::vector<Perm>& gens, Limits limits,
                               std::string name) {
    return PermGroup::generate(degree, gens, limits, std::move(name));
}

OrderSpectrum order_spectrum(const GroupPtr& g) { return g->spectrum(); }

// ------------------------------------------------------- subgroup machinery

std::vector<int> close_indices(const PermGroup& g, std::vector<int> seed) {
    std::vector<char> in(static_cast<size_t>(g.order()), 0);
    std::vector<int> out;
    std::deque<int> queue;
    auto push = [&](int idx) {
        if (!in[static_cast<size_t>(idx)]) {
            in[static_cast<size_t>(idx)] = 1;
            out.push_back(idx);
            queue.push_back(idx);
        }
    };
    push(g.identity_index());
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int s : seed) push(g.mul(x, s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> conjugation_closure(const PermGroup& g, std::vector<int> seed) {
    std::vector<char> in(static_cast<size_t>(g.order()), 0);
    std::vector<int> out;
    std::deque<int> queue;
    for (int s : seed)
        if (!in[static_cast<size_t>(s)]) {
            in[static_cast<size_t>(s)] = 1;
            out.push_back(s);
            queue.push_back(s);
        }
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int gidx : g.generator_indices()) {
            int y = g.conj(x, gidx);
            if (!in[static_cast<size_t>(y)]) {
                in[static_cast<size_t>(y)] = 1;
                out.push_back(y);
                queue.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> normal_closure(const PermGroup& g, std::vector<int> seed) {
    return close_indices(g, conjugation_closure(g, std::move(seed)));
}

std::vector<int> greedy_generators(const PermGroup& g, const std::vector<int>& members) {
    std::vector<int> gens;
    std::vector<int> cur{g.identity_index()};
    if (members.size() <= 1) return gens;
    for (int idx : members) {
        if (std::binary_search(cur.begin(), cur.end(), idx)) continue;
        gens.push_back(idx);
        cur = close_indices(g, gens);
        if (cur.size() == members.size()) break;
    }
    return gens;
}

SubgroupHandle make_handle(const GroupPtr& g, std::vector<int> members) {
    SubgroupHandle h;
    h.parent = g;
    h.members = std::move(members);
    std::sort(h.members.begin(), h.members.end());
    h.is_normal = verify_subgroup_normal(*g, h.members);
    return h;
}

bool verify_subgroup_normal(const PermGroup& g, const std::vector<int>& members) {
    for (int m : members)
        for (int gidx : g.generator_indices())
            if (!std::binary_search(members.begin(), members.end(), g.conj(m, gidx)))
                return false;
    return true;
}

GroupPtr subgroup_as_group(const SubgroupHandle& h, std::string name) {
    const PermGroup& parent = *h.parent;
    std::vector<Perm> gens;
    for (int idx : greedy_generators(parent, h.members)) gens.push_back(parent.element(idx));
    GroupPtr sub = PermGroup::generate(parent.degree(), gens, parent.limits(), std::move(name));
    if (sub->order() != h.order())
        throw Error("internal: subgroup regeneration changed the order");
    return sub;
}

std::vector<SubgroupHandle> normal_subgroups(const GroupPtr& g) { return g->normal_subgroups(); }

// ---------------------------------------------------------------- quotients

QuotientMap quotient_map(const GroupPtr& g, const SubgroupHandle& n) {
    if (n.parent.get() != g.get())
        throw NotNormal("subgroup handle belongs to a different parent group");
    if (!verify_subgroup_normal(*g, n.members))
        throw NotNormal("subgroup fails conjugation invariance");

    const int order = static_cast<int>(g->order());
    QuotientMap q;
    q.parent = g;
    q.kernel = n;
    q.coset_of.assign(static_cast<size_t>(order), -1);
    std::vector<int> reps;
    for (int i = 0; i < order; ++i) {
        if (q.coset_of[static_cast<size_t>(i)] != -1) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(i);
        for (int m : n.members) q.coset_of[static_cast<size_t>(g->mul(m, i))] = c;
    }
    const int points = static_cast<int>(reps.size());

    auto action_of = [&](int elem) {
        std::vector<int> img(static_cast<size_t>(points));
        for (int c = 0; c < points; ++c)
            img[static_cast<size_t>(c)] = q.coset_of[static_cast<size_t>(g->mul(reps[static_cast<size_t>(c)], elem))];
        return Perm(std::move(img));
    };

    std::vector<Perm> qgens;
    for (int gidx : g->generator_indices()) qgens.push_back(action_of(gidx));
    q.group = PermGroup::generate(points, qgens, g->limits(),
                                  g->name().empty() ? "" : g->name() + "/N" + std::to_string(n.order()));
    if (q.group->order() * n.order() != g->order())
        throw Error("internal: coset action order mismatch");

    q.image_index.resize(static_cast<size_t>(order));
    for (int i = 0; i < order; ++i)
        q.image_index[static_cast<size_t>(i)] = q.group->index_of(action_of(i));
    return q;
}

GroupPtr quotient(const GroupPtr& g, const SubgroupHandle& n) { return quotient_map(g, n).group; }

SubgroupHandle image_subgroup(const QuotientMap& q, const SubgroupHandle& h) {
    std::vector<int> members;
    for (int m : h.members) members.push_back(q.image_index[static_cast<size_t>(m)]);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return make_handle(q.group, std::move(members));
}

SubgroupHandle preimage_subgroup(const QuotientMap& q, const SubgroupHandle& k) {
    std::vector<int> members;
    for (size_t i = 0; i < q.image_index.size(); ++i)
        if (k.contains_index(q.image_index[i])) members.push_back(static_cast<int>(i));
    return make_handle(q.parent, std::move(members));
}

// ------------------------------------------------------------- predicates

SubgroupHandle commutator_with_group(const GroupPtr& g, const SubgroupHandle& a) {
    std::vector<int> seeds;
    for (int m : a.members)
        for (int gidx : g->generator_indices()) {
            Perm c = commutator(g->element(m), g->element(gidx));
            seeds.push_back(g->index_of(c));
        }
    return make_handle(g, normal_closure(*g, std::move(seeds)));
}

SubgroupHandle derived_subgroup(const GroupPtr& g, const SubgroupHandle& a) {
    std::vector<int> agens = greedy_generators(*g, a.members);
    std::vector<int> seeds;
    for (int x : agens)
        for (int y : agens)
            seeds.push_back(g->index_of(commutator(g->element(x), g->element(y))));
    // conjugation closure inside the subgroup, by its own generators
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    std::vector<char> in(static_cast<size_t>(g->order()), 0);
    std::deque<int> queue;
    std::vector<int> orbit;
    for (int s : seeds) {
        in[static_cast<size_t>(s)] = 1;
        orbit.push_back(s);
        queue.push_back(s);
    }
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int gidx : agens) {
            int y = g->conj(x, gidx);
            if (!in[static_cast<size_t>(y)]) {
                in[static_cast<size_t>(y)] = 1;
                orbit.push_back(y);
                queue.push_back(y);
            }
        }
    }
    SubgroupHandle h;
    h.parent = g;
    h.members = close_indices(*g, orbit);
    h.is_normal = verify_subgroup_normal(*g, h.members);
    return h;
}

bool is_nilpotent(const GroupPtr& g) {
    SubgroupHandle cur = g->full_handle();
    while (cur.order() > 1) {
        SubgroupHandle next = commutator_with_group(g, cur);
        if (next.order() == cur.order()) return false;
        cur = next;
    }
    return true;
}

bool is_solvable(const GroupPtr& g) {
    SubgroupHandle cur = g->full_handle();
    while (cur.order() > 1) {
        SubgroupHandle next = derived_subgroup(g, cur);
        if (next.order() == cur.order()) return false;
        cur = next;
    }
    return true;
}

int derived_length(const GroupPtr& g) {
    SubgroupHandle cur = g->full_handle();
    int len = 0;
    while (cur.order() > 1) {
        SubgroupHandle next = derived_subgroup(g, cur);
        if (next.order() == cur.order())
            throw NotSolvable("derived series stalls at order " + std::to_string(cur.order()));
        cur = next;
        ++len;
    }
    return len;
}

bool is_cyclic(const GroupPtr& g) { return g->spectrum().contains(g->order()); }

SubgroupHandle center(const GroupPtr& g) {
    std::vector<int> members;
    const int n = static_cast<int>(g->order());
    for (int i = 0; i < n; ++i) {
        bool central = true;
        for (int gidx : g->generator_indices())
            if (g->mul(i, gidx) != g->mul(gidx, i)) {
                central = false;
                break;
            }
        if (central) members.push_back(i);
    }
    return make_handle(g, std::move(members));
}

SubgroupHandle pi_core(const GroupPtr& g, const std::set<i64>& pi) {
    const auto& lattice = g->normal_subgroups();
    std::vector<const SubgroupHandle*> candidates;
    for (const auto& h : lattice)
        if (is_pi_number(h.order(), pi)) candidates.push_back(&h);
    const SubgroupHandle* best = nullptr;
    for (const auto* h : candidates)
        if (!best || h->order() > best->order()) best = h;
    if (!best)
        throw Error("internal: normal lattice lost the trivial subgroup");
    for (const auto* h : candidates)
        if (!best->contains(*h))
            throw Error("internal: normal pi-subgroups have no unique maximum");
    return *best;
}

SubgroupHandle fitting_subgroup(const GroupPtr& g) {
    std::vector<int> members{g->identity_index()};
    for (i64 p : group_primes(g)) {
        SubgroupHandle core = pi_core(g, {p});
        members.insert(members.end(), core.members.begin(), core.members.end());
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    SubgroupHandle fit = make_handle(g, close_indices(*g, members));
    if (!fit.is_normal)
        throw Error("internal: join of p-cores is not normal");
    if (!is_nilpotent(subgroup_as_group(fit)))
        throw Error("internal: join of p-cores is not nilpotent");
    return fit;
}

int fitting_length(const GroupPtr& g) {
    GroupPtr cur = g;
    int len = 0;
    while (cur->order() > 1) {
        SubgroupHandle fit = fitting_subgroup(cur);
        if (fit.order() == 1)
            throw NotSolvable("Fitting subgroup is trivial in a nontrivial group");
        cur = quotient(cur, fit);
        ++len;
    }
    return len;
}

// ------------------------------------------------------------- isomorphism

namespace {

std::vector<i64> class_size_profile(const PermGroup& g, std::vector<i64>& size_of_elem) {
    size_of_elem.assign(static_cast<size_t>(g.order()), 0);
    std::vector<i64> profile;
    for (const auto& cls : g.conjugacy_classes()) {
        for (int idx : cls) size_of_elem[static_cast<size_t>(idx)] = static_cast<i64>(cls.size());
        profile.push_back(static_cast<i64>(cls.size()));
    }
    std::sort(profile.begin(), profile.end());
    return profile;
}

// Extends gen_a[0..k-1] |-> gen_b[0..k-1] to a homomorphism on the subgroup
// the prefix generates; false when the extension conflicts or is not injective.
bool extends_injectively(const PermGroup& a, const PermGroup& b, const std::vector<int>& gen_a,
                         const std::vector<int>& gen_b, size_t k, size_t* reached) {
    std::vector<int> fmap(static_cast<size_t>(a.order()), -1);
    std::vector<char> used(static_cast<size_t>(b.order()), 0);
    fmap[static_cast<size_t>(a.identity_index())] = b.identity_index();
    used[static_cast<size_t>(b.identity_index())] = 1;
    std::deque<int> queue{a.identity_index()};
    size_t count = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (size_t j = 0; j < k; ++j) {
            int y = a.mul(x, gen_a[j]);
            int fy = b.mul(fmap[static_cast<size_t>(x)], gen_b[j]);
            int& slot = fmap[static_cast<size_t>(y)];
            if (slot == -1) {
                if (used[static_cast<size_t>(fy)]) return false; // not injective
                slot = fy;
                used[static_cast<size_t>(fy)] = 1;
                queue.push_back(y);
                ++count;
            } else if (slot != fy) {
                return false; // not well-defined
            }
        }
    }
    if (reached) *reached = count;
    return true;
}

} // namespace

bool is_isomorphic(const GroupPtr& a, const GroupPtr& b) {
    const i64 bound = a->limits().iso_order_bound;
    if (a->order() > bound || b->order() > bound)
        throw BoundExceeded("isomorphism test bound " + std::to_string(bound) +
                            " exceeded (orders " + std::to_string(a->order()) + ", " +
                            std::to_string(b->order()) + ")");
    if (a->order() != b->order()) return false;
    if (a->spectrum().counts != b->spectrum().counts) return false;

    std::vector<i64> class_of_a, class_of_b;
    if (class_size_profile(*a, class_of_a) != class_size_profile(*b, class_of_b)) return false;
    if (center(a).order() != center(b).order()) return false;
    if (a->order() == 1) return true;

    std::vector<int> all(static_cast<size_t>(a->order()));
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<int> gen_a = greedy_generators(*a, all);

    std::vector<std::vector<int>> candidates(gen_a.size());
    for (size_t i = 0; i < gen_a.size(); ++i) {
        i64 ord = a->element(gen_a[i]).order();
        i64 cls = class_of_a[static_cast<size_t>(gen_a[i])];
        for (int j = 0; j < static_cast<int>(b->order()); ++j)
            if (b->element(j).order() == ord && class_of_b[static_cast<size_t>(j)] == cls)
                candidates[i].push_back(j);
        if (candidates[i].empty()) return false;
    }

    std::vector<int> gen_b(gen_a.size(), -1);
    const size_t target = static_cast<size_t>(a->order());

    std::function<bool(size_t)> assign = [&](size_t depth) -> bool {
        if (depth == gen_a.size()) {
            size_t reached = 0;
            return extends_injectively(*a, *b, gen_a, gen_b, depth, &reached) && reached == target;
        }
        for (int cand : candidates[depth]) {
            gen_b[depth] = cand;
            if (extends_injectively(*a, *b, gen_a, gen_b, depth + 1, nullptr) && assign(depth + 1))
                return true;
        }
        gen_b[depth] = -1;
        return false;
    };
    return assign(0);
}

std::set<i64> group_primes(const GroupPtr& g) {
    auto v = prime_factors(g->order());
    return std::set<i64>(v.begin(), v.end());
}

} // namespace gkforge
