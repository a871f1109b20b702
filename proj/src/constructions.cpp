#include "gkforge/constructions.hpp"

#include <deque>
#include <numeric>

namespace gkforge {

namespace {

i64 checked_order_product(std::initializer_list<i64> factors, const Limits& limits) {
    i64 acc = 1;
    for (i64 f : factors) {
        if (f > 0 && acc > static_cast<i64>(limits.element_cap) / f + 1)
            throw CapExceeded("requested group order exceeds element cap " +
                              std::to_string(limits.element_cap));
        acc *= f;
    }
    if (acc > static_cast<i64>(limits.element_cap))
        throw CapExceeded("requested group order " + std::to_string(acc) +
                          " exceeds element cap " + std::to_string(limits.element_cap));
    return acc;
}

GroupPtr generate_expecting(int degree, std::vector<Perm> gens, i64 expected_order, Limits limits,
                            std::string name) {
    GroupPtr g = PermGroup::generate(degree, std::move(gens), limits, std::move(name));
    if (g->order() != expected_order)
        throw Error("internal: construction of " + (g->name().empty() ? "group" : g->name()) +
                    " produced order " + std::to_string(g->order()) + ", expected " +
                    std::to_string(expected_order));
    return g;
}

} // namespace

GroupPtr cyclic_group(i64 n, Limits limits, std::string name) {
    if (n < 1) throw Error("cyclic group order must be positive, got " + std::to_string(n));
    checked_order_product({n}, limits);
    std::vector<int> img(static_cast<size_t>(n));
    for (i64 i = 0; i < n; ++i) img[static_cast<size_t>(i)] = static_cast<int>((i + 1) % n);
    return generate_expecting(static_cast<int>(n), {Perm(std::move(img))}, n, limits,
                              std::move(name));
}

GroupPtr dihedral_group(i64 order, Limits limits, std::string name) {
    if (order < 4 || order % 2 != 0)
        throw Error("dihedral group order must be even and at least 4, got " +
                    std::to_string(order));
    checked_order_product({order}, limits);
    const i64 n = order / 2;
    if (n == 2) {
        // two commuting reflections on disjoint pairs of points
        return generate_expecting(4, {Perm({1, 0, 2, 3}), Perm({0, 1, 3, 2})}, 4, limits,
                                  std::move(name));
    }
    std::vector<int> rot(static_cast<size_t>(n)), refl(static_cast<size_t>(n));
    for (i64 i = 0; i < n; ++i) {
        rot[static_cast<size_t>(i)] = static_cast<int>((i + 1) % n);
        refl[static_cast<size_t>(i)] = static_cast<int>((n - i) % n);
    }
    return generate_expecting(static_cast<int>(n), {Perm(std::move(rot)), Perm(std::move(refl))},
                              order, limits, std::move(name));
}

GroupPtr symmetric_group(int n, Limits limits, std::string name) {
    if (n < 1 || n > 20)
        throw Error("symmetric group degree must be between 1 and 20, got " + std::to_string(n));
    i64 fact = 1;
    for (int i = 2; i <= n; ++i) fact = checked_order_product({fact, i}, limits);
    std::vector<Perm> gens;
    if (n >= 2) {
        std::vector<int> swap01(static_cast<size_t>(n));
        std::iota(swap01.begin(), swap01.end(), 0);
        swap01[0] = 1;
        swap01[1] = 0;
        gens.emplace_back(std::move(swap01));
    }
    if (n >= 3) {
        std::vector<int> cycle(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) cycle[static_cast<size_t>(i)] = (i + 1) % n;
        gens.emplace_back(std::move(cycle));
    }
    return generate_expecting(n, std::move(gens), fact, limits, std::move(name));
}

GroupPtr alternating_group(int n, Limits limits, std::string name) {
    if (n < 3 || n > 20)
        throw Error("alternating group degree must be between 3 and 20, got " + std::to_string(n));
    i64 half = 1;
    for (int i = 3; i <= n; ++i) half = checked_order_product({half, i}, limits);
    std::vector<Perm> gens;
    std::vector<int> three(static_cast<size_t>(n));
    std::iota(three.begin(), three.end(), 0);
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    gens.emplace_back(std::move(three));
    if (n >= 4) {
        std::vector<int> cycle(static_cast<size_t>(n));
        std::iota(cycle.begin(), cycle.end(), 0);
        if (n % 2 == 1) {
            for (int i = 0; i < n; ++i) cycle[static_cast<size_t>(i)] = (i + 1) % n;
        } else {
            for (int i = 1; i < n; ++i) cycle[static_cast<size_t>(i)] = i % (n - 1) + 1;
        }
        gens.emplace_back(std::move(cycle));
    }
    return generate_expecting(n, std::move(gens), half, limits, std::move(name));
}

GroupPtr generalized_quaternion_group(i64 order, Limits limits, std::string name) {
    if (order < 8 || order % 4 != 0)
        throw Error("generalized quaternion order must be a multiple of 4, at least 8, got " +
                    std::to_string(order));
    checked_order_product({order}, limits);
    const i64 m = order / 4;
    const i64 half = 2 * m;
    auto pt = [&](i64 i, i64 eps) {
        return static_cast<int>(eps * half + ((i % half) + half) % half);
    };
    std::vector<int> a(static_cast<size_t>(order)), b(static_cast<size_t>(order));
    for (i64 i = 0; i < half; ++i) {
        a[static_cast<size_t>(pt(i, 0))] = pt(i + 1, 0);
        a[static_cast<size_t>(pt(i, 1))] = pt(i - 1, 1);
        b[static_cast<size_t>(pt(i, 0))] = pt(i, 1);
        b[static_cast<size_t>(pt(i, 1))] = pt(i + m, 0);
    }
    return generate_expecting(static_cast<int>(order), {Perm(std::move(a)), Perm(std::move(b))},
                              order, limits, std::move(name));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, Limits limits, std::string name) {
    const i64 expected = checked_order_product({a->order(), b->order()}, limits);
    const int da = a->degree(), db = b->degree();
    std::vector<Perm> gens;
    for (const Perm& p : a->generators()) {
        std::vector<int> img(static_cast<size_t>(da + db));
        for (int x = 0; x < da; ++x) img[static_cast<size_t>(x)] = p[x];
        for (int y = 0; y < db; ++y) img[static_cast<size_t>(da + y)] = da + y;
        gens.emplace_back(std::move(img));
    }
    for (const Perm& p : b->generators()) {
        std::vector<int> img(static_cast<size_t>(da + db));
        for (int x = 0; x < da; ++x) img[static_cast<size_t>(x)] = x;
        for (int y = 0; y < db; ++y) img[static_cast<size_t>(da + y)] = da + p[y];
        gens.emplace_back(std::move(img));
    }
    return generate_expecting(da + db, std::move(gens), expected, limits, std::move(name));
}

GroupPtr semidirect_product(const GroupPtr& kernel, const GroupPtr& complement,
                            const std::vector<std::vector<Perm>>& action, Limits limits,
                            std::string name) {
    if (action.size() != complement->generators().size())
        throw InconsistentAction("need one action row per complement generator: got " +
                                 std::to_string(action.size()) + " rows for " +
                                 std::to_string(complement->generators().size()) + " generators");
    const i64 nk = kernel->order();
    const i64 nh = complement->order();
    const i64 expected = checked_order_product({nk, nh}, limits);
    const auto& kgens = kernel->generator_indices();

    // One automorphism of the kernel per complement generator, as an index map.
    std::vector<std::vector<int>> gen_aut;
    for (size_t i = 0; i < action.size(); ++i) {
        const auto& row = action[i];
        if (row.size() != kgens.size())
            throw NotAnAutomorphism("action row " + std::to_string(i) + " lists " +
                                    std::to_string(row.size()) + " images for " +
                                    std::to_string(kgens.size()) + " kernel generators");
        std::vector<int> img;
        for (const Perm& p : row) {
            if (p.degree() != kernel->degree())
                throw NotAnAutomorphism("action image degree " + std::to_string(p.degree()) +
                                        " does not match kernel degree " +
                                        std::to_string(kernel->degree()));
            int idx = kernel->index_of(p);
            if (idx < 0)
                throw NotAnAutomorphism("action image " + p.cycle_string() +
                                        " is not an element of the kernel");
            img.push_back(idx);
        }
        std::vector<int> aut(static_cast<size_t>(nk), -1);
        std::vector<char> used(static_cast<size_t>(nk), 0);
        aut[static_cast<size_t>(kernel->identity_index())] = kernel->identity_index();
        used[static_cast<size_t>(kernel->identity_index())] = 1;
        std::deque<int> queue{kernel->identity_index()};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (size_t j = 0; j < kgens.size(); ++j) {
                int y = kernel->mul(x, kgens[j]);
                int fy = kernel->mul(aut[static_cast<size_t>(x)], img[j]);
                int& slot = aut[static_cast<size_t>(y)];
                if (slot == -1) {
                    if (used[static_cast<size_t>(fy)])
                        throw NotAnAutomorphism("generator images define a non-injective map");
                    slot = fy;
                    used[static_cast<size_t>(fy)] = 1;
                    queue.push_back(y);
                } else if (slot != fy) {
                    throw NotAnAutomorphism(
                        "generator images do not extend to an automorphism of the kernel");
                }
            }
        }
        gen_aut.push_back(std::move(aut));
    }

    // The per-generator automorphisms must assemble into a homomorphism from
    // the complement into Aut(kernel): walk the complement's Cayley graph and
    // compare every edge.
    auto compose = [&](const std::vector<int>& first, const std::vector<int>& then) {
        std::vector<int> out(first.size());
        for (size_t x = 0; x < first.size(); ++x)
            out[x] = then[static_cast<size_t>(first[x])];
        return out;
    };
    std::vector<std::vector<int>> aut_of(static_cast<size_t>(nh));
    std::vector<int> identity_map(static_cast<size_t>(nk));
    std::iota(identity_map.begin(), identity_map.end(), 0);
    aut_of[static_cast<size_t>(complement->identity_index())] = identity_map;
    std::deque<int> hqueue{complement->identity_index()};
    const auto& hgens = complement->generator_indices();
    while (!hqueue.empty()) {
        int x = hqueue.front();
        hqueue.pop_front();
        for (size_t i = 0; i < hgens.size(); ++i) {
            int y = complement->mul(x, hgens[i]);
            std::vector<int> cand = compose(aut_of[static_cast<size_t>(x)], gen_aut[i]);
            auto& slot = aut_of[static_cast<size_t>(y)];
            if (slot.empty()) {
                slot = std::move(cand);
                hqueue.push_back(y);
            } else if (slot != cand) {
                throw InconsistentAction(
                    "action rows do not respect the complement's relations");
            }
        }
    }

    // Points 0..|kernel|-1 enumerate kernel elements, the rest complement
    // elements.  Kernel generators act by right translation on the kernel
    // part; complement generators act by the automorphism on the kernel part
    // and by right translation on their own part.
    const int deg = static_cast<int>(nk + nh);
    std::vector<Perm> gens;
    for (int kg : kgens) {
        std::vector<int> img(static_cast<size_t>(deg));
        for (i64 x = 0; x < nk; ++x)
            img[static_cast<size_t>(x)] = kernel->mul(static_cast<int>(x), kg);
        for (i64 y = 0; y < nh; ++y) img[static_cast<size_t>(nk + y)] = static_cast<int>(nk + y);
        gens.emplace_back(std::move(img));
    }
    for (size_t i = 0; i < hgens.size(); ++i) {
        std::vector<int> img(static_cast<size_t>(deg));
        for (i64 x = 0; x < nk; ++x) img[static_cast<size_t>(x)] = gen_aut[i][static_cast<size_t>(x)];
        for (i64 y = 0; y < nh; ++y)
            img[static_cast<size_t>(nk + y)] =
                static_cast<int>(nk + complement->mul(static_cast<int>(y), hgens[i]));
        gens.emplace_back(std::move(img));
    }
    return generate_expecting(deg, std::move(gens), expected, limits, std::move(name));
}

GroupPtr wreath_product(const GroupPtr& base, const GroupPtr& top, Limits limits,
                        std::string name) {
    const int k = top->degree();
    const int da = base->degree();
    i64 expected = top->order();
    for (int i = 0; i < k; ++i) expected = checked_order_product({expected, base->order()}, limits);
    const int deg = k * da;
    std::vector<Perm> gens;
    for (int blk = 0; blk < k; ++blk) {
        for (const Perm& p : base->generators()) {
            std::vector<int> img(static_cast<size_t>(deg));
            std::iota(img.begin(), img.end(), 0);
            for (int r = 0; r < da; ++r) img[static_cast<size_t>(blk * da + r)] = blk * da + p[r];
            gens.emplace_back(std::move(img));
        }
    }
    for (const Perm& p : top->generators()) {
        std::vector<int> img(static_cast<size_t>(deg));
        for (int blk = 0; blk < k; ++blk)
            for (int r = 0; r < da; ++r) img[static_cast<size_t>(blk * da + r)] = p[blk] * da + r;
        gens.emplace_back(std::move(img));
    }
    return generate_expecting(deg, std::move(gens), expected, limits, std::move(name));
}

} // namespace gkforge
