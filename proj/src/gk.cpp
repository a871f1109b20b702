#include "gkforge/gk.hpp"

#include <algorithm>

#include "gkforge/structure.hpp"

namespace gkforge {

std::string prime_label(i64 p) { return std::to_string(p); }

std::set<i64> labels_to_primes(const std::vector<std::string>& labels) {
    std::set<i64> out;
    for (const auto& l : labels) out.insert(std::stoll(l));
    return out;
}

Graph prime_graph(const GroupPtr& g) {
    Graph gamma;
    std::set<i64> primes = group_primes(g);
    for (i64 p : primes) gamma.add_vertex(prime_label(p));
    const OrderSpectrum& spec = g->spectrum();
    for (auto p = primes.begin(); p != primes.end(); ++p) {
        for (auto q = std::next(p); q != primes.end(); ++q) {
            if (spec.has_order_divisible_by(*p * *q)) gamma.add_edge(prime_label(*p), prime_label(*q));
        }
    }
    return gamma;
}

namespace {

// Components of gamma after removing the sigma vertices that are present.
std::vector<std::vector<std::string>> components_without(const Graph& gamma,
                                                         const std::set<i64>& sigma) {
    std::set<std::string> drop;
    for (i64 p : sigma) {
        std::string l = prime_label(p);
        if (gamma.has_vertex(l)) drop.insert(l);
    }
    return components(remove_vertices(gamma, drop));
}

} // namespace

bool is_prime_cut_set(const Graph& gamma, const std::set<i64>& sigma) {
    return components_without(gamma, sigma).size() >= 2;
}

PiPartition pi_partition(const GroupPtr& g, const std::set<i64>& sigma) {
    Graph gamma = prime_graph(g);
    std::vector<std::vector<std::string>> comps = components_without(gamma, sigma);
    if (comps.size() < 2) throw NotACutSet("removing sigma leaves a connected prime graph");
    if (comps.size() > 2)
        throw MoreThanTwoComponents("removing sigma leaves " + std::to_string(comps.size()) +
                                    " components");

    std::set<i64> side_a = labels_to_primes(comps[0]);
    std::set<i64> side_b = labels_to_primes(comps[1]);

    PiPartition part;
    part.sigma = sigma;

    SubgroupHandle core = pi_core(g, sigma);
    GroupPtr q = quotient(g, core);
    SubgroupHandle fit = fitting_subgroup(q);
    std::vector<i64> fit_factors = prime_factors(fit.order());
    std::set<i64> fitting_primes(fit_factors.begin(), fit_factors.end());
    for (i64 p : sigma) fitting_primes.erase(p);

    if (!fitting_primes.empty()) {
        i64 p = *fitting_primes.begin();
        bool in_a = side_a.count(p) != 0;
        const std::set<i64>& first = in_a ? side_a : side_b;
        for (i64 fp : fitting_primes) {
            if (first.count(fp) == 0)
                throw Error("Fitting primes of G/O_sigma(G) split across both components");
        }
        part.pi1 = first;
        part.pi2 = in_a ? side_b : side_a;
    } else {
        // Fitting subgroup of G/O_sigma(G) is a sigma-group; no side is
        // singled out, so pick the side holding the smallest prime and flag.
        i64 least_a = *side_a.begin();
        i64 least_b = *side_b.begin();
        bool a_first = least_a < least_b;
        part.pi1 = a_first ? side_a : side_b;
        part.pi2 = a_first ? side_b : side_a;
        part.fallback_used = true;
    }
    return part;
}

GruenbergKegelReport check_gruenberg_kegel(const GroupPtr& g) {
    Graph gamma = prime_graph(g);
    if (is_connected(gamma)) throw NotDisconnected("prime graph is connected");

    GruenbergKegelReport report;
    report.component_vertices = components(gamma);
    report.two_components = report.component_vertices.size() == 2;
    report.both_complete = true;
    for (const auto& comp : report.component_vertices) {
        if (!is_complete_on(gamma, comp)) report.both_complete = false;
    }

    if (auto frob = is_frobenius(g)) {
        report.witness_kind = "frobenius";
        report.detail = "kernel order " + std::to_string(frob->kernel.order()) +
                        ", complement order " + std::to_string(frob->complement_order);
    } else if (auto two = is_2frobenius(g)) {
        report.witness_kind = "2frobenius";
        report.detail = "|F1|=" + std::to_string(two->f1.order()) +
                        " |F2|=" + std::to_string(two->f2.order());
    } else {
        report.detail = "no Frobenius or 2-Frobenius witness found";
    }
    return report;
}

bool check_lucido(const GroupPtr& g) {
    return is_triangle_free(complement_graph(prime_graph(g)));
}

} // namespace gkforge
