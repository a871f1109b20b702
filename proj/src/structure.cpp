#include "gkforge/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "gkforge/constructions.hpp"

namespace gkforge {

namespace {

std::string format_prime_set(const std::vector<i64>& primes) {
    std::string out = "{";
    bool first = true;
    for (i64 p : primes) {
        if (!first) out += ",";
        out += std::to_string(p);
        first = false;
    }
    return out + "}";
}

// Quotient upper/lower as a standalone group, for subgroups normal in the
// ambient group (so lower is automatically normal in upper).
GroupPtr factor_group(const GroupPtr& g, const SubgroupHandle& lower, const SubgroupHandle& upper) {
    if (upper.order() == g->order()) return quotient(g, lower);
    GroupPtr sub = subgroup_as_group(upper);
    std::vector<int> lower_in_sub;
    lower_in_sub.reserve(lower.members.size());
    for (int idx : lower.members) {
        int s = sub->index_of(g->element(idx));
        if (s < 0) throw Error("series is not a chain: lower term escapes upper term");
        lower_in_sub.push_back(s);
    }
    std::sort(lower_in_sub.begin(), lower_in_sub.end());
    return quotient(sub, make_handle(sub, std::move(lower_in_sub)));
}

std::set<i64> complement_primes(const GroupPtr& g, const std::set<i64>& sigma) {
    std::set<i64> out = group_primes(g);
    for (i64 p : sigma) out.erase(p);
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Frobenius structure
// ---------------------------------------------------------------------------

bool frobenius_with_kernel(const GroupPtr& g, const SubgroupHandle& kernel) {
    if (kernel.parent.get() != g.get()) throw Error("kernel handle belongs to a different group");
    i64 n = kernel.order();
    i64 total = g->order();
    if (n <= 1 || n >= total) return false;
    if (std::gcd(n, total / n) != 1) return false;
    if (!kernel.is_normal && !verify_subgroup_normal(*g, kernel.members)) return false;
    // Fixed-point-free action outside the kernel: the centralizer of every
    // nonidentity kernel element stays inside the kernel.
    int id = g->identity_index();
    for (int n_idx : kernel.members) {
        if (n_idx == id) continue;
        for (int g_idx = 0; g_idx < total; ++g_idx) {
            if (kernel.contains_index(g_idx)) continue;
            if (g->mul(n_idx, g_idx) == g->mul(g_idx, n_idx)) return false;
        }
    }
    return true;
}

std::optional<FrobeniusWitness> is_frobenius(const GroupPtr& g) {
    for (const SubgroupHandle& n : g->normal_subgroups()) {
        if (n.order() <= 1 || n.order() >= g->order()) continue;
        if (frobenius_with_kernel(g, n)) {
            return FrobeniusWitness{n, g->order() / n.order()};
        }
    }
    return std::nullopt;
}

std::optional<TwoFrobeniusWitness> is_2frobenius(const GroupPtr& g) {
    if (g->order() == 1) return std::nullopt;
    SubgroupHandle f1 = fitting_subgroup(g);
    if (f1.order() <= 1 || f1.order() == g->order()) return std::nullopt;

    QuotientMap q1 = quotient_map(g, f1);
    SubgroupHandle f2_image = fitting_subgroup(q1.group);
    SubgroupHandle f2 = preimage_subgroup(q1, f2_image);

    // Lower half: F2 is Frobenius with kernel F1.
    GroupPtr f2_group = subgroup_as_group(f2);
    std::vector<int> f1_in_f2;
    f1_in_f2.reserve(f1.members.size());
    for (int idx : f1.members) f1_in_f2.push_back(f2_group->index_of(g->element(idx)));
    std::sort(f1_in_f2.begin(), f1_in_f2.end());
    if (!frobenius_with_kernel(f2_group, make_handle(f2_group, std::move(f1_in_f2))))
        return std::nullopt;

    // Upper half: G/F1 is Frobenius with kernel F2/F1.
    if (!frobenius_with_kernel(q1.group, f2_image)) return std::nullopt;

    TwoFrobeniusWitness w;
    w.f1 = f1;
    w.f2 = f2;
    GroupPtr upper_kernel = subgroup_as_group(f2_image);
    w.upper_kernel_cyclic = is_cyclic(upper_kernel);
    w.upper_kernel_odd = f2_image.order() % 2 == 1;
    w.top_cyclic = is_cyclic(quotient(q1.group, f2_image));
    w.f1_noncyclic = !is_cyclic(subgroup_as_group(f1));
    return w;
}

// ---------------------------------------------------------------------------
// sigma-length
// ---------------------------------------------------------------------------

int SigmaSeries::sigma_factor_count() const {
    int count = 0;
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        bool sigma_side = i % 2 == 1;
        if (sigma_side && chain[i + 1].order() > chain[i].order()) ++count;
    }
    return count;
}

SigmaSeries sigma_series_upper(const GroupPtr& g, const std::set<i64>& sigma) {
    SigmaSeries series;
    series.sigma = sigma;
    series.chain.push_back(g->trivial_handle());

    int consecutive_stalls = 0;
    size_t step = 0;
    while (series.chain.back().order() != g->order()) {
        const SubgroupHandle& cur = series.chain.back();
        QuotientMap q = quotient_map(g, cur);
        bool prime_side = step % 2 == 0; // sigma'-core first
        std::set<i64> pi = prime_side ? complement_primes(q.group, sigma) : sigma;
        SubgroupHandle core = pi_core(q.group, pi);
        SubgroupHandle lifted = preimage_subgroup(q, core);
        if (lifted.order() == cur.order()) {
            if (++consecutive_stalls >= 2)
                throw NotSolvable("upper sigma-series stalls below the whole group");
        } else {
            consecutive_stalls = 0;
        }
        series.chain.push_back(lifted);
        ++step;
    }
    return series;
}

int sigma_length(const GroupPtr& g, const std::set<i64>& sigma) {
    return sigma_series_upper(g, sigma).sigma_factor_count();
}

int sigma_length_bruteforce(const GroupPtr& g, const std::set<i64>& sigma) {
    if (g->order() > 400)
        throw BoundExceeded("brute-force sigma-length limited to order 400");
    const std::vector<SubgroupHandle>& lattice = g->normal_subgroups();
    if (lattice.size() > 40)
        throw BoundExceeded("brute-force sigma-length limited to 40 normal subgroups");

    const int kInf = 1 << 20;
    std::vector<int> best(lattice.size(), kInf);
    size_t full = 0;
    for (size_t i = 0; i < lattice.size(); ++i) {
        if (lattice[i].order() == 1) best[i] = 0;
        if (lattice[i].order() == g->order()) full = i;
    }
    // Lattice is sorted by order, so every containment edge goes forward.
    for (size_t j = 0; j < lattice.size(); ++j) {
        for (size_t i = 0; i < j; ++i) {
            if (best[i] == kInf) continue;
            if (lattice[i].order() >= lattice[j].order()) continue;
            if (!lattice[j].contains(lattice[i])) continue;
            i64 ratio = lattice[j].order() / lattice[i].order();
            if (is_pi_number(ratio, sigma))
                best[j] = std::min(best[j], best[i] + 1);
            if (is_pi_prime_number(ratio, sigma)) best[j] = std::min(best[j], best[i]);
        }
    }
    if (best[full] == kInf)
        throw NotSolvable("no chain of sigma- and sigma'-factors reaches the whole group");
    return best[full];
}

// ---------------------------------------------------------------------------
// Order-48 exceptional quotient
// ---------------------------------------------------------------------------

SubgroupHandle odd_core(const GroupPtr& g) {
    std::set<i64> odd = group_primes(g);
    odd.erase(2);
    return pi_core(g, odd);
}

bool is_2s4_minus(const GroupPtr& g) {
    if (g->order() != 48) return false;
    const OrderSpectrum& spec = g->spectrum();
    auto it = spec.counts.find(2);
    if (it == spec.counts.end() || it->second != 1) return false;
    SubgroupHandle z = center(g);
    if (z.order() != 2) return false;
    return is_isomorphic(quotient(g, z), symmetric_group(4));
}

// ---------------------------------------------------------------------------
// Normal-series certificates
// ---------------------------------------------------------------------------

namespace {

bool factor_nilpotent(const GroupPtr& g, const SubgroupHandle& lower, const SubgroupHandle& upper) {
    if (lower.order() == upper.order()) return true;
    return is_nilpotent(factor_group(g, lower, upper));
}

} // namespace

std::optional<SeriesCertificate> find_series_certificate(const GroupPtr& g,
                                                         const std::set<i64>& sigma) {
    PiPartition part = pi_partition(g, sigma);
    const std::vector<SubgroupHandle>& lattice = g->normal_subgroups();
    size_t n = lattice.size();

    std::vector<i64> order_of(n);
    for (size_t i = 0; i < n; ++i) order_of[i] = lattice[i].order();

    auto ratio_ok = [&](size_t lo, size_t hi, const std::set<i64>& pi) {
        return is_pi_number(order_of[hi] / order_of[lo], pi);
    };

    std::map<std::pair<size_t, size_t>, bool> nilpotent_cache;
    auto nilpotent_factor = [&](size_t lo, size_t hi) {
        if (lo == hi) return true;
        auto key = std::make_pair(lo, hi);
        auto it = nilpotent_cache.find(key);
        if (it == nilpotent_cache.end())
            it = nilpotent_cache.emplace(key, factor_nilpotent(g, lattice[lo], lattice[hi])).first;
        return it->second;
    };

    std::map<size_t, std::pair<bool, int>> top_cache; // i3 -> (nilpotent, Fitting length)
    auto top_info = [&](size_t i3) {
        auto it = top_cache.find(i3);
        if (it == top_cache.end()) {
            GroupPtr top = factor_group(g, lattice[i3], g->full_handle());
            bool nil = is_nilpotent(top);
            int flt = top->order() == 1 ? 0 : fitting_length(top);
            it = top_cache.emplace(i3, std::make_pair(nil, flt)).first;
        }
        return it->second;
    };

    bool two_s4 = is_2s4_minus(quotient(g, odd_core(g)));

    for (size_t i0 = 0; i0 < n; ++i0) {
        if (!is_pi_number(order_of[i0], sigma)) continue;
        for (size_t i1 = i0; i1 < n; ++i1) {
            if (i1 != i0 && (!lattice[i1].contains(lattice[i0]) || !ratio_ok(i0, i1, part.pi1)))
                continue;
            if (!nilpotent_factor(i0, i1)) continue;
            for (size_t i2 = i1; i2 < n; ++i2) {
                if (i2 != i1 && (!lattice[i2].contains(lattice[i1]) || !ratio_ok(i1, i2, sigma)))
                    continue;
                for (size_t i3 = i2; i3 < n; ++i3) {
                    if (i3 != i2 &&
                        (!lattice[i3].contains(lattice[i2]) || !ratio_ok(i2, i3, part.pi2)))
                        continue;
                    if (!nilpotent_factor(i2, i3)) continue;

                    auto [top_nilpotent, top_flt] = top_info(i3);
                    bool exceptional = false;
                    if (!top_nilpotent) {
                        exceptional = part.pi2.count(2) != 0 && two_s4 && top_flt == 2;
                        if (!exceptional) continue;
                    }

                    SeriesCertificate cert;
                    cert.g0 = lattice[i0];
                    cert.g1 = lattice[i1];
                    cert.g2 = lattice[i2];
                    cert.g3 = lattice[i3];
                    cert.partition = part;
                    cert.factor_classes = {"sigma-group", "nilpotent pi1-group", "sigma-group",
                                           "nilpotent pi2-group"};
                    cert.top_class = top_nilpotent ? "nilpotent" : "exceptional";
                    cert.exceptional = exceptional;
                    cert.fitting_length_top = top_flt;
                    cert.two_s4_minus = two_s4;
                    return cert;
                }
            }
        }
    }
    return std::nullopt;
}

std::string revalidate_series_certificate(const GroupPtr& g, const SeriesCertificate& cert) {
    const SubgroupHandle* terms[4] = {&cert.g0, &cert.g1, &cert.g2, &cert.g3};
    for (int i = 0; i < 4; ++i) {
        const SubgroupHandle& h = *terms[i];
        if (h.parent.get() != g.get()) return "series term G" + std::to_string(i) +
                                               " belongs to a different group";
        std::vector<int> closed = close_indices(*g, h.members);
        if (closed != h.members) return "series term G" + std::to_string(i) + " is not a subgroup";
        if (!verify_subgroup_normal(*g, h.members))
            return "series term G" + std::to_string(i) + " is not normal";
    }
    for (int i = 0; i + 1 < 4; ++i) {
        if (!terms[i + 1]->contains(*terms[i]))
            return "series is not ascending at G" + std::to_string(i);
    }

    // Partition must match a fresh computation for the same sigma.
    PiPartition fresh = pi_partition(g, cert.partition.sigma);
    if (fresh.pi1 != cert.partition.pi1 || fresh.pi2 != cert.partition.pi2 ||
        fresh.fallback_used != cert.partition.fallback_used)
        return "pi-partition does not match a fresh computation";

    if (!is_pi_number(cert.g0.order(), cert.partition.sigma)) return "G0 is not a sigma-group";
    if (!is_pi_number(cert.g1.order() / cert.g0.order(), cert.partition.pi1))
        return "G1/G0 is not a pi1-group";
    if (!factor_nilpotent(g, cert.g0, cert.g1)) return "G1/G0 is not nilpotent";
    if (!is_pi_number(cert.g2.order() / cert.g1.order(), cert.partition.sigma))
        return "G2/G1 is not a sigma-group";
    if (!is_pi_number(cert.g3.order() / cert.g2.order(), cert.partition.pi2))
        return "G3/G2 is not a pi2-group";
    if (!factor_nilpotent(g, cert.g2, cert.g3)) return "G3/G2 is not nilpotent";

    GroupPtr top = factor_group(g, cert.g3, g->full_handle());
    bool top_nilpotent = is_nilpotent(top);
    if (cert.top_class == "nilpotent") {
        if (!top_nilpotent) return "top factor is not nilpotent";
        if (cert.exceptional) return "nilpotent top marked exceptional";
    } else if (cert.top_class == "exceptional") {
        if (top_nilpotent) return "exceptional top is actually nilpotent";
        if (!cert.exceptional) return "exceptional top not flagged";
        if (cert.partition.pi2.count(2) == 0) return "exceptional case requires 2 in pi2";
        if (fitting_length(top) != 2) return "exceptional top must have Fitting length 2";
        if (!is_2s4_minus(quotient(g, odd_core(g))))
            return "exceptional case requires G/O(G) to be the binary octahedral group";
    } else {
        return "unknown top class '" + cert.top_class + "'";
    }

    int expected_flt = top->order() == 1 ? 0 : fitting_length(top);
    if (cert.fitting_length_top != expected_flt) return "top Fitting length mismatch";
    if (cert.two_s4_minus != is_2s4_minus(quotient(g, odd_core(g))))
        return "2s4minus flag mismatch";
    return "";
}

std::string certificate_to_text(const GroupPtr& g, const SeriesCertificate& cert) {
    std::ostringstream out;
    out << "series: |G0|=" << cert.g0.order() << " |G1|=" << cert.g1.order()
        << " |G2|=" << cert.g2.order() << " |G3|=" << cert.g3.order() << " |G|=" << g->order()
        << "\n";
    const SubgroupHandle* terms[4] = {&cert.g0, &cert.g1, &cert.g2, &cert.g3};
    i64 below = 1;
    for (int i = 0; i < 4; ++i) {
        i64 ratio = terms[i]->order() / below;
        below = terms[i]->order();
        out << "factor" << (i + 1) << ": " << cert.factor_classes[static_cast<size_t>(i)]
            << " primes=" << format_prime_set(prime_factors(ratio)) << "\n";
    }
    out << "top: " << cert.top_class << "\n";
    out << "exceptional-check: 2s4minus=" << (cert.two_s4_minus ? "true" : "false") << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Length bounds
// ---------------------------------------------------------------------------

LengthBoundReport check_length_bounds(const GroupPtr& g, const std::set<i64>& sigma) {
    Graph gamma = prime_graph(g);
    std::set<std::string> drop;
    for (i64 p : sigma)
        if (gamma.has_vertex(prime_label(p))) drop.insert(prime_label(p));
    size_t comps = components(remove_vertices(gamma, drop)).size();
    if (comps < 2) throw NotACutSet("removing sigma leaves a connected prime graph");
    if (comps > 2)
        throw MoreThanTwoComponents("removing sigma leaves " + std::to_string(comps) +
                                    " components");

    LengthBoundReport report;
    report.sigma_len = sigma_length(g, sigma);
    report.sigma_bound_ok = report.sigma_len <= 3;
    std::ostringstream detail;
    detail << "sigma-length=" << report.sigma_len;

    report.cut_vertex_case = sigma.size() == 1;
    if (report.cut_vertex_case) {
        report.fitting_len = fitting_length(g);
        if (report.fitting_len <= 5) {
            report.fitting_bound_ok = true;
        } else if (report.fitting_len == 6 && is_2s4_minus(quotient(g, odd_core(g)))) {
            report.fitting_bound_ok = true;
            report.exceptional_used = true;
        } else {
            report.fitting_bound_ok = false;
        }
        detail << " fitting-length=" << report.fitting_len;
        if (report.exceptional_used) detail << " (binary octahedral exception)";
    }
    report.detail = detail.str();
    return report;
}

} // namespace gkforge
