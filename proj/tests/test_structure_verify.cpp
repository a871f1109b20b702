#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <set>
#include <string>
#include <vector>

#include "gkforge/constructions.hpp"
#include "gkforge/gk.hpp"
#include "gkforge/group.hpp"
#include "gkforge/structure.hpp"

using namespace gkforge;

namespace {

GroupPtr frobenius_21() {
    return semidirect_product(cyclic_group(7), cyclic_group(3),
                              {{Perm::parse_cycles("(1 3 5 7 2 4 6)", 7)}}, {}, "F21");
}

GroupPtr frobenius_55() {
    return semidirect_product(cyclic_group(11), cyclic_group(5),
                              {{Perm::parse_cycles("(1 4 7 10 2 5 8 11 3 6 9)", 11)}}, {}, "F55");
}

GroupPtr frobenius_20() {
    return semidirect_product(cyclic_group(5), cyclic_group(4),
                              {{Perm::parse_cycles("(1 3 5 2 4)", 5)}}, {}, "F20");
}

// Permutation of the nonzero vectors of F_q^2 induced by an invertible
// row-major matrix [a b; c d]: (x, y) -> (a x + b y, c x + d y) mod q.
Perm matrix_perm(int q, std::array<int, 4> m) {
    auto index_of = [q](int x, int y) { return x * q + y - 1; }; // (0,0) excluded
    std::vector<int> images(static_cast<size_t>(q * q - 1));
    for (int x = 0; x < q; ++x) {
        for (int y = 0; y < q; ++y) {
            if (x == 0 && y == 0) continue;
            int nx = (m[0] * x + m[1] * y) % q;
            int ny = (m[2] * x + m[3] * y) % q;
            images[static_cast<size_t>(index_of(x, y))] =
                index_of(nx, ny);
        }
    }
    return Perm(images);
}

// The binary octahedral group: the normalizer of a quaternion subgroup of
// SL(2,7), generated by the quaternion units i, j, the tetrahedral rotation
// (-1+i+j+k)/2, and the 45-degree unit (i+j)/sqrt(2), acting regularly on the
// 48 nonzero vectors of F_7^2.
GroupPtr binary_octahedral() {
    std::vector<Perm> gens = {
        matrix_perm(7, {0, 6, 1, 0}), // i
        matrix_perm(7, {2, 3, 3, 5}), // j
        matrix_perm(7, {6, 2, 3, 0}), // (-1+i+j+k)/2
        matrix_perm(7, {3, 3, 6, 4}), // (i+j)/sqrt(2)
    };
    return PermGroup::generate(48, gens, {}, "BO48");
}

// GL(2,3) on the 8 nonzero vectors of F_3^2: the two elementary transvections
// generate SL(2,3), and diag(2,1) supplies the missing determinant.
GroupPtr gl_2_3() {
    std::vector<Perm> gens = {
        matrix_perm(3, {1, 1, 0, 1}),
        matrix_perm(3, {1, 0, 1, 1}),
        matrix_perm(3, {2, 0, 0, 1}),
    };
    return PermGroup::generate(8, gens, {}, "GL(2,3)");
}

std::vector<i64> chain_orders(const SigmaSeries& s) {
    std::vector<i64> out;
    for (const auto& h : s.chain) out.push_back(h.order());
    return out;
}

} // namespace

TEST_CASE("Frobenius detection") {
    SUBCASE("A4 over the Klein four-group") {
        auto w = is_frobenius(alternating_group(4));
        REQUIRE(w.has_value());
        CHECK(w->kernel.order() == 4);
        CHECK(w->complement_order == 3);
    }
    SUBCASE("dihedral of order 10 over C5") {
        auto w = is_frobenius(dihedral_group(10));
        REQUIRE(w.has_value());
        CHECK(w->kernel.order() == 5);
    }
    SUBCASE("semidirect Frobenius families") {
        for (const auto& [g, kernel_order] :
             std::vector<std::pair<GroupPtr, i64>>{{frobenius_20(), 5},
                                                   {frobenius_21(), 7},
                                                   {frobenius_55(), 11}}) {
            auto w = is_frobenius(g);
            REQUIRE(w.has_value());
            CHECK(w->kernel.order() == kernel_order);
            CHECK(w->complement_order == g->order() / kernel_order);
        }
    }
    SUBCASE("negatives") {
        CHECK(!is_frobenius(symmetric_group(4)).has_value());
        CHECK(!is_frobenius(cyclic_group(6)).has_value());
        CHECK(!is_frobenius(generalized_quaternion_group(8)).has_value());
        CHECK(!is_frobenius(dihedral_group(12)).has_value());
        CHECK(!is_frobenius(direct_product(frobenius_21(), cyclic_group(2))).has_value());
    }
    SUBCASE("frobenius_with_kernel on explicit handles") {
        GroupPtr d10 = dihedral_group(10);
        for (const SubgroupHandle& n : d10->normal_subgroups()) {
            if (n.order() == 5) CHECK(frobenius_with_kernel(d10, n));
        }
        GroupPtr s4 = symmetric_group(4);
        for (const SubgroupHandle& n : s4->normal_subgroups()) {
            if (n.order() == 12) CHECK(!frobenius_with_kernel(s4, n));
            if (n.order() == 4) CHECK(!frobenius_with_kernel(s4, n));
        }
    }
}

TEST_CASE("2-Frobenius detection") {
    SUBCASE("S4") {
        auto w = is_2frobenius(symmetric_group(4));
        REQUIRE(w.has_value());
        CHECK(w->f1.order() == 4);
        CHECK(w->f2.order() == 12);
        CHECK(w->upper_kernel_cyclic);
        CHECK(w->upper_kernel_odd);
        CHECK(w->top_cyclic);
        CHECK(w->f1_noncyclic);
        CHECK(w->classification_flags());
    }
    SUBCASE("negatives") {
        CHECK(!is_2frobenius(alternating_group(4)).has_value());
        CHECK(!is_2frobenius(frobenius_21()).has_value());
        CHECK(!is_2frobenius(cyclic_group(6)).has_value());
        CHECK(!is_2frobenius(dihedral_group(12)).has_value());
        CHECK(!is_2frobenius(cyclic_group(1)).has_value());
    }
    SUBCASE("Frobenius and 2-Frobenius exclude each other on samples") {
        for (const GroupPtr& g : {symmetric_group(4), alternating_group(4), frobenius_20(),
                                  cyclic_group(12), dihedral_group(10)}) {
            CHECK(!(is_frobenius(g).has_value() && is_2frobenius(g).has_value()));
        }
    }
}

TEST_CASE("upper sigma-series and sigma-length") {
    GroupPtr s4 = symmetric_group(4);
    SUBCASE("S4 at sigma={2}") {
        SigmaSeries s = sigma_series_upper(s4, {2});
        CHECK(chain_orders(s) == std::vector<i64>{1, 1, 4, 12, 24});
        CHECK(s.sigma_factor_count() == 2);
        CHECK(sigma_length(s4, {2}) == 2);
    }
    SUBCASE("S4 at sigma={3}") {
        SigmaSeries s = sigma_series_upper(s4, {3});
        CHECK(chain_orders(s) == std::vector<i64>{1, 4, 12, 24});
        CHECK(sigma_length(s4, {3}) == 1);
    }
    SUBCASE("whole prime set and empty set") {
        CHECK(sigma_length(s4, {2, 3}) == 1);
        CHECK(sigma_length(s4, {}) == 0);
        CHECK(sigma_length(s4, {5}) == 0);
        CHECK(sigma_length(cyclic_group(1), {2}) == 0);
        CHECK(sigma_length(cyclic_group(6), {2}) == 1);
        CHECK(sigma_length(cyclic_group(6), {3}) == 1);
    }
    SUBCASE("insolvable groups stall") {
        CHECK_THROWS_AS(sigma_length(alternating_group(5), {2}), NotSolvable);
    }
}

TEST_CASE("sigma-length matches the brute-force oracle") {
    std::vector<GroupPtr> groups = {
        symmetric_group(4),
        alternating_group(4),
        cyclic_group(6),
        cyclic_group(12),
        cyclic_group(30),
        dihedral_group(12),
        dihedral_group(10),
        frobenius_20(),
        frobenius_21(),
        frobenius_55(),
        generalized_quaternion_group(16),
        direct_product(frobenius_21(), cyclic_group(2)),
    };
    std::vector<std::set<i64>> sigmas = {{2}, {3}, {5}, {7}, {2, 3}, {2, 5}, {3, 7},
                                         {5, 11}, {2, 3, 5}, {}};
    for (const GroupPtr& g : groups) {
        for (const auto& sigma : sigmas) {
            CAPTURE(g->name());
            CHECK(sigma_length(g, sigma) == sigma_length_bruteforce(g, sigma));
        }
    }
}

TEST_CASE("brute-force sigma-length guards") {
    CHECK_THROWS_AS(sigma_length_bruteforce(cyclic_group(401), {2}), BoundExceeded);
    // E16 has 67 subgroups, all normal.
    GroupPtr e16 = direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                  direct_product(cyclic_group(2), cyclic_group(2)));
    CHECK_THROWS_AS(sigma_length_bruteforce(e16, {2}), BoundExceeded);
}

TEST_CASE("odd core") {
    CHECK(odd_core(symmetric_group(4)).order() == 1);
    CHECK(odd_core(cyclic_group(6)).order() == 3);
    CHECK(odd_core(frobenius_21()).order() == 21);
    CHECK(odd_core(dihedral_group(10)).order() == 5);
    // C3 x F55 is normal of odd order 165.
    CHECK(odd_core(direct_product(symmetric_group(3), frobenius_55())).order() == 165);
}

TEST_CASE("order-48 recognition") {
    GroupPtr bo = binary_octahedral();
    REQUIRE(bo->order() == 48);
    // Quaternion counting: +/-1, six unit quaternions of order 4 plus twelve
    // 45-degree units of order 4, sixteen (+/-1 +/- i +/- j +/- k)/2 of orders
    // 3 and 6, and twelve order-8 units.
    CHECK(bo->spectrum().to_string() == "{1:1, 2:1, 3:8, 4:18, 6:8, 8:12}");
    CHECK(is_2s4_minus(bo));

    GroupPtr gl = gl_2_3();
    REQUIRE(gl->order() == 48);
    CHECK(!is_2s4_minus(gl));
    CHECK(!is_isomorphic(bo, gl));

    CHECK(!is_2s4_minus(cyclic_group(48)));
    CHECK(!is_2s4_minus(symmetric_group(4)));
    // Q16 x C3 also has a unique involution but its center is too big.
    CHECK(!is_2s4_minus(direct_product(generalized_quaternion_group(16), cyclic_group(3))));
}

TEST_CASE("series certificates") {
    SUBCASE("S4 with the empty cut set") {
        GroupPtr s4 = symmetric_group(4);
        auto cert = find_series_certificate(s4, {});
        REQUIRE(cert.has_value());
        CHECK(cert->g0.order() == 1);
        CHECK(cert->g1.order() == 4);
        CHECK(cert->g2.order() == 4);
        CHECK(cert->g3.order() == 12);
        CHECK(cert->top_class == "nilpotent");
        CHECK(!cert->exceptional);
        CHECK(cert->fitting_length_top == 1);
        CHECK(revalidate_series_certificate(s4, *cert) == "");
        CHECK(certificate_to_text(s4, *cert) ==
              "series: |G0|=1 |G1|=4 |G2|=4 |G3|=12 |G|=24\n"
              "factor1: sigma-group primes={}\n"
              "factor2: nilpotent pi1-group primes={2}\n"
              "factor3: sigma-group primes={}\n"
              "factor4: nilpotent pi2-group primes={3}\n"
              "top: nilpotent\n"
              "exceptional-check: 2s4minus=false\n");
    }
    SUBCASE("F21 x C2 at the cut vertex 2") {
        GroupPtr g = direct_product(frobenius_21(), cyclic_group(2));
        auto cert = find_series_certificate(g, {2});
        REQUIRE(cert.has_value());
        CHECK(cert->g0.order() == 1);
        CHECK(cert->g1.order() == 7);
        CHECK(cert->g2.order() == 7);
        // G/C7 is C6, already nilpotent, so the first chain stops at G3 = C7.
        CHECK(cert->g3.order() == 7);
        CHECK(cert->top_class == "nilpotent");
        CHECK(cert->partition.pi1 == std::set<i64>{7});
        CHECK(revalidate_series_certificate(g, *cert) == "");
    }
    SUBCASE("both 2-cuts of S3 x F55") {
        GroupPtr g = direct_product(symmetric_group(3), frobenius_55());
        for (const std::set<i64>& sigma : {std::set<i64>{2, 3}, std::set<i64>{5, 11}}) {
            auto cert = find_series_certificate(g, sigma);
            REQUIRE(cert.has_value());
            CHECK(revalidate_series_certificate(g, *cert) == "");
        }
    }
    SUBCASE("tampered certificates are rejected") {
        GroupPtr s4 = symmetric_group(4);
        auto cert = find_series_certificate(s4, {});
        REQUIRE(cert.has_value());
        SeriesCertificate bad = *cert;
        bad.g3 = bad.g1; // breaks the pi2 factor: G/G3 is no longer nilpotent
        CHECK(revalidate_series_certificate(s4, bad) != "");
        SeriesCertificate wrong_top = *cert;
        wrong_top.top_class = "exceptional";
        CHECK(revalidate_series_certificate(s4, wrong_top) != "");
    }
    SUBCASE("non-cut sets are rejected") {
        CHECK_THROWS_AS(find_series_certificate(cyclic_group(210), {2}), NotACutSet);
        CHECK_THROWS_AS(find_series_certificate(cyclic_group(30), {}), NotACutSet);
    }
}

TEST_CASE("length bounds") {
    SUBCASE("wedge group F21 x C2") {
        GroupPtr g = direct_product(frobenius_21(), cyclic_group(2));
        LengthBoundReport r = check_length_bounds(g, {2});
        CHECK(r.sigma_len == 1);
        CHECK(r.sigma_bound_ok);
        CHECK(r.cut_vertex_case);
        CHECK(r.fitting_len == 2);
        CHECK(r.fitting_bound_ok);
        CHECK(!r.exceptional_used);
        CHECK(r.pass());
    }
    SUBCASE("2-cut of S3 x F55") {
        GroupPtr g = direct_product(symmetric_group(3), frobenius_55());
        LengthBoundReport r = check_length_bounds(g, {2, 3});
        CHECK(r.sigma_len == 1);
        CHECK(!r.cut_vertex_case);
        CHECK(r.pass());
    }
    SUBCASE("disconnected graphs accept the empty cut set") {
        LengthBoundReport r = check_length_bounds(symmetric_group(4), {});
        CHECK(r.sigma_len == 0);
        CHECK(r.pass());
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(check_length_bounds(cyclic_group(30), {2}), NotACutSet);
        CHECK_THROWS_AS(check_length_bounds(alternating_group(5), {}), MoreThanTwoComponents);
    }
}

TEST_CASE("Fitting subgroup equals the lattice brute-force maximum") {
    std::vector<GroupPtr> groups = {
        symmetric_group(4),  alternating_group(4),       cyclic_group(30),
        dihedral_group(12),  frobenius_20(),             frobenius_21(),
        generalized_quaternion_group(16),
        direct_product(symmetric_group(3), cyclic_group(5)),
    };
    for (const GroupPtr& g : groups) {
        CAPTURE(g->name());
        SubgroupHandle fit = fitting_subgroup(g);
        const SubgroupHandle* best = nullptr;
        for (const SubgroupHandle& n : g->normal_subgroups()) {
            if (!is_nilpotent(subgroup_as_group(n))) continue;
            if (best == nullptr || n.order() > best->order()) best = &n;
        }
        REQUIRE(best != nullptr);
        CHECK(best->order() == fit.order());
        CHECK(best->members == fit.members);
    }
}
