#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "gkforge/constructions.hpp"
#include "gkforge/group.hpp"
#include "gkforge/perm.hpp"
#include "naive_oracle.hpp"

using namespace gkforge;

namespace {

std::set<Perm> element_set(const GroupPtr& g) {
    return std::set<Perm>(g->elements().begin(), g->elements().end());
}

std::set<std::set<Perm>> lattice_as_sets(const GroupPtr& g) {
    std::set<std::set<Perm>> out;
    for (const auto& h : g->normal_subgroups()) {
        std::set<Perm> members;
        for (int idx : h.members) members.insert(g->element(idx));
        out.insert(std::move(members));
    }
    return out;
}

} // namespace

TEST_CASE("permutation basics") {
    Perm a = Perm::parse_cycles("(1 2)", 3);
    Perm b = Perm::parse_cycles("(2 3)", 3);
    // composition applies the left factor first
    CHECK((a * b).cycle_string() == "(1 3 2)");
    CHECK((b * a).cycle_string() == "(1 2 3)");
    CHECK((a * a).is_identity());
    CHECK(a.inverse() == a);

    Perm c = Perm::parse_cycles("(1 2 3)(4 5)", 6);
    CHECK(c.order() == 6);
    CHECK(c[0] == 1);
    CHECK(c[3] == 4);
    CHECK(c[5] == 5);
    CHECK(Perm::parse_cycles(c.cycle_string(), 6) == c);
    CHECK(Perm(4).cycle_string() == "()");
    CHECK(Perm::parse_cycles("()", 4) == Perm(4));

    // conjugation x |-> g^-1 x g relabels cycles by g
    Perm g = Perm::parse_cycles("(1 4)", 6);
    CHECK(c.conjugated_by(g) == Perm::parse_cycles("(4 2 3)(1 5)", 6));

    CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);

    CHECK_THROWS_AS(Perm(std::vector<int>{0, 0, 1}), MalformedPermutation);
    CHECK_THROWS_AS(Perm(std::vector<int>{0, 3}), MalformedPermutation);
    CHECK_THROWS_AS(Perm::parse_cycles("(1 8)", 7), ParseError);
    CHECK_THROWS_AS(Perm::parse_cycles("(1 2)(2 3)", 7), ParseError);
    CHECK_THROWS_AS(Perm::parse_cycles("", 4), ParseError);
    CHECK_THROWS_AS(Perm::parse_cycles("(1 x)", 4), ParseError);
}

TEST_CASE("orders by repeated multiplication agree with cycle arithmetic") {
    for (const char* text : {"(1 2 3)(4 5)", "(1 2)(3 4)(5 6 7)", "(1 2 3 4 5 6)", "()"}) {
        Perm p = Perm::parse_cycles(text, 8);
        CHECK(p.order() == oracle::perm_order(p));
    }
}

TEST_CASE("closure enumeration matches pairwise-product closure") {
    struct Sample {
        int degree;
        std::vector<const char*> gens;
        i64 order;
    };
    // the degree-7 pair generates the Frobenius group of order 21
    const Sample samples[] = {
        {7, {"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"}, 21},
        {4, {"(1 2)", "(1 2 3 4)"}, 24},
        {5, {"(1 2 3 4 5)"}, 5},
        {6, {"(1 2)(3 4)", "(1 3)(2 4)", "(5 6)"}, 8},
    };
    for (const auto& s : samples) {
        std::vector<Perm> gens;
        for (const char* t : s.gens) gens.push_back(Perm::parse_cycles(t, s.degree));
        GroupPtr g = group_from_generators(s.degree, gens);
        CHECK(g->order() == s.order);
        CHECK(element_set(g) == oracle::closure(s.degree, gens));
        std::map<i64, i64> spec;
        for (const auto& [k, v] : g->spectrum().counts) spec[k] = v;
        CHECK(spec == oracle::spectrum(element_set(g)));
    }
}

TEST_CASE("identity sits at index zero") {
    GroupPtr g = symmetric_group(4);
    CHECK(g->identity_index() == 0);
    CHECK(g->element(0).is_identity());
    GroupPtr c = cyclic_group(7);
    CHECK(c->element(0).is_identity());
}

TEST_CASE("element cap") {
    Limits tight;
    tight.element_cap = 100;
    CHECK_THROWS_AS(symmetric_group(5, tight), CapExceeded);
    CHECK_THROWS_AS(cyclic_group(101, tight), CapExceeded);
    CHECK(symmetric_group(4, tight)->order() == 24);
}

TEST_CASE("construction orders and spectra") {
    CHECK(cyclic_group(1)->order() == 1);
    CHECK(cyclic_group(12)->spectrum().to_string() == "{1:1, 2:1, 3:2, 4:2, 6:2, 12:4}");
    CHECK(is_cyclic(cyclic_group(12)));
    CHECK(is_nilpotent(cyclic_group(12)));

    CHECK(dihedral_group(4)->order() == 4);
    CHECK(dihedral_group(8)->spectrum().to_string() == "{1:1, 2:5, 4:2}");
    CHECK(dihedral_group(10)->spectrum().to_string() == "{1:1, 2:5, 5:4}");
    CHECK_FALSE(is_cyclic(dihedral_group(8)));

    CHECK(symmetric_group(1)->order() == 1);
    CHECK(symmetric_group(2)->order() == 2);
    CHECK(symmetric_group(4)->order() == 24);
    CHECK(alternating_group(3)->order() == 3);
    CHECK(alternating_group(4)->order() == 12);
    CHECK(alternating_group(5)->order() == 60);

    // generalized quaternion groups have a unique involution
    CHECK(generalized_quaternion_group(8)->spectrum().to_string() == "{1:1, 2:1, 4:6}");
    CHECK(generalized_quaternion_group(16)->spectrum().to_string() == "{1:1, 2:1, 4:10, 8:4}");

    CHECK(direct_product(cyclic_group(4), cyclic_group(6))->order() == 24);
    CHECK(wreath_product(cyclic_group(2), cyclic_group(3))->spectrum().to_string() ==
          "{1:1, 2:7, 3:8, 6:8}");
}

TEST_CASE("construction parameter validation") {
    CHECK_THROWS_AS(cyclic_group(0), Error);
    CHECK_THROWS_AS(dihedral_group(7), Error);
    CHECK_THROWS_AS(dihedral_group(2), Error);
    CHECK_THROWS_AS(generalized_quaternion_group(10), Error);
    CHECK_THROWS_AS(generalized_quaternion_group(4), Error);
    // order 12 is the dicyclic group Dic3, which is fine
    CHECK(generalized_quaternion_group(12)->spectrum().to_string() == "{1:1, 2:1, 3:2, 4:6, 6:2}");
    CHECK_THROWS_AS(alternating_group(2), Error);
}

TEST_CASE("semidirect products") {
    // Frobenius group of order 20: C5 with C4 acting by squaring the
    // generator (the action row lists the image of the kernel generator)
    GroupPtr f20 = semidirect_product(
        cyclic_group(5), cyclic_group(4),
        {{Perm::parse_cycles("(1 3 5 2 4)", 5)}});
    CHECK(f20->order() == 20);
    CHECK(f20->spectrum().to_string() == "{1:1, 2:5, 4:10, 5:4}");

    // C7 with C3 acting by squaring the generator
    GroupPtr f21 = semidirect_product(
        cyclic_group(7), cyclic_group(3),
        {{Perm::parse_cycles("(1 3 5 7 2 4 6)", 7)}});
    CHECK(f21->order() == 21);
    CHECK(f21->spectrum().to_string() == "{1:1, 3:14, 7:6}");
    GroupPtr f21_native = group_from_generators(
        7, {Perm::parse_cycles("(1 2 3 4 5 6 7)", 7), Perm::parse_cycles("(2 3 5)(4 7 6)", 7)});
    CHECK(is_isomorphic(f21, f21_native));

    // inverting C3 by an involution gives S3
    GroupPtr s3_like = semidirect_product(cyclic_group(3), cyclic_group(2),
                                          {{Perm::parse_cycles("(1 3 2)", 3)}});
    CHECK(is_isomorphic(s3_like, symmetric_group(3)));

    // trivial action realizes the direct product
    GroupPtr c3xc2 = semidirect_product(cyclic_group(3), cyclic_group(2),
                                        {{Perm::parse_cycles("(1 2 3)", 3)}});
    CHECK(is_cyclic(c3xc2));

    // sending a generator of order 4 to an element of order 2 is no automorphism
    CHECK_THROWS_AS(semidirect_product(cyclic_group(4), cyclic_group(2),
                                       {{Perm::parse_cycles("(1 3)(2 4)", 4)}}),
                    NotAnAutomorphism);
    // an image outside the kernel is no automorphism either
    CHECK_THROWS_AS(semidirect_product(cyclic_group(4), cyclic_group(2),
                                       {{Perm::parse_cycles("(1 2)", 4)}}),
                    NotAnAutomorphism);
    // an order-3 automorphism cannot come from conjugation by an involution
    CHECK_THROWS_AS(semidirect_product(cyclic_group(7), cyclic_group(2),
                                       {{Perm::parse_cycles("(1 3 5 7 2 4 6)", 7)}}),
                    InconsistentAction);
    // one action row per complement generator
    CHECK_THROWS_AS(semidirect_product(cyclic_group(3), cyclic_group(2), {}),
                    InconsistentAction);
}

TEST_CASE("normal subgroup lattices match the class-union scan") {
    std::vector<GroupPtr> groups = {
        symmetric_group(4),
        alternating_group(4),
        generalized_quaternion_group(8),
        dihedral_group(8),
        dihedral_group(12),
        cyclic_group(12),
        semidirect_product(cyclic_group(5), cyclic_group(4),
                           {{Perm::parse_cycles("(1 3 5 2 4)", 5)}}),
        semidirect_product(cyclic_group(7), cyclic_group(3),
                           {{Perm::parse_cycles("(1 3 5 7 2 4 6)", 7)}}),
    };
    for (const auto& g : groups) {
        CAPTURE(g->order());
        CHECK(lattice_as_sets(g) == oracle::normal_subgroups(element_set(g)));
    }
}

TEST_CASE("symmetric group internals") {
    GroupPtr s4 = symmetric_group(4);
    const auto& lattice = s4->normal_subgroups();
    REQUIRE(lattice.size() == 4);
    CHECK(lattice[0].order() == 1);
    CHECK(lattice[1].order() == 4);
    CHECK(lattice[2].order() == 12);
    CHECK(lattice[3].order() == 24);
    // the order-4 normal subgroup consists of the identity and the three
    // double transpositions
    for (int idx : lattice[1].members) CHECK(s4->element(idx).order() <= 2);

    CHECK(derived_length(s4) == 3);
    CHECK(is_solvable(s4));
    CHECK_FALSE(is_nilpotent(s4));
    CHECK(center(s4).order() == 1);
    CHECK(fitting_subgroup(s4).order() == 4);
    CHECK(fitting_length(s4) == 3);
    CHECK(pi_core(s4, {2}).order() == 4);
    CHECK(pi_core(s4, {3}).order() == 1);
    CHECK(pi_core(s4, {2, 3}).order() == 24);
    CHECK(group_primes(s4) == std::set<i64>{2, 3});

    auto greedy = greedy_generators(*s4, s4->full_handle().members);
    CHECK(greedy.size() == 3);
    CHECK(close_indices(*s4, greedy).size() == 24);
}

TEST_CASE("quotients") {
    GroupPtr s4 = symmetric_group(4);
    const auto& lattice = s4->normal_subgroups();
    QuotientMap q = quotient_map(s4, lattice[1]); // by the Klein four-subgroup
    CHECK(q.group->order() == 6);
    CHECK(q.group->spectrum().to_string() == "{1:1, 2:3, 3:2}");
    CHECK(is_isomorphic(q.group, symmetric_group(3)));

    // transport along the quotient: preimages of the quotient's normal
    // subgroups are exactly the normal subgroups above the kernel
    std::vector<i64> preimage_orders;
    for (const auto& h : q.group->normal_subgroups())
        preimage_orders.push_back(preimage_subgroup(q, h).order());
    CHECK(preimage_orders == std::vector<i64>{4, 12, 24});
    CHECK(image_subgroup(q, s4->full_handle()).order() == 6);
    CHECK(image_subgroup(q, lattice[2]).order() == 3);

    // quotient by a non-normal subgroup must be rejected
    auto h = make_handle(s4, close_indices(*s4, {s4->index_of(Perm::parse_cycles("(1 2)", 4))}));
    CHECK_FALSE(h.is_normal);
    CHECK_THROWS_AS(quotient_map(s4, h), NotNormal);
}

TEST_CASE("nilpotency, solvability, centers") {
    GroupPtr q8 = generalized_quaternion_group(8);
    CHECK(is_nilpotent(q8));
    CHECK(derived_length(q8) == 2);
    CHECK(center(q8).order() == 2);
    CHECK(q8->normal_subgroups().size() == 6);
    CHECK(fitting_length(q8) == 1);

    CHECK(center(dihedral_group(8)).order() == 2);
    CHECK(center(dihedral_group(10)).order() == 1);

    GroupPtr a4 = alternating_group(4);
    CHECK(derived_length(a4) == 2);
    CHECK(fitting_length(a4) == 2);

    GroupPtr a5 = alternating_group(5);
    CHECK_FALSE(is_solvable(a5));
    CHECK_THROWS_AS(derived_length(a5), NotSolvable);
    CHECK_THROWS_AS(fitting_length(a5), NotSolvable);

    GroupPtr c30 = cyclic_group(30);
    std::set<i64> subgroup_orders;
    for (const auto& h : c30->normal_subgroups()) subgroup_orders.insert(h.order());
    CHECK(subgroup_orders == std::set<i64>{1, 2, 3, 5, 6, 10, 15, 30});
}

TEST_CASE("isomorphism testing") {
    CHECK(is_isomorphic(dihedral_group(12), direct_product(symmetric_group(3), cyclic_group(2))));
    CHECK(is_isomorphic(direct_product(cyclic_group(4), cyclic_group(6)),
                        direct_product(cyclic_group(12), cyclic_group(2))));
    CHECK_FALSE(is_isomorphic(dihedral_group(12), cyclic_group(12)));
    CHECK_FALSE(is_isomorphic(dihedral_group(12), alternating_group(4)));
    CHECK_FALSE(is_isomorphic(generalized_quaternion_group(8), dihedral_group(8)));
    CHECK_FALSE(is_isomorphic(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(4)));
    CHECK(is_isomorphic(cyclic_group(1), symmetric_group(1)));
    CHECK_THROWS_AS(is_isomorphic(cyclic_group(600), cyclic_group(600)), BoundExceeded);
}

TEST_CASE("normal lattice bound") {
    Limits small;
    small.normal_lattice_bound = 20;
    GroupPtr s4 = symmetric_group(4, small);
    CHECK_THROWS_AS(s4->normal_subgroups(), BoundExceeded);
}
