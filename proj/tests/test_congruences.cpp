#include "doctest.h"

#include "error.hpp"

#include "congruences.hpp"
#include "constructions.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace {

// Independent enumeration of all partitions of {0..k-1}: recursive
// assignment of block labels with the restricted-growth property.
void all_partitions_rec(int k, std::vector<int>& labels, int used,
                        std::vector<snr::Partition>& out) {
    int x = static_cast<int>(labels.size());
    if (x == k) {
        out.push_back(snr::Partition::from_class_of(labels));
        return;
    }
    for (int b = 0; b <= used; ++b) {
        labels.push_back(b);
        all_partitions_rec(k, labels, b == used ? used + 1 : used, out);
        labels.pop_back();
    }
}

std::vector<snr::Partition> all_partitions(int k) {
    std::vector<snr::Partition> out;
    std::vector<int> labels;
    all_partitions_rec(k, labels, 0, out);
    return out;
}

// Simultaneous-substitution oracle: for every pair of tuples related
// componentwise, the results must share a block. This is the textbook
// definition; the library uses single-position substitution instead.
bool oracle_congruence(const snr::FinStructure& s, const snr::Partition& p) {
    auto check_op = [&](const snr::OpTable& op) {
        std::vector<snr::Elem> t1(static_cast<std::size_t>(op.arity()), 0);
        do {
            std::vector<snr::Elem> t2(static_cast<std::size_t>(op.arity()), 0);
            do {
                bool related = true;
                for (std::size_t i = 0; i < t1.size(); ++i)
                    if (!p.same_block(t1[i], t2[i])) { related = false; break; }
                if (related && !p.same_block(op.eval(t1), op.eval(t2))) return false;
            } while (snr::next_tuple(t2, s.carrier()));
        } while (snr::next_tuple(t1, s.carrier()));
        return true;
    };
    return check_op(s.f()) && check_op(s.g());
}

} // namespace

TEST_CASE("partition canonicalization and accessors") {
    std::vector<int> labels{5, 5, 2, 7};
    snr::Partition p = snr::Partition::from_class_of(labels);
    CHECK(p.class_of() == std::vector<int>{0, 0, 1, 2});
    CHECK(p.blocks() == std::vector<std::vector<snr::Elem>>{{0, 1}, {2}, {3}});
    CHECK(p.size() == 4);
    CHECK(p.block_count() == 3);
    CHECK(p.same_block(0, 1));
    CHECK_FALSE(p.same_block(1, 2));

    // Blocks given in any order canonicalize identically.
    snr::Partition q = snr::Partition::from_blocks(4, {{3}, {2}, {1, 0}});
    CHECK(p == q);
}

TEST_CASE("from_blocks validates coverage") {
    CHECK_THROWS_AS(snr::Partition::from_blocks(3, {{0, 1}}), snr::Error);          // misses 2
    CHECK_THROWS_AS(snr::Partition::from_blocks(3, {{0, 1}, {1, 2}}), snr::Error);  // duplicate
    CHECK_THROWS_AS(snr::Partition::from_blocks(3, {{0, 1, 2}, {}}), snr::Error);   // empty block
    CHECK_THROWS_AS(snr::Partition::from_blocks(3, {{0, 1, 2, 3}}), snr::Error);    // out of range
    CHECK_THROWS_AS(snr::Partition::from_blocks(0, {}), snr::Error);
}

TEST_CASE("refinement order") {
    snr::Partition id = snr::Partition::identity(4);
    snr::Partition mid = snr::Partition::from_blocks(4, {{0, 2}, {1, 3}});
    snr::Partition all = snr::Partition::universal(4);
    CHECK(id.refines(mid));
    CHECK(id.refines(all));
    CHECK(mid.refines(all));
    CHECK_FALSE(mid.refines(id));
    CHECK_FALSE(all.refines(mid));
    CHECK(mid.refines(mid));
}

TEST_CASE("doubling classes form a congruence of Z4") {
    snr::FinStructure z4 = snr::gen_modring(4, 2, 2);
    snr::Partition p = snr::Partition::from_blocks(4, {{0, 2}, {1, 3}});
    CHECK(snr::is_congruence(z4, p).holds);
}

TEST_CASE("congruence failure carries the substitution witness") {
    // {0,1}|{2,3} on Z4: 0 and 1 are mates but f(0,1)=1 and f(1,1)=2
    // land in different blocks.
    snr::FinStructure z4 = snr::gen_modring(4, 2, 2);
    snr::Partition p = snr::Partition::from_blocks(4, {{0, 1}, {2, 3}});
    snr::AxiomVerdict v = snr::is_congruence(z4, p);
    REQUIRE_FALSE(v.holds);
    CHECK(v.witness->law == snr::Law::congruence);
    CHECK(v.witness->op == 'f');
    CHECK(v.witness->pos == 1);
    CHECK(v.witness->args == std::vector<snr::Elem>{0, 1});
    CHECK(v.witness->extra == std::vector<snr::Elem>{1});
    CHECK(v.witness->lhs == 1);
    CHECK(v.witness->rhs == 2);
    CHECK(v.witness->i == 0);
    CHECK(v.witness->j == 1);
}

TEST_CASE("single-position substitution agrees with the simultaneous oracle") {
    std::vector<snr::FinStructure> corpus;
    corpus.push_back(snr::gen_powerset(1, 2, 2));
    corpus.push_back(snr::gen_powerset(2, 2, 2));
    corpus.push_back(snr::gen_modring(3, 2, 2));
    corpus.push_back(snr::gen_modring(4, 2, 2));
    corpus.push_back(snr::gen_modring(4, 2, 3));
    for (const snr::FinStructure& s : corpus) {
        for (const snr::Partition& p : all_partitions(s.carrier())) {
            CAPTURE(s.name());
            CHECK(snr::is_congruence(s, p).holds == oracle_congruence(s, p));
        }
    }
}

TEST_CASE("Z4 has exactly three congruences, ordered finest first") {
    snr::FinStructure z4 = snr::gen_modring(4, 2, 2);
    std::vector<snr::Partition> congruences = snr::enumerate_congruences(z4);
    REQUIRE(congruences.size() == 3);
    CHECK(congruences[0] == snr::Partition::identity(4));
    CHECK(congruences[1] == snr::Partition::from_blocks(4, {{0, 2}, {1, 3}}));
    CHECK(congruences[2] == snr::Partition::universal(4));
}

TEST_CASE("Z3 has only the trivial congruences") {
    snr::FinStructure z3 = snr::gen_modring(3, 2, 2);
    std::vector<snr::Partition> congruences = snr::enumerate_congruences(z3);
    REQUIRE(congruences.size() == 2);
    CHECK(congruences[0] == snr::Partition::identity(3));
    CHECK(congruences[1] == snr::Partition::universal(3));
}

TEST_CASE("enumeration equals filtering all partitions") {
    std::vector<snr::FinStructure> corpus;
    corpus.push_back(snr::gen_modring(6, 2, 2));
    corpus.push_back(snr::gen_powerset(2, 2, 2));
    for (const snr::FinStructure& s : corpus) {
        std::vector<snr::Partition> expect;
        for (const snr::Partition& p : all_partitions(s.carrier()))
            if (oracle_congruence(s, p)) expect.push_back(p);
        std::vector<snr::Partition> got = snr::enumerate_congruences(s);
        REQUIRE(got.size() == expect.size());
        for (const snr::Partition& p : expect)
            CHECK(std::find(got.begin(), got.end(), p) != got.end());
        // Finest first, coarsest last.
        CHECK(got.front() == snr::Partition::identity(s.carrier()));
        CHECK(got.back() == snr::Partition::universal(s.carrier()));
        for (std::size_t i = 1; i < got.size(); ++i)
            CHECK(got[i - 1].block_count() >= got[i].block_count());
    }
}

TEST_CASE("carrier-one structure has a single congruence") {
    snr::FinStructure one = snr::gen_modring(1, 2, 2);
    CHECK(snr::enumerate_congruences(one).size() == 1);
}

TEST_CASE("congruence enumeration guard") {
    snr::FinStructure big = snr::gen_modring(11, 2, 2);
    CHECK_THROWS_AS(snr::enumerate_congruences(big), snr::Error);
    try {
        snr::enumerate_congruences(big);
    } catch (const snr::Error& e) {
        CHECK(e.code() == snr::errc::enumeration_guard);
    }
}

TEST_CASE("congruence_closure joins the requested pairs minimally") {
    snr::FinStructure z4 = snr::gen_modring(4, 2, 2);
    std::vector<std::pair<snr::Elem, snr::Elem>> seed{{0, 2}};
    snr::Partition p = snr::congruence_closure(z4, seed);
    CHECK(p == snr::Partition::from_blocks(4, {{0, 2}, {1, 3}}));

    std::vector<std::pair<snr::Elem, snr::Elem>> collapse{{0, 1}};
    CHECK(snr::congruence_closure(z4, collapse) == snr::Partition::universal(4));

    CHECK(snr::congruence_closure(z4, {}) == snr::Partition::identity(4));

    // Minimality: the closure refines every congruence joining the seeds.
    for (const snr::Partition& q : snr::enumerate_congruences(z4))
        if (q.same_block(0, 2)) CHECK(p.refines(q));
}

TEST_CASE("closure output is always a congruence") {
    std::vector<snr::FinStructure> corpus;
    corpus.push_back(snr::gen_modring(6, 2, 2));
    corpus.push_back(snr::gen_powerset(2, 2, 2));
    corpus.push_back(snr::gen_affine(2));
    for (const snr::FinStructure& s : corpus) {
        for (snr::Elem a = 0; a < s.carrier(); ++a) {
            for (snr::Elem b = a + 1; b < s.carrier(); ++b) {
                std::vector<std::pair<snr::Elem, snr::Elem>> seed{{a, b}};
                snr::Partition p = snr::congruence_closure(s, seed);
                CHECK(p.same_block(a, b));
                CHECK(snr::is_congruence(s, p).holds);
            }
        }
    }
}

TEST_CASE("quotient of Z4 by doubling is Z2") {
    snr::FinStructure z4 = snr::gen_modring(4, 2, 2);
    snr::Partition p = snr::Partition::from_blocks(4, {{0, 2}, {1, 3}});
    snr::FinStructure q = snr::quotient(z4, p);
    CHECK(q.name() == "modring_4_2_2_quot");
    CHECK(q.same_tables(snr::gen_modring(2, 2, 2)));
}

TEST_CASE("quotient by the identity reproduces the tables") {
    snr::FinStructure a3 = snr::gen_affine(3);
    snr::FinStructure q = snr::quotient(a3, snr::Partition::identity(9));
    CHECK(q.same_tables(a3));
}

TEST_CASE("quotient by the universal congruence is the point") {
    snr::FinStructure z6 = snr::gen_modring(6, 2, 2);
    snr::FinStructure q = snr::quotient(z6, snr::Partition::universal(6));
    CHECK(q.carrier() == 1);
    std::vector<snr::Elem> zz{0, 0};
    CHECK(q.eval_f(zz) == 0);
    CHECK(q.eval_g(zz) == 0);
}

TEST_CASE("quotient exercises the sampled well-definedness path") {
    // Carrier 8 exceeds the exhaustive re-check bound, so representative
    // draws are used; the result must still be Z2.
    snr::FinStructure z8 = snr::gen_modring(8, 2, 2);
    snr::Partition p = snr::Partition::from_blocks(
        8, {{0, 2, 4, 6}, {1, 3, 5, 7}});
    REQUIRE(snr::is_congruence(z8, p).holds);
    snr::FinStructure q = snr::quotient(z8, p);
    CHECK(q.same_tables(snr::gen_modring(2, 2, 2)));
}

TEST_CASE("quotient rejects non-congruences") {
    snr::FinStructure z4 = snr::gen_modring(4, 2, 2);
    snr::Partition p = snr::Partition::from_blocks(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(snr::quotient(z4, p), snr::Error);
    try {
        snr::quotient(z4, p);
    } catch (const snr::Error& e) {
        CHECK(e.code() == snr::errc::not_congruence);
    }
}

TEST_CASE("every quotient across a corpus keeps the parent laws") {
    // quotient() asserts law preservation internally; driving it over all
    // congruences of several structures exercises that assertion, and we
    // re-check the headline laws here.
    std::vector<snr::FinStructure> corpus;
    corpus.push_back(snr::gen_modring(6, 2, 2));
    corpus.push_back(snr::gen_powerset(2, 2, 2));
    corpus.push_back(snr::gen_modring(4, 2, 3));
    for (const snr::FinStructure& s : corpus) {
        snr::ClassificationReport parent = snr::classify(s);
        for (const snr::Partition& p : snr::enumerate_congruences(s)) {
            snr::FinStructure q = snr::quotient(s, p);
            CHECK(q.carrier() == p.block_count());
            snr::ClassificationReport child = snr::classify(q);
            if (parent.f_associative.holds) CHECK(child.f_associative.holds);
            if (parent.g_associative.holds) CHECK(child.g_associative.holds);
            for (int t = 1; t <= s.n(); ++t)
                if (parent.distributive[static_cast<std::size_t>(t - 1)].holds)
                    CHECK(child.distributive[static_cast<std::size_t>(t - 1)].holds);
        }
    }
}
