#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "sdc/bitvec.hpp"
#include "sdc/catalog.hpp"
#include "sdc/constructions.hpp"
#include "sdc/enumerate.hpp"
#include "sdc/gf2_io.hpp"
#include "sdc/linear_code.hpp"

using namespace sdc;

namespace {

BitVector random_vec(std::mt19937_64& gen, size_t n) {
    BitVector v(n);
    for (size_t i = 0; i < n; ++i)
        if (gen() & 1) v.set(i, true);
    return v;
}

LinearCode random_code(std::mt19937_64& gen, size_t n, size_t k) {
    std::vector<BitVector> rows;
    for (size_t i = 0; i < k; ++i) rows.push_back(random_vec(gen, n));
    return LinearCode::from_rows(n, std::move(rows));
}

// random self-dual codes by walking neighbors from the trivial one
LinearCode random_self_dual(std::mt19937_64& gen, size_t n, size_t steps) {
    LinearCode c = i_n(n);
    for (size_t s = 0; s < steps; ++s) {
        for (int tries = 0; tries < 50; ++tries) {
            BitVector u = random_vec(gen, n);
            if (u.weight() % 2) u.flip(0);
            if (u.is_zero() || c.contains(u)) continue;
            c = neighbor_through(c, u);
            break;
        }
    }
    return c;
}

}  // namespace

TEST_CASE("bit vector basics") {
    BitVector v(70);
    CHECK(v.is_zero());
    v.set(0, true);
    v.set(69, true);
    CHECK(v.weight() == 2);
    CHECK(v.get(69));
    v.flip(69);
    CHECK(v.weight() == 1);
    BitVector w = BitVector::from_string("11" + std::string(68, '0'));
    CHECK(w.n == 70);
    CHECK(w.get(0));
    CHECK(w.get(1));
    CHECK(w.weight() == 2);
    CHECK(v.dot(w) == 1);
    v ^= w;
    CHECK(v.to_string().substr(0, 3) == "010");
    CHECK(BitVector::from_string(v.to_string()) == v);
}

TEST_CASE("lex order is total on distinct vectors") {
    std::mt19937_64 gen(3);
    for (int it = 0; it < 50; ++it) {
        BitVector a = random_vec(gen, 90), b = random_vec(gen, 90);
        if (a == b) continue;
        CHECK(a.lex_less(b) != b.lex_less(a));
    }
}

TEST_CASE("canonical form ignores generator presentation") {
    std::mt19937_64 gen(5);
    LinearCode c = random_code(gen, 40, 12);
    std::vector<BitVector> mixed = c.rows;
    // scramble: add rows into each other and shuffle
    for (size_t i = 1; i < mixed.size(); ++i) mixed[i] ^= mixed[i - 1];
    std::shuffle(mixed.begin(), mixed.end(), gen);
    LinearCode c2 = LinearCode::from_rows(40, std::move(mixed));
    CHECK(c == c2);
    CHECK(c.k() == c2.k());
}

TEST_CASE("dual is an involution and dimensions add up") {
    std::mt19937_64 gen(9);
    for (int it = 0; it < 10; ++it) {
        LinearCode c = random_code(gen, 30, 11);
        LinearCode d = dual(c);
        CHECK(d.k() == 30 - c.k());
        CHECK(dual(d) == c);
        for (const auto& r : c.rows)
            for (const auto& s : d.rows) CHECK(r.dot(s) == 0);
    }
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
    std::mt19937_64 gen(17);
    for (int it = 0; it < 10; ++it) {
        LinearCode a = random_code(gen, 24, 8), b = random_code(gen, 24, 8);
        LinearCode s = sum_code(a, b), i = intersect(a, b);
        CHECK(s.k() + i.k() == a.k() + b.k());
        for (const auto& r : i.rows) {
            CHECK(a.contains(r));
            CHECK(b.contains(r));
        }
        CHECK(intersect(dual(a), dual(b)) == dual(s));
    }
}

TEST_CASE("self-dual classification") {
    CHECK(code_type(i_n(2)) == CodeType::type1);
    CHECK(code_type(golay24()) == CodeType::type2);
    CHECK(code_type(b12()) == CodeType::type1);
    LinearCode c = LinearCode::from_rows(3, {BitVector::from_string("111")});
    CHECK(code_type(c) == CodeType::not_self_dual);
    CHECK(is_self_orthogonal(golay24()));
    CHECK(is_doubly_even(golay24()));
    CHECK(!is_doubly_even(b12()));
}

TEST_CASE("random self-dual codes stay self-dual under neighboring") {
    std::mt19937_64 gen(23);
    for (size_t n : {size_t(8), size_t(12), size_t(16)}) {
        LinearCode c = random_self_dual(gen, n, 6);
        CHECK(is_self_dual(c));
        CHECK(c.k() == n / 2);
        LinearCode de = doubly_even_subcode(c);
        CHECK(de.k() >= c.k() - 1);
        CHECK(is_doubly_even(de));
    }
}

TEST_CASE("puncture and shorten are dual operations") {
    std::mt19937_64 gen(29);
    LinearCode c = random_code(gen, 20, 7);
    CHECK(shorten(c, {3}) == dual(puncture(dual(c), {3})));
    CHECK(puncture(c, {3, 17}).n == 18);
}

TEST_CASE("direct sum concatenates supports") {
    LinearCode d = direct_sum(i_n(2), golay24());
    CHECK(d.n == 26);
    CHECK(d.k() == 13);
    CHECK(is_self_dual(d));
    CHECK(all_ones(26).weight() == 26);
    CHECK(d.contains(all_ones(26)));
}

TEST_CASE("codeword enumeration by mask matches row combinations") {
    std::mt19937_64 gen(31);
    LinearCode c = random_code(gen, 18, 5);
    BitVector w(18);
    for (size_t i = 0; i < c.rows.size(); ++i) w ^= c.rows[i];
    CHECK(c.codeword((1u << c.k()) - 1) == w);
    CHECK(c.codeword(0).is_zero());
}

TEST_CASE("weight distribution and min distance are consistent") {
    std::mt19937_64 gen(37);
    for (int it = 0; it < 6; ++it) {
        LinearCode c = random_code(gen, 22, 9);
        auto wd = weight_distribution(c);
        uint64_t total = 0;
        for (auto x : wd) total += x;
        CHECK(total == (uint64_t(1) << c.k()));
        if (c.k() > 0) {
            size_t d = min_distance(c);
            size_t first = 0;
            for (size_t i = 1; i < wd.size() && !first; ++i)
                if (wd[i]) first = i;
            CHECK(d == first);
            CHECK(distance_below(c, d) == std::nullopt);
            auto wit = distance_below(c, d + 1);
            REQUIRE(wit.has_value());
            CHECK(wit->weight() == d);
            CHECK(c.contains(*wit));
        }
    }
}

TEST_CASE("systematic forms all span the same code") {
    LinearCode g = golay24();
    auto forms = systematic_forms(g);
    REQUIRE(!forms.empty());
    CHECK(forms[0] == g);
    std::vector<bool> used(g.n, false);
    for (const auto& f : forms) {
        CHECK(f.k() == g.k());
        for (const auto& r : f.rows) CHECK(g.contains(r));
        for (size_t p : f.pivots) {
            CHECK(!used[p]);  // information sets are pairwise disjoint
            used[p] = true;
        }
    }
}

TEST_CASE("code io round trips") {
    LinearCode g = b12();
    std::ostringstream out;
    write_code(out, g);
    std::istringstream in(out.str());
    CHECK(read_code(in) == g);

    std::istringstream cmt("# note\n\n12 1\n# rows\n111111111111\n");
    LinearCode c = read_code(cmt);
    CHECK(c.k() == 1);
    CHECK(c.rows[0].weight() == 12);
}

TEST_CASE("vector io round trips") {
    BitVector v = BitVector::from_string("0101100");
    std::ostringstream out;
    write_vector(out, v);
    std::istringstream in(out.str());
    CHECK(read_vector(in) == v);
}

TEST_CASE("parse errors carry line numbers") {
    std::istringstream bad1("not a header\n");
    CHECK_THROWS_AS(read_code(bad1), ParseError);
    std::istringstream bad2("4 2\n1010\n111\n");
    try {
        read_code(bad2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    std::istringstream bad3("4 1\n10a0\n");
    CHECK_THROWS_AS(read_code(bad3), ParseError);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_code(empty), ParseError);
}

TEST_CASE("reduce expresses membership") {
    std::mt19937_64 gen(41);
    LinearCode c = random_code(gen, 16, 6);
    for (uint32_t m = 0; m < 20; ++m) {
        BitVector w = c.codeword(gen() & ((1u << c.k()) - 1));
        CHECK(c.contains(w));
        CHECK(c.reduce(w).is_zero());
    }
    BitVector outside = random_vec(gen, 16);
    if (!c.contains(outside)) CHECK(!c.reduce(outside).is_zero());
}
