#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "sdc/admissible.hpp"
#include "sdc/catalog.hpp"
#include "sdc/enumerate.hpp"
#include "sdc/fixed_code.hpp"
#include "sdc/pipeline.hpp"

using namespace sdc;

namespace {

// permutation with the prescribed multiset of cycle lengths, laid out in order
Permutation with_cycles(size_t n, const std::vector<size_t>& lens) {
    Permutation s = Permutation::identity(n);
    size_t at = 0;
    for (size_t len : lens) {
        for (size_t i = 0; i < len; ++i) s.img[at + i] = at + (i + 1) % len;
        at += len;
    }
    return s;
}

}  // namespace

TEST_CASE("cycle text round trips") {
    Permutation s = Permutation::parse_cycles("(1,2,3)(5,6)", 6);
    CHECK(s.order() == 6);
    CHECK(Permutation::parse_cycles(s.to_cycles(), 6) == s);
    CHECK(s.img[0] == 1);
    CHECK(s.img[3] == 3);
    CHECK_THROWS(Permutation::parse_cycles("(1,2", 6));
    CHECK_THROWS(Permutation::parse_cycles("(1,7)", 6));
    CHECK_THROWS(Permutation::parse_cycles("(1,1)", 6));
}

TEST_CASE("group operations") {
    Permutation s = Permutation::parse_cycles("(1,2,3,4,5,6,7)", 8);
    CHECK(s.order() == 7);
    CHECK(s.then(s.inverse()) == Permutation::identity(8));
    CHECK(s.power(7) == Permutation::identity(8));
    CHECK(s.power(3).order() == 7);
    Permutation t = g24_order6();
    CHECK(t.power(2).order() == 3);
    CHECK(t.power(3).order() == 2);
}

TEST_CASE("apply moves supports coherently") {
    LinearCode g = golay24();
    Permutation s = g24_translation();
    for (const auto& r : g.rows) {
        BitVector img = apply(s, r);
        CHECK(img.weight() == r.weight());
        CHECK(g.contains(img));
    }
    CHECK(apply(s, g) == g);
    CHECK(is_automorphism(g, s));
    Permutation swap2 = Permutation::parse_cycles("(1,2)", 24);
    CHECK(!is_automorphism(g, swap2));
}

TEST_CASE("type formatting") {
    CHECK(aut_type(Permutation::identity(5)).format() == "1-(0;5)");
    CHECK(aut_type(g24_translation()).format() == "23-(1;1)");
    CHECK(aut_type(g24_order3()).format() == "3-(8;0)");
    CHECK(aut_type(g24_order6()).format() == "6-(4;0)");
    CHECK(aut_type(e8_cubed_translation()).format() == "7-(3;3)");
    AutType mixed = aut_type(with_cycles(120, {5, 115}));
    CHECK(mixed.kind == AutType::Kind::mixed);
    CHECK(mixed.format() == "5.23-(1,0,1;0)");
    AutType gen = aut_type(with_cycles(10, {2, 3, 5}));
    CHECK(gen.kind == AutType::Kind::generic);
    CHECK(gen.order == 30);
}

TEST_CASE("layout lists cycles before fixed points") {
    CycleLayout lay = cycle_layout(g24_translation());
    CHECK(lay.n == 24);
    CHECK(lay.cycles.size() == 1);
    CHECK(lay.cycles[0].size() == 23);
    CHECK(lay.fixed == std::vector<size_t>{23});
    CHECK(lay.cell_count() == 2);
}

TEST_CASE("fixed code and even part decompose the code") {
    LinearCode g = golay24();
    for (const auto& s : {g24_translation(), g24_order3()}) {
        LinearCode f = fixed_code(g, s);
        for (const auto& r : f.rows) CHECK(apply(s, r) == r);
        MaschkeReport m = maschke_verify(g, s);
        CHECK(m.ok());
        CHECK(m.dim_fixed == f.k());
        CHECK(m.dim_fixed + m.dim_even == g.k());
    }
    MaschkeReport m3 = maschke_verify(e8_cubed(), e8_cubed_translation());
    CHECK(m3.ok());
    CHECK(m3.dim_fixed == 3);
    CHECK(m3.dim_even == 9);
    CHECK(m3.expected_dim_even == 9);
    CHECK_THROWS_AS(maschke_verify(golay24(), g24_order6()), std::invalid_argument);
}

TEST_CASE("projection and lift invert each other") {
    LinearCode g = golay24();
    for (const auto& s : {g24_translation(), g24_order3()}) {
        CycleLayout lay = cycle_layout(s);
        LinearCode f = fixed_code(g, s);
        LinearCode p = project(f, lay);
        CHECK(p.n == lay.cell_count());
        CHECK(p.k() == f.k());
        CHECK(is_self_dual(p));
        CHECK(lift(p, lay) == f);
        for (const auto& r : f.rows) CHECK(lift(project(r, lay), lay) == r);
    }
    // fixed point free odd order preserves double evenness downstairs
    LinearCode p3 = project(fixed_code(g, g24_order3()), cycle_layout(g24_order3()));
    CHECK(code_type(p3) == CodeType::type2);
    CHECK(p3.n == 8);
    // the translation projection keeps self-duality only
    LinearCode p23 = project(fixed_code(g, g24_translation()), cycle_layout(g24_translation()));
    CHECK(code_type(p23) == CodeType::type1);
    CHECK(p23.n == 2);
}

TEST_CASE("projection rejects words that vary on a cycle") {
    CycleLayout lay = cycle_layout(g24_order3());
    BitVector ragged(24);
    ragged.set(lay.cycles[0][0], true);
    CHECK_THROWS_AS(project(ragged, lay), std::invalid_argument);
}

TEST_CASE("prime order congruence between code and fixed code") {
    LinearCode g = golay24();
    CHECK(fixed_code_congruence(g, g24_translation(), BigInt(23)).ok);
    CHECK(fixed_code_congruence(g, g24_order3(), BigInt(3)).ok);
    CongruenceReport wrong = fixed_code_congruence(g, g24_order3(), BigInt(5));
    CHECK(!wrong.ok);
    CHECK(!wrong.failing_weights.empty());
}

TEST_CASE("enumerator congruences with prescribed residues") {
    WeightEnum w = WeightEnum::from_distribution(weight_distribution(golay24()));
    CHECK(coeff_mod(w, 8, BigInt(23)) == 759 % 23);
    CHECK(enum_congruence(w, BigInt(23), {{8, BigInt(759 % 23)}, {12, BigInt(2576 % 23)}}).ok);
    CHECK(!enum_congruence(w, BigInt(23), {{8, BigInt(1)}}).ok);
}

TEST_CASE("sylow bound and free module obstruction") {
    CHECK(sylow_bound(120, 2) == 3);
    CHECK(sylow_bound(120, 3) == 1);
    CHECK(sylow_bound(120, 7) == 0);
    CHECK(free_module_obstruction(8, 60));
    CHECK(!free_module_obstruction(4, 60));
    CHECK_THROWS(free_module_obstruction(0, 60));
}

TEST_CASE("length 120 admissibility verdicts") {
    auto verdict = [](const std::vector<size_t>& lens) {
        return check_type_allowed(aut_type(with_cycles(120, lens)));
    };
    auto fill = [](size_t len, size_t count, size_t fixed) {
        std::vector<size_t> lens(count, len);
        lens.insert(lens.end(), fixed, 1);
        return lens;
    };
    CHECK(verdict(fill(1, 120, 0)).allowed);  // identity
    CHECK(verdict(fill(2, 48, 24)).allowed);
    CHECK(verdict(fill(2, 60, 0)).allowed);
    CHECK(verdict(fill(3, 40, 0)).allowed);
    CHECK(verdict(fill(5, 24, 0)).allowed);
    CHECK(verdict(fill(7, 17, 1)).allowed);
    CHECK(verdict(fill(19, 6, 6)).allowed);
    CHECK(verdict(fill(23, 5, 5)).allowed);
    CHECK(verdict(fill(4, 30, 0)).allowed);
    CHECK(verdict(fill(6, 20, 0)).allowed);
    CHECK(verdict(fill(10, 12, 0)).allowed);
    CHECK(verdict(fill(12, 10, 0)).allowed);
    CHECK(verdict(fill(15, 8, 0)).allowed);
    CHECK(verdict(fill(20, 6, 0)).allowed);
    CHECK(verdict({5, 115}).allowed);  // order 115 with one cycle of each kind

    TypeVerdict v8 = verdict(fill(8, 15, 0));
    CHECK(!v8.allowed);
    CHECK(v8.reason.find("free") != std::string::npos);
    TypeVerdict v30 = verdict(fill(30, 4, 0));
    CHECK(!v30.allowed);
    CHECK(v30.reason.find("minimum distance") != std::string::npos);
    TypeVerdict v60 = verdict(fill(60, 2, 0));
    CHECK(!v60.allowed);
    CHECK(v60.reason.find("order 30") != std::string::npos);
    TypeVerdict v57 = verdict({3, 3, 57, 57});
    CHECK(!v57.allowed);
    CHECK(v57.reason.find("19") != std::string::npos);
    CHECK(!verdict(fill(3, 39, 3)).allowed);   // wrong prime shape
    CHECK(!verdict(fill(2, 59, 2)).allowed);   // wrong fixed count
    CHECK(!verdict({2, 2, 3, 3, 6, 104}).allowed);  // outside the classified forms

    CHECK_THROWS_AS(check_type_allowed(aut_type(Permutation::identity(24))),
                    std::invalid_argument);
}

TEST_CASE("exclusion pipeline finds witnesses exactly when lifts collide low") {
    // two commuting layouts on 4 points; candidates live on the 2 cells
    CycleLayout lp = cycle_layout(Permutation::parse_cycles("(1,2)(3,4)", 4));
    CycleLayout lq = cycle_layout(Permutation::parse_cycles("(1,3)(2,4)", 4));
    LinearCode cell = i2();
    PipelineResult keep = exclusion_pipeline(lp, {cell}, lq, {cell}, 3);
    CHECK(!keep.excluded);
    CHECK(!keep.vacuous);
    REQUIRE(keep.pairs.size() == 1);
    CHECK(!keep.pairs[0].witness_found);

    PipelineResult kill = exclusion_pipeline(lp, {cell}, lq, {cell}, 5);
    CHECK(kill.excluded);
    REQUIRE(kill.pairs.size() == 1);
    CHECK(kill.pairs[0].witness_found);
    CHECK(kill.pairs[0].witness.weight() == 4);

    PipelineResult empty = exclusion_pipeline(lp, {}, lq, {}, 5);
    CHECK(empty.vacuous);
    CHECK(empty.excluded);

    LinearCode wrong = i_n(4);
    CHECK_THROWS_AS(exclusion_pipeline(lp, {wrong}, lq, {cell}, 3), std::invalid_argument);
}

TEST_CASE("pipeline on the order six instance stays above the distance") {
    LinearCode g = golay24();
    Permutation s = g24_order6();
    Permutation s2 = s.power(2), s3 = s.power(3);
    CycleLayout l2 = cycle_layout(s2), l3 = cycle_layout(s3);
    LinearCode d = project(fixed_code(g, s2), l2);
    LinearCode e = project(fixed_code(g, s3), l3);
    PipelineResult r = exclusion_pipeline(l2, {d}, l3, {e}, 8);
    REQUIRE(r.pairs.size() == 1);
    CHECK(!r.pairs[0].witness_found);
    CHECK(!r.excluded);
}
