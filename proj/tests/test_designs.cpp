#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sdc/catalog.hpp"
#include "sdc/designs.hpp"
#include "sdc/enumerate.hpp"
#include "sdc/tables.hpp"

using namespace sdc;

namespace {
std::vector<BitVector> fano_blocks() {
    std::vector<BitVector> b;
    for (const char* s : {"1110000", "1001100", "1000011", "0101010", "0100101",
                          "0011001", "0010110"})
        b.push_back(BitVector::from_string(s));
    return b;
}
}  // namespace

TEST_CASE("parameter ladder") {
    DesignParams p = lambda_vector(5, 24, 8, BigInt(1));
    REQUIRE(p.lambda_vec.size() == 6);
    const char* expect[] = {"759", "253", "77", "21", "5", "1"};
    for (size_t i = 0; i < 6; ++i) CHECK(rat_str(p.lambda_vec[i]) == expect[i]);
    CHECK(p.all_integral);
    CHECK(p.lambda == 1);

    DesignParams q = lambda_vector(2, 8, 3, BigInt(1));
    CHECK(!q.all_integral);  // 7/2 appears one level up

    DesignParams big = lambda_vector(5, 120, 24, BigInt(8855));
    CHECK(rat_str(big.lambda_vec[4]) == "51359");
    CHECK(big.all_integral);

    CHECK_THROWS(lambda_vector(5, 8, 24, BigInt(1)));  // k > v
    CHECK_THROWS(lambda_vector(9, 24, 8, BigInt(1)));  // t > k
}

TEST_CASE("design normalization") {
    auto blocks = fano_blocks();
    std::swap(blocks[0], blocks[3]);
    Design d = make_design(7, blocks);
    CHECK(d.b() == 7);
    CHECK(d.k() == 3);
    for (size_t i = 1; i < d.blocks.size(); ++i)
        CHECK(d.blocks[i - 1].lex_less(d.blocks[i]));

    auto dup = fano_blocks();
    dup.push_back(dup.front());
    CHECK_THROWS(make_design(7, dup));
    auto ragged = fano_blocks();
    ragged[2] = BitVector::from_string("1111000");
    CHECK_THROWS(make_design(7, ragged));
}

TEST_CASE("fano plane verifies exactly") {
    Design d = make_design(7, fano_blocks());
    DesignCheck c2 = verify_t_design(d, 2);
    CHECK(c2.ok);
    CHECK(c2.lambda == 1);
    DesignCheck c1 = verify_t_design(d, 1);
    CHECK(c1.ok);
    CHECK(c1.lambda == 3);
    DesignCheck c0 = verify_t_design(d, 0);
    CHECK(c0.ok);
    CHECK(c0.lambda == 7);
}

TEST_CASE("broken design yields witnesses") {
    auto blocks = fano_blocks();
    blocks[1] = BitVector::from_string("1101000");  // no longer a 2-design
    Design d = make_design(7, blocks);
    DesignCheck c = verify_t_design(d, 2);
    CHECK(!c.ok);
    CHECK(c.count_a != c.count_b);
    CHECK(c.subset_a.weight() == 2);
    CHECK(c.subset_b.weight() == 2);
}

TEST_CASE("sampled verification is deterministic per seed") {
    Design d = design_from_codewords(golay24(), 8);
    DesignCheck a = verify_t_design(d, 5, SampleMode{200, 77});
    DesignCheck b = verify_t_design(d, 5, SampleMode{200, 77});
    CHECK(a.ok == b.ok);
    CHECK(a.lambda == b.lambda);
    CHECK(a.ok);
    CHECK(a.lambda == 1);
}

TEST_CASE("octad design recovers the code") {
    Design d = design_from_codewords(golay24(), 8);
    CHECK(d.v == 24);
    CHECK(d.b() == 759);
    CHECK(d.k() == 8);
    CHECK(incidence_matrix(d).size() == 759);
    CHECK(code_of_design(d) == golay24());
    CHECK_THROWS(design_from_codewords(golay24(), 10));  // no words there
}

TEST_CASE("exact verification guards its search space") {
    Design d = design_from_codewords(golay24(), 8);
    CHECK_THROWS(verify_t_design(d, 12));  // C(24,12) is past the exact bound
}

TEST_CASE("weight distribution design criterion") {
    AmReport r = assmus_mattson(golay24(), 5);
    CHECK(r.applicable);
    CHECK(r.t == 5);
    CHECK(r.d == 8);
    CHECK(r.s == 3);
    CHECK(r.weights_primal == std::vector<size_t>{8, 12, 16, 24});
    AmReport r6 = assmus_mattson(golay24(), 6);
    CHECK(!r6.applicable);

    // enumerator-only entry point agrees
    WeightEnum w = WeightEnum::from_distribution(weight_distribution(golay24()));
    AmReport r2 = assmus_mattson(w, w, 5);
    CHECK(r2.applicable == r.applicable);
    CHECK(r2.s == r.s);
}

TEST_CASE("shadow divisibility over the long shadow") {
    const DivisibilityReport& r = table_t3();
    CHECK(r.v == 118);
    CHECK(r.t == 3);
    CHECK(r.rows.size() == 19);
    CHECK(r.ok);
    size_t cells = 0;
    for (const auto& row : r.rows) {
        CHECK(row.integral);
        CHECK(row.lambda.size() == 4);
        cells += row.lambda.size();
        CHECK(row.lambda[0] == table_t2().a[row.k]);
    }
    CHECK(cells == 76);

    WeightEnum bad(10);
    bad.a[3] = 5;  // lambda_1 = 5*3/10 is not integral
    DivisibilityReport br = shadow_divisibility(bad, 10, 2);
    CHECK(!br.ok);
}

TEST_CASE("design io round trips") {
    Design d = make_design(7, fano_blocks());
    std::ostringstream out;
    write_design(out, d);
    std::istringstream in(out.str());
    Design back = read_design(in);
    CHECK(back.v == d.v);
    CHECK(back.blocks == d.blocks);
    std::istringstream bad("7 2 3\n1110000\n111000\n");
    CHECK_THROWS(read_design(bad));
}
