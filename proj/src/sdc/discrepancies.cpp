#include "sdc/discrepancies.hpp"

#include <stdexcept>

#include "sdc/bignum.hpp"
#include "sdc/gleason.hpp"
#include "sdc/tables.hpp"

namespace sdc {

namespace {

std::string coeff_str(const WeightEnum& w, size_t i) { return rat_str(w.a.at(i)); }

std::string lambda_cell(size_t k, size_t i) {
    for (const auto& row : table_t3().rows)
        if (row.k == k) return rat_str(row.lambda.at(i));
    throw std::logic_error("no such divisibility row");
}

std::string design_lambda(size_t t, size_t v, size_t k, const BigRat& blocks) {
    BigRat lam = blocks * BigRat(binomial(k, t)) / BigRat(binomial(v, t));
    return rat_str(lam);
}

}  // namespace

const std::vector<Discrepancy>& discrepancies() {
    static const std::vector<Discrepancy> list = [] {
        std::vector<Discrepancy> out;

        out.push_back({"source document, Table 1, row for weights 38 and 80",
                       "43420813336368", coeff_str(table_t1(), 38),
                       "with the printed value the distribution no longer sums "
                       "to 2^59"});

        out.push_back({"source document, Table 3, row k = 27, column lambda_2",
                       "9327328", lambda_cell(27, 2),
                       "the other three entries of that row match the exact "
                       "values"});

        out.push_back({"source document, Table 4, weight 39",
                       "43420813336368", coeff_str(table_t4(), 39),
                       "inherits the Table 1 row-38 value through the coset "
                       "construction"});

        out.push_back({"source document, Table 4, weight 80",
                       "132485354071728", coeff_str(table_t4(), 80),
                       "inherits the Table 1 row-38 value through the coset "
                       "construction"});

        out.push_back({"source document, Table 4, weight 119",
                       "(row absent)", coeff_str(table_t4(), 119),
                       "the two-tag extension always contains one word of "
                       "weight n - 1; with it the distribution sums to 2^60"});

        out.push_back({"source document, Question 30, design parameters "
                       "(printed twice)",
                       "8885",
                       design_lambda(3, 118, 22, table_t1().a.at(22)),
                       "lambda of the 3-design held by the supports of the "
                       "1534767 minimum-weight words"});

        out.push_back({"source document, proof of the reduction to the "
                       "length-120 formally self-dual enumerator",
                       "[112, 59, 22]", "[118, 59, 22]",
                       "shortening a length-120 code through two coordinates "
                       "leaves length 118; dimension and distance are as "
                       "printed"});

        out.push_back({"source document, contradiction cases following the "
                       "shadow expansion (both occurrences)",
                       "11/164", rat_str(shadow_basis_term(118, 11).a.at(19)),
                       "coefficient of a_11 in the weight-19 shadow term; the "
                       "certificate values -12397 and -2002 require the exact "
                       "fraction"});

        {
            // as printed the degree-8 factor of the second decomposition is
            // the one with zero constant term, which cannot reach A_0 = 1
            Poly probe = poly_pow(poly_g1(), 4);
            const Poly& g2 = poly_g2();
            for (size_t i = 0; i < probe.size(); ++i) {
                BigRat gi = i < g2.size() ? g2[i] : BigRat(0);
                probe[i] -= BigRat(4) * gi;
            }
            bool matches_theta = probe == poly_theta();
            bool g2_const_zero = poly_g2().at(0) == 0;
            out.push_back({"source document, second basis statement of the "
                           "enumerator decomposition theorem",
                           "middle factor x^2 y^2 (x^2 - y^2)^2",
                           std::string("middle factor 1 + 14y^4 + y^8") +
                               (matches_theta ? " = g1^4 - 4 g2" : ""),
                           g2_const_zero
                               ? "the printed factor has constant term 0, so "
                                 "no combination reaches A_0 = 1 at length 8"
                               : "unexpected"});
        }

        return out;
    }();
    return list;
}

}  // namespace sdc
