// command line front end; exit 0 = success, 1 = a checked property failed
// (certificate printed), 2 = usage or parse error

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdc/admissible.hpp"
#include "sdc/catalog.hpp"
#include "sdc/constructions.hpp"
#include "sdc/cosets.hpp"
#include "sdc/designs.hpp"
#include "sdc/discrepancies.hpp"
#include "sdc/enumerate.hpp"
#include "sdc/fixed_code.hpp"
#include "sdc/gf2_io.hpp"
#include "sdc/pipeline.hpp"
#include "sdc/shadow_cases.hpp"
#include "sdc/tables.hpp"
#include "sdc/weight_enum.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sdc;

// 1 + 759y^8 + ... with unit coefficients and y^0, y^1 elided
std::string poly_str(const WeightEnum& w) {
    std::ostringstream s;
    bool first = true;
    for (size_t i = 0; i <= w.n; ++i) {
        if (w.a[i] == 0) continue;
        if (!first) s << " + ";
        first = false;
        if (i == 0) {
            s << rat_str(w.a[i]);
            continue;
        }
        if (w.a[i] != 1) s << rat_str(w.a[i]);
        s << "y";
        if (i > 1) s << "^" << i;
    }
    if (first) s << "0";
    return s.str();
}

struct Cell {
    std::string label;
    std::string value;
};

std::vector<Cell> enum_cells(const WeightEnum& w, const std::string& sym) {
    std::vector<Cell> cells;
    for (size_t i = 0; i <= w.n; ++i)
        if (w.a[i] != 0) cells.push_back({sym + "_" + std::to_string(i), rat_str(w.a[i])});
    cells.push_back({"sum", rat_str(w.sum())});
    return cells;
}

std::vector<Cell> t3_cells(const DivisibilityReport& r) {
    std::vector<Cell> cells;
    for (const auto& row : r.rows)
        for (size_t i = 0; i < row.lambda.size(); ++i)
            cells.push_back({"lambda_" + std::to_string(i) + "[k=" + std::to_string(row.k) + "]",
                             rat_str(row.lambda[i])});
    return cells;
}

std::optional<Cell> parse_cell(const std::string& line) {
    if (line.empty() || line[0] == '#') return std::nullopt;
    if (line.rfind("table ", 0) == 0) return std::nullopt;
    auto sep = line.find(" = ");
    if (sep == std::string::npos) return std::nullopt;
    Cell c{line.substr(0, sep), line.substr(sep + 3)};
    while (!c.value.empty() && (c.value.back() == '\r' || c.value.back() == ' '))
        c.value.pop_back();
    if (c.label.empty() || c.label.find(' ') != std::string::npos) return std::nullopt;
    return c;
}

int compare_cells(const std::vector<Cell>& computed, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--compare", "cannot open " + path);
    std::map<std::string, std::string> expected;
    std::vector<std::string> order;
    std::string line;
    while (std::getline(in, line)) {
        auto c = parse_cell(line);
        if (!c) continue;
        if (expected.emplace(c->label, c->value).second) order.push_back(c->label);
    }
    std::map<std::string, std::string> got;
    for (const auto& c : computed) got.emplace(c.label, c.value);
    for (const auto& c : computed) {
        auto it = expected.find(c.label);
        if (it == expected.end()) {
            std::cout << "mismatch at " << c.label << ": expected (absent), computed "
                      << c.value << "\n";
            return 1;
        }
        if (it->second != c.value) {
            std::cout << "mismatch at " << c.label << ": expected " << it->second
                      << ", computed " << c.value << "\n";
            return 1;
        }
    }
    for (const auto& label : order)
        if (!got.count(label)) {
            std::cout << "mismatch at " << label << ": expected " << expected[label]
                      << ", computed (absent)\n";
            return 1;
        }
    std::cout << "compare: all " << computed.size() << " cells match\n";
    return 0;
}

int run_tables(const std::string& which, const std::string& compare, bool json) {
    std::vector<Cell> cells;
    std::string header;
    ordered_json j;
    j["table"] = which;
    if (which == "t3") {
        const auto& r = table_t3();
        header = "table t3  v = " + std::to_string(r.v) + "  t = " + std::to_string(r.t);
        cells = t3_cells(r);
        j["v"] = r.v;
        j["t"] = r.t;
        ordered_json rows = ordered_json::array();
        for (const auto& row : r.rows) {
            ordered_json jr;
            jr["k"] = row.k;
            ordered_json lam = ordered_json::array();
            for (const auto& x : row.lambda) lam.push_back(rat_str(x));
            jr["lambda"] = std::move(lam);
            jr["integral"] = row.integral;
            rows.push_back(std::move(jr));
        }
        j["rows"] = std::move(rows);
        j["integral"] = r.ok;
    } else {
        const WeightEnum* w = nullptr;
        std::string sym = "A";
        if (which == "eq1") w = &table_eq1();
        else if (which == "t1") w = &table_t1();
        else if (which == "t2") { w = &table_t2(); sym = "B"; }
        else if (which == "t4") w = &table_t4();
        else if (which == "t5") w = &table_t5();
        else throw CLI::ValidationError("tables", "unknown table id " + which);
        header = "table " + which + "  n = " + std::to_string(w->n);
        cells = enum_cells(*w, sym);
        j["n"] = w->n;
        ordered_json coeffs = ordered_json::object();
        for (size_t i = 0; i <= w->n; ++i)
            if (w->a[i] != 0) coeffs[std::to_string(i)] = rat_str(w->a[i]);
        j["coeffs"] = std::move(coeffs);
        j["sum"] = rat_str(w->sum());
    }
    if (!compare.empty()) return compare_cells(cells, compare);
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << header << "\n";
        for (const auto& c : cells) std::cout << c.label << " = " << c.value << "\n";
    }
    return 0;
}

int run_shadow_cases(size_t m, bool json) {
    if (m == 0) throw CLI::ValidationError("shadow-cases", "m must be at least 1");
    const CaseReport& r = m == 5 ? shadow_case_report_118() : resolve_shadow_cases(m);
    std::cout << (json ? case_report_json(r) : case_report_text(r));
    if (!json) {
        for (const auto& cs : r.cases) {
            if (!cs.consistent || !cs.enumerator) continue;
            std::cout << "surviving enumerator:\n";
            for (size_t i = 0; i <= cs.enumerator->n; ++i)
                if (cs.enumerator->a[i] != 0)
                    std::cout << "  A_" << i << " = " << rat_str(cs.enumerator->a[i]) << "\n";
            if (cs.shadow) {
                std::cout << "surviving shadow:\n";
                for (size_t i = 0; i <= cs.shadow->n; ++i)
                    if (cs.shadow->a[i] != 0)
                        std::cout << "  B_" << i << " = " << rat_str(cs.shadow->a[i]) << "\n";
            }
        }
    } else {
        std::cout << "\n";
    }
    return 0;
}

int run_analyze(const std::string& path, size_t limit, bool json) {
    LinearCode c = read_code_file(path);
    CodeType ct = code_type(c);
    bool enumerable = c.k() <= limit;
    ordered_json j;
    j["file"] = path;
    j["n"] = c.n;
    j["k"] = c.k();
    j["self_dual"] = ct != CodeType::not_self_dual;
    j["type"] = ct == CodeType::type2 ? "II" : ct == CodeType::type1 ? "I" : "none";
    std::ostringstream text;
    text << "length " << c.n << "  dimension " << c.k() << "\n";
    text << "self-dual: " << (ct != CodeType::not_self_dual ? "yes" : "no") << "\n";
    if (ct != CodeType::not_self_dual)
        text << "type: " << (ct == CodeType::type2 ? "II" : "I") << "\n";
    if (enumerable) {
        WeightEnum w = WeightEnum::from_distribution(weight_distribution(c));
        size_t d = min_distance(c);
        text << "min distance: " << d << "\n";
        text << "W = " << poly_str(w) << "\n";
        j["min_distance"] = d;
        ordered_json coeffs = ordered_json::object();
        for (size_t i = 0; i <= w.n; ++i)
            if (w.a[i] != 0) coeffs[std::to_string(i)] = rat_str(w.a[i]);
        j["weight_enum"] = std::move(coeffs);
        if (ct == CodeType::type1) {
            ShadowResult s = shadow(c);
            text << "shadow = " << poly_str(s.enumerator) << "\n";
            text << "shadow min weight: " << s.min_weight << "\n";
            ordered_json sh = ordered_json::object();
            for (size_t i = 0; i <= s.enumerator.n; ++i)
                if (s.enumerator.a[i] != 0) sh[std::to_string(i)] = rat_str(s.enumerator.a[i]);
            j["shadow"] = std::move(sh);
            j["shadow_min_weight"] = s.min_weight;
        } else if (ct == CodeType::type2) {
            text << "shadow: equals the code (doubly even)\n";
        }
    } else {
        text << "enumeration skipped: dimension " << c.k() << " exceeds limit " << limit
             << "\n";
        j["enumeration"] = "skipped";
    }
    std::cout << (json ? j.dump(2) + "\n" : text.str());
    return 0;
}

int run_fixed(const std::string& path, const std::string& cycles, size_t limit, bool json) {
    LinearCode c = read_code_file(path);
    Permutation s = Permutation::parse_cycles(cycles, c.n);
    AutType t = aut_type(s);
    ordered_json j;
    j["order"] = t.order;
    j["type"] = t.format();
    std::ostringstream text;
    text << "permutation order " << t.order << "  type " << t.format() << "\n";
    if (!is_automorphism(c, s)) {
        for (const auto& r : c.rows) {
            if (c.contains(apply(s, r))) continue;
            std::string w = r.to_string();
            if (json) {
                j["automorphism"] = false;
                j["witness_row"] = w;
                std::cout << j.dump(2) << "\n";
            } else {
                text << "not an automorphism; witness codeword with image outside the "
                        "code:\n"
                     << w << "\n";
                std::cout << text.str();
            }
            return 1;
        }
    }
    j["automorphism"] = true;
    LinearCode f = fixed_code(c, s);
    LinearCode e = even_part(c, s);
    CycleLayout lay = cycle_layout(s);
    LinearCode proj = project(f, lay);
    CodeType pt = code_type(proj);
    text << "automorphism: yes\n";
    text << "dim F = " << f.k() << "  dim E = " << e.k() << "\n";
    j["dim_fixed"] = f.k();
    j["dim_even"] = e.k();
    bool odd_prime = t.kind == AutType::Kind::prime && t.p % 2 == 1;
    if (odd_prime) {
        MaschkeReport m = maschke_verify(c, s);
        text << "decomposition: F n E = 0 " << (m.trivial_intersection ? "yes" : "NO")
             << ", F + E = C " << (m.spans ? "yes" : "NO") << ", dim E = (p-1)c/2 = "
             << m.expected_dim_even << " " << (m.dim_even == m.expected_dim_even ? "yes" : "NO")
             << "\n";
        j["decomposition_ok"] = m.ok();
    }
    text << "projection: [" << proj.n << ", " << proj.k() << "]  self-dual: "
         << (pt != CodeType::not_self_dual ? "yes" : "no") << "  doubly even: "
         << (pt == CodeType::type2 ? "yes" : "no") << "\n";
    j["projection"] = {{"n", proj.n}, {"k", proj.k()}};
    j["projection_self_dual"] = pt != CodeType::not_self_dual;
    bool prime_order = t.kind == AutType::Kind::prime;
    if (prime_order && c.k() <= limit) {
        CongruenceReport cr = fixed_code_congruence(c, s, BigInt(t.p));
        text << "coefficient congruence mod " << t.p << ": " << (cr.ok ? "ok" : "FAILED")
             << "\n";
        j["congruence_ok"] = cr.ok;
        if (!cr.ok) {
            std::cout << (json ? j.dump(2) + "\n" : text.str());
            return 1;
        }
    }
    if (c.n == 120) {
        TypeVerdict v = check_type_allowed(t);
        text << "length-120 admissibility: " << (v.allowed ? "allowed" : "excluded") << " ("
             << v.reason << ")\n";
        j["admissible"] = v.allowed;
        j["admissibility_reason"] = v.reason;
    }
    std::cout << (json ? j.dump(2) + "\n" : text.str());
    return 0;
}

int run_design(const std::string& path, size_t w, size_t t, const std::string& verify,
               std::optional<uint64_t> trials, std::optional<uint64_t> seed, bool json) {
    LinearCode c = read_code_file(path);
    Design d = design_from_codewords(c, w);
    DesignCheck chk;
    std::string mode = verify;
    if (verify == "sample") {
        if (!seed) throw CLI::ValidationError("design", "--verify sample requires --seed");
        chk = verify_t_design(d, t, SampleMode{trials.value_or(1000), *seed});
    } else {
        chk = verify_t_design(d, t);
    }
    ordered_json j;
    j["v"] = d.v;
    j["b"] = d.b();
    j["k"] = d.k();
    j["t"] = t;
    j["verify"] = mode;
    std::ostringstream text;
    text << "v = " << d.v << "  b = " << d.b() << "  block size " << d.k() << "\n";
    if (chk.ok) {
        DesignParams dp = lambda_vector(t, d.v, d.k(), BigInt(chk.lambda));
        text << t << "-(" << d.v << ", " << d.k() << ", " << chk.lambda << ") design: "
             << (verify == "exact" ? "verified exactly" : "consistent with sampling") << "\n";
        text << "lambda_0..lambda_" << t << " =";
        for (const auto& x : dp.lambda_vec) text << " " << rat_str(x);
        text << "\n";
        j["ok"] = true;
        j["lambda"] = chk.lambda;
        ordered_json lam = ordered_json::array();
        for (const auto& x : dp.lambda_vec) lam.push_back(rat_str(x));
        j["lambda_vec"] = std::move(lam);
        std::cout << (json ? j.dump(2) + "\n" : text.str());
        return 0;
    }
    text << "not a " << t << "-design:\n";
    text << "subset " << chk.subset_a.to_string() << " covered by " << chk.count_a
         << " blocks\n";
    text << "subset " << chk.subset_b.to_string() << " covered by " << chk.count_b
         << " blocks\n";
    j["ok"] = false;
    j["subset_a"] = chk.subset_a.to_string();
    j["count_a"] = chk.count_a;
    j["subset_b"] = chk.subset_b.to_string();
    j["count_b"] = chk.count_b;
    std::cout << (json ? j.dump(2) + "\n" : text.str());
    return 1;
}

int run_child(const std::string& path, size_t i, size_t jpos) {
    LinearCode c = read_code_file(path);
    if (i >= c.n || jpos >= c.n || i == jpos)
        throw CLI::ValidationError("child", "positions must be distinct and below n");
    if (!is_self_dual(c)) {
        std::cout << "input is not self-dual, no child exists\n";
        return 1;
    }
    LinearCode ch = child(c, i, jpos);
    std::cout << "# child at positions " << i << ", " << jpos << "\n";
    write_code(std::cout, ch);
    return 0;
}

int run_extend(const std::string& path) {
    LinearCode c = read_code_file(path);
    try {
        LinearCode ext = shadow_extend(c);
        std::cout << "# two-tag extension, [" << ext.n << ", " << ext.k() << "]\n";
        write_code(std::cout, ext);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cout << "extension refused: " << e.what() << "\n";
        return 1;
    }
}

int run_neighbor(const std::string& path, const std::string& vecpath) {
    LinearCode c = read_code_file(path);
    BitVector u = read_vector_file(vecpath);
    try {
        LinearCode nb = neighbor_through(c, u);
        std::cout << "# neighbor through " << u.to_string() << "\n";
        write_code(std::cout, nb);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cout << "neighbor refused: " << e.what() << "\n";
        return 1;
    }
}

CycleLayout read_layout_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("exclude", "cannot open " + path);
    LineReader rd{in};
    std::string line;
    if (!rd.next(line)) throw ParseError(rd.line, "layout file is empty");
    size_t n = 0;
    try {
        n = std::stoul(line);
    } catch (const std::exception&) {
        throw ParseError(rd.line, "expected the coordinate count");
    }
    std::string cycles;
    while (rd.next(line)) cycles += line;
    return cycle_layout(Permutation::parse_cycles(cycles, n));
}

std::vector<std::string> dir_files(const std::string& dir) {
    std::vector<std::string> names;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file()) names.push_back(e.path().string());
    std::sort(names.begin(), names.end());
    return names;
}

int run_exclude(const std::string& layout_p, const std::string& layout_q,
                const std::string& dset, const std::string& eset, size_t threshold,
                bool json) {
    CycleLayout lp = read_layout_file(layout_p);
    CycleLayout lq = read_layout_file(layout_q);
    std::vector<std::string> dnames = dir_files(dset), enames = dir_files(eset);
    std::vector<LinearCode> ds, es;
    for (const auto& f : dnames) ds.push_back(read_code_file(f));
    for (const auto& f : enames) es.push_back(read_code_file(f));
    PipelineResult r = exclusion_pipeline(lp, ds, lq, es, threshold);
    ordered_json j;
    j["candidates_d"] = dnames.size();
    j["candidates_e"] = enames.size();
    j["threshold"] = threshold;
    ordered_json pairs = ordered_json::array();
    std::ostringstream text;
    text << "candidates: " << ds.size() << " x " << es.size() << ", threshold " << threshold
         << "\n";
    for (const auto& pv : r.pairs) {
        ordered_json pj;
        pj["d"] = dnames[pv.d_index];
        pj["e"] = enames[pv.e_index];
        text << "pair (" << dnames[pv.d_index] << ", " << enames[pv.e_index] << "): ";
        if (pv.witness_found) {
            text << "witness of weight " << pv.witness.weight() << ": "
                 << pv.witness.to_string() << "\n";
            pj["witness"] = pv.witness.to_string();
            pj["witness_weight"] = pv.witness.weight();
        } else {
            text << "no word below " << threshold << "\n";
            pj["witness"] = nullptr;
        }
        pairs.push_back(std::move(pj));
    }
    j["pairs"] = std::move(pairs);
    j["excluded"] = r.excluded;
    j["vacuous"] = r.vacuous;
    if (r.vacuous) text << "no candidate pairs formed\n";
    text << "excluded: " << (r.excluded ? "yes" : "no") << "\n";
    std::cout << (json ? j.dump(2) + "\n" : text.str());
    return 0;
}

int run_catalog(const std::string& name, const std::string& cycles_of) {
    const auto& all = entries();
    if (name.empty()) {
        for (const auto& e : all) {
            std::cout << e.name << "  [" << e.n << ", " << e.k << ", " << e.d << "]  type "
                      << (e.type == CodeType::type2 ? "II" : "I");
            if (!e.automorphisms.empty()) {
                std::cout << "  automorphisms:";
                for (const auto& a : e.automorphisms)
                    std::cout << " " << a.name << "=" << a.expected_type;
            }
            std::cout << "\n";
        }
        return 0;
    }
    for (const auto& e : all) {
        if (e.name != name) continue;
        if (cycles_of.empty()) {
            std::cout << "# " << e.name << " [" << e.n << ", " << e.k << ", " << e.d << "]\n";
            write_code(std::cout, e.code);
            return 0;
        }
        for (const auto& a : e.automorphisms)
            if (a.name == cycles_of) {
                std::cout << e.n << "\n" << a.perm.to_cycles() << "\n";
                return 0;
            }
        throw CLI::ValidationError("catalog", "no automorphism named " + cycles_of);
    }
    throw CLI::ValidationError("catalog", "no catalog entry named " + name);
}

int run_discrepancies(bool json) {
    const auto& all = discrepancies();
    if (json) {
        ordered_json arr = ordered_json::array();
        for (const auto& d : all) {
            ordered_json j;
            j["location"] = d.location;
            j["printed"] = d.printed;
            j["computed"] = d.computed;
            j["note"] = d.note;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    for (size_t i = 0; i < all.size(); ++i) {
        const auto& d = all[i];
        std::cout << "[" << i + 1 << "] " << d.location << "\n";
        std::cout << "    printed:  " << d.printed << "\n";
        std::cout << "    computed: " << d.computed << "\n";
        std::cout << "    note: " << d.note << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for binary self-dual codes"};
    app.require_subcommand(1);
    int rc = 0;

    std::string table_id, compare;
    bool json = false;
    auto* tables = app.add_subcommand("tables", "print a derived table");
    tables->add_option("which", table_id, "eq1, t1, t2, t3, t4 or t5")
        ->required()
        ->check(CLI::IsMember({"eq1", "t1", "t2", "t3", "t4", "t5"}));
    tables->add_option("--compare", compare, "expected-values file, diff cell by cell");
    tables->add_flag("--json", json);
    tables->callback([&] { rc = run_tables(table_id, compare, json); });

    size_t m = 0;
    auto* cases = app.add_subcommand("shadow-cases", "settle the low shadow coefficients");
    cases->add_option("m", m, "family index, length 24m-2")->required();
    cases->add_flag("--json", json);
    cases->callback([&] { rc = run_shadow_cases(m, json); });

    std::string code_path;
    size_t limit = 24;
    auto* analyze = app.add_subcommand("analyze", "type, distance and enumerators of a code");
    analyze->add_option("code", code_path, "generator file")->required();
    analyze->add_option("--limit", limit, "largest dimension to enumerate");
    analyze->add_flag("--json", json);
    analyze->callback([&] { rc = run_analyze(code_path, limit, json); });

    std::string cycles;
    auto* fixed = app.add_subcommand("fixed", "fixed-code decomposition under a permutation");
    fixed->add_option("code", code_path, "generator file")->required();
    fixed->add_option("perm", cycles, "cycle notation, 1-indexed")->required();
    fixed->add_option("--limit", limit, "largest dimension to enumerate");
    fixed->add_flag("--json", json);
    fixed->callback([&] { rc = run_fixed(code_path, cycles, limit, json); });

    size_t dw = 0, dt = 0;
    std::string verify = "exact";
    std::optional<uint64_t> trials, seed;
    auto* design = app.add_subcommand("design", "design from the words of one weight");
    design->add_option("code", code_path, "generator file")->required();
    design->add_option("--weight", dw, "codeword weight")->required();
    design->add_option("--t", dt, "design strength")->required();
    design->add_option("--verify", verify)->check(CLI::IsMember({"exact", "sample"}));
    design->add_option("--trials", trials, "sampled subsets");
    design->add_option("--seed", seed, "sampling seed, required for --verify sample");
    design->add_flag("--json", json);
    design->callback([&] { rc = run_design(code_path, dw, dt, verify, trials, seed, json); });

    size_t pos_i = 0, pos_j = 0;
    auto* childc = app.add_subcommand("child", "self-dual code two coordinates shorter");
    childc->add_option("code", code_path)->required();
    childc->add_option("i", pos_i, "position, 0-indexed")->required();
    childc->add_option("j", pos_j, "position, 0-indexed")->required();
    childc->callback([&] { rc = run_child(code_path, pos_i, pos_j); });

    auto* extend = app.add_subcommand("extend", "two-tag extension of a type I code");
    extend->add_option("code", code_path)->required();
    extend->callback([&] { rc = run_extend(code_path); });

    std::string vec_path;
    auto* neighbor = app.add_subcommand("neighbor", "self-dual neighbor through a vector");
    neighbor->add_option("code", code_path)->required();
    neighbor->add_option("vector", vec_path, "indicator line file")->required();
    neighbor->callback([&] { rc = run_neighbor(code_path, vec_path); });

    std::string layout_p, layout_q, dset, eset;
    size_t threshold = 0;
    auto* exclude = app.add_subcommand("exclude", "lift candidate pairs and hunt low words");
    exclude->add_option("--layout-p", layout_p)->required();
    exclude->add_option("--layout-q", layout_q)->required();
    exclude->add_option("--dset", dset, "directory of candidate codes")->required();
    exclude->add_option("--eset", eset, "directory of candidate codes")->required();
    exclude->add_option("--threshold", threshold)->required();
    exclude->add_flag("--json", json);
    exclude->callback(
        [&] { rc = run_exclude(layout_p, layout_q, dset, eset, threshold, json); });

    std::string cat_name, cycles_of;
    auto* catalog = app.add_subcommand("catalog", "built-in codes and automorphisms");
    catalog->add_option("name", cat_name, "entry to export");
    catalog->add_option("--cycles", cycles_of, "print this automorphism as a layout file");
    catalog->callback([&] { rc = run_catalog(cat_name, cycles_of); });

    auto* disc = app.add_subcommand("discrepancies", "published values that recompute differently");
    disc->add_flag("--json", json);
    disc->callback([&] { rc = run_discrepancies(json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
