#include "sdc/shadow_cases.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sdc {
namespace {

// affine form c + sum g[v] x_v, read as ">= 0" inside the inequality system
struct LinForm {
    BigRat c;
    std::map<size_t, BigRat> g;

    void substitute(size_t v, const BigRat& val) {
        auto it = g.find(v);
        if (it == g.end()) return;
        c += it->second * val;
        g.erase(it);
    }
    BigRat eval(const std::map<size_t, BigRat>& vals) const {
        BigRat r = c;
        for (const auto& [v, coeff] : g) r += coeff * vals.at(v);
        return r;
    }
};

std::optional<size_t> any_var(const std::vector<LinForm>& fs) {
    std::optional<size_t> best;
    for (const auto& f : fs)
        for (const auto& [v, coeff] : f.g) {
            (void)coeff;
            if (!best || v > *best) best = v;
        }
    return best;
}

// one elimination round: combine every lower bound on v with every upper bound
std::vector<LinForm> fm_eliminate(const std::vector<LinForm>& fs, size_t v) {
    std::vector<LinForm> keep, lower, upper;
    for (const auto& f : fs) {
        auto it = f.g.find(v);
        if (it == f.g.end()) keep.push_back(f);
        else if (it->second > 0) lower.push_back(f);
        else upper.push_back(f);
    }
    for (const auto& lo : lower)
        for (const auto& up : upper) {
            const BigRat cl = lo.g.at(v), cu = up.g.at(v);
            LinForm nf;
            nf.c = cl * up.c - cu * lo.c;
            for (const auto& [w, x] : up.g) nf.g[w] += cl * x;
            for (const auto& [w, x] : lo.g) nf.g[w] -= cu * x;
            for (auto it = nf.g.begin(); it != nf.g.end();)
                it = (it->second == 0) ? nf.g.erase(it) : std::next(it);
            keep.push_back(std::move(nf));
        }
    return keep;
}

bool fm_feasible(std::vector<LinForm> fs) {
    while (auto v = any_var(fs)) fs = fm_eliminate(fs, *v);
    return std::all_of(fs.begin(), fs.end(), [](const LinForm& f) { return f.c >= 0; });
}

struct Interval {
    std::optional<BigRat> lo, hi;
};

// exact projection of the (feasible) system onto one variable
Interval fm_project(std::vector<LinForm> fs, size_t keep_var) {
    while (true) {
        std::optional<size_t> v;
        for (const auto& f : fs)
            for (const auto& [w, coeff] : f.g) {
                (void)coeff;
                if (w != keep_var && (!v || w > *v)) v = w;
            }
        if (!v) break;
        fs = fm_eliminate(fs, *v);
    }
    Interval iv;
    for (const auto& f : fs) {
        if (f.g.empty()) continue;
        const BigRat coeff = f.g.at(keep_var);
        const BigRat bound = -f.c / coeff;
        if (coeff > 0) {
            if (!iv.lo || bound > *iv.lo) iv.lo = bound;
        } else {
            if (!iv.hi || bound < *iv.hi) iv.hi = bound;
        }
    }
    return iv;
}

// solve the square system {rows = 0} by elimination; nullopt when singular
std::optional<std::map<size_t, BigRat>> solve_square(std::vector<LinForm> rows,
                                                     std::vector<size_t> vars) {
    if (rows.size() < vars.size()) return std::nullopt;
    std::map<size_t, BigRat> out;
    for (size_t step = 0; step < vars.size(); ++step) {
        const size_t v = vars[step];
        size_t sel = rows.size();
        for (size_t i = step; i < rows.size(); ++i)
            if (rows[i].g.count(v) && rows[i].g.at(v) != 0) {
                sel = i;
                break;
            }
        if (sel == rows.size()) return std::nullopt;
        std::swap(rows[step], rows[sel]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == step || !rows[i].g.count(v)) continue;
            const BigRat f = rows[i].g.at(v) / rows[step].g.at(v);
            rows[i].c -= f * rows[step].c;
            for (const auto& [w, x] : rows[step].g) rows[i].g[w] -= f * x;
            rows[i].g.erase(v);
        }
    }
    for (size_t step = 0; step < vars.size(); ++step) {
        const size_t v = vars[step];
        BigRat rhs = -rows[step].c;
        for (const auto& [w, x] : rows[step].g)
            if (w != v && x != 0) rhs -= x * out.at(w);
        out[v] = rhs / rows[step].g.at(v);
    }
    return out;
}

std::string var_list(const std::vector<std::pair<size_t, BigRat>>& vs) {
    std::ostringstream s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s << ", ";
        s << "a_" << vs[i].first << " = " << rat_str(vs[i].second);
    }
    return s.str();
}

}  // namespace

std::string ShadowCasePattern::label() const {
    std::ostringstream s;
    for (size_t i = 0; i < assigned.size(); ++i) {
        if (i) s << ", ";
        s << "B_" << assigned[i].first;
        switch (assigned[i].second) {
            case LowWeightValue::zero: s << " = 0"; break;
            case LowWeightValue::one: s << " = 1"; break;
            case LowWeightValue::at_least_one: s << " >= 1"; break;
        }
    }
    return s.str();
}

size_t CaseReport::consistent_count() const {
    size_t c = 0;
    for (const auto& cs : cases) c += cs.consistent;
    return c;
}

CaseReport resolve_shadow_cases(size_t m) {
    if (m < 1 || m > 12)
        throw std::invalid_argument("family index must lie in 1..12");
    const size_t n = 24 * m - 2;
    const size_t d = 4 * m + 2;
    CaseReport rep;
    rep.m = m;
    rep.n = n;
    rep.d = d;

    std::vector<std::pair<size_t, BigRat>> cons;
    cons.emplace_back(0, BigRat(1));
    for (size_t t = 1; t <= 2 * m; ++t) cons.emplace_back(2 * t, BigRat(0));
    rep.prefix = solve_gleason(n, GleasonBasis::even, cons);

    const size_t top = rep.prefix.a.size() - 1;
    std::vector<size_t> free_vars;
    for (size_t j = 0; j <= top; ++j)
        if (!rep.prefix.a[j]) free_vars.push_back(j);

    std::vector<WeightEnum> terms;
    for (size_t j = 0; j <= top; ++j) terms.push_back(shadow_basis_term(n, j));

    auto form_at = [&](size_t w) {
        LinForm f;
        for (size_t j = 0; j <= top; ++j) {
            const BigRat& coeff = terms[j].a[w];
            if (coeff == 0) continue;
            if (rep.prefix.a[j]) f.c += *rep.prefix.a[j] * coeff;
            else f.g[j] = coeff;
        }
        return f;
    };

    std::vector<size_t> admissible;
    for (size_t w = 1; w <= n / 2; ++w)
        if (w % 4 == (n / 2) % 4) admissible.push_back(w);
    std::vector<size_t> low;  // the pattern range: below (d+4)/2
    for (size_t w : admissible)
        if (2 * w < d + 4) low.push_back(w);

    // single-nonzero patterns in ascending weight, then the all-zero pattern.
    // weights below d/2 can only carry 0 or 1; the rest of the range carries
    // "nonzero", which for integral shadow coefficients means >= 1
    std::vector<ShadowCasePattern> patterns;
    for (size_t i = 0; i <= low.size(); ++i) {
        ShadowCasePattern p;
        for (size_t j = 0; j < low.size(); ++j) {
            LowWeightValue v = LowWeightValue::zero;
            if (i == j) v = (2 * low[j] < d) ? LowWeightValue::one : LowWeightValue::at_least_one;
            p.assigned.emplace_back(low[j], v);
        }
        if (i < low.size()) patterns.push_back(std::move(p));
        else patterns.insert(patterns.end(), std::move(p));
    }

    for (const auto& pat : patterns) {
        ShadowCase cs;
        cs.pattern = pat;
        std::map<size_t, BigRat> fixed;
        std::set<size_t> consumed;
        bool dead = false;

        // bind tail coefficients from the assigned equalities, lowest weight
        // first, each solved for its highest-index undetermined coefficient
        for (const auto& [w, val] : pat.assigned) {
            if (val == LowWeightValue::at_least_one) continue;
            const BigRat target = (val == LowWeightValue::one) ? 1 : 0;
            LinForm f = form_at(w);
            for (const auto& [v, x] : fixed) f.substitute(v, x);
            consumed.insert(w);
            if (f.g.empty()) {
                if (f.c != target) {
                    cs.violated_weight = w;
                    cs.violated_value = f.c;
                    cs.certificate = "B_" + std::to_string(w) + " = " + rat_str(f.c) +
                                     ", pattern requires " + rat_str(target);
                    dead = true;
                    break;
                }
                continue;
            }
            const size_t v = f.g.rbegin()->first;
            const BigRat value = (target - f.c) / f.g.at(v);
            fixed[v] = value;
            cs.bound.emplace_back(v, value);
        }
        if (dead) {
            rep.cases.push_back(std::move(cs));
            continue;
        }

        // remaining nonnegativity system; the assigned nonzero weight keeps a
        // lower bound of one
        std::vector<LinForm> system;
        std::vector<std::pair<size_t, BigRat>> labels;  // weight, lower bound
        for (size_t w : admissible) {
            if (consumed.count(w)) continue;
            BigRat lb = 0;
            for (const auto& [pw, val] : pat.assigned)
                if (pw == w && val == LowWeightValue::at_least_one) lb = 1;
            LinForm f = form_at(w);
            for (const auto& [v, x] : fixed) f.substitute(v, x);
            f.c -= lb;
            if (f.g.empty()) {
                if (f.c < 0) {
                    cs.violated_weight = w;
                    cs.violated_value = f.c + lb;
                    cs.certificate = "B_" + std::to_string(w) + " = " + rat_str(f.c + lb) +
                                     " < " + rat_str(lb);
                    dead = true;
                    break;
                }
                continue;
            }
            system.push_back(std::move(f));
            labels.emplace_back(w, lb);
        }
        if (dead) {
            rep.cases.push_back(std::move(cs));
            continue;
        }

        if (fm_feasible(system)) {
            cs.consistent = true;
            bool all_pinned = true;
            for (size_t v : free_vars) {
                if (fixed.count(v)) continue;
                Interval iv = fm_project(system, v);
                if (iv.lo && iv.hi && *iv.lo == *iv.hi) {
                    fixed[v] = *iv.lo;
                    cs.forced.emplace_back(v, *iv.lo);
                } else {
                    all_pinned = false;
                }
            }
            if (all_pinned) {
                GleasonCoeffs full = rep.prefix;
                for (const auto& [v, x] : fixed) full.a[v] = x;
                cs.enumerator = gleason_expand(full);
                cs.shadow = shadow_enum(full);
            }
            rep.cases.push_back(std::move(cs));
            continue;
        }

        // infeasible: exhibit a corner where the first constraints sit at
        // their bounds and name the first bound that breaks there
        std::vector<size_t> vars;
        {
            std::set<size_t> seen;
            for (const auto& f : system)
                for (const auto& [v, x] : f.g) {
                    (void)x;
                    seen.insert(v);
                }
            vars.assign(seen.begin(), seen.end());
        }
        std::vector<LinForm> tight;
        std::vector<size_t> tight_idx;
        std::vector<std::map<size_t, BigRat>> reduced;  // row space seen so far
        for (size_t i = 0; i < system.size() && tight.size() < vars.size(); ++i) {
            std::map<size_t, BigRat> row = system[i].g;
            for (const auto& prev : reduced) {
                const size_t lead = prev.begin()->first;
                auto it = row.find(lead);
                if (it == row.end() || it->second == 0) continue;
                const BigRat f = it->second / prev.at(lead);
                for (const auto& [v, x] : prev) {
                    row[v] -= f * x;
                    if (row[v] == 0) row.erase(v);
                }
            }
            if (row.empty()) continue;
            reduced.push_back(std::move(row));
            tight.push_back(system[i]);
            tight_idx.push_back(i);
        }
        auto corner = solve_square(tight, vars);
        bool named = false;
        if (corner) {
            for (size_t v : vars) cs.corner.emplace_back(v, corner->at(v));
            for (size_t i = 0; i < system.size(); ++i) {
                if (std::find(tight_idx.begin(), tight_idx.end(), i) != tight_idx.end())
                    continue;
                const BigRat val = system[i].eval(*corner);
                if (val < 0) {
                    cs.violated_weight = labels[i].first;
                    cs.violated_value = val + labels[i].second;
                    cs.certificate = "B_" + std::to_string(labels[i].first) + " = " +
                                     rat_str(cs.violated_value) + " < " +
                                     rat_str(labels[i].second) + " at " + var_list(cs.corner);
                    named = true;
                    break;
                }
            }
        }
        if (!named) cs.certificate = "nonnegativity system infeasible";
        rep.cases.push_back(std::move(cs));
    }
    return rep;
}

std::string case_report_text(const CaseReport& r) {
    std::ostringstream s;
    s << "family m=" << r.m << ": putative [" << r.n << ", " << r.n / 2 << ", " << r.d
      << "] type I code, shadow weights = " << (r.n / 2) % 4 << " (mod 4)\n";
    s << "prefix";
    for (size_t j = 0; j < r.prefix.a.size(); ++j)
        if (r.prefix.a[j]) s << (j ? ", " : " a_0.. = ") << rat_str(*r.prefix.a[j]);
    s << "\n";
    for (const auto& cs : r.cases) {
        s << "case " << cs.pattern.label() << ":\n";
        if (!cs.bound.empty()) s << "  bound " << var_list(cs.bound) << "\n";
        if (cs.consistent) {
            s << "  consistent";
            if (!cs.forced.empty()) s << "; forced " << var_list(cs.forced);
            s << "\n";
            if (cs.shadow) {
                s << "  shadow min weight " << cs.shadow->min_positive_weight() << "\n";
            }
        } else {
            s << "  contradiction: " << cs.certificate << "\n";
        }
    }
    s << r.consistent_count() << " of " << r.cases.size() << " cases consistent\n";
    return s.str();
}

namespace {
nlohmann::ordered_json enum_json(const WeightEnum& w) {
    nlohmann::ordered_json j;
    j["n"] = w.n;
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (size_t i = 0; i <= w.n; ++i)
        if (w.a[i] != 0) coeffs[std::to_string(i)] = rat_str(w.a[i]);
    j["coeffs"] = std::move(coeffs);
    return j;
}
}  // namespace

std::string case_report_json(const CaseReport& r) {
    nlohmann::ordered_json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["d"] = r.d;
    nlohmann::ordered_json prefix = nlohmann::ordered_json::array();
    for (const auto& x : r.prefix.a) prefix.push_back(x ? rat_str(*x) : "unset");
    j["prefix"] = std::move(prefix);
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const auto& cs : r.cases) {
        nlohmann::ordered_json c;
        c["pattern"] = cs.pattern.label();
        nlohmann::ordered_json bound = nlohmann::ordered_json::object();
        for (const auto& [v, x] : cs.bound) bound["a_" + std::to_string(v)] = rat_str(x);
        c["bound"] = std::move(bound);
        c["verdict"] = cs.consistent ? "consistent" : "contradiction";
        if (cs.consistent) {
            nlohmann::ordered_json forced = nlohmann::ordered_json::object();
            for (const auto& [v, x] : cs.forced) forced["a_" + std::to_string(v)] = rat_str(x);
            c["forced"] = std::move(forced);
            if (cs.enumerator) c["enumerator"] = enum_json(*cs.enumerator);
            if (cs.shadow) c["shadow"] = enum_json(*cs.shadow);
        } else {
            c["certificate"] = cs.certificate;
            c["violated_weight"] = cs.violated_weight;
            c["violated_value"] = rat_str(cs.violated_value);
        }
        cases.push_back(std::move(c));
    }
    j["cases"] = std::move(cases);
    return j.dump(2);
}

}  // namespace sdc
