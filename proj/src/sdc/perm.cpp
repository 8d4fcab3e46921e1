#include "sdc/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sdc {
namespace {

bool is_prime(size_t v) {
    if (v < 2) return false;
    for (size_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

}  // namespace

Permutation Permutation::identity(size_t n) {
    Permutation p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), size_t{0});
    return p;
}

Permutation Permutation::parse_cycles(const std::string& text, size_t n) {
    Permutation p = identity(n);
    std::vector<bool> seen(n, false);
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("cycle text: expected '('");
        ++pos;
        std::vector<size_t> cyc;
        while (true) {
            skip_ws();
            size_t start = pos;
            while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("cycle text: expected a position");
            size_t val = std::stoul(text.substr(start, pos - start));
            if (val < 1 || val > n) throw std::invalid_argument("cycle text: position out of range");
            if (seen[val - 1]) throw std::invalid_argument("cycle text: repeated position");
            seen[val - 1] = true;
            cyc.push_back(val - 1);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            throw std::invalid_argument("cycle text: expected ',' or ')'");
        }
        if (cyc.size() < 2) throw std::invalid_argument("cycle text: cycles need two positions");
        for (size_t i = 0; i < cyc.size(); ++i) p.img[cyc[i]] = cyc[(i + 1) % cyc.size()];
        skip_ws();
    }
    return p;
}

std::string Permutation::to_cycles() const {
    CycleLayout lay = cycle_layout(*this);
    std::ostringstream s;
    for (const auto& cyc : lay.cycles) {
        s << '(';
        for (size_t i = 0; i < cyc.size(); ++i) s << (i ? "," : "") << cyc[i] + 1;
        s << ')';
    }
    if (lay.cycles.empty()) s << "()";
    return s.str();
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img.resize(n());
    for (size_t i = 0; i < n(); ++i) p.img[img[i]] = i;
    return p;
}

Permutation Permutation::then(const Permutation& o) const {
    if (o.n() != n()) throw std::invalid_argument("compose: degree mismatch");
    Permutation p;
    p.img.resize(n());
    for (size_t i = 0; i < n(); ++i) p.img[i] = o.img[img[i]];
    return p;
}

Permutation Permutation::power(uint64_t e) const {
    Permutation r = identity(n());
    Permutation b = *this;
    while (e) {
        if (e & 1) r = r.then(b);
        b = b.then(b);
        e >>= 1;
    }
    return r;
}

uint64_t Permutation::order() const {
    uint64_t o = 1;
    for (const auto& cyc : cycle_layout(*this).cycles)
        o = std::lcm(o, static_cast<uint64_t>(cyc.size()));
    return o;
}

BitVector apply(const Permutation& s, const BitVector& v) {
    if (s.n() != v.n) throw std::invalid_argument("apply: degree mismatch");
    BitVector out(v.n);
    for (size_t i = 0; i < v.n; ++i)
        if (v.get(i)) out.set(s.img[i], true);
    return out;
}

LinearCode apply(const Permutation& s, const LinearCode& c) {
    std::vector<BitVector> rows;
    rows.reserve(c.k());
    for (const auto& r : c.rows) rows.push_back(apply(s, r));
    return LinearCode::from_rows(c.n, std::move(rows));
}

bool is_automorphism(const LinearCode& c, const Permutation& s) {
    if (s.n() != c.n) return false;
    for (const auto& r : c.rows)
        if (!c.contains(apply(s, r))) return false;
    return true;
}

CycleLayout cycle_layout(const Permutation& s) {
    CycleLayout lay;
    lay.n = s.n();
    std::vector<bool> seen(s.n(), false);
    for (size_t i = 0; i < s.n(); ++i) {
        if (seen[i]) continue;
        std::vector<size_t> cyc;
        size_t j = i;
        do {
            seen[j] = true;
            cyc.push_back(j);
            j = s.img[j];
        } while (j != i);
        if (cyc.size() == 1) lay.fixed.push_back(i);
        else lay.cycles.push_back(std::move(cyc));
    }
    return lay;
}

size_t AutType::degree() const {
    size_t deg = f;
    for (const auto& [len, count] : cycle_type) deg += len * count;
    if (kind == Kind::prime || kind == Kind::uniform_composite) return p * c + f;
    if (kind == Kind::mixed) return p * s1 + r * s2 + p * r * s3 + f;
    return deg;
}

std::string AutType::format() const {
    std::ostringstream s;
    switch (kind) {
        case Kind::prime:
        case Kind::uniform_composite:
            s << p << "-(" << c << ";" << f << ")";
            break;
        case Kind::mixed:
            s << p << "." << r << "-(" << s1 << "," << s2 << "," << s3 << ";" << f << ")";
            break;
        case Kind::generic:
            if (order == 1) {
                s << "1-(0;" << f << ")";
            } else {
                s << "order " << order << ": ";
                for (size_t i = 0; i < cycle_type.size(); ++i) {
                    if (i) s << ' ';
                    s << cycle_type[i].first << "^" << cycle_type[i].second;
                }
                s << "; " << f << " fixed";
            }
            break;
    }
    return s.str();
}

AutType aut_type(const Permutation& s) {
    CycleLayout lay = cycle_layout(s);
    AutType t;
    t.order = s.order();
    t.f = lay.fixed.size();
    std::map<size_t, size_t> counts;
    for (const auto& cyc : lay.cycles) ++counts[cyc.size()];
    t.cycle_type.assign(counts.begin(), counts.end());
    if (counts.empty()) {
        t.kind = AutType::Kind::generic;
        return t;
    }
    if (counts.size() == 1) {
        const size_t len = counts.begin()->first;
        t.p = len;
        t.c = counts.begin()->second;
        t.kind = is_prime(len) ? AutType::Kind::prime : AutType::Kind::uniform_composite;
        return t;
    }
    // mixed p.r shape: all cycle lengths among p, r, p*r for distinct primes
    if (t.order <= 0xffffffffu) {
        const uint64_t o = t.order;
        for (size_t p = 2; p * p <= o; ++p) {
            if (o % p != 0 || !is_prime(p)) continue;
            const uint64_t r = o / p;
            if (r <= p || !is_prime(static_cast<size_t>(r))) continue;
            bool shape = true;
            for (const auto& [len, cnt] : counts) {
                (void)cnt;
                if (len != p && len != r && len != p * r) shape = false;
            }
            if (!shape) continue;
            t.kind = AutType::Kind::mixed;
            t.p = p;
            t.r = static_cast<size_t>(r);
            auto cnt_of = [&](size_t len) {
                auto it = counts.find(len);
                return it == counts.end() ? size_t{0} : it->second;
            };
            t.s1 = cnt_of(t.p);
            t.s2 = cnt_of(t.r);
            t.s3 = cnt_of(t.p * t.r);
            return t;
        }
    }
    t.kind = AutType::Kind::generic;
    return t;
}

}  // namespace sdc
