#include "sdc/admissible.hpp"

#include <stdexcept>

namespace sdc {

uint64_t sylow_bound(uint64_t n, uint64_t p) {
    if (p < 2) throw std::invalid_argument("p must be a prime");
    uint64_t a = 0;
    while (n % p == 0) {
        n /= p;
        ++a;
    }
    return a;
}

bool free_module_obstruction(uint64_t order, uint64_t dim) {
    if (order == 0 || dim == 0)
        throw std::invalid_argument("order and dimension must be positive");
    return dim % order != 0;
}

namespace {

TypeVerdict allowed_verdict() {
    return {true, "admissible cycle shape"};
}

TypeVerdict excluded(std::string why) { return {false, std::move(why)}; }

}  // namespace

TypeVerdict check_type_allowed(const AutType& t) {
    if (t.degree() != 120)
        throw std::invalid_argument("admissibility table covers length 120 only");
    if (t.order == 1) return {true, "identity"};

    switch (t.kind) {
        case AutType::Kind::prime: {
            uint64_t p = t.p, c = t.c, f = t.f;
            bool ok = (p == 2 && ((c == 48 && f == 24) || (c == 60 && f == 0))) ||
                      (p == 3 && c == 40 && f == 0) ||
                      (p == 5 && c == 24 && f == 0) ||
                      (p == 7 && c == 17 && f == 1) ||
                      (p == 19 && c == 6 && f == 6) ||
                      (p == 23 && c == 5 && f == 5);
            if (ok) return allowed_verdict();
            return excluded("no admissible cycle shape of prime order " +
                            std::to_string(p) + " with " + std::to_string(c) +
                            " cycles and " + std::to_string(f) + " fixed points");
        }
        case AutType::Kind::uniform_composite: {
            uint64_t r = t.p, c = t.c, f = t.f;
            if (f == 0 && ((r == 4 && c == 30) || (r == 6 && c == 20) ||
                           (r == 10 && c == 12) || (r == 12 && c == 10) ||
                           (r == 15 && c == 8) || (r == 20 && c == 6)))
                return allowed_verdict();
            if (r == 8 && c == 15 && f == 0)
                return excluded(
                    "a fixed point free order 8 action makes the code a free "
                    "module over the group ring, and 8 does not divide 60");
            if (r == 30 && c == 4 && f == 0)
                return excluded(
                    "every sum of lifted candidate fixed codes of the order 3 "
                    "and order 5 powers has minimum distance below 24");
            if (r == 60 && c == 2 && f == 0)
                return excluded(
                    "an order 60 element squares to an element of order 30, "
                    "which cannot occur");
            return excluded("no admissible cycle shape of composite order " +
                            std::to_string(r));
        }
        case AutType::Kind::mixed: {
            if (t.p == 5 && t.r == 23 && t.s1 == 1 && t.s2 == 0 && t.s3 == 1 &&
                t.f == 0)
                return allowed_verdict();
            if (t.p == 3 && t.r == 19 && t.s1 == 2 && t.s2 == 0 && t.s3 == 2 &&
                t.f == 0)
                return excluded(
                    "every sum of lifted candidate fixed codes of the order 3 "
                    "and order 19 powers has minimum distance below 24");
            return excluded("no admissible mixed cycle shape of order " +
                            std::to_string(t.order));
        }
        case AutType::Kind::generic:
            return excluded("cycle shape outside the classified forms");
    }
    return excluded("cycle shape outside the classified forms");
}

}  // namespace sdc
