#include "splitbound/families.hpp"

#include "splitbound/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace splitbound {

namespace {

// Odd-length all-positive continued fraction of p/q, outermost term first:
// p/q = b1 + 1/(b2 + 1/(... + 1/br)).
std::vector<long> odd_expansion(long p, long q) {
    if (p <= 0 || q <= 0 || q >= p || std::gcd(p, q) != 1)
        throw std::invalid_argument("rational link needs coprime 0 < q < p");
    std::vector<long> b;
    long a = p, c = q;
    while (c > 0) {
        b.push_back(a / c);
        long r = a % c;
        a = c;
        c = r;
    }
    if (b.size() % 2 == 0) {
        // [..., x] = [..., x-1, 1]; merge instead when x == 1.
        if (b.back() == 1) {
            b.pop_back();
            b.back() += 1;
        } else {
            b.back() -= 1;
            b.push_back(1);
        }
    }
    return b;
}

}  // namespace

LinkDiagram rational_link(long p, long q) {
    std::vector<long> outer_first = odd_expansion(p, q);
    // Innermost layer twists the middle pair; layers alternate middle/left,
    // with alternating signs so the diagram is alternating.
    MorseTangle t;
    t.width = 0;
    t.events.push_back({MorseTangle::Event::Cup, 1, 0});
    t.events.push_back({MorseTangle::Event::Cup, 3, 0});
    int layer = 0;
    for (auto it = outer_first.rbegin(); it != outer_first.rend(); ++it, ++layer) {
        int pos = (layer % 2 == 0) ? 2 : 1;
        int sign = (layer % 2 == 0) ? +1 : -1;
        for (long i = 0; i < *it; ++i)
            t.events.push_back({MorseTangle::Event::Crossing, pos, sign});
    }
    t.events.push_back({MorseTangle::Event::Cap, 3, 0});
    t.events.push_back({MorseTangle::Event::Cap, 1, 0});
    return tangle_closure(t);
}

LinkDiagram rational_link(const std::vector<int>& twists) {
    // p/q = a_m + 1/(a_{m-1} + ... + 1/a_1), all a_i > 0.
    long p = 0, q = 1;
    for (int a : twists) {
        if (a <= 0) throw std::invalid_argument("rational link twists must be positive");
        long np = a * p + q;
        q = p;
        p = np;
    }
    return rational_link(p, q);
}

long rational_fraction_numerator(const std::vector<int>& twists) {
    long p = 0, q = 1;
    for (int a : twists) {
        long np = a * p + q;
        q = p;
        p = np;
    }
    return std::abs(p);
}

LinkDiagram twist_knot(int half_twists, int clasp_sign) {
    if (half_twists < 1) throw std::invalid_argument("twist knot needs at least one twist");
    // Determinant families 4n+1 (figure-eight, 6_1, ...) and 4n-1
    // (trefoil, 5_2, ...) as two-bridge fractions over 2.
    long p = clasp_sign > 0 ? 4L * half_twists + 1 : 4L * half_twists - 1;
    return rational_link(p, 2);
}

LinkDiagram positive_hopf() { return parse_pd("X[4,2,1,3] X[2,4,3,1]"); }

LinkDiagram trefoil() { return braid_closure({2, {1, 1, 1}}); }

LinkDiagram borromean_rings() { return braid_closure({3, {1, -2, 1, -2, 1, -2}}); }

AxisLink whitehead_axis() { return tangle_closure_with_axis(parse_tangle("MT[2; U1,2,2,A3]")); }

LinkDiagram seven_five() { return rational_link(17, 5); }

}  // namespace splitbound
