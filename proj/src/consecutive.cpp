#include "semicode/consecutive.hpp"

#include <algorithm>

namespace semicode::consec {

long long isqrt(long long n) {
    if (n < 0) throw std::invalid_argument("isqrt of a negative number");
    unsigned long long x = static_cast<unsigned long long>(n);
    unsigned long long res = 0;
    unsigned long long bit = 1ull << 62;
    while (bit > x) bit >>= 2;
    while (bit != 0) {
        if (x >= res + bit) {
            x -= res + bit;
            res = (res >> 1) + bit;
        } else {
            res >>= 1;
        }
        bit >>= 2;
    }
    return static_cast<long long>(res);
}

namespace {

void require_lattice(const LatticePoint& p) {
    if (p.x < 0 || p.y < 0 || p.y > p.x)
        throw std::invalid_argument("lattice point requires 0 <= y <= x");
}

// Smallest x with (x+2)^2 >= 8t+4, i.e. the exact value of ceil(2*sqrt(2t+1)-2).
long long parabola_sum_lower_limit(long long t) { return isqrt(8 * t + 3) - 1; }

}  // namespace

long long point_to_value(const ConsecutivePair& P, const LatticePoint& p) {
    require_lattice(p);
    return P.a * p.x + p.y;
}

long long point_to_index(const LatticePoint& p) {
    require_lattice(p);
    return p.x * (p.x + 1) / 2 + p.y;
}

LatticePoint index_to_point(long long i) {
    if (i < 0) throw std::invalid_argument("index must be >= 0");
    const long long x = (isqrt(8 * i + 1) - 1) / 2;
    return {x, i - x * (x + 1) / 2};
}

bool member(const ConsecutivePair& P, long long l) {
    if (l < 0) return false;
    return l % P.a <= l / P.a;
}

long long element(const ConsecutivePair& P, long long i) {
    if (i < 0) throw std::invalid_argument("index must be >= 0");
    if (i <= P.genus()) return point_to_value(P, index_to_point(i));
    return i + P.genus();
}

long long index_of(const ConsecutivePair& P, long long l) {
    if (!member(P, l)) throw NotAMember(l);
    if (l >= P.conductor()) return l - P.genus();
    // Below the conductor the Euclidean division is the unique lattice point.
    const QuotRem d = euclid_div(l, P.a);
    return point_to_index({d.quot, d.rem});
}

long long divisor_count(const ConsecutivePair& P, long long i) {
    const long long l = element(P, i);
    const QuotRem d = euclid_div(l, P.a);
    if (d.quot - P.a <= d.rem) return (d.quot - d.rem + 1) * (d.rem + 1);
    return l - P.conductor() + 1;
}

long long order_bound(const ConsecutivePair& P, long long i) {
    const long long l = element(P, i);
    const QuotRem d = euclid_div(l, P.a);
    const long long x = d.quot;
    const long long y = d.rem;
    if (x < P.a) return (y != x) ? x + 1 : x + 2;
    if (x - P.a <= y && y < P.a - 1) return P.a * (x - P.a + 2);
    return l - P.conductor() + 2;
}

long long redundancy_standard(const ConsecutivePair& P, long long t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    const long long a = P.a;
    if (2 * t <= a) return t * (2 * t + 1);
    const long long m = 2 * t / (a + 1);
    if (2 * t < a * (m + 1)) return P.genus() + (a + 1) * m;
    return P.genus() + 2 * t;
}

long long redundancy_improved(const ConsecutivePair& P, long long t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    const long long a = P.a;
    if (2 * t > a * (a + 1)) return P.genus() + 2 * t;

    long long base;
    long long upper;
    if (2 * t <= a) {
        base = t * (2 * t + 1);
        upper = 2 * t - 1;
    } else {
        const long long m = 2 * t / (a + 1);
        if (2 * t < a * (m + 1)) {
            base = P.genus() + (a + 1) * m;
            upper = a - 2 + m;
        } else {
            base = P.genus() + 2 * t;
            upper = a - 1 + m;
        }
    }

    // Each summand counts the lattice heights a parabola spends above 2t;
    // the parity term keeps the count exact for symmetric parabolas.
    long long removed = 0;
    for (long long x = parabola_sum_lower_limit(t); x <= upper; ++x) {
        const long long s = isqrt(x * x + 4 * x - 8 * t);
        removed += s + ((x + s) % 2 == 0 ? 1 : 0);
    }
    return base - removed;
}

long long redundancy_generic(const ConsecutivePair& P, long long t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    if (t >= P.genus()) return 2 * t + P.genus();  // element(t) + t
    const LatticePoint p = index_to_point(t);      // here x < a-1
    const long long a = P.a;
    const long long x = p.x;
    const long long y = p.y;
    if (2 * x < a) {
        if (y == 0) return 2 * x * x + x;
        return 2 * x * x + 3 * x + y + 1;
    }
    if (y > 2 * x - a + 1) return 2 * x * a + y - (a * a - 3 * a) / 2;
    return 2 * x * a + 2 * y - (a * a - a) / 2;
}

long long redundancy_generic_improved(const ConsecutivePair& P, long long t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    if (t >= P.genus()) return 2 * t + P.genus();
    const LatticePoint p = index_to_point(t);
    const long long a = P.a;
    const long long x = p.x;
    const long long y = p.y;
    if (2 * x < a) return 2 * x * x + x + 3 * y;
    if (y > 2 * x - a + 1) return 2 * x * a + 3 * y - 2 * x - (a * a - 3 * a) / 2 - 1;
    return 2 * x * a + 2 * y - (a * a - a) / 2;
}

std::vector<long long> generic_check_values(const ConsecutivePair& P, long long t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    const long long lt = element(P, t);
    const long long window = lt + std::max(lt, P.conductor());

    std::vector<bool> is_sum(static_cast<std::size_t>(window) + 1, false);
    for (long long i = t; 2 * element(P, i) <= window; ++i) {
        const long long u = element(P, i);
        for (long long j = i; u + element(P, j) <= window; ++j) {
            is_sum[static_cast<std::size_t>(u + element(P, j))] = true;
        }
    }

    std::vector<long long> complement;
    for (long long l = 0; l <= window; ++l) {
        if (member(P, l) && !is_sum[static_cast<std::size_t>(l)]) complement.push_back(l);
    }
    return complement;
}

}  // namespace semicode::consec
