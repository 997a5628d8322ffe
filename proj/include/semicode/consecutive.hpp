#ifndef SEMICODE_CONSECUTIVE_HPP
#define SEMICODE_CONSECUTIVE_HPP

#include <vector>

#include "semicode/errors.hpp"

namespace semicode::consec {

/// The semigroup generated by the consecutive pair {a, a+1}, a >= 2.
/// Genus and conductor have closed forms; the conductor is twice the genus.
struct ConsecutivePair {
    long long a;

    explicit ConsecutivePair(long long a_) : a(a_) {
        if (a < 2) throw std::invalid_argument("a must be >= 2");
    }

    long long genus() const { return (a - 1) * a / 2; }
    long long conductor() const { return (a - 1) * a; }
};

/// Pair (x, y) with 0 <= y <= x; the index set behind the two bijections
/// below and the layer decomposition of the semigroup.
struct LatticePoint {
    long long x;
    long long y;
};

/// Quotient/remainder of a Euclidean division; unlike LatticePoint the
/// remainder may exceed the quotient.
struct QuotRem {
    long long quot;
    long long rem;  // in [0, a)
};

inline QuotRem euclid_div(long long l, long long a) { return {l / a, l % a}; }

/// Floor of the square root, exact for all n >= 0 (no floating point).
long long isqrt(long long n);

/// a*x + y; maps lattice points onto semigroup values.
long long point_to_value(const ConsecutivePair& P, const LatticePoint& p);

/// x(x+1)/2 + y; maps lattice points onto indices, bijectively.
long long point_to_index(const LatticePoint& p);

/// Inverse of point_to_index, via the largest triangular number <= i.
LatticePoint index_to_point(long long i);

/// Membership test: l >= 0 and (l mod a) <= (l div a).
bool member(const ConsecutivePair& P, long long l);

/// i-th semigroup element. point_to_value(index_to_point(i)) up to the genus,
/// i + genus beyond.
long long element(const ConsecutivePair& P, long long i);

/// Inverse of element(); throws NotAMember.
long long index_of(const ConsecutivePair& P, long long l);

/// Divisor count of the i-th element: (x-y+1)(y+1) when the Euclidean
/// division of the element by a satisfies x-a <= y, element - conductor + 1
/// otherwise.
long long divisor_count(const ConsecutivePair& P, long long i);

/// Order bound on the minimum distance of the i-th code (four-case form).
long long order_bound(const ConsecutivePair& P, long long i);

/// Redundancy of the standard code correcting t errors.
long long redundancy_standard(const ConsecutivePair& P, long long t);

/// Redundancy of the improved code correcting t errors (checks only where the
/// divisor count stays <= 2t).
long long redundancy_improved(const ConsecutivePair& P, long long t);

/// Redundancies for codes correcting generic errors of weight up to t.
long long redundancy_generic(const ConsecutivePair& P, long long t);
long long redundancy_generic_improved(const ConsecutivePair& P, long long t);

/// Ascending list of the check values for the generic-error code: the
/// complement of { element(i) + element(j) : i, j >= t } inside the
/// semigroup. Size equals redundancy_generic_improved(P, t).
std::vector<long long> generic_check_values(const ConsecutivePair& P, long long t);

}  // namespace semicode::consec

#endif
