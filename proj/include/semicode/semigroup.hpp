#ifndef SEMICODE_SEMIGROUP_HPP
#define SEMICODE_SEMIGROUP_HPP

#include <vector>

#include "semicode/errors.hpp"

namespace semicode {

/// Validated generating set of a numerical semigroup: nonempty, strictly
/// ascending, all entries >= 1, gcd 1.
class GeneratorSet {
  public:
    explicit GeneratorSet(std::vector<long long> generators);

    const std::vector<long long>& values() const { return gens_; }
    long long smallest() const { return gens_.front(); }

  private:
    std::vector<long long> gens_;
};

/// Numerical semigroup computed straight from the definitions by a dynamic
/// membership sieve. Every quantity here (divisor counts, order bound, the
/// four redundancies) is obtained by brute-force scans; this class is the
/// ground truth the closed forms are tested against.
///
/// All state is computed eagerly at construction; instances are immutable and
/// safe to share across threads.
class NumericalSemigroup {
  public:
    explicit NumericalSemigroup(std::vector<long long> generators)
        : NumericalSemigroup(GeneratorSet(std::move(generators))) {}
    explicit NumericalSemigroup(GeneratorSet generators);

    const GeneratorSet& generators() const { return gens_; }
    const std::vector<long long>& gaps() const { return gaps_; }
    long long genus() const { return static_cast<long long>(gaps_.size()); }
    long long conductor() const { return conductor_; }

    /// True iff l is an element. Negative l is allowed and yields false.
    bool contains(long long l) const;

    /// i-th element in increasing order, element(0) == 0.
    long long element(long long i) const;

    /// Inverse of element(); throws NotAMember for gaps and negatives.
    long long index_of(long long l) const;

    /// Number of j with element(i) - element(j) an element ("divisors" of
    /// element(i)).
    long long divisor_count(long long i) const;

    /// min{ divisor_count(j) : j > i }. The scan stops once the proven lower
    /// bound divisor_count(j) >= element(j) + 1 - 2*genus exceeds the running
    /// minimum.
    long long order_bound(long long i) const;

    /// Redundancy of the standard code correcting t errors:
    /// (largest i with divisor_count(i) <= 2t) + 1, zero if none.
    long long redundancy_standard(long long t) const;

    /// Count of i with divisor_count(i) <= 2t.
    long long redundancy_improved(long long t) const;

    /// Redundancies for generic errors, from the complement of
    /// { element(i) + element(j) : i, j >= t }.
    long long redundancy_generic(long long t) const;
    long long redundancy_generic_improved(long long t) const;

    /// Ascending complement of the two-sided sum set above; finite.
    std::vector<long long> generic_check_values(long long t) const;

  private:
    GeneratorSet gens_;
    std::vector<long long> gaps_;
    long long conductor_ = 0;
    std::vector<bool> member_below_conductor_;
    std::vector<long long> elements_below_conductor_;
};

}  // namespace semicode

#endif
