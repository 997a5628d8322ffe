#include "semicode/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace semicode {

GeneratorSet::GeneratorSet(std::vector<long long> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw EmptyGenerators();
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (gens_[k] < 1) throw std::invalid_argument("generators must be >= 1");
        if (k > 0 && gens_[k] <= gens_[k - 1])
            throw std::invalid_argument("generators must be strictly ascending");
    }
    long long g = 0;
    for (long long v : gens_) g = std::gcd(g, v);
    if (g != 1) throw NonCoprimeGenerators(g);
}

NumericalSemigroup::NumericalSemigroup(GeneratorSet generators) : gens_(std::move(generators)) {
    // Membership sieve. Members are closed under adding any generator, so as
    // soon as smallest() consecutive members appear every larger integer is a
    // member and the sieve can stop.
    const auto& gens = gens_.values();
    const long long run_needed = gens_.smallest();

    std::vector<bool> member;
    member.push_back(true);  // 0
    long long run = (run_needed == 1) ? 1 : 0;
    long long next = 1;
    while (run < run_needed) {
        bool m = false;
        for (long long g : gens) {
            if (g <= next && member[static_cast<std::size_t>(next - g)]) {
                m = true;
                break;
            }
        }
        member.push_back(m);
        run = m ? run + 1 : 0;
        ++next;
    }

    // The sieve ends right after the first full run; the largest gap (if any)
    // sits just before that run.
    long long last_gap = -1;
    for (long long l = static_cast<long long>(member.size()) - 1; l >= 0; --l) {
        if (!member[static_cast<std::size_t>(l)]) {
            last_gap = l;
            break;
        }
    }
    conductor_ = last_gap + 1;

    member_below_conductor_.assign(static_cast<std::size_t>(conductor_), false);
    for (long long l = 0; l < conductor_; ++l) {
        if (member[static_cast<std::size_t>(l)]) {
            member_below_conductor_[static_cast<std::size_t>(l)] = true;
            elements_below_conductor_.push_back(l);
        } else {
            gaps_.push_back(l);
        }
    }
}

bool NumericalSemigroup::contains(long long l) const {
    if (l < 0) return false;
    if (l >= conductor_) return true;
    return member_below_conductor_[static_cast<std::size_t>(l)];
}

long long NumericalSemigroup::element(long long i) const {
    if (i < 0) throw std::invalid_argument("element index must be >= 0");
    const long long below = static_cast<long long>(elements_below_conductor_.size());
    if (i < below) return elements_below_conductor_[static_cast<std::size_t>(i)];
    return i + genus();  // element >= conductor
}

long long NumericalSemigroup::index_of(long long l) const {
    if (!contains(l)) throw NotAMember(l);
    if (l >= conductor_) return l - genus();
    const auto it =
        std::lower_bound(elements_below_conductor_.begin(), elements_below_conductor_.end(), l);
    return static_cast<long long>(it - elements_below_conductor_.begin());
}

long long NumericalSemigroup::divisor_count(long long i) const {
    const long long li = element(i);
    long long count = 0;
    for (long long j = 0; j <= i; ++j) {
        if (contains(li - element(j))) ++count;
    }
    return count;
}

long long NumericalSemigroup::order_bound(long long i) const {
    const long long two_g = 2 * genus();
    long long best = std::numeric_limits<long long>::max();
    for (long long j = i + 1;; ++j) {
        if (best != std::numeric_limits<long long>::max() && element(j) + 1 - two_g > best) break;
        best = std::min(best, divisor_count(j));
    }
    return best;
}

long long NumericalSemigroup::redundancy_standard(long long t) const {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    const long long two_g = 2 * genus();
    long long last = -1;
    // divisor_count(i) >= element(i) + 1 - 2g, so indices beyond this scan
    // cannot qualify.
    for (long long i = 0; element(i) + 1 - two_g <= 2 * t; ++i) {
        if (divisor_count(i) <= 2 * t) last = i;
    }
    return last + 1;
}

long long NumericalSemigroup::redundancy_improved(long long t) const {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    const long long two_g = 2 * genus();
    long long count = 0;
    for (long long i = 0; element(i) + 1 - two_g <= 2 * t; ++i) {
        if (divisor_count(i) <= 2 * t) ++count;
    }
    return count;
}

std::vector<long long> NumericalSemigroup::generic_check_values(long long t) const {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    // Every element l with l - element(t) >= max(element(t), conductor) is a
    // sum of two elements with indices >= t, so the complement lives in
    // [0, window].
    const long long lt = element(t);
    const long long window = lt + std::max(lt, conductor_);

    std::vector<bool> is_sum(static_cast<std::size_t>(window) + 1, false);
    for (long long i = t; element(i) * 2 <= window; ++i) {
        const long long u = element(i);
        for (long long j = i; u + element(j) <= window; ++j) {
            is_sum[static_cast<std::size_t>(u + element(j))] = true;
        }
    }

    std::vector<long long> complement;
    for (long long l = 0; l <= window; ++l) {
        if (contains(l) && !is_sum[static_cast<std::size_t>(l)]) complement.push_back(l);
    }
    return complement;
}

long long NumericalSemigroup::redundancy_generic(long long t) const {
    const auto complement = generic_check_values(t);
    if (complement.empty()) return 0;
    return index_of(complement.back()) + 1;
}

long long NumericalSemigroup::redundancy_generic_improved(long long t) const {
    return static_cast<long long>(generic_check_values(t).size());
}

}  // namespace semicode
