#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "agr/errors.hpp"

namespace agr {

// A numerical semigroup S = <g1,...,gk> with gcd 1: the additive monoid of
// exponents appearing in R = k[[t^S]].  Immutable after construction.
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<int> generators) {
        if (generators.empty()) throw EmptyGenerators("semigroup needs at least one generator");
        for (int g : generators)
            if (g <= 0) throw Error("semigroup generators must be positive");
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        int g = 0;
        for (int x : generators) g = std::gcd(g, x);
        if (g != 1) throw GcdNotOne("gcd of semigroup generators is " + std::to_string(g));
        gens_ = std::move(generators);

        // Additive closure on [0, max_g^2 + max_g]; the Frobenius number of a
        // gcd-1 semigroup lies below max_g^2.
        const int maxg = gens_.back();
        const int bound = maxg * maxg + maxg + 1;
        std::vector<bool> member(static_cast<size_t>(bound), false);
        member[0] = true;
        for (int i = 0; i < bound; ++i) {
            if (!member[static_cast<size_t>(i)]) continue;
            for (int gen : gens_) {
                if (i + gen < bound) member[static_cast<size_t>(i + gen)] = true;
            }
        }
        frobenius_ = -1;
        for (int i = bound - 1; i >= 0; --i) {
            if (!member[static_cast<size_t>(i)]) { frobenius_ = i; break; }
        }
        conductor_ = frobenius_ + 1;
        member_.assign(member.begin(), member.begin() + conductor_);
        for (int i = 1; i <= frobenius_; ++i)
            if (!member[static_cast<size_t>(i)]) gaps_.push_back(i);
    }

    bool contains(long e) const {
        if (e < 0) return false;
        if (e >= conductor_) return true;
        return member_[static_cast<size_t>(e)];
    }

    const std::vector<int>& generators() const { return gens_; }
    int min_generator() const { return gens_.front(); }
    int max_generator() const { return gens_.back(); }
    int frobenius() const { return frobenius_; }
    int conductor() const { return conductor_; }
    const std::vector<int>& gaps() const { return gaps_; }

    // Symmetric iff for each z exactly one of z, F-z lies in S; equivalently
    // 2|gaps| = F+1.  Decides Gorensteinness of k[[t^S]].
    bool symmetric() const { return 2 * static_cast<int>(gaps_.size()) == frobenius_ + 1; }

    // Elements of S in [0, hi).
    std::vector<int> elements_below(int hi) const {
        std::vector<int> out;
        for (int e = 0; e < hi; ++e)
            if (contains(e)) out.push_back(e);
        return out;
    }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.gens_ == b.gens_;
    }

private:
    std::vector<int> gens_;
    int frobenius_ = -1;
    int conductor_ = 0;
    std::vector<bool> member_;  // [0, conductor)
    std::vector<int> gaps_;
};

}  // namespace agr
