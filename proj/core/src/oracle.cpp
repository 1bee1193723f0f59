#include "ppm/oracle.hpp"

#include <vector>

namespace ppm {

MatchCount binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    MatchCount r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

// Backtracking over increasing index tuples. For pattern position j the value
// of the next text entry must fall strictly between the images of the closest
// earlier pattern entries below and above pi(j); by induction this keeps the
// chosen prefix order-isomorphic to the pattern prefix.
class Backtracker {
  public:
    Backtracker(const Permutation &text, const Permutation &pattern, std::span<const int> colors)
        : text_(text), pattern_(pattern), colors_(colors), k_(pattern.size()), n_(text.size()),
          lower_(static_cast<std::size_t>(k_) + 1, 0), upper_(static_cast<std::size_t>(k_) + 1, 0),
          chosen_(static_cast<std::size_t>(k_) + 1, 0) {
        for (int j = 1; j <= k_; ++j) {
            int lo = 0, hi = 0;
            for (int l = 1; l < j; ++l) {
                const int v = pattern.at(l);
                if (v < pattern.at(j) && (lo == 0 || v > pattern.at(lo)))
                    lo = l;
                if (v > pattern.at(j) && (hi == 0 || v < pattern.at(hi)))
                    hi = l;
            }
            lower_[static_cast<std::size_t>(j)] = lo;
            upper_[static_cast<std::size_t>(j)] = hi;
        }
    }

    template <typename Visit>
    bool run(Visit &&visit) {
        if (k_ > n_)
            return true;
        return extend(1, visit);
    }

  private:
    bool admissible(int j, int a) const {
        if (!colors_.empty() && colors_[static_cast<std::size_t>(a - 1)] != j)
            return false;
        const int lo = lower_[static_cast<std::size_t>(j)];
        const int hi = upper_[static_cast<std::size_t>(j)];
        const int v = text_.at(a);
        if (lo && !(text_.at(chosen_[static_cast<std::size_t>(lo)]) < v))
            return false;
        if (hi && !(v < text_.at(chosen_[static_cast<std::size_t>(hi)])))
            return false;
        return true;
    }

    template <typename Visit>
    bool extend(int j, Visit &visit) {
        const int first = j == 1 ? 1 : chosen_[static_cast<std::size_t>(j - 1)] + 1;
        const int last = n_ - (k_ - j);
        for (int a = first; a <= last; ++a) {
            if (!admissible(j, a))
                continue;
            chosen_[static_cast<std::size_t>(j)] = a;
            if (j == k_) {
                if (!visit(std::span<const int>(chosen_).subspan(1)))
                    return false;
            } else if (!extend(j + 1, visit))
                return false;
        }
        return true;
    }

    const Permutation &text_;
    const Permutation &pattern_;
    std::span<const int> colors_;
    int k_, n_;
    std::vector<int> lower_, upper_, chosen_;
};

} // namespace

void for_each_occurrence(const Permutation &text, const Permutation &pattern,
                         const std::function<bool(std::span<const int>)> &visit) {
    Backtracker(text, pattern, {}).run([&](std::span<const int> idx) { return visit(idx); });
}

bool brute_contains(const Permutation &text, const Permutation &pattern) {
    bool found = false;
    Backtracker(text, pattern, {}).run([&](std::span<const int>) {
        found = true;
        return false;
    });
    return found;
}

MatchCount brute_count(const Permutation &text, const Permutation &pattern) {
    unsigned long long count = 0;
    Backtracker(text, pattern, {}).run([&](std::span<const int>) {
        ++count;
        return true;
    });
    return MatchCount(count);
}

bool brute_pppm_contains(const PppmInstance &inst) {
    inst.check();
    bool found = false;
    Backtracker(inst.text, inst.pattern, inst.colors).run([&](std::span<const int>) {
        found = true;
        return false;
    });
    return found;
}

MatchCount brute_pppm_count(const PppmInstance &inst) {
    inst.check();
    unsigned long long count = 0;
    Backtracker(inst.text, inst.pattern, inst.colors).run([&](std::span<const int>) {
        ++count;
        return true;
    });
    return MatchCount(count);
}

MatchCount brute_count_all_colors(const PppmInstance &inst) {
    inst.check();
    const int k = inst.pattern.size();
    unsigned long long count = 0;
    std::vector<char> used(static_cast<std::size_t>(k) + 1);
    Backtracker(inst.text, inst.pattern, {}).run([&](std::span<const int> idx) {
        std::fill(used.begin(), used.end(), 0);
        for (int a : idx) {
            auto &u = used[static_cast<std::size_t>(inst.color_of(a))];
            if (u)
                return true;
            u = 1;
        }
        ++count;
        return true;
    });
    return MatchCount(count);
}

} // namespace ppm
