#include "ppm/evenodd.hpp"

#include <algorithm>

namespace ppm {

namespace {

// Index-based view shared by enumeration, extension and counting.
// img[i] is the text index of pattern index i (0 = unassigned).
class EvenOdd {
  public:
    EvenOdd(const Permutation &text, const Permutation &pattern)
        : text_(text), pattern_(pattern), n_(text.size()), k_(pattern.size()), img_(static_cast<std::size_t>(k_ + 2)) {
        for (int v = 1; v <= k_; ++v)
            if (pattern_.index_of(v) % 2 == 0)
                evens_by_value_.push_back(pattern_.index_of(v));
            else
                odds_by_value_.push_back(pattern_.index_of(v));
    }

    int evens() const { return k_ / 2; }
    std::vector<int> &img() { return img_; }

    template <typename Visit>
    void enumerate(bool pruning, EvenOddStats *stats, Visit &&visit) {
        if (k_ > n_)
            return;
        std::fill(img_.begin(), img_.end(), 0);
        stop_ = false;
        place(1, pruning, stats, visit);
    }

    bool values_ordered(bool pruning) const {
        int prev_value = 0, prev_image = 0;
        for (int i : evens_by_value_) {
            const int v = pattern_.at(i);
            const int y = text_.at(img_[static_cast<std::size_t>(i)]);
            if (y <= prev_image)
                return false;
            // Every pattern value strictly between needs its own text value.
            if (pruning && y - prev_image < v - prev_value)
                return false;
            prev_value = v;
            prev_image = y;
        }
        return !pruning || n_ - prev_image >= k_ - prev_value;
    }

    struct Box {
        int lo_x, hi_x, lo_y, hi_y;
    };

    // Box in text coordinates; n+1 stands for the point at infinity.
    Box box(int i) const {
        const int v = pattern_.at(i);
        Box b{};
        b.lo_x = i > 1 ? img_[static_cast<std::size_t>(i - 1)] : 0;
        b.hi_x = i < k_ ? img_[static_cast<std::size_t>(i + 1)] : n_ + 1;
        b.lo_y = v > 1 ? text_.at(img_[static_cast<std::size_t>(pattern_.index_of(v - 1))]) : 0;
        b.hi_y = n_ + 1;
        if (v < k_) {
            const int up = pattern_.index_of(v + 1);
            if (up % 2 == 0)
                b.hi_y = text_.at(img_[static_cast<std::size_t>(up)]);
        }
        return b;
    }

    bool extend() {
        for (int i : odds_by_value_) {
            const Box b = box(i);
            int found = 0;
            for (int y = b.lo_y + 1; y < b.hi_y && !found; ++y) {
                const int x = text_.index_of(y);
                if (b.lo_x < x && x < b.hi_x)
                    found = x;
            }
            if (!found)
                return false;
            img_[static_cast<std::size_t>(i)] = found;
        }
        return true;
    }

    void clear_odds() {
        for (int i : odds_by_value_)
            img_[static_cast<std::size_t>(i)] = 0;
    }

    // Odd points only interact through runs of consecutive values; each run is an
    // increasing chain inside its own x-range and the runs are independent.
    MatchCount count_extensions() const {
        MatchCount total = 1;
        std::vector<MatchCount> ways(static_cast<std::size_t>(n_ + 2));
        std::size_t a = 0;
        while (a < odds_by_value_.size()) {
            std::size_t b = a + 1;
            while (b < odds_by_value_.size() &&
                   pattern_.at(odds_by_value_[b]) == pattern_.at(odds_by_value_[b - 1]) + 1)
                ++b;
            const Box first = box(odds_by_value_[a]);
            const int lo_y = first.lo_y;
            // The chain's upper bound comes from its last member.
            const int last = odds_by_value_[b - 1];
            int hi_y = n_ + 1;
            if (pattern_.at(last) < k_) {
                const int up = pattern_.index_of(pattern_.at(last) + 1);
                hi_y = text_.at(img_[static_cast<std::size_t>(up)]);
            }
            std::fill(ways.begin(), ways.end(), MatchCount(0));
            for (std::size_t j = a; j < b; ++j) {
                const int i = odds_by_value_[j];
                const int lo_x = i > 1 ? img_[static_cast<std::size_t>(i - 1)] : 0;
                const int hi_x = i < k_ ? img_[static_cast<std::size_t>(i + 1)] : n_ + 1;
                MatchCount below = j == a ? MatchCount(1) : MatchCount(0);
                for (int y = lo_y + 1; y < hi_y; ++y) {
                    MatchCount prev = ways[static_cast<std::size_t>(y)];
                    const int x = text_.index_of(y);
                    ways[static_cast<std::size_t>(y)] = (lo_x < x && x < hi_x) ? below : MatchCount(0);
                    if (j != a)
                        below += prev;
                }
            }
            MatchCount chain = 0;
            for (int y = lo_y + 1; y < hi_y; ++y)
                chain += ways[static_cast<std::size_t>(y)];
            if (chain == 0)
                return 0;
            total *= chain;
            a = b;
        }
        return total;
    }

    Embedding to_embedding(bool with_odds) const {
        std::vector<int> images(static_cast<std::size_t>(k_), 0);
        for (int i = 1; i <= k_; ++i)
            if (with_odds || i % 2 == 0)
                images[static_cast<std::size_t>(i - 1)] = img_[static_cast<std::size_t>(i)];
        return Embedding::from_indices(pattern_, text_, images);
    }

  private:
    template <typename Visit>
    void place(int slot, bool pruning, EvenOddStats *stats, Visit &visit) {
        const int m = evens();
        if (slot > m) {
            if (stats)
                ++stats->subsequences;
            if (!values_ordered(pruning))
                return;
            if (stats)
                ++stats->yielded;
            if (!visit())
                stop_ = true;
            return;
        }
        const int prev = slot > 1 ? img_[static_cast<std::size_t>(2 * slot - 2)] : 0;
        int lo = prev + 1, hi = n_ - (m - slot);
        if (pruning) {
            // Odd index 2*slot-1 sits before this even; the later odds need room after it.
            lo = prev + 2;
            hi = n_ - 2 * (m - slot) - (k_ % 2);
        }
        for (int x = lo; x <= hi && !stop_; ++x) {
            img_[static_cast<std::size_t>(2 * slot)] = x;
            place(slot + 1, pruning, stats, visit);
        }
        img_[static_cast<std::size_t>(2 * slot)] = 0;
    }

    const Permutation &text_;
    const Permutation &pattern_;
    int n_, k_;
    std::vector<int> img_;
    std::vector<int> evens_by_value_;
    std::vector<int> odds_by_value_;
    bool stop_ = false;
};

// Loads g0 into img; false unless it maps exactly the even points, in order, into S_tau.
bool load_g0(const Permutation &text, const Permutation &pattern, const Embedding &g0, std::vector<int> &img) {
    const int k = pattern.size();
    if (g0.size() != static_cast<std::size_t>(k / 2))
        return false;
    std::fill(img.begin(), img.end(), 0);
    for (const auto &[src, dst] : g0.assignments()) {
        if (!contains_point(pattern, src) || src.x % 2 != 0 || !contains_point(text, dst))
            return false;
        img[static_cast<std::size_t>(src.x)] = dst.x;
    }
    for (int i = 4; i <= k; i += 2)
        if (img[static_cast<std::size_t>(i)] <= img[static_cast<std::size_t>(i - 2)])
            return false;
    for (int i = 2; i <= k; i += 2)
        for (int j = i + 2; j <= k; j += 2)
            if ((pattern.at(i) < pattern.at(j)) !=
                (text.at(img[static_cast<std::size_t>(i)]) < text.at(img[static_cast<std::size_t>(j)])))
                return false;
    return true;
}

} // namespace

EvenOddPartition even_odd_partition(const Permutation &pattern) {
    EvenOddPartition out;
    for (int i = 2; i <= pattern.size(); i += 2)
        out.evens.push_back(point_at(pattern, i));
    for (int v = 1; v <= pattern.size(); ++v)
        if (pattern.index_of(v) % 2 == 1)
            out.odds.push_back(point_at(pattern, pattern.index_of(v)));
    return out;
}

void enumerate_g0(const Permutation &text, const Permutation &pattern,
                  const std::function<bool(const Embedding &)> &visit, EnumerationOptions options,
                  EvenOddStats *stats) {
    EvenOdd eo(text, pattern);
    eo.enumerate(options.gap_pruning, stats, [&] { return visit(eo.to_embedding(false)); });
}

ConstraintBox constraint_box(const Permutation &text, const Permutation &pattern, const Embedding &partial, Point p) {
    auto image = [&](Point q) -> Point {
        if (q.is_virtual())
            return q;
        return partial.image(q).value_or(Point::at_infinity());
    };
    ConstraintBox box;
    box.lo_x = image(neighbor(pattern, p, Direction::left)).x;
    box.hi_x = image(neighbor(pattern, p, Direction::right)).x;
    box.lo_y = image(neighbor(pattern, p, Direction::down)).y;
    const Point up = neighbor(pattern, p, Direction::up);
    box.hi_y = up.is_virtual() || up.x % 2 == 1 ? Point::infinity : image(up).y;
    (void)text;
    return box;
}

std::optional<Embedding> extend_greedy(const Permutation &text, const Permutation &pattern, const Embedding &g0) {
    EvenOdd eo(text, pattern);
    if (pattern.size() > text.size() || !load_g0(text, pattern, g0, eo.img()) || !eo.extend())
        return std::nullopt;
    return eo.to_embedding(true);
}

bool evenodd_contains(const Permutation &text, const Permutation &pattern, EnumerationOptions options,
                      EvenOddStats *stats) {
    EvenOdd eo(text, pattern);
    bool found = false;
    eo.enumerate(options.gap_pruning, stats, [&] {
        found = eo.extend();
        eo.clear_odds();
        if (found && stats)
            ++stats->extended;
        return !found;
    });
    return found;
}

MatchCount evenodd_count(const Permutation &text, const Permutation &pattern, EnumerationOptions options,
                         EvenOddStats *stats) {
    EvenOdd eo(text, pattern);
    MatchCount total = 0;
    eo.enumerate(options.gap_pruning, stats, [&] {
        MatchCount c = eo.count_extensions();
        if (c != 0 && stats)
            ++stats->extended;
        total += c;
        return true;
    });
    return total;
}

} // namespace ppm
