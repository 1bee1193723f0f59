#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ppm {

/// A permutation of {1..n}, stored in one-line notation and 1-based.
///
/// `at(i)` is sigma(i) for 1 <= i <= n. The inverse is precomputed so that
/// lookups by value (needed for the U/D neighbours) are constant time.
/// Instances are immutable after construction.
class Permutation {
  public:
    Permutation() = default;

    /// Throws InvalidArgument unless `values` is a bijection on {1..n}, n >= 1.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(values_.size()); }
    bool empty() const noexcept { return values_.empty(); }

    /// sigma(i), 1-based.
    int at(int index) const { return values_[static_cast<std::size_t>(index - 1)]; }
    /// sigma^{-1}(v), 1-based.
    int index_of(int value) const { return inverse_[static_cast<std::size_t>(value - 1)]; }

    std::span<const int> values() const noexcept { return values_; }

    bool is_identity() const noexcept;

    Permutation inverse() const;
    Permutation reverse() const;
    Permutation complement() const;

    /// (*this o other)(i) = this(other(i)).
    Permutation compose(const Permutation &other) const;

    std::string to_string() const;

    friend bool operator==(const Permutation &a, const Permutation &b) { return a.values_ == b.values_; }
    friend auto operator<=>(const Permutation &a, const Permutation &b) { return a.values_ <=> b.values_; }

  private:
    std::vector<int> values_;
    std::vector<int> inverse_;
};

std::ostream &operator<<(std::ostream &os, const Permutation &p);

/// Relabels an arbitrary sequence of distinct integers by rank (1 = smallest).
Permutation from_ranks(std::span<const int> distinct_values);

/// Parses whitespace- or comma-separated integers. Errors name the 1-based token.
Permutation parse_permutation(std::string_view text);

/// The point (x, sigma(x)) of S_sigma. Virtual points are (0,0) and (inf,inf).
struct Point {
    int x = 0;
    int y = 0;

    static constexpr int infinity = std::numeric_limits<int>::max();

    static constexpr Point origin() { return {0, 0}; }
    static constexpr Point at_infinity() { return {infinity, infinity}; }

    constexpr bool is_virtual() const { return (x == 0 && y == 0) || (x == infinity && y == infinity); }

    friend constexpr auto operator<=>(const Point &, const Point &) = default;
};

std::ostream &operator<<(std::ostream &os, const Point &p);

enum class Direction { right, left, up, down };

inline constexpr Direction all_directions[] = {Direction::right, Direction::left, Direction::up, Direction::down};

char direction_name(Direction dir);

Point point_at(const Permutation &sigma, int index);
bool contains_point(const Permutation &sigma, Point p);

/// N^dir(p). Throws InvalidArgument if p is not in S_sigma.
Point neighbor(const Permutation &sigma, Point p, Direction dir);

enum class Symmetry { reverse, complement, inverse };

Permutation symmetry(const Permutation &sigma, Symmetry op);

/// Longest increasing and longest decreasing subsequence lengths, O(n log n).
std::pair<int, int> lis_lds(const Permutation &sigma);

} // namespace ppm
