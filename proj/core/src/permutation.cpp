#include "ppm/permutation.hpp"

#include "ppm/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ppm {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const auto n = values_.size();
    if (n == 0)
        throw InvalidArgument("permutation must have at least one entry");
    inverse_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const int v = values_[i];
        if (v < 1 || static_cast<std::size_t>(v) > n)
            throw InvalidArgument("value " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
        if (inverse_[static_cast<std::size_t>(v - 1)] != 0)
            throw InvalidArgument("duplicate value " + std::to_string(v));
        inverse_[static_cast<std::size_t>(v - 1)] = static_cast<int>(i + 1);
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] != static_cast<int>(i + 1))
            return false;
    return true;
}

Permutation Permutation::inverse() const { return Permutation(inverse_); }

Permutation Permutation::reverse() const { return Permutation(std::vector<int>(values_.rbegin(), values_.rend())); }

Permutation Permutation::complement() const {
    std::vector<int> v(values_);
    const int n = size();
    for (auto &x : v)
        x = n + 1 - x;
    return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation &other) const {
    if (other.size() != size())
        throw InvalidArgument("cannot compose permutations of different lengths");
    std::vector<int> v(values_.size());
    for (int i = 1; i <= size(); ++i)
        v[static_cast<std::size_t>(i - 1)] = at(other.at(i));
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) {
    bool first = true;
    for (int v : p.values()) {
        if (!first)
            os << ' ';
        os << v;
        first = false;
    }
    return os;
}

Permutation from_ranks(std::span<const int> distinct_values) {
    std::vector<int> order(distinct_values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return distinct_values[static_cast<std::size_t>(a)] < distinct_values[static_cast<std::size_t>(b)]; });
    std::vector<int> ranks(distinct_values.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        ranks[static_cast<std::size_t>(order[r])] = static_cast<int>(r + 1);
    return Permutation(std::move(ranks));
}

Permutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    std::size_t pos = 0;
    std::size_t token_no = 0;
    auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ','; };
    while (pos < text.size()) {
        while (pos < text.size() && is_sep(text[pos]))
            ++pos;
        if (pos >= text.size())
            break;
        std::size_t end = pos;
        while (end < text.size() && !is_sep(text[end]))
            ++end;
        ++token_no;
        const auto token = text.substr(pos, end - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw ParseError("non-integer token '" + std::string(token) + "'", token_no);
        values.push_back(value);
        pos = end;
    }
    if (values.empty())
        throw ParseError("empty permutation", 1);

    const auto n = values.size();
    std::vector<std::size_t> seen_at(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const int v = values[i];
        if (v < 1 || static_cast<std::size_t>(v) > n)
            throw ParseError("value " + std::to_string(v) + " outside [1," + std::to_string(n) + "]", i + 1);
        if (seen_at[static_cast<std::size_t>(v)] != 0)
            throw ParseError("duplicate value " + std::to_string(v), i + 1);
        seen_at[static_cast<std::size_t>(v)] = i + 1;
    }
    return Permutation(std::move(values));
}

std::ostream &operator<<(std::ostream &os, const Point &p) {
    if (p == Point::at_infinity())
        return os << "(inf,inf)";
    return os << '(' << p.x << ',' << p.y << ')';
}

char direction_name(Direction dir) {
    switch (dir) {
    case Direction::right: return 'R';
    case Direction::left: return 'L';
    case Direction::up: return 'U';
    case Direction::down: return 'D';
    }
    return '?';
}

Point point_at(const Permutation &sigma, int index) { return {index, sigma.at(index)}; }

bool contains_point(const Permutation &sigma, Point p) {
    return p.x >= 1 && p.x <= sigma.size() && sigma.at(p.x) == p.y;
}

Point neighbor(const Permutation &sigma, Point p, Direction dir) {
    if (!contains_point(sigma, p)) {
        std::ostringstream os;
        os << "point " << p << " is not in S_sigma";
        throw InvalidArgument(os.str());
    }
    const int n = sigma.size();
    switch (dir) {
    case Direction::right:
        return p.x == n ? Point::at_infinity() : point_at(sigma, p.x + 1);
    case Direction::left:
        return p.x == 1 ? Point::origin() : point_at(sigma, p.x - 1);
    case Direction::up:
        return p.y == n ? Point::at_infinity() : Point{sigma.index_of(p.y + 1), p.y + 1};
    case Direction::down:
        return p.y == 1 ? Point::origin() : Point{sigma.index_of(p.y - 1), p.y - 1};
    }
    return Point::origin();
}

Permutation symmetry(const Permutation &sigma, Symmetry op) {
    switch (op) {
    case Symmetry::reverse: return sigma.reverse();
    case Symmetry::complement: return sigma.complement();
    case Symmetry::inverse: return sigma.inverse();
    }
    return sigma;
}

namespace {

// Patience sorting: length of the longest strictly increasing subsequence.
int longest_increasing(std::span<const int> seq) {
    std::vector<int> tails;
    for (int v : seq) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

} // namespace

std::pair<int, int> lis_lds(const Permutation &sigma) {
    const auto values = sigma.values();
    std::vector<int> negated(values.begin(), values.end());
    for (auto &v : negated)
        v = -v;
    return {longest_increasing(values), longest_increasing(negated)};
}

} // namespace ppm
