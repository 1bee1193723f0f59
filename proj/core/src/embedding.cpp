#include "ppm/embedding.hpp"

#include "ppm/error.hpp"

#include <set>
#include <sstream>

namespace ppm {

Embedding Embedding::from_indices(const Permutation &pattern, const Permutation &text, std::span<const int> images) {
    if (static_cast<int>(images.size()) != pattern.size())
        throw InvalidArgument("image list length differs from pattern length");
    Embedding f;
    for (int j = 1; j <= pattern.size(); ++j) {
        const int a = images[static_cast<std::size_t>(j - 1)];
        if (a == 0)
            continue;
        if (a < 1 || a > text.size())
            throw InvalidArgument("text index " + std::to_string(a) + " out of range");
        f.assign(point_at(pattern, j), point_at(text, a));
    }
    return f;
}

std::optional<Point> Embedding::image(Point pattern_point) const {
    auto it = map_.find(pattern_point);
    if (it == map_.end())
        return std::nullopt;
    return it->second;
}

std::vector<int> Embedding::text_indices() const {
    std::vector<int> out;
    out.reserve(map_.size());
    for (const auto &[from, to] : map_)
        out.push_back(to.x);
    return out;
}

bool validate_embedding(const Permutation &pattern, const Permutation &text, const Embedding &f) {
    std::set<Point> used;
    for (const auto &[from, to] : f.assignments()) {
        if (!contains_point(pattern, from)) {
            std::ostringstream os;
            os << "embedding maps " << from << ", which is not a pattern point";
            throw InvalidArgument(os.str());
        }
        if (!contains_point(text, to)) {
            std::ostringstream os;
            os << "embedding maps onto " << to << ", which is not a text point";
            throw InvalidArgument(os.str());
        }
        if (!used.insert(to).second)
            return false;
    }
    // Checking the R and U neighbour of every assigned point covers each edge of
    // G_pi[domain] in both orientations needed by the two conditions.
    for (const auto &[p, image] : f.assignments()) {
        const Point r = neighbor(pattern, p, Direction::right);
        if (!r.is_virtual())
            if (auto ir = f.image(r); ir && !(image.x < ir->x))
                return false;
        const Point u = neighbor(pattern, p, Direction::up);
        if (!u.is_virtual())
            if (auto iu = f.image(u); iu && !(image.y < iu->y))
                return false;
    }
    return true;
}

bool is_occurrence(const Permutation &pattern, const Permutation &text, std::span<const int> text_indices) {
    const int k = pattern.size();
    if (static_cast<int>(text_indices.size()) != k)
        return false;
    for (int a = 0; a < k; ++a) {
        if (text_indices[static_cast<std::size_t>(a)] < 1 || text_indices[static_cast<std::size_t>(a)] > text.size())
            return false;
        if (a > 0 && text_indices[static_cast<std::size_t>(a - 1)] >= text_indices[static_cast<std::size_t>(a)])
            return false;
    }
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            const bool pattern_less = pattern.at(a + 1) < pattern.at(b + 1);
            const bool text_less = text.at(text_indices[static_cast<std::size_t>(a)]) < text.at(text_indices[static_cast<std::size_t>(b)]);
            if (pattern_less != text_less)
                return false;
        }
    return true;
}

} // namespace ppm
