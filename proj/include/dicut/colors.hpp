#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dicut {

/// One of the ten 2-subsets of {1..5}, indexed 1..10:
/// {1,2},{1,3},{1,4},{1,5},{2,3},{2,4},{2,5},{3,4},{3,5},{4,5}.
class Color {
public:
    static constexpr int kCount = 10;

    static Color from_index(int index);
    static const std::vector<Color>& all();

    int index() const { return index_; }
    std::pair<int, int> elems() const;
    /// Bit e-1 set iff element e of {1..5} belongs to this color.
    std::uint8_t elem_mask() const;

    friend bool operator==(const Color& a, const Color& b) = default;
    friend auto operator<=>(const Color& a, const Color& b) = default;

private:
    explicit Color(int index) : index_(static_cast<std::uint8_t>(index)) {}

    std::uint8_t index_;
};

/// Two colors neighbor each other iff their subsets intersect; in
/// particular every color neighbors itself.
bool adjacent(Color a, Color b);

/// Colors adjacent to every color in the list. Guarantees: one color has 7
/// neighbors, two have at least 4 in common, three at least 2. Longer lists
/// are accepted but carry no floor.
std::vector<Color> common_neighbors(const std::vector<Color>& colors);

/// First cross pair (scan order p1q1, p1q2, p2q1, p2q2) whose members are
/// adjacent. Always exists for pairs of distinct colors.
std::pair<Color, Color> cross_neighbor_pair(std::pair<Color, Color> p, std::pair<Color, Color> q);

/// Least k >= 0 with binom(k, floor(k/2)) >= n; c(0) = 0.
int c_of_n(std::int64_t n);

/// A subset of {1..width}; bit i-1 of bits encodes element i.
struct CodeWord {
    int width = 0;
    std::uint32_t bits = 0;

    std::vector<int> elements() const;

    friend bool operator==(const CodeWord& a, const CodeWord& b) = default;
};

/// m pairwise incomparable floor(k/2)-subsets of {1..k} where k = c_of_n(m),
/// enumerated in colexicographic order.
std::vector<CodeWord> antichain_codes(std::int64_t m);

std::string to_string(Color c);            // "S3"
std::string to_string(const CodeWord& w);  // "{1,3}"

}  // namespace dicut
