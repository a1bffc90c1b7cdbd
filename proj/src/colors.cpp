#include "dicut/colors.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace dicut {

namespace {

constexpr std::array<std::pair<int, int>, Color::kCount> kColorTable{{
    {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5},
}};

}  // namespace

Color Color::from_index(int index) {
    if (index < 1 || index > kCount) {
        throw std::out_of_range("color index must be in 1..10, got " + std::to_string(index));
    }
    return Color(index);
}

const std::vector<Color>& Color::all() {
    static const std::vector<Color> colors = [] {
        std::vector<Color> cs;
        for (int i = 1; i <= kCount; ++i) {
            cs.push_back(Color(i));
        }
        return cs;
    }();
    return colors;
}

std::pair<int, int> Color::elems() const { return kColorTable[static_cast<std::size_t>(index_ - 1)]; }

std::uint8_t Color::elem_mask() const {
    auto [a, b] = elems();
    return static_cast<std::uint8_t>((1u << (a - 1)) | (1u << (b - 1)));
}

bool adjacent(Color a, Color b) { return (a.elem_mask() & b.elem_mask()) != 0; }

std::vector<Color> common_neighbors(const std::vector<Color>& colors) {
    if (colors.empty()) {
        throw std::invalid_argument("common_neighbors requires a nonempty color list");
    }
    std::vector<Color> out;
    for (Color c : Color::all()) {
        bool ok = true;
        for (Color x : colors) {
            if (!adjacent(c, x)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(c);
        }
    }
    return out;
}

std::pair<Color, Color> cross_neighbor_pair(std::pair<Color, Color> p, std::pair<Color, Color> q) {
    if (p.first == p.second || q.first == q.second) {
        throw std::invalid_argument("cross_neighbor_pair requires two distinct colors in each pair");
    }
    for (Color a : {p.first, p.second}) {
        for (Color b : {q.first, q.second}) {
            if (adjacent(a, b)) {
                return {a, b};
            }
        }
    }
    // Two disjoint pairs of disjoint 2-subsets would need at least six
    // elements; the ground set has five.
    throw std::logic_error("cross_neighbor_pair: no adjacent cross pair");
}

namespace {

unsigned __int128 middle_binomial(int k) {
    unsigned __int128 r = 1;
    int c = k / 2;
    for (int i = 1; i <= c; ++i) {
        r = r * static_cast<unsigned>(k - i + 1) / static_cast<unsigned>(i);
    }
    return r;
}

}  // namespace

int c_of_n(std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("c_of_n requires n >= 0");
    }
    if (n <= 1) {
        return 0;
    }
    for (int k = 1;; ++k) {
        if (middle_binomial(k) >= static_cast<unsigned __int128>(n)) {
            return k;
        }
    }
}

std::vector<int> CodeWord::elements() const {
    std::vector<int> out;
    for (int i = 1; i <= width; ++i) {
        if ((bits >> (i - 1)) & 1u) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<CodeWord> antichain_codes(std::int64_t m) {
    if (m < 1) {
        throw std::invalid_argument("antichain_codes requires m >= 1");
    }
    int k = c_of_n(m);
    if (k > 32) {
        throw std::invalid_argument("antichain_codes: m too large for 32-bit code words");
    }
    int c = k / 2;
    std::vector<CodeWord> out;
    out.reserve(static_cast<std::size_t>(m));
    if (c == 0) {
        out.push_back(CodeWord{k, 0});
        return out;  // m == 1 whenever c_of_n(m) == 0
    }
    // Colex order on subsets of {1..k} is numeric order of their bit masks.
    std::uint32_t mask = (1u << c) - 1u;
    for (std::int64_t i = 0; i < m; ++i) {
        out.push_back(CodeWord{k, mask});
        std::uint32_t low = mask & (~mask + 1u);
        std::uint32_t ripple = mask + low;
        mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
    return out;
}

std::string to_string(Color c) { return "S" + std::to_string(c.index()); }

std::string to_string(const CodeWord& w) {
    std::string out = "{";
    bool first = true;
    for (int e : w.elements()) {
        if (!first) {
            out += ",";
        }
        out += std::to_string(e);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace dicut
