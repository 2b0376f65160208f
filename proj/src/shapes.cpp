#include <sgroth/shapes.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include <sgroth/errors.hpp>

namespace sgroth
{

namespace
{

void check_partition(std::vector<int> &parts)
{
    while (!parts.empty() && parts.back() == 0) {
        parts.pop_back();
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) {
            throw ParseError("partition parts must be positive");
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw ParseError("partition parts must be weakly decreasing");
        }
    }
}

int sum_of(const std::vector<int> &v)
{
    int s = 0;
    for (int x : v) {
        s += x;
    }
    return s;
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : m_parts(std::move(parts))
{
    check_partition(m_parts);
    m_size = sum_of(m_parts);
}

Partition Partition::from_multiset(std::vector<int> parts)
{
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>{});
    return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const Partition &a, const Partition &b) noexcept
{
    if (auto c = a.m_size <=> b.m_size; c != 0) {
        return c;
    }
    // Larger parts first within a degree.
    return std::lexicographical_compare_three_way(b.m_parts.begin(), b.m_parts.end(), a.m_parts.begin(),
                                                  a.m_parts.end());
}

std::size_t PartitionHash::operator()(const Partition &p) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : p.parts()) {
        h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    }
    return h;
}

SkewShape::SkewShape(Partition outer, Partition inner) : m_outer(std::move(outer)), m_inner(std::move(inner))
{
    if (!contains(m_outer, m_inner)) {
        throw ContainmentError("inner partition " + to_string(m_inner) + " is not contained in "
                               + to_string(m_outer));
    }
}

std::vector<Cell> SkewShape::cells() const
{
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int r = 0; r < m_outer.length(); ++r) {
        for (int c = m_inner[r] + 1; c <= m_outer[r]; ++c) {
            out.push_back({r + 1, c});
        }
    }
    return out;
}

bool SkewShape::has_cell(int row, int col) const noexcept
{
    if (row < 1 || row > m_outer.length()) {
        return false;
    }
    const auto r = static_cast<std::size_t>(row - 1);
    return col > m_inner[r] && col <= m_outer[r];
}

Partition conjugate(const Partition &p)
{
    std::vector<int> out(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
    for (int part : p.parts()) {
        for (int i = 0; i < part; ++i) {
            ++out[static_cast<std::size_t>(i)];
        }
    }
    return Partition(std::move(out));
}

Partition staircase(int n)
{
    if (n < 0) {
        throw DomainError("staircase size must be nonnegative");
    }
    std::vector<int> parts;
    for (int i = n; i >= 1; --i) {
        parts.push_back(i);
    }
    return Partition(std::move(parts));
}

bool contains(const Partition &outer, const Partition &inner) noexcept
{
    if (inner.length() > outer.length()) {
        return false;
    }
    for (std::size_t i = 0; i < inner.parts().size(); ++i) {
        if (inner[i] > outer[i]) {
            return false;
        }
    }
    return true;
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    if (n < 0) {
        return out;
    }
    std::vector<int> cur;
    // Largest first part first, which is exactly the graded order.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> partitions_up_to(int n)
{
    std::vector<Partition> out;
    for (int d = 0; d <= n; ++d) {
        auto level = partitions_of(d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition &p)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t row, int bound) {
        out.emplace_back(cur);
        if (row >= p.parts().size()) {
            return;
        }
        for (int v = 1; v <= std::min(bound, p[row]); ++v) {
            cur.push_back(v);
            rec(row + 1, v);
            cur.pop_back();
        }
    };
    rec(0, p.empty() ? 0 : p[0]);
    std::sort(out.begin(), out.end());
    return out;
}

SkewShape star_join(const Partition &nu, const Partition &mu)
{
    const int shift = mu.empty() ? 0 : mu[0];
    std::vector<int> outer;
    std::vector<int> inner;
    for (int part : nu.parts()) {
        outer.push_back(part + shift);
        inner.push_back(shift);
    }
    for (int part : mu.parts()) {
        outer.push_back(part);
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

StripClass classify_strip(const SkewShape &shape)
{
    bool horizontal = true;
    bool vertical = true;
    const auto &outer = shape.outer();
    const auto &inner = shape.inner();
    for (int r = 0; r < outer.length(); ++r) {
        const auto i = static_cast<std::size_t>(r);
        if (outer[i] - inner[i] >= 2) {
            vertical = false;
        }
        // Row r+1 shares a column with row r iff their column ranges overlap.
        if (i + 1 < outer.parts().size()) {
            const int lo = std::max(inner[i], inner[i + 1]) + 1;
            const int hi = std::min(outer[i], outer[i + 1]);
            if (lo <= hi) {
                horizontal = false;
            }
        }
    }
    return {horizontal, vertical, horizontal && vertical};
}

Partition parse_partition(std::string_view text)
{
    std::vector<int> parts;
    if (text.empty()) {
        return {};
    }
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        const auto *first = token.data();
        const auto *last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc{} || ptr != last) {
            throw ParseError("malformed partition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const ParseError &e) {
        throw ParseError("malformed partition '" + std::string(text) + "': " + e.what());
    }
}

SkewShape parse_skew_shape(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return SkewShape(parse_partition(text));
    }
    if (text.find('/', slash + 1) != std::string_view::npos) {
        throw ParseError("malformed skew shape '" + std::string(text) + "'");
    }
    return SkewShape(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

std::string to_string(const Partition &p)
{
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(p[i]);
    }
    return out;
}

std::string to_string(const SkewShape &s)
{
    return to_string(s.outer()) + "/" + to_string(s.inner());
}

std::ostream &operator<<(std::ostream &os, const Partition &p)
{
    return os << '(' << to_string(p) << ')';
}

std::ostream &operator<<(std::ostream &os, const SkewShape &s)
{
    return os << s.outer() << '/' << s.inner();
}

} // namespace sgroth
