#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sgroth
{

// A weakly decreasing sequence of positive integers. Trailing zeros are
// stripped on construction, so the empty sequence is the unique empty
// partition.
//
// Partitions are totally ordered by the graded order used everywhere in the
// library (map keys, reports, CLI output): first by size, then by
// reverse-lexicographic comparison of the parts, so that (2) precedes (1,1)
// and (3,1) precedes (2,2). Within a fixed size this order is a linear
// extension of dominance with the dominant partitions first.
class Partition
{
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // Sorts and drops zeros before constructing; for multisets of parts.
    static Partition from_multiset(std::vector<int> parts);

    const std::vector<int> &parts() const noexcept
    {
        return m_parts;
    }
    // Parts beyond the length read as 0; `i` is 0-based.
    int operator[](std::size_t i) const noexcept
    {
        return i < m_parts.size() ? m_parts[i] : 0;
    }
    int length() const noexcept
    {
        return static_cast<int>(m_parts.size());
    }
    int size() const noexcept
    {
        return m_size;
    }
    bool empty() const noexcept
    {
        return m_parts.empty();
    }

    friend bool operator==(const Partition &a, const Partition &b) noexcept
    {
        return a.m_parts == b.m_parts;
    }
    friend std::strong_ordering operator<=>(const Partition &a, const Partition &b) noexcept;

private:
    std::vector<int> m_parts;
    int m_size = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition &p) const noexcept;
};

// 1-indexed cell, row 1 on top.
struct Cell {
    int row;
    int col;
    friend auto operator<=>(const Cell &, const Cell &) = default;
};

class SkewShape
{
public:
    SkewShape() = default;
    // Throws ContainmentError unless inner is contained in outer.
    SkewShape(Partition outer, Partition inner = {});

    const Partition &outer() const noexcept
    {
        return m_outer;
    }
    const Partition &inner() const noexcept
    {
        return m_inner;
    }
    int size() const noexcept
    {
        return m_outer.size() - m_inner.size();
    }
    int rows() const noexcept
    {
        return m_outer.length();
    }
    // Row-major, top row first, left to right.
    std::vector<Cell> cells() const;
    bool has_cell(int row, int col) const noexcept;

    friend bool operator==(const SkewShape &, const SkewShape &) = default;

private:
    Partition m_outer;
    Partition m_inner;
};

Partition conjugate(const Partition &p);
Partition staircase(int n);
// Componentwise containment, missing parts read as 0.
bool contains(const Partition &outer, const Partition &inner) noexcept;

// Every partition of `n`, in graded order.
std::vector<Partition> partitions_of(int n);
// Every partition of size at most `n`, in graded order.
std::vector<Partition> partitions_up_to(int n);
// Every mu contained in p, in graded order.
std::vector<Partition> subpartitions(const Partition &p);

// The skew shape with nu in the top-right block and mu in the bottom-left
// block, the top-right corner of mu touching the bottom-left corner of nu.
SkewShape star_join(const Partition &nu, const Partition &mu);

struct StripClass {
    bool horizontal;
    bool vertical;
    bool rook;
    friend bool operator==(const StripClass &, const StripClass &) = default;
};

StripClass classify_strip(const SkewShape &shape);

// Text encodings: "4,3,2,1" (empty string for the empty partition) and
// "outer/inner" for skew shapes; a bare partition is read as outer/empty.
Partition parse_partition(std::string_view text);
SkewShape parse_skew_shape(std::string_view text);
std::string to_string(const Partition &p);
std::string to_string(const SkewShape &s);

std::ostream &operator<<(std::ostream &os, const Partition &p);
std::ostream &operator<<(std::ostream &os, const SkewShape &s);

} // namespace sgroth
