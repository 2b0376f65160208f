#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include <sgroth/integer.hpp>
#include <sgroth/shapes.hpp>

namespace sgroth
{

enum class FillingKind { ssyt, rpp, svt };

std::string_view to_string(FillingKind kind) noexcept;

// Sorted ascending, nonempty, positive.
using Entry = std::vector<int>;
using Word = std::vector<int>;
// Weak composition; index 0 holds the multiplicity of the letter 1.
using Content = std::vector<int>;

// An assignment of a nonempty set of positive integers to every cell of a
// skew shape. SSYT and reverse plane partitions are the fillings whose sets
// are all singletons.
class SetFilling
{
public:
    // `entries` is aligned with shape.cells() (row-major).
    SetFilling(SkewShape shape, std::vector<Entry> entries);
    static SetFilling from_map(SkewShape shape, const std::map<Cell, Entry> &entries);

    const SkewShape &shape() const noexcept
    {
        return m_shape;
    }
    const std::vector<Cell> &cells() const noexcept
    {
        return m_cells;
    }
    const std::vector<Entry> &entries() const noexcept
    {
        return m_entries;
    }
    // nullptr when the cell is not in the shape.
    const Entry *find(Cell cell) const noexcept;
    // Sum of the set sizes.
    int total_size() const noexcept;

    friend bool operator==(const SetFilling &a, const SetFilling &b)
    {
        return a.m_shape == b.m_shape && a.m_entries == b.m_entries;
    }

private:
    SkewShape m_shape;
    std::vector<Cell> m_cells;
    std::vector<Entry> m_entries;
};

bool is_ssyt(const SetFilling &t);
bool is_rpp(const SetFilling &t);
bool is_svt(const SetFilling &t);
bool is_valid(const SetFilling &t, FillingKind kind);

// Lazily enumerates every filling of `shape` of the given kind with entries
// at most `max_entry` (and, for set-valued tableaux, total size at most
// `max_total_size` when given). Cells are filled row-major; candidates are
// tried in ascending order, where a set is ordered by the integer whose bit
// j-1 marks membership of j. The order is stable across runs.
//
// A stream owns its state and is not shareable mid-iteration.
class FillingStream
{
public:
    FillingStream(SkewShape shape, FillingKind kind, int max_entry, std::optional<int> max_total_size = {});

    std::optional<SetFilling> next();

private:
    bool advance(std::size_t pos);
    int lower_bound(std::size_t pos) const;

    SkewShape m_shape;
    FillingKind m_kind;
    int m_max_entry;
    std::optional<int> m_cap;
    std::vector<Cell> m_cells;
    std::vector<int> m_left;
    std::vector<int> m_above;
    std::vector<std::uint64_t> m_masks;
    // m_used[i] = total set size of cells [0, i).
    std::vector<int> m_used;
    bool m_started = false;
    bool m_done = false;
};

FillingStream enumerate(const SkewShape &shape, FillingKind kind, int max_entry,
                        std::optional<int> max_total_size = {});

// Columns right to left, top to bottom within a column, each set read from
// largest to smallest.
Word reverse_reading_word(const SetFilling &t);

// Every prefix holds at least as many letters a as letters a+1.
bool is_lattice(const Word &w);

// SSYT: number of entries equal to i; RPP: number of columns containing i;
// SVT: number of occurrences of i. Trailing zeros are trimmed. Throws
// DomainError when the filling is not valid for `kind`.
Content content_of(const SetFilling &t, FillingKind kind);

// Number of set-valued tableaux of `shape` whose reverse reading word is a
// lattice word with content exactly `content`.
Integer count_lattice_fillings(const SkewShape &shape, const Partition &content);

// Visits the same fillings that count_lattice_fillings counts, in a fixed
// order (cells taken in reading order, sets ascending).
void for_each_lattice_filling(const SkewShape &shape, const Partition &content,
                              const std::function<void(const SetFilling &)> &visit);

// Number of fillings of the given kind whose content (as defined by
// content_of) equals `content` exactly. Computed letter by letter over chains
// of partitions, so it never materializes fillings; results are memoized
// process-wide.
Integer count_with_content(const SkewShape &shape, FillingKind kind, const Content &content);

} // namespace sgroth
