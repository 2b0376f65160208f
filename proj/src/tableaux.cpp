#include <sgroth/tableaux.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include <sgroth/errors.hpp>

namespace sgroth
{

std::string_view to_string(FillingKind kind) noexcept
{
    switch (kind) {
        case FillingKind::ssyt:
            return "SSYT";
        case FillingKind::rpp:
            return "RPP";
        case FillingKind::svt:
            return "SVT";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// SetFilling

SetFilling::SetFilling(SkewShape shape, std::vector<Entry> entries)
    : m_shape(std::move(shape)), m_cells(m_shape.cells()), m_entries(std::move(entries))
{
    if (m_entries.size() != m_cells.size()) {
        throw DomainError("filling has " + std::to_string(m_entries.size()) + " entries for a shape with "
                          + std::to_string(m_cells.size()) + " cells");
    }
    for (const auto &e : m_entries) {
        if (e.empty()) {
            throw DomainError("every cell of a filling needs a nonempty set");
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || (i > 0 && e[i] <= e[i - 1])) {
                throw DomainError("cell sets must be strictly ascending positive integers");
            }
        }
    }
}

SetFilling SetFilling::from_map(SkewShape shape, const std::map<Cell, Entry> &entries)
{
    std::vector<Entry> aligned;
    for (const auto &cell : shape.cells()) {
        auto it = entries.find(cell);
        if (it == entries.end()) {
            throw DomainError("cell (" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ") is unfilled");
        }
        aligned.push_back(it->second);
    }
    if (entries.size() != aligned.size()) {
        throw DomainError("filling assigns sets to cells outside the shape");
    }
    return SetFilling(std::move(shape), std::move(aligned));
}

const Entry *SetFilling::find(Cell cell) const noexcept
{
    auto it = std::lower_bound(m_cells.begin(), m_cells.end(), cell);
    if (it == m_cells.end() || *it != cell) {
        return nullptr;
    }
    return &m_entries[static_cast<std::size_t>(it - m_cells.begin())];
}

int SetFilling::total_size() const noexcept
{
    int n = 0;
    for (const auto &e : m_entries) {
        n += static_cast<int>(e.size());
    }
    return n;
}

namespace
{

bool all_singletons(const SetFilling &t)
{
    return std::all_of(t.entries().begin(), t.entries().end(), [](const Entry &e) { return e.size() == 1; });
}

// `row_ok(left, cell)` and `col_ok(above, cell)` over neighbouring pairs.
template <typename RowOk, typename ColOk>
bool neighbours_ok(const SetFilling &t, RowOk row_ok, ColOk col_ok)
{
    const auto &cells = t.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto &cell = cells[i];
        const auto &e = t.entries()[i];
        if (const auto *left = t.find({cell.row, cell.col - 1}); left && !row_ok(*left, e)) {
            return false;
        }
        if (const auto *above = t.find({cell.row - 1, cell.col}); above && !col_ok(*above, e)) {
            return false;
        }
    }
    return true;
}

} // namespace

bool is_ssyt(const SetFilling &t)
{
    return all_singletons(t)
           && neighbours_ok(
               t, [](const Entry &a, const Entry &b) { return a[0] <= b[0]; },
               [](const Entry &a, const Entry &b) { return a[0] < b[0]; });
}

bool is_rpp(const SetFilling &t)
{
    return all_singletons(t)
           && neighbours_ok(
               t, [](const Entry &a, const Entry &b) { return a[0] <= b[0]; },
               [](const Entry &a, const Entry &b) { return a[0] <= b[0]; });
}

bool is_svt(const SetFilling &t)
{
    return neighbours_ok(
        t, [](const Entry &a, const Entry &b) { return a.back() <= b.front(); },
        [](const Entry &a, const Entry &b) { return a.back() < b.front(); });
}

bool is_valid(const SetFilling &t, FillingKind kind)
{
    switch (kind) {
        case FillingKind::ssyt:
            return is_ssyt(t);
        case FillingKind::rpp:
            return is_rpp(t);
        case FillingKind::svt:
            return is_svt(t);
    }
    return false;
}

// ---------------------------------------------------------------------------
// FillingStream

namespace
{

constexpr int max_alphabet = 63;

Entry mask_to_entry(std::uint64_t mask)
{
    Entry e;
    while (mask != 0) {
        e.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return e;
}

int mask_max(std::uint64_t mask)
{
    return 64 - std::countl_zero(mask);
}

int mask_min(std::uint64_t mask)
{
    return std::countr_zero(mask) + 1;
}

} // namespace

FillingStream::FillingStream(SkewShape shape, FillingKind kind, int max_entry, std::optional<int> max_total_size)
    : m_shape(std::move(shape)), m_kind(kind), m_max_entry(max_entry), m_cap(max_total_size),
      m_cells(m_shape.cells())
{
    if (max_entry <= 0) {
        throw DomainError("max_entry must be positive");
    }
    if (max_entry > max_alphabet) {
        throw DomainError("max_entry above " + std::to_string(max_alphabet) + " is not supported");
    }
    const auto n = m_cells.size();
    m_left.assign(n, -1);
    m_above.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (m_cells[j].row == m_cells[i].row && m_cells[j].col == m_cells[i].col - 1) {
                m_left[i] = static_cast<int>(j);
            }
            if (m_cells[j].row == m_cells[i].row - 1 && m_cells[j].col == m_cells[i].col) {
                m_above[i] = static_cast<int>(j);
            }
        }
    }
    m_masks.assign(n, 0);
    m_used.assign(n + 1, 0);
}

int FillingStream::lower_bound(std::size_t pos) const
{
    int lo = 1;
    if (m_left[pos] >= 0) {
        lo = std::max(lo, mask_max(m_masks[static_cast<std::size_t>(m_left[pos])]));
    }
    if (m_above[pos] >= 0) {
        const int above = mask_max(m_masks[static_cast<std::size_t>(m_above[pos])]);
        lo = std::max(lo, m_kind == FillingKind::rpp ? above : above + 1);
    }
    return lo;
}

// Moves cell `pos` to its next candidate; false when exhausted.
bool FillingStream::advance(std::size_t pos)
{
    const int lo = lower_bound(pos);
    if (lo > m_max_entry) {
        return false;
    }
    auto &mask = m_masks[pos];
    const int remaining_cells = static_cast<int>(m_cells.size() - pos - 1);
    if (m_kind != FillingKind::svt) {
        const int next = mask == 0 ? lo : mask_min(mask) + 1;
        if (next > m_max_entry) {
            return false;
        }
        mask = std::uint64_t{1} << (next - 1);
        m_used[pos + 1] = m_used[pos] + 1;
        return true;
    }
    // Exactly the masks whose least element is at least `lo`, ascending.
    const std::uint64_t step = std::uint64_t{1} << (lo - 1);
    const std::uint64_t limit = std::uint64_t{1} << m_max_entry;
    for (std::uint64_t cand = mask == 0 ? step : mask + step; cand < limit; cand += step) {
        const int used = m_used[pos] + std::popcount(cand);
        if (m_cap && used + remaining_cells > *m_cap) {
            continue;
        }
        mask = cand;
        m_used[pos + 1] = used;
        return true;
    }
    return false;
}

std::optional<SetFilling> FillingStream::next()
{
    if (m_done) {
        return std::nullopt;
    }
    const auto n = m_cells.size();
    std::size_t pos = 0;
    if (!m_started) {
        m_started = true;
        if (m_cap && static_cast<int>(n) > *m_cap) {
            m_done = true;
            return std::nullopt;
        }
        if (n == 0) {
            m_done = true;
            return SetFilling(m_shape, {});
        }
    } else {
        pos = n - 1;
    }
    while (true) {
        if (advance(pos)) {
            if (pos + 1 == n) {
                std::vector<Entry> entries;
                entries.reserve(n);
                for (auto m : m_masks) {
                    entries.push_back(mask_to_entry(m));
                }
                return SetFilling(m_shape, std::move(entries));
            }
            ++pos;
            m_masks[pos] = 0;
        } else {
            m_masks[pos] = 0;
            if (pos == 0) {
                m_done = true;
                return std::nullopt;
            }
            --pos;
        }
    }
}

FillingStream enumerate(const SkewShape &shape, FillingKind kind, int max_entry, std::optional<int> max_total_size)
{
    return FillingStream(shape, kind, max_entry, max_total_size);
}

// ---------------------------------------------------------------------------
// Words

Word reverse_reading_word(const SetFilling &t)
{
    std::vector<std::size_t> order(t.cells().size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    const auto &cells = t.cells();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (cells[a].col != cells[b].col) {
            return cells[a].col > cells[b].col;
        }
        return cells[a].row < cells[b].row;
    });
    Word w;
    for (auto i : order) {
        const auto &e = t.entries()[i];
        w.insert(w.end(), e.rbegin(), e.rend());
    }
    return w;
}

bool is_lattice(const Word &w)
{
    std::vector<int> counts;
    for (int letter : w) {
        if (letter < 1) {
            return false;
        }
        const auto a = static_cast<std::size_t>(letter);
        if (counts.size() <= a) {
            counts.resize(a + 1, 0);
        }
        ++counts[a];
        if (a > 1 && counts[a] > counts[a - 1]) {
            return false;
        }
    }
    return true;
}

Content content_of(const SetFilling &t, FillingKind kind)
{
    if (!is_valid(t, kind)) {
        throw DomainError("filling is not a valid " + std::string(to_string(kind)));
    }
    Content c;
    auto bump = [&c](int letter) {
        if (static_cast<int>(c.size()) < letter) {
            c.resize(static_cast<std::size_t>(letter), 0);
        }
        ++c[static_cast<std::size_t>(letter - 1)];
    };
    if (kind == FillingKind::rpp) {
        // Columns are weakly increasing, so equal values in a column are
        // contiguous: count a value once per column run.
        for (std::size_t i = 0; i < t.cells().size(); ++i) {
            const auto cell = t.cells()[i];
            const int v = t.entries()[i][0];
            const auto *above = t.find({cell.row - 1, cell.col});
            if (above == nullptr || (*above)[0] != v) {
                bump(v);
            }
        }
    } else {
        for (const auto &e : t.entries()) {
            for (int v : e) {
                bump(v);
            }
        }
    }
    while (!c.empty() && c.back() == 0) {
        c.pop_back();
    }
    return c;
}

// ---------------------------------------------------------------------------
// Lattice fillings

namespace
{

// Cells are visited in reading order (columns right to left, top to bottom),
// so the already-placed neighbours of a cell are the one above and the one to
// its right, and the running letter counts are exactly the prefix counts of
// the reverse reading word.
class LatticeSearch
{
public:
    LatticeSearch(const SkewShape &shape, const Partition &content)
        : m_shape(shape), m_content(content.parts()), m_alphabet(content.length()), m_total(content.size())
    {
        m_cells = shape.cells();
        std::vector<std::size_t> order(m_cells.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (m_cells[a].col != m_cells[b].col) {
                return m_cells[a].col > m_cells[b].col;
            }
            return m_cells[a].row < m_cells[b].row;
        });
        m_row_major_index = order;
        std::vector<Cell> reading;
        for (auto i : order) {
            reading.push_back(m_cells[i]);
        }
        const auto n = reading.size();
        m_above.assign(n, -1);
        m_right.assign(n, -1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (reading[j].col == reading[i].col && reading[j].row == reading[i].row - 1) {
                    m_above[i] = static_cast<int>(j);
                }
                if (reading[j].row == reading[i].row && reading[j].col == reading[i].col + 1) {
                    m_right[i] = static_cast<int>(j);
                }
            }
        }
        m_masks.assign(n, 0);
        m_counts.assign(static_cast<std::size_t>(m_alphabet) + 1, 0);
    }

    template <typename OnLeaf>
    void run(OnLeaf &&on_leaf)
    {
        if (m_alphabet > max_alphabet) {
            throw DomainError("lattice content too long");
        }
        if (m_total < static_cast<int>(m_masks.size())) {
            return;
        }
        search(0, 0, on_leaf);
    }

    SetFilling current_filling() const
    {
        std::vector<Entry> entries(m_masks.size());
        for (std::size_t i = 0; i < m_masks.size(); ++i) {
            entries[m_row_major_index[i]] = mask_to_entry(m_masks[i]);
        }
        return SetFilling(m_shape, std::move(entries));
    }

private:
    template <typename OnLeaf>
    void search(std::size_t pos, int placed, OnLeaf &on_leaf)
    {
        const auto n = m_masks.size();
        if (pos == n) {
            if (placed == m_total) {
                on_leaf();
            }
            return;
        }
        int lo = 1;
        int hi = m_alphabet;
        if (m_above[pos] >= 0) {
            lo = mask_max(m_masks[static_cast<std::size_t>(m_above[pos])]) + 1;
        }
        if (m_right[pos] >= 0) {
            hi = mask_min(m_masks[static_cast<std::size_t>(m_right[pos])]);
        }
        if (lo > hi) {
            return;
        }
        const int budget = m_total - placed - static_cast<int>(n - pos - 1);
        if (budget <= 0) {
            return;
        }
        const std::uint64_t range = ((std::uint64_t{1} << hi) - 1) & ~((std::uint64_t{1} << (lo - 1)) - 1);
        // Ascending sub-masks of `range`.
        for (std::uint64_t sub = (0 - range) & range; sub != 0; sub = (sub - range) & range) {
            const int size = std::popcount(sub);
            if (size > budget) {
                continue;
            }
            if (!place(sub)) {
                unplace(sub);
                continue;
            }
            m_masks[pos] = sub;
            search(pos + 1, placed + size, on_leaf);
            m_masks[pos] = 0;
            unplace(sub);
        }
    }

    // Reads the set largest to smallest; false on the first violation. The
    // counts are bumped for every letter regardless, so unplace() undoes it.
    bool place(std::uint64_t sub)
    {
        bool ok = true;
        for (int a = mask_max(sub); a >= 1; --a) {
            if ((sub >> (a - 1) & 1) == 0) {
                continue;
            }
            const auto ia = static_cast<std::size_t>(a);
            ++m_counts[ia];
            if (ok
                && (m_counts[ia] > m_content[ia - 1] || (a > 1 && m_counts[ia] > m_counts[ia - 1]))) {
                ok = false;
            }
        }
        return ok;
    }

    void unplace(std::uint64_t sub)
    {
        for (int a = 1; a <= m_alphabet; ++a) {
            if ((sub >> (a - 1) & 1) != 0) {
                --m_counts[static_cast<std::size_t>(a)];
            }
        }
    }

    const SkewShape &m_shape;
    std::vector<int> m_content;
    int m_alphabet;
    int m_total;
    std::vector<Cell> m_cells;
    std::vector<std::size_t> m_row_major_index;
    std::vector<int> m_above;
    std::vector<int> m_right;
    std::vector<std::uint64_t> m_masks;
    std::vector<int> m_counts;
};

} // namespace

Integer count_lattice_fillings(const SkewShape &shape, const Partition &content)
{
    LatticeSearch search(shape, content);
    Integer count = 0;
    search.run([&] { ++count; });
    return count;
}

void for_each_lattice_filling(const SkewShape &shape, const Partition &content,
                              const std::function<void(const SetFilling &)> &visit)
{
    LatticeSearch search(shape, content);
    search.run([&] { visit(search.current_filling()); });
}

// ---------------------------------------------------------------------------
// Chain counting
//
// Every filling of a skew shape corresponds to a chain of partitions
// inner = B_0 ⊆ B_1 ⊆ ... ⊆ B_L = outer where B_i holds the cells whose
// largest entry is at most i:
//   SSYT: B_i/B_{i-1} is a horizontal strip of size content_i.
//   RPP:  B_i/B_{i-1} is any skew shape meeting exactly content_i columns.
//   SVT:  B_i/B_{i-1} is a horizontal strip; in addition a cell may be "open"
//         (holds letters already but its largest letter is still to come).
//         An open cell sits at an addable corner of B whose upper neighbour
//         was complete before the cell opened. At letter i each open cell
//         either closes (joins the strip), takes i as a middle element, or
//         skips i; fresh cells may open with i as their least element.
// The state is (B, set of rows holding an open cell).

namespace
{

using ChainState = std::vector<int>; // row lengths, then the open-row mask

Integer binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

class ChainCounter
{
public:
    ChainCounter(const SkewShape &shape, FillingKind kind) : m_kind(kind), m_rows(shape.rows())
    {
        for (int r = 0; r < m_rows; ++r) {
            m_outer.push_back(shape.outer()[static_cast<std::size_t>(r)]);
            m_inner.push_back(shape.inner()[static_cast<std::size_t>(r)]);
        }
        if (m_rows > 31 || (m_rows > 0 && m_outer[0] > 64)) {
            throw DomainError("shape too large for chain counting");
        }
    }

    Integer count(const Content &content)
    {
        std::map<ChainState, Integer> cur;
        ChainState start(m_inner.begin(), m_inner.end());
        start.push_back(0);
        cur.emplace(std::move(start), 1);
        for (int c : content) {
            std::map<ChainState, Integer> next;
            for (const auto &[state, ways] : cur) {
                m_from = &state;
                m_to = state;
                m_letter_count = c;
                m_emit = [&](const ChainState &s, const Integer &mult) { next[s] += ways * mult; };
                step_row(0, 0, 0);
            }
            cur = std::move(next);
            if (cur.empty()) {
                return 0;
            }
        }
        ChainState done(m_outer.begin(), m_outer.end());
        done.push_back(0);
        auto it = cur.find(done);
        return it == cur.end() ? Integer{0} : it->second;
    }

private:
    int old_row(int r) const
    {
        return (*m_from)[static_cast<std::size_t>(r)];
    }

    // Chooses the new length of row r. `used` counts cells (SSYT, SVT) and
    // `cols` the columns touched so far (RPP).
    void step_row(int r, int used, std::uint64_t cols)
    {
        if (r == m_rows) {
            finish(used, cols);
            return;
        }
        const auto ir = static_cast<std::size_t>(r);
        const int from = old_row(r);
        int hi = m_outer[ir];
        if (r > 0) {
            // Horizontal strips are bounded by the old row above; RPP layers
            // only by the new one.
            hi = std::min(hi, m_kind == FillingKind::rpp ? m_to[ir - 1] : old_row(r - 1));
        }
        for (int v = from; v <= hi; ++v) {
            m_to[ir] = v;
            if (m_kind == FillingKind::rpp) {
                std::uint64_t added = cols;
                for (int col = from; col < v; ++col) {
                    added |= std::uint64_t{1} << col;
                }
                if (std::popcount(added) > m_letter_count) {
                    break;
                }
                step_row(r + 1, used, added);
            } else {
                const int u = used + (v - from);
                if (u > m_letter_count) {
                    break;
                }
                step_row(r + 1, u, cols);
            }
        }
        m_to[ir] = from;
    }

    void finish(int used, std::uint64_t cols)
    {
        const auto mask_index = static_cast<std::size_t>(m_rows);
        switch (m_kind) {
            case FillingKind::ssyt:
                if (used == m_letter_count) {
                    m_emit(m_to, 1);
                }
                return;
            case FillingKind::rpp:
                if (std::popcount(cols) == m_letter_count) {
                    m_emit(m_to, 1);
                }
                return;
            case FillingKind::svt:
                break;
        }
        const auto open = static_cast<std::uint32_t>((*m_from)[mask_index]);
        std::uint32_t still_open = 0;
        for (int r = 0; r < m_rows; ++r) {
            if ((open >> r & 1) != 0 && m_to[static_cast<std::size_t>(r)] == old_row(r)) {
                still_open |= std::uint32_t{1} << r;
            }
        }
        const int u = std::popcount(still_open);
        std::vector<int> candidates;
        for (int r = 0; r < m_rows; ++r) {
            const auto ir = static_cast<std::size_t>(r);
            if ((still_open >> r & 1) != 0 || m_to[ir] >= m_outer[ir]) {
                continue;
            }
            if (r > 0 && old_row(r - 1) < m_to[ir] + 1) {
                continue;
            }
            candidates.push_back(r);
        }
        const int base = m_letter_count - used;
        const auto n = candidates.size();
        ChainState out = m_to;
        for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << n); ++pick) {
            const int opened = std::popcount(pick);
            const int middles = base - opened;
            if (middles < 0 || middles > u) {
                continue;
            }
            std::uint32_t mask = still_open;
            for (std::size_t j = 0; j < n; ++j) {
                if ((pick >> j & 1) != 0) {
                    mask |= std::uint32_t{1} << candidates[j];
                }
            }
            out[mask_index] = static_cast<int>(mask);
            m_emit(out, binomial(u, middles));
        }
    }

    FillingKind m_kind;
    int m_rows;
    std::vector<int> m_outer;
    std::vector<int> m_inner;
    const ChainState *m_from = nullptr;
    ChainState m_to;
    int m_letter_count = 0;
    std::function<void(const ChainState &, const Integer &)> m_emit;
};

struct CountCache {
    std::shared_mutex mutex;
    std::unordered_map<std::string, Integer> values;
};

CountCache &count_cache()
{
    static CountCache cache;
    return cache;
}

std::string cache_key(const SkewShape &shape, FillingKind kind, const Content &content)
{
    std::string key(to_string(kind));
    key += ':';
    key += to_string(shape);
    key += ':';
    for (int c : content) {
        key += std::to_string(c);
        key += ',';
    }
    return key;
}

} // namespace

Integer count_with_content(const SkewShape &shape, FillingKind kind, const Content &content)
{
    Content trimmed = content;
    while (!trimmed.empty() && trimmed.back() == 0) {
        trimmed.pop_back();
    }
    int total = 0;
    for (int c : trimmed) {
        if (c < 0) {
            throw DomainError("content entries must be nonnegative");
        }
        total += c;
    }
    const int cells = shape.size();
    if ((kind == FillingKind::ssyt && total != cells) || (kind == FillingKind::rpp && total > cells)
        || (kind == FillingKind::svt && total < cells) || (cells > 0 && total == 0)) {
        return 0;
    }
    if (cells == 0) {
        return total == 0 ? 1 : 0;
    }
    const auto key = cache_key(shape, kind, trimmed);
    auto &cache = count_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.values.find(key); it != cache.values.end()) {
            return it->second;
        }
    }
    Integer value = ChainCounter(shape, kind).count(trimmed);
    std::unique_lock lock(cache.mutex);
    cache.values.emplace(key, value);
    return value;
}

} // namespace sgroth
