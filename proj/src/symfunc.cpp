#include <sgroth/symfunc.hpp>

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include <sgroth/errors.hpp>
#include <sgroth/tableaux.hpp>

namespace sgroth
{

TruncationProfile::TruncationProfile(int max_degree_, int num_vars_) : max_degree(max_degree_), num_vars(num_vars_)
{
    if (max_degree < 0) {
        throw DegreeError("truncation degree must be nonnegative");
    }
    if (num_vars < 1) {
        throw DegreeError("number of variables must be positive");
    }
    if (num_vars < max_degree) {
        throw DegreeError("unfaithful truncation: " + std::to_string(num_vars) + " variables for degree "
                          + std::to_string(max_degree));
    }
}

TruncationProfile TruncationProfile::faithful(int max_degree)
{
    return TruncationProfile(max_degree, std::max(max_degree, 1));
}

// ---------------------------------------------------------------------------
// SymFunc

SymFunc::SymFunc(TruncationProfile trunc) : m_trunc(trunc) {}

SymFunc::SymFunc(TruncationProfile trunc, const CoeffMap &coeffs) : m_trunc(trunc)
{
    for (const auto &[lam, c] : coeffs) {
        add_term(lam, c);
    }
}

SymFunc SymFunc::one(TruncationProfile trunc)
{
    SymFunc f(trunc);
    f.add_term({}, 1);
    return f;
}

Integer SymFunc::coefficient(const Partition &lam) const
{
    auto it = m_coeffs.find(lam);
    return it == m_coeffs.end() ? Integer{0} : it->second;
}

void SymFunc::add_term(const Partition &lam, const Integer &c)
{
    if (c == 0 || lam.size() > m_trunc.max_degree || lam.length() > m_trunc.num_vars) {
        return;
    }
    auto [it, inserted] = m_coeffs.try_emplace(lam, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            m_coeffs.erase(it);
        }
    }
}

std::optional<int> SymFunc::min_degree() const
{
    if (m_coeffs.empty()) {
        return std::nullopt;
    }
    return m_coeffs.begin()->first.size();
}

std::optional<int> SymFunc::max_degree() const
{
    if (m_coeffs.empty()) {
        return std::nullopt;
    }
    return m_coeffs.rbegin()->first.size();
}

SymFunc SymFunc::homogeneous_part(int degree) const
{
    SymFunc out(m_trunc);
    for (const auto &[lam, c] : m_coeffs) {
        if (lam.size() == degree) {
            out.m_coeffs.emplace(lam, c);
        }
    }
    return out;
}

SymFunc SymFunc::with_trunc(TruncationProfile trunc) const
{
    return SymFunc(trunc, m_coeffs);
}

namespace
{

void require_same_profile(const SymFunc &a, const SymFunc &b)
{
    if (!(a.trunc() == b.trunc())) {
        throw ProfileMismatch("truncation profiles differ: (D=" + std::to_string(a.trunc().max_degree)
                              + ", a=" + std::to_string(a.trunc().num_vars)
                              + ") vs (D=" + std::to_string(b.trunc().max_degree)
                              + ", a=" + std::to_string(b.trunc().num_vars) + ")");
    }
}

} // namespace

SymFunc &SymFunc::operator+=(const SymFunc &other)
{
    require_same_profile(*this, other);
    for (const auto &[lam, c] : other.m_coeffs) {
        add_term(lam, c);
    }
    return *this;
}

SymFunc &SymFunc::operator-=(const SymFunc &other)
{
    require_same_profile(*this, other);
    for (const auto &[lam, c] : other.m_coeffs) {
        add_term(lam, -c);
    }
    return *this;
}

SymFunc SymFunc::operator-() const
{
    SymFunc out(*this);
    for (auto &[lam, c] : out.m_coeffs) {
        c = -c;
    }
    return out;
}

SymFunc &SymFunc::operator*=(const Integer &scalar)
{
    if (scalar == 0) {
        m_coeffs.clear();
        return *this;
    }
    for (auto &[lam, c] : m_coeffs) {
        c *= scalar;
    }
    return *this;
}

SymFunc operator+(SymFunc a, const SymFunc &b)
{
    return a += b;
}

SymFunc operator-(SymFunc a, const SymFunc &b)
{
    return a -= b;
}

SymFunc operator*(SymFunc a, const Integer &scalar)
{
    return a *= scalar;
}

SymFunc add(const SymFunc &f, const SymFunc &g)
{
    return f + g;
}

// ---------------------------------------------------------------------------
// Products

namespace
{

// Coefficient of x^lam in m_alpha * m_beta: the number of distinct
// rearrangements u of alpha (padded with zeros to the length of lam) such
// that lam - u is a rearrangement of beta.
Integer monomial_structure_constant(const Partition &alpha, const Partition &beta, const Partition &lam)
{
    const auto len = static_cast<std::size_t>(lam.length());
    if (alpha.parts().size() > len || beta.parts().size() > len) {
        return 0;
    }
    std::vector<int> u(alpha.parts());
    u.resize(len, 0);
    std::sort(u.begin(), u.end());
    Integer count = 0;
    std::vector<int> rest(len);
    do {
        bool fits = true;
        for (std::size_t i = 0; i < len; ++i) {
            rest[i] = lam[i] - u[i];
            if (rest[i] < 0) {
                fits = false;
                break;
            }
        }
        if (fits && Partition::from_multiset(rest) == beta) {
            ++count;
        }
    } while (std::next_permutation(u.begin(), u.end()));
    return count;
}

struct ProductCache {
    std::shared_mutex mutex;
    std::map<std::pair<Partition, Partition>, CoeffMap> table;
};

ProductCache &product_cache()
{
    static ProductCache cache;
    return cache;
}

// m_alpha * m_beta in full (no variable bound).
const CoeffMap &monomial_product(const Partition &alpha, const Partition &beta)
{
    auto key = alpha < beta ? std::make_pair(alpha, beta) : std::make_pair(beta, alpha);
    auto &cache = product_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.table.find(key); it != cache.table.end()) {
            return it->second;
        }
    }
    CoeffMap out;
    const int lo = std::max(alpha.length(), beta.length());
    const int hi = alpha.length() + beta.length();
    for (const auto &lam : partitions_of(alpha.size() + beta.size())) {
        if (lam.length() < lo || lam.length() > hi) {
            continue;
        }
        auto c = monomial_structure_constant(alpha, beta, lam);
        if (c != 0) {
            out.emplace(lam, std::move(c));
        }
    }
    std::unique_lock lock(cache.mutex);
    return cache.table.emplace(std::move(key), std::move(out)).first->second;
}

} // namespace

SymFunc multiply(const SymFunc &f, const SymFunc &g)
{
    require_same_profile(f, g);
    SymFunc out(f.trunc());
    const int max_deg = f.trunc().max_degree;
    for (const auto &[alpha, a] : f.coeffs()) {
        for (const auto &[beta, b] : g.coeffs()) {
            if (alpha.size() + beta.size() > max_deg) {
                // g is sorted by degree.
                break;
            }
            const Integer ab = a * b;
            for (const auto &[lam, c] : monomial_product(alpha, beta)) {
                out.add_term(lam, ab * c);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bases

std::string_view to_string(Basis b) noexcept
{
    switch (b) {
        case Basis::m:
            return "m";
        case Basis::s:
            return "s";
        case Basis::e:
            return "e";
        case Basis::h:
            return "h";
        case Basis::g:
            return "g";
        case Basis::G:
            return "G";
    }
    return "?";
}

Basis parse_basis(std::string_view text)
{
    for (auto b : {Basis::m, Basis::s, Basis::e, Basis::h, Basis::g, Basis::G}) {
        if (text == to_string(b)) {
            return b;
        }
    }
    throw ParseError("unknown basis '" + std::string(text) + "'");
}

SymFunc basis_element(Basis tag, const Partition &lam, TruncationProfile trunc)
{
    if (lam.size() > trunc.max_degree) {
        throw DegreeError("degree " + std::to_string(lam.size()) + " exceeds truncation degree "
                          + std::to_string(trunc.max_degree));
    }
    SymFunc out = SymFunc::one(trunc);
    switch (tag) {
        case Basis::m:
            return SymFunc(trunc, {{lam, 1}});
        case Basis::e:
            for (int part : lam.parts()) {
                out = multiply(out, SymFunc(trunc, {{Partition(std::vector<int>(static_cast<std::size_t>(part), 1)), 1}}));
            }
            return out;
        case Basis::h:
            for (int part : lam.parts()) {
                SymFunc hn(trunc);
                for (const auto &mu : partitions_of(part)) {
                    hn.add_term(mu, 1);
                }
                out = multiply(out, hn);
            }
            return out;
        default:
            throw DomainError("basis_element supports only the m, e and h bases");
    }
}

Integer kostka(const Partition &shape, const Partition &content)
{
    if (shape.size() != content.size()) {
        return 0;
    }
    return count_with_content(SkewShape(shape), FillingKind::ssyt, content.parts());
}

SymFunc schur_to_m(const Partition &lam, TruncationProfile trunc)
{
    if (lam.size() > trunc.max_degree) {
        throw DegreeError("degree " + std::to_string(lam.size()) + " exceeds truncation degree "
                          + std::to_string(trunc.max_degree));
    }
    SymFunc out(trunc);
    for (const auto &mu : partitions_of(lam.size())) {
        if (mu.length() <= trunc.num_vars) {
            out.add_term(mu, kostka(lam, mu));
        }
    }
    return out;
}

namespace
{

// Given monomial coefficients r of a homogeneous f, finds c with
// sum_lam c_lam K_{lam mu} = r_mu. K_{lam mu} vanishes unless mu is dominated
// by lam, so the graded order (dominant first) makes this back-substitution.
CoeffMap solve_schur_degree(const std::map<Partition, Integer> &rhs, int degree)
{
    auto parts = partitions_of(degree);
    std::map<Partition, Integer> residual = rhs;
    CoeffMap out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto it = residual.find(parts[i]);
        if (it == residual.end() || it->second == 0) {
            continue;
        }
        const Integer c = it->second;
        out.emplace(parts[i], c);
        for (std::size_t j = i; j < parts.size(); ++j) {
            const auto k = kostka(parts[i], parts[j]);
            if (k != 0) {
                residual[parts[j]] -= c * k;
            }
        }
    }
    return out;
}

// Solve a_lam = sum_mu K_{lam mu} b_mu for b, smallest in dominance first.
CoeffMap solve_kostka_columns(const CoeffMap &a, int degree)
{
    auto parts = partitions_of(degree);
    std::reverse(parts.begin(), parts.end());
    CoeffMap b;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Integer v = 0;
        if (auto it = a.find(parts[i]); it != a.end()) {
            v = it->second;
        }
        for (const auto &[mu, bm] : b) {
            if (mu.size() == degree) {
                v -= kostka(parts[i], mu) * bm;
            }
        }
        if (v != 0) {
            b.emplace(parts[i], v);
        }
    }
    return b;
}

std::vector<int> degrees_of(const SymFunc &f)
{
    std::vector<int> out;
    for (const auto &[lam, c] : f.coeffs()) {
        if (out.empty() || out.back() != lam.size()) {
            out.push_back(lam.size());
        }
    }
    return out;
}

} // namespace

BasisExpansion m_to_schur(const SymFunc &f)
{
    BasisExpansion out{Basis::s, {}, f.trunc()};
    for (int d : degrees_of(f)) {
        std::map<Partition, Integer> rhs;
        for (const auto &[lam, c] : f.coeffs()) {
            if (lam.size() == d) {
                rhs.emplace(lam, c);
            }
        }
        for (auto &[lam, c] : solve_schur_degree(rhs, d)) {
            out.coeffs.emplace(lam, std::move(c));
        }
    }
    return out;
}

BasisExpansion expand_in_h(const SymFunc &f)
{
    const auto s = m_to_schur(f);
    BasisExpansion out{Basis::h, {}, f.trunc()};
    for (int d = 0; d <= f.trunc().max_degree; ++d) {
        CoeffMap a;
        for (const auto &[lam, c] : s.coeffs) {
            if (lam.size() == d) {
                a.emplace(lam, c);
            }
        }
        if (a.empty()) {
            continue;
        }
        for (auto &[mu, c] : solve_kostka_columns(a, d)) {
            out.coeffs.emplace(mu, std::move(c));
        }
    }
    return out;
}

BasisExpansion expand_in_e(const SymFunc &f)
{
    // e_mu = sum_lam K_{lam mu} s_{lam^T}.
    const auto s = m_to_schur(f);
    BasisExpansion out{Basis::e, {}, f.trunc()};
    for (int d = 0; d <= f.trunc().max_degree; ++d) {
        CoeffMap a;
        for (const auto &[lam, c] : s.coeffs) {
            if (lam.size() == d) {
                a.emplace(conjugate(lam), c);
            }
        }
        if (a.empty()) {
            continue;
        }
        for (auto &[mu, c] : solve_kostka_columns(a, d)) {
            out.coeffs.emplace(mu, std::move(c));
        }
    }
    return out;
}

SymFunc classical_to_m(const BasisExpansion &f)
{
    SymFunc out(f.trunc);
    for (const auto &[lam, c] : f.coeffs) {
        switch (f.basis) {
            case Basis::m:
            case Basis::e:
            case Basis::h:
                out += basis_element(f.basis, lam, f.trunc) * c;
                break;
            case Basis::s:
                out += schur_to_m(lam, f.trunc) * c;
                break;
            default:
                throw DomainError("classical_to_m handles only the m, s, e and h bases");
        }
    }
    return out;
}

namespace
{

struct SchurOfMonomialCache {
    std::shared_mutex mutex;
    std::map<Partition, CoeffMap> table;
};

SchurOfMonomialCache &schur_of_monomial_cache()
{
    static SchurOfMonomialCache cache;
    return cache;
}

} // namespace

const CoeffMap &monomial_in_schur(const Partition &alpha)
{
    auto &cache = schur_of_monomial_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.table.find(alpha); it != cache.table.end()) {
            return it->second;
        }
    }
    auto coeffs = solve_schur_degree({{alpha, 1}}, alpha.size());
    std::unique_lock lock(cache.mutex);
    return cache.table.emplace(alpha, std::move(coeffs)).first->second;
}

Integer hall_inner(const BasisExpansion &f, const BasisExpansion &g)
{
    if (f.basis != Basis::s || g.basis != Basis::s) {
        throw DomainError("hall_inner expects Schur expansions");
    }
    const auto &small = f.coeffs.size() <= g.coeffs.size() ? f.coeffs : g.coeffs;
    const auto &large = f.coeffs.size() <= g.coeffs.size() ? g.coeffs : f.coeffs;
    Integer total = 0;
    for (const auto &[lam, c] : small) {
        if (auto it = large.find(lam); it != large.end()) {
            total += c * it->second;
        }
    }
    return total;
}

SplitCoeffs split_alphabets(const SymFunc &f, int a, int b)
{
    if (a < 1 || b < 1) {
        throw DomainError("split_alphabets needs positive alphabet sizes");
    }
    SplitCoeffs out;
    for (const auto &[lam, c] : f.coeffs()) {
        // Distinct values with multiplicities.
        std::vector<std::pair<int, int>> groups;
        for (int part : lam.parts()) {
            if (!groups.empty() && groups.back().first == part) {
                ++groups.back().second;
            } else {
                groups.emplace_back(part, 1);
            }
        }
        std::vector<int> take(groups.size(), 0);
        while (true) {
            std::vector<int> x_parts;
            std::vector<int> y_parts;
            for (std::size_t i = 0; i < groups.size(); ++i) {
                x_parts.insert(x_parts.end(), static_cast<std::size_t>(take[i]), groups[i].first);
                y_parts.insert(y_parts.end(), static_cast<std::size_t>(groups[i].second - take[i]), groups[i].first);
            }
            if (static_cast<int>(x_parts.size()) <= a && static_cast<int>(y_parts.size()) <= b) {
                out[{Partition(std::move(x_parts)), Partition(std::move(y_parts))}] += c;
            }
            std::size_t i = 0;
            while (i < groups.size() && take[i] == groups[i].second) {
                take[i] = 0;
                ++i;
            }
            if (i == groups.size()) {
                break;
            }
            ++take[i];
        }
    }
    std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
    return out;
}

} // namespace sgroth
