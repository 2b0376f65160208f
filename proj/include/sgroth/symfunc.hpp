#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <utility>

#include <sgroth/integer.hpp>
#include <sgroth/shapes.hpp>

namespace sgroth
{

// Symmetric functions are kept up to degree `max_degree` in `num_vars`
// variables. Equality of symmetric functions up to degree D is decided in any
// number of variables >= D, so profiles with num_vars < max_degree are
// rejected.
struct TruncationProfile {
    int max_degree = 0;
    int num_vars = 1;

    TruncationProfile() = default;
    TruncationProfile(int max_degree_, int num_vars_);

    // (D, D), with at least one variable.
    static TruncationProfile faithful(int max_degree);

    friend bool operator==(const TruncationProfile &, const TruncationProfile &) = default;
};

using CoeffMap = std::map<Partition, Integer>;

// A truncated symmetric function in the monomial basis: sum of c_lambda m_lambda
// over |lambda| <= D. Zero coefficients are never stored and terms above the
// truncation degree are discarded on entry.
class SymFunc
{
public:
    explicit SymFunc(TruncationProfile trunc);
    SymFunc(TruncationProfile trunc, const CoeffMap &coeffs);

    static SymFunc one(TruncationProfile trunc);

    const CoeffMap &coeffs() const noexcept
    {
        return m_coeffs;
    }
    const TruncationProfile &trunc() const noexcept
    {
        return m_trunc;
    }
    Integer coefficient(const Partition &lam) const;
    void add_term(const Partition &lam, const Integer &c);

    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;
    SymFunc homogeneous_part(int degree) const;
    // Same coefficients, reinterpreted under another profile (terms above the
    // new degree are dropped).
    SymFunc with_trunc(TruncationProfile trunc) const;

    SymFunc &operator+=(const SymFunc &other);
    SymFunc &operator-=(const SymFunc &other);
    SymFunc operator-() const;
    SymFunc &operator*=(const Integer &scalar);

    friend bool operator==(const SymFunc &, const SymFunc &) = default;

private:
    TruncationProfile m_trunc;
    CoeffMap m_coeffs;
};

SymFunc operator+(SymFunc a, const SymFunc &b);
SymFunc operator-(SymFunc a, const SymFunc &b);
SymFunc operator*(SymFunc a, const Integer &scalar);

SymFunc add(const SymFunc &f, const SymFunc &g);
// Product in the ring of symmetric functions, truncated to the common degree.
SymFunc multiply(const SymFunc &f, const SymFunc &g);

enum class Basis { m, s, e, h, g, G };

std::string_view to_string(Basis b) noexcept;
Basis parse_basis(std::string_view text);

struct BasisExpansion {
    Basis basis = Basis::m;
    CoeffMap coeffs;
    TruncationProfile trunc;

    friend bool operator==(const BasisExpansion &, const BasisExpansion &) = default;
};

// m_lambda, e_lambda or h_lambda in monomial coordinates. Throws DegreeError
// when |lambda| exceeds the truncation degree and DomainError for other tags.
SymFunc basis_element(Basis tag, const Partition &lam, TruncationProfile trunc);

// Number of SSYT of shape `shape` with content `content`.
Integer kostka(const Partition &shape, const Partition &content);

// s_lambda = sum over mu of K_{lambda mu} m_mu.
SymFunc schur_to_m(const Partition &lam, TruncationProfile trunc);

// Schur coefficients of f, solved degree by degree against the unitriangular
// Kostka system (dominant partitions first).
BasisExpansion m_to_schur(const SymFunc &f);

// Expansion of f in h_lambda or e_lambda, through the Schur expansion.
BasisExpansion expand_in_h(const SymFunc &f);
BasisExpansion expand_in_e(const SymFunc &f);

// Monomial coordinates of an m/s/e/h expansion.
SymFunc classical_to_m(const BasisExpansion &f);

// Cached Schur expansion of a single monomial symmetric function.
const CoeffMap &monomial_in_schur(const Partition &alpha);

// Pairing making the Schur functions orthonormal. Both arguments must be
// Schur expansions.
Integer hall_inner(const BasisExpansion &f, const BasisExpansion &g);

using SplitCoeffs = std::map<std::pair<Partition, Partition>, Integer>;

// Coefficients of m_alpha(x) m_beta(y) in f(x_1..x_a, y_1..y_b).
SplitCoeffs split_alphabets(const SymFunc &f, int a, int b);

} // namespace sgroth
