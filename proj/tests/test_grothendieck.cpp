#include <doctest.h>

#include <sgroth/errors.hpp>
#include <sgroth/grothendieck.hpp>

#include "oracles.hpp"

using namespace sgroth;

namespace
{

SymFunc m(std::initializer_list<std::pair<Partition, int>> terms, TruncationProfile t)
{
    SymFunc f(t);
    for (const auto &[lam, c] : terms) {
        f.add_term(lam, c);
    }
    return f;
}

TruncationProfile at(int d)
{
    return TruncationProfile::faithful(d);
}

CoeffMap as_coeffs(const std::map<Partition, Integer> &m)
{
    return CoeffMap(m.begin(), m.end());
}

BasisExpansion single(Basis b, const Partition &lam, TruncationProfile t)
{
    return BasisExpansion{b, {{lam, 1}}, t};
}

Integer pair_schur(const SymFunc &a, const SymFunc &b)
{
    return hall_inner(m_to_schur(a), m_to_schur(b));
}

} // namespace

TEST_CASE("skew Schur functions")
{
    CHECK(schur(SkewShape(Partition{2, 1, 1}, Partition{1}), at(4)) == m({{{2, 1}, 1}, {{1, 1, 1}, 3}}, at(4)));
    CHECK(schur(SkewShape(Partition{2, 1}, Partition{2, 1}), at(3)) == SymFunc::one(at(3)));
    CHECK(schur(SkewShape(Partition{2}), at(2)) == m({{{2}, 1}, {{1, 1}, 1}}, at(2)));
    CHECK_THROWS_AS(schur(SkewShape(Partition{3}), at(2)), DegreeError);
}

TEST_CASE("dual stable Grothendieck polynomials")
{
    CHECK(dual_g(SkewShape(Partition{2, 2}, Partition{1}), at(3)) ==
          m({{{2}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{1, 1, 1}, 2}}, at(3)));
    for (int k = 0; k <= 5; ++k) {
        CHECK(dual_g(SkewShape(Partition{k}), at(5)) == basis_element(Basis::h, Partition{k}, at(5)));
    }
    CHECK(dual_g(SkewShape(), at(2)) == SymFunc::one(at(2)));
    CHECK_THROWS_AS(dual_g(SkewShape(Partition{2, 1}), at(2)), DegreeError);
}

TEST_CASE("stable Grothendieck polynomials")
{
    CHECK(big_G(SkewShape(Partition{1}), at(3)) == m({{{1}, 1}, {{1, 1}, -1}, {{1, 1, 1}, 1}}, at(3)));
    CHECK(big_G(SkewShape(), at(3)) == SymFunc::one(at(3)));
    CHECK(big_G(SkewShape(Partition{1, 1}), at(2)) == m({{{1, 1}, 1}}, at(2)));
    CHECK(big_G(SkewShape(Partition{3}), at(2)).is_zero());
}

TEST_CASE("rook-strip sums")
{
    const auto rho = staircase(3);
    const auto t = at(7);
    for (int k = 1; k <= 3; ++k) {
        CHECK(big_G_double(rho, Partition{k}, t) ==
              big_G(SkewShape(rho, Partition{k}), t) - big_G(SkewShape(rho, Partition{k - 1}), t));
    }
    CHECK(big_G_double(Partition{3, 1}, Partition{}, t) == big_G(SkewShape(Partition{3, 1}), t));
    CHECK_THROWS_AS(big_G_double(Partition{2}, Partition{1, 1}, t), ContainmentError);
}

TEST_CASE("Littlewood-Richardson counts")
{
    CHECK(lr_coeff(Partition{1}, Partition{1}, Partition{2}) == SignedCount{1, 0});
    CHECK(lr_coeff(Partition{1}, Partition{1}, Partition{2, 1}) == SignedCount{1, 1});
    CHECK(lr_coeff(Partition{1}, Partition{1}, Partition{2, 1}).signed_value() == -1);
    CHECK(lr_coeff(Partition{1}, Partition{1}, Partition{3}).value == 0);
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (const auto &nu : subpartitions(staircase(n))) {
                CHECK(lr_coeff(Partition{k}, nu, staircase(n)).value ==
                      lr_coeff(conjugate(Partition{k}), nu, staircase(n)).value);
            }
        }
    }
}

TEST_CASE("skew Littlewood-Richardson counts")
{
    const SkewShape s(Partition{2, 1}, Partition{1});
    CHECK(alpha(s, Partition{2}) == SignedCount{1, 0});
    CHECK(alpha(s, Partition{1, 1}) == SignedCount{1, 0});
    CHECK(alpha(s, Partition{2, 1}) == SignedCount{1, 1});
    // The same three terms as G_1 G_1 = G_2 + G_11 - G_21.
    for (const auto &lam : {Partition{2}, Partition{1, 1}, Partition{2, 1}}) {
        CHECK(alpha(s, lam) == lr_coeff(Partition{1}, Partition{1}, lam));
    }
}

TEST_CASE("g expansions")
{
    for (int k = 1; k <= 5; ++k) {
        CHECK(expand_in_g(basis_element(Basis::h, Partition{k}, at(5))).coeffs == CoeffMap{{Partition{k}, 1}});
    }
    const SkewShape s(Partition{2, 2}, Partition{1});
    const auto g = expand_in_g(dual_g(s, at(3)));
    CHECK(g.basis == Basis::g);
    CoeffMap top;
    for (const auto &[lam, c] : g.coeffs) {
        if (lam.size() == 3) {
            top[lam] = c;
        }
    }
    CHECK(top == m_to_schur(schur(s, at(3))).coeffs);
    CHECK(to_symfunc(g, at(3)) == dual_g(s, at(3)));
}

TEST_CASE("G expansions")
{
    const int D = 6;
    for (int k = 1; k <= 4; ++k) {
        CoeffMap want;
        for (int n = k; n <= D; ++n) {
            want[conjugate(Partition{n})] = oracle::binomial(n - 1, k - 1);
        }
        CHECK(expand_in_G(basis_element(Basis::e, Partition{k}, at(D))).coeffs == want);
        // Under conjugation the support moves to the one-row partitions.
        CoeffMap flipped;
        for (const auto &[lam, c] : want) {
            flipped[conjugate(lam)] = c;
        }
        const auto e = expand_in_G(basis_element(Basis::e, Partition{k}, at(D)));
        CHECK(tau(e).coeffs == flipped);
        CHECK(expand_in_G(to_symfunc(tau(e), at(D))).coeffs == flipped);
    }
}

TEST_CASE("conjugation involutions")
{
    const auto t = at(4);
    CHECK(tau(single(Basis::G, Partition{1, 1, 1}, t)).coeffs == CoeffMap{{Partition{3}, 1}});
    CHECK(tau_bar(single(Basis::g, Partition{3}, t)).coeffs == CoeffMap{{Partition{1, 1, 1}, 1}});
    CHECK(tau_bar(single(Basis::g, Partition{2, 1}, t)).coeffs == CoeffMap{{Partition{2, 1}, 1}});
    const BasisExpansion f{Basis::G, {{Partition{3, 1}, 2}, {Partition{2}, -1}, {Partition{1, 1, 1}, 5}}, t};
    CHECK(tau(tau(f)) == f);
    BasisExpansion fg = f;
    fg.basis = Basis::g;
    CHECK(tau_bar(tau_bar(fg)) == fg);
    CHECK_THROWS_AS(tau(fg), DomainError);
    CHECK_THROWS_AS(tau_bar(f), DomainError);
}

TEST_CASE("skewing")
{
    const auto rho = staircase(3);
    const auto a = dual_g(SkewShape(rho), at(6));
    CHECK(skew_by(single(Basis::s, Partition{}, at(6)), a) == a);
    CHECK(skew_by(single(Basis::G, Partition{}, at(6)), a) == a);
    for (const auto &mu : subpartitions(rho)) {
        CHECK(skew_by(single(Basis::G, mu, at(6)), a) == dual_g(SkewShape(rho, mu), at(6)));
    }
    const auto r2 = staircase(2);
    for (const auto &mu : subpartitions(r2)) {
        const int D = 5;
        const auto big = big_G(SkewShape(r2), at(D + mu.size()));
        CHECK(skew_by(single(Basis::g, mu, at(D)), big).with_trunc(at(D)) == big_G_double(r2, mu, at(D)));
    }
    CHECK_THROWS_AS(skew_by(single(Basis::G, Partition{1}, at(3)), a), DegreeError);
}

TEST_CASE("property: constructors agree with generate-and-filter")
{
    for (const auto &lam : partitions_up_to(5)) {
        for (const auto &mu : subpartitions(lam)) {
            const SkewShape s(lam, mu);
            const int d = std::max(s.size(), 1);
            REQUIRE(schur(s, at(d)).coeffs() ==
                    as_coeffs(oracle::monomial_coefficients(
                        oracle::generating_polynomial(lam, mu, oracle::Rule::ssyt, d, d))));
            REQUIRE(dual_g(s, at(d)).coeffs() ==
                    as_coeffs(oracle::monomial_coefficients(
                        oracle::generating_polynomial(lam, mu, oracle::Rule::rpp, d, d))));
            if (s.size() <= 3) {
                const int D = s.size() + 1;
                REQUIRE(big_G(s, at(D)).coeffs() ==
                        as_coeffs(oracle::monomial_coefficients(
                            oracle::generating_polynomial(lam, mu, oracle::Rule::svt, D, D))));
            }
        }
    }
}

TEST_CASE("property: degree grading")
{
    for (const auto &lam : partitions_up_to(5)) {
        for (const auto &mu : subpartitions(lam)) {
            const SkewShape s(lam, mu);
            const int d = s.size();
            const int D = d + 2;
            const auto sc = schur(s, at(D));
            REQUIRE(sc == sc.homogeneous_part(d));
            const auto g = dual_g(s, at(D));
            REQUIRE(g.max_degree() == std::optional<int>(d));
            REQUIRE(g.homogeneous_part(d) == sc);
            const auto G = big_G(s, at(D));
            REQUIRE(G.min_degree() == std::optional<int>(d));
            REQUIRE(G.homogeneous_part(d) == sc);
        }
    }
}

TEST_CASE("property: G and g are dual bases")
{
    const int D = 5;
    const auto ps = partitions_up_to(D);
    std::vector<SymFunc> Gs;
    std::vector<SymFunc> gs;
    for (const auto &lam : ps) {
        Gs.push_back(big_G(SkewShape(lam), at(D)));
        gs.push_back(dual_g(SkewShape(lam), at(D)));
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = 0; j < ps.size(); ++j) {
            REQUIRE(pair_schur(Gs[i], gs[j]) == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("property: products of G expand by lattice counts")
{
    for (const auto &nu : partitions_up_to(4)) {
        for (const auto &mu : partitions_up_to(4 - nu.size())) {
            const int D = nu.size() + mu.size() + 2;
            const auto t = at(D);
            const auto lhs = multiply(big_G(SkewShape(nu), t), big_G(SkewShape(mu), t));
            SymFunc rhs(t);
            for (const auto &lam : partitions_up_to(D)) {
                const auto c = lr_coeff(nu, mu, lam);
                if (c.value != 0) {
                    REQUIRE(lam.size() >= nu.size() + mu.size());
                    rhs += big_G(SkewShape(lam), t) * c.signed_value();
                }
            }
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("property: skew G expand by lattice counts")
{
    for (const auto &lam : partitions_up_to(6)) {
        for (const auto &mu : subpartitions(lam)) {
            const SkewShape s(lam, mu);
            const int D = s.size() + 2;
            const auto t = at(D);
            SymFunc rhs(t);
            for (const auto &nu : partitions_up_to(D)) {
                const auto a = alpha(s, nu);
                if (a.value != 0) {
                    rhs += big_G(SkewShape(nu), t) * a.signed_value();
                }
            }
            REQUIRE(big_G(s, t) == rhs);
        }
    }
}

TEST_CASE("property: coproduct of g")
{
    for (const auto &lam : partitions_up_to(5)) {
        const int D = std::max(lam.size(), 1);
        const auto t = at(D);
        SplitCoeffs want;
        for (const auto &mu : subpartitions(lam)) {
            const auto x = dual_g(SkewShape(mu), t);
            const auto y = dual_g(SkewShape(lam, mu), t);
            for (const auto &[px, cx] : x.coeffs()) {
                for (const auto &[py, cy] : y.coeffs()) {
                    want[{px, py}] += cx * cy;
                }
            }
        }
        std::erase_if(want, [](const auto &kv) { return kv.second == 0; });
        REQUIRE(split_alphabets(dual_g(SkewShape(lam), t), D, D) == want);
    }
}

TEST_CASE("property: coproduct of G on staircases")
{
    for (int n = 2; n <= 3; ++n) {
        const auto rho = staircase(n);
        const int D = rho.size() + 2;
        const auto t = at(D);
        SplitCoeffs want;
        for (const auto &nu : subpartitions(rho)) {
            const auto x = big_G(SkewShape(nu), t);
            const auto y = big_G_double(rho, nu, t);
            for (const auto &[px, cx] : x.coeffs()) {
                for (const auto &[py, cy] : y.coeffs()) {
                    if (px.size() + py.size() <= D) {
                        want[{px, py}] += cx * cy;
                    }
                }
            }
        }
        std::erase_if(want, [](const auto &kv) { return kv.second == 0; });
        REQUIRE(split_alphabets(big_G(SkewShape(rho), t), D, D) == want);
    }
}

TEST_CASE("property: rook-strip sums over subpartitions give skew G")
{
    for (int n = 1; n <= 3; ++n) {
        const auto rho = staircase(n);
        const auto t = at(rho.size() + 2);
        for (const auto &mu : subpartitions(rho)) {
            SymFunc sum(t);
            for (const auto &sigma : subpartitions(mu)) {
                sum += big_G_double(rho, sigma, t);
            }
            REQUIRE(sum == big_G(SkewShape(rho, mu), t));
        }
    }
}

TEST_CASE("property: skewing is adjoint to multiplication")
{
    const int D = 5;
    const auto t = at(D);
    for (const auto &f : partitions_up_to(3)) {
        const auto fs = schur_to_m(f, t);
        for (const auto &g : partitions_up_to(3)) {
            const auto gs = schur_to_m(g, t);
            const auto fg = multiply(fs, gs);
            for (const auto &a : partitions_up_to(D)) {
                const auto as = schur_to_m(a, t);
                const auto lhs = pair_schur(gs, skew_by(single(Basis::s, f, t), as));
                REQUIRE(lhs == pair_schur(fg, as));
            }
        }
    }
}

TEST_CASE("property: expansion round trips")
{
    for (const auto &lam : partitions_up_to(5)) {
        const int d = std::max(lam.size(), 1);
        REQUIRE(expand_in_g(dual_g(SkewShape(lam), at(d))).coeffs == CoeffMap{{lam, 1}});
        const auto G = expand_in_G(big_G(SkewShape(lam), at(d + 2)));
        REQUIRE(G.coeffs == CoeffMap{{lam, 1}});
        REQUIRE(to_symfunc(G, at(d + 2)) == big_G(SkewShape(lam), at(d + 2)));
    }
}

TEST_CASE("property: conjugation commutes with truncation")
{
    const auto rho = staircase(3);
    for (const auto &mu : subpartitions(rho)) {
        const SkewShape s(rho, mu);
        const int D = s.size() + 3;
        const auto full = tau(expand_in_G(big_G(s, at(D))));
        for (int d = s.size(); d < D; ++d) {
            CoeffMap cut;
            for (const auto &[lam, c] : full.coeffs) {
                if (lam.size() <= d) {
                    cut[lam] = c;
                }
            }
            REQUIRE(tau(expand_in_G(big_G(s, at(d)))).coeffs == cut);
        }
        for (const auto &[lam, c] : full.coeffs) {
            REQUIRE(lam.size() <= D);
        }
    }
}

TEST_CASE("property: Schur coefficients of expansions")
{
    const auto t = at(5);
    const BasisExpansion f{Basis::g, {{Partition{2, 1}, 1}, {Partition{2}, -3}}, t};
    const auto direct = m_to_schur(to_symfunc(f, t)).coeffs;
    CHECK(schur_coefficients(f, t) == direct);
    const BasisExpansion G{Basis::G, {{Partition{1}, 1}}, at(3)};
    CHECK_THROWS_AS(schur_coefficients(G, t), DegreeError);
}
