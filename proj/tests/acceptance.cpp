// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sgroth/cli.hpp>
#include <sgroth/grothendieck.hpp>
#include <sgroth/tableaux.hpp>
#include <sgroth/verify.hpp>

#include "oracles.hpp"

using namespace sgroth;

namespace
{

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failed = 0;

void report(int number, const std::string &name, Check c, double seconds)
{
    std::ostringstream line;
    line << "criterion " << number << " " << name << ": " << (c.ok ? "PASS" : "FAIL");
    line.precision(2);
    line << std::fixed << " (" << seconds << " s)";
    if (!c.ok) {
        line << " " << c.detail;
        ++failed;
    }
    std::cout << line.str() << std::endl;
}

template <typename F>
void criterion(int number, const std::string &name, F body)
{
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
        body(c);
    } catch (const std::exception &e) {
        c.ok = false;
        c.detail = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report(number, name, c, elapsed.count());
}

TruncationProfile at(int d)
{
    return TruncationProfile::faithful(d);
}

SymFunc m(std::initializer_list<std::pair<Partition, int>> terms, TruncationProfile t)
{
    SymFunc f(t);
    for (const auto &[lam, c] : terms) {
        f.add_term(lam, c);
    }
    return f;
}

Partition column(int k)
{
    return conjugate(Partition{k});
}

void suite_passes(Check &c, const Report &r)
{
    c.require(r.passed(), r.suite + " reports " + std::to_string(r.failures()) + " failures");
    for (const auto &k : r.cases) {
        c.require(k.holds == !k.witness.has_value(), r.suite + " witness out of step with verdict");
    }
}

Basis basis_of(char tag)
{
    return tag == 'm' ? Basis::m : tag == 'e' ? Basis::e : Basis::h;
}

} // namespace

int main()
{
    criterion(1, "g Stembridge equality, n <= 4", [](Check &c) {
        for (int n = 1; n <= 4; ++n) {
            const auto r = verify_stembridge_g(n);
            suite_passes(c, r);
            const auto rho = staircase(n);
            c.require(r.cases.size() == oracle::count_subpartitions(rho), "case count differs from brute force");
            c.require(r.modulus == std::optional(TruncationProfile(rho.size(), rho.size())), "wrong profile");
        }
    });

    criterion(2, "G Stembridge equality, n <= 3", [](Check &c) {
        for (int n = 1; n <= 3; ++n) {
            const auto r = verify_stembridge_G(n, 3);
            suite_passes(c, r);
            const auto rho = staircase(n);
            c.require(r.cases.size() == oracle::count_subpartitions(rho), "case count differs from brute force");
            for (const auto &k : r.cases) {
                const auto mu = Partition(k.inputs["mu"].get<std::vector<int>>());
                c.require(k.inputs["trunc"]["max_deg"] == rho.size() - mu.size() + 3, "wrong truncation degree");
            }
        }
    });

    criterion(3, "worked examples", [](Check &c) {
        c.require(schur(SkewShape(Partition{2, 1, 1}, Partition{1}), at(4)) == m({{{2, 1}, 1}, {{1, 1, 1}, 3}}, at(4)),
                  "s[(2,1,1)/(1)]");
        c.require(dual_g(SkewShape(Partition{2, 2}, Partition{1}), at(3)) ==
                      m({{{2}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{1, 1, 1}, 2}}, at(3)),
                  "g[(2,2)/(1)]");
        const SetFilling svt(SkewShape(Partition{5, 4, 3}, Partition{2, 1}),
                             {{1, 2}, {2, 3, 4}, {7}, {3}, {3, 5}, {5}, {2}, {4, 5, 6}, {6}});
        c.require(is_svt(svt), "displayed set-valued tableau invalid");
        std::string word;
        for (int x : reverse_reading_word(svt)) {
            word += std::to_string(x);
        }
        c.require(word == "743252153636542", "reading word " + word);
        c.require(is_lattice(Word{1, 1, 2, 1, 3, 2, 2}), "1121322 should be lattice");
        c.require(!is_lattice(Word{1, 2, 1, 2, 2, 1}), "121221 should not be lattice");
        c.require(star_join(Partition{2, 1}, Partition{4}) == SkewShape(Partition{6, 5, 4}, Partition{4, 4}),
                  "(2,1) * (4)");
    });

    criterion(4, "c equality, n <= 4", [](Check &c) {
        for (int n = 1; n <= 4; ++n) {
            const auto rho = staircase(n);
            for (int k = 1; k <= n; ++k) {
                for (const auto &nu : subpartitions(rho)) {
                    const auto a = lr_coeff(Partition{k}, nu, rho);
                    const auto b = lr_coeff(column(k), nu, rho);
                    c.require(a == b, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " nu=" + to_string(nu));
                }
            }
        }
        // The counting itself, against generate-and-filter on the smaller staircases.
        for (int n = 1; n <= 2; ++n) {
            const auto rho = staircase(n);
            for (int k = 1; k <= n; ++k) {
                for (const auto &nu : subpartitions(rho)) {
                    const auto s = star_join(nu, Partition{k});
                    c.require(lr_coeff(Partition{k}, nu, rho).value == oracle::count_lattice(s.outer(), s.inner(), rho),
                              "lattice count differs from brute force");
                }
            }
        }
        suite_passes(c, verify_lattice_rules(4, 0));
    });

    criterion(5, "alpha equality n <= 4 and G[rho/(k)] = G[rho/(1^k)] n <= 3", [](Check &c) {
        for (int n = 1; n <= 4; ++n) {
            const auto rho = staircase(n);
            for (int k = 1; k <= n; ++k) {
                const SkewShape by_row(rho, Partition{k});
                const SkewShape by_column(rho, column(k));
                for (int d = by_row.size(); d <= by_row.size() + 2; ++d) {
                    for (const auto &nu : partitions_of(d)) {
                        c.require(alpha(by_row, nu) == alpha(by_column, nu),
                                  "alpha n=" + std::to_string(n) + " k=" + std::to_string(k) + " nu=" + to_string(nu));
                    }
                }
                if (n <= 3) {
                    const auto t = at(by_row.size() + 3);
                    c.require(big_G(by_row, t) == big_G(by_column, t),
                              "G n=" + std::to_string(n) + " k=" + std::to_string(k));
                }
            }
        }
    });

    criterion(6, "basis identities", [](Check &c) {
        const int D = 7;
        const auto t = at(D);
        for (int k = 1; k <= 4; ++k) {
            SymFunc alternating(t);
            for (int n = k; n <= D; ++n) {
                const auto sign = (n - k) % 2 == 0 ? 1 : -1;
                alternating += basis_element(Basis::e, Partition{n}, t) * (oracle::binomial(n - 1, k - 1) * sign);
            }
            c.require(big_G(SkewShape(column(k)), t) == alternating, "G[1^k] alternating sum, k=" + std::to_string(k));
            CoeffMap binomials;
            for (int n = k; n <= D; ++n) {
                binomials[column(n)] = oracle::binomial(n - 1, k - 1);
            }
            c.require(expand_in_G(basis_element(Basis::e, Partition{k}, t)).coeffs == binomials,
                      "e_k in G, k=" + std::to_string(k));
        }
        for (int k = 0; k <= 6; ++k) {
            c.require(dual_g(SkewShape(Partition{k}), at(6)) == basis_element(Basis::h, Partition{k}, at(6)),
                      "g[(k)] = h_k, k=" + std::to_string(k));
        }
        suite_passes(c, verify_basis_identities(BasisBounds{}));
    });

    criterion(7, "Hopf identities", [](Check &c) {
        const HopfBounds b;
        c.require(b.coproduct_max_size == 5 && b.skew_g_n == 4 && b.skew_G_n == 3 && b.extra_degrees == 2 &&
                      b.ek_n == 4 && b.ek_k == 4 && b.adjunction_factor == 3 && b.adjunction_target == 5 &&
                      b.duality_max == 5,
                  "bounds differ from the stated ones");
        suite_passes(c, verify_hopf(b));
    });

    criterion(8, "converse scan up to size 12", [](Check &c) {
        const auto r = converse_scan(12);
        suite_passes(c, r);
        const Json want = Json::array({Json::array(), Json::array({1}), Json::array({2, 1}), Json::array({3, 2, 1}),
                                       Json::array({4, 3, 2, 1})});
        c.require(r.summary["passing"] == want, "passing set " + r.summary["passing"].dump());
        c.require(r.cases.size() == partitions_up_to(12).size(), "not every partition scanned");
    });

    criterion(9, "alpha recurrence findings", [](Check &c) {
        const auto r = verify_alpha_recurrences(4);
        // (c) the stratified form holds on every case.
        suite_passes(c, r);
        c.require(r.cases.size() == r.findings.size() && !r.cases.empty(), "refined and literal cases out of step");
        // (a) the literal form is confirmed wherever it holds.
        std::size_t holds = 0;
        const Case *documented = nullptr;
        for (const auto &f : r.findings) {
            holds += f.holds ? 1 : 0;
            c.require(f.holds == !f.witness.has_value(), "finding witness out of step with verdict");
            if (f.inputs["n"] == 2 && f.inputs["k"] == 1 && f.inputs["nu"] == Json::array({1, 1})) {
                documented = &f;
            }
        }
        c.require(holds > 0, "the literal form never holds");
        // (b) the small discrepancy is recorded with a witness that reruns it.
        c.require(documented != nullptr && !documented->holds, "n=2, k=1, nu=(1,1) not recorded as failing");
        if (documented != nullptr && documented->witness) {
            std::istringstream words((*documented->witness)["rerun"].get<std::string>());
            std::vector<std::string> args;
            for (std::string w; words >> w;) {
                args.push_back(w);
            }
            args.erase(args.begin());
            args.insert(args.end(), {"--format", "json"});
            std::ostringstream out, err;
            c.require(cli::run(args, out, err) == cli::exit_ok, "rerun command failed");
            const auto again = Json::parse(out.str());
            bool reproduced = !again["findings"].empty();
            for (const auto &f : again["findings"]) {
                reproduced = reproduced && f["holds"] == false && f["inputs"]["nu"] == Json::array({1, 1});
            }
            c.require(reproduced, "rerun does not reproduce the discrepancy");
        }
        c.require(oracle::count_lattice(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1,
                  "direct count for the documented case");
        std::cout << "  literal form holds on " << holds << " of " << r.findings.size() << " cases" << std::endl;
    });

    criterion(10, "multiplication against explicit polynomials", [](Check &c) {
        std::mt19937_64 rng(default_seed);
        const char tags[] = {'m', 'e', 'h'};
        for (int i = 0; i < 100; ++i) {
            const int D = 1 + static_cast<int>(rng() % 6);
            const int d1 = static_cast<int>(rng() % static_cast<unsigned>(D + 1));
            const int d2 = static_cast<int>(rng() % static_cast<unsigned>(D - d1 + 1));
            const auto p1 = partitions_of(d1);
            const auto p2 = partitions_of(d2);
            const auto lam = p1[rng() % p1.size()];
            const auto mu = p2[rng() % p2.size()];
            const char a = tags[rng() % 3];
            const char b = tags[rng() % 3];
            const auto t = at(D);
            const auto product = multiply(basis_element(basis_of(a), lam, t), basis_element(basis_of(b), mu, t));
            const auto want =
                oracle::multiply(oracle::basis_polynomial(a, lam, D), oracle::basis_polynomial(b, mu, D), D);
            c.require(oracle::expand(product, D) == want, std::string(1, a) + "[" + to_string(lam) + "] * " +
                                                              std::string(1, b) + "[" + to_string(mu) + "]");
        }
        suite_passes(c, verify_multiply(100, 6));
    });

    std::cout << (failed == 0 ? "all criteria PASS" : std::to_string(failed) + " criteria FAIL") << std::endl;
    return failed == 0 ? 0 : 1;
}
