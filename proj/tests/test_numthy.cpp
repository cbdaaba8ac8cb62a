#include "genimm/bernoulli.hpp"
#include "genimm/divisibility.hpp"
#include "genimm/factorization.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <thread>

using namespace genimm::numthy;

TEST_CASE("bernoulli_modern base cases and convention") {
    CHECK(bernoulli_modern(0) == BigRational(1));
    CHECK(bernoulli_modern(1) == BigRational(BigInt(-1), BigInt(2)));
    CHECK(bernoulli_modern(2) == BigRational(BigInt(1), BigInt(6)));
    CHECK(bernoulli_modern(3) == BigRational(0));
    CHECK_THROWS_AS(bernoulli_modern(-1), std::domain_error);
}

TEST_CASE("bernoulli_modern agrees with the Akiyama-Tanigawa oracle") {
    for (int i = 0; i <= 60; ++i)
        CHECK(bernoulli_modern(i) == oracles::bernoulli_akiyama_tanigawa(i));
}

TEST_CASE("bernoulli_modern satisfies the defining binomial identity") {
    // sum_{k=0}^{i} C(i+1, k) B_k = 0 for i >= 1, with binomials computed
    // independently.
    for (int i = 1; i <= 60; ++i) {
        BigRational sum(0);
        for (int k = 0; k <= i; ++k)
            sum = sum + BigRational(oracles::binomial(i + 1, k)) * bernoulli_modern(k);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("bernoulli_top values") {
    CHECK(bernoulli_top(1) == BigRational(BigInt(1), BigInt(6)));
    CHECK(bernoulli_top(2) == BigRational(BigInt(1), BigInt(30)));
    CHECK(!(bernoulli_top(10) < BigRational(0)));
    CHECK_THROWS_AS(bernoulli_top(0), std::domain_error);
}

TEST_CASE("bernoulli_top denominators match the von Staudt-Clausen product") {
    for (int j = 1; j <= 40; ++j)
        CHECK(bernoulli_top(j).den() == oracles::von_staudt_clausen_denominator(j));
}

TEST_CASE("bernoulli_top(1)/4 reduces to denominator 24") {
    CHECK((bernoulli_top(1) / BigRational(4)).den() == 24);
}

TEST_CASE("mu values") {
    CHECK(mu(1) == 24);
    CHECK(mu(17) == 24);
    CHECK(mu(27) == 86184);
    CHECK_THROWS_AS(mu(0), std::domain_error);
}

TEST_CASE("mu reconstructs the reduced fraction B_j/(4j)") {
    for (int j = 1; j <= 40; ++j) {
        const BigRational direct = bernoulli_top(j) / BigRational(4LL * j);
        CHECK(direct.den() == mu(j));
        CHECK(BigRational(direct.num(), mu(j)) == direct);
    }
}

TEST_CASE("embedding_index equals mu") {
    for (int j = 1; j <= 30; ++j)
        CHECK(embedding_index(j) == mu(j));
}

TEST_CASE("factorize examples") {
    Factorization f = factorize(86184);
    REQUIRE(f.factors.size() == 4);
    CHECK(f.exponent_of(2) == 3);
    CHECK(f.exponent_of(3) == 4);
    CHECK(f.exponent_of(7) == 1);
    CHECK(f.exponent_of(19) == 1);
    CHECK(f.str() == "2^3·3^4·7·19");

    CHECK(factorize(1).factors.empty());
    CHECK(factorize(1).str() == "1");

    Factorization g = factorize(35);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.exponent_of(5) == 1);
    CHECK(g.exponent_of(7) == 1);

    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize reconstructs its input with increasing prime factors") {
    for (long n = 1; n <= 3000; ++n) {
        const Factorization f = factorize(n);
        CHECK(f.value() == n);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            CHECK(is_prime(f.factors[i].first));
            CHECK(f.factors[i].second >= 1);
            if (i > 0)
                CHECK(f.factors[i - 1].first < f.factors[i].first);
        }
    }
}

TEST_CASE("p_adic_valuation") {
    CHECK(p_adic_valuation(24, 3) == 1);
    CHECK(p_adic_valuation(86184, 3) == 4);
    CHECK(p_adic_valuation(35, 2) == 0);
    CHECK_THROWS_AS(p_adic_valuation(24, 4), std::domain_error);
    CHECK_THROWS_AS(p_adic_valuation(0, 2), std::domain_error);
}

TEST_CASE("imm_group case table") {
    CHECK(imm_group(4) == GroupDescriptor::infinite_cyclic());
    CHECK(imm_group(5) == GroupDescriptor::cyclic_of_order(2));
    CHECK(imm_group(7) == GroupDescriptor::trivial());
    CHECK(imm_group(4).str() == "Z");
    CHECK(imm_group(5).str() == "Z/2");
    CHECK(imm_group(7).str() == "0");
    CHECK_THROWS_AS(imm_group(1), std::domain_error);
}

TEST_CASE("imm_group depends only on m mod 4, with both even classes Z") {
    for (int m = 2; m <= 50; ++m) {
        CHECK(imm_group(m) == imm_group(m % 4 == 0 ? 4 : m % 4 == 2 ? 2 : m % 4 == 1 ? 5 : 7));
        if (m % 2 == 0)
            CHECK(imm_group(m).kind == GroupKind::InfiniteCyclic);
    }
}

TEST_CASE("l_divisor congruence cases") {
    CHECK(l_divisor(2) == 1);
    CHECK(l_divisor(5) == 3);
    CHECK(l_divisor(7) == 8);
    CHECK(l_divisor(34) == 35);
    CHECK(l_divisor(54) == 55);
    CHECK_THROWS_AS(l_divisor(1), std::domain_error);
}

TEST_CASE("l_divisor matches the brute-force enumeration") {
    for (int m = 2; m <= 60; ++m)
        CHECK(l_divisor(m) == l_divisor_bruteforce(m, 64));
}

TEST_CASE("l_divisor_bruteforce examples") {
    CHECK(l_divisor_bruteforce(34, 64) == 35);
    CHECK(l_divisor_bruteforce(2, 64) == 1);
    CHECK(l_divisor_bruteforce(54, 64) == 55);
}

TEST_CASE("l_divisor divides m+1 for even m") {
    for (int m = 2; m <= 80; m += 2)
        CHECK((m + 1) % l_divisor(m) == 0);
}

TEST_CASE("l_range reports") {
    CHECK(l_range(34) == LRangeReport{34, 35, 35, true});
    CHECK(l_range(54) == LRangeReport{54, 55, 55, true});
    CHECK(l_range(2) == LRangeReport{2, 1, 3, false});
    // m = 3 mod 4 saturates: divisor equals the realizable subgroup.
    CHECK(l_range(7) == LRangeReport{7, 8, 8, true});
    CHECK(l_range(5) == LRangeReport{5, 3, 6, false});
}

TEST_CASE("l_range invariants: realizable subgroup is a multiple of the divisor") {
    for (int m = 2; m <= 60; ++m) {
        const LRangeReport rep = l_range(m);
        CHECK(rep.realizable_subgroup == m + 1);
        CHECK(rep.realizable_subgroup % rep.divisor == 0);
        CHECK(rep.exact == (rep.divisor == rep.realizable_subgroup));
    }
}

TEST_CASE("is_l_trivial") {
    CHECK(is_l_trivial(17));
    CHECK_FALSE(is_l_trivial(1));
    CHECK(is_l_trivial(27));
    CHECK_THROWS_AS(is_l_trivial(0), std::domain_error);
}

TEST_CASE("is_l_trivial is exactly exactness of the even-case range") {
    for (int j = 1; j <= 40; ++j)
        CHECK(is_l_trivial(j) == l_range(2 * j).exact);
}

TEST_CASE("bernoulli cache is safe under concurrent callers") {
    std::vector<std::thread> workers;
    std::vector<BigRational> results(8);
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&results, t] { results[t] = bernoulli_top(30 + t % 3); });
    for (auto& w : workers)
        w.join();
    for (int t = 0; t < 8; ++t)
        CHECK(results[t] == bernoulli_top(30 + t % 3));
}

TEST_CASE("BigRational stays in lowest terms with positive denominator") {
    const BigRational q(BigInt(-6), BigInt(-8));
    CHECK(q.num() == 3);
    CHECK(q.den() == 4);
    const BigRational r(BigInt(6), BigInt(-8));
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(r.str() == "-3/4");
    CHECK(BigRational(7).str() == "7");
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
}
