#include "iesat/formula.hpp"

#include "helpers.hpp"
#include "iesat/oracle.hpp"

#include <doctest.h>

#include <optional>
#include <vector>

using namespace iesat;
using iesat::testing::C;
using iesat::testing::cnf;
using iesat::testing::dnf;

TEST_CASE("clause canonicalization sorts by variable then sign, dedups") {
    const Clause c({4, -2, 4, 1, -2});
    CHECK(std::vector<Lit>(c.lits().begin(), c.lits().end()) == std::vector<Lit>{1, -2, 4});
    CHECK(c.size() == 3);
    CHECK(c.max_var() == 4);
    CHECK(c.contains(-2));
    CHECK_FALSE(c.contains(2));

    // {v, -v} is kept (and marks the clause inconsistent), not deduped away.
    const Clause contradictory({1, -1});
    CHECK(contradictory.size() == 2);
    CHECK_FALSE(contradictory.consistent());
    CHECK(C({}).consistent());
    CHECK(C({3, -5}).consistent());

    CHECK_THROWS_AS(Clause({1, 0, 2}), MalformedError);
}

TEST_CASE("merge: union when consistent, nothing when contradictory") {
    CHECK(merge(C({-1, 2}), C({2, 3})) == C({-1, 2, 3}));
    CHECK(merge(C({1, 2}), C({-2, 3})) == std::nullopt);
    CHECK(merge(C({}), C({5})) == C({5}));
}

TEST_CASE("merge is commutative, associative, idempotent; contradiction absorbs") {
    Rng rng(2024);
    for (int iter = 0; iter < 300; ++iter) {
        auto draw = [&] {
            std::vector<Lit> lits;
            const int width = static_cast<int>(rng.below(5));
            for (int i = 0; i < width; ++i) {
                const Lit v = 1 + static_cast<Lit>(rng.below(4));
                lits.push_back(rng.coin() ? v : -v);
            }
            return Clause(lits);
        };
        const Clause a = draw(), b = draw(), c = draw();
        if (!a.consistent() || !b.consistent() || !c.consistent()) continue;

        CHECK(merge(a, b) == merge(b, a));
        CHECK(merge(a, a) == a);

        // Associativity over the incompatible-absorbing extension.
        const auto ab = merge(a, b);
        const auto bc = merge(b, c);
        const auto left = ab ? merge(*ab, c) : std::nullopt;
        const auto right = bc ? merge(a, *bc) : std::nullopt;
        CHECK(left == right);
    }
}

TEST_CASE("merge_into matches merge") {
    std::vector<Lit> buf;
    CHECK(merge_into(C({-1, 2}).lits(), C({2, 3}).lits(), buf));
    CHECK(buf == std::vector<Lit>{-1, 2, 3});
    CHECK_FALSE(merge_into(C({1, 2}).lits(), C({-2, 3}).lits(), buf));
}

TEST_CASE("clause_probability") {
    const Dyadic p = clause_probability(C({-3, 1, 4}), 4);
    CHECK(p == Dyadic::pow2_inverse(3, 4)); // 1/8
    CHECK(p.exponent() == 4);

    CHECK(clause_probability(C({}), 3).compare_to_one() == 0);
    CHECK(clause_probability(C({1, -1}), 2).is_zero());
    CHECK_THROWS_AS(clause_probability(C({5}), 4), MalformedError);
}

TEST_CASE("clause_probability equals satisfying-assignment fraction") {
    Rng rng(77);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 1 + static_cast<int>(rng.below(8));
        std::vector<Lit> lits;
        const int width = static_cast<int>(rng.below(5));
        for (int i = 0; i < width; ++i) {
            const Lit v = 1 + static_cast<Lit>(rng.below(static_cast<std::uint64_t>(n)));
            lits.push_back(rng.coin() ? v : -v);
        }
        const Clause c(lits);
        const Formula single = Formula(Kind::dnf, n, {c});
        const Dyadic p = clause_probability(c, n);
        CHECK(p.exponent() == static_cast<unsigned>(n));
        CHECK(p.numerator() == count_satisfying(single));
    }
}

TEST_CASE("formula construction validates ranges") {
    CHECK_THROWS_AS(Formula(Kind::dnf, 0, {}), MalformedError);
    CHECK_THROWS_AS(Formula(Kind::dnf, 2, {C({3})}), MalformedError);
    const Formula f = dnf(4, {{-3, 1, 4}, {-2, -1, 4}});
    CHECK(f.num_vars() == 4);
    CHECK(f.size() == 2);
    CHECK(f.kind() == Kind::dnf);
}

TEST_CASE("evaluate") {
    const Assignment tf{{true, false}};
    CHECK(evaluate(dnf(2, {{1, -2}}), tf));
    CHECK_FALSE(evaluate(dnf(2, {{1}, {2}}), Assignment{{false, false}}));

    const Formula unsat = cnf(2, {{1, 2}, {-1}, {-2}});
    for (std::uint64_t m = 0; m < 4; ++m) {
        CHECK_FALSE(evaluate(unsat, Assignment::from_mask(m, 2)));
    }

    CHECK_FALSE(evaluate(dnf(1, {}), Assignment{{true}}));
    CHECK(evaluate(cnf(1, {}), Assignment{{true}}));
    CHECK(evaluate(dnf(1, {{}}), Assignment{{false}}));
    CHECK_FALSE(evaluate(cnf(1, {{}}), Assignment{{false}}));
}

TEST_CASE("assignment from_mask uses bit i for variable i+1") {
    const Assignment a = Assignment::from_mask(0b101, 3);
    CHECK(a.value(1));
    CHECK_FALSE(a.value(2));
    CHECK(a.value(3));
    CHECK(a.satisfies(1));
    CHECK(a.satisfies(-2));
    CHECK_FALSE(a.satisfies(-3));
}

TEST_CASE("negation flips literal signs clause-wise") {
    CHECK(negate_cnf_to_dnf(cnf(2, {{1, 2}, {-1}})) == dnf(2, {{-1, -2}, {1}}));
    CHECK(negate_cnf_to_dnf(cnf(1, {})) == dnf(1, {}));
    CHECK(negate_dnf_to_cnf(dnf(3, {{1, -2}})) == cnf(3, {{-1, 2}}));

    CHECK_THROWS_AS(negate_cnf_to_dnf(dnf(1, {{1}})), KindError);
    CHECK_THROWS_AS(negate_dnf_to_cnf(cnf(1, {{1}})), KindError);

    const Formula taut_dnf = negate_cnf_to_dnf(cnf(2, {{1, 2}, {-1}, {-2}}));
    CHECK(taut_dnf == dnf(2, {{-1, -2}, {1}, {2}}));
    CHECK(is_tautology_bruteforce(taut_dnf));
}

TEST_CASE("negation complements evaluation pointwise") {
    Rng rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        const Formula f = iesat::testing::random_messy(rng, Kind::cnf);
        const Formula g = negate_cnf_to_dnf(f);
        CHECK(negate_dnf_to_cnf(g) == f);
        const std::uint64_t total = 1ULL << f.num_vars();
        for (std::uint64_t m = 0; m < total; ++m) {
            const Assignment a = Assignment::from_mask(m, f.num_vars());
            CHECK(evaluate(g, a) == !evaluate(f, a));
        }
    }
}
