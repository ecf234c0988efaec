#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "tabcomp/error.hpp"
#include "tabcomp/relation.hpp"

using namespace tabcomp;

namespace {

RelationTable fn(std::uint32_t n, std::uint32_t m, std::vector<Digit> digits) {
    return RelationTable(FunctionIndex(TableShape(n, m), std::move(digits)));
}

RelationTable with_column_counts(std::uint32_t m, const std::vector<std::uint32_t>& counts) {
    RelationTable r(TableShape(static_cast<std::uint32_t>(counts.size()), m));
    for (Column c = 1; c <= counts.size(); ++c)
        for (Row v = 1; v <= counts[c - 1]; ++v)
            r.mark(c, v);
    return r;
}

} // namespace

TEST_CASE("bit layout across word boundaries") {
    RelationTable r(TableShape(3, 130));
    CHECK(r.words_per_column() == 3);
    r.mark(2, 1).mark(2, 64).mark(2, 65).mark(2, 130).mark(3, 64);
    CHECK(r.marks_in_column(1) == 0);
    CHECK(r.marks_in_column(2) == 4);
    CHECK(r.column_rows(2) == std::vector<Row>{1, 64, 65, 130});
    CHECK(r.cell(3, 64));
    CHECK_FALSE(r.cell(3, 65));
    r.unmark(2, 64);
    CHECK(r.column_rows(2) == std::vector<Row>{1, 65, 130});
    CHECK_THROWS_AS(r.mark(4, 1), DomainError);
    CHECK_THROWS_AS(r.mark(1, 131), DomainError);
}

TEST_CASE("entropy") {
    std::mt19937_64 gen(11);
    for (int i = 0; i < 50; ++i) {
        const TableShape shape(1 + gen() % 8, 1 + gen() % 8);
        CHECK(entropy(RelationTable(oracle::random_function(gen, shape))) == 0.0);
    }
    CHECK(std::abs(entropy(with_column_counts(2, {2, 2, 2, 2})) - 1.0) < 1e-12);
    CHECK(std::abs(entropy(with_column_counts(8, {1, 2, 4, 8})) - 1.5) < 1e-12);
    CHECK(entropy(RelationTable(TableShape(5, 5))) == 0.0);
    CHECK(std::abs(entropy(with_column_counts(9, {9, 9, 9})) - std::log2(9.0)) < 1e-12);
}

TEST_CASE("entropy bounds and zero exactly for functions") {
    std::mt19937_64 gen(12);
    for (int i = 0; i < 500; ++i) {
        const RelationTable r = oracle::random_relation(gen, 8, 8);
        const double e = entropy(r);
        REQUIRE(e >= 0.0);
        REQUIRE(e <= std::log2(static_cast<double>(r.shape().m())) + 1e-12);
        REQUIRE((e == 0.0) == r.is_function());
    }
}

TEST_CASE("random_evaluate") {
    RelationTable r(TableShape(3, 6));
    r.mark(1, 3).mark(3, 2).mark(3, 5);
    Random random(1);
    for (int i = 0; i < 100; ++i)
        CHECK(random_evaluate(r, 1, random) == 3u);
    CHECK_FALSE(random_evaluate(r, 2, random).has_value());
    CHECK_THROWS_AS(random_evaluate(r, 0, random), DomainError);
    CHECK_THROWS_AS(random_evaluate(r, 4, random), DomainError);

    std::map<Row, int> freq;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i)
        ++freq[*random_evaluate(r, 3, random)];
    CHECK(freq.size() == 2);
    CHECK(std::abs(freq[2] / double(draws) - 0.5) <= 0.02);
    CHECK(std::abs(freq[5] / double(draws) - 0.5) <= 0.02);
}

TEST_CASE("random_evaluate is uniform across word boundaries") {
    RelationTable r(TableShape(1, 200));
    const std::vector<Row> rows{1, 63, 64, 65, 128, 129, 200};
    for (Row v : rows)
        r.mark(1, v);
    Random random(99);
    std::map<Row, int> freq;
    const int draws = 70000;
    for (int i = 0; i < draws; ++i)
        ++freq[*random_evaluate(r, 1, random)];
    // Chi-square against uniform, 6 degrees of freedom; 22.46 is the 0.999 quantile.
    double chi2 = 0.0;
    const double expected = double(draws) / rows.size();
    for (Row v : rows)
        chi2 += (freq[v] - expected) * (freq[v] - expected) / expected;
    CHECK(freq.size() == rows.size());
    CHECK(chi2 < 22.46);
}

TEST_CASE("sample_function") {
    Random random(5);
    const RelationTable f = fn(3, 4, {2, 0, 4});
    for (int i = 0; i < 20; ++i)
        CHECK(RelationTable(sample_function(f, random)) == f);
    CHECK(encode(sample_function(RelationTable(TableShape(3, 3)), random)) ==
          FunctionIndex::empty(TableShape(3, 3)));

    RelationTable full(TableShape(2, 2));
    full.mark(1, 1).mark(1, 2).mark(2, 1).mark(2, 2);
    std::map<FunctionIndex, int> freq;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i)
        ++freq[encode(sample_function(full, random))];
    CHECK(freq.size() == 4);
    for (const auto& [k, count] : freq) {
        CHECK(k.is_total());
        CHECK(std::abs(count / double(draws) - 0.25) <= 0.02);
    }
}

TEST_CASE("sampled functions are contained, equiprobable on full support") {
    std::mt19937_64 gen(21);
    Random random(22);
    for (int i = 0; i < 200; ++i) {
        const RelationTable r = oracle::random_relation(gen, 6, 6, 0.5);
        for (int d = 0; d < 20; ++d)
            REQUIRE(contains(r, sample_function(r, random)));
    }

    // 3 columns with 2, 3, 1 marks: six equiprobable functions.
    RelationTable r(TableShape(3, 4));
    r.mark(1, 1).mark(1, 4).mark(2, 1).mark(2, 2).mark(2, 3).mark(3, 2);
    std::map<FunctionIndex, int> freq;
    const int draws = 30000;
    for (int i = 0; i < draws; ++i)
        ++freq[encode(sample_function(r, random))];
    REQUIRE(freq.size() == 6);
    for (const auto& [k, count] : freq) {
        const double p = sample_probability(r, k);
        CHECK(std::abs(p - 1.0 / 6.0) < 1e-12);
        const double se = std::sqrt(p * (1 - p) / draws);
        CHECK(std::abs(count / double(draws) - p) <= 3 * se);
    }
}

TEST_CASE("superpose") {
    const RelationTable u = superpose(fn(2, 2, {1, 2}), fn(2, 2, {2, 1}));
    CHECK(u.marks_in_column(1) == 2);
    CHECK(u.marks_in_column(2) == 2);
    CHECK(superpose(u, u) == u);
    CHECK(superpose(u, FunctionTable(TableShape(2, 2))) == u);
    CHECK_THROWS_AS(superpose(u, RelationTable(TableShape(2, 3))), ShapeMismatch);

    std::mt19937_64 gen(3);
    for (int i = 0; i < 200; ++i) {
        const TableShape shape(1 + gen() % 5, 1 + gen() % 70);
        auto random_of = [&] {
            RelationTable r(shape);
            for (Column c = 1; c <= shape.n(); ++c)
                for (Row v = 1; v <= shape.m(); ++v)
                    if (gen() % 3 == 0)
                        r.mark(c, v);
            return r;
        };
        const RelationTable a = random_of(), b = random_of(), c = random_of();
        REQUIRE(superpose(a, b) == superpose(b, a));
        REQUIRE(superpose(superpose(a, b), c) == superpose(a, superpose(b, c)));
        REQUIRE(superpose(a, a) == a);
        REQUIRE(a.subset_of(superpose(a, b)));
        const double e = entropy(superpose(a, b));
        REQUIRE(e >= entropy(a) - 1e-12);
        REQUIRE(e >= entropy(b) - 1e-12);
    }
}

TEST_CASE("contains") {
    const RelationTable u = superpose(fn(2, 2, {1, 2}), fn(2, 2, {2, 1}));
    CHECK(contains(u, FunctionIndex(TableShape(2, 2), {1, 1})));
    CHECK(contains(u, FunctionIndex::empty(TableShape(2, 2))));
    CHECK(contains(RelationTable(TableShape(2, 2)), FunctionIndex::empty(TableShape(2, 2))));
    CHECK_FALSE(contains(fn(2, 2, {1, 2}), FunctionIndex(TableShape(2, 2), {2, 1})));
    CHECK_THROWS_AS(contains(u, FunctionIndex::empty(TableShape(2, 3))), ShapeMismatch);

    std::mt19937_64 gen(4);
    for (int i = 0; i < 200; ++i) {
        const RelationTable r = oracle::random_relation(gen, 6, 6);
        const FunctionIndex f = oracle::random_function(gen, r.shape());
        REQUIRE(contains(superpose(r, RelationTable(f)), f));
    }
}

TEST_CASE("count_contained") {
    CHECK(count_contained(fn(3, 3, {1, 2, 3}), CountMode::total_on_support) == 1);
    const RelationTable u = superpose(fn(2, 2, {1, 2}), fn(2, 2, {2, 1}));
    CHECK(count_contained(u, CountMode::total_on_support) == 4);
    CHECK(count_contained(u, CountMode::including_partial) == 9);
    CHECK(oracle::count_contained_brute(u, true) == 4);
    CHECK(oracle::count_contained_brute(u, false) == 9);
    CHECK(count_contained(RelationTable(TableShape(3, 2)), CountMode::total_on_support) == 1);
    CHECK(count_contained(RelationTable(TableShape(3, 2)), CountMode::including_partial) == 1);

    std::mt19937_64 gen(8);
    for (int i = 0; i < 200; ++i) {
        const RelationTable r = oracle::random_relation(gen, 5, 4);
        REQUIRE(count_contained(r, CountMode::total_on_support) ==
                oracle::count_contained_brute(r, true));
        REQUIRE(count_contained(r, CountMode::including_partial) ==
                oracle::count_contained_brute(r, false));
    }
}

TEST_CASE("inverse_evaluate_relation") {
    const RelationTable u = superpose(fn(2, 2, {1, 2}), fn(2, 2, {2, 1}));
    CHECK(inverse_evaluate_relation(u, 1) == std::vector<Column>{1, 2});
    CHECK(inverse_evaluate_relation(RelationTable(TableShape(3, 3)), 2).empty());
    CHECK(inverse_evaluate_relation(fn(4, 7, {1, 2, 4, 7}), 7) == std::vector<Column>{4});
    CHECK_THROWS_AS(inverse_evaluate_relation(u, 3), DomainError);
}

TEST_CASE("function view") {
    const RelationTable f = fn(3, 3, {1, 0, 3});
    CHECK(f.is_function());
    CHECK(encode(f.to_function()) == FunctionIndex(TableShape(3, 3), {1, 0, 3}));
    RelationTable r = f;
    r.mark(1, 2);
    CHECK_FALSE(r.is_function());
    CHECK_THROWS_AS(r.to_function(), DomainError);
}

TEST_CASE("Random is reproducible and derives distinct streams") {
    Random a(42), b(42);
    for (int i = 0; i < 100; ++i)
        REQUIRE(a.next() == b.next());
    // mt19937_64 with the default seed produces this 10000th value.
    std::mt19937_64 reference;
    reference.discard(9999);
    CHECK(reference() == 9981545732273789042ULL);
    Random d0 = Random::derive(42, 0), d1 = Random::derive(42, 1);
    CHECK(d0.next() != d1.next());
    Random bounded(7);
    for (int i = 0; i < 1000; ++i)
        REQUIRE(bounded.uniform_below(3) < 3);
}
