#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "repvar/word.hpp"

using namespace repvar;

namespace {

const std::vector<Generator> kXY = {{"x"}, {"y"}};
const std::vector<Generator> kX = {{"x"}};
const std::vector<Generator> kXYZ = {{"x"}, {"y"}, {"z"}};

std::vector<Letter> random_raw(std::mt19937_64& rng, int n_gens, int len) {
    std::uniform_int_distribution<int> gen(0, n_gens - 1);
    std::uniform_int_distribution<long long> exp(-3, 3);
    std::vector<Letter> raw;
    for (int i = 0; i < len; ++i)
        raw.push_back({gen(rng), exp(rng)});
    return raw;
}

} // namespace

TEST_CASE("free_reduce basics") {
    CHECK(FreeWord::reduce({{0, 1}, {0, -1}}).trivial());
    CHECK(FreeWord::reduce({{0, 2}, {0, 3}}) == FreeWord::reduce({{0, 5}}));
    CHECK(FreeWord::reduce({{0, 1}, {1, 2}, {1, -2}, {0, -1}}).trivial());
}

TEST_CASE("free_reduce is idempotent and drops zero exponents") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        auto raw = random_raw(rng, 3, static_cast<int>(rng() % 12));
        FreeWord once = FreeWord::reduce(raw);
        FreeWord twice = FreeWord::reduce(once.letters());
        CHECK(once == twice);
        for (std::size_t i = 0; i < once.letters().size(); ++i) {
            CHECK(once.letters()[i].exp != 0);
            if (i + 1 < once.letters().size())
                CHECK(once.letters()[i].gen != once.letters()[i + 1].gen);
        }
    }
}

TEST_CASE("concatenation respects reduction (associativity spot checks)") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        FreeWord a = FreeWord::reduce(random_raw(rng, 3, 6));
        FreeWord b = FreeWord::reduce(random_raw(rng, 3, 6));
        FreeWord c = FreeWord::reduce(random_raw(rng, 3, 6));
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * a.inverse()).trivial());
    }
}

TEST_CASE("parse_word: commutator expands as u v u^-1 v^-1") {
    FreeWord w = parse_word("[x,y]", kXY);
    CHECK(w.letters() == std::vector<Letter>{{0, 1}, {1, 1}, {0, -1}, {1, -1}});
}

TEST_CASE("parse_word: cancellation and plain powers") {
    CHECK(parse_word("x x^-1", kX).trivial());
    FreeWord w = parse_word("x^2 y^3 x^-2", kXY);
    CHECK(w.letters() == std::vector<Letter>{{0, 2}, {1, 3}, {0, -2}});
}

TEST_CASE("parse_word: grouping, '*' separators, nested brackets") {
    CHECK(parse_word("(x y)^-1", kXY) == parse_word("y^-1 x^-1", kXY));
    CHECK(parse_word("x*y", kXY) == parse_word("x y", kXY));
    CHECK(parse_word("[x,[x,y]]", kXY) ==
          parse_word("x [x,y] x^-1 [x,y]^-1", kXY));
    CHECK(parse_word("[x,y^2] y^2", kXY).letters() ==
          std::vector<Letter>{{0, 1}, {1, 2}, {0, -1}});
    CHECK(parse_word("", kXY).trivial());
    CHECK(parse_word("   ", kXY).trivial());
}

TEST_CASE("parse_word errors carry byte offsets") {
    CHECK_THROWS_AS(parse_word("x^0", kXY), word_parse_error);
    CHECK_THROWS_AS(parse_word("w", kXY), word_parse_error);
    CHECK_THROWS_AS(parse_word("x y)", kXY), word_parse_error);
    CHECK_THROWS_AS(parse_word("[x y]", kXY), word_parse_error);
    CHECK_THROWS_AS(parse_word("x(y)", kXY), word_parse_error);
    try {
        parse_word("x^2 q^3", kXY);
        FAIL("expected parse error");
    } catch (const word_parse_error& e) {
        CHECK(e.offset() == 4);
    }
    try {
        parse_word("x^0", kXY);
        FAIL("expected parse error");
    } catch (const word_parse_error& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("print round-trip: parse of print equals original") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        FreeWord w = FreeWord::reduce(random_raw(rng, 3, 10));
        CHECK(parse_word(print_word(w, kXYZ), kXYZ) == w);
    }
}

TEST_CASE("exponent_profile examples") {
    ExponentProfile comm = exponent_profile(parse_word("[x,y]", kXY), 2);
    CHECK(comm.sums == std::vector<long long>{0, 0});
    CHECK(comm.total == 0);

    ExponentProfile mixed = exponent_profile(parse_word("x^2 y^3 x^-2", kXY), 2);
    CHECK(mixed.sums == std::vector<long long>{0, 3});
    CHECK(mixed.total == 3);

    std::vector<Generator> g4 = {{"x1"}, {"x2"}, {"x3"}, {"x4"}};
    ExponentProfile surface = exponent_profile(parse_word("[x1,x2] [x3,x4]", g4), 4);
    CHECK(surface.sums == std::vector<long long>{0, 0, 0, 0});
    CHECK(surface.total == 0);
}

TEST_CASE("parity criteria on the named examples") {
    CHECK_FALSE(in_commutator_subgroup(parse_word("[x,y^2] y^2", kXY), 2)); // s_y = 2
    CHECK(in_commutator_subgroup(parse_word("[x,y]", kXY), 2));
    CHECK_FALSE(in_commutator_subgroup(parse_word("x^3 y^2", kXY), 2));

    CHECK(pm_condition_holds(parse_word("[x,y]", kXY), 2));
    CHECK(pm_condition_holds(parse_word("x^2", kXYZ), 3));
    CHECK_FALSE(pm_condition_holds(parse_word("x^3", kX), 1));

    CHECK(minus_condition_holds(parse_word("x^3", kX), 1));
    CHECK(minus_condition_holds(parse_word("x^5", kX), 1));
    CHECK_FALSE(minus_condition_holds(parse_word("x^2", kX), 1));
    CHECK_FALSE(minus_condition_holds(parse_word("x^4", kX), 1));
    CHECK_FALSE(minus_condition_holds(parse_word("[x,y]", kXY), 2));
}

TEST_CASE("parity implications on a random corpus") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        FreeWord w = FreeWord::reduce(random_raw(rng, 4, 8));
        if (in_commutator_subgroup(w, 4))
            CHECK(pm_condition_holds(w, 4));
        if (minus_condition_holds(w, 4))
            CHECK_FALSE(pm_condition_holds(w, 4));
    }
}

TEST_CASE("central_flip_factor") {
    const int minus[1] = {-1};
    CHECK(central_flip_factor(parse_word("x^2", kX), minus) == 1);
    CHECK(central_flip_factor(parse_word("x^3", kX), minus) == -1);

    FreeWord w = parse_word("[x,y] x^2", kXY);
    for (int sx : {1, -1})
        for (int sy : {1, -1}) {
            const int signs[2] = {sx, sy};
            CHECK(central_flip_factor(w, signs) == 1);
        }

    // Factor equals the product of signs^sums directly.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        FreeWord w2 = FreeWord::reduce(random_raw(rng, 3, 8));
        int signs[3];
        for (int& s : signs)
            s = rng() % 2 == 0 ? 1 : -1;
        ExponentProfile prof = exponent_profile(w2, 3);
        int expected = 1;
        for (int i = 0; i < 3; ++i)
            if (signs[i] == -1 && prof.sums[static_cast<std::size_t>(i)] % 2 != 0)
                expected = -expected;
        CHECK(central_flip_factor(w2, signs) == expected);
    }
}

TEST_CASE("presentation parsing and validation") {
    Presentation p = parse_presentation("# a sample\ngens: x, y\nrel: [x,y^2] y^2\n");
    REQUIRE(p.generators.size() == 2);
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0] == parse_word("[x,y^2] y^2", kXY));
    CHECK(p.deficiency() == 1);
    CHECK(validate(p).empty());

    Presentation trivial_rel = parse_presentation("gens: x\nrel: x x^-1\n");
    auto problems = validate(trivial_rel);
    REQUIRE(problems.size() == 1);
    CHECK(problems[0].find("trivial") != std::string::npos);

    CHECK_THROWS_AS(parse_presentation("rel: x\n"), presentation_parse_error);
    CHECK_THROWS_AS(parse_presentation("gens: x\ngens: y\n"), presentation_parse_error);
    CHECK_THROWS_AS(parse_presentation("gens: x\nrel: y\n"), presentation_parse_error);
    CHECK_THROWS_AS(parse_presentation("nonsense\n"), presentation_parse_error);

    try {
        parse_presentation("gens: x\nrel: x^0\n");
        FAIL("expected error");
    } catch (const presentation_parse_error& e) {
        CHECK(e.line() == 2);
    }

    // print -> parse round-trip
    Presentation again = parse_presentation(print_presentation(p));
    CHECK(again.generators == p.generators);
    CHECK(again.relators == p.relators);
}
