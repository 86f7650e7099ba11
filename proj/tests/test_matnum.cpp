#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "repvar/matnum.hpp"
#include "repvar/serialize.hpp"

using namespace repvar;

namespace {

const std::vector<Generator> kX = {{"x"}};
const std::vector<Generator> kXY = {{"x"}, {"y"}};
const std::vector<Generator> kXYZ = {{"x"}, {"y"}, {"z"}};
const std::vector<Generator> kG4 = {{"x1"}, {"x2"}, {"x3"}, {"x4"}};

Mat2 minus_identity() { return Mat2::identity().scaled(-1.0); }

RepPoint conjugated_diag_pair(Rng& rng, cplx alpha, cplx beta) {
    Mat2 g = random_sl2(rng);
    Mat2 gi = g.inverse_unimodular();
    RepPoint p;
    p.matrices = {g * Mat2::diag(alpha, 1.0 / alpha) * gi, g * Mat2::diag(beta, 1.0 / beta) * gi};
    return p;
}

// Closed-form tangent oracle at a commuting diagonal pair (a, b): the
// differential of [x,y] sends (X, Y) to Ad_a(1 - Ad_b)X + Ad_b(Ad_a - 1)Y.
// On the diagonal/upper/lower basis Ad_diag(α,1/α) acts by 1, α², α⁻²,
// so the image is spanned by the off-diagonal directions and the rank
// is exactly 2 whenever α² != 1 and β² != 1.
int commutator_rank_at_diag(cplx alpha, cplx beta) {
    cplx a2 = alpha * alpha, b2 = beta * beta;
    int rank = 0;
    bool upper = std::abs(a2 * (1.0 - b2)) > 1e-12 || std::abs(b2 * (a2 - 1.0)) > 1e-12;
    bool lower = std::abs((1.0 - 1.0 / b2) / a2) > 1e-12 || std::abs((1.0 / a2 - 1.0) / b2) > 1e-12;
    if (upper)
        ++rank;
    if (lower)
        ++rank;
    return rank;
}

} // namespace

TEST_CASE("eval_word frozen examples") {
    auto [m1, m2] = anticommuting_pair();
    RepPoint p{{m1, m2}};
    FreeWord comm = parse_word("[x,y]", kXY);
    CHECK(max_abs_diff(eval_word(comm, p), minus_identity()) < 1e-14);

    RepPoint ident{{Mat2::identity(), Mat2::identity()}};
    CHECK(max_abs_diff(eval_word(comm, ident), Mat2::identity()) == 0.0);
    CHECK(max_abs_diff(eval_word(FreeWord(), ident), Mat2::identity()) == 0.0);

    // trace-zero matrices square to -I
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        Mat2 g = random_sl2(rng);
        Mat2 m = g * Mat2::diag(cplx(0, 1), cplx(0, -1)) * g.inverse_unimodular();
        CHECK(std::abs(m.trace()) < 1e-12);
        RepPoint q{{m}};
        CHECK(max_abs_diff(eval_word(parse_word("x^2", kX), q), minus_identity()) < 1e-12);
    }

    CHECK_THROWS_AS(eval_word(parse_word("x y", kXY), RepPoint{{Mat2::identity()}}),
                    std::invalid_argument);
}

TEST_CASE("eval_word is a homomorphism and preserves det") {
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        FreeWord u = random_word(rng, 3, 8);
        FreeWord v = random_word(rng, 3, 8);
        RepPoint p = random_point(rng, 3);
        Mat2 lhs = eval_word(u * v, p);
        Mat2 rhs = eval_word(u, p) * eval_word(v, p);
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);
        CHECK(std::abs(eval_word(u, p).det() - 1.0) < 1e-10);
    }
}

TEST_CASE("flip identity: examples and 1000 random triples") {
    Rng rng(202);

    FreeWord comm = parse_word("[x,y]", kXY);
    RepPoint p = random_point(rng, 2);
    const int s1[2] = {-1, 1};
    CHECK(flip_check(comm, p, s1) < 1e-10);

    FreeWord x3 = parse_word("x^3", kX);
    RepPoint q = random_point(rng, 1);
    const int sm[1] = {-1};
    CHECK(central_flip_factor(x3, sm) == -1);
    CHECK(flip_check(x3, q, sm) < 1e-10);

    FreeWord even = parse_word("x^2 y^2", kXY);
    for (int sx : {1, -1})
        for (int sy : {1, -1}) {
            const int signs[2] = {sx, sy};
            CHECK(central_flip_factor(even, signs) == 1);
            CHECK(flip_check(even, random_point(rng, 2), signs) < 1e-10);
        }

    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng.uniform_int(0, 3));
        FreeWord w = random_word(rng, n, 20);
        RepPoint point = random_point(rng, n);
        std::vector<int> signs(static_cast<std::size_t>(n));
        for (int& s : signs)
            s = rng.uniform_int(0, 1) == 0 ? 1 : -1;
        CHECK(flip_check(w, point, signs) < 1e-10);
    }
}

TEST_CASE("vminus_witness: even-sum construction") {
    FreeWord w = parse_word("x^2", kXYZ);
    auto p = vminus_witness_constructive(w, 3);
    REQUIRE(p.has_value());
    REQUIRE(p->size() == 3);
    // (diag(i,-i), I, I)
    CHECK(max_abs_diff(p->matrices[0], Mat2::diag(cplx(0, 1), cplx(0, -1))) < 1e-12);
    CHECK(max_abs_diff(p->matrices[1], Mat2::identity()) == 0.0);
    CHECK(max_abs_diff(p->matrices[2], Mat2::identity()) == 0.0);
    CHECK(max_abs_diff(eval_word(w, *p), minus_identity()) < 1e-12);

    // negative even sums work through the inverse
    FreeWord wneg = parse_word("x^-4 y", kXY);
    auto pn = vminus_witness_constructive(wneg, 2);
    REQUIRE(pn.has_value());
    CHECK(max_abs_diff(eval_word(wneg, *pn), minus_identity()) < 1e-12);
}

TEST_CASE("vminus_witness: commutator-block construction for surface relators") {
    FreeWord surface = parse_word("[x1,x2] [x3,x4]", kG4);
    auto p = vminus_witness_constructive(surface, 4);
    REQUIRE(p.has_value());
    CHECK(max_abs_diff(eval_word(surface, *p), minus_identity()) < 1e-12);
    // generators outside the last bracket stay at the identity
    CHECK(max_abs_diff(p->matrices[0], Mat2::identity()) == 0.0);
    CHECK(max_abs_diff(p->matrices[1], Mat2::identity()) == 0.0);

    FreeWord single = parse_word("[x,y]", kXY);
    auto q = vminus_witness_constructive(single, 2);
    REQUIRE(q.has_value());
    CHECK(max_abs_diff(eval_word(single, *q), minus_identity()) < 1e-12);
}

TEST_CASE("vminus_witness: construction path gives up where required, search can still find") {
    FreeWord w = parse_word("x", kX);
    CHECK_FALSE(vminus_witness_constructive(w, 1).has_value());
    auto found = vminus_witness(w, 1, 77);
    REQUIRE(found.has_value());
    CHECK(max_abs_diff(eval_word(w, *found), minus_identity()) < 1e-10);
}

TEST_CASE("vminus_witness over a corpus of even-nonzero-sum words") {
    Rng rng(303);
    int produced = 0;
    while (produced < 100) {
        int n = 1 + static_cast<int>(rng.uniform_int(0, 2));
        FreeWord w = random_word(rng, n, 10);
        ExponentProfile prof = exponent_profile(w, n);
        bool qualifies = false;
        for (long long s : prof.sums)
            if (s != 0 && s % 2 == 0)
                qualifies = true;
        if (!qualifies)
            continue;
        ++produced;
        auto p = vminus_witness_constructive(w, n);
        REQUIRE(p.has_value());
        CHECK(max_abs_diff(eval_word(w, *p), minus_identity()) < 1e-12);
    }
}

TEST_CASE("newton_solve reaches -I for the commutator and the square") {
    Rng rng(404);
    FreeWord comm = parse_word("[x,y]", kXY);
    auto sol = newton_solve(comm, 2, -1, random_point(rng, 2));
    for (int retry = 0; retry < 5 && !sol; ++retry)
        sol = newton_solve(comm, 2, -1, random_point(rng, 2));
    REQUIRE(sol.has_value());
    CHECK(max_abs_diff(eval_word(comm, *sol), minus_identity()) < 1e-10);

    FreeWord sq = parse_word("x^2", kX);
    auto sol2 = newton_solve(sq, 1, -1, random_point(rng, 1));
    for (int retry = 0; retry < 5 && !sol2; ++retry)
        sol2 = newton_solve(sq, 1, -1, random_point(rng, 1));
    REQUIRE(sol2.has_value());
    CHECK(max_abs_diff(eval_word(sq, *sol2), minus_identity()) < 1e-10);
    CHECK(std::abs(sol2->matrices[0].trace()) < 1e-8); // solutions of x^2 = -I have trace 0

    CHECK_THROWS_AS(newton_solve(parse_word("[x,y]", kXY), 1, -1, random_point(rng, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(newton_solve(sq, 1, 2, random_point(rng, 1)), std::invalid_argument);
    CHECK_THROWS_AS(newton_solve(sq, 1, -1, random_point(rng, 1), NewtonOptions{0, 1e-10, 1e-6}),
                    std::invalid_argument);
}

TEST_CASE("fiber_rank: commuting pairs for [x,y] = I estimate dimension 4") {
    Rng rng(505);
    FreeWord comm = parse_word("[x,y]", kXY);
    int hits = 0;
    for (int trial = 0; trial < 10; ++trial) {
        cplx alpha = std::exp(cplx(rng.uniform(-0.4, 0.4), rng.uniform(0.3, 2.0)));
        cplx beta = std::exp(cplx(rng.uniform(-0.4, 0.4), rng.uniform(0.3, 2.0)));
        CHECK(commutator_rank_at_diag(alpha, beta) == 2); // oracle
        RepPoint p = conjugated_diag_pair(rng, alpha, beta);
        RankReport r = fiber_rank(comm, p);
        if (r.fiber_dim_estimate == 4)
            ++hits;
    }
    CHECK(hits >= 9);
}

TEST_CASE("fiber_rank: single-generator word has full rank 3") {
    for (int n = 1; n <= 3; ++n) {
        RepPoint p;
        p.matrices.assign(static_cast<std::size_t>(n), Mat2::identity());
        std::vector<Generator> gens;
        for (int i = 0; i < n; ++i)
            gens.push_back({"g" + std::to_string(i)});
        FreeWord w = parse_word("g0", gens);
        RankReport r = fiber_rank(w, p);
        CHECK(r.rank == 3);
        CHECK(r.fiber_dim_estimate == 3 * n - 3);
    }
}

TEST_CASE("fiber_rank: torsion classes of x^n = +-I have two-dimensional orbits") {
    Rng rng(606);
    for (long long n = 2; n <= 8; ++n) {
        FreeWord w = parse_word("x^" + std::to_string(n), kX);
        for (long long p = 1; p < n; ++p) {
            cplx eig = std::polar(1.0, 3.14159265358979323846 * static_cast<double>(p) /
                                           static_cast<double>(n));
            Mat2 g = random_sl2(rng);
            RepPoint point{{g * Mat2::diag(eig, 1.0 / eig) * g.inverse_unimodular()}};
            RankReport r = fiber_rank(w, point);
            CHECK(r.fiber_dim_estimate == 2);
        }
    }
}

TEST_CASE("fiber_rank: genus-2 surface relator at Newton solutions, mode of estimates is 9") {
    Rng rng(707);
    FreeWord w = parse_word("[x1,x2] [x3,x4]", kG4);
    std::map<int, int> histogram;
    int solved = 0;
    for (int trial = 0; trial < 20 && solved < 10; ++trial) {
        auto sol = newton_solve(w, 4, +1, random_point(rng, 4));
        if (!sol)
            continue;
        ++solved;
        RankReport r = fiber_rank(w, *sol);
        histogram[r.fiber_dim_estimate] += 1;
    }
    REQUIRE(solved == 10);
    int mode = -1, best = 0;
    for (auto [estimate, count] : histogram)
        if (count > best) {
            best = count;
            mode = estimate;
        }
    CHECK(mode == 9);
}

TEST_CASE("fiber_rank rejects points away from the central fibers") {
    Rng rng(808);
    FreeWord comm = parse_word("[x,y]", kXY);
    RepPoint p = random_point(rng, 2); // generically [m1,m2] is far from +-I
    if (std::min(max_abs_diff(eval_word(comm, p), Mat2::identity()),
                 max_abs_diff(eval_word(comm, p), minus_identity())) >= 1e-8)
        CHECK_THROWS_AS(fiber_rank(comm, p), std::invalid_argument);
}

TEST_CASE("abelian embedding: first n odd primes, commuting, unit determinant") {
    CHECK(abelian_embedding(0).empty());
    auto one = abelian_embedding(1);
    REQUIRE(one.size() == 1);
    CHECK(max_abs_diff(one[0], Mat2::diag(3.0, 1.0 / 3.0)) == 0.0);

    auto three = abelian_embedding(3);
    REQUIRE(three.size() == 3);
    CHECK(three[1].a == cplx(5.0));
    CHECK(three[2].a == cplx(7.0));
    for (const Mat2& m : three)
        CHECK(std::abs(m.det() - 1.0) < 1e-15);
    for (std::size_t i = 0; i < three.size(); ++i)
        for (std::size_t j = 0; j < three.size(); ++j) {
            Mat2 commutator = three[i] * three[j] * three[i].inverse_unimodular() *
                              three[j].inverse_unimodular();
            CHECK(max_abs_diff(commutator, Mat2::identity()) < 1e-12);
        }

    auto six = abelian_embedding(6);
    CHECK(six[5].a == cplx(17.0)); // 3,5,7,11,13,17
}

TEST_CASE("psl2_canonical") {
    CHECK(max_abs_diff(psl2_canonical(minus_identity()), Mat2::identity()) == 0.0);

    Mat2 rot{0.0, 1.0, -1.0, 0.0};
    CHECK(max_abs_diff(psl2_canonical(rot), rot) == 0.0);

    Mat2 anti{0.0, cplx(0, -1), cplx(0, -1), 0.0};
    Mat2 expect{0.0, cplx(0, 1), cplx(0, 1), 0.0};
    CHECK(max_abs_diff(psl2_canonical(anti), expect) == 0.0);

    Rng rng(909);
    for (int trial = 0; trial < 200; ++trial) {
        Mat2 m = random_sl2(rng);
        Mat2 canon = psl2_canonical(m);
        CHECK(max_abs_diff(psl2_canonical(-m), canon) == 0.0);        // negation collapses
        CHECK(max_abs_diff(psl2_canonical(canon), canon) == 0.0);     // idempotent
        CHECK((max_abs_diff(canon, m) == 0.0 || max_abs_diff(canon, -m) == 0.0));
    }

    CHECK_THROWS_AS(psl2_canonical(Mat2{}), std::invalid_argument);
}

TEST_CASE("hex-float round trip is bit exact") {
    Rng rng(111);
    for (int trial = 0; trial < 100; ++trial) {
        double x = rng.uniform(-1e3, 1e3) * std::pow(10.0, rng.uniform(-12, 12));
        CHECK(parse_hexf(hexf(x)) == x);
    }
    RepPoint p = random_point(rng, 2);
    RepPoint q = rep_point_from_json(to_json(p));
    REQUIRE(q.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        CHECK(max_abs_diff(p.matrices[i], q.matrices[i]) == 0.0);
}
