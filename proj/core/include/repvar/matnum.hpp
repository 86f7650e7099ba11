#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "repvar/word.hpp"

namespace repvar {

using cplx = std::complex<double>;

/// A 2x2 complex matrix (a b ; c d), double precision. Points of
/// SL(2,C) keep |det - 1| <= 1e-12 after renormalization.
struct Mat2 {
    cplx a{}, b{}, c{}, d{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diag(cplx x, cplx y) { return {x, 0.0, 0.0, y}; }

    cplx det() const { return a * d - b * c; }
    cplx trace() const { return a + d; }

    Mat2 operator*(const Mat2& r) const {
        return {a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c, c * r.b + d * r.d};
    }
    Mat2 operator+(const Mat2& r) const { return {a + r.a, b + r.b, c + r.c, d + r.d}; }
    Mat2 operator-(const Mat2& r) const { return {a - r.a, b - r.b, c - r.c, d - r.d}; }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    Mat2 scaled(cplx s) const { return {s * a, s * b, s * c, s * d}; }

    /// Adjugate; the exact inverse when det = 1.
    Mat2 inverse_unimodular() const { return {d, -b, -c, a}; }

    /// Entrywise max modulus.
    double max_abs() const;

    /// M / sqrt(det M), principal branch. Throws when |det| < 1e-12.
    Mat2 normalized_sl2() const;
};

double max_abs_diff(const Mat2& x, const Mat2& y);

/// An n-tuple of SL(2,C) matrices, one per generator.
struct RepPoint {
    std::vector<Mat2> matrices;

    std::size_t size() const { return matrices.size(); }
    RepPoint flipped(std::span<const int> signs) const;
};

/// Left-to-right evaluation of a word at a point; powers by repeated
/// squaring, inverses via the adjugate, identity for the empty word.
Mat2 eval_word(const FreeWord& w, const RepPoint& point);

/// Max deviation of eval(w, signs * point) from
/// central_flip_factor(w, signs) * eval(w, point).
double flip_check(const FreeWord& w, const RepPoint& point, std::span<const int> signs);

/// Seeded RNG wrapper so every numeric report can echo its seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}
    std::uint64_t seed() const { return seed_; }
    std::mt19937_64& engine() { return engine_; }

    double uniform(double lo, double hi);
    long long uniform_int(long long lo, long long hi);
    cplx gaussian();

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Random well-conditioned SL(2,C) matrix: Gaussian entries, resampled
/// until the determinant is away from zero, then renormalized.
Mat2 random_sl2(Rng& rng);
RepPoint random_point(Rng& rng, int n_generators);

/// Random nontrivial reduced word on n generators with at most
/// max_syllables syllables and syllable exponents in [-3,3] \ {0}.
FreeWord random_word(Rng& rng, int n_generators, int max_syllables);

/// A fixed pair (m1, m2) of anticommuting SL(2,C) matrices with
/// [m1, m2] = -I: m1 = diag(i, -i), m2 = (0 1 ; -1 0).
std::pair<Mat2, Mat2> anticommuting_pair();

/// A point with w(point) = -I, or nullopt.
///
/// Construction paths, in order: a generator with even nonzero exponent
/// sum s is sent to diag(e^{i pi/s}, e^{-i pi/s}) (so m^s = -I) and all
/// others to I; a relator that is a product of commutators of disjoint
/// generator pairs gets the anticommuting pair in its last bracket and
/// I elsewhere; otherwise a seeded Newton search. Returned witnesses
/// satisfy ||eval - (-I)||_inf < 1e-10 (the construction paths reach
/// 1e-12).
std::optional<RepPoint> vminus_witness(const FreeWord& w, int n_generators,
                                       std::uint64_t search_seed = 2026);

/// The construction paths of vminus_witness only, no numerical search.
std::optional<RepPoint> vminus_witness_constructive(const FreeWord& w, int n_generators);

struct NewtonOptions {
    int max_iter = 50;
    double tol = 1e-10;
    double fd_step = 1e-6;
};

/// Gauss-Newton on chart coordinates for w(point) = target_sign * I.
/// Each matrix is parametrized by left translation of the trace-zero
/// tangent space; iterates retract to SL2 by det^{-1/2} rescaling on
/// the principal branch. Returns nullopt after max_iter or when the
/// least-squares step degenerates (reseed advised).
std::optional<RepPoint> newton_solve(const FreeWord& w, int n_generators, int target_sign,
                                     const RepPoint& seed, const NewtonOptions& opts = {});

struct RankReport {
    std::array<double, 3> singular_values{};
    int rank = 0;
    int fiber_dim_estimate = 0; // complex dimensions, 3n - rank
    double residual = 0.0;      // distance of the word value from the nearest of +-I
    double fd_step = 0.0;
    double rank_rtol = 0.0;
    bool degenerate = false; // largest singular value below 1e-12
};

/// Rank of the word-map differential at a point near the w = +-I fibers,
/// approximated by central finite differences along the 3n tangent
/// directions and mapped to the tangent space at the word value.
/// Singular values are complex-linear; rank counts those above
/// rank_rtol * sigma_max. Throws when the point is not near a fiber
/// (residual >= 1e-8).
RankReport fiber_rank(const FreeWord& w, const RepPoint& point, double fd_step = 1e-6,
                      double rank_rtol = 1e-8);

/// Commuting embedding of Z^n: diag(p_k, 1/p_k) over the first n odd
/// primes. Pairwise distinct, determinant exactly 1.
std::vector<Mat2> abelian_embedding(int n);

/// Canonical representative of {m, -m}: the sign making the first entry
/// in row-major order with modulus > 1e-9 have positive real part
/// (ties broken by positive imaginary part). Idempotent and invariant
/// under negation. Throws on the (near-)zero matrix.
Mat2 psl2_canonical(const Mat2& m);

} // namespace repvar
