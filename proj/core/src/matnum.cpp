#include "repvar/matnum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace repvar {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Basis of the trace-zero tangent space.
const Mat2 kSl2Basis[3] = {
    {1.0, 0.0, 0.0, -1.0},
    {0.0, 1.0, 0.0, 0.0},
    {0.0, 0.0, 1.0, 0.0},
};

Mat2 pow_mat(Mat2 base, long long e) {
    if (e < 0) {
        base = base.inverse_unimodular();
        e = -e;
    }
    Mat2 acc = Mat2::identity();
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

} // namespace

double Mat2::max_abs() const {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

Mat2 Mat2::normalized_sl2() const {
    cplx dt = det();
    if (std::abs(dt) < 1e-12)
        throw std::runtime_error("normalized_sl2: determinant too close to zero");
    cplx s = 1.0 / std::sqrt(dt);
    return scaled(s);
}

double max_abs_diff(const Mat2& x, const Mat2& y) {
    return (x - y).max_abs();
}

RepPoint RepPoint::flipped(std::span<const int> signs) const {
    if (signs.size() != matrices.size())
        throw std::invalid_argument("flipped: sign count must match the tuple size");
    RepPoint out = *this;
    for (std::size_t i = 0; i < matrices.size(); ++i)
        if (signs[i] == -1)
            out.matrices[i] = -out.matrices[i];
    return out;
}

Mat2 eval_word(const FreeWord& w, const RepPoint& point) {
    if (w.max_generator() >= static_cast<int>(point.size()))
        throw std::invalid_argument("eval_word: word uses an undeclared generator");
    Mat2 acc = Mat2::identity();
    for (const Letter& l : w.letters())
        acc = acc * pow_mat(point.matrices[static_cast<std::size_t>(l.gen)], l.exp);
    return acc;
}

double flip_check(const FreeWord& w, const RepPoint& point, std::span<const int> signs) {
    int factor = central_flip_factor(w, signs);
    Mat2 lhs = eval_word(w, point.flipped(signs));
    Mat2 rhs = eval_word(w, point).scaled(static_cast<double>(factor));
    return max_abs_diff(lhs, rhs);
}

double Rng::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

long long Rng::uniform_int(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(engine_);
}

cplx Rng::gaussian() {
    std::normal_distribution<double> g(0.0, 1.0);
    return {g(engine_), g(engine_)};
}

namespace {

// SU(2) element from a unit quaternion.
Mat2 random_su2(Rng& rng) {
    double q[4];
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (double& v : q) {
            v = std::normal_distribution<double>(0.0, 1.0)(rng.engine());
            norm2 += v * v;
        }
    } while (norm2 < 1e-12);
    double inv = 1.0 / std::sqrt(norm2);
    for (double& v : q)
        v *= inv;
    return {cplx(q[0], q[1]), cplx(q[2], q[3]), cplx(-q[2], q[3]), cplx(q[0], -q[1])};
}

} // namespace

Mat2 random_sl2(Rng& rng) {
    // Unitary x modest diagonal stretch x unitary: well-conditioned, so
    // word products stay at a scale where the 1e-10..1e-12 contracts of
    // the numeric checks are meaningful.
    Mat2 u = random_su2(rng);
    Mat2 v = random_su2(rng);
    cplx s = 0.35 * rng.gaussian();
    Mat2 d = Mat2::diag(std::exp(s), std::exp(-s));
    return (u * d * v).normalized_sl2();
}

RepPoint random_point(Rng& rng, int n_generators) {
    RepPoint p;
    p.matrices.reserve(static_cast<std::size_t>(n_generators));
    for (int i = 0; i < n_generators; ++i)
        p.matrices.push_back(random_sl2(rng));
    return p;
}

FreeWord random_word(Rng& rng, int n_generators, int max_syllables) {
    if (n_generators < 1 || max_syllables < 1)
        throw std::invalid_argument("random_word: need at least one generator and one syllable");
    long long k = rng.uniform_int(1, max_syllables);
    std::vector<Letter> letters;
    int prev = -1;
    for (long long i = 0; i < k; ++i) {
        int gen;
        do {
            gen = static_cast<int>(rng.uniform_int(0, n_generators - 1));
        } while (gen == prev && n_generators > 1);
        long long e = rng.uniform_int(1, 3);
        if (rng.uniform_int(0, 1) == 1)
            e = -e;
        letters.push_back({gen, e});
        prev = gen;
    }
    return FreeWord::reduce(std::move(letters));
}

std::pair<Mat2, Mat2> anticommuting_pair() {
    Mat2 m1 = Mat2::diag(cplx(0.0, 1.0), cplx(0.0, -1.0));
    Mat2 m2{0.0, 1.0, -1.0, 0.0};
    return {m1, m2};
}

namespace {

// Product of commutator blocks [g_1,g_2][g_3,g_4]... over pairwise
// distinct generators; returns the last block's pair.
std::optional<std::pair<int, int>> disjoint_commutator_blocks(const FreeWord& w) {
    const auto& ls = w.letters();
    if (ls.size() % 4 != 0 || ls.empty())
        return std::nullopt;
    std::vector<int> seen;
    std::pair<int, int> last{-1, -1};
    for (std::size_t i = 0; i < ls.size(); i += 4) {
        int a = ls[i].gen, b = ls[i + 1].gen;
        if (a == b)
            return std::nullopt;
        if (ls[i] != Letter{a, 1} || ls[i + 1] != Letter{b, 1} || ls[i + 2] != Letter{a, -1} ||
            ls[i + 3] != Letter{b, -1})
            return std::nullopt;
        for (int g : seen)
            if (g == a || g == b)
                return std::nullopt;
        seen.push_back(a);
        seen.push_back(b);
        last = {a, b};
    }
    return last;
}

} // namespace

std::optional<RepPoint> vminus_witness_constructive(const FreeWord& w, int n_generators) {
    if (w.max_generator() >= n_generators)
        throw std::invalid_argument("vminus_witness: word uses an undeclared generator");
    ExponentProfile sums = exponent_profile(w, n_generators);
    for (std::size_t i = 0; i < sums.sums.size(); ++i) {
        long long s = sums.sums[i];
        if (s != 0 && s % 2 == 0) {
            long long mag = s < 0 ? -s : s;
            RepPoint p;
            p.matrices.assign(static_cast<std::size_t>(n_generators), Mat2::identity());
            double theta = kPi / static_cast<double>(mag);
            p.matrices[i] = Mat2::diag(std::polar(1.0, theta), std::polar(1.0, -theta));
            return p;
        }
    }
    if (auto pair = disjoint_commutator_blocks(w)) {
        RepPoint p;
        p.matrices.assign(static_cast<std::size_t>(n_generators), Mat2::identity());
        auto [m1, m2] = anticommuting_pair();
        p.matrices[static_cast<std::size_t>(pair->first)] = m1;
        p.matrices[static_cast<std::size_t>(pair->second)] = m2;
        return p;
    }
    return std::nullopt;
}

std::optional<RepPoint> vminus_witness(const FreeWord& w, int n_generators, std::uint64_t search_seed) {
    if (auto p = vminus_witness_constructive(w, n_generators))
        return p;
    Rng rng(search_seed);
    Mat2 minus_i = Mat2::identity().scaled(-1.0);
    for (int attempt = 0; attempt < 8; ++attempt) {
        RepPoint seed = random_point(rng, n_generators);
        if (auto p = newton_solve(w, n_generators, -1, seed)) {
            if (max_abs_diff(eval_word(w, *p), minus_i) < 1e-10)
                return p;
        }
    }
    return std::nullopt;
}

std::optional<RepPoint> newton_solve(const FreeWord& w, int n_generators, int target_sign,
                                     const RepPoint& seed, const NewtonOptions& opts) {
    if (target_sign != 1 && target_sign != -1)
        throw std::invalid_argument("newton_solve: target must be +1 or -1");
    if (opts.max_iter < 1)
        throw std::invalid_argument("newton_solve: max_iter must be >= 1");
    if (w.max_generator() >= n_generators)
        throw std::invalid_argument("newton_solve: word uses an undeclared generator");
    if (static_cast<int>(seed.size()) != n_generators)
        throw std::invalid_argument("newton_solve: seed size mismatch");

    Mat2 target = Mat2::identity().scaled(static_cast<double>(target_sign));
    const int dims = 3 * n_generators;
    const double h = opts.fd_step;

    RepPoint x = seed;
    auto residual_of = [&](const RepPoint& p) { return max_abs_diff(eval_word(w, p), target); };

    try {
        double res = residual_of(x);
        for (int iter = 0; iter < opts.max_iter; ++iter) {
            if (res < opts.tol)
                return x;

            Eigen::VectorXcd r(4);
            Mat2 val = eval_word(w, x) - target;
            r << val.a, val.b, val.c, val.d;

            Eigen::MatrixXcd jac(4, dims);
            for (int j = 0; j < n_generators; ++j) {
                for (int k = 0; k < 3; ++k) {
                    RepPoint plus = x, minus = x;
                    Mat2 step = kSl2Basis[k].scaled(h);
                    plus.matrices[static_cast<std::size_t>(j)] =
                        x.matrices[static_cast<std::size_t>(j)] * (Mat2::identity() + step);
                    minus.matrices[static_cast<std::size_t>(j)] =
                        x.matrices[static_cast<std::size_t>(j)] * (Mat2::identity() - step);
                    Mat2 diff = (eval_word(w, plus) - eval_word(w, minus)).scaled(1.0 / (2.0 * h));
                    int col = 3 * j + k;
                    jac(0, col) = diff.a;
                    jac(1, col) = diff.b;
                    jac(2, col) = diff.c;
                    jac(3, col) = diff.d;
                }
            }

            Eigen::VectorXcd delta = jac.completeOrthogonalDecomposition().solve(-r);
            if (!delta.allFinite())
                return std::nullopt;

            // Backtracking: halve the step until the residual improves.
            double scale = 1.0;
            bool improved = false;
            for (int bt = 0; bt < 12; ++bt) {
                RepPoint trial = x;
                for (int j = 0; j < n_generators; ++j) {
                    Mat2 t{scale * delta(3 * j), scale * delta(3 * j + 1), scale * delta(3 * j + 2),
                           -scale * delta(3 * j)};
                    trial.matrices[static_cast<std::size_t>(j)] =
                        (x.matrices[static_cast<std::size_t>(j)] * (Mat2::identity() + t)).normalized_sl2();
                }
                double trial_res = residual_of(trial);
                if (trial_res < res) {
                    x = trial;
                    res = trial_res;
                    improved = true;
                    break;
                }
                scale *= 0.5;
            }
            if (!improved)
                return std::nullopt; // stalled; reseed advised
        }
        if (residual_of(x) < opts.tol)
            return x;
    } catch (const std::runtime_error&) {
        return std::nullopt; // degenerate retraction
    }
    return std::nullopt;
}

RankReport fiber_rank(const FreeWord& w, const RepPoint& point, double fd_step, double rank_rtol) {
    if (w.max_generator() >= static_cast<int>(point.size()))
        throw std::invalid_argument("fiber_rank: word uses an undeclared generator");
    const int n = static_cast<int>(point.size());
    const int dims = 3 * n;

    Mat2 value = eval_word(w, point);
    double res_plus = max_abs_diff(value, Mat2::identity());
    double res_minus = max_abs_diff(value, Mat2::identity().scaled(-1.0));
    double residual = std::min(res_plus, res_minus);
    if (residual >= 1e-8)
        throw std::invalid_argument("fiber_rank: point is not near the w = +-I fibers");

    Mat2 value_inv = value.inverse_unimodular();
    Eigen::MatrixXcd jac(3, dims);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < 3; ++k) {
            RepPoint plus = point, minus = point;
            Mat2 step = kSl2Basis[k].scaled(fd_step);
            plus.matrices[static_cast<std::size_t>(j)] =
                point.matrices[static_cast<std::size_t>(j)] * (Mat2::identity() + step);
            minus.matrices[static_cast<std::size_t>(j)] =
                point.matrices[static_cast<std::size_t>(j)] * (Mat2::identity() - step);
            Mat2 diff = (eval_word(w, plus) - eval_word(w, minus)).scaled(1.0 / (2.0 * fd_step));
            // Coordinates in the trace-zero tangent space at the word value.
            Mat2 tangent = value_inv * diff;
            cplx half_trace = tangent.trace() * 0.5;
            int col = 3 * j + k;
            jac(0, col) = tangent.a - half_trace;
            jac(1, col) = tangent.b;
            jac(2, col) = tangent.c;
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jac);
    Eigen::VectorXd sv = svd.singularValues();

    RankReport report;
    report.fd_step = fd_step;
    report.rank_rtol = rank_rtol;
    report.residual = residual;
    for (int i = 0; i < 3; ++i)
        report.singular_values[static_cast<std::size_t>(i)] = i < sv.size() ? sv(i) : 0.0;
    double sigma_max = report.singular_values[0];
    if (sigma_max < 1e-12) {
        report.degenerate = true;
        report.rank = 0;
    } else {
        for (double s : report.singular_values)
            if (s > rank_rtol * sigma_max)
                ++report.rank;
    }
    report.fiber_dim_estimate = dims - report.rank;
    return report;
}

std::vector<Mat2> abelian_embedding(int n) {
    if (n < 0)
        throw std::invalid_argument("abelian_embedding: negative count");
    std::vector<Mat2> out;
    out.reserve(static_cast<std::size_t>(n));
    long long candidate = 3;
    while (static_cast<int>(out.size()) < n) {
        bool prime = true;
        for (long long d = 3; d * d <= candidate; d += 2)
            if (candidate % d == 0) {
                prime = false;
                break;
            }
        if (prime)
            out.push_back(Mat2::diag(static_cast<double>(candidate), 1.0 / static_cast<double>(candidate)));
        candidate += 2;
    }
    return out;
}

Mat2 psl2_canonical(const Mat2& m) {
    const cplx entries[4] = {m.a, m.b, m.c, m.d};
    for (const cplx& z : entries) {
        if (std::abs(z) <= 1e-9)
            continue;
        bool keep;
        if (z.real() > 0.0)
            keep = true;
        else if (z.real() < 0.0)
            keep = false;
        else
            keep = z.imag() > 0.0;
        return keep ? m : -m;
    }
    throw std::invalid_argument("psl2_canonical: zero matrix");
}

} // namespace repvar
