#include "repvar/torsion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace repvar {

std::string to_string(CentralValue c) {
    return c == CentralValue::PlusI ? "+I" : "-I";
}

namespace {

ClassDescriptor central(GroupTag g, long long n, CentralValue v) {
    ClassDescriptor c;
    c.group = g;
    c.kind = ClassKind::CentralPoint;
    c.modulus = n;
    c.central_value = v;
    c.dim = 0;
    return c;
}

ClassDescriptor two_dim(GroupTag g, long long n, long long exponent) {
    ClassDescriptor c;
    c.group = g;
    c.kind = ClassKind::TwoDimClass;
    c.modulus = n;
    c.eigen_exponent = exponent;
    c.dim = 2;
    return c;
}

// Union-find over exponents, used to merge identification orbits.
struct UnionFind {
    std::vector<long long> parent;
    explicit UnionFind(long long size) : parent(static_cast<std::size_t>(size)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    long long find(long long x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[parent[static_cast<std::size_t>(x)]];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(long long a, long long b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (a > b)
            std::swap(a, b); // keep the smallest exponent as representative
        parent[static_cast<std::size_t>(b)] = a;
    }
};

} // namespace

namespace {

bool admissible(long long p, long long n) {
    return p > 0 && p < 2 * n && p != n;
}

// Orbit representatives of the admissible exponents under the given
// identification relations: smallest exponent of each orbit, ascending.
template <typename Relations>
std::vector<long long> merge_exponents(long long n, bool wanted_parity_only, long long parity,
                                       Relations&& relate) {
    UnionFind uf(2 * n);
    std::vector<bool> in_play(static_cast<std::size_t>(2 * n), false);
    for (long long p = 1; p < 2 * n; ++p) {
        if (!admissible(p, n))
            continue;
        if (wanted_parity_only && p % 2 != parity)
            continue;
        in_play[static_cast<std::size_t>(p)] = true;
    }
    for (long long p = 1; p < 2 * n; ++p)
        if (in_play[static_cast<std::size_t>(p)])
            relate(uf, p);
    std::vector<long long> reps;
    for (long long p = 1; p < 2 * n; ++p)
        if (in_play[static_cast<std::size_t>(p)] && uf.find(p) == p)
            reps.push_back(p);
    return reps;
}

} // namespace

std::vector<ClassDescriptor> enumerate_sl2(long long n, CentralValue target) {
    if (n < 1)
        throw std::invalid_argument("enumerate_sl2: n must be >= 1");
    std::vector<ClassDescriptor> out;

    // Central solutions cI: c = +1 solves x^n = I always; c = -1 solves
    // x^n = I iff n is even and x^n = -I iff n is odd.
    if (target == CentralValue::PlusI) {
        out.push_back(central(GroupTag::SL2C, n, CentralValue::PlusI));
        if (n % 2 == 0)
            out.push_back(central(GroupTag::SL2C, n, CentralValue::MinusI));
    } else if (n % 2 != 0) {
        out.push_back(central(GroupTag::SL2C, n, CentralValue::MinusI));
    }

    // Non-central solutions have eigenvalues e^{+-p pi i / n} with
    // (-1)^p = target, over the admissible exponents p in (0,2n) \ {n}.
    // Same-trace conjugacy identifies diag(p,-p) with diag(2n-p, p-2n).
    long long parity = target == CentralValue::PlusI ? 0 : 1;
    std::vector<long long> reps =
        merge_exponents(n, true, parity, [n](UnionFind& uf, long long p) { uf.unite(p, 2 * n - p); });
    for (long long p : reps)
        out.push_back(two_dim(GroupTag::SL2C, n, p));
    return out;
}

std::vector<ClassDescriptor> enumerate_psl2(long long n) {
    if (n < 1)
        throw std::invalid_argument("enumerate_psl2: n must be >= 1");
    std::vector<ClassDescriptor> out;
    // All central points of both SL2 targets project to the identity class.
    out.push_back(central(GroupTag::PSL2C, n, CentralValue::PlusI));

    // Union of the x^n = +I and x^n = -I exponents (both parities),
    // merged under the SL2 identification p ~ 2n - p together with
    // central multiplication: -diag(p,-p) is diag of exponent p + n
    // mod 2n, which becomes a conjugacy relation after projection.
    std::vector<long long> reps = merge_exponents(n, false, 0, [n](UnionFind& uf, long long p) {
        uf.unite(p, 2 * n - p);
        long long shifted = (p + n) % (2 * n);
        if (admissible(shifted, n))
            uf.unite(p, shifted);
    });
    for (long long p : reps)
        out.push_back(two_dim(GroupTag::PSL2C, n, p));
    return out;
}

Profile profile_from_classes(const std::vector<ClassDescriptor>& classes) {
    if (classes.empty())
        return Profile::empty_variety();
    int max_dim = 0;
    for (const ClassDescriptor& c : classes)
        max_dim = std::max(max_dim, c.dim);
    std::vector<long long> counts(static_cast<std::size_t>(max_dim) + 1, 0);
    for (const ClassDescriptor& c : classes)
        counts[static_cast<std::size_t>(max_dim - c.dim)] += 1;
    return Profile::from_counts(max_dim, std::move(counts));
}

long long two_dim_count_sl2(long long n, CentralValue target) {
    long long k = 0;
    for (const ClassDescriptor& c : enumerate_sl2(n, target))
        if (c.kind == ClassKind::TwoDimClass)
            ++k;
    return k;
}

long long two_dim_count_psl2(long long n) {
    long long k = 0;
    for (const ClassDescriptor& c : enumerate_psl2(n))
        if (c.kind == ClassKind::TwoDimClass)
            ++k;
    return k;
}

std::string dump_class_line(const ClassDescriptor& c) {
    std::string kind = c.kind == ClassKind::CentralPoint
                           ? (c.central_value == CentralValue::PlusI ? "central+1" : "central-1")
                           : "class";
    std::string exponent = c.eigen_exponent ? std::to_string(*c.eigen_exponent) : "-";
    return to_string(c.group) + " " + std::to_string(c.modulus) + " " + kind + " " + exponent + " " +
           std::to_string(c.dim);
}

} // namespace repvar
