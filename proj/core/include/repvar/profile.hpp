#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace repvar {

/// The two algebraic groups handled here. Both are 3-dimensional; they
/// differ in the order of the center.
enum class GroupTag { SL2C, PSL2C };

constexpr int group_dim(GroupTag) { return 3; }
constexpr int center_order(GroupTag g) { return g == GroupTag::SL2C ? 2 : 1; }
std::string to_string(GroupTag g);

/// Component counts of a variety by dimension: the tuple (N_d, ..., N_0)
/// where N_i counts irreducible components of dimension exactly i and
/// d is the dimension of the variety.
///
/// Stored canonically: the leading entry is nonzero, except for the
/// distinguished empty-variety value (dim 0, flagged empty). Evaluating
/// at a larger ambient dimension pads with zeros on the left, which are
/// discarded again when trimming back to canonical form.
class Profile {
public:
    static Profile empty_variety();

    /// The zero-dimensional profile (k) with k point components.
    static Profile points(long long k);

    /// From counts listed top-down (N_dim, ..., N_0); length must be
    /// dim+1. Leading zeros are trimmed; all-zero counts yield the
    /// empty variety.
    static Profile from_counts(int dim, std::vector<long long> counts);

    bool empty() const { return empty_; }
    int dim() const { return dim_; }

    /// Counts (N_d, ..., N_0); empty vector for the empty variety.
    const std::vector<long long>& counts() const { return counts_; }

    /// N_i for any i >= 0 (zero above the dimension or on the empty variety).
    long long count_at(int dimension) const;

    long long total_components() const;

    bool operator==(const Profile&) const = default;

private:
    bool empty_ = true;
    int dim_ = 0;
    std::vector<long long> counts_;
};

/// Re-express p at ambient dimension n >= dim(p), then discard entries
/// left of the leftmost nonzero one. Idempotent; returns the canonical
/// form of p.
Profile trim(const Profile& p, int n);

/// Same dimension and same trimmed count sequence.
bool same_profile(const Profile& p, const Profile& q);

/// Profile of a product variety: since irreducible components of a
/// product are exactly the products of components, the counts convolve:
/// N_k = sum over i+j=k of N_i(p) * N_j(q). Commutative, associative,
/// with the single-point profile as identity. Applied to representation
/// varieties of free products, where R_A(G1*G2) = R_A(G1) x R_A(G2).
Profile convolve(const Profile& p, const Profile& q);

std::string to_string(const Profile& p);

/// Component counts of {x in SL(2,C) : x^n = 1}:
///   n even: ((n-2)/2, 0, 2)   n odd: ((n-1)/2, 0, 1)   n = 1: (1).
Profile cyclic_profile_sl2(long long n);

/// Component counts of Hom(Z_n, PSL(2,C)):
///   n even: (n/2, 0, 1)       n odd: ((n-1)/2, 0, 1)   n = 1: (1).
Profile cyclic_profile_psl2(long long n);

/// Profile of A^n for either group tag: one component of dimension 3n.
Profile free_group_profile(int n);

/// Closed form for Hom(Z_m * Z_n, PSL(2,C)), m,n >= 2, by parity:
///   (mn/4,        0, (m+n)/2,   0, 1)   m, n even
///   (n(m-1)/4,    0, (m+n-1)/2, 0, 1)   m odd,  n even
///   (m(n-1)/4,    0, (m+n-1)/2, 0, 1)   m even, n odd
///   ((m-1)(n-1)/4,0, (m+n-2)/2, 0, 1)   m, n odd
/// Always equals the convolution of the two cyclic PSL2 profiles.
Profile free_product_cyclic_profile_psl2(long long m, long long n);

/// Number of 4-dimensional components of Hom(G_pt, SL(2,C)) for the
/// group <x,y ; x^p = y^t>:
///   both even: ((p-2)(t-2) + pt)/4    otherwise: (p-1)(t-1)/2.
long long torus_n4_sl2(long long p, long long t);

/// Number of 4-dimensional components of Hom(G_pt, PSL(2,C)):
///   both odd: (p-1)(t-1)/4   p even, t odd: p(t-1)/4
///   p odd, t even: t(p-1)/4  both even: pt/4.
long long torus_n4_psl2(long long p, long long t);

/// Lower bound 3 * (generators - relators) on the dimension of every
/// component of the representation variety of a presentation of
/// nonnegative deficiency. Throws on negative deficiency.
long long deficiency_lower_bound(long long n_gens, long long n_rels, GroupTag group);

struct PinchedDimension {
    int dim = 0;
    bool reducible = false;
};

/// Dimension of Hom(G, PSL(2,C)) for G = <X, y ; W(X) = y^p> with |X| = n,
/// p > 1, W nontrivial and reduced, given dim Hom(G', PSL(2,C)) for
/// G' = <X ; W = 1>:
///   dim = max(3n, dim(G') + 2) <= 3n + 1,
/// and the variety is reducible when dim(G') + 2 >= 3n.
/// Requires 3(n-1) <= dim_g_prime < 3n.
PinchedDimension pinched_dimension_psl2(int n, long long p, int dim_g_prime);

/// Whether p equals the profile of Hom(F_n, A) = A^n, i.e. a single
/// component of dimension 3n. For a group that embeds a rank-2 free
/// group this is the freeness criterion's hypothesis.
bool freeness_consistent(int n, GroupTag group, const Profile& p);

} // namespace repvar
