#include "repvar/profile.hpp"

#include <algorithm>

namespace repvar {

std::string to_string(GroupTag g) {
    return g == GroupTag::SL2C ? "SL2C" : "PSL2C";
}

Profile Profile::empty_variety() {
    return Profile{};
}

Profile Profile::points(long long k) {
    if (k < 0)
        throw std::invalid_argument("Profile::points: negative count");
    return from_counts(0, {k});
}

Profile Profile::from_counts(int dim, std::vector<long long> counts) {
    if (dim < 0)
        throw std::invalid_argument("Profile::from_counts: negative dimension");
    if (counts.size() != static_cast<std::size_t>(dim) + 1)
        throw std::invalid_argument("Profile::from_counts: counts length must be dim+1");
    for (long long c : counts)
        if (c < 0)
            throw std::invalid_argument("Profile::from_counts: negative component count");
    std::size_t lead = 0;
    while (lead < counts.size() && counts[lead] == 0)
        ++lead;
    if (lead == counts.size())
        return empty_variety();
    Profile p;
    p.empty_ = false;
    p.dim_ = dim - static_cast<int>(lead);
    p.counts_.assign(counts.begin() + static_cast<std::ptrdiff_t>(lead), counts.end());
    return p;
}

long long Profile::count_at(int dimension) const {
    if (empty_ || dimension < 0 || dimension > dim_)
        return 0;
    return counts_[static_cast<std::size_t>(dim_ - dimension)];
}

long long Profile::total_components() const {
    long long t = 0;
    for (long long c : counts_)
        t += c;
    return t;
}

Profile trim(const Profile& p, int n) {
    if (p.empty())
        return p;
    if (n < p.dim())
        throw std::invalid_argument("trim: ambient dimension below the profile dimension");
    std::vector<long long> padded(static_cast<std::size_t>(n - p.dim()), 0);
    padded.insert(padded.end(), p.counts().begin(), p.counts().end());
    return Profile::from_counts(n, std::move(padded));
}

bool same_profile(const Profile& p, const Profile& q) {
    return p == q;
}

Profile convolve(const Profile& p, const Profile& q) {
    if (p.empty() || q.empty())
        throw std::invalid_argument("convolve: empty input profile");
    int d = p.dim() + q.dim();
    std::vector<long long> out(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i <= p.dim(); ++i)
        for (int j = 0; j <= q.dim(); ++j)
            out[static_cast<std::size_t>(d - (i + j))] += p.count_at(i) * q.count_at(j);
    return Profile::from_counts(d, std::move(out));
}

std::string to_string(const Profile& p) {
    if (p.empty())
        return "empty";
    std::string s = "(";
    for (std::size_t i = 0; i < p.counts().size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(p.counts()[i]);
    }
    s += ")_" + std::to_string(p.dim());
    return s;
}

Profile cyclic_profile_sl2(long long n) {
    if (n < 1)
        throw std::invalid_argument("cyclic_profile_sl2: order must be >= 1");
    if (n == 1)
        return Profile::points(1);
    if (n % 2 == 0)
        return Profile::from_counts(2, {(n - 2) / 2, 0, 2});
    return Profile::from_counts(2, {(n - 1) / 2, 0, 1});
}

Profile cyclic_profile_psl2(long long n) {
    if (n < 1)
        throw std::invalid_argument("cyclic_profile_psl2: order must be >= 1");
    if (n == 1)
        return Profile::points(1);
    if (n % 2 == 0)
        return Profile::from_counts(2, {n / 2, 0, 1});
    return Profile::from_counts(2, {(n - 1) / 2, 0, 1});
}

Profile free_group_profile(int n) {
    if (n < 0)
        throw std::invalid_argument("free_group_profile: negative rank");
    std::vector<long long> counts(static_cast<std::size_t>(3 * n) + 1, 0);
    counts[0] = 1;
    return Profile::from_counts(3 * n, std::move(counts));
}

Profile free_product_cyclic_profile_psl2(long long m, long long n) {
    if (m < 2 || n < 2)
        throw std::invalid_argument("free_product_cyclic_profile_psl2: orders must be >= 2");
    bool me = m % 2 == 0, ne = n % 2 == 0;
    long long n4, n2;
    if (me && ne) {
        n4 = m * n / 4;
        n2 = (m + n) / 2;
    } else if (!me && ne) {
        n4 = n * (m - 1) / 4;
        n2 = (m + n - 1) / 2;
    } else if (me && !ne) {
        n4 = m * (n - 1) / 4;
        n2 = (m + n - 1) / 2;
    } else {
        n4 = (m - 1) * (n - 1) / 4;
        n2 = (m + n - 2) / 2;
    }
    return Profile::from_counts(4, {n4, 0, n2, 0, 1});
}

long long torus_n4_sl2(long long p, long long t) {
    if (p < 2 || t < 2)
        throw std::invalid_argument("torus_n4_sl2: exponents must be >= 2");
    if (p % 2 == 0 && t % 2 == 0)
        return ((p - 2) * (t - 2) + p * t) / 4;
    return (p - 1) * (t - 1) / 2;
}

long long torus_n4_psl2(long long p, long long t) {
    if (p < 2 || t < 2)
        throw std::invalid_argument("torus_n4_psl2: exponents must be >= 2");
    bool pe = p % 2 == 0, te = t % 2 == 0;
    if (pe && te)
        return p * t / 4;
    if (pe && !te)
        return p * (t - 1) / 4;
    if (!pe && te)
        return t * (p - 1) / 4;
    return (p - 1) * (t - 1) / 4;
}

long long deficiency_lower_bound(long long n_gens, long long n_rels, GroupTag group) {
    long long d = n_gens - n_rels;
    if (d < 0)
        throw std::invalid_argument("deficiency_lower_bound: negative deficiency");
    return group_dim(group) * d;
}

PinchedDimension pinched_dimension_psl2(int n, long long p, int dim_g_prime) {
    if (n < 1)
        throw std::invalid_argument("pinched_dimension_psl2: need at least one X generator");
    if (p < 2)
        throw std::invalid_argument("pinched_dimension_psl2: exponent p must be > 1");
    if (dim_g_prime < 3 * (n - 1) || dim_g_prime >= 3 * n)
        throw std::invalid_argument("pinched_dimension_psl2: dim of the base group must lie in [3(n-1), 3n)");
    PinchedDimension r;
    r.dim = std::max(3 * n, dim_g_prime + 2);
    r.reducible = dim_g_prime + 2 >= 3 * n;
    return r;
}

bool freeness_consistent(int n, GroupTag group, const Profile& p) {
    return !p.empty() && same_profile(p, free_group_profile(n)) && group_dim(group) * n == p.dim();
}

} // namespace repvar
