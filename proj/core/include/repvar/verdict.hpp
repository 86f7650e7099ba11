#pragma once

#include <string>
#include <vector>

#include "repvar/profile.hpp"
#include "repvar/word.hpp"

namespace repvar {

enum class VerdictKind {
    DimensionComputed,
    Reducible,
    ProfilesDiffer,
    NoLiftStratum,
    AllLift,
    FreenessConsistent,
    Unknown,
};

std::string to_string(VerdictKind k);

/// One entry of a verdict's justification chain: a rule id from the
/// registry below plus the statement applied.
struct Citation {
    std::string rule;
    std::string statement;
    bool operator==(const Citation&) const = default;
};

/// A structured conclusion. Every verdict carries at least one citation;
/// Unknown cites the reason no rule applied.
struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    std::string statement;
    std::vector<Citation> citations;
};

/// Registry of the decision rules the verdict engine can cite.
namespace rules {

struct Rule {
    const char* id;
    const char* statement;
};

/// One-relator group, relator in the commutator subgroup: if the SL2
/// variety is irreducible and w = -I has a solution, the SL2 and PSL2
/// profiles differ.
extern const Rule profile_divergence_commutator;

/// One-relator group, every exponent sum even: same conclusion under
/// the same irreducibility and nonemptiness evidence.
extern const Rule profile_divergence_even_exponent;

/// A generator with even nonzero exponent sum s gives a solution of
/// w = -I by sending it to any matrix m with m^s = -I and the rest to I.
extern const Rule vminus_even_sum_witness;

/// When the w = I and w = -I sets are stable under coordinatewise sign
/// flips, no PSL2 representation whose tuple lies in the image of the
/// w = -I set lifts to SL2.
extern const Rule lift_obstruction_minus_stratum;

/// Odd total exponent sum: the global sign flip swaps the w = I and
/// w = -I sets, so every PSL2 representation lifts.
extern const Rule lift_all_global_flip;

/// dim Hom(<X,y ; W = y^p>, PSL2) = max(3n, dim Hom(<X ; W>, PSL2) + 2)
/// <= 3n + 1; reducible when the second branch reaches 3n.
extern const Rule pinched_dimension;

/// Closed forms for the number of 4-dimensional components of torus
/// knot group representation varieties, by parity of the exponents.
extern const Rule torus_component_counts;

/// For p, t >= 3 the SL2 and PSL2 counts of 4-dimensional components
/// never agree; they coincide exactly when p = 2 or t = 2.
extern const Rule torus_divergence;

/// An n-generated group whose representation variety has the profile of
/// the rank-n free group satisfies the freeness criterion's hypothesis.
extern const Rule freeness_profile;

/// Every component of the representation variety of a deficiency-d
/// presentation has dimension >= 3d.
extern const Rule deficiency_bound;

} // namespace rules

Citation cite(const rules::Rule& r);

/// Compare the torus-knot component counts at dimension four. For
/// p, t >= 3 this yields ProfilesDiffer; otherwise Unknown, since the
/// two closed forms coincide when p = 2 or t = 2.
Verdict torus_profiles_differ(long long p, long long t);

/// Profile-divergence verdict for the one-relator group <x_1..x_n ; w>.
/// Evidence flags assert that the SL2 representation variety is
/// irreducible and that w = -I has a solution; neither is ever assumed.
/// The nonemptiness flag is auto-supplied when some exponent sum is
/// even and nonzero.
Verdict theorem_ab_verdict(const FreeWord& w, int n, bool sl2_irreducible, bool v_minus_nonempty);

/// Lift diagnosis for <x_1..x_n ; w> from the parity of exponent sums.
Verdict lift_diagnosis(const FreeWord& w, int n);

/// Dimension/reducibility verdict wrapping pinched_dimension_psl2.
Verdict pinched_dimension_verdict(int n, long long p, int dim_g_prime);

} // namespace repvar
