#include "repvar/verdict.hpp"

namespace repvar {

std::string to_string(VerdictKind k) {
    switch (k) {
    case VerdictKind::DimensionComputed: return "DimensionComputed";
    case VerdictKind::Reducible: return "Reducible";
    case VerdictKind::ProfilesDiffer: return "ProfilesDiffer";
    case VerdictKind::NoLiftStratum: return "NoLiftStratum";
    case VerdictKind::AllLift: return "AllLift";
    case VerdictKind::FreenessConsistent: return "FreenessConsistent";
    case VerdictKind::Unknown: return "Unknown";
    }
    return "?";
}

namespace rules {

const Rule profile_divergence_commutator = {
    "profile-divergence/commutator-relator",
    "one-relator group with relator in the commutator subgroup: if the SL2 representation variety is "
    "irreducible and w = -I is solvable, the SL2 and PSL2 profiles differ"};

const Rule profile_divergence_even_exponent = {
    "profile-divergence/even-exponent",
    "one-relator group whose relator has even exponent sum on every generator: if the SL2 representation "
    "variety is irreducible and w = -I is solvable, the SL2 and PSL2 profiles differ"};

const Rule vminus_even_sum_witness = {
    "vminus-witness/even-nonzero-sum",
    "a generator with even nonzero exponent sum s yields a solution of w = -I: send it to any m with "
    "m^s = -I and every other generator to I"};

const Rule lift_obstruction_minus_stratum = {
    "lift/minus-stratum-obstruction",
    "when the w = I and w = -I solution sets are stable under coordinatewise sign flips, no PSL2 "
    "representation whose tuple lies in the image of the w = -I set has an SL2 lift"};

const Rule lift_all_global_flip = {
    "lift/global-flip",
    "odd total exponent sum: negating every coordinate multiplies the word value by -1 and swaps the "
    "w = I and w = -I sets, so every PSL2 representation lifts"};

const Rule pinched_dimension = {
    "dimension/cyclically-pinched",
    "for G = <X, y ; W(X) = y^p>, |X| = n, p > 1: dim Hom(G, PSL2) = max(3n, dim Hom(G', PSL2) + 2) "
    "<= 3n + 1 with G' = <X ; W>; reducible when dim Hom(G', PSL2) + 2 >= 3n"};

const Rule torus_component_counts = {
    "count/torus-knot-dim4",
    "number of 4-dimensional components for <x,y ; x^p = y^t>: over SL2, ((p-2)(t-2)+pt)/4 when p and t "
    "are both even, else (p-1)(t-1)/2; over PSL2, the parity-split products pt/4, p(t-1)/4, t(p-1)/4, "
    "(p-1)(t-1)/4"};

const Rule torus_divergence = {
    "profile-divergence/torus-knot",
    "for p, t >= 3 the SL2 and PSL2 counts of 4-dimensional components never agree; equality occurs "
    "exactly when p = 2 or t = 2"};

const Rule freeness_profile = {
    "freeness/full-dimension-profile",
    "an n-generated group whose representation variety is a single irreducible component of dimension "
    "3n has the profile of the rank-n free group, the hypothesis of the freeness criterion"};

const Rule deficiency_bound = {
    "bound/deficiency",
    "every irreducible component of the representation variety of a deficiency-d presentation over a "
    "3-dimensional group has dimension >= 3d"};

} // namespace rules

Citation cite(const rules::Rule& r) {
    return Citation{r.id, r.statement};
}

Verdict torus_profiles_differ(long long p, long long t) {
    long long sl2 = torus_n4_sl2(p, t);
    long long psl2 = torus_n4_psl2(p, t);
    Verdict v;
    std::string counts = "N4(SL2) = " + std::to_string(sl2) + ", N4(PSL2) = " + std::to_string(psl2);
    if (p >= 3 && t >= 3) {
        v.kind = VerdictKind::ProfilesDiffer;
        v.statement = "profiles differ at dimension 4 for <x,y ; x^" + std::to_string(p) + " = y^" +
                      std::to_string(t) + ">: " + counts;
        v.citations = {cite(rules::torus_divergence), cite(rules::torus_component_counts)};
    } else {
        v.kind = VerdictKind::Unknown;
        v.statement = "equality possible when p = 2 or t = 2: " + counts;
        v.citations = {cite(rules::torus_divergence)};
    }
    return v;
}

Verdict theorem_ab_verdict(const FreeWord& w, int n, bool sl2_irreducible, bool v_minus_nonempty) {
    if (w.trivial())
        throw std::invalid_argument("theorem_ab_verdict: trivial relator");
    ExponentProfile sums = exponent_profile(w, n);
    bool commutator = in_commutator_subgroup(w, n);
    bool pm = pm_condition_holds(w, n);

    Verdict v;
    if (!commutator && !pm) {
        v.kind = VerdictKind::Unknown;
        v.statement = "neither the commutator-subgroup condition nor the all-even-exponent condition holds";
        v.citations = {cite(rules::profile_divergence_even_exponent)};
        return v;
    }

    bool auto_witness = false;
    if (!v_minus_nonempty && pm) {
        for (long long s : sums.sums) {
            if (s != 0 && s % 2 == 0) {
                auto_witness = true;
                v_minus_nonempty = true;
                break;
            }
        }
    }

    if (!sl2_irreducible) {
        v.kind = VerdictKind::Unknown;
        v.statement = "no evidence that the SL2 representation variety is irreducible";
        v.citations = {cite(commutator ? rules::profile_divergence_commutator
                                       : rules::profile_divergence_even_exponent)};
        return v;
    }
    if (!v_minus_nonempty) {
        v.kind = VerdictKind::Unknown;
        v.statement = "no evidence that w = -I has a solution";
        v.citations = {cite(commutator ? rules::profile_divergence_commutator
                                       : rules::profile_divergence_even_exponent)};
        return v;
    }

    v.kind = VerdictKind::ProfilesDiffer;
    v.statement = "the SL2 and PSL2 profiles of the one-relator group differ";
    v.citations = {cite(commutator ? rules::profile_divergence_commutator
                                   : rules::profile_divergence_even_exponent)};
    if (auto_witness)
        v.citations.push_back(cite(rules::vminus_even_sum_witness));
    return v;
}

Verdict lift_diagnosis(const FreeWord& w, int n) {
    if (w.trivial())
        throw std::invalid_argument("lift_diagnosis: trivial relator");
    Verdict v;
    if (minus_condition_holds(w, n)) {
        v.kind = VerdictKind::AllLift;
        v.statement = "every PSL2 representation of the one-relator group lifts to SL2";
        v.citations = {cite(rules::lift_all_global_flip)};
    } else if (pm_condition_holds(w, n)) {
        v.kind = VerdictKind::NoLiftStratum;
        v.statement = "no PSL2 representation with tuple in the image of the w = -I set lifts "
                      "(the stratum is nonempty only if w = -I is solvable)";
        v.citations = {cite(rules::lift_obstruction_minus_stratum)};
    } else {
        v.kind = VerdictKind::Unknown;
        v.statement = "neither parity condition holds; lift behavior not decided by these rules";
        v.citations = {cite(rules::lift_all_global_flip), cite(rules::lift_obstruction_minus_stratum)};
    }
    return v;
}

Verdict pinched_dimension_verdict(int n, long long p, int dim_g_prime) {
    PinchedDimension d = pinched_dimension_psl2(n, p, dim_g_prime);
    Verdict v;
    v.kind = d.reducible ? VerdictKind::Reducible : VerdictKind::DimensionComputed;
    v.statement = "dim Hom(G, PSL2) = " + std::to_string(d.dim) +
                  (d.reducible ? "; the variety is reducible" : "; reducibility not implied");
    v.citations = {cite(rules::pinched_dimension)};
    return v;
}

} // namespace repvar
