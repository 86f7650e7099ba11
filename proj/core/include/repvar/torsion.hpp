#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repvar/profile.hpp"

namespace repvar {

enum class CentralValue { PlusI, MinusI };

std::string to_string(CentralValue c);

enum class ClassKind { CentralPoint, TwoDimClass };

/// One conjugacy class of solutions of x^n = +-I. A TwoDimClass is the
/// orbit of diag(e^{p pi i / n}, e^{-p pi i / n}) with the canonical
/// (smallest) exponent p of its identification orbit, 0 < p < 2n,
/// p != n; it has dimension 2. A CentralPoint is +-I, dimension 0.
struct ClassDescriptor {
    GroupTag group = GroupTag::SL2C;
    ClassKind kind = ClassKind::CentralPoint;
    long long modulus = 1; // the n of x^n = +-I
    std::optional<long long> eigen_exponent;
    std::optional<CentralValue> central_value;
    int dim = 0;

    bool operator==(const ClassDescriptor&) const = default;
};

/// Conjugacy classes of {x in SL(2,C) : x^n = target}. Solutions are
/// diagonalizable with eigenvalues {z, 1/z}, z^n = +-1; classes are
/// represented by integer eigenvalue exponents and deduplicated under
/// p ~ 2n - p, so all counting is exact. Deterministic ordering:
/// central points first (+I before -I), then classes by exponent.
std::vector<ClassDescriptor> enumerate_sl2(long long n, CentralValue target);

/// Conjugacy classes of {x in PSL(2,C) : x^n = 1}: the projections of
/// the x^n = +I and x^n = -I classes of SL(2,C), with two-dimensional
/// classes additionally merged under central multiplication
/// (p ~ p + n mod 2n) and the central points collapsed to the single
/// identity class.
std::vector<ClassDescriptor> enumerate_psl2(long long n);

/// Aggregate a class list into a profile by dimension. Empty list maps
/// to the empty variety.
Profile profile_from_classes(const std::vector<ClassDescriptor>& classes);

/// Number of two-dimensional classes of x^n = target in SL(2,C).
long long two_dim_count_sl2(long long n, CentralValue target);

/// Number of two-dimensional classes of x^n = 1 in PSL(2,C).
long long two_dim_count_psl2(long long n);

/// Stable dump line: `group n kind exponent dim`. Central points print
/// their sign as the kind (central+1 / central-1) and '-' for the
/// exponent; for SL2 class lines the parity of the exponent recovers
/// the target (even: x^n = I, odd: x^n = -I).
std::string dump_class_line(const ClassDescriptor& c);

} // namespace repvar
