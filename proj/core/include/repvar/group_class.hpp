#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace repvar {

enum class GroupKind {
    Cyclic,               // Z_n, n >= 1
    TorusKnot,            // <x,y ; x^p = y^t>, p,t >= 2
    OrientableSurface,    // genus g >= 1
    NonOrientableSurface, // genus g >= 1
    FreeProductCyclic,    // Z_m * Z_n, m,n >= 2
    Free,                 // F_n, n >= 0
    Custom,
};

/// A known group class with its parameters. `a`/`b` hold (n), (p,t), (g),
/// (m,n) or the free rank depending on the kind; Custom classes are keyed
/// by name.
struct GroupClass {
    GroupKind kind = GroupKind::Custom;
    long long a = 0;
    long long b = 0;
    std::string name;

    static GroupClass cyclic(long long n) { return {GroupKind::Cyclic, n, 0, ""}; }
    static GroupClass torus_knot(long long p, long long t) { return {GroupKind::TorusKnot, p, t, ""}; }
    static GroupClass orientable_surface(long long g) { return {GroupKind::OrientableSurface, g, 0, ""}; }
    static GroupClass non_orientable_surface(long long g) { return {GroupKind::NonOrientableSurface, g, 0, ""}; }
    static GroupClass free_product_cyclic(long long m, long long n) { return {GroupKind::FreeProductCyclic, m, n, ""}; }
    static GroupClass free_group(long long rank) { return {GroupKind::Free, rank, 0, ""}; }
    static GroupClass custom(std::string name) { return {GroupKind::Custom, 0, 0, std::move(name)}; }

    bool operator==(const GroupClass&) const = default;
};

std::string to_string(const GroupClass& c);

/// Throws std::invalid_argument when the parameters are out of range for
/// the kind (n >= 1, p,t >= 2, g >= 1, m,n >= 2, rank >= 0).
void check_parameters(const GroupClass& c);

} // namespace repvar
