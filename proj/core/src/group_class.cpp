#include "repvar/group_class.hpp"

namespace repvar {

std::string to_string(const GroupClass& c) {
    switch (c.kind) {
    case GroupKind::Cyclic:
        return "cyclic(" + std::to_string(c.a) + ")";
    case GroupKind::TorusKnot:
        return "torus-knot(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
    case GroupKind::OrientableSurface:
        return "orientable-surface(g=" + std::to_string(c.a) + ")";
    case GroupKind::NonOrientableSurface:
        return "non-orientable-surface(g=" + std::to_string(c.a) + ")";
    case GroupKind::FreeProductCyclic:
        return "free-product-cyclic(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
    case GroupKind::Free:
        return "free(" + std::to_string(c.a) + ")";
    case GroupKind::Custom:
        return "custom(" + c.name + ")";
    }
    return "?";
}

void check_parameters(const GroupClass& c) {
    switch (c.kind) {
    case GroupKind::Cyclic:
        if (c.a < 1)
            throw std::invalid_argument("cyclic order must be >= 1");
        break;
    case GroupKind::TorusKnot:
        if (c.a < 2 || c.b < 2)
            throw std::invalid_argument("torus knot exponents must be >= 2");
        break;
    case GroupKind::OrientableSurface:
    case GroupKind::NonOrientableSurface:
        if (c.a < 1)
            throw std::invalid_argument("surface genus must be >= 1");
        break;
    case GroupKind::FreeProductCyclic:
        if (c.a < 2 || c.b < 2)
            throw std::invalid_argument("free product factors must have order >= 2");
        break;
    case GroupKind::Free:
        if (c.a < 0)
            throw std::invalid_argument("free rank must be >= 0");
        break;
    case GroupKind::Custom:
        break;
    }
}

} // namespace repvar
