#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "repvar/group_class.hpp"
#include "repvar/profile.hpp"
#include "repvar/word.hpp"

namespace repvar {

enum class FactProperty {
    Sl2Irreducible,
    Sl2Dimension,
    Embeds,
    DoesNotEmbed,
    Psl2QuotientInputDim,
    Genus,
};

std::string to_string(FactProperty p);

/// A literature-backed fact about a concrete group class. Facts always
/// carry their source tag and a statement, so verdict justifications
/// can be audited.
struct CatalogFact {
    GroupClass subject;
    FactProperty property = FactProperty::Sl2Irreducible;
    std::optional<long long> value;
    std::string source;
    std::string note;
};

/// Knowledge base of group-class facts, loaded from a line-oriented
/// text file (one record per line, fields separated by '|'; see
/// data/catalog_facts.txt for the schema). The built-in catalog holds
/// the same records compiled in.
class Catalog {
public:
    struct Record {
        GroupKind kind = GroupKind::Custom;
        std::string custom_name;     // Custom subjects match by name
        long long genus_min = -1;    // g>=N constraint, -1 when absent
        long long genus_exact = -1;  // g==N constraint, -1 when absent
        bool requires_coprime = false;
        FactProperty property = FactProperty::Sl2Irreducible;
        // Value spec: none, a fixed integer, `Ag+B` linear in the genus,
        // or the torus-knot genus formula (p-1)(t-1)/2.
        enum class ValueKind { None, Fixed, LinearGenus, TorusGenus } value_kind = ValueKind::None;
        long long fixed = 0;
        long long lin_a = 0, lin_b = 0;
        std::string source;
        std::string note;
        bool operator==(const Record&) const = default;
    };

    static Catalog builtin();
    static Catalog parse(std::istream& in);
    static Catalog load_file(const std::string& path);

    const std::vector<Record>& records() const { return records_; }

    /// All facts applying to the class, with parameter-dependent values
    /// instantiated. Classes with invalid parameters throw.
    std::vector<CatalogFact> facts_for(const GroupClass& c) const;

private:
    std::vector<Record> records_;
};

/// Canonical presentation of a known class:
///   cyclic n            <x ; x^n>
///   torus knot p,t      <x,y ; x^p y^-t>
///   orientable g        2g generators, product of the g commutators
///   non-orientable g    <x_1..x_g ; x_1^2 ... x_g^2>
///   free product m,n    <x,y ; x^m, y^n>
///   free n              n generators, no relators
/// Generators are named x,y,z up to rank 3 and x1..xk beyond.
Presentation canonical_presentation(const GroupClass& c);

/// Alternate presentation <x_1..x_g ; [x_1,x_2] x_3^2 ... x_g^2> of the
/// non-orientable surface of genus g >= 3.
std::optional<Presentation> variant_presentation(const GroupClass& c);

/// Pattern-match a presentation against the canonical shapes above.
std::optional<GroupClass> detect_class(const Presentation& p);

/// A worked example kept for regression display: a presentation, the
/// group tag, and its known profile.
struct RecordedExample {
    std::string label;
    Presentation presentation;
    GroupTag group = GroupTag::SL2C;
    Profile profile;
};

std::vector<RecordedExample> recorded_examples();

} // namespace repvar
