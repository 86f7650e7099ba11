#include "repvar/catalog.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace repvar {

std::string to_string(FactProperty p) {
    switch (p) {
    case FactProperty::Sl2Irreducible: return "sl2_irreducible";
    case FactProperty::Sl2Dimension: return "sl2_dimension";
    case FactProperty::Embeds: return "embeds";
    case FactProperty::DoesNotEmbed: return "does_not_embed";
    case FactProperty::Psl2QuotientInputDim: return "psl2_quotient_input_dim";
    case FactProperty::Genus: return "genus";
    }
    return "?";
}

namespace {

// The shipped fact file holds exactly this text; see data/catalog_facts.txt.
constexpr const char* kBuiltinFacts = R"(# repvar catalog facts
# one record per line, five '|'-separated fields:
#   subject | property | value | source | note
# subject: class kind plus optional constraints (g>=N, g==N, coprime, or a
#          custom class name)
# property: sl2_irreducible, sl2_dimension, embeds, does_not_embed,
#           psl2_quotient_input_dim, genus
# value: '-', an integer, a linear form in the genus like 6g-3, or
#        'seifert' for the torus-knot genus (p-1)(t-1)/2
# sources: RBC1996 = Rapinchuk, Benyash-Krivets, Chernousov, Israel J. Math. 93 (1996) 29-71
#          BC1997  = Benyash-Krivets, Chernousov, Sb. Math. 188 (1997) 997-1039
#          BGSP2006= Breuillard, Gelander, Souto, Storm, Geom. Topol. 10 (2006) 1373-1389
#          L1999   = Liriano, Internat. J. Algebra Comput. 9 (1999) 129-133

orientable_surface g>=1 | sl2_irreducible | - | RBC1996 | the SL(2,C) representation variety of a compact orientable surface group of genus g >= 1 is irreducible
non_orientable_surface g>=3 | sl2_irreducible | - | BC1997 | the SL(2,C) representation variety of a compact non-orientable surface group of genus g >= 3 is irreducible
orientable_surface g==1 | sl2_dimension | 4 | RBC1996 | commuting pairs in SL(2,C) form an irreducible variety of dimension 4
orientable_surface g>=2 | sl2_dimension | 6g-3 | RBC1996 | the SL(2,C) representation variety of an orientable surface group of genus g >= 2 has dimension 6g-3
orientable_surface g==1 | psl2_quotient_input_dim | 4 | RBC1996 | the PSL(2,C) representation variety of Z^2 also has dimension 4: the central quotient preserves dimension and the [x,y] = -I stratum is lower-dimensional
orientable_surface g==1 | embeds | - | classical | Z^2 embeds in SL(2,C) as commuting diagonal matrices with distinct odd prime diagonal entries
orientable_surface g>=2 | embeds | - | BGSP2006 | non-abelian fully residually free groups embed in any connected complex semisimple Lie group
non_orientable_surface g>=4 | embeds | - | BGSP2006 | non-orientable surface groups of genus g >= 4 are fully residually free, hence embed in SL(2,C)
torus_knot coprime | genus | seifert | L1999 | for coprime p,t >= 2 the number of 4-dimensional components over SL(2,C) equals the Seifert genus (p-1)(t-1)/2
custom baumslag-solitar-2-3 | does_not_embed | - | classical | <x,y ; x^-1 y^2 x = y^3> is non-hopfian, so it embeds in no affine algebraic group
)";

std::string strip_copy(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t next = s.find(sep, pos);
        out.push_back(strip_copy(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos)));
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return out;
}

GroupKind parse_kind(const std::string& token) {
    if (token == "cyclic") return GroupKind::Cyclic;
    if (token == "torus_knot") return GroupKind::TorusKnot;
    if (token == "orientable_surface") return GroupKind::OrientableSurface;
    if (token == "non_orientable_surface") return GroupKind::NonOrientableSurface;
    if (token == "free_product_cyclic") return GroupKind::FreeProductCyclic;
    if (token == "free") return GroupKind::Free;
    if (token == "custom") return GroupKind::Custom;
    throw std::runtime_error("catalog: unknown class kind '" + token + "'");
}

FactProperty parse_property(const std::string& token) {
    if (token == "sl2_irreducible") return FactProperty::Sl2Irreducible;
    if (token == "sl2_dimension") return FactProperty::Sl2Dimension;
    if (token == "embeds") return FactProperty::Embeds;
    if (token == "does_not_embed") return FactProperty::DoesNotEmbed;
    if (token == "psl2_quotient_input_dim") return FactProperty::Psl2QuotientInputDim;
    if (token == "genus") return FactProperty::Genus;
    throw std::runtime_error("catalog: unknown property '" + token + "'");
}

void parse_value(const std::string& token, Catalog::Record& rec) {
    using VK = Catalog::Record::ValueKind;
    if (token == "-") {
        rec.value_kind = VK::None;
        return;
    }
    if (token == "seifert") {
        rec.value_kind = VK::TorusGenus;
        return;
    }
    std::size_t g = token.find('g');
    if (g != std::string::npos) {
        // Linear form Ag+B / Ag-B; A defaults to 1.
        std::string a = token.substr(0, g);
        std::string b = token.substr(g + 1);
        rec.value_kind = VK::LinearGenus;
        rec.lin_a = a.empty() ? 1 : std::stoll(a);
        rec.lin_b = b.empty() ? 0 : std::stoll(b);
        return;
    }
    rec.value_kind = VK::Fixed;
    rec.fixed = std::stoll(token);
}

} // namespace

Catalog Catalog::parse(std::istream& in) {
    Catalog cat;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (std::size_t hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = strip_copy(line);
        if (line.empty())
            continue;
        std::vector<std::string> fields = split(line, '|');
        if (fields.size() != 5)
            throw std::runtime_error("catalog line " + std::to_string(line_no) + ": expected 5 fields");

        Record rec;
        std::istringstream subject(fields[0]);
        std::string token;
        subject >> token;
        rec.kind = parse_kind(token);
        while (subject >> token) {
            if (token.rfind("g>=", 0) == 0)
                rec.genus_min = std::stoll(token.substr(3));
            else if (token.rfind("g==", 0) == 0)
                rec.genus_exact = std::stoll(token.substr(3));
            else if (token == "coprime")
                rec.requires_coprime = true;
            else if (rec.kind == GroupKind::Custom && rec.custom_name.empty())
                rec.custom_name = token;
            else
                throw std::runtime_error("catalog line " + std::to_string(line_no) +
                                         ": unknown subject constraint '" + token + "'");
        }
        rec.property = parse_property(fields[1]);
        parse_value(fields[2], rec);
        rec.source = fields[3];
        rec.note = fields[4];
        if (rec.source.empty() || rec.note.empty())
            throw std::runtime_error("catalog line " + std::to_string(line_no) +
                                     ": every fact needs a source and a note");
        cat.records_.push_back(std::move(rec));
    }
    return cat;
}

Catalog Catalog::builtin() {
    std::istringstream in(kBuiltinFacts);
    return parse(in);
}

Catalog Catalog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open catalog file '" + path + "'");
    return parse(in);
}

std::vector<CatalogFact> Catalog::facts_for(const GroupClass& c) const {
    check_parameters(c);
    std::vector<CatalogFact> out;
    for (const Record& rec : records_) {
        if (rec.kind != c.kind)
            continue;
        if (rec.kind == GroupKind::Custom && rec.custom_name != c.name)
            continue;
        if (rec.genus_min >= 0 && c.a < rec.genus_min)
            continue;
        if (rec.genus_exact >= 0 && c.a != rec.genus_exact)
            continue;
        if (rec.requires_coprime && std::gcd(c.a, c.b) != 1)
            continue;

        CatalogFact fact;
        fact.subject = c;
        fact.property = rec.property;
        fact.source = rec.source;
        fact.note = rec.note;
        switch (rec.value_kind) {
        case Record::ValueKind::None:
            break;
        case Record::ValueKind::Fixed:
            fact.value = rec.fixed;
            break;
        case Record::ValueKind::LinearGenus:
            fact.value = rec.lin_a * c.a + rec.lin_b;
            break;
        case Record::ValueKind::TorusGenus:
            fact.value = (c.a - 1) * (c.b - 1) / 2;
            break;
        }
        out.push_back(std::move(fact));
    }
    return out;
}

namespace {

std::vector<Generator> make_generators(long long count) {
    std::vector<Generator> gens;
    static const char* small[3] = {"x", "y", "z"};
    for (long long i = 0; i < count; ++i) {
        if (count <= 3)
            gens.push_back({small[i]});
        else
            gens.push_back({"x" + std::to_string(i + 1)});
    }
    return gens;
}

FreeWord power_letter(int gen, long long exp) {
    return FreeWord::reduce({{gen, exp}});
}

FreeWord commutator(int a, int b) {
    return FreeWord::reduce({{a, 1}, {b, 1}, {a, -1}, {b, -1}});
}

} // namespace

Presentation canonical_presentation(const GroupClass& c) {
    check_parameters(c);
    Presentation p;
    p.class_tag = c;
    switch (c.kind) {
    case GroupKind::Cyclic:
        p.generators = make_generators(1);
        p.relators = {power_letter(0, c.a)};
        break;
    case GroupKind::TorusKnot:
        p.generators = make_generators(2);
        p.relators = {power_letter(0, c.a) * power_letter(1, -c.b)};
        break;
    case GroupKind::OrientableSurface: {
        p.generators = make_generators(2 * c.a);
        FreeWord rel;
        for (long long i = 0; i < c.a; ++i)
            rel = rel * commutator(static_cast<int>(2 * i), static_cast<int>(2 * i + 1));
        p.relators = {rel};
        break;
    }
    case GroupKind::NonOrientableSurface: {
        p.generators = make_generators(c.a);
        FreeWord rel;
        for (long long i = 0; i < c.a; ++i)
            rel = rel * power_letter(static_cast<int>(i), 2);
        p.relators = {rel};
        break;
    }
    case GroupKind::FreeProductCyclic:
        p.generators = make_generators(2);
        p.relators = {power_letter(0, c.a), power_letter(1, c.b)};
        break;
    case GroupKind::Free:
        p.generators = make_generators(c.a);
        break;
    case GroupKind::Custom:
        if (c.name == "baumslag-solitar-2-3") {
            p.generators = make_generators(2);
            p.relators = {FreeWord::reduce({{0, -1}, {1, 2}, {0, 1}, {1, -3}})};
            break;
        }
        throw std::invalid_argument("canonical_presentation: unknown custom class '" + c.name + "'");
    }
    return p;
}

std::optional<Presentation> variant_presentation(const GroupClass& c) {
    if (c.kind != GroupKind::NonOrientableSurface || c.a < 3)
        return std::nullopt;
    Presentation p;
    p.class_tag = c;
    p.generators = make_generators(c.a);
    FreeWord rel = commutator(0, 1);
    for (long long i = 2; i < c.a; ++i)
        rel = rel * power_letter(static_cast<int>(i), 2);
    p.relators = {rel};
    return p;
}

std::optional<GroupClass> detect_class(const Presentation& p) {
    const std::size_t n = p.generators.size();
    if (p.relators.empty())
        return GroupClass::free_group(static_cast<long long>(n));

    if (p.relators.size() == 2 && n == 2) {
        const auto& r0 = p.relators[0].letters();
        const auto& r1 = p.relators[1].letters();
        if (r0.size() == 1 && r1.size() == 1 && r0[0].gen == 0 && r1[0].gen == 1) {
            long long m = std::abs(r0[0].exp), k = std::abs(r1[0].exp);
            if (m >= 2 && k >= 2)
                return GroupClass::free_product_cyclic(m, k);
        }
        return std::nullopt;
    }
    if (p.relators.size() != 1)
        return std::nullopt;
    const auto& ls = p.relators[0].letters();

    if (n == 1 && ls.size() == 1 && ls[0].gen == 0 && std::abs(ls[0].exp) >= 1)
        return GroupClass::cyclic(std::abs(ls[0].exp));

    if (n == 2 && ls.size() == 2 && ls[0].gen != ls[1].gen && ls[0].exp * ls[1].exp < 0) {
        long long e0 = std::abs(ls[0].exp), e1 = std::abs(ls[1].exp);
        long long on_x = ls[0].gen == 0 ? e0 : e1;
        long long on_y = ls[0].gen == 0 ? e1 : e0;
        if (on_x >= 2 && on_y >= 2)
            return GroupClass::torus_knot(on_x, on_y);
    }

    // x_1^2 x_2^2 ... x_g^2 over all generators in order
    if (ls.size() == n && n >= 1) {
        bool ok = true;
        for (std::size_t i = 0; i < ls.size(); ++i)
            if (ls[i].gen != static_cast<int>(i) || ls[i].exp != 2)
                ok = false;
        if (ok)
            return GroupClass::non_orientable_surface(static_cast<long long>(n));
    }

    // [x_1,x_2][x_3,x_4]... over all generators in order
    if (n % 2 == 0 && n >= 2 && ls.size() == 2 * n) {
        bool ok = true;
        for (std::size_t blk = 0; blk + 1 < n; blk += 2) {
            std::size_t i = 2 * blk;
            int a = static_cast<int>(blk), b = static_cast<int>(blk + 1);
            if (ls[i] != Letter{a, 1} || ls[i + 1] != Letter{b, 1} || ls[i + 2] != Letter{a, -1} ||
                ls[i + 3] != Letter{b, -1})
                ok = false;
        }
        if (ok)
            return GroupClass::orientable_surface(static_cast<long long>(n / 2));
    }
    return std::nullopt;
}

std::vector<RecordedExample> recorded_examples() {
    std::vector<RecordedExample> out;

    Presentation pinched;
    pinched.generators = {{"x"}, {"y"}};
    pinched.relators = {parse_word("[x,y^2] y^2", pinched.generators)};
    out.push_back({"one-relator <x,y | [x,y^2] y^2>", pinched, GroupTag::SL2C,
                   Profile::from_counts(3, {2, 0, 0, 0})});
    out.push_back({"one-relator <x,y | [x,y^2] y^2>", pinched, GroupTag::PSL2C,
                   Profile::from_counts(5, {1, 0, 1, 0, 0, 0})});

    Presentation sq;
    sq.generators = {{"x"}, {"y"}, {"z"}};
    sq.relators = {parse_word("x^2", sq.generators)};
    out.push_back({"one-relator <x,y,z | x^2>", sq, GroupTag::SL2C,
                   Profile::from_counts(6, {2, 0, 0, 0, 0, 0, 0})});
    out.push_back({"one-relator <x,y,z | x^2>", sq, GroupTag::PSL2C,
                   Profile::from_counts(8, {1, 0, 1, 0, 0, 0, 0, 0, 0})});

    out.push_back({"cyclic group Z_2 over PSL(2,C)", canonical_presentation(GroupClass::cyclic(2)),
                   GroupTag::PSL2C, Profile::from_counts(2, {1, 0, 1})});
    return out;
}

} // namespace repvar
