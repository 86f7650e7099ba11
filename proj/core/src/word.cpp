#include "repvar/word.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace repvar {

FreeWord FreeWord::reduce(std::vector<Letter> raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (const Letter& l : raw) {
        if (l.exp == 0)
            continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp += l.exp;
            if (out.back().exp == 0)
                out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return FreeWord(std::move(out));
}

long long FreeWord::length() const {
    long long n = 0;
    for (const Letter& l : letters_)
        n += l.exp < 0 ? -l.exp : l.exp;
    return n;
}

int FreeWord::max_generator() const {
    int m = -1;
    for (const Letter& l : letters_)
        m = std::max(m, l.gen);
    return m;
}

FreeWord FreeWord::inverse() const {
    std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
    for (Letter& l : rev)
        l.exp = -l.exp;
    return FreeWord(std::move(rev)); // reversal of a reduced word stays reduced
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return reduce(std::move(cat));
}

FreeWord FreeWord::pow(long long k) const {
    if (k == 0 || trivial())
        return FreeWord();
    FreeWord base = k > 0 ? *this : inverse();
    long long reps = k > 0 ? k : -k;
    FreeWord acc;
    for (long long i = 0; i < reps; ++i)
        acc = acc * base;
    return acc;
}

ExponentProfile exponent_profile(const FreeWord& w, int n_generators) {
    if (w.max_generator() >= n_generators)
        throw std::invalid_argument("exponent_profile: generator index out of range");
    ExponentProfile p;
    p.sums.assign(static_cast<std::size_t>(n_generators), 0);
    for (const Letter& l : w.letters()) {
        p.sums[static_cast<std::size_t>(l.gen)] += l.exp;
        p.total += l.exp;
    }
    return p;
}

bool in_commutator_subgroup(const FreeWord& w, int n_generators) {
    for (long long s : exponent_profile(w, n_generators).sums)
        if (s != 0)
            return false;
    return true;
}

bool pm_condition_holds(const FreeWord& w, int n_generators) {
    for (long long s : exponent_profile(w, n_generators).sums)
        if (s % 2 != 0)
            return false;
    return true;
}

bool minus_condition_holds(const FreeWord& w, int n_generators) {
    return exponent_profile(w, n_generators).total % 2 != 0;
}

int central_flip_factor(const FreeWord& w, std::span<const int> signs) {
    ExponentProfile p = exponent_profile(w, static_cast<int>(signs.size()));
    int factor = 1;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] != 1 && signs[i] != -1)
            throw std::invalid_argument("central_flip_factor: signs must be +1 or -1");
        if (signs[i] == -1 && p.sums[i] % 2 != 0)
            factor = -factor;
    }
    return factor;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

class WordParser {
public:
    WordParser(std::string_view text, std::span<const Generator> gens)
        : text_(text), gens_(gens) {}

    FreeWord parse() {
        skip_ws();
        if (at_end())
            return FreeWord(); // blank input is the identity word
        FreeWord w = parse_word_expr();
        skip_ws();
        if (!at_end())
            fail("unexpected trailing input");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw word_parse_error(what + " at byte " + std::to_string(pos_), pos_);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool term_start(char c) const { return ident_start(c) || c == '(' || c == '['; }

    FreeWord parse_word_expr() {
        FreeWord w = parse_term();
        for (;;) {
            bool separated = false;
            while (!at_end() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == '*')) {
                separated = true;
                ++pos_;
            }
            if (at_end() || !term_start(peek()))
                return w;
            if (!separated)
                fail("missing separator between terms");
            w = w * parse_term();
        }
    }

    FreeWord parse_term() {
        FreeWord atom = parse_atom();
        if (!at_end() && peek() == '^') {
            ++pos_;
            long long e = parse_int();
            return atom.pow(e);
        }
        return atom;
    }

    long long parse_int() {
        std::size_t start = pos_;
        bool neg = false;
        if (!at_end() && peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected integer exponent");
        long long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > (1LL << 40)) {
                pos_ = start;
                fail("exponent literal too large");
            }
            ++pos_;
        }
        if (v == 0) {
            pos_ = start;
            fail("zero exponent literal");
        }
        return neg ? -v : v;
    }

    FreeWord parse_atom() {
        if (at_end())
            fail("expected word");
        char c = peek();
        if (c == '(') {
            ++pos_;
            skip_ws();
            FreeWord inner = parse_word_expr();
            skip_ws();
            if (at_end() || peek() != ')')
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '[') {
            ++pos_;
            skip_ws();
            FreeWord u = parse_word_expr();
            skip_ws();
            if (at_end() || peek() != ',')
                fail("expected ',' in commutator bracket");
            ++pos_;
            skip_ws();
            FreeWord v = parse_word_expr();
            skip_ws();
            if (at_end() || peek() != ']')
                fail("expected ']'");
            ++pos_;
            // [u,v] = u v u^-1 v^-1
            return u * v * u.inverse() * v.inverse();
        }
        if (ident_start(c))
            return parse_ident();
        fail("expected generator, '(' or '['");
    }

    FreeWord parse_ident() {
        std::size_t start = pos_;
        while (!at_end() && ident_char(peek()))
            ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].name == name)
                return FreeWord::reduce({{static_cast<int>(i), 1}});
        }
        pos_ = start;
        fail("unknown generator '" + std::string(name) + "'");
    }

    std::string_view text_;
    std::span<const Generator> gens_;
    std::size_t pos_ = 0;
};

} // namespace

FreeWord parse_word(std::string_view text, std::span<const Generator> generators) {
    return WordParser(text, generators).parse();
}

std::string print_word(const FreeWord& w, std::span<const Generator> generators) {
    std::string out;
    for (const Letter& l : w.letters()) {
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= generators.size())
            throw std::invalid_argument("print_word: generator index out of range");
        if (!out.empty())
            out += ' ';
        out += generators[static_cast<std::size_t>(l.gen)].name;
        if (l.exp != 1) {
            out += '^';
            out += std::to_string(l.exp);
        }
    }
    return out;
}

std::vector<std::string> validate(const Presentation& p) {
    std::vector<std::string> problems;
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        const std::string& name = p.generators[i].name;
        if (name.empty() || !ident_start(name[0]) ||
            !std::all_of(name.begin(), name.end(), ident_char)) {
            problems.push_back("generator " + std::to_string(i + 1) + " has malformed name '" + name + "'");
        }
        for (std::size_t j = i + 1; j < p.generators.size(); ++j)
            if (p.generators[j].name == name)
                problems.push_back("duplicate generator name '" + name + "'");
    }
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        const FreeWord& r = p.relators[i];
        if (r.max_generator() >= static_cast<int>(p.generators.size()))
            problems.push_back("relator " + std::to_string(i + 1) + " uses an undeclared generator index");
        if (r.trivial())
            problems.push_back("relator " + std::to_string(i + 1) +
                               " is trivial as a free-group word (triviality in the presented group is not decided)");
    }
    return problems;
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Presentation parse_presentation(std::string_view text) {
    Presentation pres;
    bool saw_gens = false;
    std::size_t line_no = 0;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t eol = text.find('\n', line_start);
        std::string_view raw = text.substr(line_start, eol == std::string_view::npos ? std::string_view::npos
                                                                                     : eol - line_start);
        ++line_no;
        std::size_t this_line_start = line_start;
        line_start = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        std::string_view line = raw;
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty())
            continue;

        if (line.starts_with("gens:")) {
            if (saw_gens)
                throw presentation_parse_error("duplicate 'gens:' header", line_no, this_line_start);
            saw_gens = true;
            std::string_view rest = line.substr(5);
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                std::size_t comma = rest.find(',', pos);
                std::string_view tok = strip(rest.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                              : comma - pos));
                if (!tok.empty())
                    pres.generators.push_back({std::string(tok)});
                else if (comma != std::string_view::npos)
                    throw presentation_parse_error("empty generator name in 'gens:' list", line_no, this_line_start);
                if (comma == std::string_view::npos)
                    break;
                pos = comma + 1;
            }
            if (pres.generators.empty())
                throw presentation_parse_error("'gens:' header lists no generators", line_no, this_line_start);
        } else if (line.starts_with("rel:")) {
            if (!saw_gens)
                throw presentation_parse_error("'rel:' before 'gens:' header", line_no, this_line_start);
            std::string_view body = line.substr(4);
            try {
                pres.relators.push_back(parse_word(body, pres.generators));
            } catch (const word_parse_error& e) {
                std::size_t body_off = static_cast<std::size_t>(body.data() - raw.data());
                throw presentation_parse_error(e.what(), line_no, this_line_start + body_off + e.offset());
            }
        } else {
            throw presentation_parse_error("expected 'gens:', 'rel:' or comment", line_no, this_line_start);
        }
    }
    if (!saw_gens)
        throw presentation_parse_error("missing 'gens:' header", line_no, 0);
    return pres;
}

Presentation load_presentation_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open presentation file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

std::string print_presentation(const Presentation& p) {
    std::string out = "gens: ";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i)
            out += ", ";
        out += p.generators[i].name;
    }
    out += '\n';
    for (const FreeWord& r : p.relators) {
        out += "rel: ";
        out += print_word(r, p.generators);
        out += '\n';
    }
    return out;
}

} // namespace repvar
