#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "repvar/group_class.hpp"

namespace repvar {

/// A generator of a free group. Comparison is by name; names must be a
/// letter followed by alphanumerics and unique within a presentation.
struct Generator {
    std::string name;
    bool operator==(const Generator&) const = default;
};

/// One syllable of a freely reduced word: generator index and a nonzero
/// signed exponent.
struct Letter {
    int gen = 0;
    long long exp = 0;
    bool operator==(const Letter&) const = default;
};

/// A freely reduced word in a free group, stored over generator indices.
/// Invariants: adjacent letters have distinct generator indices, every
/// exponent is nonzero, and the empty sequence is the identity.
class FreeWord {
public:
    FreeWord() = default;

    /// Free reduction of an arbitrary letter sequence. Idempotent.
    static FreeWord reduce(std::vector<Letter> raw);

    const std::vector<Letter>& letters() const { return letters_; }
    bool trivial() const { return letters_.empty(); }
    std::size_t syllables() const { return letters_.size(); }

    /// Total letter count, counting x^k as |k| letters.
    long long length() const;

    /// Largest generator index used, or -1 for the identity word.
    int max_generator() const;

    FreeWord inverse() const;
    FreeWord pow(long long k) const;
    FreeWord operator*(const FreeWord& rhs) const;
    bool operator==(const FreeWord&) const = default;

private:
    explicit FreeWord(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
    std::vector<Letter> letters_;
};

/// Signed exponent sums per generator, plus their total.
struct ExponentProfile {
    std::vector<long long> sums;
    long long total = 0;
    bool operator==(const ExponentProfile&) const = default;
};

ExponentProfile exponent_profile(const FreeWord& w, int n_generators);

/// True iff every exponent sum vanishes. By a counting argument on
/// occurrences of each generator and its inverse, this characterizes
/// membership in the commutator subgroup.
bool in_commutator_subgroup(const FreeWord& w, int n_generators);

/// True iff every exponent sum is even: the solution sets of w = I and
/// w = -I in SL(2,C)^n are then stable under all coordinatewise sign
/// flips, since each flip multiplies the word value by a central -I
/// raised to an even power.
bool pm_condition_holds(const FreeWord& w, int n_generators);

/// True iff the total exponent sum is odd: the global flip m -> -m then
/// multiplies the word value by -1 and swaps the w = I and w = -I sets.
bool minus_condition_holds(const FreeWord& w, int n_generators);

/// The scalar (+1 or -1) by which the evaluated word changes when the
/// matrix of generator i is multiplied by signs[i] * I. Equals the
/// product of signs[i]^(exponent sum of i).
int central_flip_factor(const FreeWord& w, std::span<const int> signs);

/// Parse failure; `offset` is the byte offset into the parsed text.
class word_parse_error : public std::runtime_error {
public:
    word_parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Grammar:
///   word  := term { ('*' | ws) term } ;
///   term  := atom [ '^' int ] ;
///   atom  := ident | '(' word ')' | '[' word ',' word ']' ;
///   ident := letter { letter | digit } ;  int := ['-'] digit+ .
/// The bracket [u,v] expands to u v u^-1 v^-1. Empty or blank input is
/// the identity word.
FreeWord parse_word(std::string_view text, std::span<const Generator> generators);

/// Canonical printer; output reparses to the same word. Identity prints
/// as the empty string.
std::string print_word(const FreeWord& w, std::span<const Generator> generators);

struct Presentation {
    std::vector<Generator> generators;
    std::vector<FreeWord> relators;
    std::optional<GroupClass> class_tag;

    long long deficiency() const {
        return static_cast<long long>(generators.size()) - static_cast<long long>(relators.size());
    }
};

/// Structural checks: duplicate or malformed generator names, relator
/// indices out of range, trivial relators. Returns human-readable
/// problems; empty means clean. Triviality here is free-group
/// triviality only; triviality as an element of the presented group is
/// not decided.
std::vector<std::string> validate(const Presentation& p);

/// Error from the presentation file reader, carrying position info.
class presentation_parse_error : public std::runtime_error {
public:
    presentation_parse_error(const std::string& what, std::size_t line, std::size_t byte_offset)
        : std::runtime_error(what), line_(line), byte_offset_(byte_offset) {}
    std::size_t line() const { return line_; }
    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t line_;
    std::size_t byte_offset_;
};

/// File format: optional '#' comment lines, one `gens: x, y, z` header,
/// then one `rel: <word>` line per relator.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation_file(const std::string& path);
std::string print_presentation(const Presentation& p);

} // namespace repvar
