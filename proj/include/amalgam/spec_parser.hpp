#ifndef AMALGAM_SPEC_PARSER_HPP
#define AMALGAM_SPEC_PARSER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/amalgam_ring.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

/// Constructor expression for a ring:
///   zmod(n) | product(spec, spec) | tables(path) | fixture(name)
///   | quotient(spec, ideal(g...)) | amalgam(spec, spec, hom, ideal(g...))
///   | duplication(spec, ideal(g...))
/// where hom is identity | reduction | map(i...).
struct SpecNode {
    enum class Kind { Zmod, Product, Tables, Fixture, Quotient, Amalgam, Duplication };
    struct Hom {
        enum class Kind { Identity, Reduction, Explicit };
        Kind kind = Kind::Identity;
        std::vector<Elem> map;  // Explicit only

        friend bool operator==(const Hom&, const Hom&) = default;
    };

    Kind kind = Kind::Zmod;
    int n = 0;                       // Zmod
    std::string name;                // Tables path / Fixture name
    std::vector<SpecNode> children;  // sub-specs
    Hom hom;                         // Amalgam
    std::vector<Elem> generators;    // Quotient / Amalgam / Duplication

    friend bool operator==(const SpecNode&, const SpecNode&) = default;
};

struct ParseError : InvalidParameter {
    ParseError(int line, int col, const std::string& expected,
               const std::string& found);
    int line;
    int col;
    std::string expected;
    std::string found;
};

/// LL(1) recursive descent over the constructor keywords; positioned errors.
SpecNode parse_spec(const std::string& text);

/// Canonical form; parse_spec(print_spec(s)) == s.
std::string print_spec(const SpecNode& s);

struct EvalResult {
    RingPtr ring;
    std::optional<Amalgam> amalgam;  // set when the root constructs one
};

/// Builds the ring described by the tree. Semantic failures (zmod(0),
/// incompatible hom, bad generators) raise InvalidParameter; size failures
/// raise ResourceLimitError.
EvalResult eval_spec(const SpecNode& s, const Caps& caps = {});

inline EvalResult eval_spec_text(const std::string& text, const Caps& caps = {}) {
    return eval_spec(parse_spec(text), caps);
}

/// Table fixture file format: "order n", n add rows, n mul rows, "zero i",
/// "one j"; whitespace-separated decimal indices.
RingPtr read_table_stream(std::istream& in, const std::string& label);
RingPtr read_table_file(const std::string& path);

struct Fixture {
    std::string name;
    RingPtr ring;
    std::string table_text;  // same content the shipped .tbl files carry
};

/// Ring fixtures supplied as explicit tables (local non-field rings that no
/// constructor in the grammar produces).
const std::vector<Fixture>& builtin_fixtures();

}  // namespace amalgam

#endif
