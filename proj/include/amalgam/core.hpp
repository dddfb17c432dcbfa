#ifndef AMALGAM_CORE_HPP
#define AMALGAM_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace amalgam {

/// Index of an element inside one fixed ring or module; only meaningful
/// relative to the structure that produced it.
using Elem = int;

/// Search and size limits. Exceeding any of them raises ResourceLimitError;
/// nothing is ever silently truncated.
struct Caps {
    int amalgam_order = 256;          // max order of a constructed amalgam
    int ideal_lattice = 4096;         // max number of ideals per ring
    int module_order = 64;            // max module order in hom enumeration
    int generating_sequence = 6;      // max additive generators per module
    long long hom_combinations = 10'000'000;  // candidate image tuples
    long long iso_nodes = 1'000'000;  // backtracking nodes in ring-iso search
    int baer_cross_check = 36;        // run the Baer cross-check up to this order
};

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace amalgam

#endif
