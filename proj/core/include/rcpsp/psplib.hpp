#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "rcpsp/instance.hpp"

namespace rcpsp {

/// Raw contents of one PSPLIB single-mode `.sm` file plus a label used in
/// diagnostics and run identifiers (usually the file stem).
struct RawInstanceFile {
    std::string text;
    std::string name;
};

/// Reads the file at `path`; the instance name is the file stem.
RawInstanceFile load_instance_file(const std::string& path);

/// Parses a single-mode PSPLIB file into the domain model. Successor lists
/// are converted to predecessor sets at parse time; file jobs 1..J map to
/// activities 0..J-1.
///
/// Throws ParseError (naming the section/line) on malformed text,
/// StructuralError when the declared job count disagrees with a section, and
/// InfeasibleInstanceError when a requirement exceeds a capacity.
ProjectInstance parse_instance(const RawInstanceFile& raw);

/// Best-known makespans keyed by flat instance number (Table-style ids).
struct BestKnownTable {
    std::map<int, int> entries;

    bool operator==(const BestKnownTable&) const = default;
};

/// Parses a two-column whitespace-separated table "<instance> <makespan>".
/// Blank lines and lines starting with '#' are skipped.
/// Throws ParseError on non-integer fields, DuplicateKeyError on repeated ids.
BestKnownTable parse_best_known(std::istream& in);
BestKnownTable parse_best_known(const std::string& text);

/// Inverse of parse_best_known (two columns, ascending ids).
std::string render_best_known(const BestKnownTable& table);

/// Identity of a PSPLIB instance derived from its file stem, e.g.
/// "j12042_7" -> dataset 120, parameter set 42, instance 7, flat 417.
/// Flat numbering is (param_set - 1) * 10 + instance.
struct PsplibId {
    int dataset = 0;
    int param_set = 0;
    int instance = 0;

    int flat() const { return (param_set - 1) * 10 + instance; }
};

/// Parses stems of the form j<dataset><param>_<instance> with dataset one of
/// 30/60/90/120; returns nullopt for anything else.
std::optional<PsplibId> parse_psplib_stem(const std::string& stem);

} // namespace rcpsp
