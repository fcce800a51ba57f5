#pragma once

#include <string>
#include <vector>

#include "axioms.hpp"
#include "congruences.hpp"
#include "mask.hpp"
#include "table.hpp"
#include "units.hpp"

#include "../vendor/json.hpp"

namespace snr {

/// Parses the structure file format:
///   # comment to end of line
///   structure <identifier>
///   carrier <k>
///   f <m>   followed by k^m entries
///   g <n>   followed by k^n entries
///   end
/// Malformed input raises Error with the offending line and column in
/// the message.
FinStructure parse_structure(const std::string& text);

/// Canonical form: single spaces, k entries per table line, trailing
/// newline. parse(serialize(s)) reproduces s bit-exactly.
std::string serialize_structure(const FinStructure& s);

/// Partition literal: blocks separated by '|', elements by ',', e.g.
/// "0,2|1,3". Every element 0..k-1 must appear exactly once.
Partition parse_partition(const std::string& text, int carrier);

/// Canonical literal for a partition (blocks by ascending least
/// element, elements ascending).
std::string format_partition(const Partition& p);

/// Subset literal: elements ascending in braces, e.g. "{0,2}".
std::string format_subset(Mask sub);

/// One-line key=value rendering of a counterexample, including both
/// evaluated elements.
std::string format_witness(const Witness& w);

/// Multi-line human report of a classification.
std::string render_classification(const FinStructure& s, const ClassificationReport& report);

/// The same report as JSON with top-level keys name, k, m, n,
/// verdicts, witnesses, sets.
nlohmann::ordered_json classification_json(const FinStructure& s,
                                           const ClassificationReport& report);

/// Human rendering of a units report (without the theorem sweeps).
std::string render_units(const UnitsReport& report);

/// Human rendering of the three unit-theorem sweeps, one line each,
/// with a witness line after any failure.
std::string render_units_theorems(const UnitsTheoremSummary& summary);

}  // namespace snr
