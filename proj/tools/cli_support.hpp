// Input/output plumbing for the stellar command line tool: state-file records,
// sweep specifications, and deterministic number formatting.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "stellar/majorana.hpp"
#include "stellar/state.hpp"

namespace stellar::cli {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Round to 12 significant digits so serialized output is byte-stable.
double fmt12(double v);

json complex_pair(Complex c);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StateRecord {
    std::string id;
    SymmetricState state;  // always stored in the zeros convention
};

// Accepts either one JSON object per line or a single JSON array of objects.
// Fields: n, dicke ([re, im] pairs, length n+1), optional convention
// ("zeros" default, "excitations" = reversed indexing), optional id.
// Throws ParseError with a line-numbered message.
std::vector<StateRecord> parse_state_records(const std::string& text);

struct SweepSpec {
    Constellation start;
    int move_index = 0;  // position in the star list; must be a finite star
    Complex target;
    int steps = 0;
};

SweepSpec parse_sweep_spec(const std::string& text);

// Clustering tolerance: built-in default, overridden by STELLAR_TOL, then by
// an explicit --tol.
double resolve_tolerance(std::optional<double> flag_value);

}  // namespace stellar::cli
