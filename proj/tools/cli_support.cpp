#include "cli_support.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace stellar::cli {

namespace {

Complex parse_complex_entry(const json& v, const char* what) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw ParseError(std::string(what) + " must be a number or an [re, im] pair");
}

StateRecord record_from_json(const json& obj, size_t index) {
    if (!obj.is_object()) throw ParseError("record must be a JSON object");
    if (!obj.contains("n") || !obj["n"].is_number_integer())
        throw ParseError("missing integer field 'n'");
    int n = obj["n"].get<int>();
    if (n < 1) throw ParseError("'n' must be >= 1");
    if (!obj.contains("dicke") || !obj["dicke"].is_array())
        throw ParseError("missing array field 'dicke'");
    const auto& arr = obj["dicke"];
    if (arr.size() != static_cast<size_t>(n) + 1)
        throw ParseError("'dicke' must list n+1 coefficients");

    std::vector<Complex> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& v : arr) coeffs.push_back(parse_complex_entry(v, "'dicke' entry"));

    std::string convention = obj.value("convention", std::string("zeros"));
    if (convention == "excitations") {
        std::reverse(coeffs.begin(), coeffs.end());
    } else if (convention != "zeros") {
        throw ParseError("'convention' must be \"zeros\" or \"excitations\"");
    }

    bool all_zero = true;
    for (const auto& c : coeffs)
        if (std::abs(c) > 0.0) all_zero = false;
    if (all_zero) throw ParseError("all coefficients are zero");

    StateRecord rec;
    rec.id = obj.value("id", "state-" + std::to_string(index + 1));
    rec.state = SymmetricState(n, std::move(coeffs));
    return rec;
}

}  // namespace

double fmt12(double v) {
    if (v == 0.0) return 0.0;  // collapse negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

json complex_pair(Complex c) { return json::array({fmt12(c.real()), fmt12(c.imag())}); }

std::vector<StateRecord> parse_state_records(const std::string& text) {
    std::vector<StateRecord> records;

    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("line 1: empty input");

    if (text[first] == '[') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError("line 1: " + std::string(e.what()));
        }
        for (size_t i = 0; i < doc.size(); ++i) {
            try {
                records.push_back(record_from_json(doc[i], i));
            } catch (const ParseError& e) {
                throw ParseError("record " + std::to_string(i + 1) + ": " + e.what());
            }
        }
        return records;
    }

    size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            if (pos > text.size()) break;
            continue;
        }
        try {
            json obj = json::parse(line);
            records.push_back(record_from_json(obj, records.size()));
        } catch (const json::exception& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (pos > text.size()) break;
    }
    if (records.empty()) throw ParseError("line 1: no records found");
    return records;
}

SweepSpec parse_sweep_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("sweep spec: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("sweep spec: must be a JSON object");
    if (!doc.contains("start") || !doc["start"].is_array() || doc["start"].empty())
        throw ParseError("sweep spec: missing star array 'start'");

    SweepSpec spec;
    for (const auto& entry : doc["start"]) {
        if (!entry.is_object()) throw ParseError("sweep spec: star entries must be objects");
        int mult = entry.value("multiplicity", 1);
        if (mult < 1) throw ParseError("sweep spec: multiplicity must be positive");
        Star star;
        star.multiplicity = mult;
        if (entry.contains("root") && entry["root"].is_string() &&
            entry["root"].get<std::string>() == "inf") {
            star.root = ExtComplex::infinity();
        } else if (entry.contains("root")) {
            star.root = ExtComplex::finite(parse_complex_entry(entry["root"], "star root"));
        } else {
            throw ParseError("sweep spec: star entry needs a 'root'");
        }
        spec.start.stars.push_back(star);
        spec.start.n += mult;
    }

    if (!doc.contains("move_index") || !doc["move_index"].is_number_integer())
        throw ParseError("sweep spec: missing integer 'move_index'");
    spec.move_index = doc["move_index"].get<int>();
    if (spec.move_index < 0 ||
        spec.move_index >= static_cast<int>(spec.start.stars.size()))
        throw ParseError("sweep spec: move_index out of range");
    if (spec.start.stars[spec.move_index].root.at_infinity)
        throw ParseError("sweep spec: the moving star must be finite");

    if (!doc.contains("target"))
        throw ParseError("sweep spec: missing 'target'");
    spec.target = parse_complex_entry(doc["target"], "'target'");

    spec.steps = doc.value("steps", 0);
    if (spec.steps < 0) throw ParseError("sweep spec: steps must be >= 0");
    return spec;
}

double resolve_tolerance(std::optional<double> flag_value) {
    if (flag_value && *flag_value > 0.0) return *flag_value;
    if (const char* env = std::getenv("STELLAR_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
    }
    return 1e-6;
}

}  // namespace stellar::cli
