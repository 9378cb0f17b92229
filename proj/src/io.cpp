#include "inckk/io.hpp"

#include <istream>
#include <sstream>

namespace inckk {

namespace {

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int parse_int(const std::string& token, const std::string& where) {
    try {
        size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw parse_error(where + ": expected an integer, got '" + token + "'");
    }
}

}  // namespace

DSet parse_dset(const std::string& line) {
    std::istringstream ss(line);
    std::vector<int> elems;
    std::string token;
    while (ss >> token) elems.push_back(parse_int(token, "d-set"));
    if (elems.empty()) throw parse_error("d-set: empty line");
    try {
        return DSet(std::move(elems));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("d-set: ") + e.what());
    }
}

Family read_family(std::istream& in) {
    // Sniff: JSON starts with '{' or '['.
    int c = in.peek();
    while (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        in.get();
        c = in.peek();
    }
    if (c == '{' || c == '[') return family_from_json(read_json(in));

    std::string line;
    int lineno = 0;
    int d = -1;
    std::vector<DSet> members;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trimmed(line);
        if (body.empty() || body.front() == '#') continue;
        if (d < 0) {
            if (body.rfind("d=", 0) != 0)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": expected header 'd=<d>'");
            d = parse_int(trimmed(body.substr(2)), "line " + std::to_string(lineno));
            if (d < 1)
                throw parse_error("line " + std::to_string(lineno) + ": d must be >= 1");
            continue;
        }
        DSet u = [&] {
            try {
                return parse_dset(body);
            } catch (const parse_error& e) {
                throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
            }
        }();
        if (u.size() != d)
            throw parse_error("line " + std::to_string(lineno) + ": expected a " +
                              std::to_string(d) + "-set");
        for (const DSet& prev : members) {
            if (prev == u)
                throw parse_error("line " + std::to_string(lineno) + ": duplicate member");
        }
        members.push_back(std::move(u));
    }
    if (d < 0) throw parse_error("missing family header 'd=<d>'");
    return Family(d, std::move(members));
}

Family family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("members"))
        throw parse_error("family JSON needs fields 'd' and 'members'");
    if (!j["d"].is_number_integer()) throw parse_error("field 'd': expected an integer");
    int d = j["d"].get<int>();
    if (d < 1) throw parse_error("field 'd': must be >= 1");
    if (!j["members"].is_array()) throw parse_error("field 'members': expected an array");
    std::vector<DSet> members;
    size_t idx = 0;
    for (const json& row : j["members"]) {
        if (!row.is_array()) throw parse_error("members[" + std::to_string(idx) +
                                               "]: expected an array of integers");
        std::vector<int> elems;
        for (const json& v : row) {
            if (!v.is_number_integer())
                throw parse_error("members[" + std::to_string(idx) + "]: expected integers");
            elems.push_back(v.get<int>());
        }
        DSet u = [&] {
            try {
                return DSet(std::move(elems));
            } catch (const std::invalid_argument& e) {
                throw parse_error("members[" + std::to_string(idx) + "]: " + e.what());
            }
        }();
        if (u.size() != d)
            throw parse_error("members[" + std::to_string(idx) + "]: expected a " +
                              std::to_string(d) + "-set");
        for (const DSet& prev : members)
            if (prev == u)
                throw parse_error("members[" + std::to_string(idx) + "]: duplicate member");
        members.push_back(std::move(u));
        ++idx;
    }
    return Family(d, std::move(members));
}

json family_to_json(const Family& f) {
    json members = json::array();
    for (const DSet& u : f) members.push_back(u.elements());
    return json{{"d", f.d()}, {"members", std::move(members)}};
}

std::string family_to_text(const Family& f) {
    std::string out = "d=" + std::to_string(f.d()) + "\n";
    for (const DSet& u : f) {
        out += u.to_string();
        out += '\n';
    }
    return out;
}

FVector fvector_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("face-count vector: expected a JSON array");
    std::vector<uint64_t> entries;
    for (const json& v : j) {
        if (!v.is_number_integer() || v.get<int64_t>() < 0)
            throw parse_error("face-count vector: entries must be nonnegative integers");
        entries.push_back(v.get<uint64_t>());
    }
    return FVector(std::move(entries));
}

json fvector_to_json(const FVector& f) { return json(f.entries()); }

FVectorChain chain_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw parse_error("chain: expected a nonempty array of face-count vectors");
    std::vector<FVector> vectors;
    for (const json& row : j) vectors.push_back(fvector_from_json(row));
    return FVectorChain(std::move(vectors));
}

json chain_to_json(const FVectorChain& chain) {
    json out = json::array();
    for (const FVector& f : chain.vectors()) out.push_back(fvector_to_json(f));
    return out;
}

SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("grades"))
        throw parse_error("complex JSON needs field 'grades'");
    if (!j["grades"].is_object()) throw parse_error("field 'grades': expected an object");
    std::map<int, Family> grades;
    for (const auto& [key, value] : j["grades"].items()) {
        int d = parse_int(key, "grade key");
        if (d < 1) throw parse_error("grade key: must be >= 1");
        Family fam = family_from_json(json{{"d", d}, {"members", value}});
        if (!fam.empty()) grades.emplace(d, std::move(fam));
    }
    return SimplicialComplex::from_grades(std::move(grades));
}

json complex_to_json(const SimplicialComplex& dl) {
    json grades = json::object();
    for (const auto& [d, fam] : dl.grades()) {
        json members = json::array();
        for (const DSet& u : fam) members.push_back(u.elements());
        grades[std::to_string(d)] = std::move(members);
    }
    return json{{"grades", std::move(grades)}};
}

std::vector<SimplicialComplex> complex_chain_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw parse_error("complex chain: expected a nonempty array of complexes");
    std::vector<SimplicialComplex> out;
    for (const json& row : j) out.push_back(complex_from_json(row));
    return out;
}

json complex_chain_to_json(const std::vector<SimplicialComplex>& chain) {
    json out = json::array();
    for (const SimplicialComplex& dl : chain) out.push_back(complex_to_json(dl));
    return out;
}

json report_to_json(const VerificationReport& report) {
    json violations = json::array();
    for (const Family& f : report.violations) violations.push_back(family_to_json(f));
    json minimizers = json::array();
    for (const Family& f : report.minimizers) minimizers.push_back(family_to_json(f));
    return json{{"universe", {{"n", report.n}, {"d", report.d}, {"m", report.m}}},
                {"checked", report.checked},
                {"violations", std::move(violations)},
                {"violation_count", report.violation_count},
                {"minimum", report.minimum},
                {"minimizers", std::move(minimizers)},
                {"minimizer_count", report.minimizer_count},
                {"report_cap", report.report_cap},
                {"elapsed", report.elapsed_seconds}};
}

json segment_report_to_json(const SegmentReport& report) {
    json violations = json::array();
    for (const DSet& u : report.violations) violations.push_back(u.elements());
    return json{{"universe", {{"max_elem", report.max_elem}, {"max_d", report.max_d}}},
                {"checked", report.checked},
                {"violations", std::move(violations)},
                {"elapsed", report.elapsed_seconds}};
}

json read_json(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("JSON: ") + e.what());
    }
}

}  // namespace inckk
