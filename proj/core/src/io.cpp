#include "freeprob/io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace freeprob {

using nlohmann::json;

Distribution read_distribution(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("distribution file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("order") ||
        !doc.contains("kind") || !doc.contains("coeffs"))
        throw std::invalid_argument("distribution file: need k, order, kind, coeffs");
    if (!doc["k"].is_number_integer() || !doc["order"].is_number_integer())
        throw std::invalid_argument("distribution file: k and order must be integers");
    const int k = doc["k"].get<int>();
    const int order = doc["order"].get<int>();
    const std::string kind = doc["kind"].get<std::string>();
    if (kind != "moments" && kind != "free_cumulants" && kind != "boolean_cumulants")
        throw std::invalid_argument("distribution file: unknown kind '" + kind + "'");

    NcSeries s(k, order);
    std::set<Word> seen;
    if (!doc["coeffs"].is_array())
        throw std::invalid_argument("distribution file: coeffs must be an array");
    for (const auto& entry : doc["coeffs"]) {
        if (!entry.is_object() || !entry.contains("word") || !entry.contains("value"))
            throw std::invalid_argument("distribution file: coeff needs word and value");
        Word w;
        for (const auto& l : entry["word"]) {
            if (!l.is_number_integer())
                throw std::invalid_argument("distribution file: word letters must be integers");
            w.push_back(l.get<int>());
        }
        if (!seen.insert(w).second)
            throw std::invalid_argument("distribution file: duplicate word");
        Rat v;
        if (entry["value"].is_number_integer()) {
            v = Rat(entry["value"].get<long>());
        } else if (entry["value"].is_string()) {
            v = parse_rat(entry["value"].get<std::string>());
        } else {
            throw std::invalid_argument("distribution file: value must be a string or integer");
        }
        s.set(w, std::move(v));  // validates the word against (k, order)
    }

    if (kind == "moments") return Distribution::from_moments(std::move(s));
    if (kind == "free_cumulants") return Distribution::from_free_cumulants(s);
    return Distribution::from_boolean_cumulants(s);
}

Distribution read_distribution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_distribution(in);
}

void write_distribution(std::ostream& out, const Distribution& d) {
    json coeffs = json::array();
    for (const auto& [w, v] : d.moments().coeffs())
        coeffs.push_back({{"word", w}, {"value", format_rat(v)}});
    json doc{{"k", d.k()}, {"order", d.order()}, {"kind", "moments"}, {"coeffs", coeffs}};
    out << doc.dump(2) << '\n';
}

void write_distribution_file(const std::string& path, const Distribution& d) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    write_distribution(out, d);
}

}  // namespace freeprob
