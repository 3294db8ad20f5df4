#include "orbimirror/emit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbimirror {

namespace {

std::string cell(const Json& v, bool pretty) {
    if (v.is_string()) {
        auto s = v.get<std::string>();
        return pretty ? pretty_label(s) : s;
    }
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> column_order(const Json& rows) {
    std::vector<std::string> cols;
    for (const auto& row : rows)
        for (auto it = row.begin(); it != row.end(); ++it)
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end())
                cols.push_back(it.key());
    return cols;
}

} // namespace

Json make_document(const std::vector<long long>& w, long long mu,
                   const std::string& kind) {
    Json d;
    d["weights"] = w;
    d["mu"] = mu;
    d["kind"] = kind;
    d["rows"] = Json::array();
    return d;
}

std::string pretty_label(const std::string& s) {
    const auto star = s.find('*');
    if (star != std::string::npos) {
        const auto tail = s.substr(star + 1);
        if (tail.rfind("eta[", 0) == 0 || tail.rfind("omega~[", 0) == 0)
            return s.substr(0, star) + "·" + pretty_label(tail);
    }
    if (s.rfind("eta[", 0) == 0 && !s.empty() && s.back() == ']') {
        auto body = s.substr(4, s.size() - 5);
        auto comma = body.find(',');
        if (comma != std::string::npos)
            return "η^" + body.substr(0, comma) + "_" +
                   body.substr(comma + 1);
    }
    if (s.rfind("omega~[", 0) == 0 && !s.empty() && s.back() == ']')
        return "ω̃_" + s.substr(7, s.size() - 8);
    return s;
}

std::string render(const Json& doc, const std::string& format) {
    if (format == "json") return doc.dump(2) + "\n";
    const Json& rows = doc.at("rows");
    std::ostringstream os;
    if (format == "md") {
        os << "# " << doc.at("kind").get<std::string>() << "\n\n";
        os << "weights:";
        for (const auto& w : doc.at("weights")) os << " " << w;
        os << "  \nmu: " << doc.at("mu") << "\n\n";
        auto cols = column_order(rows);
        if (cols.empty()) {
            os << "(no rows)\n";
            return os.str();
        }
        os << "|";
        for (const auto& c : cols) os << " " << pretty_label(c) << " |";
        os << "\n|";
        for (std::size_t i = 0; i < cols.size(); ++i) os << " --- |";
        os << "\n";
        for (const auto& row : rows) {
            os << "|";
            for (const auto& c : cols)
                os << " " << (row.contains(c) ? cell(row.at(c), true) : "")
                   << " |";
            os << "\n";
        }
        return os.str();
    }
    if (format == "csv") {
        auto cols = column_order(rows);
        for (std::size_t i = 0; i < cols.size(); ++i)
            os << (i ? "," : "") << csv_escape(cols[i]);
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < cols.size(); ++i)
                os << (i ? "," : "")
                   << csv_escape(row.contains(cols[i])
                                     ? cell(row.at(cols[i]), false)
                                     : "");
            os << "\n";
        }
        return os.str();
    }
    throw std::invalid_argument("unknown format: " + format);
}

} // namespace orbimirror
