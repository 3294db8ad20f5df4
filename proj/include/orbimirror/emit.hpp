#pragma once

// Rendering of result documents. Every command produces one document with
// keys weights / mu / kind / rows; rows is a list of flat objects whose
// values are integers, booleans or canonical rational strings.

#include "json.hpp"

#include <string>
#include <vector>

namespace orbimirror {

using Json = nlohmann::ordered_json;

Json make_document(const std::vector<long long>& w, long long mu,
                   const std::string& kind);

// "eta[d,gamma]" -> unicode class label, "omega~[k]" likewise; anything else
// is returned unchanged.
std::string pretty_label(const std::string& s);

// format is one of json, md, csv. JSON output parses back to the same
// document and re-renders byte-identically.
std::string render(const Json& doc, const std::string& format);

} // namespace orbimirror
