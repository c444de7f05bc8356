#pragma once

#include <golden/icosian.hpp>

#include <json.hpp>

#include <string>

namespace golden {

using nlohmann::json;

// RElem <-> [a, b] meaning a + b*theta; every file format uses this encoding.
json relem_to_json(const RElem& x);
RElem relem_from_json(const json& j);

// {"n": ..., "entries": [[[a,b], ...], ...]}
json rgram_to_json(const RGram& g);
RGram rgram_from_json(const json& j);

// {"m": ..., "entries": [[...], ...]}
json zgram_to_json(const ZGram& g);
ZGram zgram_from_json(const json& j);

json imat_to_json(const IMat& m);
IMat imat_from_json(const json& j);

// {"p":..., "min":..., "det":..., "modular": true|false|"undecided",
//  "witness": [[...]] when found}
json family_certificate_to_json(const FamilyCertificate& c);

// {"weight":..., "nu":[s,t], "s_eta":..., "s_one":..., "pm":"+", "unique":...,
//  "coefficients":[[i, j, "num/den"], ...]}
json extremal_to_json(const ExtremalResult& r);

json qexp_to_json(const QExp& f);

// {"gram": {...}, "T": [[...]], "sigma": [[...]] (optional), "label": "..."}
json golden_candidate_to_json(const GoldenCandidate& c);
GoldenCandidate golden_candidate_from_json(const json& j);

// TSV in the table's column order: weight, nu, s_eta, s_one, sub
std::string table_tsv(const std::vector<TableDiff>& diffs);

json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace golden
