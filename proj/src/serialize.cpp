#include <golden/serialize.hpp>

#include <fstream>
#include <sstream>

namespace golden {

namespace {

// exact integers: JSON numbers while they fit in 64 bits, decimal strings beyond
json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<int64_t>(v.get_si()));
    return json(v.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw math_error("expected an integer or integer string");
}

json rat_to_json(const Rat& v) {
    if (is_integer(v)) return int_to_json(v.get_num());
    return json(v.get_str());
}

}  // namespace

json relem_to_json(const RElem& x) { return json::array({int_to_json(x.a), int_to_json(x.b)}); }

RElem relem_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw math_error("RElem must be a two-element array");
    return {int_from_json(j[0]), int_from_json(j[1])};
}

json rgram_to_json(const RGram& g) {
    json rows = json::array();
    for (size_t i = 0; i < g.rank(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < g.rank(); ++j) row.push_back(relem_to_json(g.g.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", g.rank()}, {"entries", std::move(rows)}};
}

RGram rgram_from_json(const json& j) {
    size_t n = j.at("n").get<size_t>();
    const json& rows = j.at("entries");
    if (rows.size() != n) throw math_error("RGram entries have the wrong number of rows");
    RMat m(n, n);
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw math_error("RGram entries are not square");
        for (size_t c = 0; c < n; ++c) m.at(i, c) = relem_from_json(rows[i][c]);
    }
    return RGram(std::move(m));
}

json imat_to_json(const IMat& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IMat imat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw math_error("matrix must be a non-empty array");
    size_t r = j.size(), c = j[0].size();
    IMat m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (j[i].size() != c) throw math_error("matrix rows have unequal lengths");
        for (size_t k = 0; k < c; ++k) m.at(i, k) = int_from_json(j[i][k]);
    }
    return m;
}

json zgram_to_json(const ZGram& g) {
    return json{{"m", g.dim()}, {"entries", imat_to_json(g.g)}};
}

ZGram zgram_from_json(const json& j) {
    size_t m = j.at("m").get<size_t>();
    IMat e = imat_from_json(j.at("entries"));
    if (e.rows() != m || e.cols() != m) throw math_error("ZGram shape disagrees with m");
    return ZGram(std::move(e));
}

json family_certificate_to_json(const FamilyCertificate& c) {
    json out{{"a", c.a},
             {"p", int_to_json(c.p)},
             {"min", c.min_q},
             {"min_bound", c.min_bound},
             {"min_ok", c.min_ok},
             {"kissing", c.kissing},
             {"det", int_to_json(c.determinant)},
             {"det_ok", c.det_ok}};
    switch (c.modularity.status) {
        case ModularStatus::yes: out["modular"] = true; break;
        case ModularStatus::no: out["modular"] = false; break;
        case ModularStatus::undecided: out["modular"] = "undecided"; break;
    }
    out["evidence"] = c.modularity.evidence;
    if (c.modularity.witness) out["witness"] = imat_to_json(*c.modularity.witness);
    return out;
}

json qexp_to_json(const QExp& f) {
    json coeffs = json::array();
    for (const auto& [idx, c] : f.coeffs())
        coeffs.push_back(json::array({idx.i, idx.j, rat_to_json(c)}));
    return json{{"prec", f.prec()}, {"coefficients", std::move(coeffs)}};
}

json extremal_to_json(const ExtremalResult& r) {
    json out{{"weight", r.weight},
             {"nu", json::array({r.s, r.t})},
             {"s_eta", rat_to_json(r.s_eta)},
             {"s_one", rat_to_json(r.s_one)},
             {"pm", r.pm_str()},
             {"unique", r.unique}};
    out["coefficients"] = qexp_to_json(r.form)["coefficients"];
    out["prec"] = r.form.prec();
    return out;
}

json golden_candidate_to_json(const GoldenCandidate& c) {
    json out{{"gram", zgram_to_json(c.gram)}, {"T", imat_to_json(c.T)}, {"label", c.label}};
    if (c.sigma) out["sigma"] = imat_to_json(*c.sigma);
    return out;
}

GoldenCandidate golden_candidate_from_json(const json& j) {
    GoldenCandidate c;
    c.gram = zgram_from_json(j.at("gram"));
    c.T = imat_from_json(j.at("T"));
    if (j.contains("sigma")) c.sigma = imat_from_json(j.at("sigma"));
    c.label = j.value("label", std::string("unnamed"));
    return c;
}

std::string table_tsv(const std::vector<TableDiff>& diffs) {
    std::ostringstream os;
    os << "weight\tnu\ts_eta\ts_one\tsub\n";
    for (const auto& d : diffs) {
        const ExtremalResult& r = d.computed;
        os << r.weight << "\t(" << r.s << "," << r.t << ")\t" << r.s_eta << "\t" << r.s_one
           << "\t" << r.pm_str() << "\n";
    }
    return os.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw math_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw math_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw math_error("cannot write " + path);
    out << text;
}

}  // namespace golden
